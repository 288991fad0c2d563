#ifndef VPF_MATRIX_HPP
#define VPF_MATRIX_HPP

#include <string>
#include <vector>

#include "vpf/common.hpp"

namespace vpf {

// The nonnegative integral system matrix A of  x >= 0, A x = b.
class SystemMatrix {
 public:
  SystemMatrix() = default;
  SystemMatrix(std::vector<std::vector<Int>> rows);

  // File format: first non-comment line "m d", then m rows of d entries.
  // '#' starts a comment; blank lines are ignored.
  static SystemMatrix parse(const std::string& text);
  static SystemMatrix load(const std::string& path);

  int rows() const { return m_; }
  int cols() const { return d_; }
  const Int& entry(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<Int>>& entries() const { return entries_; }

  std::vector<Int> column(int j) const;
  const std::vector<Int>& row_sums() const { return row_sums_; }
  int rank() const { return rank_; }

  // Largest entry (used to size probe boxes).
  Int max_entry() const;

  std::string to_string() const;

  bool operator==(const SystemMatrix& o) const {
    return entries_ == o.entries_;
  }

 private:
  void validate_and_derive();

  int m_ = 0, d_ = 0;
  std::vector<std::vector<Int>> entries_;
  std::vector<Int> row_sums_;
  int rank_ = 0;
};

}  // namespace vpf

#endif
