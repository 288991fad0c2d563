#include "vpf/matrix.hpp"

#include <fstream>
#include <sstream>

namespace vpf {

SystemMatrix::SystemMatrix(std::vector<std::vector<Int>> rows)
    : entries_(std::move(rows)) {
  validate_and_derive();
}

void SystemMatrix::validate_and_derive() {
  m_ = static_cast<int>(entries_.size());
  if (m_ == 0) throw input_error("matrix has no rows");
  d_ = static_cast<int>(entries_[0].size());
  if (d_ == 0) throw input_error("matrix has no columns");
  for (const auto& r : entries_) {
    if (static_cast<int>(r.size()) != d_)
      throw input_error("ragged matrix rows");
    for (const Int& e : r)
      if (e < 0) throw input_error("matrix entries must be nonnegative");
  }
  for (int j = 0; j < d_; ++j) {
    bool nonzero = false;
    for (int i = 0; i < m_; ++i) nonzero = nonzero || entries_[i][j] != 0;
    if (!nonzero)
      throw input_error("zero column " + std::to_string(j + 1) +
                        " makes the counting function degenerate");
  }
  row_sums_.assign(m_, Int(0));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < d_; ++j) row_sums_[i] += entries_[i][j];

  // Rank by exact Gaussian elimination over the rationals.
  std::vector<std::vector<Rat>> w(m_, std::vector<Rat>(d_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < d_; ++j) w[i][j] = Rat(entries_[i][j]);
  int rank = 0;
  for (int col = 0; col < d_ && rank < m_; ++col) {
    int pivot = -1;
    for (int i = rank; i < m_; ++i)
      if (sgn(w[i][col]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(w[rank], w[pivot]);
    for (int i = rank + 1; i < m_; ++i) {
      if (sgn(w[i][col]) == 0) continue;
      Rat f = w[i][col] / w[rank][col];
      for (int j = col; j < d_; ++j) w[i][j] -= f * w[rank][j];
    }
    ++rank;
  }
  rank_ = rank;
}

SystemMatrix SystemMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<Int> numbers;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      Int v;
      if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
        throw input_error("bad matrix token: " + tok);
      numbers.push_back(v);
    }
  }
  if (numbers.size() < 2) throw input_error("matrix file: missing header");
  if (!numbers[0].fits_sint_p() || !numbers[1].fits_sint_p())
    throw input_error("matrix file: bad dimensions");
  int m = static_cast<int>(numbers[0].get_si());
  int d = static_cast<int>(numbers[1].get_si());
  if (m <= 0 || d <= 0) throw input_error("matrix file: bad dimensions");
  if (numbers.size() != static_cast<size_t>(2 + m * d))
    throw input_error("matrix file: expected " + std::to_string(m * d) +
                      " entries");
  std::vector<std::vector<Int>> rows(m, std::vector<Int>(d));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < d; ++j) rows[i][j] = numbers[2 + i * d + j];
  return SystemMatrix(std::move(rows));
}

SystemMatrix SystemMatrix::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open matrix file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::vector<Int> SystemMatrix::column(int j) const {
  std::vector<Int> c(m_);
  for (int i = 0; i < m_; ++i) c[i] = entries_[i][j];
  return c;
}

Int SystemMatrix::max_entry() const {
  Int mx(0);
  for (const auto& r : entries_)
    for (const Int& e : r)
      if (e > mx) mx = e;
  return mx;
}

std::string SystemMatrix::to_string() const {
  std::ostringstream os;
  os << m_ << " " << d_ << "\n";
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < d_; ++j) {
      if (j) os << " ";
      os << entries_[i][j];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace vpf
