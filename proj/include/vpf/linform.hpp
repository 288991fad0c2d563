#ifndef VPF_LINFORM_HPP
#define VPF_LINFORM_HPP

#include <map>
#include <string>
#include <vector>

#include "vpf/common.hpp"

namespace vpf {

// An affine form  sum_i coeff_i * p_i + constant  in the symbolic parameters
// p_0..p_{n-1} (the right-hand side entries, or the dilation variable).
//
// Coefficients are exact rationals. Forms produced while reducing parametric
// exponents can pick up denominators (e.g. (e - rho)/a); every such form is
// guarded by a congruence constraint that makes its value integral on the
// case region it lives in.
class LinForm {
 public:
  LinForm() = default;
  explicit LinForm(Rat constant) : constant_(std::move(constant)) {}

  static LinForm parameter(int index, Rat coeff = Rat(1)) {
    LinForm f;
    f.set_coeff(index, std::move(coeff));
    return f;
  }

  const Rat& constant() const { return constant_; }
  const std::map<int, Rat>& coeffs() const { return coeffs_; }

  Rat coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Rat(0) : it->second;
  }

  void set_coeff(int index, Rat c) {
    if (sgn(c) == 0)
      coeffs_.erase(index);
    else
      coeffs_[index] = std::move(c);
  }

  void set_constant(Rat c) { constant_ = std::move(c); }

  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && sgn(constant_) == 0; }

  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  LinForm operator+(const LinForm& o) const;
  LinForm operator-(const LinForm& o) const;
  LinForm operator-() const;
  LinForm scaled(const Rat& c) const;

  bool operator==(const LinForm& o) const {
    return constant_ == o.constant_ && coeffs_ == o.coeffs_;
  }
  bool operator<(const LinForm& o) const;

  // Exact value at an integer parameter assignment.
  Rat eval(const std::vector<Int>& assignment) const;

  // Value as an integer; throws engine_error if the value is not integral
  // (which means a congruence guard was violated).
  Int eval_int(const std::vector<Int>& assignment) const;

  // lcm of coefficient and constant denominators (>= 1).
  Int denominator_lcm() const;

  // Integer-cleared view: returns (coeffs over all-params, constant, scale)
  // with scale > 0 such that scale * this has integer data.
  struct IntegerView {
    std::vector<Int> coeffs;  // size nparams
    Int constant;
    Int scale;
  };
  IntegerView integer_view(int nparams) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::map<int, Rat> coeffs_;
  Rat constant_ = Rat(0);
};

}  // namespace vpf

#endif
