#include "vpf/linform.hpp"

#include <sstream>

namespace vpf {

LinForm& LinForm::operator+=(const LinForm& o) {
  for (const auto& [i, c] : o.coeffs_) set_coeff(i, coeff(i) + c);
  constant_ += o.constant_;
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& o) {
  for (const auto& [i, c] : o.coeffs_) set_coeff(i, coeff(i) - c);
  constant_ -= o.constant_;
  return *this;
}

LinForm LinForm::operator+(const LinForm& o) const {
  LinForm r = *this;
  r += o;
  return r;
}

LinForm LinForm::operator-(const LinForm& o) const {
  LinForm r = *this;
  r -= o;
  return r;
}

LinForm LinForm::operator-() const { return scaled(Rat(-1)); }

LinForm LinForm::scaled(const Rat& c) const {
  LinForm r;
  if (sgn(c) == 0) return r;
  for (const auto& [i, v] : coeffs_) r.coeffs_[i] = v * c;
  r.constant_ = constant_ * c;
  return r;
}

bool LinForm::operator<(const LinForm& o) const {
  if (coeffs_ != o.coeffs_) return coeffs_ < o.coeffs_;
  return constant_ < o.constant_;
}

Rat LinForm::eval(const std::vector<Int>& assignment) const {
  Rat v = constant_;
  for (const auto& [i, c] : coeffs_) {
    if (i < 0 || static_cast<size_t>(i) >= assignment.size())
      throw input_error("affine form references parameter " +
                        std::to_string(i) + " missing from assignment");
    v += c * Rat(assignment[i]);
  }
  return v;
}

Int LinForm::eval_int(const std::vector<Int>& assignment) const {
  Rat v = eval(assignment);
  if (v.get_den() != 1)
    throw engine_error("affine form evaluated to non-integer " +
                       rat_to_string(v));
  return v.get_num();
}

Int LinForm::denominator_lcm() const {
  Int l = constant_.get_den();
  for (const auto& [i, c] : coeffs_) l = lcm(l, c.get_den());
  return l;
}

LinForm::IntegerView LinForm::integer_view(int nparams) const {
  IntegerView v;
  v.scale = denominator_lcm();
  v.coeffs.assign(nparams, Int(0));
  for (const auto& [i, c] : coeffs_) {
    if (i < 0 || i >= nparams)
      throw input_error("affine form parameter index out of range");
    Rat s = c * Rat(v.scale);
    v.coeffs[i] = s.get_num();
  }
  Rat s = constant_ * Rat(v.scale);
  v.constant = s.get_num();
  return v;
}

std::string LinForm::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    std::string name = static_cast<size_t>(i) < names.size()
                           ? names[i]
                           : "p" + std::to_string(i);
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (a != 1) os << a << "*";
    os << name;
    first = false;
  }
  if (first) {
    os << constant_;
  } else if (sgn(constant_) != 0) {
    os << (sgn(constant_) < 0 ? " - " : " + ") << abs(constant_);
  }
  return os.str();
}

}  // namespace vpf
