#ifndef VPF_PARAMPOLY_HPP
#define VPF_PARAMPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "vpf/common.hpp"
#include "vpf/linform.hpp"

namespace vpf {

// Polynomial in the symbolic parameters with exact rational coefficients.
// Term coefficients of generating-function terms live here: eliminating a
// variable past a repeated factor multiplies by binomial(q, i), which is
// polynomial in the parameters, not merely constant.
class ParamPoly {
 public:
  using Key = std::vector<unsigned>;  // exponent per parameter

  explicit ParamPoly(int nparams = 0) : nparams_(nparams) {}
  ParamPoly(int nparams, const Rat& c) : nparams_(nparams) {
    if (sgn(c) != 0) terms_[Key(nparams_, 0)] = c;
  }
  static ParamPoly from_linform(int nparams, const LinForm& f);

  int nparams() const { return nparams_; }
  const std::map<Key, Rat>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Key(nparams_, 0));
  }
  Rat constant_value() const {
    auto it = terms_.find(Key(nparams_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
  }
  unsigned degree() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly scaled(const Rat& c) const;
  ParamPoly pow(unsigned k) const;

  // binomial(f, k) = f (f-1) ... (f-k+1) / k!  as a polynomial.
  static ParamPoly binomial_of(int nparams, const LinForm& f, unsigned k);

  Rat eval(const std::vector<Int>& assignment) const;

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator<(const ParamPoly& o) const { return terms_ < o.terms_; }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Key& k, const Rat& c);

  int nparams_;
  std::map<Key, Rat> terms_;
};

}  // namespace vpf

#endif
