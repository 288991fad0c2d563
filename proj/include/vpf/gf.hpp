#ifndef VPF_GF_HPP
#define VPF_GF_HPP

#include <map>
#include <string>
#include <vector>

#include "vpf/common.hpp"
#include "vpf/linform.hpp"
#include "vpf/parampoly.hpp"

namespace vpf {

// One multiplicative atom of a term denominator, over the z-variables.
//   Binomial(v)   = 1 - z^v
//   GeomSum(v, g) = 1 + z^v + z^{2v} + ... + z^{(g-1)v}
// so that (1 - z^{g v}) = (1 - z^v) * GeomSum(v, g).
struct FactorAtom {
  enum class Kind { Binomial, GeomSum };

  Kind kind = Kind::Binomial;
  std::vector<Int> v;  // exponent vector, never all zero
  unsigned order = 1;  // g; 1 for Binomial, >= 2 for GeomSum

  static FactorAtom binomial(std::vector<Int> v) {
    FactorAtom a;
    a.v = std::move(v);
    return a;
  }
  static FactorAtom geom_sum(std::vector<Int> v, unsigned g) {
    FactorAtom a;
    a.kind = Kind::GeomSum;
    a.v = std::move(v);
    a.order = g;
    return a;
  }

  bool uses_var(size_t i) const { return i < v.size() && v[i] != 0; }
  Rat eval(const std::vector<Rat>& zpoint) const;
  std::string to_string() const;

  friend bool operator==(const FactorAtom& a, const FactorAtom& b) {
    return a.kind == b.kind && a.order == b.order && a.v == b.v;
  }
  friend bool operator<(const FactorAtom& a, const FactorAtom& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.v != b.v) return a.v < b.v;
    return a.order < b.order;
  }
};

// Denominator multiset, atom -> multiplicity, kept in the atom total order.
using Denominator = std::map<FactorAtom, unsigned>;

// Evaluates z^e for integer exponents (negative allowed away from zero).
Rat monomial_eval(const std::vector<Rat>& zpoint, const std::vector<Int>& e);

// One exact term  coeff(b) * z^exps(b) / prod(den).
// Numerator exponents are affine in the parameters and may evaluate
// negative; z^{-b} denominators are encoded this way.
struct GFTerm {
  ParamPoly coeff;
  std::vector<LinForm> exps;  // one per z-variable
  Denominator den;

  GFTerm() = default;
  GFTerm(ParamPoly c, std::vector<LinForm> e, Denominator d)
      : coeff(std::move(c)), exps(std::move(e)), den(std::move(d)) {}

  size_t nvars() const { return exps.size(); }
  bool uses_var(size_t i) const;

  Rat eval(const std::vector<Rat>& zpoint,
           const std::vector<Int>& params) const;

  // Canonical skeleton comparison (everything except the coefficient).
  friend bool same_shape(const GFTerm& a, const GFTerm& b) {
    return a.exps == b.exps && a.den == b.den;
  }

  std::string to_string(const std::vector<std::string>& param_names,
                        const std::vector<std::string>& var_names) const;
};

// A finite sum of GFTerms. The working state of the elimination algorithm.
class GFExpression {
 public:
  GFExpression() = default;
  explicit GFExpression(std::vector<GFTerm> terms) : terms_(std::move(terms)) {
    canonicalize();
  }

  const std::vector<GFTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t nvars() const { return terms_.empty() ? 0 : terms_[0].nvars(); }

  void add_term(GFTerm t) { terms_.push_back(std::move(t)); }

  // Merges terms with identical shape, drops zero coefficients, sorts.
  void canonicalize();

  Rat eval(const std::vector<Rat>& zpoint,
           const std::vector<Int>& params) const;

  bool uses_var(size_t i) const;

  std::string to_string(const std::vector<std::string>& param_names,
                        const std::vector<std::string>& var_names) const;

 private:
  std::vector<GFTerm> terms_;
};

// Power-series coefficients c_0..c_upto of 1/prod(den) in one variable.
// Every denominator atom must have strictly positive exponent there.
std::vector<Rat> denominator_series(const Denominator& den, size_t var,
                                    size_t upto);

// Coefficient of z^n of a single-variable expression whose exponents are
// concrete integers (parameters already substituted). Exact convolution.
Rat series_coefficient(const GFExpression& expr, size_t var, const Int& n);

}  // namespace vpf

#endif
