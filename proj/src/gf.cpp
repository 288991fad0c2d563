#include "vpf/gf.hpp"

#include <algorithm>
#include <sstream>

namespace vpf {

Rat monomial_eval(const std::vector<Rat>& zpoint, const std::vector<Int>& e) {
  Rat r(1);
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (i >= zpoint.size()) throw input_error("monomial_eval: missing point");
    r *= rat_pow(zpoint[i], e[i]);
  }
  return r;
}

Rat FactorAtom::eval(const std::vector<Rat>& zpoint) const {
  Rat zv = monomial_eval(zpoint, v);
  if (kind == Kind::Binomial) return Rat(1) - zv;
  Rat s(0), p(1);
  for (unsigned j = 0; j < order; ++j) {
    s += p;
    p *= zv;
  }
  return s;
}

std::string FactorAtom::to_string() const {
  std::ostringstream os;
  os << (kind == Kind::Binomial ? "B" : "G") << int_vec_to_string(v);
  if (kind == Kind::GeomSum) os << "[" << order << "]";
  return os.str();
}

bool GFTerm::uses_var(size_t i) const {
  if (i < exps.size() && !exps[i].is_zero()) return true;
  for (const auto& [atom, mult] : den)
    if (atom.uses_var(i)) return true;
  return false;
}

Rat GFTerm::eval(const std::vector<Rat>& zpoint,
                 const std::vector<Int>& params) const {
  Rat r = coeff.eval(params);
  std::vector<Int> e(exps.size());
  for (size_t i = 0; i < exps.size(); ++i) e[i] = exps[i].eval_int(params);
  r *= monomial_eval(zpoint, e);
  for (const auto& [atom, mult] : den) {
    Rat f = atom.eval(zpoint);
    if (sgn(f) == 0)
      throw input_error("vanishing denominator factor " + atom.to_string());
    r /= rat_pow(f, Int(mult));
  }
  return r;
}

std::string GFTerm::to_string(const std::vector<std::string>& param_names,
                              const std::vector<std::string>& var_names) const {
  std::ostringstream os;
  os << "(" << coeff.to_string(param_names) << ") z^[";
  for (size_t i = 0; i < exps.size(); ++i) {
    if (i) os << "; ";
    os << (i < var_names.size() ? var_names[i] : "z" + std::to_string(i))
       << ": " << exps[i].to_string(param_names);
  }
  os << "]";
  if (!den.empty()) {
    os << " / ";
    for (const auto& [atom, mult] : den) {
      os << atom.to_string();
      if (mult > 1) os << "^" << mult;
    }
  }
  return os.str();
}

void GFExpression::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const GFTerm& a, const GFTerm& b) {
              if (a.den != b.den) return a.den < b.den;
              return a.exps < b.exps;
            });
  std::vector<GFTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && same_shape(merged.back(), t))
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const GFTerm& t) { return t.coeff.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

Rat GFExpression::eval(const std::vector<Rat>& zpoint,
                       const std::vector<Int>& params) const {
  Rat r(0);
  for (const auto& t : terms_) r += t.eval(zpoint, params);
  return r;
}

bool GFExpression::uses_var(size_t i) const {
  for (const auto& t : terms_)
    if (t.uses_var(i)) return true;
  return false;
}

std::string GFExpression::to_string(
    const std::vector<std::string>& param_names,
    const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << "\n  + ";
    os << terms_[i].to_string(param_names, var_names);
  }
  return os.str();
}

std::vector<Rat> denominator_series(const Denominator& den, size_t var,
                                    size_t upto) {
  std::vector<Rat> c(upto + 1, Rat(0));
  c[0] = 1;
  for (const auto& [atom, mult] : den) {
    if (atom.v.size() <= var || atom.v[var] <= 0)
      throw input_error("denominator_series: factor " + atom.to_string() +
                        " is not a power series in the chosen variable");
    for (size_t i = 0; i < atom.v.size(); ++i)
      if (i != var && atom.v[i] != 0)
        throw input_error("denominator_series: factor involves other vars");
    if (!atom.v[var].fits_ulong_p())
      throw resource_error("denominator_series: exponent too large");
    size_t a = atom.v[var].get_ui();
    if (atom.kind == FactorAtom::Kind::Binomial) {
      // 1/(1-y^a): prefix sums with stride a, repeated per multiplicity.
      for (unsigned m = 0; m < mult; ++m)
        for (size_t n = a; n <= upto; ++n) c[n] += c[n - a];
    } else {
      // Divide the series by 1 + y^a + ... + y^{(g-1)a}, mult times.
      for (unsigned m = 0; m < mult; ++m) {
        std::vector<Rat> q(upto + 1, Rat(0));
        for (size_t n = 0; n <= upto; ++n) {
          Rat acc = c[n];
          for (unsigned j = 1; j < atom.order; ++j) {
            if (n < j * a) break;
            acc -= q[n - j * a];
          }
          q[n] = acc;
        }
        c = std::move(q);
      }
    }
  }
  return c;
}

Rat series_coefficient(const GFExpression& expr, size_t var, const Int& n) {
  if (n < 0) return Rat(0);
  Rat total(0);
  for (const auto& t : expr.terms()) {
    if (!t.coeff.is_constant())
      throw input_error("series_coefficient: parametric coefficient remains");
    Int e(0);
    for (size_t i = 0; i < t.exps.size(); ++i) {
      if (!t.exps[i].is_constant())
        throw input_error("series_coefficient: parametric exponent remains");
      Rat c = t.exps[i].constant();
      if (c.get_den() != 1)
        throw input_error("series_coefficient: fractional exponent");
      if (i == var)
        e = c.get_num();
      else if (sgn(c) != 0)
        throw input_error("series_coefficient: expression is not univariate");
    }
    Int want = n - e;
    if (want < 0) continue;
    if (!want.fits_ulong_p())
      throw resource_error("series_coefficient: order too large");
    size_t w = want.get_ui();
    std::vector<Rat> c = denominator_series(t.den, var, w);
    total += t.coeff.constant_value() * c[w];
  }
  return total;
}

}  // namespace vpf
