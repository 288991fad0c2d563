#include "vpf/parampoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vpf {

void ParamPoly::add_term(const Key& k, const Rat& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::from_linform(int nparams, const LinForm& f) {
  ParamPoly p(nparams);
  if (sgn(f.constant()) != 0) p.terms_[Key(nparams, 0)] = f.constant();
  for (const auto& [i, c] : f.coeffs()) {
    Key k(nparams, 0);
    k.at(i) = 1;
    p.add_term(k, c);
  }
  return p;
}

unsigned ParamPoly::degree() const {
  unsigned d = 0;
  for (const auto& [k, c] : terms_)
    d = std::max(d, std::accumulate(k.begin(), k.end(), 0u));
  return d;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r = *this;
  r += o;
  return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r(nparams_);
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      Key k = k1;
      for (size_t i = 0; i < k.size(); ++i) k[i] += k2[i];
      r.add_term(k, c1 * c2);
    }
  return r;
}

ParamPoly ParamPoly::scaled(const Rat& c) const {
  ParamPoly r(nparams_);
  if (sgn(c) == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

ParamPoly ParamPoly::pow(unsigned k) const {
  ParamPoly r(nparams_, Rat(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

ParamPoly ParamPoly::binomial_of(int nparams, const LinForm& f, unsigned k) {
  ParamPoly r(nparams, Rat(1));
  ParamPoly base = from_linform(nparams, f);
  for (unsigned i = 0; i < k; ++i) {
    ParamPoly shifted = base + ParamPoly(nparams, Rat(-(long)i));
    r = (r * shifted).scaled(Rat(1, i + 1));
  }
  return r;
}

Rat ParamPoly::eval(const std::vector<Int>& assignment) const {
  Rat v(0);
  for (const auto& [k, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) {
        if (i >= assignment.size())
          throw input_error("polynomial references missing parameter");
        t *= rat_pow(Rat(assignment[i]), Int(k[i]));
      }
    v += t;
  }
  return v;
}

std::string ParamPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rat a = abs(c);
    bool printed = false;
    if (a != 1) {
      os << a;
      printed = true;
    }
    for (size_t i = 0; i < k.size(); ++i)
      if (k[i] != 0) {
        if (printed) os << "*";
        os << (i < names.size() ? names[i] : "p" + std::to_string(i));
        if (k[i] > 1) os << "^" << k[i];
        printed = true;
      }
    if (!printed) os << "1";
    first = false;
  }
  return os.str();
}

}  // namespace vpf
