#include "vpf/constraints.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace vpf {

namespace {

LinForm dir_to_form(const std::vector<Int>& dir) {
  LinForm f;
  for (size_t i = 0; i < dir.size(); ++i)
    if (dir[i] != 0) f.set_coeff(static_cast<int>(i), Rat(dir[i]));
  return f;
}

// x == r1 (mod m1) and x == r2 (mod m2) -> x == r (mod lcm), or no solution.
std::optional<std::pair<Int, Int>> crt_merge(const Int& m1, const Int& r1,
                                             const Int& m2, const Int& r2) {
  Int g = gcd(m1, m2);
  if (floor_mod(r1 - r2, g) != 0) return std::nullopt;
  Int l = lcm(m1, m2);
  Int m1g = m1 / g, m2g = m2 / g;
  Int inv;
  if (m2g == 1) {
    inv = 0;
  } else if (mpz_invert(inv.get_mpz_t(), floor_mod(m1g, m2g).get_mpz_t(),
                        m2g.get_mpz_t()) == 0) {
    throw engine_error("crt_merge: inverse must exist");
  }
  Int k = floor_mod(((r2 - r1) / g) * inv, m2g);
  Int r = floor_mod(r1 + m1 * k, l);
  return std::make_pair(l, r);
}

}  // namespace

std::string CaseConstraint::to_string(
    const std::vector<std::string>& names) const {
  switch (kind) {
    case Kind::SignGE0:
      return form.to_string(names) + " >= 0";
    case Kind::SignLEminus1:
      return form.to_string(names) + " <= -1";
    case Kind::Congruence:
      return form.to_string(names) + " == " + residue.get_str() + " (mod " +
             modulus.get_str() + ")";
  }
  return "";
}

ConstraintSet::NormalForm ConstraintSet::normalize(const LinForm& f) const {
  NormalForm n;
  LinForm::IntegerView iv = f.integer_view(nparams_);
  n.c = iv.constant;
  n.scale = iv.scale;
  Int g(0);
  for (const Int& x : iv.coeffs) g = gcd(g, x);
  if (g == 0) {
    n.constant = true;
    return n;
  }
  n.g = g;
  n.dir.resize(iv.coeffs.size());
  for (size_t i = 0; i < iv.coeffs.size(); ++i) n.dir[i] = iv.coeffs[i] / g;
  for (const Int& x : n.dir) {
    if (x == 0) continue;
    if (x < 0) {
      n.sign = -1;
      for (Int& y : n.dir) y = -y;
    }
    break;
  }
  return n;
}

void ConstraintSet::add(const CaseConstraint& c) {
  switch (c.kind) {
    case CaseConstraint::Kind::SignGE0:
      add_ge(c.form, 0);
      break;
    case CaseConstraint::Kind::SignLEminus1:
      add_le(c.form, -1);
      break;
    case CaseConstraint::Kind::Congruence:
      add_congruence(c.form, c.modulus, c.residue);
      break;
  }
}

void ConstraintSet::add_ge(const LinForm& f, const Int& bound) {
  if (unsat_) return;
  NormalForm n = normalize(f);
  Int rhs = bound * n.scale - n.c;  // sign*g*(dir.b) >= rhs
  if (n.constant) {
    if (0 < rhs) unsat_ = true;
    return;
  }
  if (n.sign > 0)
    add_dir_lower(n.dir, ceil_div(rhs, n.g));
  else
    add_dir_upper(n.dir, floor_div(-rhs, n.g));
}

void ConstraintSet::add_le(const LinForm& f, const Int& bound) {
  if (unsat_) return;
  NormalForm n = normalize(f);
  Int rhs = bound * n.scale - n.c;  // sign*g*(dir.b) <= rhs
  if (n.constant) {
    if (0 > rhs) unsat_ = true;
    return;
  }
  if (n.sign > 0)
    add_dir_upper(n.dir, floor_div(rhs, n.g));
  else
    add_dir_lower(n.dir, ceil_div(-rhs, n.g));
}

void ConstraintSet::add_eq(const LinForm& f, const Int& value) {
  add_ge(f, value);
  add_le(f, value);
}

void ConstraintSet::add_congruence(const LinForm& f, const Int& modulus,
                                   const Int& residue) {
  if (unsat_) return;
  if (modulus <= 0) throw input_error("congruence modulus must be positive");
  NormalForm n = normalize(f);
  Int N = modulus * n.scale;
  Int rhs = floor_mod(residue * n.scale - n.c, N);
  if (n.constant) {
    if (rhs != 0) unsat_ = true;
    return;
  }
  Int a = floor_mod(Int(n.sign) * n.g, N);
  Int g = gcd(a, N);
  if (floor_mod(rhs, g) != 0) {
    unsat_ = true;
    return;
  }
  Int Nr = N / g;
  if (Nr == 1) return;
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), Int(a / g).get_mpz_t(), Nr.get_mpz_t()) == 0)
    throw engine_error("add_congruence: inverse must exist");
  Int res = floor_mod((rhs / g) * inv, Nr);
  add_dir_congruence(n.dir, Nr, res);
}

void ConstraintSet::add_dir_lower(const std::vector<Int>& dir, const Int& lo) {
  DirInfo& d = dirs_[dir];
  if (!d.lo || *d.lo < lo) d.lo = lo;
  check_dir(dir);
}

void ConstraintSet::add_dir_upper(const std::vector<Int>& dir, const Int& hi) {
  DirInfo& d = dirs_[dir];
  if (!d.hi || *d.hi > hi) d.hi = hi;
  check_dir(dir);
}

void ConstraintSet::add_dir_congruence(const std::vector<Int>& dir,
                                       const Int& m, const Int& r) {
  DirInfo& d = dirs_[dir];
  auto merged = crt_merge(d.mod, d.res, m, floor_mod(r, m));
  if (!merged) {
    unsat_ = true;
    return;
  }
  d.mod = merged->first;
  d.res = merged->second;
  check_dir(dir);
}

void ConstraintSet::check_dir(const std::vector<Int>& dir) {
  DirInfo& d = dirs_[dir];
  if (d.mod > 1) {
    if (d.lo) d.lo = *d.lo + floor_mod(d.res - *d.lo, d.mod);
    if (d.hi) d.hi = *d.hi - floor_mod(*d.hi - d.res, d.mod);
  }
  if (d.lo && d.hi && *d.lo > *d.hi) unsat_ = true;
}

bool ConstraintSet::satisfied_by(const std::vector<Int>& point) const {
  if (unsat_) return false;
  for (const auto& [dir, d] : dirs_) {
    Int v(0);
    for (size_t i = 0; i < dir.size(); ++i)
      if (dir[i] != 0) {
        if (i >= point.size()) throw input_error("point dimension mismatch");
        v += dir[i] * point[i];
      }
    if (d.lo && v < *d.lo) return false;
    if (d.hi && v > *d.hi) return false;
    if (d.mod > 1 && floor_mod(v, d.mod) != d.res) return false;
  }
  return true;
}

std::optional<Int> ConstraintSet::known_residue(const LinForm& f,
                                                const Int& m) const {
  NormalForm n = normalize(f);
  if (n.constant) {
    if (floor_mod(n.c, n.scale) != 0) return std::nullopt;
    return floor_mod(n.c / n.scale, m);
  }
  auto it = dirs_.find(n.dir);
  if (it == dirs_.end()) {
    if (n.scale != 1) return std::nullopt;
    // No congruence knowledge; residue known only if modulus is 1.
    return m == 1 ? std::optional<Int>(Int(0)) : std::nullopt;
  }
  const DirInfo& d = it->second;
  Int f0num = Int(n.sign) * n.g * d.res + n.c;
  Int step = Int(n.sign) * n.g * d.mod;
  if (floor_mod(f0num, n.scale) != 0) return std::nullopt;
  if (floor_mod(step, n.scale) != 0) return std::nullopt;
  if (floor_mod(step / n.scale, m) != 0) return std::nullopt;
  if (d.lo && d.hi && *d.lo == *d.hi) {
    Int v = Int(n.sign) * n.g * *d.lo + n.c;
    if (floor_mod(v, n.scale) != 0) return std::nullopt;
    return floor_mod(v / n.scale, m);
  }
  return floor_mod(f0num / n.scale, m);
}

std::optional<std::vector<Int>> ConstraintSet::find_point(
    const Int& box, size_t max_steps) const {
  if (unsat_) return std::nullopt;
  if (nparams_ == 0) return std::vector<Int>{};
  std::vector<Int> lo(nparams_, -box), hi(nparams_, box);
  for (const auto& [dir, d] : dirs_) {
    int idx = -1, nz = 0;
    for (size_t i = 0; i < dir.size(); ++i)
      if (dir[i] != 0) {
        idx = static_cast<int>(i);
        ++nz;
      }
    if (nz != 1) continue;
    // Single-variable direction: dir[idx] == 1 by normalization.
    if (d.lo && *d.lo > lo[idx]) lo[idx] = *d.lo;
    if (d.hi && *d.hi < hi[idx]) hi[idx] = *d.hi;
  }
  for (int i = 0; i < nparams_; ++i)
    if (lo[i] > hi[i]) return std::nullopt;

  std::vector<Int> point(nparams_);
  size_t steps = 0;
  std::function<std::optional<std::vector<Int>>(int)> rec =
      [&](int var) -> std::optional<std::vector<Int>> {
    if (var == nparams_)
      return satisfied_by(point) ? std::optional(point) : std::nullopt;
    for (Int v = lo[var]; v <= hi[var]; ++v) {
      if (++steps > max_steps) return std::nullopt;
      point[var] = v;
      if (auto r = rec(var + 1)) return r;
    }
    return std::nullopt;
  };
  return rec(0);
}

bool ConstraintSet::certainly_empty() const {
  if (unsat_) return true;
  // Fourier-Motzkin on the real relaxation. Rows encode w . b <= t.
  using Row = std::pair<std::vector<Rat>, Rat>;
  std::vector<Row> rows;
  for (const auto& [dir, d] : dirs_) {
    std::vector<Rat> w(nparams_), wn(nparams_);
    for (int i = 0; i < nparams_; ++i) {
      w[i] = Rat(dir[i]);
      wn[i] = -Rat(dir[i]);
    }
    if (d.hi) rows.push_back({w, Rat(*d.hi)});
    if (d.lo) rows.push_back({wn, Rat(-*d.lo)});
  }
  const size_t row_cap = 4000;
  for (int var = 0; var < nparams_; ++var) {
    std::vector<Row> pos, neg, zero;
    for (auto& r : rows) {
      int s = sgn(r.first[var]);
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(std::move(r));
    }
    rows = std::move(zero);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Row r;
        r.first.resize(nparams_);
        Rat a = p.first[var], b = -n.first[var];
        for (int i = 0; i < nparams_; ++i)
          r.first[i] = p.first[i] * b + n.first[i] * a;
        r.second = p.second * b + n.second * a;
        rows.push_back(std::move(r));
        if (rows.size() > row_cap) return false;  // give up, not a proof
      }
  }
  for (const auto& r : rows)
    if (sgn(r.second) < 0) return true;
  return false;
}

Feasibility ConstraintSet::probe(const Int& box) const {
  if (certainly_empty()) return Feasibility::Empty;
  if (find_point(box)) return Feasibility::Witnessed;
  return Feasibility::Unknown;
}

std::vector<CaseConstraint> ConstraintSet::to_constraints() const {
  std::vector<CaseConstraint> out;
  for (const auto& [dir, d] : dirs_) {
    LinForm base = dir_to_form(dir);
    if (d.lo) {
      LinForm f = base;
      f.set_constant(Rat(-*d.lo));
      out.push_back(CaseConstraint::ge0(std::move(f)));
    }
    if (d.hi) {
      LinForm f = base;
      f.set_constant(Rat(-*d.hi - 1));
      out.push_back(CaseConstraint::le_minus1(std::move(f)));
    }
    if (d.mod > 1) out.push_back(CaseConstraint::congruence(base, d.mod, d.res));
  }
  return out;
}

ConstraintSet ConstraintSet::substituted(const std::vector<LinForm>& sub,
                                         int new_nparams) const {
  ConstraintSet out(new_nparams);
  if (unsat_) {
    out.unsat_ = true;
    return out;
  }
  for (const auto& [dir, d] : dirs_) {
    LinForm f;
    for (size_t i = 0; i < dir.size(); ++i) {
      if (dir[i] == 0) continue;
      if (i >= sub.size()) throw input_error("substitution arity mismatch");
      f += sub[i].scaled(Rat(dir[i]));
    }
    if (d.lo) out.add_ge(f, *d.lo);
    if (d.hi) out.add_le(f, *d.hi);
    if (d.mod > 1) out.add_congruence(f, d.mod, d.res);
  }
  return out;
}

std::string ConstraintSet::canonical_key() const {
  if (unsat_) return "<unsat>";
  std::ostringstream os;
  for (const auto& [dir, d] : dirs_) {
    os << int_vec_to_string(dir) << ":";
    os << (d.lo ? d.lo->get_str() : "*") << ",";
    os << (d.hi ? d.hi->get_str() : "*") << ",";
    os << d.mod.get_str() << "," << d.res.get_str() << ";";
  }
  return os.str();
}

std::string ConstraintSet::to_string(
    const std::vector<std::string>& names) const {
  if (unsat_) return "<unsatisfiable>";
  std::ostringstream os;
  bool first = true;
  for (const auto& [dir, d] : dirs_) {
    LinForm base = dir_to_form(dir);
    std::string bs = base.to_string(names);
    if (d.lo && d.hi && *d.lo == *d.hi) {
      if (!first) os << ", ";
      os << bs << " == " << *d.lo;
      first = false;
    } else {
      if (d.lo) {
        if (!first) os << ", ";
        os << bs << " >= " << *d.lo;
        first = false;
      }
      if (d.hi) {
        if (!first) os << ", ";
        os << bs << " <= " << *d.hi;
        first = false;
      }
    }
    if (d.mod > 1) {
      if (!first) os << ", ";
      os << bs << " == " << d.res << " (mod " << d.mod << ")";
      first = false;
    }
  }
  if (first) os << "(all integers)";
  return os.str();
}

}  // namespace vpf
