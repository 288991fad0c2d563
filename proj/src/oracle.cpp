#include "vpf/oracle.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace vpf {

Int brute_count(const SystemMatrix& A, const std::vector<Int>& b,
                const OracleLimits& limits) {
  const int m = A.rows(), d = A.cols();
  if (static_cast<int>(b.size()) != m)
    throw input_error("right-hand side has wrong dimension");
  for (const Int& bi : b)
    if (bi < 0) return Int(0);
  for (const Int& bi : b)
    if (bi > limits.entry_limit)
      throw resource_error("right-hand side exceeds configured entry limit");

  // Box of partial right-hand sides.
  std::vector<unsigned long> dim(m), stride(m);
  unsigned long states = 1;
  for (int i = 0; i < m; ++i) {
    if (!b[i].fits_ulong_p())
      throw resource_error("right-hand side too large for oracle state space");
    dim[i] = b[i].get_ui() + 1;
    if (states > limits.state_limit / dim[i])
      throw resource_error("oracle state space exceeds configured limit");
    states *= dim[i];
  }
  for (int i = m - 1; i >= 0; --i)
    stride[i] = (i == m - 1) ? 1 : stride[i + 1] * dim[i + 1];

  std::vector<Int> f(states, Int(0));
  f[0] = 1;
  std::vector<unsigned long> v(m);
  for (int j = 0; j < d; ++j) {
    std::vector<unsigned long> c(m);
    bool column_fits = true;
    unsigned long offset = 0;
    for (int i = 0; i < m; ++i) {
      if (A.entry(i, j) > b[i]) {
        column_fits = false;  // this column can never be used
        break;
      }
      c[i] = A.entry(i, j).get_ui();
      offset += c[i] * stride[i];
    }
    if (!column_fits) continue;
    // Ascending sweep: f[v] += f[v - c] counts unbounded uses of column j.
    std::fill(v.begin(), v.end(), 0);
    for (unsigned long idx = 0; idx < states; ++idx) {
      bool ok = true;
      for (int i = 0; i < m; ++i)
        if (v[i] < c[i]) {
          ok = false;
          break;
        }
      if (ok) f[idx] += f[idx - offset];
      // increment mixed-radix counter
      for (int i = m - 1; i >= 0; --i) {
        if (++v[i] < dim[i]) break;
        v[i] = 0;
      }
    }
  }
  return f[states - 1];
}

Int brute_count_interior(const SystemMatrix& A, const std::vector<Int>& b,
                         const OracleLimits& limits) {
  std::vector<Int> shifted(b.size());
  for (size_t i = 0; i < b.size(); ++i) shifted[i] = b[i] - A.row_sums()[i];
  return brute_count(A, shifted, limits);
}

Int enumerate_count(const SystemMatrix& A, const std::vector<Int>& b,
                    const Int& min_x) {
  const int m = A.rows(), d = A.cols();
  Int count(0);
  std::vector<Int> rem = b;
  std::function<void(int)> rec = [&](int j) {
    if (j == d) {
      for (int i = 0; i < m; ++i)
        if (rem[i] != 0) return;
      ++count;
      return;
    }
    // bound on x_j given the remaining rhs
    Int hi(-1);
    bool unbounded = true;
    for (int i = 0; i < m; ++i) {
      if (A.entry(i, j) == 0) continue;
      Int cap = floor_div(rem[i], A.entry(i, j));
      if (unbounded || cap < hi) hi = cap;
      unbounded = false;
    }
    if (unbounded) throw input_error("enumerate_count: zero column");
    for (Int x = min_x; x <= hi; ++x) {
      for (int i = 0; i < m; ++i) rem[i] -= A.entry(i, j) * x;
      bool feasible = true;
      for (int i = 0; i < m; ++i)
        if (rem[i] < 0) feasible = false;
      if (feasible) rec(j + 1);
      for (int i = 0; i < m; ++i) rem[i] += A.entry(i, j) * x;
    }
  };
  rec(0);
  return count;
}

namespace {

// Fourier-Motzkin projection bounds for w . x <= t systems.
// Returns per-coordinate rational bounds; nullopt = unbounded.
struct CoordBounds {
  std::optional<Rat> lo, hi;
};

std::vector<CoordBounds> fm_bounds(const std::vector<Inequality>& ineqs,
                                   int d, bool nonneg) {
  using Row = std::pair<std::vector<Rat>, Rat>;
  std::vector<Row> base;
  for (const auto& iq : ineqs) {
    std::vector<Rat> w(d);
    for (int j = 0; j < d; ++j) w[j] = Rat(iq.coeffs[j]);
    base.push_back({w, Rat(iq.rhs)});
  }
  if (nonneg)
    for (int j = 0; j < d; ++j) {
      std::vector<Rat> w(d, Rat(0));
      w[j] = Rat(-1);
      base.push_back({w, Rat(0)});
    }

  std::vector<CoordBounds> out(d);
  for (int keep = 0; keep < d; ++keep) {
    std::vector<Row> rows = base;
    for (int var = 0; var < d; ++var) {
      if (var == keep) continue;
      std::vector<Row> pos, neg, zero;
      for (auto& r : rows) {
        int s = sgn(r.first[var]);
        (s > 0 ? pos : s < 0 ? neg : zero).push_back(std::move(r));
      }
      rows = std::move(zero);
      for (const auto& p : pos)
        for (const auto& n : neg) {
          Row r;
          r.first.resize(d);
          Rat a = p.first[var], bq = -n.first[var];
          for (int i = 0; i < d; ++i)
            r.first[i] = p.first[i] * bq + n.first[i] * a;
          r.second = p.second * bq + n.second * a;
          rows.push_back(std::move(r));
          if (rows.size() > 20000)
            throw resource_error("polytope bound projection too large");
        }
    }
    for (const auto& r : rows) {
      int s = sgn(r.first[keep]);
      if (s == 0) {
        if (sgn(r.second) < 0) throw input_error("empty polytope");
        continue;
      }
      Rat bound = r.second / r.first[keep];
      if (s > 0) {
        if (!out[keep].hi || bound < *out[keep].hi) out[keep].hi = bound;
      } else {
        if (!out[keep].lo || bound > *out[keep].lo) out[keep].lo = bound;
      }
    }
  }
  return out;
}

}  // namespace

StandardFormSystem polytope_to_standard_form(
    const std::vector<Inequality>& inequalities, bool nonnegativity) {
  if (inequalities.empty()) throw input_error("no inequalities given");
  const int d = static_cast<int>(inequalities[0].coeffs.size());
  const int m = static_cast<int>(inequalities.size());
  for (const auto& iq : inequalities)
    if (static_cast<int>(iq.coeffs.size()) != d)
      throw input_error("inconsistent inequality arity");

  std::vector<Int> translation(d, Int(0));
  std::vector<Inequality> work = inequalities;

  auto bounds = fm_bounds(work, d, nonnegativity);
  for (int j = 0; j < d; ++j)
    if (!bounds[j].lo || !bounds[j].hi)
      throw input_error("unbounded polytope (coordinate " +
                        std::to_string(j + 1) + ")");

  if (!nonnegativity) {
    // Integer translation into the nonnegative orthant preserves counts.
    for (int j = 0; j < d; ++j) {
      Rat lo = *bounds[j].lo;
      Int fl = floor_div(lo.get_num(), lo.get_den());
      if (fl < 0) translation[j] = -fl;
    }
    for (auto& iq : work) {
      for (int j = 0; j < d; ++j) iq.rhs += iq.coeffs[j] * translation[j];
    }
  }

  for (const auto& iq : work)
    for (const Int& c : iq.coeffs)
      if (c < 0)
        throw input_error(
            "normalization to a nonnegative matrix is not possible for this "
            "input (negative coefficient remains after translation)");
  for (const auto& iq : work)
    if (iq.rhs < 0) throw input_error("empty polytope");

  std::vector<std::vector<Int>> rows(m, std::vector<Int>(d + m, Int(0)));
  std::vector<Int> rhs(m);
  std::vector<int> slacks(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) rows[i][j] = work[i].coeffs[j];
    rows[i][d + i] = 1;
    slacks[i] = d + i;
    rhs[i] = work[i].rhs;
  }

  StandardFormSystem out;
  out.matrix = SystemMatrix(std::move(rows));
  out.rhs = std::move(rhs);
  out.slack_columns = std::move(slacks);
  out.translation = std::move(translation);
  out.original_dim = d;
  return out;
}

std::vector<Inequality> parse_polytope(const std::string& text) {
  std::istringstream in(text);
  std::vector<Inequality> out;
  std::string line;
  int d = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    auto rel = std::find(toks.begin(), toks.end(), "<=");
    if (rel == toks.end() || rel + 2 != toks.end())
      throw input_error("polytope line must be 'a_1 ... a_d <= rhs': " + line);
    Inequality iq;
    for (auto it = toks.begin(); it != rel; ++it) {
      Int v;
      if (mpz_set_str(v.get_mpz_t(), it->c_str(), 10) != 0)
        throw input_error("bad coefficient: " + *it);
      iq.coeffs.push_back(v);
    }
    if (mpz_set_str(iq.rhs.get_mpz_t(), (rel + 1)->c_str(), 10) != 0)
      throw input_error("bad right-hand side: " + *(rel + 1));
    if (iq.coeffs.empty()) throw input_error("empty inequality row");
    if (d < 0) d = static_cast<int>(iq.coeffs.size());
    if (static_cast<int>(iq.coeffs.size()) != d)
      throw input_error("inconsistent inequality arity");
    out.push_back(std::move(iq));
  }
  if (out.empty()) throw input_error("polytope file has no inequalities");
  return out;
}

std::vector<Inequality> load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open polytope file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polytope(ss.str());
}

}  // namespace vpf
