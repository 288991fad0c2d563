#include "vpf/common.hpp"

#include <sstream>

namespace vpf {

Rat rat_pow(const Rat& base, const Int& exp) {
  if (sgn(base) == 0) {
    if (exp < 0) throw input_error("rat_pow: zero base with negative exponent");
    return exp == 0 ? Rat(1) : Rat(0);
  }
  Int e = abs(exp);
  if (!e.fits_ulong_p()) throw resource_error("rat_pow: exponent too large");
  unsigned long ue = e.get_ui();
  Rat num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_num_mpz_t(), base.get_den().get_mpz_t(), ue);
  Rat r = num / den;  // already coprime, gmp canonicalizes anyway
  if (exp < 0) r = 1 / r;
  return r;
}

Rat binomial(const Rat& x, unsigned k) {
  Rat r(1);
  for (unsigned i = 0; i < k; ++i) r *= (x - Rat(i)) / Rat(i + 1);
  return r;
}

std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  std::string t = s;
  if (t.empty()) throw input_error("empty rational literal");
  if (t.find('/') == std::string::npos) t += "/1";
  Rat r;
  if (r.set_str(t, 10) != 0) throw input_error("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string int_vec_to_string(const std::vector<Int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace vpf
