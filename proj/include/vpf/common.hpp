#ifndef VPF_COMMON_HPP
#define VPF_COMMON_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vpf {

using Int = mpz_class;
using Rat = mpq_class;

// Malformed user input (bad files, bad flags, violated preconditions).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure (a re-summation check or an interpolation
// consistency check did not hold). Never ignored.
struct engine_error : std::runtime_error {
  explicit engine_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Configured resource cap exceeded (oracle state space, search budgets).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Mathematical residue: always in [0, |b|).
inline Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// ceil(a / b) for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// base^exp for integer exp of either sign. base == 0 requires exp >= 0.
Rat rat_pow(const Rat& base, const Int& exp);

// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for rational x.
Rat binomial(const Rat& x, unsigned k);

// Canonical "p/q" rendering (q >= 1, reduced). Used by the JSON layer.
std::string rat_to_string(const Rat& q);

// Parses "p/q" or "p". Throws input_error on junk.
Rat rat_from_string(const std::string& s);

std::string int_vec_to_string(const std::vector<Int>& v);

}  // namespace vpf

#endif
