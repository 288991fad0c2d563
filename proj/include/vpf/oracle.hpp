#ifndef VPF_ORACLE_HPP
#define VPF_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "vpf/common.hpp"
#include "vpf/matrix.hpp"

namespace vpf {

struct OracleLimits {
  Int entry_limit = Int(1000000);
  unsigned long state_limit = 50000000UL;
};

// Exact number of x >= 0 with A x = b, by dynamic programming over columns
// (states are the partial right-hand sides inside the box [0, b]).
// Returns 0 for b outside the nonnegative span.
Int brute_count(const SystemMatrix& A, const std::vector<Int>& b,
                const OracleLimits& limits = {});

// Number of strictly positive solutions: phi(b - r) via the x -> x - 1
// shift, r the row-sum vector.
Int brute_count_interior(const SystemMatrix& A, const std::vector<Int>& b,
                         const OracleLimits& limits = {});

// Direct recursive enumeration of solutions with every x_k >= min_x.
// Test cross-check for small instances only.
Int enumerate_count(const SystemMatrix& A, const std::vector<Int>& b,
                    const Int& min_x);

// One inequality row  a . x <= rhs.
struct Inequality {
  std::vector<Int> coeffs;
  Int rhs;
};

struct StandardFormSystem {
  SystemMatrix matrix;           // original columns plus slack columns
  std::vector<Int> rhs;
  std::vector<int> slack_columns;
  std::vector<Int> translation;  // applied to reach the nonnegative orthant
  int original_dim = 0;
};

// Converts a bounded inequality-described polytope to x >= 0, A x = b with
// one slack column per row. With nonnegativity set, x >= 0 is part of the
// input description; otherwise the polytope is translated into the
// nonnegative orthant first (integer translation, recorded).
StandardFormSystem polytope_to_standard_form(
    const std::vector<Inequality>& inequalities, bool nonnegativity);

// Parses lines "a_1 ... a_d <= rhs" ('#' comments, blank lines ignored).
std::vector<Inequality> parse_polytope(const std::string& text);
std::vector<Inequality> load_polytope(const std::string& path);

}  // namespace vpf

#endif
