#ifndef VPF_CONSTRAINTS_HPP
#define VPF_CONSTRAINTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vpf/common.hpp"
#include "vpf/linform.hpp"

namespace vpf {

// One case-defining constraint on the parameters.
struct CaseConstraint {
  enum class Kind { SignGE0, SignLEminus1, Congruence };

  Kind kind = Kind::SignGE0;
  LinForm form;
  Int modulus = 1;  // Congruence only
  Int residue = 0;  // Congruence only, in [0, modulus)

  static CaseConstraint ge0(LinForm f) {
    CaseConstraint c;
    c.form = std::move(f);
    return c;
  }
  static CaseConstraint le_minus1(LinForm f) {
    CaseConstraint c;
    c.kind = Kind::SignLEminus1;
    c.form = std::move(f);
    return c;
  }
  static CaseConstraint congruence(LinForm f, Int modulus, Int residue) {
    CaseConstraint c;
    c.kind = Kind::Congruence;
    c.form = std::move(f);
    c.modulus = std::move(modulus);
    c.residue = std::move(residue);
    return c;
  }

  std::string to_string(const std::vector<std::string>& names) const;
};

enum class Feasibility { Witnessed, Unknown, Empty };

// A conjunction of sign and congruence constraints, normalized per integer
// direction: for each coprime coefficient vector (first nonzero positive)
// we keep an interval [lo, hi] and one congruence class for its value.
// Contradictions between constraints on the same direction are detected
// exactly on insertion; cross-direction emptiness is probed separately.
class ConstraintSet {
 public:
  explicit ConstraintSet(int nparams = 0) : nparams_(nparams) {}

  int nparams() const { return nparams_; }
  bool unsat() const { return unsat_; }
  bool empty() const { return dirs_.empty() && !unsat_; }

  void add(const CaseConstraint& c);
  void add_ge(const LinForm& f, const Int& bound);  // f >= bound
  void add_le(const LinForm& f, const Int& bound);  // f <= bound
  void add_eq(const LinForm& f, const Int& value);
  void add_congruence(const LinForm& f, const Int& modulus, const Int& residue);

  bool satisfied_by(const std::vector<Int>& point) const;

  // Exactly-known residue of f's value mod m under this set, if pinned.
  std::optional<Int> known_residue(const LinForm& f, const Int& m) const;

  // Searches [-box, box]^nparams (narrowed by projected bounds) for an
  // integer point. Search effort is capped; nullopt means "none found".
  std::optional<std::vector<Int>> find_point(const Int& box,
                                             size_t max_steps = 400000) const;

  // True if the real relaxation is infeasible (Fourier-Motzkin certificate)
  // or some direction's interval/congruence has no integer solution.
  bool certainly_empty() const;

  Feasibility probe(const Int& box) const;

  // Canonical listing (deterministic): lower bounds as SignGE0, upper
  // bounds as SignLEminus1, then congruences, sorted by direction.
  std::vector<CaseConstraint> to_constraints() const;

  // Rebuilds the set under parameter substitution p_i := sub[i](p').
  ConstraintSet substituted(const std::vector<LinForm>& sub,
                            int new_nparams) const;

  std::string canonical_key() const;
  std::string to_string(const std::vector<std::string>& names) const;

  bool operator==(const ConstraintSet& o) const {
    return nparams_ == o.nparams_ && unsat_ == o.unsat_ && dirs_ == o.dirs_;
  }

 private:
  struct DirInfo {
    std::optional<Int> lo, hi;
    Int mod = 1;
    Int res = 0;
    bool operator==(const DirInfo& o) const {
      return lo == o.lo && hi == o.hi && mod == o.mod && res == o.res;
    }
  };

  // Normalizes f into (direction, sign, gcd, constant, scale):
  //   f = (sign * g * (dir . b) + c) / D.
  struct NormalForm {
    std::vector<Int> dir;
    int sign = 1;
    Int g = 1, c = 0, scale = 1;
    bool constant = false;  // dir is zero; value is c / scale
  };
  NormalForm normalize(const LinForm& f) const;

  void add_dir_lower(const std::vector<Int>& dir, const Int& lo);
  void add_dir_upper(const std::vector<Int>& dir, const Int& hi);
  void add_dir_congruence(const std::vector<Int>& dir, const Int& m,
                          const Int& r);
  void check_dir(const std::vector<Int>& dir);

  int nparams_;
  bool unsat_ = false;
  std::map<std::vector<Int>, DirInfo> dirs_;
};

}  // namespace vpf

#endif
