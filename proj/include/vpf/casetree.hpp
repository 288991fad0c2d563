#ifndef VPF_CASETREE_HPP
#define VPF_CASETREE_HPP

#include <algorithm>
#include <vector>

#include "vpf/constraints.hpp"

namespace vpf {

// The case analysis of one computation: every leaf carries the full
// conjunction of constraints along its branch plus a payload. Stored in
// flattened form; branch structure is recoverable from the constraint sets.
template <class T>
class CaseTree {
 public:
  struct Leaf {
    ConstraintSet constraints;
    T payload;
    Feasibility feasibility = Feasibility::Unknown;
  };

  CaseTree() = default;

  void add_leaf(ConstraintSet cs, T payload,
                Feasibility feas = Feasibility::Unknown) {
    leaves_.push_back({std::move(cs), std::move(payload), feas});
  }

  std::vector<Leaf>& leaves() { return leaves_; }
  const std::vector<Leaf>& leaves() const { return leaves_; }
  bool empty() const { return leaves_.empty(); }
  size_t size() const { return leaves_.size(); }

  void sort_canonical() {
    std::stable_sort(leaves_.begin(), leaves_.end(),
                     [](const Leaf& a, const Leaf& b) {
                       return a.constraints.canonical_key() <
                              b.constraints.canonical_key();
                     });
  }

  // Marks every leaf by probing its constraint set over [-box, box]^m.
  void probe_feasibility(const Int& box) {
    for (Leaf& l : leaves_) l.feasibility = l.constraints.probe(box);
  }

 private:
  std::vector<Leaf> leaves_;
};

}  // namespace vpf

#endif
