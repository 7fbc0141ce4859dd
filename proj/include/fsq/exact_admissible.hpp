#pragma once

#include <cstdint>
#include <vector>

#include "fsq/digit_set.hpp"
#include "fsq/lattice.hpp"

namespace fsq {

/// Q_k as a finite union of lattice cosets. Unlike AdmissibleSet this stays
/// exact after G_{Q_k} acquires non-zero loops (Q_{k+1} is then infinite):
/// every loop sum is folded into the lattice of its class.
struct AdmissibleFamily {
  std::vector<Coset> cosets;  // sorted, no coset contained in another
  int generation = 0;

  static AdmissibleFamily initial();

  bool contains(const LatticeVec& q) const;
  bool is_finite() const;
  /// Sorted elements with |q|_inf <= bound.
  std::vector<LatticeVec> in_ball(std::int64_t bound) const;
};

AdmissibleFamily next_family(const AdmissibleFamily& q, const DigitSet& d);

/// Q_k computed from Q_0 by k successor steps.
AdmissibleFamily admissible_family(const DigitSet& d, int k);

}  // namespace fsq
