#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "explab/expansion/expansion.hpp"
#include "explab/harness/campaigns.hpp"
#include "explab/harness/generators.hpp"

namespace explab::detail {

// Nonzero targets A u for u from the sampling box, one per ray through the
// origin up to sign, keeping the sampled target of least L1 norm. Ordered by
// the primitive direction. Entries of A must fit in int64.
std::vector<IntVector> ray_targets(const IntMatrix& a, const TargetSampling& sampling,
                                   Rng& rng);

struct EqualityCheck {
  bool ok = true;
  std::size_t targets = 0;
  std::size_t rounded = 0;  // xi_z_at settled by the rounding step
  std::size_t branched = 0;
  std::size_t branch_only = 0;  // targets re-solved with rounding disabled
  nlohmann::json mismatch;  // first target with Xi_Q != Xi_Z
};

// Xi_Q(A, v) == Xi_Z(A, v) for every target, with the integer witness
// checked against A and v. Every branch_stride-th target is also solved by
// branch-and-bound alone (0 disables this). CapExceededError propagates.
EqualityCheck check_equality(const ExpansionSolver& solver,
                             const std::vector<IntVector>& targets,
                             std::size_t branch_stride = 1);

nlohmann::json summary(const EqualityCheck& check);

}  // namespace explab::detail
