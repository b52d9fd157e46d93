#pragma once

#include <optional>
#include <vector>

#include "relmix/vector.hpp"

namespace relmix {

// The affine inequality coeffs . x >= rhs.
struct LinearConstraint {
  std::vector<Rat> coeffs;
  Rat rhs;
};

struct FeasibleResult {
  bool feasible = false;
  std::vector<Rat> witness;  // satisfies every constraint exactly when feasible

  explicit operator bool() const { return feasible; }
};

// Exact decision of nonemptiness of {x : c.x >= rhs for all constraints} by
// Fourier-Motzkin elimination, with a witness point on success.
FeasibleResult feasible(const std::vector<LinearConstraint>& constraints,
                        int dim);

}  // namespace relmix
