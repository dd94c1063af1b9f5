// Skew derivations against the dual basis, read off the V (x) rest
// coproduct component, plus the ideal-membership test they induce.
#pragma once

#include "nichols/tensor.hpp"

namespace nichols {

// The degree-(m-1) element d_i(u) with sum_i x_i (x) d_i(u) equal to
// coproduct_1_rest(u). i is 1-based; u must have degree m >= 1.
TensorElem derive(const BraidingSpec& c, unsigned i, const TensorElem& u);

// True iff u lies in the symmetrizer kernel of its degree. Degrees up to 6
// recurse through the derivations; beyond that the symmetrizer is applied
// directly, which is both the definition and the cheaper path there.
bool vanishes_in_nichols(const BraidingSpec& c, const TensorElem& u);

}  // namespace nichols
