// Degree-by-degree invariants of the Nichols algebra of a braiding:
// quadratic relation space, graded dimensions, relation membership, the
// power-relation degree of a letter, and a growth heuristic over the
// computed window. Growth tags are proxies read off finitely many degrees,
// never certified asymptotics.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/tensor.hpp"

namespace nichols {

struct HilbertWindow {
  unsigned max_degree;
  std::vector<std::uint64_t> dims;  // dims[m] = rank of S_m, m = 0..max_degree
};

enum class GrowthTag { FINITE, BOUNDED, LINEAR, SUPERLINEAR };

struct GrowthClass {
  GrowthTag tag;
  unsigned window_lo, window_hi;  // degrees the verdict was read from
};

std::string growth_str(GrowthTag tag);

// Kernel basis of id + c, normalized as in kernel_basis.
std::vector<TensorElem> quadratic_relations(const BraidingSpec& c);

// dims[0] = 1, dims[1] = dim V, then ranks of the rolling symmetrizer.
HilbertWindow hilbert_series(const BraidingSpec& c, unsigned max_degree);

// S_m(u) = 0, cross-checked against the derivation recursion for degrees
// up to 6; a disagreement there is an internal fault, not a result.
bool verify_relation(const BraidingSpec& c, const TensorElem& u);

// If c(x_i (x) x_i) = q x_i (x) x_i with q a root of unity of order
// N >= 2 (searched up to order_bound), returns N: x_i^N is then a relation.
// Returns nullopt when the letter is not an eigenvector or no order found.
std::optional<unsigned> power_relation_degree(const BraidingSpec& c,
                                              unsigned letter,
                                              unsigned order_bound = 1000);

// Reads the top half-window of dims; needs max_degree >= 6.
GrowthClass growth_classify(const HilbertWindow& h);

}  // namespace nichols
