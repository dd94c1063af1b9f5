#include "nichols/hilbert.hpp"

#include <stdexcept>

#include "nichols/derivations.hpp"
#include "nichols/kernels.hpp"

namespace nichols {

std::string growth_str(GrowthTag tag) {
  switch (tag) {
    case GrowthTag::FINITE:
      return "FINITE";
    case GrowthTag::BOUNDED:
      return "BOUNDED";
    case GrowthTag::LINEAR:
      return "LINEAR";
    case GrowthTag::SUPERLINEAR:
      return "SUPERLINEAR";
  }
  throw std::logic_error("unhandled growth tag");
}

std::vector<TensorElem> quadratic_relations(const BraidingSpec& c) {
  Matrix id_plus_c = Matrix::identity(c.op.field(), c.dim * c.dim);
  for (unsigned i = 0; i < id_plus_c.rows(); ++i) {
    for (unsigned j = 0; j < id_plus_c.cols(); ++j) {
      id_plus_c.at(i, j) += c.op.at(i, j);
    }
  }
  return kernel_basis(DegreeOperator{c.dim, 2, std::move(id_plus_c)});
}

HilbertWindow hilbert_series(const BraidingSpec& c, unsigned max_degree) {
  if (max_degree > degree_cap()) {
    throw std::runtime_error("max degree " + std::to_string(max_degree) +
                             " exceeds the configured cap " +
                             std::to_string(degree_cap()));
  }
  HilbertWindow h{max_degree, {1}};
  if (max_degree == 0) return h;
  h.dims.push_back(c.dim);
  Matrix s = Matrix::identity(c.op.field(), c.dim);
  for (unsigned m = 2; m <= max_degree; ++m) {
    s = symmetrizer_step(c, m, s);
    h.dims.push_back(rank(s));
  }
  return h;
}

bool verify_relation(const BraidingSpec& c, const TensorElem& u) {
  if (u.degree() > degree_cap()) {
    throw std::runtime_error("degree " + std::to_string(u.degree()) +
                             " exceeds the configured cap " +
                             std::to_string(degree_cap()));
  }
  bool direct = symmetrizer_apply(c, u).is_zero();
  if (u.degree() >= 1 && u.degree() <= 6) {
    if (vanishes_in_nichols(c, u) != direct) {
      throw std::logic_error(
          "symmetrizer and derivation membership disagree on " + u.str());
    }
  }
  return direct;
}

std::optional<unsigned> power_relation_degree(const BraidingSpec& c,
                                              unsigned letter,
                                              unsigned order_bound) {
  if (letter < 1 || letter > c.dim) {
    throw std::out_of_range("letter index out of range");
  }
  unsigned col = (letter - 1) * c.dim + (letter - 1);
  for (unsigned row = 0; row < c.dim * c.dim; ++row) {
    if (row != col && !c.op.at(row, col).is_zero()) return std::nullopt;
  }
  const Scalar& q = c.op.at(col, col);
  if (q.is_zero()) return std::nullopt;
  UnityOrder ord = root_of_unity_order(q, order_bound);
  if (!ord.is_finite() || ord.value() < 2) return std::nullopt;
  return ord.value();
}

GrowthClass growth_classify(const HilbertWindow& h) {
  const unsigned d = h.max_degree;
  if (d < 6) {
    throw std::invalid_argument("growth heuristic needs at least degree 6");
  }
  if (h.dims[d] == 0 && h.dims[d - 1] == 0) {
    unsigned lo = d;
    while (lo > 0 && h.dims[lo - 1] == 0) --lo;
    return GrowthClass{GrowthTag::FINITE, lo, d};
  }
  unsigned lo = d / 2;
  bool constant = true, affine = true;
  for (unsigned m = lo + 1; m <= d; ++m) {
    if (h.dims[m] != h.dims[lo]) constant = false;
    if (m > lo + 1 &&
        h.dims[m] - h.dims[m - 1] != h.dims[lo + 1] - h.dims[lo]) {
      affine = false;
    }
  }
  if (constant) return GrowthClass{GrowthTag::BOUNDED, lo, d};
  if (affine) return GrowthClass{GrowthTag::LINEAR, lo, d};
  return GrowthClass{GrowthTag::SUPERLINEAR, lo, d};
}

}  // namespace nichols
