#include "nichols/derivations.hpp"

#include <stdexcept>

namespace nichols {

TensorElem derive(const BraidingSpec& c, unsigned i, const TensorElem& u) {
  if (u.degree() < 1) {
    throw std::invalid_argument("derivation needs positive degree");
  }
  if (i < 1 || i > u.dim()) {
    throw std::out_of_range("letter index out of range");
  }
  TensorElem delta = coproduct_1_rest_apply(c, u);
  TensorElem out(u.field(), u.dim(), u.degree() - 1);
  for (const auto& [w, coeff] : delta.terms()) {
    if (w[0] == i - 1) out.add_term(Word(w.begin() + 1, w.end()), coeff);
  }
  return out;
}

bool vanishes_in_nichols(const BraidingSpec& c, const TensorElem& u) {
  if (u.degree() < 1) {
    throw std::invalid_argument("membership test needs positive degree");
  }
  if (u.degree() > degree_cap()) {
    throw std::runtime_error("degree " + std::to_string(u.degree()) +
                             " exceeds the configured cap " +
                             std::to_string(degree_cap()));
  }
  if (u.is_zero()) return true;
  if (u.degree() == 1) return false;
  if (u.degree() > 6) return symmetrizer_apply(c, u).is_zero();
  for (unsigned i = 1; i <= u.dim(); ++i) {
    if (!vanishes_in_nichols(c, derive(c, i, u))) return false;
  }
  return true;
}

}  // namespace nichols
