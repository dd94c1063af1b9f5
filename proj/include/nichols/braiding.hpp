// Braidings on V of small dimension: R-matrix/braiding conversion, the
// structural checks every catalog entry must pass, the four equivalence
// transforms, and the JSON exchange format.
#pragma once

#include <optional>
#include <string>

#include "nichols/matrix.hpp"

namespace nichols {

enum class OperatorKind { R_MATRIX, BRAIDING };

// PAPER lists the pair basis column-fastest (x1x1, x2x1, x1x2, x2x2);
// LEX is row-fastest (x1x1, x1x2, x2x1, x2x2) and matches word indexing.
enum class BasisOrdering { PAPER, LEX };

struct BraidingSpec {
  unsigned dim;
  unsigned conductor;
  OperatorKind kind;
  BasisOrdering ordering;
  Matrix op;  // dim^2 x dim^2; row = output pair index, column = input
};

// The flip x_i (x) x_j -> x_j (x) x_i on the LEX pair basis.
Matrix tau_matrix(const Field& f, unsigned dim);

// Relabels pair indices between the two orderings (an involution).
Matrix reorder_pairs(const Matrix& m, unsigned dim, BasisOrdering from,
                     BasisOrdering to);

// c = tau . R, emitted in LEX ordering. Requires kind R_MATRIX.
BraidingSpec to_braiding(const BraidingSpec& spec);

// Accepts either kind/ordering and lands on a LEX braiding. The braiding
// must be invertible; throws std::invalid_argument otherwise.
BraidingSpec canonical_braiding(const BraidingSpec& spec);

bool satisfies_qybe(const Matrix& r, unsigned dim);
bool satisfies_braid_eq(const Matrix& c, unsigned dim);
bool is_invertible(const Matrix& a);

// Matrix of the dual-side map f (x) v -> sum (ev (x) id (x) id)
// (f (x) c(v (x) v_i) (x) v^i) on the product bases. Requires a braiding.
Matrix c_flat(const BraidingSpec& c);
bool is_rigid(const BraidingSpec& c);

enum class TransformKind { TRANSPOSE, SHARP, SCALE, BASIS };

struct Transform {
  TransformKind kind;
  std::optional<Scalar> kappa;  // SCALE only, nonzero
  std::optional<Matrix> phi;    // BASIS only, dim x dim invertible

  static Transform transpose() { return {TransformKind::TRANSPOSE, {}, {}}; }
  static Transform sharp() { return {TransformKind::SHARP, {}, {}}; }
  static Transform scale(Scalar kappa);
  static Transform basis(Matrix phi);
};

// Applies one equivalence move to an R-matrix given on the LEX pair basis:
// TRANSPOSE -> R^t, SHARP -> tau R tau, SCALE -> kappa R,
// BASIS -> (phi (x) phi) R (phi (x) phi)^{-1}.
Matrix transform(const Matrix& r, const Transform& t, unsigned dim);

// JSON exchange: { "dim", "conductor", "kind": "R"|"c",
// "ordering": "paper"|"lex", "entries": [[scalar strings]] }.
// Throws std::invalid_argument naming the offending field or entry.
BraidingSpec parse_braiding_json(const std::string& text);
BraidingSpec load_braiding_file(const std::string& path);
std::string braiding_to_json(const BraidingSpec& spec);

}  // namespace nichols
