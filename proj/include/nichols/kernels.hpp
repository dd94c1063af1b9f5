// Exact Gaussian elimination and matrix products, serial and OpenMP flavors.
//
// Both flavors pick the first nonzero entry of each column as pivot and never
// reassociate sums, so their outputs are identical bit for bit. The serial
// `reference` versions stay deliberately simple and are what the tests and
// the benchmark compare against.
#pragma once

#include <vector>

#include "nichols/matrix.hpp"

namespace nichols {

// Reduced row echelon form plus the pivot columns, in ascending order.
struct Echelon {
  Matrix rref;
  std::vector<unsigned> pivots;
  unsigned rank() const { return static_cast<unsigned>(pivots.size()); }
};

// threads == 0 reads NICHOLS_KERNEL_THREADS (default 1).
int resolve_threads(int threads);

Matrix mat_mul(const Matrix& a, const Matrix& b, int threads = 0);
Echelon echelon(Matrix m, int threads = 0);
unsigned rank(const Matrix& m, int threads = 0);

// Right null space as the unique reduced echelon basis: each vector has
// leading coefficient 1 at its lowest nonzero index, and that index is zero
// in every other vector. Vectors are ordered by leading index.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m,
                                              int threads = 0);

// Throws std::invalid_argument on a singular input.
Matrix inverse(const Matrix& m, int threads = 0);

namespace reference {
Matrix mat_mul(const Matrix& a, const Matrix& b);
Echelon echelon(Matrix m);
}  // namespace reference

}  // namespace nichols
