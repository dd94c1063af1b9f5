#include "nichols/kernels.hpp"

#include <doctest.h>

#include <random>

using namespace nichols;

namespace {

Matrix random_matrix(const Field& f, unsigned rows, unsigned cols,
                     std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(f, rows, cols);
  for (unsigned i = 0; i < rows; ++i) {
    for (unsigned j = 0; j < cols; ++j) {
      Scalar s = Scalar::zero(f);
      for (unsigned e = 0; e < f.degree(); ++e) {
        s += Scalar::of(f, d(rng)) * Scalar::zeta(f).pow(e);
      }
      m.at(i, j) = s;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("identity and zero") {
  const Field& f = Field::of(4);
  Matrix id = Matrix::identity(f, 4);
  CHECK(rank(id) == 4);
  CHECK(kernel_basis(id).empty());
  Matrix z(f, 3, 5);
  CHECK(rank(z) == 0);
  CHECK(kernel_basis(z).size() == 5);
  CHECK(mat_mul(id, id) == id);
}

TEST_CASE("rref of a rank-2 rational matrix") {
  const Field& f = Field::of(1);
  // Rows: (1 2 3), (2 4 6), (0 1 1). Middle row is a multiple of the first.
  Matrix m(f, 3, 3);
  int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) m.at(i, j) = Scalar::of(f, vals[i][j]);
  Echelon e = echelon(m);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<unsigned>{0, 1});
  CHECK(e.rref.at(0, 2) == Scalar::of(f, 1));
  CHECK(e.rref.at(1, 2) == Scalar::of(f, 1));

  auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 1);
  // Canonical form: leading coefficient 1 at the earliest index.
  CHECK(kb[0][0] == Scalar::of(f, 1));
  CHECK(kb[0][1] == Scalar::of(f, 1));
  CHECK(kb[0][2] == Scalar::of(f, -1));
}

TEST_CASE("kernel vectors annihilate and are reduced") {
  std::mt19937 rng(42);
  const Field& f = Field::of(3);
  for (int trial = 0; trial < 8; ++trial) {
    Matrix m = random_matrix(f, 4, 6, rng);
    auto kb = kernel_basis(m);
    CHECK(kb.size() == 6 - rank(m));
    for (const auto& v : kb) {
      for (unsigned i = 0; i < m.rows(); ++i) {
        Scalar acc = Scalar::zero(f);
        for (unsigned j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
        CHECK(acc.is_zero());
      }
    }
    // Leading entries: 1, strictly increasing positions, alone in their
    // column across the basis.
    unsigned prev_lead = 0;
    bool first = true;
    for (std::size_t k = 0; k < kb.size(); ++k) {
      unsigned lead = 0;
      while (lead < kb[k].size() && kb[k][lead].is_zero()) ++lead;
      REQUIRE(lead < kb[k].size());
      CHECK(kb[k][lead].is_one());
      if (!first) CHECK(lead > prev_lead);
      first = false;
      prev_lead = lead;
      for (std::size_t k2 = 0; k2 < kb.size(); ++k2) {
        if (k2 != k) CHECK(kb[k2][lead].is_zero());
      }
    }
  }
}

TEST_CASE("serial reference agrees with threaded paths") {
  std::mt19937 rng(7);
  for (unsigned conductor : {1u, 4u}) {
    const Field& f = Field::of(conductor);
    for (int trial = 0; trial < 5; ++trial) {
      Matrix a = random_matrix(f, 5, 4, rng);
      Matrix b = random_matrix(f, 4, 6, rng);
      Matrix serial = reference::mat_mul(a, b);
      CHECK(mat_mul(a, b, 1) == serial);
      CHECK(mat_mul(a, b, 2) == serial);
      CHECK(mat_mul(a, b, 4) == serial);

      Matrix c = random_matrix(f, 5, 7, rng);
      Echelon se = reference::echelon(c);
      for (int t : {1, 2, 4}) {
        Echelon pe = echelon(c, t);
        CHECK(pe.rref == se.rref);
        CHECK(pe.pivots == se.pivots);
      }
    }
  }
}

TEST_CASE("rref is idempotent") {
  std::mt19937 rng(11);
  const Field& f = Field::of(4);
  Matrix m = random_matrix(f, 4, 5, rng);
  Echelon e = echelon(m);
  Echelon e2 = echelon(e.rref);
  CHECK(e2.rref == e.rref);
  CHECK(e2.pivots == e.pivots);
}

TEST_CASE("inverse") {
  std::mt19937 rng(13);
  const Field& f = Field::of(4);
  int found = 0;
  while (found < 5) {
    Matrix m = random_matrix(f, 4, 4, rng);
    if (rank(m) != 4) continue;
    ++found;
    Matrix mi = inverse(m);
    CHECK(mat_mul(m, mi) == Matrix::identity(f, 4));
    CHECK(mat_mul(mi, m) == Matrix::identity(f, 4));
  }
  Matrix sing(f, 2, 2);
  sing.at(0, 0) = Scalar::of(f, 1);
  sing.at(1, 0) = Scalar::of(f, 1);
  CHECK_THROWS_AS(inverse(sing), std::invalid_argument);
  CHECK_THROWS_AS(inverse(Matrix(f, 2, 3)), std::invalid_argument);
}

TEST_CASE("kronecker product") {
  std::mt19937 rng(17);
  const Field& f = Field::of(3);
  Matrix a = random_matrix(f, 2, 2, rng);
  Matrix b = random_matrix(f, 2, 2, rng);
  Matrix c = random_matrix(f, 2, 2, rng);
  Matrix d = random_matrix(f, 2, 2, rng);
  // Mixed-product rule (A x B)(C x D) = AC x BD.
  CHECK(mat_mul(kron(a, b), kron(c, d)) ==
        kron(mat_mul(a, c), mat_mul(b, d)));
  CHECK(kron(Matrix::identity(f, 2), Matrix::identity(f, 3)) ==
        Matrix::identity(f, 6));
  // Index layout: left factor is the high digit.
  Matrix e(f, 2, 2);
  e.at(0, 1) = Scalar::of(f, 5);
  Matrix k = kron(e, Matrix::identity(f, 2));
  CHECK(k.at(0, 2) == Scalar::of(f, 5));
  CHECK(k.at(1, 3) == Scalar::of(f, 5));
}
