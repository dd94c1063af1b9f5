#include "nichols/hilbert.hpp"

#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "nichols/kernels.hpp"

using namespace nichols;
using namespace nichols::testing;

TEST_CASE("quadratic relation spaces") {
  const Field& f4 = Field::of(4);
  auto rels = quadratic_relations(r21(4, "z", "2", "3"));
  REQUIRE(rels.size() == 3);
  CHECK(rels[0] == mono(f4, {1, 1}));
  TensorElem named = mono(f4, {1, 2});
  named.add_term({1, 0}, -Scalar::of(f4, 3) * Scalar::zeta(f4));
  CHECK(rels[1] == named);
  CHECK(rels[2] == mono(f4, {2, 2}));

  // p = -1, q = 1, k = 0: both squares and the commutator vanish.
  const Field& f1 = Field::of(1);
  BraidingSpec c12 = r12(1, "-1", "1", "0");
  auto rels12 = quadratic_relations(c12);
  CHECK(rels12.size() == 3);
  for (TensorElem u : {mono(f1, {1, 1}), mono(f1, {2, 2}),
                       mono(f1, {1, 2}) - mono(f1, {2, 1})}) {
    CHECK(verify_relation(c12, u));
  }

  CHECK(quadratic_relations(r21(1, "2", "3", "5")).empty());
}

TEST_CASE("hilbert windows") {
  HilbertWindow h = hilbert_series(r21(4, "z", "2", "3"), 5);
  CHECK(h.dims == std::vector<std::uint64_t>{1, 2, 1, 0, 0, 0});

  // Jordan plane: one relation, growth like the polynomial ring.
  HilbertWindow hj = hilbert_series(r23(1, "1", "0", "1", "0"), 8);
  CHECK(hj.dims == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});

  HilbertWindow hf = hilbert_series(flip(), 4);
  CHECK(hf.dims == std::vector<std::uint64_t>{1, 2, 3, 4, 5});

  CHECK(hilbert_series(flip(), 0).dims == std::vector<std::uint64_t>{1});
  unsigned cap = degree_cap();
  CHECK_THROWS_AS(hilbert_series(flip(), cap + 1), std::runtime_error);
}

TEST_CASE("verify_relation") {
  // Super Jordan plane: x2^2 x1 + (p-q) x1x2x1 - x1 x2^2 with p=0, q=1.
  BraidingSpec sj = r23(1, "-1", "0", "1", "0");
  const Field& f1 = Field::of(1);
  TensorElem cubic = mono(f1, {2, 2, 1});
  cubic.add_term({0, 1, 0}, Scalar::of(f1, -1));  // (p-q) x1x2x1
  cubic -= mono(f1, {1, 2, 2});
  CHECK(verify_relation(sj, cubic));
  CHECK(verify_relation(sj, mono(f1, {1, 1})));

  // Jordan plane: ((q-p)/2) x1^2 - x1x2 + x2x1 with p=0, q=1.
  BraidingSpec jp = r23(1, "1", "0", "1", "0");
  TensorElem quad = mono(f1, {2, 1}) - mono(f1, {1, 2});
  quad.add_term({0, 0}, Scalar::of(f1, Rational(1, 2)));
  CHECK(verify_relation(jp, quad));
  CHECK_FALSE(verify_relation(jp, mono(f1, {1, 2})));

  CHECK(verify_relation(jp, TensorElem(f1, 2, 2)));
  CHECK(verify_relation(jp, TensorElem(f1, 2, 0)));
}

TEST_CASE("power relation degrees") {
  // k^2 = -1: both letters have eigenvalue -1, order 2.
  BraidingSpec ci = r21(4, "z", "2", "3");
  CHECK(power_relation_degree(ci, 1) == 2u);
  CHECK(power_relation_degree(ci, 2) == 2u);

  // Variant with the (2,2)-corner -pq: x2 picks up ord(-pq) = 4.
  const Field& f4 = Field::of(4);
  Scalar k = Scalar::zeta(f4), p = Scalar::zeta(f4), q = Scalar::one(f4);
  Matrix m(f4, 4, 4);
  m.at(0, 0) = k * k;
  m.at(1, 1) = k * p;
  m.at(1, 2) = k * k - p * q;
  m.at(2, 2) = k * q;
  m.at(3, 3) = -p * q;
  BraidingSpec c22 = to_braiding(BraidingSpec{
      2, 4, OperatorKind::R_MATRIX, BasisOrdering::PAPER, std::move(m)});
  CHECK(power_relation_degree(c22, 1) == 2u);
  CHECK(power_relation_degree(c22, 2) == 4u);

  // Flip: eigenvalue 1 never yields a power relation.
  CHECK(!power_relation_degree(flip(), 1).has_value());
  // Non-eigenvector letter: the x2 (x) x2 column has a cross term.
  BraidingSpec cr = r23(1, "-1", "1", "0", "0");
  CHECK(!power_relation_degree(cr, 2).has_value());
  // Infinite order.
  CHECK(!power_relation_degree(r21(1, "2", "3", "5"), 1).has_value());
  CHECK_THROWS_AS(power_relation_degree(ci, 0), std::out_of_range);

  // The promised membership: x_i^N verifies.
  const Field& f = Field::of(4);
  CHECK(verify_relation(ci, power(f, 1, 2)));
  CHECK(verify_relation(c22, power(f, 2, 4)));
}

TEST_CASE("growth classification") {
  auto tag = [](std::vector<std::uint64_t> dims) {
    HilbertWindow h{static_cast<unsigned>(dims.size() - 1), std::move(dims)};
    return growth_classify(h).tag;
  };
  CHECK(tag({1, 2, 1, 0, 0, 0, 0}) == GrowthTag::FINITE);
  CHECK(tag({1, 2, 2, 2, 2, 2, 2}) == GrowthTag::BOUNDED);
  CHECK(tag({1, 2, 3, 4, 5, 6, 7}) == GrowthTag::LINEAR);
  CHECK(tag({1, 2, 4, 8, 16, 32, 64}) == GrowthTag::SUPERLINEAR);
  HilbertWindow short_window{5, {1, 2, 3, 4, 5, 6}};
  CHECK_THROWS_AS(growth_classify(short_window), std::invalid_argument);

  GrowthClass fin = growth_classify(HilbertWindow{6, {1, 2, 1, 0, 0, 0, 0}});
  CHECK(fin.window_lo == 3);
  CHECK(fin.window_hi == 6);
  CHECK(growth_str(fin.tag) == "FINITE");
  CHECK(growth_str(GrowthTag::SUPERLINEAR) == "SUPERLINEAR");
}

TEST_CASE("degree 2 count consistency") {
  for (const BraidingSpec& c :
       {r21(4, "z", "2", "3"), r21(1, "2", "3", "5"), flip(),
        r23(1, "-1", "0", "1", "0"), r12(1, "-1", "1", "0")}) {
    HilbertWindow h = hilbert_series(c, 2);
    CHECK(h.dims[2] == 4 - quadratic_relations(c).size());
  }
}

TEST_CASE("diagonal braidings count like quantum linear spaces") {
  // q12 q21 = 1 splits the algebra; dims follow the product of truncated
  // geometric series with N_i = ord(q_ii).
  struct Case {
    unsigned conductor;
    const char *q11, *q12, *q21, *q22;
    std::vector<std::uint64_t> want;  // degrees 0..6
  };
  for (const Case& t : std::initializer_list<Case>{
           {1, "-1", "2", "1/2", "-1", {1, 2, 1, 0, 0, 0, 0}},
           {4, "-1", "3", "1/3", "z", {1, 2, 2, 2, 1, 0, 0}},
           {3, "z", "5", "1/5", "z", {1, 2, 3, 2, 1, 0, 0}}}) {
    BraidingSpec c = diagonal(t.conductor, t.q11, t.q12, t.q21, t.q22);
    CHECK(hilbert_series(c, 6).dims == t.want);
  }
}

TEST_CASE("hilbert window invariant under basis change") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> d(-2, 2);
  BraidingSpec c = r21(4, "z", "2", "3");
  const Field& f = Field::of(4);
  HilbertWindow base = hilbert_series(c, 5);
  Matrix r = mat_mul(tau_matrix(f, 2), c.op);
  int done = 0;
  while (done < 3) {
    Matrix phi(f, 2, 2);
    for (unsigned i = 0; i < 2; ++i)
      for (unsigned j = 0; j < 2; ++j) phi.at(i, j) = Scalar::of(f, d(rng));
    if (!is_invertible(phi)) continue;
    ++done;
    BraidingSpec moved = to_braiding(
        BraidingSpec{2, 4, OperatorKind::R_MATRIX, BasisOrdering::LEX,
                     transform(r, Transform::basis(phi), 2)});
    CHECK(hilbert_series(moved, 5).dims == base.dims);
  }
}
