// Homogeneous elements of the tensor algebra on dim letters, and the
// degree-m operators built from a braiding: chain maps c_i, braid-group
// lifts, the 1|rest coproduct component, and the quantum symmetrizer.
//
// Words are stored with 0-based letters and printed 1-based. Matrix rows
// and columns are indexed by LEX word order: the leftmost letter is the
// most significant digit, matching the Kronecker layout in matrix.hpp.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/matrix.hpp"

namespace nichols {

using Word = std::vector<unsigned char>;

std::uint64_t word_index(const Word& w, unsigned dim);
Word index_word(std::uint64_t idx, unsigned dim, unsigned degree);
std::string word_str(const Word& w);  // "x1x2x1"; the empty word is "1"

class TensorElem {
 public:
  TensorElem(const Field& f, unsigned dim, unsigned degree)
      : f_(&f), dim_(dim), degree_(degree) {}
  static TensorElem monomial(const Field& f, unsigned dim, Word w);
  static TensorElem monomial(const Field& f, unsigned dim, Word w, Scalar c);

  const Field& field() const { return *f_; }
  unsigned dim() const { return dim_; }
  unsigned degree() const { return degree_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Merges, then drops the term if the coefficient cancelled.
  void add_term(const Word& w, const Scalar& c);

  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  TensorElem& operator*=(const Scalar& c);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) {
    return a += b;
  }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) {
    return a -= b;
  }
  friend TensorElem operator*(const Scalar& c, TensorElem a) { return a *= c; }
  TensorElem operator-() const;
  bool operator==(const TensorElem& o) const;
  bool operator!=(const TensorElem& o) const { return !(*this == o); }

  std::vector<Scalar> dense() const;  // length dim^degree, LEX order
  static TensorElem from_dense(const Field& f, unsigned dim, unsigned degree,
                               const std::vector<Scalar>& v);

  std::string str() const;

 private:
  const Field* f_;
  unsigned dim_, degree_;
  std::map<Word, Scalar> terms_;
};

struct DegreeOperator {
  unsigned dim;
  unsigned degree;
  Matrix mat;  // dim^degree square
};

// Largest degree any operator construction will attempt. Default 10,
// overridden by NICHOLS_DEGREE_CAP at startup or set_degree_cap at runtime.
unsigned degree_cap();
void set_degree_cap(unsigned cap);

// c acting on tensor slots (i, i+1) of a degree-m element; 1 <= i <= m-1.
TensorElem apply_c_i(const BraidingSpec& c, unsigned i, const TensorElem& u);
Matrix c_i_operator(const BraidingSpec& c, unsigned i, unsigned m);

// Product of c_i along a reduced word of the permutation; well defined by
// the braid equation. perm maps position -> image, 0-based, size m <= 8.
DegreeOperator braid_lift(const BraidingSpec& c, const std::vector<unsigned>& perm);

// Sum over j = 0..m-1 of the chains c_1 c_2 ... c_j (c_j applied first);
// splitting the result by first letter gives the V (x) rest coproduct leg.
DegreeOperator coproduct_1_rest(const BraidingSpec& c, unsigned m);
TensorElem coproduct_1_rest_apply(const BraidingSpec& c, const TensorElem& u);

// S_0 = S_1 = id, S_m = (id (x) S_{m-1}) . coproduct_1_rest(m).
DegreeOperator symmetrizer(const BraidingSpec& c, unsigned m);
Matrix symmetrizer_step(const BraidingSpec& c, unsigned m, const Matrix& prev);
TensorElem symmetrizer_apply(const BraidingSpec& c, const TensorElem& u);

unsigned rank(const DegreeOperator& op);
std::vector<TensorElem> kernel_basis(const DegreeOperator& op);

}  // namespace nichols
