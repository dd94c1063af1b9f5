#include "nichols/tensor.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "nichols/kernels.hpp"

namespace nichols {

std::uint64_t word_index(const Word& w, unsigned dim) {
  std::uint64_t idx = 0;
  for (unsigned char l : w) idx = idx * dim + l;
  return idx;
}

Word index_word(std::uint64_t idx, unsigned dim, unsigned degree) {
  Word w(degree);
  for (unsigned t = degree; t-- > 0;) {
    w[t] = static_cast<unsigned char>(idx % dim);
    idx /= dim;
  }
  return w;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (unsigned char l : w) s += "x" + std::to_string(l + 1);
  return s;
}

TensorElem TensorElem::monomial(const Field& f, unsigned dim, Word w) {
  return monomial(f, dim, std::move(w), Scalar::one(f));
}

TensorElem TensorElem::monomial(const Field& f, unsigned dim, Word w,
                                Scalar c) {
  TensorElem e(f, dim, static_cast<unsigned>(w.size()));
  e.add_term(w, c);
  return e;
}

void TensorElem::add_term(const Word& w, const Scalar& c) {
  if (w.size() != degree_) throw std::invalid_argument("degree mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  if (degree_ != o.degree_ || dim_ != o.dim_ || f_ != o.f_) {
    throw std::invalid_argument("tensor element shape mismatch");
  }
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  if (degree_ != o.degree_ || dim_ != o.dim_ || f_ != o.f_) {
    throw std::invalid_argument("tensor element shape mismatch");
  }
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

TensorElem& TensorElem::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

TensorElem TensorElem::operator-() const {
  TensorElem out(*f_, dim_, degree_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

bool TensorElem::operator==(const TensorElem& o) const {
  return f_ == o.f_ && dim_ == o.dim_ && degree_ == o.degree_ &&
         terms_ == o.terms_;
}

std::vector<Scalar> TensorElem::dense() const {
  std::uint64_t n = 1;
  for (unsigned t = 0; t < degree_; ++t) n *= dim_;
  std::vector<Scalar> v(n, Scalar(*f_));
  for (const auto& [w, c] : terms_) v[word_index(w, dim_)] = c;
  return v;
}

TensorElem TensorElem::from_dense(const Field& f, unsigned dim,
                                  unsigned degree,
                                  const std::vector<Scalar>& v) {
  TensorElem e(f, dim, degree);
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) e.add_term(index_word(i, dim, degree), v[i]);
  }
  return e;
}

std::string TensorElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c.is_one()) {
      out += word_str(w);
      continue;
    }
    std::string cs = c.str();
    bool composite = cs.find(' ') != std::string::npos;
    out += composite ? "(" + cs + ")" : cs;
    out += "*" + word_str(w);
  }
  return out;
}

namespace {

std::atomic<unsigned> g_degree_cap{[] {
  const char* s = std::getenv("NICHOLS_DEGREE_CAP");
  if (!s) return 10u;
  long v = std::atol(s);
  return v > 0 ? static_cast<unsigned>(v) : 10u;
}()};

void check_cap(unsigned m) {
  if (m > degree_cap()) {
    throw std::runtime_error("degree " + std::to_string(m) +
                             " exceeds the configured cap " +
                             std::to_string(degree_cap()));
  }
}

void check_slot(unsigned i, unsigned m) {
  if (i < 1 || i + 1 > m) {
    throw std::out_of_range("chain index " + std::to_string(i) +
                            " out of range for degree " + std::to_string(m));
  }
}

}  // namespace

unsigned degree_cap() { return g_degree_cap.load(); }

void set_degree_cap(unsigned cap) {
  if (cap == 0) throw std::invalid_argument("degree cap must be positive");
  g_degree_cap.store(cap);
}

TensorElem apply_c_i(const BraidingSpec& c, unsigned i, const TensorElem& u) {
  check_slot(i, u.degree());
  const unsigned dim = u.dim();
  TensorElem out(u.field(), dim, u.degree());
  for (const auto& [w, coeff] : u.terms()) {
    unsigned col = w[i - 1] * dim + w[i];
    for (unsigned row = 0; row < dim * dim; ++row) {
      const Scalar& entry = c.op.at(row, col);
      if (entry.is_zero()) continue;
      Word moved = w;
      moved[i - 1] = static_cast<unsigned char>(row / dim);
      moved[i] = static_cast<unsigned char>(row % dim);
      out.add_term(moved, coeff * entry);
    }
  }
  return out;
}

Matrix c_i_operator(const BraidingSpec& c, unsigned i, unsigned m) {
  check_cap(m);
  check_slot(i, m);
  const Field& f = c.op.field();
  unsigned dim = c.dim;
  // id^(i-1) (x) c (x) id^(m-i-1) via Kronecker digits.
  std::uint64_t left = 1, right = 1;
  for (unsigned t = 0; t < i - 1; ++t) left *= dim;
  for (unsigned t = i + 1; t < m; ++t) right *= dim;
  Matrix mid = kron(Matrix::identity(f, static_cast<unsigned>(left)), c.op);
  return kron(mid, Matrix::identity(f, static_cast<unsigned>(right)));
}

namespace {

// Bubble sort by adjacent swaps; each recorded swap kills one inversion,
// so the record read backwards is a reduced word for the permutation.
std::vector<unsigned> reduced_word(std::vector<unsigned> w) {
  std::vector<unsigned> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (unsigned j = 0; j + 1 < w.size(); ++j) {
      if (w[j] > w[j + 1]) {
        std::swap(w[j], w[j + 1]);
        swaps.push_back(j + 1);  // 1-based chain index
        moved = true;
      }
    }
  }
  return {swaps.rbegin(), swaps.rend()};
}

}  // namespace

DegreeOperator braid_lift(const BraidingSpec& c,
                          const std::vector<unsigned>& perm) {
  unsigned m = static_cast<unsigned>(perm.size());
  if (m > 8) throw std::invalid_argument("permutation degree above 8");
  check_cap(m);
  std::vector<bool> seen(m, false);
  for (unsigned v : perm) {
    if (v >= m || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  std::uint64_t n = 1;
  for (unsigned t = 0; t < m; ++t) n *= c.dim;
  Matrix acc = Matrix::identity(c.op.field(), static_cast<unsigned>(n));
  for (unsigned j : reduced_word(perm)) {
    acc = mat_mul(acc, c_i_operator(c, j, m));
  }
  return DegreeOperator{c.dim, m, std::move(acc)};
}

DegreeOperator coproduct_1_rest(const BraidingSpec& c, unsigned m) {
  if (m < 1) throw std::invalid_argument("degree must be at least 1");
  check_cap(m);
  const Field& f = c.op.field();
  std::uint64_t n = 1;
  for (unsigned t = 0; t < m; ++t) n *= c.dim;
  Matrix sum = Matrix::identity(f, static_cast<unsigned>(n));
  Matrix chain = Matrix::identity(f, static_cast<unsigned>(n));
  for (unsigned j = 1; j < m; ++j) {
    // chain_j = c_1 ... c_j; right-multiplying appends the first-applied map.
    chain = mat_mul(chain, c_i_operator(c, j, m));
    for (unsigned r = 0; r < sum.rows(); ++r) {
      for (unsigned col = 0; col < sum.cols(); ++col) {
        sum.at(r, col) += chain.at(r, col);
      }
    }
  }
  return DegreeOperator{c.dim, m, std::move(sum)};
}

TensorElem coproduct_1_rest_apply(const BraidingSpec& c,
                                  const TensorElem& u) {
  if (u.degree() < 1) throw std::invalid_argument("degree must be at least 1");
  TensorElem sum = u;
  for (unsigned j = 1; j < u.degree(); ++j) {
    // The chain c_1 ... c_j applies c_j first.
    TensorElem next = apply_c_i(c, j, u);
    for (unsigned i = j - 1; i >= 1; --i) next = apply_c_i(c, i, next);
    sum += next;
  }
  return sum;
}

Matrix symmetrizer_step(const BraidingSpec& c, unsigned m,
                        const Matrix& prev) {
  Matrix delta = coproduct_1_rest(c, m).mat;
  return mat_mul(kron(Matrix::identity(c.op.field(), c.dim), prev), delta);
}

DegreeOperator symmetrizer(const BraidingSpec& c, unsigned m) {
  check_cap(m);
  const Field& f = c.op.field();
  if (m == 0) return DegreeOperator{c.dim, 0, Matrix::identity(f, 1)};
  Matrix s = Matrix::identity(f, c.dim);
  for (unsigned k = 2; k <= m; ++k) s = symmetrizer_step(c, k, s);
  return DegreeOperator{c.dim, m, std::move(s)};
}

TensorElem symmetrizer_apply(const BraidingSpec& c, const TensorElem& u) {
  if (u.degree() <= 1) return u;
  TensorElem delta = coproduct_1_rest_apply(c, u);
  // Split off the first letter, recurse on each component, reassemble.
  const unsigned dim = u.dim();
  TensorElem out(u.field(), dim, u.degree());
  for (unsigned a = 0; a < dim; ++a) {
    TensorElem comp(u.field(), dim, u.degree() - 1);
    for (const auto& [w, coeff] : delta.terms()) {
      if (w[0] == a) comp.add_term(Word(w.begin() + 1, w.end()), coeff);
    }
    if (comp.is_zero()) continue;
    TensorElem sym = symmetrizer_apply(c, comp);
    for (const auto& [w, coeff] : sym.terms()) {
      Word full;
      full.reserve(w.size() + 1);
      full.push_back(static_cast<unsigned char>(a));
      full.insert(full.end(), w.begin(), w.end());
      out.add_term(full, coeff);
    }
  }
  return out;
}

unsigned rank(const DegreeOperator& op) { return rank(op.mat); }

std::vector<TensorElem> kernel_basis(const DegreeOperator& op) {
  std::vector<TensorElem> out;
  for (const auto& v : kernel_basis(op.mat)) {
    out.push_back(TensorElem::from_dense(op.mat.field(), op.dim, op.degree, v));
  }
  return out;
}

}  // namespace nichols
