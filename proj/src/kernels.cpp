#include "nichols/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nichols {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (unsigned i1 = 0; i1 < a.rows(); ++i1) {
    for (unsigned j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& s = a.at(i1, j1);
      if (s.is_zero()) continue;
      for (unsigned i2 = 0; i2 < b.rows(); ++i2) {
        for (unsigned j2 = 0; j2 < b.cols(); ++j2) {
          if (b.at(i2, j2).is_zero()) continue;
          out.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * b.at(i2, j2);
        }
      }
    }
  }
  return out;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  static const int env_threads = [] {
    const char* s = std::getenv("NICHOLS_KERNEL_THREADS");
    if (!s) return 1;
    int v = std::atoi(s);
    return v > 0 ? v : 1;
  }();
  return env_threads;
}

namespace {

// Runs body(i) for i in [begin, end). Iterations must be independent.
template <class F>
void parallel_rows(int threads, unsigned begin, unsigned end, F body) {
#ifdef _OPENMP
  if (threads > 1 && end > begin + 1) {
    long lo = begin, hi = end;
#pragma omp parallel for num_threads(threads) schedule(static)
    for (long i = lo; i < hi; ++i) body(static_cast<unsigned>(i));
    return;
  }
#else
  (void)threads;
#endif
  for (unsigned i = begin; i < end; ++i) body(i);
}

void check_mul_shapes(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || &a.field() != &b.field()) {
    throw std::invalid_argument("matrix product shape or field mismatch");
  }
}

}  // namespace

Matrix mat_mul(const Matrix& a, const Matrix& b, int threads) {
  check_mul_shapes(a, b);
  int t = resolve_threads(threads);
  Matrix out(a.field(), a.rows(), b.cols());
  // i-k-j with a zero skip on a(i,k): the operators here are sparse
  // Kronecker factors, so most of the inner loops never run.
  parallel_rows(t, 0, a.rows(), [&](unsigned i) {
    for (unsigned k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (unsigned j = 0; j < b.cols(); ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  });
  return out;
}

Echelon echelon(Matrix m, int threads) {
  int t = resolve_threads(threads);
  std::vector<unsigned> pivots;
  unsigned r = 0;
  for (unsigned col = 0; col < m.cols() && r < m.rows(); ++col) {
    // First nonzero entry at or below r: deterministic pivot choice.
    unsigned p = r;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    Scalar inv_pivot = m.at(r, col).inv();
    for (unsigned j = col; j < m.cols(); ++j) m.at(r, j) *= inv_pivot;
    parallel_rows(t, 0, m.rows(), [&](unsigned i) {
      if (i == r || m.at(i, col).is_zero()) return;
      Scalar f = m.at(i, col);
      for (unsigned j = col; j < m.cols(); ++j) {
        m.at(i, j) -= f * m.at(r, j);
      }
    });
    pivots.push_back(col);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

unsigned rank(const Matrix& m, int threads) {
  return echelon(m, threads).rank();
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m, int threads) {
  const Field& f = m.field();
  Echelon e = echelon(m, threads);
  std::vector<bool> is_pivot(m.cols(), false);
  for (unsigned p : e.pivots) is_pivot[p] = true;

  // One spanning vector per free column, then a second elimination pass to
  // land on the unique reduced basis regardless of free-column layout.
  unsigned n_free = m.cols() - e.rank();
  if (n_free == 0) return {};
  Matrix span(f, n_free, m.cols());
  unsigned row = 0;
  for (unsigned c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    span.at(row, c) = Scalar::one(f);
    for (unsigned t = 0; t < e.pivots.size(); ++t) {
      span.at(row, e.pivots[t]) = -e.rref.at(t, c);
    }
    ++row;
  }
  Echelon canon = echelon(std::move(span), threads);
  std::vector<std::vector<Scalar>> out;
  out.reserve(n_free);
  for (unsigned i = 0; i < n_free; ++i) {
    std::vector<Scalar> v;
    v.reserve(m.cols());
    for (unsigned c = 0; c < m.cols(); ++c) v.push_back(canon.rref.at(i, c));
    out.push_back(std::move(v));
  }
  return out;
}

Matrix inverse(const Matrix& m, int threads) {
  if (m.rows() != m.cols()) throw std::invalid_argument("not square");
  unsigned n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  Echelon e = echelon(std::move(aug), threads);
  if (e.rank() != n || e.pivots.back() != n - 1) {
    throw std::invalid_argument("singular matrix");
  }
  Matrix out(m.field(), n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) out.at(i, j) = e.rref.at(i, n + j);
  }
  return out;
}

namespace reference {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_mul_shapes(a, b);
  Matrix out(a.field(), a.rows(), b.cols());
  for (unsigned i = 0; i < a.rows(); ++i) {
    for (unsigned j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::zero(a.field());
      for (unsigned k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = acc;
    }
  }
  return out;
}

Echelon echelon(Matrix m) {
  std::vector<unsigned> pivots;
  unsigned r = 0;
  for (unsigned col = 0; col < m.cols() && r < m.rows(); ++col) {
    unsigned p = r;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    Scalar inv_pivot = m.at(r, col).inv();
    for (unsigned j = col; j < m.cols(); ++j) m.at(r, j) *= inv_pivot;
    for (unsigned i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (unsigned j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

}  // namespace reference

}  // namespace nichols
