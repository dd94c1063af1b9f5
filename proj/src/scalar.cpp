#include "nichols/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nichols {

namespace {

// Integer polynomials, value[i] = coefficient of x^i, no trailing zeros.
using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient; remainder is known to vanish for cyclotomic factors.
ZPoly z_div_exact(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  while (num.size() >= den.size() && !num.empty()) {
    Integer c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    z_trim(num);
  }
  return q;
}

// Phi_n by dividing x^n - 1 by every proper cyclotomic factor.
ZPoly cyclotomic(unsigned n, std::map<unsigned, ZPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  ZPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = z_div_exact(std::move(p), cyclotomic(d, memo));
  }
  memo[n] = p;
  return p;
}

}  // namespace

Field::Field(unsigned n) : n_(n) {
  static std::map<unsigned, ZPoly> memo;  // guarded by the intern mutex
  modulus_ = cyclotomic(n, memo);
}

const Field& Field::of(unsigned conductor) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Field>> interned;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = interned[conductor];
  if (!slot) slot.reset(new Field(conductor));
  return *slot;
}

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (&a != &b) {
    throw std::invalid_argument("conductor mismatch: " +
                                std::to_string(a.conductor()) + " vs " +
                                std::to_string(b.conductor()));
  }
}

}  // namespace

Scalar Scalar::zeta(const Field& f) {
  Scalar s(f);
  if (f.degree() == 1) {
    // Phi_1 = x - 1 or Phi_2 = x + 1: zeta is already rational.
    s.c_[0] = f.conductor() == 1 ? 1 : -1;
  } else {
    s.c_[1] = 1;
  }
  return s;
}

Scalar Scalar::of(const Field& f, const Rational& r) {
  Scalar s(f);
  s.c_[0] = r;
  return s;
}

bool Scalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool Scalar::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(),
                     [](const Rational& r) { return r == 0; });
}

Scalar Scalar::operator-() const {
  Scalar s(*f_);
  for (unsigned i = 0; i < c_.size(); ++i) s.c_[i] = -c_[i];
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(*f_, *o.f_);
  for (unsigned i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(*f_, *o.f_);
  for (unsigned i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

void Scalar::reduce(std::vector<Rational>& work) {
  const auto& mod = f_->modulus();
  const std::size_t d = mod.size() - 1;
  for (std::size_t i = work.size(); i-- > d;) {
    if (work[i] == 0) continue;
    Rational c = work[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (mod[j] != 0) work[i - d + j] -= c * Rational(mod[j]);
    }
    work[i] = 0;
  }
  work.resize(d);
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(*f_, *o.f_);
  const unsigned d = f_->degree();
  std::vector<Rational> prod(2 * d - 1);
  for (unsigned i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce(prod);
  c_ = std::move(prod);
  return *this;
}

namespace {

// Rational polynomials for the inversion routine only.
using QPoly = std::vector<Rational>;

void q_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_rem(QPoly num, const QPoly& den, QPoly& quot) {
  quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, 0);
  while (num.size() >= den.size() && !num.empty()) {
    Rational c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    q_trim(num);
  }
  return num;
}

}  // namespace

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // Extended Euclid against the (irreducible) modulus: the gcd is a nonzero
  // constant g with u*this + v*Phi = g, so this^{-1} = u/g.
  QPoly a(f_->modulus().begin(), f_->modulus().end());
  QPoly b(c_.begin(), c_.end());
  q_trim(b);
  QPoly u0, u1{Rational(1)};  // Bezout coefficients tracking b
  while (true) {
    QPoly quot;
    QPoly r = q_rem(a, b, quot);
    // u2 = u0 - quot * u1
    QPoly u2 = u0;
    u2.resize(std::max(u2.size(), quot.size() + u1.size()), 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (std::size_t j = 0; j < u1.size(); ++j) u2[i + j] -= quot[i] * u1[j];
    }
    q_trim(u2);
    if (r.empty()) break;  // b divides a: b is the gcd, u1 its cofactor
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (b.size() != 1) throw std::logic_error("modulus not irreducible");
  Scalar out(*f_);
  for (std::size_t i = 0; i < u1.size() && i < out.c_.size(); ++i) {
    out.c_[i] = u1[i] / b[0];
  }
  return out;
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  Scalar acc = one(*f_);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(*f_, *o.f_);
  return c_ == o.c_;
}

std::string Scalar::str() const {
  std::string out;
  for (unsigned j = 0; j < c_.size(); ++j) {
    const Rational& c = c_[j];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (j == 0) {
        out = c.get_str();
        continue;
      }
      // A leading minus cannot attach to a bare zpow in the grammar, so
      // spell the coefficient out.
      if (neg) {
        out = "-" + mag.get_str() + "*";
      } else if (mag != 1) {
        out = mag.get_str() + "*";
      }
    } else {
      out += neg ? " - " : " + ";
      if (mag != 1) out += mag.get_str() + "*";
    }
    if (j > 0) out += j == 1 ? "z" : "z^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

namespace {

struct ScalarParser {
  std::string s;  // input with whitespace stripped
  std::size_t pos = 0;
  const Field& f;

  explicit ScalarParser(std::string_view text, const Field& field) : f(field) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scalar parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  Integer parse_uint() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    return Integer(s.substr(start, pos - start));
  }

  Scalar parse_zpow() {
    if (peek() != 'z') fail("expected 'z'");
    ++pos;
    unsigned long e = 1;
    if (peek() == '^') {
      ++pos;
      Integer raw = parse_uint();
      e = mpz_class(raw % f.conductor()).get_ui();
    }
    return Scalar::zeta(f).pow(static_cast<long>(e % f.conductor()));
  }

  Rational parse_coeff() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    Integer num = parse_uint();
    Integer den = 1;
    if (peek() == '/') {
      ++pos;
      den = parse_uint();
      if (den == 0) fail("division by zero");
    }
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  Scalar parse_term() {
    if (peek() == 'z') return parse_zpow();
    Rational c = parse_coeff();
    if (peek() == '*') {
      ++pos;
      return Scalar::of(f, c) * parse_zpow();
    }
    return Scalar::of(f, c);
  }

  Scalar parse_expr() {
    Scalar acc = parse_term();
    while (!done()) {
      char op = peek();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      ++pos;
      Scalar t = parse_term();
      if (op == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }
};

}  // namespace

Scalar parse_scalar(std::string_view text, unsigned conductor) {
  ScalarParser p(text, Field::of(conductor));
  if (p.s.empty()) p.fail("empty input");
  return p.parse_expr();
}

UnityOrder root_of_unity_order(const Scalar& s, unsigned bound) {
  if (s.is_zero()) throw std::domain_error("order of zero is undefined");
  Scalar acc = s;
  for (unsigned n = 1; n <= bound; ++n) {
    if (acc.is_one()) return UnityOrder::finite(n);
    acc *= s;
  }
  return UnityOrder::infinite();
}

Scalar q_number(unsigned n, const Scalar& q) {
  Scalar acc = Scalar::zero(q.field());
  Scalar p = Scalar::one(q.field());
  for (unsigned j = 0; j < n; ++j) {
    acc += p;
    p *= q;
  }
  return acc;
}

Scalar q_factorial(unsigned n, const Scalar& q) {
  Scalar acc = Scalar::one(q.field());
  for (unsigned j = 1; j <= n; ++j) acc *= q_number(j, q);
  return acc;
}

Scalar q_binomial(unsigned n, unsigned i, const Scalar& q) {
  if (i > n) throw std::invalid_argument("q_binomial requires i <= n");
  // Row-by-row q-Pascal; row[i] holds binom(r,i)_q while row r is current.
  std::vector<Scalar> row{Scalar::one(q.field())};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<Scalar> next(std::min(r, i) + 1, Scalar::zero(q.field()));
    Scalar qp = Scalar::one(q.field());  // q^col
    for (unsigned col = 0; col < next.size(); ++col) {
      if (col == 0 || col == r) {
        next[col] = Scalar::one(q.field());
      } else {
        next[col] = row[col - 1];
        if (col < row.size()) next[col] += qp * row[col];
      }
      qp *= q;
    }
    row = std::move(next);
  }
  return row.at(i);
}

}  // namespace nichols
