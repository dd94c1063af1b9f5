// Exact arithmetic in cyclotomic fields Q(zeta_n), plus q-combinatorics.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nichols {

using Rational = mpq_class;
using Integer = mpz_class;

// Q(zeta_n) for a fixed conductor n.  Elements are coefficient vectors of
// length phi(n) reduced against the n-th cyclotomic polynomial, so equality
// is coefficient-wise.  Fields are interned: one immutable instance per
// conductor, safe to share across threads.
class Field {
 public:
  static const Field& of(unsigned conductor);

  unsigned conductor() const { return n_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size()) - 1; }
  // Monic minimal polynomial of zeta_n; modulus()[i] is the coefficient of x^i.
  const std::vector<Integer>& modulus() const { return modulus_; }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  explicit Field(unsigned n);
  unsigned n_;
  std::vector<Integer> modulus_;
};

class Scalar {
 public:
  Scalar() : Scalar(Field::of(1)) {}
  explicit Scalar(const Field& f) : f_(&f), c_(f.degree()) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return of(f, 1); }
  static Scalar zeta(const Field& f);
  static Scalar of(const Field& f, const Rational& r);
  static Scalar of(const Field& f, long v) { return of(f, Rational(v)); }

  const Field& field() const { return *f_; }
  unsigned conductor() const { return f_->conductor(); }
  const Rational& coeff(unsigned i) const { return c_.at(i); }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in Q, i.e. every zeta coefficient vanishes.
  bool is_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a *= b.inv(); }

  Scalar inv() const;        // throws std::domain_error on zero
  Scalar pow(long e) const;  // negative e inverts first

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text form, valid input for parse_scalar at the same conductor.
  std::string str() const;

 private:
  void reduce(std::vector<Rational>& work);

  const Field* f_;
  std::vector<Rational> c_;  // size degree(); c_[i] multiplies zeta^i
};

// Grammar (whitespace ignored, 'z' denotes zeta_conductor):
//   expr  := term (('+'|'-') term)*
//   term  := coeff ('*' zpow)? | zpow
//   zpow  := 'z' ('^' uint)?
//   coeff := '-'? uint ('/' uint)?
// Throws std::invalid_argument with position information on any violation.
Scalar parse_scalar(std::string_view text, unsigned conductor);

// Multiplicative order of a scalar: a positive integer or INFINITE.
struct UnityOrder {
  std::optional<unsigned> n;

  static UnityOrder infinite() { return {}; }
  static UnityOrder finite(unsigned v) { return {v}; }
  bool is_finite() const { return n.has_value(); }
  unsigned value() const { return n.value(); }
  std::string str() const { return n ? std::to_string(*n) : "INFINITE"; }
  bool operator==(const UnityOrder&) const = default;
};

// Smallest N <= bound with s^N = 1, INFINITE if none.  s = 0 is an error.
UnityOrder root_of_unity_order(const Scalar& s, unsigned bound = 1000);

// (n)_q = 1 + q + ... + q^{n-1}; (0)_q = 0.
Scalar q_number(unsigned n, const Scalar& q);
// (n)_q! = (1)_q (2)_q ... (n)_q; (0)_q! = 1.
Scalar q_factorial(unsigned n, const Scalar& q);
// Gaussian binomial via the q-Pascal recursion
//   binom(n,i)_q = binom(n-1,i-1)_q + q^i binom(n-1,i)_q,
// never via quotients, so roots of unity are safe.
Scalar q_binomial(unsigned n, unsigned i, const Scalar& q);

}  // namespace nichols
