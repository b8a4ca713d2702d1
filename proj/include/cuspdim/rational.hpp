#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cuspdim {

using BigInt = mpz_class;

// Reduced fraction over arbitrary-precision integers.  Invariants: den >= 1
// and gcd(|num|, den) == 1 after every operation (GMP canonical form).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : q_(make_canonical(n, d)) {}
  explicit Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& n, const BigInt& d) : q_(make_canonical(n, d)) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { canonicalize(); }
  // Unevaluated GMP expression templates (e.g. P * P - 1) land here rather
  // than picking ambiguously between the BigInt and mpq_class conversions.
  template <typename T, typename U>
  explicit Rational(const __gmp_expr<T, U>& e) : q_(e) {
    canonicalize();
  }

  // Exact conversion; every double is a dyadic rational.
  static Rational from_double(double x) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(std::move(q));
  }

  const mpq_class& raw() const { return q_; }
  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Requires den == 1.
  BigInt as_integer() const {
    if (!is_integer()) throw std::logic_error("Rational::as_integer: " + to_string() + " is not integral");
    return q_.get_num();
  }

  BigInt floor() const {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
  }

  double to_double() const { return q_.get_d(); }

  // "num/den", or just "num" when integral.
  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational pow(unsigned e) const {
    Rational r(1), b = *this;
    while (e != 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e != 0) b *= b;
    }
    return r;
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static mpq_class make_canonical(const BigInt& n, const BigInt& d) {
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
  static mpq_class make_canonical(std::int64_t n, std::int64_t d) {
    return make_canonical(BigInt(static_cast<long>(n)), BigInt(static_cast<long>(d)));
  }
  void canonicalize() { q_.canonicalize(); }

  mpq_class q_;
};

inline Rational operator*(const BigInt& a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, const BigInt& b) { return a * Rational(b); }

}  // namespace cuspdim
