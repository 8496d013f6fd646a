#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace taftknot {

// Exact rational. Small values live in a reduced int64 pair; anything that
// overflows moves to a shared GMP value.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : num_(v) {}  // NOLINT(implicit)
  Rational(int v) : num_(v) {}        // NOLINT(implicit)
  Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (n == LLONG_MIN || d == LLONG_MIN) {
      set_big(mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))));
      return;
    }
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
  }
  explicit Rational(const mpq_class& q) { set_big(q); }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class r(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return r;
  }
  // Numerator and denominator as GMP integers.
  mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
  mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

  bool fits_small() const { return !big_; }
  long long small_num() const { return num_; }
  long long small_den() const { return den_; }

  Rational operator-() const {
    if (!big_ && num_ != LLONG_MIN) return raw(-num_, den_);
    return Rational(mpq_class(-to_mpq()));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        long long r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r)) return raw(r, 1);
      } else {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
      }
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        long long r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r)) return raw(r, 1);
      } else {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
      }
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return a * b.inverse();
  }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("rational division by zero");
    if (!big_) return num_ < 0 ? Rational(-den_, -num_) : raw(den_, num_);
    return Rational(mpq_class(1 / *big_));
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (!a.big_ || !b.big_) return false;  // canonical: big only when it does not fit
    return *a.big_ == *b.big_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
  }

  std::string str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rational raw(long long n, long long d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  static Rational from128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    if (n >= LLONG_MIN + 1 && n <= LLONG_MAX && d <= LLONG_MAX) return raw(static_cast<long long>(n), static_cast<long long>(d));
    return Rational(mpq_class(to_mpz(n), to_mpz(d)));
  }
  static mpz_class to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }
  void set_big(mpq_class q) {
    q.canonicalize();
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
      long n = q.get_num().get_si(), d = q.get_den().get_si();
      if (n != LONG_MIN) {
        num_ = n;
        den_ = d;
        big_.reset();
        return;
      }
    }
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace taftknot
