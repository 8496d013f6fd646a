#pragma once

#include <array>

#include "taftknot/exactnum.hpp"

namespace taftknot {

// Cyclotomic integer in Z[zeta_ell], power basis below phi(ell), int64 coefficients.
// Compact stand-in for Cyc in structure-constant tables; overflow throws.
class CycInt {
 public:
  static constexpr int kMaxPhi = 12;

  CycInt() = default;
  CycInt(const CycField* f, long long c) : f_(f) {
    check_phi(f);
    c_[0] = c;
  }
  static CycInt zero(const CycField* f) { return CycInt(f, 0); }
  static CycInt one(const CycField* f) { return CycInt(f, 1); }
  static CycInt zero(int ell) { return zero(cyc_field(ell)); }
  static CycInt one(int ell) { return one(cyc_field(ell)); }
  static CycInt q(const CycField* f, long long e) {
    check_phi(f);
    CycInt r;
    r.f_ = f;
    const auto& row = f->xpow[mod(e, f->ell)];
    for (int i = 0; i < f->phi; ++i) r.c_[i] = row[i];
    return r;
  }
  static CycInt q(int ell, long long e) { return q(cyc_field(ell), e); }
  // throws when a coefficient is not an integer
  static CycInt from_cyc(const Cyc& x, const CycField* f) {
    CycInt r(f, 0);
    if (x.is_zero()) return r;
    if (x.field() != f) throw RingMismatch("cyclotomic integer from a different field");
    for (int i = 0; i < f->phi; ++i) {
      Rational c = x.coeff(i);
      if (!c.is_integer() || !c.fits_small()) throw Error("coefficient is not a small integer: " + c.str());
      r.c_[i] = c.small_num();
    }
    return r;
  }
  Cyc to_cyc() const {
    if (!f_) return Cyc();
    std::vector<Rational> cs(f_->phi);
    for (int i = 0; i < f_->phi; ++i) cs[i] = Rational(c_[i]);
    return Cyc::from_coeffs(f_, cs);
  }

  const CycField* field() const { return f_; }
  bool is_zero() const {
    for (long long v : c_)
      if (v) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (int i = 1; i < kMaxPhi; ++i)
      if (c_[i]) return false;
    return true;
  }
  long long coeff(int i) const { return c_[i]; }

  CycInt operator-() const {
    CycInt r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend CycInt operator+(const CycInt& a, const CycInt& b) {
    CycInt r = a;
    r += b;
    return r;
  }
  friend CycInt operator-(const CycInt& a, const CycInt& b) { return a + (-b); }
  CycInt& operator+=(const CycInt& b) {
    if (!f_) f_ = b.f_;
    else if (b.f_ && b.f_ != f_) throw RingMismatch("cyclotomic integers of different orders");
    for (int i = 0; i < kMaxPhi; ++i)
      if (__builtin_add_overflow(c_[i], b.c_[i], &c_[i])) throw Error("cyclotomic integer overflow");
    return *this;
  }
  CycInt& operator-=(const CycInt& b) { return *this += -b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    const CycField* f = a.f_ ? a.f_ : b.f_;
    if (a.f_ && b.f_ && a.f_ != b.f_) throw RingMismatch("cyclotomic integers of different orders");
    CycInt r;
    r.f_ = f;
    if (!f) return r;
    int phi = f->phi;
    std::array<__int128, 2 * kMaxPhi> conv{};
    for (int i = 0; i < phi; ++i) {
      if (!a.c_[i]) continue;
      for (int j = 0; j < phi; ++j) conv[i + j] += static_cast<__int128>(a.c_[i]) * b.c_[j];
    }
    for (int k = 2 * phi - 2; k >= phi; --k) {
      if (!conv[k]) continue;
      const auto& row = f->xpow[k];
      for (int i = 0; i < phi; ++i) conv[i] += conv[k] * row[i];
    }
    for (int i = 0; i < phi; ++i) {
      if (conv[i] > LLONG_MAX || conv[i] < -LLONG_MAX) throw Error("cyclotomic integer overflow");
      r.c_[i] = static_cast<long long>(conv[i]);
    }
    return r;
  }
  CycInt& operator*=(const CycInt& b) { return *this = *this * b; }
  friend bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

  std::string str() const { return to_cyc().str(); }

 private:
  static void check_phi(const CycField* f) {
    if (f->phi > kMaxPhi) throw Error("cyclotomic order too large for the structure-constant scalar");
  }
  const CycField* f_ = nullptr;
  std::array<long long, kMaxPhi> c_{};
};

}  // namespace taftknot
