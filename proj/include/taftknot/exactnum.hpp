#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "taftknot/rational.hpp"

namespace taftknot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RingMismatch : Error {
  using Error::Error;
};
struct NotInvertible : Error {
  using Error::Error;
};
struct LiftError : Error {
  using Error::Error;
};

inline long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------------
// Q[x]/Phi_ell(x)

namespace detail {

using IPoly = std::vector<long long>;  // low to high

inline void trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of integer polynomials by a monic divisor
inline IPoly divide_monic(IPoly a, const IPoly& b) {
  IPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    long long c = a[i];
    if (c == 0) continue;
    int sh = i - static_cast<int>(b.size()) + 1;
    q[sh] = c;
    for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw Error("cyclotomic division not exact");
  return q;
}

inline IPoly cyclotomic(int m, std::map<int, IPoly>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  IPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = divide_monic(p, cyclotomic(d, memo));
  memo[m] = p;
  return p;
}

}  // namespace detail

struct CycField {
  int ell = 0;
  int phi = 0;
  std::vector<long long> modulus;             // monic, size phi+1
  std::vector<std::vector<long long>> xpow;   // x^k mod Phi for k < max(2*phi, ell)
};

inline const CycField* cyc_field(int ell) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycField>> cache;
  if (ell < 2) throw Error("cyclotomic order must be at least 2");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ell];
  if (!slot) {
    auto f = std::make_unique<CycField>();
    std::map<int, detail::IPoly> memo;
    f->ell = ell;
    f->modulus = detail::cyclotomic(ell, memo);
    f->phi = static_cast<int>(f->modulus.size()) - 1;
    int top = std::max(2 * f->phi, ell + 1);
    std::vector<long long> cur(f->phi, 0);
    if (f->phi > 0) cur[0] = 1;
    for (int k = 0; k < top; ++k) {
      f->xpow.push_back(cur);
      // multiply by x
      long long carry = cur.back();
      for (int i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < f->phi; ++i) cur[i] -= carry * f->modulus[i];
    }
    slot = std::move(f);
  }
  return slot.get();
}

// Element of Q(zeta_ell), x = q. Empty coefficient list means zero.
class Cyc {
 public:
  using Coeffs = boost::container::small_vector<Rational, 12>;

  Cyc() = default;
  Cyc(const CycField* f, const Rational& c) : f_(f) {
    if (!c.is_zero()) {
      c_.assign(f->phi, Rational());
      c_[0] = c;
    }
  }
  static Cyc zero(int ell) { return Cyc(cyc_field(ell), Rational()); }
  static Cyc one(int ell) { return Cyc(cyc_field(ell), Rational(1)); }
  static Cyc integer(int ell, long long v) { return Cyc(cyc_field(ell), Rational(v)); }
  // q^e, e taken mod ell
  static Cyc q(int ell, long long e) { return q(cyc_field(ell), e); }
  static Cyc q(const CycField* f, long long e) {
    Cyc r;
    r.f_ = f;
    const auto& row = f->xpow[mod(e, f->ell)];
    r.c_.assign(row.begin(), row.end());
    r.normalize();
    return r;
  }
  static Cyc from_coeffs(const CycField* f, const std::vector<Rational>& cs) {
    Cyc r;
    r.f_ = f;
    r.c_.assign(f->phi, Rational());
    for (size_t k = 0; k < cs.size(); ++k) {
      if (cs[k].is_zero()) continue;
      if (static_cast<int>(k) < f->phi) {
        r.c_[k] += cs[k];
      } else {
        const auto& row = f->xpow[k % f->ell];
        for (int i = 0; i < f->phi; ++i)
          if (row[i]) r.c_[i] += cs[k] * Rational(row[i]);
      }
    }
    r.normalize();
    return r;
  }

  const CycField* field() const { return f_; }
  int ell() const { return f_ ? f_->ell : 0; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const {
    if (c_.empty() || !c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return false;
    return true;
  }
  // coefficient of x^k in the reduced residue
  Rational coeff(int k) const { return c_.empty() || k >= static_cast<int>(c_.size()) ? Rational() : c_[k]; }
  std::vector<Rational> coeffs() const {
    std::vector<Rational> out(f_ ? f_->phi : 0);
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    return out;
  }

  Cyc operator-() const {
    Cyc r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Cyc operator+(const Cyc& a, const Cyc& b) {
    if (a.c_.empty()) return b.f_ || !a.f_ ? b : Cyc(a.f_, Rational());
    if (b.c_.empty()) return a;
    check(a, b);
    Cyc r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
  }
  friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }
  friend Cyc operator*(const Cyc& a, const Cyc& b) {
    if (a.c_.empty() || b.c_.empty()) {
      Cyc z;
      z.f_ = a.f_ ? a.f_ : b.f_;
      if (a.f_ && b.f_) check(a, b);
      return z;
    }
    check(a, b);
    const CycField* f = a.f_;
    int phi = f->phi;
    boost::container::small_vector<Rational, 24> conv(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; j < phi; ++j) {
        if (b.c_[j].is_zero()) continue;
        conv[i + j] += a.c_[i] * b.c_[j];
      }
    }
    Cyc r;
    r.f_ = f;
    r.c_.assign(conv.begin(), conv.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
      if (conv[k].is_zero()) continue;
      const auto& row = f->xpow[k];
      for (int i = 0; i < phi; ++i)
        if (row[i]) r.c_[i] += conv[k] * Rational(row[i]);
    }
    r.normalize();
    return r;
  }
  friend Cyc operator*(const Cyc& a, const Rational& s) {
    if (s.is_zero() || a.c_.empty()) {
      Cyc z;
      z.f_ = a.f_;
      return z;
    }
    Cyc r = a;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  Cyc inverse() const;
  Cyc pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    if (!f_) throw RingMismatch("power of a field-less zero");
    Cyc result = one(f_->ell), base = *this;
    while (k) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  friend bool operator==(const Cyc& a, const Cyc& b) {
    if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
    check(a, b);
    return std::equal(a.c_.begin(), a.c_.end(), b.c_.begin());
  }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // residue as a polynomial in q, ascending
  std::string str() const;

 private:
  static void check(const Cyc& a, const Cyc& b) {
    if (a.f_ && b.f_ && a.f_ != b.f_) throw RingMismatch("cyclotomic elements of different orders");
  }
  void normalize() {
    for (const auto& c : c_)
      if (!c.is_zero()) return;
    c_.clear();
  }

  const CycField* f_ = nullptr;
  Coeffs c_;
};

namespace detail {

using RPoly = std::vector<Rational>;

inline void trim(RPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline RPoly sub_mul(const RPoly& a, const RPoly& b, const RPoly& c) {
  // a - b*c
  RPoly r = a;
  if (b.empty() || c.empty()) return r;
  if (r.size() < b.size() + c.size() - 1) r.resize(b.size() + c.size() - 1);
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) r[i + j] -= b[i] * c[j];
  trim(r);
  return r;
}

inline std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  RPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational());
  Rational lead_inv = b.back().inverse();
  for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
    if (a[i].is_zero()) continue;
    Rational c = a[i] * lead_inv;
    int sh = i - static_cast<int>(b.size()) + 1;
    q[sh] = c;
    for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

}  // namespace detail

inline Cyc Cyc::inverse() const {
  if (c_.empty()) throw NotInvertible("division by zero in cyclotomic field");
  // extended Euclid: find s with s*a = 1 mod Phi
  detail::RPoly r0(f_->modulus.begin(), f_->modulus.end()), r1(c_.begin(), c_.end());
  detail::trim(r1);
  detail::RPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [qt, rem] = detail::divmod(r0, r1);
    detail::RPoly s2 = detail::sub_mul(s0, qt, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw NotInvertible("element shares a factor with the cyclotomic modulus");
  Rational k = r0[0].inverse();
  for (auto& c : s0) c *= k;
  return from_coeffs(f_, s0);
}

// ---------------------------------------------------------------------------
// text helpers

namespace detail {

// one term of a signed sum; `mono` is the monomial text or empty for 1
inline void append_term(std::string& out, const Rational& c, const std::string& mono) {
  bool neg = c.sign() < 0;
  Rational a = neg ? -c : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (mono.empty()) {
    out += a.str();
  } else if (a.is_one()) {
    out += mono;
  } else {
    out += a.str() + "*" + mono;
  }
}

// exponent e/den, reduced; e.g. (2,4) -> "1/2"
inline std::string frac_exp(long long e, long long den) {
  long long g = std::gcd(e < 0 ? -e : e, den);
  long long n = e / g, d = den / g;
  return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
}

inline std::string mono(const std::string& var, long long e, long long den = 1) {
  if (e == 0) return "";
  if (e == den) return var;
  return var + "^" + frac_exp(e, den);
}

}  // namespace detail

inline std::string Cyc::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) detail::append_term(out, c_[k], detail::mono("q", static_cast<long long>(k)));
  return out;
}

// ---------------------------------------------------------------------------
// Laurent polynomials in s, where s^4 stands for q

class Laurent {
 public:
  using Map = std::map<long long, Rational>;

  Laurent() = default;
  Laurent(const Rational& c) {  // NOLINT(implicit)
    if (!c.is_zero()) t_[0] = c;
  }
  Laurent(long long c) : Laurent(Rational(c)) {}  // NOLINT(implicit)
  static Laurent s_pow(long long k, const Rational& c = Rational(1)) {
    Laurent r;
    if (!c.is_zero()) r.t_[k] = c;
    return r;
  }
  static Laurent q_pow(long long k, const Rational& c = Rational(1)) { return s_pow(4 * k, c); }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(long long k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Rational() : it->second;
  }
  long long min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
  long long max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  bool is_monomial() const { return t_.size() == 1; }

  void add_term(long long k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }
  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [i, x] : a.t_)
      for (const auto& [j, y] : b.t_) r.add_term(i + j, x * y);
    return r;
  }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  Laurent pow(long long k) const {
    if (k < 0) {
      if (!is_monomial()) throw NotInvertible("negative power of a non-monomial Laurent polynomial");
      auto [e, c] = *t_.begin();
      return s_pow(-e, c.inverse()).pow(-k);
    }
    Laurent r(1), b = *this;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  // s -> s^-1
  Laurent bar() const {
    Laurent r;
    for (const auto& [k, c] : t_) r.t_[-k] = c;
    return r;
  }
  // s -> -s^... : substitute s^k -> sign^k s^(k*scale)
  Laurent substitute(long long scale, int sign) const {
    Laurent r;
    for (const auto& [k, c] : t_) r.add_term(k * scale, (sign < 0 && (k % 2 != 0)) ? -c : c);
    return r;
  }
  bool integral() const {
    for (const auto& [k, c] : t_)
      if (!c.is_integer()) return false;
    return true;
  }

  // Exact quotient; throws when b does not divide *this.
  Laurent divide(const Laurent& b) const {
    if (b.is_zero()) throw NotInvertible("Laurent division by zero");
    Laurent rem = *this, quo;
    long long span_b = b.max_exp() - b.min_exp();
    auto [lb, cb] = *b.t_.begin();
    Rational cb_inv = cb.inverse();
    while (!rem.is_zero()) {
      if (rem.max_exp() - rem.min_exp() < span_b) throw NotInvertible("Laurent division not exact");
      auto [lr, cr] = *rem.t_.begin();
      Laurent step = s_pow(lr - lb, cr * cb_inv);
      quo += step;
      rem -= step * b;
    }
    return quo;
  }

  // textual forms: in q (exponents in quarters reduced) and raw in s
  std::string str_q() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) detail::append_term(out, c, detail::mono("q", k, 4));
    return out;
  }
  std::string str_s() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) detail::append_term(out, c, detail::mono("s", k));
    return out;
  }
  // true if every exponent is a multiple of 4 (a polynomial in q)
  bool integer_q_powers() const {
    for (const auto& [k, c] : t_)
      if (k % 4 != 0) return false;
    return true;
  }

 private:
  Map t_;
};

// ---------------------------------------------------------------------------
// specialization s -> q^((ell+1)^2/4 mod ell)

inline long long s_exponent(int ell) {
  if (ell < 3 || ell % 2 == 0) throw Error("specialization needs odd ell >= 3, got " + std::to_string(ell));
  long long h = (ell + 1) / 2;
  return mod(h * h, ell);
}

// q^(k/4) with the quarter-power convention
inline Cyc q_quarter(int ell, long long k) { return Cyc::q(ell, k * s_exponent(ell)); }

inline Cyc specialize(const Laurent& p, int ell) {
  long long es = s_exponent(ell);
  const CycField* f = cyc_field(ell);
  std::vector<Rational> cs(ell);
  for (const auto& [k, c] : p.terms()) cs[mod(k * es, ell)] += c;
  return Cyc::from_coeffs(f, cs);
}

// ---------------------------------------------------------------------------
// lifting from Q(zeta_ell) back to Z[s, s^-1]

namespace detail {

// Solve A x = b over Q for a full-column-rank A (rows >= cols).
// Returns nullopt when inconsistent, throws if rank deficient.
inline std::optional<std::vector<Rational>> solve_full_rank(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                            bool& deficient) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  deficient = false;
  size_t r = 0;
  std::vector<size_t> pivcol;
  for (size_t c = 0; c < cols; ++c) {
    size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) {
      deficient = true;
      return std::nullopt;
    }
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = a[r][c].inverse();
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<Rational> x(cols);
  for (size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
  return x;
}

}  // namespace detail

// Lift cyclotomic values to the unique integer combination of the monomials
// s^(4k+offset), k in [lo, hi]. offset 0 gives a polynomial in q.
inline Laurent lift_to_laurent(const std::vector<std::pair<int, Cyc>>& values, long long lo, long long hi, int offset = 0) {
  if (values.empty()) throw LiftError("no values to lift");
  if (hi < lo) throw LiftError("empty lift window");
  size_t width = static_cast<size_t>(hi - lo + 1);
  std::optional<Laurent> found;
  for (const auto& [ell, value] : values) {
    const CycField* f = cyc_field(ell);
    if (value.field() && value.field() != f) throw RingMismatch("lift value does not match its ell");
    if (width > static_cast<size_t>(f->phi)) continue;
    std::vector<std::vector<Rational>> a(f->phi, std::vector<Rational>(width));
    for (size_t j = 0; j < width; ++j) {
      Cyc m = specialize(Laurent::s_pow(4 * (lo + static_cast<long long>(j)) + offset), ell);
      for (int i = 0; i < f->phi; ++i) a[i][j] = m.coeff(i);
    }
    bool deficient = false;
    auto x = detail::solve_full_rank(a, value.coeffs(), deficient);
    if (deficient) continue;
    if (!x) throw LiftError("no solution in the window at ell=" + std::to_string(ell));
    Laurent p;
    for (size_t j = 0; j < width; ++j) {
      if (!(*x)[j].is_integer()) throw LiftError("non-integral lift at ell=" + std::to_string(ell));
      p.add_term(4 * (lo + static_cast<long long>(j)) + offset, (*x)[j]);
    }
    found = p;
    break;
  }
  if (!found) throw LiftError("lift window too long for every supplied ell");
  for (const auto& [ell, value] : values)
    if (specialize(*found, ell) != value)
      throw LiftError("lift inconsistent with the value at ell=" + std::to_string(ell));
  return *found;
}

inline std::ostream& operator<<(std::ostream& os, const Cyc& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const Laurent& x) { return os << x.str_s(); }

}  // namespace taftknot
