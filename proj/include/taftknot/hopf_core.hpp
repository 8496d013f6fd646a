#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "taftknot/cycint.hpp"

namespace taftknot {

// ---------------------------------------------------------------------------
// exponent tuples

using Exponent = boost::container::small_vector<int, 6>;

inline Exponent zero_exp(int n) { return Exponent(n, 0); }
inline Exponent unit_exp(int n, int i) {
  Exponent e(n, 0);
  e[i] = 1;
  return e;
}
inline Exponent ones_exp(int n) { return Exponent(n, 1); }
inline Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Exponent operator-(const Exponent& a) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
inline Exponent scale(const Exponent& a, int k) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}
// componentwise reduction into [0, ell-1]
inline Exponent reduce(const Exponent& a, int ell) {
  Exponent r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<int>(mod(a[i], ell));
  return r;
}
inline bool leq(const Exponent& a, const Exponent& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline bool is_zero(const Exponent& a) {
  for (int v : a)
    if (v) return false;
  return true;
}
inline int abs_sum(const Exponent& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}
// a*b = sum_{i>j} a_i b_j
inline long long star(const Exponent& a, const Exponent& b) {
  long long s = 0, prefix = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    s += static_cast<long long>(a[i]) * prefix;
    prefix += b[i];
  }
  return s;
}
inline long long dot(const Exponent& a, const Exponent& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}
inline long long theta_exp(const Exponent& a, const Exponent& b) { return star(a, b) - star(b, a); }
inline Cyc theta(int ell, const Exponent& a, const Exponent& b) { return Cyc::q(ell, theta_exp(a, b)); }

// b~_i = b_1+..+b_i - b_{i+1} - .. - b_n for i < n, b~_n = |b|
inline Exponent tilde(const Exponent& b) {
  int n = static_cast<int>(b.size());
  Exponent r(n);
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += (j <= i || i == n - 1) ? b[j] : -b[j];
    r[i] = s;
  }
  return r;
}

inline std::string exp_str(const Exponent& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

// all gamma with 0 <= gamma <= bound, first coordinate fastest
inline std::vector<Exponent> box(const Exponent& bound) {
  std::vector<Exponent> out;
  Exponent cur(bound.size(), 0);
  while (true) {
    out.push_back(cur);
    size_t i = 0;
    while (i < cur.size() && cur[i] == bound[i]) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// q-integers

// (m choose j)_q: zero unless 0 <= j <= m < ell
inline Cyc gauss_binomial(int ell, int m, int j) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<Cyc>>> cache;
  if (m < 0 || j < 0 || j > m || m >= ell) return Cyc::zero(ell);
  std::lock_guard<std::mutex> lock(mu);
  auto& tab = cache[ell];
  if (tab.empty()) {
    // q-Pascal: (m choose j) = (m-1 choose j-1) + q^j (m-1 choose j)
    tab.assign(ell, std::vector<Cyc>(ell, Cyc::zero(ell)));
    for (int a = 0; a < ell; ++a) {
      tab[a][0] = Cyc::one(ell);
      for (int b = 1; b <= a; ++b) tab[a][b] = tab[a - 1][b - 1] + Cyc::q(ell, b) * tab[a - 1][b];
    }
  }
  return tab[m][j];
}

inline CycInt gauss_binomial_int(int ell, int m, int j) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<CycInt>>> cache;
  if (m < 0 || j < 0 || j > m || m >= ell) return CycInt::zero(ell);
  std::lock_guard<std::mutex> lock(mu);
  auto& tab = cache[ell];
  if (tab.empty()) {
    const CycField* f = cyc_field(ell);
    tab.assign(ell, std::vector<CycInt>(ell));
    for (int a = 0; a < ell; ++a)
      for (int b = 0; b <= a; ++b) tab[a][b] = CycInt::from_cyc(gauss_binomial(ell, a, b), f);
  }
  return tab[m][j];
}

// per-entry lazily computed table, safe for concurrent readers
template <class T>
class LazyTable {
 public:
  explicit LazyTable(size_t n = 0) : flags_(n), vals_(n) {}
  template <class F>
  const T& get(size_t i, F&& make) const {
    std::call_once(flags_[i], [&] { vals_[i] = make(); });
    return vals_[i];
  }

 private:
  mutable std::vector<std::once_flag> flags_;
  mutable std::vector<T> vals_;
};

// (m)_q and (m)_q!
inline Cyc q_integer(int ell, int m) {
  Cyc s = Cyc::zero(ell);
  for (int k = 0; k < m; ++k) s += Cyc::q(ell, k);
  return s;
}
inline Cyc q_factorial(int ell, int m) {
  Cyc f = Cyc::one(ell);
  for (int k = 1; k <= m; ++k) f *= q_integer(ell, k);
  return f;
}

// ---------------------------------------------------------------------------
// sparse elements

struct Term {
  long long key;
  CycInt c;
};
using Elem = std::vector<Term>;

inline Elem canon(Elem v) {
  // sort light (key, position) pairs, then gather
  std::vector<std::pair<long long, size_t>> order(v.size());
  for (size_t i = 0; i < v.size(); ++i) order[i] = {v[i].key, i};
  std::sort(order.begin(), order.end());
  Elem out;
  out.reserve(v.size());
  for (const auto& [key, pos] : order) {
    Term& t = v[pos];
    if (!out.empty() && out.back().key == key) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c.is_zero()) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  return out;
}
inline Elem single(long long key, const CycInt& c) {
  if (c.is_zero()) return {};
  return {Term{key, c}};
}
inline Elem operator+(const Elem& a, const Elem& b) {
  Elem v = a;
  v.insert(v.end(), b.begin(), b.end());
  return canon(std::move(v));
}
inline Elem operator*(const CycInt& c, const Elem& a) {
  Elem v;
  if (c.is_zero()) return v;
  for (const auto& t : a) v.push_back(Term{t.key, c * t.c});
  return v;
}
inline Elem operator-(const Elem& a, const Elem& b) {
  Elem v = a;
  for (const auto& t : b) v.push_back(Term{t.key, -t.c});
  return canon(std::move(v));
}
inline bool operator==(const Elem& a, const Elem& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].key != b[i].key || a[i].c != b[i].c) return false;
  return true;
}
inline CycInt coeff_of(const Elem& a, long long key) {
  auto it = std::lower_bound(a.begin(), a.end(), key, [](const Term& t, long long k) { return t.key < k; });
  if (it != a.end() && it->key == key) return it->c;
  return CycInt();
}

// ---------------------------------------------------------------------------
// abstract finite-dimensional Hopf algebra on a fixed basis

class HopfData {
 public:
  virtual ~HopfData() = default;
  virtual std::string name() const = 0;
  virtual int ell() const = 0;
  virtual long long dim() const = 0;
  virtual Elem mul_basis(long long i, long long j) const = 0;
  // keys i*dim + j
  virtual Elem comul_basis(long long i) const = 0;
  // same as comul_basis, by reference when the implementation memoizes
  virtual const Elem& comul_view(long long i, Elem& scratch) const {
    scratch = comul_basis(i);
    return scratch;
  }
  virtual CycInt counit_basis(long long i) const = 0;
  virtual Elem antipode_basis(long long i) const = 0;
  virtual Elem unit() const = 0;
  virtual std::string basis_name(long long i) const { return "b" + std::to_string(i); }
  // algebra generators, used for generator-reduced axiom checks
  virtual std::vector<Elem> generators() const { return {}; }
  // true when the generators provably span the algebra by words; the text explains
  virtual std::pair<bool, std::string> span_certificate() const { return {false, "no certificate"}; }

  const CycField* field() const { return cyc_field(ell()); }

  virtual Elem mul(const Elem& a, const Elem& b) const {
    Elem v;
    for (const auto& x : a)
      for (const auto& y : b)
        for (auto& t : mul_basis(x.key, y.key)) v.push_back(Term{t.key, x.c * y.c * t.c});
    return canon(std::move(v));
  }
  Elem comul(const Elem& a) const {
    Elem v, scratch;
    for (const auto& x : a)
      for (auto& t : comul_view(x.key, scratch)) v.push_back(Term{t.key, x.c * t.c});
    return canon(std::move(v));
  }
  CycInt counit(const Elem& a) const {
    CycInt s = CycInt::zero(ell());
    for (const auto& x : a) s += x.c * counit_basis(x.key);
    return s;
  }
  Elem antipode(const Elem& a) const {
    Elem v;
    for (const auto& x : a)
      for (auto& t : antipode_basis(x.key)) v.push_back(Term{t.key, x.c * t.c});
    return canon(std::move(v));
  }
  Elem basis(long long i) const { return single(i, CycInt::one(ell())); }

  // products in the r-fold tensor power, keys in base dim, first factor most significant.
  // Terms are grouped by their trailing factors so the first-factor products go through mul().
  Elem tensor_mul(const Elem& x, const Elem& y, int arity) const {
    if (arity == 1) return mul(x, y);
    long long d = dim();
    long long tail_span = 1;
    for (int k = 1; k < arity; ++k) tail_span *= d;
    auto group = [&](const Elem& e) {
      std::map<long long, Elem> g;  // tail key -> first-factor element
      for (const auto& t : e) g[t.key % tail_span].push_back(Term{t.key / tail_span, t.c});
      return g;
    };
    auto gx = group(x), gy = group(y);
    std::vector<long long> xi(arity - 1), yi(arity - 1);
    Elem v;
    for (const auto& [tx, ex] : gx) {
      split(tx, arity - 1, xi);
      for (const auto& [ty, ey] : gy) {
        split(ty, arity - 1, yi);
        // product of the tails, factor by factor
        Elem acc{Term{0, CycInt::one(field())}};
        for (int k = 0; k < arity - 1 && !acc.empty(); ++k) {
          Elem f = mul_basis(xi[k], yi[k]);
          Elem next;
          for (const auto& p : acc)
            for (const auto& t : f) next.push_back(Term{p.key * d + t.key, p.c * t.c});
          acc.swap(next);
        }
        if (acc.empty()) continue;
        Elem head = mul(ex, ey);
        for (const auto& h : head)
          for (const auto& t : acc) v.push_back(Term{h.key * tail_span + t.key, h.c * t.c});
      }
    }
    return canon(std::move(v));
  }
  void split(long long key, int arity, std::vector<long long>& out) const {
    long long d = dim();
    for (int k = arity - 1; k >= 0; --k) {
      out[k] = key % d;
      key /= d;
    }
  }
  // apply a linear map to one slot of an r-fold tensor
  Elem apply_slot(const Elem& x, int arity, int slot, const std::function<Elem(long long)>& f) const {
    long long d = dim();
    std::vector<long long> idx(arity);
    Elem v;
    for (const auto& a : x) {
      split(a.key, arity, idx);
      for (const auto& t : f(idx[slot])) {
        long long key = 0;
        for (int k = 0; k < arity; ++k) key = key * d + (k == slot ? t.key : idx[k]);
        v.push_back(Term{key, a.c * t.c});
      }
    }
    return canon(std::move(v));
  }
  // comultiply one slot: arity r -> r+1
  Elem comul_slot(const Elem& x, int arity, int slot) const {
    long long d = dim();
    std::vector<long long> idx(arity);
    Elem v, scratch;
    for (const auto& a : x) {
      split(a.key, arity, idx);
      for (const auto& t : comul_view(idx[slot], scratch)) {
        long long key = 0;
        for (int k = 0; k < arity; ++k) key = k == slot ? key * d * d + t.key : key * d + idx[k];
        v.push_back(Term{key, a.c * t.c});
      }
    }
    return canon(std::move(v));
  }
  // x in H^{(x)2}: swap factors
  Elem flip(const Elem& x) const {
    long long d = dim();
    Elem v;
    for (const auto& a : x) v.push_back(Term{(a.key % d) * d + a.key / d, a.c});
    return canon(std::move(v));
  }
  Elem tensor(const Elem& a, const Elem& b) const {
    Elem v;
    for (const auto& x : a)
      for (const auto& y : b) v.push_back(Term{x.key * dim() + y.key, x.c * y.c});
    return canon(std::move(v));
  }
  std::string elem_str(const Elem& a, int arity = 1) const {
    if (a.empty()) return "0";
    std::string s;
    std::vector<long long> idx(arity);
    for (const auto& t : a) {
      split(t.key, arity, idx);
      std::string b;
      for (int k = 0; k < arity; ++k) b += (k ? "(x)" : "") + basis_name(idx[k]);
      s += (s.empty() ? "" : " + ") + std::string("(") + t.c.str() + ")" + b;
    }
    return s;
  }
};

// ---------------------------------------------------------------------------
// reports

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string witness;
  double seconds = 0;
};

struct Report {
  std::vector<CheckResult> entries;
  std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();
  // seconds are measured from the previous add
  void add(const std::string& name, bool ok, const std::string& witness = "") {
    auto now = std::chrono::steady_clock::now();
    entries.push_back({name, ok, witness, std::chrono::duration<double>(now - mark).count()});
    mark = now;
  }
  void merge(const Report& o, const std::string& prefix = "") {
    for (const auto& e : o.entries) entries.push_back({prefix + e.name, e.ok, e.witness, e.seconds});
    mark = std::chrono::steady_clock::now();
  }
  double seconds() const {
    double s = 0;
    for (const auto& e : entries) s += e.seconds;
    return s;
  }
  bool ok() const {
    for (const auto& e : entries)
      if (!e.ok) return false;
    return true;
  }
  std::string str() const {
    std::string s;
    for (const auto& e : entries) s += (e.ok ? "PASS " : "FAIL ") + e.name + (e.witness.empty() ? "" : "  [" + e.witness + "]") + "\n";
    return s;
  }
};

// first failure of a predicate over a range, for witness reporting
struct Tally {
  long long checked = 0;
  std::string first_failure;
  bool ok() const { return first_failure.empty(); }
  void fail(const std::string& w) {
    if (first_failure.empty()) first_failure = w;
  }
  std::string witness() const { return ok() ? std::to_string(checked) + " cases" : first_failure; }
};

// ---------------------------------------------------------------------------
// Hopf axiom verification

struct AxiomOptions {
  // exhaustive triple checks when dim^3 <= this
  long long exhaustive_budget = 600000;
  // exhaustive pair checks of the coproduct when dim^2 <= this
  long long exhaustive_pair_budget = 10000;
  // generators x basis x basis associativity when that count is <= this
  long long generator_triple_budget = 4000000;
  // random triples for associativity above the budget
  long long triple_samples = 10000;
  // random pairs for multiplicativity of the coproduct above the budget
  long long pair_samples = 1000;
  // use generators times all basis elements (with a span certificate) instead of sampling
  bool generator_reduced = true;
  unsigned seed = 20240611;
};

inline Report verify_hopf_axioms(const HopfData& H, const AxiomOptions& opt = {}) {
  Report rep;
  const long long d = H.dim();
  const Elem one = H.unit();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long long> pick(0, d - 1);

  // unit
  {
    Tally t;
    for (long long i = 0; i < d; ++i, ++t.checked) {
      Elem b = H.basis(i);
      if (!(H.mul(one, b) == b) || !(H.mul(b, one) == b)) t.fail("unit fails on " + H.basis_name(i));
    }
    rep.add(H.name() + ": unit", t.ok(), t.witness());
  }

  bool exhaustive3 = static_cast<double>(d) * d * d <= static_cast<double>(opt.exhaustive_budget);
  bool exhaustive2 = static_cast<double>(d) * d <= static_cast<double>(opt.exhaustive_pair_budget);
  auto gens = H.generators();
  std::pair<bool, std::string> cert{false, "not needed"};
  if (opt.generator_reduced && !gens.empty() && (!exhaustive3 || !exhaustive2)) cert = H.span_certificate();
  bool use_gens = !exhaustive3 && opt.generator_reduced && !gens.empty() && cert.first;

  // associativity
  {
    Tally t;
    auto check = [&](const Elem& a, const Elem& b, const Elem& c, const std::string& what) {
      ++t.checked;
      if (!(H.mul(H.mul(a, b), c) == H.mul(a, H.mul(b, c)))) t.fail("associativity fails on " + what);
    };
    std::string mode;
    if (exhaustive3) {
      mode = "exhaustive";
      for (long long i = 0; i < d && t.ok(); ++i)
        for (long long j = 0; j < d; ++j) {
          Elem ab = H.mul_basis(i, j);
          for (long long k = 0; k < d; ++k) {
            ++t.checked;
            Elem lhs = H.mul(ab, H.basis(k));
            Elem rhs = H.mul(H.basis(i), H.mul_basis(j, k));
            if (!(lhs == rhs)) t.fail(H.basis_name(i) + "," + H.basis_name(j) + "," + H.basis_name(k));
          }
        }
    } else if (use_gens && static_cast<double>(gens.size()) * d * d <= static_cast<double>(opt.generator_triple_budget)) {
      mode = "generators x basis x basis";
      for (size_t g = 0; g < gens.size() && t.ok(); ++g)
        for (long long j = 0; j < d; ++j) {
          Elem gb = H.mul(gens[g], H.basis(j));
          for (long long k = 0; k < d; ++k) {
            ++t.checked;
            if (!(H.mul(gb, H.basis(k)) == H.mul(gens[g], H.mul_basis(j, k)))) t.fail("gen" + std::to_string(g) + "," + H.basis_name(j) + "," + H.basis_name(k));
          }
        }
    } else {
      mode = "sampled";
      for (long long s = 0; s < opt.triple_samples && t.ok(); ++s) {
        long long i = pick(rng), j = pick(rng), k = pick(rng);
        check(H.basis(i), H.basis(j), H.basis(k), H.basis_name(i) + "," + H.basis_name(j) + "," + H.basis_name(k));
      }
    }
    rep.add(H.name() + ": associativity (" + mode + ")", t.ok(), t.witness());
  }

  // coassociativity and counit, per basis element
  {
    Tally co, cu;
    Elem scratch;
    for (long long i = 0; i < d; ++i) {
      const Elem& D = H.comul_view(i, scratch);
      ++co.checked;
      if (!(H.comul_slot(D, 2, 0) == H.comul_slot(D, 2, 1))) co.fail("coassociativity fails on " + H.basis_name(i));
      ++cu.checked;
      Elem left, right;
      for (const auto& t : D) {
        long long a = t.key / d, b = t.key % d;
        CycInt ea = H.counit_basis(a), eb = H.counit_basis(b);
        if (!ea.is_zero()) left.push_back(Term{b, t.c * ea});
        if (!eb.is_zero()) right.push_back(Term{a, t.c * eb});
      }
      Elem bi = H.basis(i);
      if (!(canon(left) == bi) || !(canon(right) == bi)) cu.fail("counit law fails on " + H.basis_name(i));
    }
    rep.add(H.name() + ": coassociativity", co.ok(), co.witness());
    rep.add(H.name() + ": counit", cu.ok(), cu.witness());
  }

  // coproduct and counit are algebra maps
  {
    Tally t;
    auto check = [&](const Elem& a, const Elem& b, const std::string& what) {
      ++t.checked;
      Elem lhs = H.comul(H.mul(a, b));
      Elem rhs = H.tensor_mul(H.comul(a), H.comul(b), 2);
      if (!(lhs == rhs)) t.fail("Delta(ab) != Delta(a)Delta(b) on " + what);
      if (H.counit(H.mul(a, b)) != H.counit(a) * H.counit(b)) t.fail("counit not multiplicative on " + what);
    };
    std::string mode;
    if (exhaustive2) {
      mode = "exhaustive";
      for (long long i = 0; i < d && t.ok(); ++i)
        for (long long j = 0; j < d; ++j) check(H.basis(i), H.basis(j), H.basis_name(i) + "," + H.basis_name(j));
    } else if (opt.generator_reduced && !gens.empty() && cert.first) {
      mode = "generators x basis";
      for (size_t g = 0; g < gens.size() && t.ok(); ++g)
        for (long long j = 0; j < d; ++j) check(gens[g], H.basis(j), "gen" + std::to_string(g) + "," + H.basis_name(j));
    } else {
      mode = "sampled";
      for (long long s = 0; s < opt.pair_samples && t.ok(); ++s) {
        long long i = pick(rng), j = pick(rng);
        check(H.basis(i), H.basis(j), H.basis_name(i) + "," + H.basis_name(j));
      }
    }
    Elem one2 = H.tensor(one, one);
    if (!(H.comul(one) == one2)) t.fail("Delta(1) != 1(x)1");
    if (!H.counit(one).is_one()) t.fail("counit(1) != 1");
    rep.add(H.name() + ": bialgebra compatibility (" + mode + ")", t.ok(), t.witness());
  }

  // antipode
  {
    Tally t;
    Elem scratch;
    for (long long i = 0; i < d; ++i) {
      ++t.checked;
      const Elem& D = H.comul_view(i, scratch);
      Elem l, r;
      for (const auto& term : D) {
        Elem a = H.basis(term.key / d), b = H.basis(term.key % d);
        for (auto& x : H.mul(H.antipode(a), b)) l.push_back(Term{x.key, term.c * x.c});
        for (auto& x : H.mul(a, H.antipode(b))) r.push_back(Term{x.key, term.c * x.c});
      }
      Elem expect = H.counit_basis(i) * one;
      if (!(canon(l) == canon(expect)) || !(canon(r) == canon(expect))) t.fail("antipode identity fails on " + H.basis_name(i));
    }
    rep.add(H.name() + ": antipode", t.ok(), t.witness());
  }
  if (!exhaustive2 && opt.generator_reduced && !gens.empty()) rep.add(H.name() + ": generator span certificate", cert.first, cert.second);
  return rep;
}

}  // namespace taftknot
