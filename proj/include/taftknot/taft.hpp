#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "taftknot/hopf_core.hpp"
#include "taftknot/matrix.hpp"

namespace taftknot {

// signed power of q: (-1)^neg q^e times basis element idx; idx < 0 means zero
struct Mono {
  long long idx = -1;
  long long e = 0;
  bool neg = false;
  bool zero() const { return idx < 0; }
};

inline CycInt mono_coeff(const CycField* f, const Mono& m) {
  CycInt c = CycInt::q(f, m.e);
  return m.neg ? -c : c;
}

constexpr long long kDefaultMaxDim = 1LL << 40;
// largest A whose double we tabulate (straightening memo is dim(A)^2)
constexpr long long kMaxDualMemo = 1024;
// the double relies on the memoized dual product
constexpr long long kMaxDoubleFactor = kMaxDualMemo;

// The n-rank Taft algebra on the basis x^gamma K(alpha), gamma major.
class TaftAlgebra : public HopfData {
 public:
  TaftAlgebra(int n, int ell, long long max_dim = kDefaultMaxDim) : n_(n), ell_(ell) {
    if (n < 1) throw Error("rank must be at least 1");
    if (ell < 2) throw Error("ell must be at least 2");
    long long g = 1;
    for (int i = 0; i < n; ++i) {
      if (g > max_dim / ell) throw Error("Taft algebra dimension exceeds the configured limit");
      g *= ell;
    }
    if (g > max_dim / g) throw Error("Taft algebra dimension exceeds the configured limit");
    L_ = g;
    f_ = cyc_field(ell);
    comul_memo_ = LazyTable<Elem>(static_cast<size_t>(L_ * L_));
  }

  std::string name() const override { return "A(" + std::to_string(n_) + "," + std::to_string(ell_) + ")"; }
  int ell() const override { return ell_; }
  int rank() const { return n_; }
  long long dim() const override { return L_ * L_; }
  long long group_order() const { return L_; }

  long long enc(const Exponent& a) const {
    long long c = 0;
    for (int i = 0; i < n_; ++i) c = c * ell_ + mod(a[i], ell_);
    return c;
  }
  Exponent dec(long long c) const {
    Exponent a(n_);
    for (int i = n_ - 1; i >= 0; --i) {
      a[i] = static_cast<int>(c % ell_);
      c /= ell_;
    }
    return a;
  }
  long long index(const Exponent& gamma, const Exponent& alpha) const { return enc(gamma) * L_ + enc(alpha); }
  Exponent gamma_of(long long i) const { return dec(i / L_); }
  Exponent alpha_of(long long i) const { return dec(i % L_); }

  // x^g K(a) * x^h K(b) = theta(a,h) q^{<a,h>} q^{g*h} x^{g+h} K(a+b)
  Mono mono_mul(long long i, long long j) const {
    Exponent g = gamma_of(i), a = alpha_of(i), h = gamma_of(j), b = alpha_of(j);
    Exponent gh = g + h;
    for (int v : gh)
      if (v >= ell_) return {};
    return {index(gh, a + b), theta_exp(a, h) + dot(a, h) + star(g, h), false};
  }
  // s(x^g K(a)) = (-1)^{|g|} q^{-<g,g+1>/2} theta(-a,g) q^{<-a,g>} x^g K(-a-g)
  Mono mono_antipode(long long i) const {
    Exponent g = gamma_of(i), a = alpha_of(i);
    long long e = -dot(g, g + ones_exp(n_)) / 2 + theta_exp(-a, g) + dot(-a, g);
    return {index(g, -a - g), e, abs_sum(g) % 2 == 1};
  }
  // the antipode permutes basis lines by an involution, so its inverse reads off the same table
  Mono mono_antipode_inv(long long i) const {
    Mono m = mono_antipode(i);
    Mono back = mono_antipode(m.idx);
    // s(b_j) = c b_i with j = m.idx, so s^{-1}(b_i) = c^{-1} b_j
    return {m.idx, -back.e, back.neg};
  }

  Elem mul_basis(long long i, long long j) const override {
    Mono m = mono_mul(i, j);
    if (m.zero()) return {};
    return single(m.idx, mono_coeff(f_, m));
  }
  // Delta(x^g K(a)) = sum_{xi <= g} (g choose xi)_q q^{-(g-xi)*xi} x^{g-xi} K(xi+a) (x) x^xi K(a)
  Elem comul_basis(long long i) const override { return comul_ref(i); }
  const Elem& comul_view(long long i, Elem&) const override { return comul_ref(i); }
  const Elem& comul_ref(long long i) const { return comul_memo_.get(static_cast<size_t>(i), [&] { return compute_comul(i); }); }
  Elem compute_comul(long long i) const {
    Exponent g = gamma_of(i), a = alpha_of(i);
    Elem out;
    for (const auto& xi : box(g)) {
      CycInt c = binomial(g, xi) * CycInt::q(f_, -star(g - xi, xi));
      if (c.is_zero()) continue;
      out.push_back(Term{index(g - xi, xi + a) * dim() + index(xi, a), c});
    }
    return canon(std::move(out));
  }
  CycInt counit_basis(long long i) const override { return i / L_ == 0 ? CycInt::one(ell_) : CycInt::zero(ell_); }
  Elem antipode_basis(long long i) const override {
    Mono m = mono_antipode(i);
    return single(m.idx, mono_coeff(f_, m));
  }
  Elem antipode_inv(const Elem& a) const {
    Elem v;
    for (const auto& t : a) {
      Mono m = mono_antipode_inv(t.key);
      v.push_back(Term{m.idx, t.c * mono_coeff(f_, m)});
    }
    return canon(std::move(v));
  }
  Elem unit() const override { return basis(0); }
  std::string basis_name(long long i) const override {
    return "x^" + exp_str(gamma_of(i)) + "K" + exp_str(alpha_of(i));
  }

  // multi-index Gauss binomial prod_i (g_i choose xi_i)_q
  CycInt binomial(const Exponent& g, const Exponent& xi) const {
    CycInt c = CycInt::one(ell_);
    for (int k = 0; k < n_; ++k) c *= gauss_binomial_int(ell_, g[k], xi[k]);
    return c;
  }

  Elem K(const Exponent& a) const { return basis(index(zero_exp(n_), a)); }
  Elem x(int i) const { return basis(index(unit_exp(n_, i), zero_exp(n_))); }
  Elem mono(const Exponent& gamma, const Exponent& alpha) const { return basis(index(gamma, alpha)); }

  std::vector<Elem> generators() const override {
    std::vector<Elem> g;
    for (int i = 0; i < n_; ++i) g.push_back(K(unit_exp(n_, i)));
    for (int i = 0; i < n_; ++i) g.push_back(x(i));
    return g;
  }
  // x_1^g1 .. x_n^gn K(e_1)^a1 .. K(e_n)^an is a nonzero multiple of x^g K(a)
  std::pair<bool, std::string> span_certificate() const override {
    auto gens = generators();
    for (long long i = 0; i < dim(); ++i) {
      Exponent g = gamma_of(i), a = alpha_of(i);
      Elem w = unit();
      for (int k = 0; k < n_; ++k)
        for (int r = 0; r < g[k]; ++r) w = mul(w, gens[n_ + k]);
      for (int k = 0; k < n_; ++k)
        for (int r = 0; r < a[k]; ++r) w = mul(w, gens[k]);
      if (w.size() != 1 || w[0].key != i) return {false, "word for " + basis_name(i) + " is " + elem_str(w)};
    }
    return {true, "monomial words hit every basis line"};
  }

  // left integral x^kappa sum_a theta(a,kappa) q^{<a,kappa>} K(a)
  Elem left_integral() const {
    Exponent kap(n_, ell_ - 1);
    Elem v;
    for (long long c = 0; c < L_; ++c) {
      Exponent a = dec(c);
      v.push_back(Term{index(kap, a), CycInt::q(f_, theta_exp(a, kap) + dot(a, kap))});
    }
    return canon(std::move(v));
  }
  // group-like elements: K(a) for every a
  std::vector<Elem> group_likes() const {
    std::vector<Elem> out;
    for (long long c = 0; c < L_; ++c) out.push_back(basis(c));
    return out;
  }

 private:
  int n_, ell_;
  long long L_ = 1;
  const CycField* f_ = nullptr;
  LazyTable<Elem> comul_memo_;
};

// ---------------------------------------------------------------------------
// The dual A* on the dual basis of x^gamma K(alpha), same indexing.
// Structure constants are read off A by transposition.
class TaftDual : public HopfData {
 public:
  explicit TaftDual(std::shared_ptr<const TaftAlgebra> A)
      : A_(std::move(A)), f_(A_->field()), comul_memo_(static_cast<size_t>(A_->dim())) {
    if (memo_mul()) mul_memo_ = LazyTable<Elem>(static_cast<size_t>(dim() * dim()));
  }

  std::string name() const override { return "A*(" + std::to_string(A_->rank()) + "," + std::to_string(ell()) + ")"; }
  int ell() const override { return A_->ell(); }
  long long dim() const override { return A_->dim(); }
  const TaftAlgebra& base() const { return *A_; }

  // coefficient of e_i (x) e_j in Delta(e_k), the only candidate k being forced by the grading
  Elem mul_basis(long long i, long long j) const override {
    if (!memo_mul()) return compute_mul(i, j);
    return mul_ref(i, j);
  }
  bool memo_mul() const { return dim() <= kMaxDualMemo; }
  // memoized; only when memo_mul()
  const Elem& mul_ref(long long i, long long j) const {
    return mul_memo_.get(static_cast<size_t>(i * dim() + j), [&] { return compute_mul(i, j); });
  }
  Elem compute_mul(long long i, long long j) const {
    const TaftAlgebra& A = *A_;
    Exponent g = A.gamma_of(i) + A.gamma_of(j);
    for (int v : g)
      if (v >= ell()) return {};
    long long k = A.index(g, A.alpha_of(j));
    CycInt c = coeff_of(A.comul_ref(k), i * dim() + j);
    return single(k, c);
  }
  // Delta(e*_k) = sum over b_i b_j = c b_k of c e*_i (x) e*_j
  Elem comul_basis(long long k) const override { return comul_ref(k); }
  const Elem& comul_view(long long k, Elem&) const override { return comul_ref(k); }
  const Elem& comul_ref(long long k) const { return comul_memo_.get(static_cast<size_t>(k), [&] { return compute_comul(k); }); }
  Elem compute_comul(long long k) const {
    const TaftAlgebra& A = *A_;
    Exponent g = A.gamma_of(k);
    Elem out;
    for (const auto& g1 : box(g))
      for (long long c = 0; c < A.group_order(); ++c) {
        Exponent a1 = A.dec(c);
        long long i = A.index(g1, a1);
        long long j = A.index(g - g1, A.alpha_of(k) - a1);
        Mono m = A.mono_mul(i, j);
        if (m.zero() || m.idx != k) continue;
        out.push_back(Term{i * dim() + j, mono_coeff(f_, m)});
      }
    return canon(std::move(out));
  }
  CycInt counit_basis(long long k) const override { return k == 0 ? CycInt::one(ell()) : CycInt::zero(ell()); }
  // S(e*_k) = e*_k o s; s maps b_j to a multiple of b_k for exactly one j
  Elem antipode_basis(long long k) const override {
    Mono m = mono_antipode(k);
    return single(m.idx, mono_coeff(f_, m));
  }
  Mono mono_antipode(long long k) const {
    Mono back = A_->mono_antipode(k);  // involutive on lines: s(b_{back.idx}) ~ b_k
    Mono fwd = A_->mono_antipode(back.idx);
    return {back.idx, fwd.e, fwd.neg};
  }
  Mono mono_antipode_inv(long long k) const {
    Mono m = A_->mono_antipode(k);
    return {A_->mono_antipode(k).idx, -m.e, m.neg};
  }
  Elem antipode_inv(const Elem& p) const {
    Elem v;
    for (const auto& t : p) {
      Mono m = mono_antipode_inv(t.key);
      v.push_back(Term{m.idx, t.c * mono_coeff(f_, m)});
    }
    return canon(std::move(v));
  }
  // the unit is the counit of A
  Elem unit() const override {
    Elem v;
    for (long long c = 0; c < A_->group_order(); ++c) v.push_back(Term{c, CycInt::one(ell())});
    return v;
  }
  std::string basis_name(long long k) const override {
    return "X^" + exp_str(A_->gamma_of(k)) + "h" + exp_str(A_->alpha_of(k));
  }

  // evaluation of a functional on an element of A
  CycInt pair(const Elem& p, const Elem& a) const {
    CycInt s = CycInt::zero(ell());
    size_t i = 0, j = 0;
    while (i < p.size() && j < a.size()) {
      if (p[i].key < a[j].key) ++i;
      else if (p[i].key > a[j].key) ++j;
      else s += p[i++].c * a[j++].c;
    }
    return s;
  }

  // k(w) = sum_a q^{<w,a>} h(a)
  Elem k(const Exponent& w) const {
    Elem v;
    for (long long c = 0; c < A_->group_order(); ++c) v.push_back(Term{c, CycInt::q(f_, dot(w, A_->dec(c)))});
    return v;
  }
  Elem k_tilde(const Exponent& b) const { return k(tilde(b)); }
  Elem X(int i) const {
    Elem v;
    Exponent e = unit_exp(A_->rank(), i);
    for (long long c = 0; c < A_->group_order(); ++c) v.push_back(Term{A_->index(e, A_->dec(c)), CycInt::one(ell())});
    return v;
  }
  Elem h(const Exponent& a) const { return basis(A_->index(zero_exp(A_->rank()), a)); }

  std::vector<Elem> generators() const override {
    std::vector<Elem> g;
    int n = A_->rank();
    for (int i = 0; i < n; ++i) g.push_back(k(unit_exp(n, i)));
    for (int i = 0; i < n; ++i) g.push_back(X(i));
    return g;
  }
  std::pair<bool, std::string> span_certificate() const override {
    auto w = dual_words();
    if (!w.first) return {false, w.second};
    auto ct = character_table_invertible(ell());
    if (!ct.first) return ct;
    return {true, "X-words times k-words are multiples of character sums; " + ct.second};
  }
  // X_1^g1..X_n^gn k(e_1)^w1..k(e_n)^wn = c sum_a q^{<w,a>} e*(g,a) with c != 0
  std::pair<bool, std::string> dual_words() const {
    int n = A_->rank();
    auto gens = generators();
    for (long long gc = 0; gc < A_->group_order(); ++gc) {
      Exponent g = A_->dec(gc);
      Elem xw = unit();
      for (int i = 0; i < n; ++i)
        for (int r = 0; r < g[i]; ++r) xw = mul(xw, gens[n + i]);
      for (long long wc = 0; wc < A_->group_order(); ++wc) {
        Exponent w = A_->dec(wc);
        Elem word = xw;
        for (int i = 0; i < n; ++i)
          for (int r = 0; r < w[i]; ++r) word = mul(word, gens[i]);
        if (!is_character_sum(word, g, w)) return {false, "word X^" + exp_str(g) + "k" + exp_str(w) + " = " + elem_str(word)};
      }
    }
    return {true, "dual words"};
  }
  bool is_character_sum(const Elem& word, const Exponent& g, const Exponent& w) const {
    if (static_cast<long long>(word.size()) != A_->group_order()) return false;
    CycInt c = coeff_of(word, A_->index(g, zero_exp(A_->rank())));
    if (c.is_zero()) return false;
    for (long long ac = 0; ac < A_->group_order(); ++ac) {
      Exponent a = A_->dec(ac);
      if (coeff_of(word, A_->index(g, a)) != c * CycInt::q(f_, dot(w, a))) return false;
    }
    return true;
  }
  // the table [q^{wa}] for one cyclic factor; the full table is its Kronecker power
  static std::pair<bool, std::string> character_table_invertible(int ell) {
    const CycField* f = cyc_field(ell);
    Matrix m(ell, ell, f);
    for (int w = 0; w < ell; ++w)
      for (int a = 0; a < ell; ++a) m(w, a) = Cyc::q(f, static_cast<long long>(w) * a);
    bool ok = m.rank() == ell;
    return {ok, ok ? "character table of Z/" + std::to_string(ell) + " has full rank" : "character table singular"};
  }

  // right integral X^kappa sum_a k(a)
  Elem right_integral() const {
    int n = A_->rank();
    Elem lam;
    Exponent kap(n, ell() - 1);
    Elem xk = basis(A_->index(kap, zero_exp(n)));
    for (long long c = 0; c < A_->group_order(); ++c) lam = lam + mul(xk, k(A_->dec(c)));
    return lam;
  }
  std::vector<Elem> group_likes() const {
    std::vector<Elem> out;
    for (long long c = 0; c < A_->group_order(); ++c) out.push_back(k(A_->dec(c)));
    return out;
  }

 private:
  std::shared_ptr<const TaftAlgebra> A_;
  const CycField* f_;
  LazyTable<Elem> comul_memo_;
  LazyTable<Elem> mul_memo_;
};

// ---------------------------------------------------------------------------
// The double D(A) = (A*)^cop bowtie A on keys dual_index * dim(A) + A_index.
class TaftDouble : public HopfData {
 public:
  struct STerm {
    CycInt c;
    long long p;
    long long h;
  };

  explicit TaftDouble(std::shared_ptr<const TaftAlgebra> A)
      : A_(A), dual_(std::make_shared<TaftDual>(A)), f_(A->field()), dA_(A->dim()) {
    if (dA_ > kMaxDoubleFactor) throw Error("double too large: factor dimension " + std::to_string(dA_));
    straight_ = LazyTable<std::vector<STerm>>(static_cast<size_t>(dA_ * dA_));
    triple_ = LazyTable<std::vector<Triple>>(static_cast<size_t>(dA_));
    comul_memo_ = LazyTable<Elem>(static_cast<size_t>(dA_ * dA_));
  }

  std::string name() const override { return "D(" + std::to_string(A_->rank()) + "," + std::to_string(ell()) + ")"; }
  int ell() const override { return A_->ell(); }
  long long dim() const override { return dA_ * dA_; }
  const TaftAlgebra& A() const { return *A_; }
  const TaftDual& dual() const { return *dual_; }
  std::shared_ptr<const TaftAlgebra> A_ptr() const { return A_; }
  long long key(long long p, long long h) const { return p * dA_ + h; }
  long long p_of(long long k) const { return k / dA_; }
  long long h_of(long long k) const { return k % dA_; }

  // (e_h) acting across e*_p: the functional x -> p(s^{-1}(h3) x h1) tensored with h2,
  // as a list over (p'', h'') in the dual basis of A
  const std::vector<STerm>& straight(long long h, long long p) const {
    return straight_.get(static_cast<size_t>(h * dA_ + p), [&] { return compute_straight(h, p); });
  }
  std::vector<STerm> compute_straight(long long h, long long p) const {
    const auto& triple = triple_.get(static_cast<size_t>(h), [&] { return triple_coproduct(h); });
    const TaftAlgebra& A = *A_;
    Exponent gp = A.gamma_of(p), ap = A.alpha_of(p);
    std::map<std::pair<long long, long long>, CycInt> acc;
    for (const auto& [c, h1, h2, h3] : triple) {
      Mono m3 = A.mono_antipode_inv(h3);
      // s^{-1}(h3) x h1 lands on e_p for exactly one basis x
      Exponent gx = gp - A.gamma_of(m3.idx) - A.gamma_of(h1);
      bool ok = true;
      for (int v : gx)
        if (v < 0) ok = false;
      if (!ok) continue;
      Exponent ax = ap - A.alpha_of(m3.idx) - A.alpha_of(h1);
      long long xidx = A.index(gx, ax);
      Mono t1 = A.mono_mul(m3.idx, xidx);
      if (t1.zero()) continue;
      Mono t2 = A.mono_mul(t1.idx, h1);
      if (t2.zero() || t2.idx != p) continue;
      CycInt coef = c * mono_coeff(f_, m3) * mono_coeff(f_, t1) * mono_coeff(f_, t2);
      auto [pos, fresh] = acc.emplace(std::make_pair(xidx, h2), coef);
      if (!fresh) pos->second += coef;
    }
    std::vector<STerm> out;
    for (auto& [k, c] : acc)
      if (!c.is_zero()) out.push_back({c, k.first, k.second});
    return out;
  }

  // (p (x) h)(p' (x) k) = sum p * p'' (x) h'' k
  Elem mul_basis(long long i, long long j) const override {
    long long p = p_of(i), h = h_of(i), p2 = p_of(j), k = h_of(j);
    Elem out;
    for (const auto& st : straight(h, p2)) {
      const Elem& pp = dual_->mul_ref(p, st.p);
      if (pp.empty()) continue;
      Mono hk = A_->mono_mul(st.h, k);
      if (hk.zero()) continue;
      out.push_back(Term{key(pp[0].key, hk.idx), st.c * pp[0].c * mono_coeff(f_, hk)});
    }
    return canon(std::move(out));
  }
  Elem comul_basis(long long i) const override {
    Elem unused;
    return comul_view(i, unused);
  }
  const Elem& comul_view(long long i, Elem&) const override {
    return comul_memo_.get(static_cast<size_t>(i), [&] { return compute_comul(i); });
  }
  // Delta(p (x) h) = sum (p2 (x) h1) (x) (p1 (x) h2)
  Elem compute_comul(long long i) const {
    const Elem &dp = dual_->comul_ref(p_of(i)), &dh = A_->comul_ref(h_of(i));
    Elem out;
    long long d = dim();
    for (const auto& a : dp)
      for (const auto& b : dh) {
        long long p1 = a.key / dA_, p2 = a.key % dA_, h1 = b.key / dA_, h2 = b.key % dA_;
        out.push_back(Term{key(p2, h1) * d + key(p1, h2), a.c * b.c});
      }
    return canon(std::move(out));
  }
  CycInt counit_basis(long long i) const override { return dual_->counit_basis(p_of(i)) * A_->counit_basis(h_of(i)); }
  // s(p (x) h) = (eps (x) s(h)) (S^{-1}(p) (x) 1)
  Elem antipode_basis(long long i) const override {
    Mono sh = A_->mono_antipode(h_of(i));
    Mono sp = dual_->mono_antipode_inv(p_of(i));
    CycInt c = mono_coeff(f_, sh) * mono_coeff(f_, sp);
    Elem out;
    for (const auto& st : straight(sh.idx, sp.idx)) out.push_back(Term{key(st.p, st.h), c * st.c});
    return canon(std::move(out));
  }
  Elem unit() const override { return embed_dual(dual_->unit()); }
  std::string basis_name(long long i) const override {
    return dual_->basis_name(p_of(i)) + "|" + A_->basis_name(h_of(i));
  }

  // eps (x) a
  Elem embed_A(const Elem& a) const {
    Elem v;
    for (long long c = 0; c < A_->group_order(); ++c)
      for (const auto& t : a) v.push_back(Term{key(c, t.key), t.c});
    return canon(std::move(v));
  }
  // p (x) 1
  Elem embed_dual(const Elem& p) const {
    Elem v;
    for (const auto& t : p) v.push_back(Term{key(t.key, 0), t.c});
    return canon(std::move(v));
  }
  Elem pure(const Elem& p, const Elem& a) const {
    Elem v;
    for (const auto& x : p)
      for (const auto& y : a) v.push_back(Term{key(x.key, y.key), x.c * y.c});
    return canon(std::move(v));
  }

  // products grouped by A-part on the left, avoiding repeated straightening through eps = sum h(a)
  Elem mul(const Elem& x, const Elem& y) const override {
    // runs of equal A-part on the left share one straightening
    std::vector<std::pair<long long, size_t>> order(x.size());
    for (size_t i = 0; i < x.size(); ++i) order[i] = {h_of(x[i].key), i};
    std::sort(order.begin(), order.end());
    Elem out;
    Elem P;
    for (size_t r = 0; r < order.size();) {
      long long h = order[r].first;
      P.clear();
      for (; r < order.size() && order[r].first == h; ++r) P.push_back(Term{p_of(x[order[r].second].key), x[order[r].second].c});
      for (const auto& t : y) {
        long long p2 = p_of(t.key), k = h_of(t.key);
        for (const auto& st : straight(h, p2)) {
          Mono hk = A_->mono_mul(st.h, k);
          if (hk.zero()) continue;
          CycInt c = t.c * st.c * mono_coeff(f_, hk);
          for (const auto& pt : P) {
            const Elem& pp = dual_->mul_ref(pt.key, st.p);
            if (pp.empty()) continue;
            out.push_back(Term{key(pp[0].key, hk.idx), c * pt.c * pp[0].c});
          }
        }
      }
    }
    return canon(std::move(out));
  }

  std::vector<Elem> generators() const override {
    std::vector<Elem> g;
    for (const auto& p : dual_->generators()) g.push_back(embed_dual(p));
    for (const auto& a : A_->generators()) g.push_back(embed_A(a));
    return g;
  }
  // dual words times A words: products of spanning sets of the two tensor factors
  std::pair<bool, std::string> span_certificate() const override {
    auto a = A_->span_certificate();
    if (!a.first) return a;
    auto d = dual_->span_certificate();
    if (!d.first) return d;
    // the embeddings are multiplicative and (p (x) 1)(eps (x) h) = p (x) h
    int n = A_->rank();
    for (long long pc = 0; pc < A_->group_order(); ++pc)
      for (int i = 0; i < 2 * n; ++i) {
        Elem pd = dual_->generators()[i];
        Elem lhs = HopfData::mul(embed_dual(pd), embed_dual(dual_->h(A_->dec(pc))));
        if (!(lhs == embed_dual(dual_->mul(pd, dual_->h(A_->dec(pc)))))) return {false, "dual embedding not multiplicative"};
      }
    for (long long i = 0; i < A_->dim(); i += std::max<long long>(1, A_->dim() / 64))
      for (const auto& g : A_->generators())
        if (!(HopfData::mul(embed_A(A_->basis(i)), embed_A(g)) == embed_A(A_->mul(A_->basis(i), g)))) return {false, "A embedding not multiplicative"};
    for (long long i = 0; i < dA_; i += std::max<long long>(1, dA_ / 64))
      for (long long j = 0; j < dA_; j += std::max<long long>(1, dA_ / 64))
        if (!(HopfData::mul(embed_dual(dual_->basis(i)), embed_A(A_->basis(j))) == basis(key(i, j)))) return {false, "(p|1)(eps|h) != p|h"};
    return {true, a.second + "; " + d.second + "; D = A* A"};
  }

 private:
  using Triple = std::tuple<CycInt, long long, long long, long long>;
  std::vector<Triple> triple_coproduct(long long h) const {
    std::vector<Triple> out;
    long long d = dA_;
    for (const auto& t : A_->comul_ref(h))
      for (const auto& u : A_->comul_ref(t.key % d)) out.emplace_back(t.c * u.c, t.key / d, u.key / d, u.key % d);
    return out;
  }

  std::shared_ptr<const TaftAlgebra> A_;
  std::shared_ptr<TaftDual> dual_;
  const CycField* f_;
  long long dA_;
  LazyTable<std::vector<STerm>> straight_;
  LazyTable<Elem> comul_memo_;
  LazyTable<std::vector<Triple>> triple_;
};

inline std::shared_ptr<const TaftAlgebra> build_taft(int n, int ell, long long max_dim = kDefaultMaxDim) {
  return std::make_shared<const TaftAlgebra>(n, ell, max_dim);
}
inline std::shared_ptr<const TaftDual> build_dual(std::shared_ptr<const TaftAlgebra> A) { return std::make_shared<const TaftDual>(std::move(A)); }
inline std::shared_ptr<const TaftDouble> build_double(std::shared_ptr<const TaftAlgebra> A) { return std::make_shared<const TaftDouble>(std::move(A)); }

}  // namespace taftknot
