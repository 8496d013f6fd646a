#pragma once

#include "taftknot/taft.hpp"

namespace taftknot {

// n-fold tensor power of the rank-1 Taft algebra; factor k holds (x_k, K_k).
// Key: sum t_k (ell^2)^{n-1-k} with t_k a rank-1 index.
class TaftTensorPower : public HopfData {
 public:
  TaftTensorPower(int n, int ell) : n_(n), T_(std::make_shared<TaftAlgebra>(1, ell)) {
    d1_ = T_->dim();
    d_ = 1;
    for (int k = 0; k < n; ++k) d_ *= d1_;
  }
  std::string name() const override { return "T(" + std::to_string(n_) + "," + std::to_string(ell()) + ")"; }
  int ell() const override { return T_->ell(); }
  long long dim() const override { return d_; }
  int rank() const { return n_; }

  std::vector<long long> factors(long long i) const {
    std::vector<long long> t(n_);
    for (int k = n_ - 1; k >= 0; --k) {
      t[k] = i % d1_;
      i /= d1_;
    }
    return t;
  }
  long long join(const std::vector<long long>& t) const {
    long long i = 0;
    for (long long v : t) i = i * d1_ + v;
    return i;
  }
  Exponent gamma_of(long long i) const {
    auto t = factors(i);
    Exponent g(n_);
    for (int k = 0; k < n_; ++k) g[k] = T_->gamma_of(t[k])[0];
    return g;
  }
  Exponent alpha_of(long long i) const {
    auto t = factors(i);
    Exponent a(n_);
    for (int k = 0; k < n_; ++k) a[k] = T_->alpha_of(t[k])[0];
    return a;
  }
  long long index(const Exponent& g, const Exponent& a) const {
    std::vector<long long> t(n_);
    for (int k = 0; k < n_; ++k) t[k] = T_->index(Exponent{g[k]}, Exponent{a[k]});
    return join(t);
  }

  Elem mul_basis(long long i, long long j) const override {
    auto a = factors(i), b = factors(j);
    std::vector<long long> t(n_);
    CycInt c = CycInt::one(field());
    for (int k = 0; k < n_; ++k) {
      Mono m = T_->mono_mul(a[k], b[k]);
      if (m.zero()) return {};
      t[k] = m.idx;
      c *= mono_coeff(field(), m);
    }
    return single(join(t), c);
  }
  Elem comul_basis(long long i) const override {
    // product of factor coproducts, reassembled as (left tuple) (x) (right tuple)
    auto t = factors(i);
    std::vector<std::pair<std::pair<long long, long long>, CycInt>> acc{{{0, 0}, CycInt::one(field())}};
    for (int k = 0; k < n_; ++k) {
      std::vector<std::pair<std::pair<long long, long long>, CycInt>> next;
      for (const auto& [lr, c] : acc)
        for (const auto& term : T_->comul_ref(t[k]))
          next.push_back({{lr.first * d1_ + term.key / d1_, lr.second * d1_ + term.key % d1_}, c * term.c});
      acc.swap(next);
    }
    Elem out;
    for (const auto& [lr, c] : acc) out.push_back(Term{lr.first * d_ + lr.second, c});
    return canon(std::move(out));
  }
  CycInt counit_basis(long long i) const override {
    for (long long t : factors(i))
      if (T_->counit_basis(t).is_zero()) return CycInt::zero(field());
    return CycInt::one(field());
  }
  Elem antipode_basis(long long i) const override {
    auto t = factors(i);
    CycInt c = CycInt::one(field());
    for (auto& v : t) {
      Mono m = T_->mono_antipode(v);
      v = m.idx;
      c *= mono_coeff(field(), m);
    }
    return single(join(t), c);
  }
  Elem unit() const override { return basis(0); }
  std::string basis_name(long long i) const override { return "x^" + exp_str(gamma_of(i)) + "K" + exp_str(alpha_of(i)); }

  bool is_grouplike_basis(long long i) const { return is_zero(gamma_of(i)); }

 private:
  int n_;
  std::shared_ptr<TaftAlgebra> T_;
  long long d1_, d_;
};

// sigma(K(a), K(b)) = q^{-b*a}, zero off the group-likes; inverse = q^{b*a}
struct TwistCocycle {
  const TaftTensorPower* H;
  CycInt value(long long i, long long j, bool inverse = false) const {
    if (!H->is_grouplike_basis(i) || !H->is_grouplike_basis(j)) return CycInt::zero(H->field());
    long long e = star(H->alpha_of(j), H->alpha_of(i));
    return CycInt::q(H->field(), inverse ? e : -e);
  }
};

// H with the product a ._sigma b = sum sigma(a1, b1) a2 b2 sigma^{-1}(a3, b3)
class TwistedAlgebra {
 public:
  TwistedAlgebra(const TaftTensorPower& H, TwistCocycle sig) : H_(H), sig_(sig), legs_(static_cast<size_t>(H.dim())) {}

  Elem mul_basis(long long i, long long j) const {
    Elem v;
    for (const auto& [a1, a2, a3, ca] : legs(i))
      for (const auto& [b1, b2, b3, cb] : legs(j)) {
        CycInt c = ca * cb * sig_.value(a1, b1) * sig_.value(a3, b3, true);
        if (c.is_zero()) continue;
        for (const auto& t : H_.mul_basis(a2, b2)) v.push_back(Term{t.key, c * t.c});
      }
    return canon(std::move(v));
  }
  Elem mul(const Elem& x, const Elem& y) const {
    Elem v;
    for (const auto& a : x)
      for (const auto& b : y)
        for (const auto& t : mul_basis(a.key, b.key)) v.push_back(Term{t.key, a.c * b.c * t.c});
    return canon(std::move(v));
  }

 private:
  using Leg = std::tuple<long long, long long, long long, CycInt>;
  // Sweedler terms of Delta^2 where both sigma legs can be nonzero
  const std::vector<Leg>& legs(long long i) const {
    return legs_.get(static_cast<size_t>(i), [&] {
      long long d = H_.dim();
      std::vector<Leg> out;
      for (const auto& t : H_.comul_slot(H_.comul_basis(i), 2, 1)) {
        long long a1 = t.key / (d * d), a2 = (t.key / d) % d, a3 = t.key % d;
        if (H_.is_grouplike_basis(a1) && H_.is_grouplike_basis(a3)) out.emplace_back(a1, a2, a3, t.c);
      }
      return out;
    });
  }
  const TaftTensorPower& H_;
  TwistCocycle sig_;
  LazyTable<std::vector<Leg>> legs_;
};

inline Report twist_check(int n, int ell) {
  Report rep;
  TaftTensorPower H(n, ell);
  TwistCocycle sig{&H};
  auto A = build_taft(n, ell);
  const std::string tag = "twist(" + std::to_string(n) + "," + std::to_string(ell) + "): ";
  const CycField* f = H.field();
  std::vector<long long> G;
  for (long long i = 0; i < H.dim(); ++i)
    if (H.is_grouplike_basis(i)) G.push_back(i);

  {
    Tally norm, cocycle, inv;
    for (long long x : G) {
      ++norm.checked;
      if (!sig.value(0, x).is_one() || !sig.value(x, 0).is_one()) norm.fail("sigma(1, g) != 1 at " + H.basis_name(x));
      for (long long y : G) {
        ++inv.checked;
        if (!(sig.value(x, y) * sig.value(x, y, true)).is_one()) inv.fail(H.basis_name(x) + "," + H.basis_name(y));
        long long xy = H.mul_basis(x, y)[0].key;
        for (long long z : G) {
          ++cocycle.checked;
          long long yz = H.mul_basis(y, z)[0].key;
          if (sig.value(x, y) * sig.value(xy, z) != sig.value(y, z) * sig.value(x, yz)) cocycle.fail(H.basis_name(x) + "," + H.basis_name(y) + "," + H.basis_name(z));
        }
      }
    }
    rep.add(tag + "sigma normalized", norm.ok(), norm.witness());
    rep.add(tag + "sigma convolution-invertible on group-likes", inv.ok(), inv.witness());
    rep.add(tag + "sigma 2-cocycle on group-likes", cocycle.ok(), cocycle.witness());
  }

  // relations in H^sigma
  auto Kt = [&](const Exponent& a) { return H.basis(H.index(zero_exp(n), reduce(a, ell))); };
  auto xt = [&](int i) { return H.basis(H.index(unit_exp(n, i), zero_exp(n))); };
  TwistedAlgebra Hs(H, sig);
  auto tm = [&](const Elem& a, const Elem& b) { return Hs.mul(a, b); };
  {
    bool r1 = true, r2 = true, r3 = true, r4 = true, nil = true;
    for (long long x : G)
      for (long long y : G) {
        Exponent a = H.alpha_of(x), b = H.alpha_of(y);
        if (!(tm(H.basis(x), H.basis(y)) == Kt(a + b))) r1 = false;
      }
    for (int i = 0; i < n; ++i) {
      Exponent ei = unit_exp(n, i);
      if (!(tm(Kt(ei), Kt(-ei)) == H.unit())) r2 = false;
      for (int j = 0; j < n; ++j) {
        Exponent ej = unit_exp(n, j);
        Elem conj = tm(tm(Kt(ei), xt(j)), Kt(-ei));
        CycInt c = CycInt::q(f, theta_exp(ei, ej) + (i == j ? 1 : 0));
        if (!(conj == canon(c * xt(j)))) r3 = false;
        if (!(tm(xt(i), xt(j)) == canon(CycInt::q(f, theta_exp(ei, ej)) * tm(xt(j), xt(i))))) r4 = false;
      }
      Elem p = H.unit();
      for (int k = 0; k < ell; ++k) p = tm(p, xt(i));
      if (!p.empty()) nil = false;
    }
    rep.add(tag + "(r1) K(a) K(b) = K(a+b)", r1);
    rep.add(tag + "(r2) K(e_i) K(e_i)^-1 = 1", r2);
    rep.add(tag + "(r3) K(e_i) x_j K(e_i)^-1 = theta(e_i,e_j) q^{d_ij} x_j", r3);
    rep.add(tag + "(r4) x_i x_j = theta(e_i,e_j) x_j x_i", r4);
    rep.add(tag + "x_i^ell = 0", nil);
    Exponent e1 = unit_exp(n, 0);
    if (n >= 2) {
      Exponent e2 = unit_exp(n, 1);
      rep.add(tag + "K(e1) x2 = theta(e1,e2) x2 K(e1)", tm(Kt(e1), xt(1)) == canon(CycInt::q(f, theta_exp(e1, e2)) * tm(xt(1), Kt(e1))));
      rep.add(tag + "x1 x2 = theta(e1,e2) x2 x1", tm(xt(0), xt(1)) == canon(CycInt::q(f, theta_exp(e1, e2)) * tm(xt(1), xt(0))));
    }
  }

  // psi(x^g K(a)) = x_1^g1 .. x_n^gn K(a) in H^sigma; an algebra and coalgebra isomorphism A -> H^sigma
  {
    std::vector<Elem> psi(static_cast<size_t>(A->dim()));
    bool bijective = true;
    std::vector<char> hit(static_cast<size_t>(H.dim()), 0);
    for (long long i = 0; i < A->dim(); ++i) {
      Exponent g = A->gamma_of(i), a = A->alpha_of(i);
      Elem w = H.unit();
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < g[k]; ++r) w = tm(w, xt(k));
      w = tm(w, Kt(a));
      if (w.size() != 1 || hit[static_cast<size_t>(w[0].key)]) bijective = false;
      else hit[static_cast<size_t>(w[0].key)] = 1;
      psi[static_cast<size_t>(i)] = w;
    }
    rep.add(tag + "psi maps basis to scaled basis bijectively", bijective);
    Tally alg, coalg;
    for (long long i = 0; i < A->dim(); ++i) {
      for (long long j = 0; j < A->dim(); ++j) {
        ++alg.checked;
        Elem ab = A->mul_basis(i, j);
        Elem rhs;
        for (const auto& t : ab)
          for (const auto& u : psi[static_cast<size_t>(t.key)]) rhs.push_back(Term{u.key, t.c * u.c});
        if (!(tm(psi[static_cast<size_t>(i)], psi[static_cast<size_t>(j)]) == canon(rhs))) alg.fail(A->basis_name(i) + "," + A->basis_name(j));
      }
      ++coalg.checked;
      Elem lhs = H.comul(psi[static_cast<size_t>(i)]);
      Elem rhs;
      long long dA = A->dim();
      for (const auto& t : A->comul_ref(i))
        for (const auto& u : psi[static_cast<size_t>(t.key / dA)])
          for (const auto& w : psi[static_cast<size_t>(t.key % dA)]) rhs.push_back(Term{u.key * H.dim() + w.key, t.c * u.c * w.c});
      if (!(lhs == canon(rhs))) coalg.fail(A->basis_name(i));
    }
    rep.add(tag + "psi(ab) = psi(a) ._sigma psi(b)", alg.ok(), alg.witness());
    rep.add(tag + "coproducts coincide under psi", coalg.ok(), coalg.witness());
  }
  return rep;
}

}  // namespace taftknot
