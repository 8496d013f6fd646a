#pragma once

#include <memory>
#include <optional>

#include "taftknot/hopf.hpp"
#include "taftknot/imat.hpp"

namespace taftknot {

// [ -tilde(beta) + 2 beta - alpha ]
inline Exponent kappa_ab(const Exponent& alpha, const Exponent& beta, int ell) { return reduce(-tilde(beta) + scale(beta, 2) - alpha, ell); }

// the coefficient of x_i acting on x^g K(beta - g):  q^{eps_i * g} (q^{alpha_i} - theta(beta, eps_i) q^{beta_i - g_i})
inline Cyc raise_coeff(const Exponent& g, int i, const Exponent& alpha, const Exponent& beta, int ell) {
  int n = static_cast<int>(g.size());
  Exponent ei = unit_exp(n, i);
  Cyc c = Cyc::q(ell, alpha[i]) - Cyc::q(ell, theta_exp(beta, ei) + beta[i] - g[i]);
  return Cyc::q(ell, star(ei, g)) * c;
}

// x^gamma K(xi) acting on K(beta), read along the chain 0, e_n, .., gamma_n e_n, e_{n-1} + gamma_n e_n, .., gamma
inline Cyc mu(const Exponent& gamma, const Exponent& xi, const Exponent& alpha, const Exponent& beta, int ell) {
  if (!leq(gamma, kappa_ab(alpha, beta, ell))) return Cyc::zero(ell);
  for (int v : gamma)
    if (v < 0) return Cyc::zero(ell);
  int n = static_cast<int>(gamma.size());
  Cyc r = Cyc::q(ell, dot(alpha, xi));
  Exponent eta = zero_exp(n);
  for (int i = n - 1; i >= 0; --i)
    for (int k = 0; k < gamma[i]; ++k) {
      r *= raise_coeff(eta, i, alpha, beta, ell);
      eta[i] += 1;
    }
  return r;
}

// r with beta = [i0 r] and alpha = [-tilde(beta)], or nothing
inline std::optional<Exponent> self_dual_tuple(const Exponent& alpha, const Exponent& beta, int ell) {
  if (ell % 2 == 0) throw Error("self-duality is only classified for odd ell, got " + std::to_string(ell));
  int i0 = (ell + 1) / 2;
  Exponent b = reduce(beta, ell);
  Exponent r = reduce(scale(b, 2), ell);  // 2 i0 = 1 mod ell
  if (reduce(scale(r, i0), ell) != b) throw Error("i0 is not invertible mod ell");
  if (reduce(alpha, ell) != reduce(-tilde(b), ell)) return std::nullopt;
  return r;
}
inline bool is_self_dual(const Exponent& alpha, const Exponent& beta, int ell) { return self_dual_tuple(alpha, beta, ell).has_value(); }
inline std::pair<Exponent, Exponent> self_dual_parameters(const Exponent& r, int ell) {
  if (ell % 2 == 0) throw Error("self-dual modules need odd ell");
  Exponent beta = reduce(scale(r, (ell + 1) / 2), ell);
  return {reduce(-tilde(beta), ell), beta};
}

struct Braiding {
  IMat R, Rinv;
  // pi (x) pi of the universal R and its inverse as (A part, dual part) pairs
  std::vector<std::pair<IMat, IMat>> rho, rho_inv;
};

struct RibbonData {
  IMat u, u_inv, G, G_inv, h;
  CycInt v;
  CycInt quantum_dimension;
};

// The simple module A_{alpha,beta}: span of x^g K(beta - g), g <= kappa(alpha, beta).
class SimpleModule {
 public:
  SimpleModule(std::shared_ptr<const TaftAlgebra> A, Exponent alpha, Exponent beta)
      : A_(std::move(A)), dual_(build_dual(A_)), n_(A_->rank()), ell_(A_->ell()), f_(A_->field()) {
    alpha_ = reduce(alpha, ell_);
    beta_ = reduce(beta, ell_);
    kappa_ = kappa_ab(alpha_, beta_, ell_);
    basis_ = box(kappa_);
    dim_ = static_cast<int>(basis_.size());
    for (int i = 0; i < n_; ++i) {
      IMat x(dim_, dim_, f_);
      for (int c = 0; c < dim_; ++c) {
        Exponent g = basis_[c] + unit_exp(n_, i);
        int r = position(g);
        if (r >= 0) x(r, c) = CycInt::from_cyc(raise_coeff(basis_[c], i, alpha_, beta_, ell_), f_);
      }
      x_.push_back(x);
    }
  }

  const TaftAlgebra& A() const { return *A_; }
  const TaftDual& dual() const { return *dual_; }
  std::shared_ptr<const TaftAlgebra> A_ptr() const { return A_; }
  int rank() const { return n_; }
  int ell() const { return ell_; }
  const CycField* field() const { return f_; }
  const Exponent& alpha() const { return alpha_; }
  const Exponent& beta() const { return beta_; }
  const Exponent& kappa() const { return kappa_; }
  const std::vector<Exponent>& basis() const { return basis_; }
  int dim() const { return dim_; }
  std::string name() const { return "M(" + exp_str(alpha_) + "," + exp_str(beta_) + ")"; }
  std::string basis_name(int c) const { return "x^" + exp_str(basis_[c]) + "K" + exp_str(reduce(beta_ - basis_[c], ell_)); }

  int position(const Exponent& g) const {
    for (int k = 0; k < n_; ++k)
      if (g[k] < 0 || g[k] > kappa_[k]) return -1;
    int p = 0;
    for (int k = n_ - 1; k >= 0; --k) p = p * (kappa_[k] + 1) + g[k];
    return p;
  }

  // K(a) on x^g K(beta - g): q^{<alpha + tilde(g), a>}
  IMat act_K(const Exponent& a) const {
    std::vector<CycInt> d;
    for (const auto& g : basis_) d.push_back(CycInt::q(f_, dot(alpha_ + tilde(g), a)));
    return IMat::diagonal(d, f_);
  }
  const IMat& act_x(int i) const { return x_[i]; }
  // x^g K(a) = x_1^{g_1} .. x_n^{g_n} K(a)
  IMat act_A_basis(long long idx) const {
    Exponent g = A_->gamma_of(idx);
    if (!leq(g, kappa_)) return IMat(dim_, dim_, f_);
    IMat m = act_K(A_->alpha_of(idx));
    for (int i = n_ - 1; i >= 0; --i)
      for (int k = 0; k < g[i]; ++k) m = x_[i] * m;
    return m;
  }
  IMat act_A(const Elem& a) const {
    IMat m(dim_, dim_, f_);
    for (const auto& t : a) m += t.c * act_A_basis(t.key);
    return m;
  }
  // e*(g, a) on x^eta K(beta - eta): (eta choose g) q^{-(eta-g)*g} x^{eta-g} K(beta - eta + g) when a = beta - eta
  IMat act_dual_basis(long long idx) const {
    Exponent g = A_->gamma_of(idx), a = A_->alpha_of(idx);
    IMat m(dim_, dim_, f_);
    if (!leq(g, kappa_)) return m;
    for (int c = 0; c < dim_; ++c) {
      const Exponent& eta = basis_[c];
      if (!leq(g, eta) || reduce(beta_ - eta, ell_) != a) continue;
      m(position(eta - g), c) = A_->binomial(eta, g) * CycInt::q(f_, -star(eta - g, g));
    }
    return m;
  }
  IMat act_dual(const Elem& p) const {
    IMat m(dim_, dim_, f_);
    for (const auto& t : p) {
      if (!leq(A_->gamma_of(t.key), kappa_)) continue;
      m += t.c * act_dual_basis(t.key);
    }
    return m;
  }
  // k(w) on x^g K(beta - g): q^{<w, beta - g>}
  IMat act_k(const Exponent& w) const {
    std::vector<CycInt> d;
    for (const auto& g : basis_) d.push_back(CycInt::q(f_, dot(w, beta_ - g)));
    return IMat::diagonal(d, f_);
  }
  IMat act_X(int i) const { return act_dual(dual_->X(i)); }

  // K(e_i), x_i, k(e_i), X_i in that order
  std::vector<std::pair<std::string, IMat>> generator_actions() const {
    std::vector<std::pair<std::string, IMat>> out;
    for (int i = 0; i < n_; ++i) out.emplace_back("K(e" + std::to_string(i + 1) + ")", act_K(unit_exp(n_, i)));
    for (int i = 0; i < n_; ++i) out.emplace_back("x" + std::to_string(i + 1), act_x(i));
    for (int i = 0; i < n_; ++i) out.emplace_back("k(e" + std::to_string(i + 1) + ")", act_k(unit_exp(n_, i)));
    for (int i = 0; i < n_; ++i) out.emplace_back("X" + std::to_string(i + 1), act_X(i));
    return out;
  }

  // A-basis indices whose action can be nonzero
  std::vector<long long> active_A_indices() const {
    std::vector<long long> out;
    for (const auto& g : box(kappa_))
      for (long long c = 0; c < A_->group_order(); ++c) out.push_back(A_->index(g, A_->dec(c)));
    return out;
  }

  const Braiding& braiding() const {
    std::call_once(braid_once_, [&] { braid_ = compute_braiding(); });
    return braid_;
  }
  const RibbonData& ribbon() const {
    std::call_once(ribbon_once_, [&] { ribbon_ = compute_ribbon(); });
    return ribbon_;
  }

  // action of D on M (x) M through the coproduct, for the generators above
  std::vector<std::pair<std::string, IMat>> tensor_generator_actions() const {
    std::vector<std::pair<std::string, IMat>> out;
    long long dA = A_->dim();
    for (const auto& g : A_->generators()) {
      IMat m(dim_ * dim_, dim_ * dim_, f_);
      for (const auto& t : A_->comul(g)) m += t.c * act_A_basis(t.key / dA).kron(act_A_basis(t.key % dA));
      out.emplace_back("Delta " + A_->elem_str(g), m);
    }
    for (const auto& p : dual_->generators()) {
      IMat m(dim_ * dim_, dim_ * dim_, f_);
      // opposite coproduct on the dual factor
      for (const auto& t : dual_->comul(p)) {
        if (!leq(A_->gamma_of(t.key / dA), kappa_) || !leq(A_->gamma_of(t.key % dA), kappa_)) continue;
        m += t.c * act_dual_basis(t.key % dA).kron(act_dual_basis(t.key / dA));
      }
      out.emplace_back("Delta " + dual_->elem_str(p), m);
    }
    return out;
  }

 private:
  Braiding compute_braiding() const {
    Braiding b;
    int d2 = dim_ * dim_;
    IMat S(d2, d2, f_), Sinv(d2, d2, f_);
    for (long long i : active_A_indices()) {
      IMat E2 = act_dual_basis(i);
      if (E2.is_zero()) continue;
      IMat E = act_A_basis(i);
      if (!E.is_zero()) {
        b.rho.emplace_back(E, E2);
        S += E.kron(E2);
      }
      IMat Ei = act_A(A_->antipode_basis(i));
      if (!Ei.is_zero()) {
        b.rho_inv.emplace_back(Ei, E2);
        Sinv += Ei.kron(E2);
      }
    }
    IMat flip(d2, d2, f_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) flip(j * dim_ + i, i * dim_ + j) = CycInt::one(f_);
    b.R = flip * S;
    // R^{-1} = (pi (x) pi)(R^{-1}) composed with the flip on the other side
    b.Rinv = Sinv * flip;
    return b;
  }

  RibbonData compute_ribbon() const {
    if (ell_ % 2 == 0) throw NotRibbon("no ribbon element for even ell = " + std::to_string(ell_));
    RibbonData r;
    r.u = IMat(dim_, dim_, f_);
    r.u_inv = IMat(dim_, dim_, f_);
    for (long long i : active_A_indices()) {
      IMat a = act_A_basis(i);
      if (a.is_zero()) continue;
      // u = sum S^{-1}(e*_i) b_i, u^{-1} = sum e*_i s^2(b_i)
      r.u += act_dual(dual_->antipode_inv(dual_->basis(i))) * a;
      r.u_inv += act_dual_basis(i) * act_A(A_->antipode(A_->antipode(A_->basis(i))));
    }
    int half_kappa = (ell_ - 1) / 2, i0 = (ell_ + 1) / 2;
    IMat g = act_dual(dual_->k_tilde(Exponent(n_, half_kappa))) * act_K(Exponent(n_, i0));
    IMat v = r.u * g;
    auto c = v.as_scalar();
    if (!c) throw Error("ribbon element does not act as a scalar on " + name());
    r.v = *c;
    r.G = r.u_inv * v;
    // G is diagonal with root-of-unity entries on this basis
    if (!r.G.is_diagonal()) throw Error("twist element is not diagonal on " + name());
    std::vector<CycInt> inv;
    for (const auto& e : r.G.diag()) inv.push_back(invert_root(e));
    r.G_inv = IMat::diagonal(inv, f_);
    r.h = act_dual(dual_->k_tilde(Exponent(n_, -1))) * act_K(Exponent(n_, -(ell_ - 1)));
    r.quantum_dimension = r.G.trace();
    return r;
  }

  // inverse of +-q^e
  CycInt invert_root(const CycInt& x) const {
    for (long long e = 0; e < ell_; ++e) {
      if (x == CycInt::q(f_, e)) return CycInt::q(f_, -e);
      if (x == -CycInt::q(f_, e)) return -CycInt::q(f_, -e);
    }
    throw Error("expected a signed power of q, got " + x.str());
  }

  std::shared_ptr<const TaftAlgebra> A_;
  std::shared_ptr<const TaftDual> dual_;
  int n_, ell_;
  const CycField* f_;
  Exponent alpha_, beta_, kappa_;
  std::vector<Exponent> basis_;
  int dim_ = 0;
  std::vector<IMat> x_;
  mutable std::once_flag braid_once_, ribbon_once_;
  mutable Braiding braid_;
  mutable RibbonData ribbon_;
};

inline std::shared_ptr<const SimpleModule> build_module(std::shared_ptr<const TaftAlgebra> A, const Exponent& alpha, const Exponent& beta) {
  return std::make_shared<const SimpleModule>(std::move(A), alpha, beta);
}
inline std::shared_ptr<const SimpleModule> self_dual_module(std::shared_ptr<const TaftAlgebra> A, const Exponent& r) {
  auto [alpha, beta] = self_dual_parameters(r, A->ell());
  return build_module(std::move(A), alpha, beta);
}
// the module with r = (1, .., 1): dimension 2^n
inline std::shared_ptr<const SimpleModule> standard_module(int n, int ell) { return self_dual_module(build_taft(n, ell), ones_exp(n)); }

// ---------------------------------------------------------------------------
// checks

inline bool braid_equation(const IMat& R, int d) {
  IMat R12 = on_slots(R, d, 3, 0), R23 = on_slots(R, d, 3, 1);
  return R12 * R23 * R12 == R23 * R12 * R23;
}

// functional x -> p(s^{-1}(h3) x h1) paired with h2, i.e. (eps|h)(p|1) = sum (p'|h2)
inline std::vector<std::pair<Elem, Elem>> straighten(const TaftAlgebra& A, long long h, const Elem& p) {
  long long d = A.dim();
  std::unordered_map<long long, CycInt> pc;
  for (const auto& t : p) pc.emplace(t.key, t.c);
  Elem tri = A.comul_slot(A.comul(A.basis(h)), 2, 1);
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& t : tri) {
    long long h1 = t.key / (d * d), h2 = (t.key / d) % d, h3 = t.key % d;
    Elem left = A.antipode_inv(A.basis(h3));
    Elem f;
    for (long long x = 0; x < d; ++x) {
      Elem y = A.mul(A.mul(left, A.basis(x)), A.basis(h1));
      CycInt v = CycInt::zero(A.field());
      for (const auto& s : y) {
        auto it = pc.find(s.key);
        if (it != pc.end()) v += s.c * it->second;
      }
      if (!v.is_zero()) f.push_back(Term{x, t.c * v});
    }
    if (!f.empty()) out.emplace_back(canon(std::move(f)), A.basis(h2));
  }
  return out;
}

// irreducibility spot check: no coordinate subspace is stable under all generators
inline bool no_invariant_coordinate_subspace(const SimpleModule& M) {
  int d = M.dim();
  if (d > 8) throw Error("coordinate-subspace check only for dim <= 8");
  auto gens = M.generator_actions();
  for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
    bool stable = true;
    for (const auto& [name, g] : gens) {
      for (int c = 0; c < d && stable; ++c) {
        if (!(mask >> c & 1)) continue;
        for (int r = 0; r < d; ++r)
          if (!(mask >> r & 1) && !g(r, c).is_zero()) {
            stable = false;
            break;
          }
      }
      if (!stable) break;
    }
    if (stable) return false;
  }
  return true;
}

// module axioms on generators, braiding and ribbon consistency
inline Report verify_module(const SimpleModule& M, bool with_ribbon = true) {
  Report rep;
  const std::string tag = M.name() + " over " + M.A().name() + ": ";
  const TaftAlgebra& A = M.A();
  const TaftDual& Ad = M.dual();
  int d = M.dim();
  const CycField* f = M.field();
  IMat I = IMat::identity(d, f);

  {
    Tally t;
    for (const auto& g : A.generators()) {
      IMat pg = M.act_A(g);
      for (long long b = 0; b < A.dim() && t.ok(); ++b) {
        ++t.checked;
        if (!(M.act_A(A.mul(g, A.basis(b))) == pg * M.act_A_basis(b))) t.fail(A.elem_str(g) + " * " + A.basis_name(b));
      }
    }
    rep.add(tag + "A acts (generators x basis)", t.ok() && M.act_A(A.unit()) == I, t.witness());
  }
  {
    Tally t;
    for (const auto& p : Ad.generators()) {
      IMat pp = M.act_dual(p);
      for (long long b = 0; b < Ad.dim() && t.ok(); ++b) {
        ++t.checked;
        if (!(M.act_dual(Ad.mul(p, Ad.basis(b))) == pp * M.act_dual_basis(b))) t.fail(Ad.elem_str(p) + " * " + Ad.basis_name(b));
      }
    }
    rep.add(tag + "A* acts (generators x basis)", t.ok() && M.act_dual(Ad.unit()) == I, t.witness());
  }
  {
    Tally t;
    for (const auto& h : A.generators())
      for (const auto& p : Ad.generators()) {
        ++t.checked;
        IMat rhs(d, d, f);
        for (const auto& [pp, h2] : straighten(A, h.front().key, p)) rhs += M.act_dual(pp) * M.act_A(h2);
        if (!(h.front().c * (M.act_A_basis(h.front().key) * M.act_dual(p)) == rhs)) t.fail(A.elem_str(h) + " past " + Ad.elem_str(p));
      }
    rep.add(tag + "cross relations", t.ok(), t.witness());
  }
  if (d <= 8) rep.add(tag + "no invariant coordinate subspace", no_invariant_coordinate_subspace(M));

  const Braiding& br = M.braiding();
  IMat I2 = IMat::identity(d * d, f);
  rep.add(tag + "R R^-1 = 1", br.R * br.Rinv == I2 && br.Rinv * br.R == I2);
  rep.add(tag + "braid equation", braid_equation(br.R, d));
  {
    Tally t;
    for (const auto& [name, g] : M.tensor_generator_actions()) {
      ++t.checked;
      if (!(br.R * g == g * br.R)) t.fail(name);
    }
    rep.add(tag + "R is a module map", t.ok(), t.witness());
  }
  if (!with_ribbon) return rep;

  const RibbonData& rd = M.ribbon();
  rep.add(tag + "u u^-1 = 1", rd.u * rd.u_inv == I && rd.u_inv * rd.u == I);
  {
    Tally t;
    for (const auto& g : A.generators()) {
      ++t.checked;
      if (!(rd.u * M.act_A(g) == M.act_A(A.antipode(A.antipode(g))) * rd.u)) t.fail(A.elem_str(g));
    }
    for (const auto& p : Ad.generators()) {
      ++t.checked;
      if (!(rd.u * M.act_dual(p) == M.act_dual(Ad.antipode_inv(Ad.antipode_inv(p))) * rd.u)) t.fail(Ad.elem_str(p));
    }
    rep.add(tag + "u x u^-1 = s^2(x) on generators", t.ok(), t.witness());
  }
  rep.add(tag + "G = u^-1 v", rd.G == rd.v * rd.u_inv && rd.G * rd.G_inv == I);
  rep.add(tag + "u^2 h = v^2", rd.u * rd.u * rd.h == (rd.v * rd.v) * I);
  {
    // G (x) G commutes with R
    IMat GG = rd.G.kron(rd.G);
    rep.add(tag + "G (x) G commutes with R", GG * br.R == br.R * GG);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// spectral data

// roots among +-q^j for a monic polynomial given low-to-high
inline std::vector<Cyc> signed_root_candidates(int ell) {
  std::vector<Cyc> out;
  for (int j = 0; j < ell; ++j) {
    out.push_back(Cyc::q(ell, j));
    out.push_back(-Cyc::q(ell, j));
  }
  return out;
}

inline Cyc eval_poly(const std::vector<Cyc>& p, const Cyc& x) {
  Cyc r = Cyc::zero(x.field()->ell);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// the smallest |k| with q^{k/4} = x, or nothing
inline std::optional<long long> quarter_exponent(const Cyc& x, int ell) {
  for (long long a = 0; a <= 2 * ell; ++a)
    for (long long k : {a, -a})
      if (q_quarter(ell, k) == x) return k;
  return std::nullopt;
}
inline std::string quarter_str(long long k) {
  if (k == 0) return "1";
  long long g = std::gcd(std::llabs(k), 4LL);
  long long num = k / g, den = 4 / g;
  return "q^" + (den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den));
}
// +-q^{k/4} rendering of a signed root of unity
inline std::string signed_root_str(const Cyc& x, int ell) {
  if (auto k = quarter_exponent(x, ell)) return quarter_str(*k);
  if (auto k = quarter_exponent(-x, ell)) return "-" + quarter_str(*k);
  return x.str();
}

struct Eigenspace {
  Cyc value;
  int dim = 0;
  std::vector<std::vector<Cyc>> basis;
};

inline std::vector<Eigenspace> eigenspaces(const Matrix& m) {
  std::vector<Eigenspace> out;
  int ell = m.field()->ell;
  for (const Cyc& c : signed_root_candidates(ell)) {
    Matrix shifted = m - c * Matrix::identity(m.rows(), m.field());
    auto ns = shifted.nullspace();
    if (!ns.empty()) out.push_back({c, static_cast<int>(ns.size()), ns});
  }
  return out;
}

struct TensorSquare {
  std::vector<Eigenspace> spaces;
  int total_dim = 0;
  Matrix quasi_projection;
  std::vector<Cyc> trivial_vector;  // q b1b4 - b2b3 - b3b2 + b4b1
  bool trivial_is_eigenvector = false;
};

// eigen-decomposition of R on M (x) M for a rank-2 self-dual module
inline TensorSquare tensor_square_decompose(const SimpleModule& M) {
  int ell = M.ell();
  if (ell < 5) throw Error("tensor-square decomposition needs ell >= 5, got " + std::to_string(ell));
  if (M.rank() != 2 || M.dim() != 4) throw Error("tensor-square decomposition is for the 4-dimensional rank-2 module");
  const CycField* f = M.field();
  const Braiding& br = M.braiding();
  Matrix R = br.R.to_matrix(), Rinv = br.Rinv.to_matrix();
  TensorSquare ts;
  ts.spaces = eigenspaces(R);
  for (const auto& e : ts.spaces) ts.total_dim += e.dim;
  Cyc scale = (q_quarter(ell, -2) - q_quarter(ell, 2)).inverse();
  ts.quasi_projection = Matrix::identity(16, f) - scale * (R - Rinv);
  ts.trivial_vector.assign(16, Cyc::zero(ell));
  ts.trivial_vector[3] = Cyc::q(ell, 1);
  ts.trivial_vector[6] = -Cyc::one(ell);
  ts.trivial_vector[9] = -Cyc::one(ell);
  ts.trivial_vector[12] = Cyc::one(ell);
  auto Rv = R.apply(ts.trivial_vector);
  Cyc lam = q_quarter(ell, 6);
  bool eig = true;
  for (int i = 0; i < 16; ++i)
    if (Rv[i] != lam * ts.trivial_vector[i]) eig = false;
  ts.trivial_is_eigenvector = eig;
  return ts;
}

}  // namespace taftknot
