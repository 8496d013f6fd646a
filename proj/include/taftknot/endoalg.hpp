#pragma once

#include "taftknot/repmod.hpp"

namespace taftknot {

// ---------------------------------------------------------------------------
// actions of D(A) on tensor powers of a module

inline std::vector<long long> split_key(long long key, long long d, int r) {
  std::vector<long long> idx(r);
  for (int k = r - 1; k >= 0; --k) {
    idx[k] = key % d;
    key /= d;
  }
  return idx;
}

// generators of D(A) acting on M^{(x) r}; the dual part uses the opposite coproduct
inline std::vector<std::pair<std::string, IMat>> tensor_power_actions(const SimpleModule& M, int r) {
  if (r < 1) throw Error("tensor power must be at least 1");
  const TaftAlgebra& A = M.A();
  const TaftDual& Ad = M.dual();
  long long dA = A.dim();
  int d = M.dim();
  long long N = 1;
  for (int i = 0; i < r; ++i) N *= d;
  const CycField* f = M.field();
  auto iterate = [&](const HopfData& H, Elem x) {
    for (int a = 1; a < r; ++a) x = H.comul_slot(x, a, a - 1);
    return x;
  };
  std::vector<std::pair<std::string, IMat>> out;
  std::map<long long, IMat> a_cache, d_cache;
  auto actA = [&](long long i) -> const IMat& {
    auto it = a_cache.find(i);
    if (it == a_cache.end()) it = a_cache.emplace(i, M.act_A_basis(i)).first;
    return it->second;
  };
  auto actD = [&](long long i) -> const IMat& {
    auto it = d_cache.find(i);
    if (it == d_cache.end()) it = d_cache.emplace(i, M.act_dual_basis(i)).first;
    return it->second;
  };
  for (const auto& g : A.generators()) {
    IMat m(static_cast<int>(N), static_cast<int>(N), f);
    for (const auto& t : iterate(A, g)) {
      auto idx = split_key(t.key, dA, r);
      IMat k = actA(idx[0]);
      for (int j = 1; j < r && !k.is_zero(); ++j) k = k.kron(actA(idx[j]));
      if (!k.is_zero()) m += t.c * k;
    }
    out.emplace_back(A.elem_str(g), std::move(m));
  }
  for (const auto& p : Ad.generators()) {
    IMat m(static_cast<int>(N), static_cast<int>(N), f);
    for (const auto& t : iterate(Ad, p)) {
      auto idx = split_key(t.key, dA, r);
      IMat k = actD(idx[r - 1]);
      for (int j = r - 2; j >= 0 && !k.is_zero(); --j) k = k.kron(actD(idx[j]));
      if (!k.is_zero()) m += t.c * k;
    }
    out.emplace_back(Ad.elem_str(p), std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// commutant of a set of operators

namespace detail {

// unknowns X(a,b) allowed by the diagonal operators: a and b carry the same weights
inline std::vector<std::pair<int, int>> commutant_unknowns(const std::vector<IMat>& ops, int N) {
  std::vector<std::vector<CycInt>> sig(N);
  for (const auto& g : ops)
    if (g.is_diagonal())
      for (int a = 0; a < N; ++a) sig[a].push_back(g(a, a));
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (sig[a] == sig[b]) out.emplace_back(a, b);
  return out;
}

// sparse rows of the constraints g X - X g = 0 for the non-diagonal operators
inline std::vector<std::vector<std::pair<int, CycInt>>> commutant_rows(const std::vector<IMat>& ops, int N,
                                                                       const std::vector<std::pair<int, int>>& unknowns) {
  std::map<std::pair<int, int>, int> col;
  for (size_t k = 0; k < unknowns.size(); ++k) col[unknowns[k]] = static_cast<int>(k);
  std::vector<std::vector<std::pair<int, CycInt>>> rows;
  for (const auto& g : ops) {
    if (g.is_diagonal()) continue;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        std::map<int, CycInt> row;
        for (int k = 0; k < N; ++k) {
          if (!g(i, k).is_zero()) {
            auto it = col.find({k, j});
            if (it != col.end()) row[it->second] += g(i, k);
          }
          if (!g(k, j).is_zero()) {
            auto it = col.find({i, k});
            if (it != col.end()) row[it->second] -= g(k, j);
          }
        }
        std::vector<std::pair<int, CycInt>> r;
        for (auto& [c, v] : row)
          if (!v.is_zero()) r.emplace_back(c, v);
        if (!r.empty()) rows.push_back(std::move(r));
      }
  }
  return rows;
}

// prime p = 1 mod ell and an element of order ell in F_p
struct PrimeSpecialization {
  unsigned long long p = 0, w = 0;
};

inline unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long p) {
  return static_cast<unsigned long long>(static_cast<unsigned __int128>(a) * b % p);
}
inline unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long p) {
  unsigned long long r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
inline bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
inline PrimeSpecialization prime_specialization(int ell, unsigned long long start = (1ULL << 30)) {
  unsigned long long p = start - start % ell + 1;
  while (!is_prime(p)) p += ell;
  for (unsigned long long g = 2;; ++g) {
    unsigned long long w = powmod(g, (p - 1) / ell, p);
    bool order_ell = w != 1;
    for (int d = 2; d < ell && order_ell; ++d)
      if (ell % d == 0 && powmod(w, ell / d, p) == 1) order_ell = false;
    if (order_ell) return {p, w};
  }
}

inline int rank_mod_p(std::vector<std::vector<unsigned long long>> m, unsigned long long p) {
  int rank = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    unsigned long long inv = powmod(m[rank][c], p - 2, p);
    for (size_t j = c; j < cols; ++j) m[rank][j] = mulmod(m[rank][j], inv, p);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == static_cast<size_t>(rank) || m[i][c] == 0) continue;
      unsigned long long fct = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (m[rank][j]) m[i][j] = (m[i][j] + p - mulmod(fct, m[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

struct CommutantResult {
  int dimension = 0;
  int unknowns = 0;
  int equations = 0;
  bool exact = true;  // false for the prime-field mode, which can only overcount
};

// dimension of {X : X g = g X for all ops}, exactly over Q(zeta)
inline CommutantResult commutant_dimension(const std::vector<IMat>& ops, long long max_unknowns = 4096) {
  if (ops.empty()) throw Error("no operators");
  int N = ops[0].rows();
  const CycField* f = ops[0].field();
  auto unknowns = detail::commutant_unknowns(ops, N);
  if (static_cast<long long>(unknowns.size()) > max_unknowns)
    throw Error("commutant system has " + std::to_string(unknowns.size()) + " unknowns, over the budget of " + std::to_string(max_unknowns));
  auto rows = detail::commutant_rows(ops, N, unknowns);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()), f);
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) m(static_cast<int>(i), c) = v.to_cyc();
  int rank = rows.empty() ? 0 : m.rank();
  return {static_cast<int>(unknowns.size()) - rank, static_cast<int>(unknowns.size()), static_cast<int>(rows.size()), true};
}

// Same system with q sent to an element of order ell in a large prime field. The rank can
// only drop there, so the result bounds the true dimension from above.
inline CommutantResult commutant_dimension_mod_p(const std::vector<IMat>& ops) {
  if (ops.empty()) throw Error("no operators");
  int N = ops[0].rows();
  const CycField* f = ops[0].field();
  auto sp = detail::prime_specialization(f->ell);
  std::vector<unsigned long long> wpow(f->phi);
  for (int i = 0; i < f->phi; ++i) wpow[i] = detail::powmod(sp.w, i, sp.p);
  auto reduce_p = [&](const CycInt& x) {
    unsigned long long r = 0;
    for (int i = 0; i < f->phi; ++i) {
      long long c = x.coeff(i) % static_cast<long long>(sp.p);
      if (c < 0) c += static_cast<long long>(sp.p);
      r = (r + detail::mulmod(static_cast<unsigned long long>(c), wpow[i], sp.p)) % sp.p;
    }
    return r;
  };
  auto unknowns = detail::commutant_unknowns(ops, N);
  auto rows = detail::commutant_rows(ops, N, unknowns);
  std::vector<std::vector<unsigned long long>> m(rows.size(), std::vector<unsigned long long>(unknowns.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) m[i][c] = reduce_p(v);
  int rank = detail::rank_mod_p(std::move(m), sp.p);
  return {static_cast<int>(unknowns.size()) - rank, static_cast<int>(unknowns.size()), static_cast<int>(rows.size()), false};
}

inline std::vector<IMat> action_matrices(const std::vector<std::pair<std::string, IMat>>& named) {
  std::vector<IMat> out;
  for (const auto& [n, m] : named) out.push_back(m);
  return out;
}

inline CommutantResult module_commutant_dimension(const SimpleModule& M, int r, int max_r = 2) {
  if (r > max_r) throw Error("commutant of tensor power " + std::to_string(r) + " is over the budget (max r = " + std::to_string(max_r) + ")");
  return commutant_dimension(action_matrices(tensor_power_actions(M, r)));
}

inline long long catalan(int r) {
  long long c = 1;
  for (int i = 0; i < r; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// dimension of the span of all products of the given operators
inline int algebra_span_dimension(const std::vector<IMat>& gens, int max_rounds = 8) {
  if (gens.empty()) return 0;
  int N = gens[0].rows();
  const CycField* f = gens[0].field();
  std::vector<IMat> basis;
  std::vector<std::vector<Cyc>> rows;
  auto try_add = [&](const IMat& x) {
    std::vector<Cyc> v;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) v.push_back(x(i, j).to_cyc());
    Matrix m(static_cast<int>(rows.size()) + 1, N * N, f);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < N * N; ++j) m(static_cast<int>(i), j) = rows[i][j];
    for (int j = 0; j < N * N; ++j) m(static_cast<int>(rows.size()), j) = v[j];
    if (m.rank() <= static_cast<int>(rows.size())) return false;
    rows.push_back(std::move(v));
    basis.push_back(x);
    return true;
  };
  try_add(IMat::identity(N, f));
  for (const auto& g : gens) try_add(g);
  for (int round = 0; round < max_rounds; ++round) {
    bool grew = false;
    std::vector<IMat> cur = basis;
    for (const auto& a : cur)
      for (const auto& g : gens) grew = try_add(a * g) || grew;
    if (!grew) break;
  }
  return static_cast<int>(basis.size());
}

// apply a two-slot operator at slots (k, k+1) of a vector in M^{(x) r} without forming the Kronecker product
inline std::vector<CycInt> apply_on_slots(const IMat& op, int d, int r, int k, const std::vector<CycInt>& v) {
  long long left = 1, right = 1;
  for (int i = 0; i < k; ++i) left *= d;
  for (int i = k + 2; i < r; ++i) right *= d;
  long long mid = static_cast<long long>(d) * d;
  std::vector<CycInt> out(v.size(), CycInt::zero(op.field()));
  for (long long a = 0; a < left; ++a)
    for (long long c = 0; c < right; ++c)
      for (long long i = 0; i < mid; ++i)
        for (long long j = 0; j < mid; ++j) {
          const CycInt& x = op(static_cast<int>(i), static_cast<int>(j));
          if (x.is_zero()) continue;
          const CycInt& y = v[(a * mid + j) * right + c];
          if (!y.is_zero()) out[(a * mid + i) * right + c] += x * y;
        }
  return out;
}

// ---------------------------------------------------------------------------
// BMW and Temperley-Lieb relations on tensor powers of the rank-2 self-dual module

struct BmwContext {
  int r = 2, ell = 5;
  std::shared_ptr<const SimpleModule> module;
  int dim = 0;
  std::vector<IMat> R, R_inv, e;  // slots (i, i+1), i = 0 .. r-2
  // s = q^-1/2, t = q^-3/2 and 1 + theta/omega = q^-1 + 2 + q
  CycInt s, s_inv, t, t_inv, loop;
  IMat quasi_projection;
  std::vector<CycInt> trivial_vector;  // spans the trivial summand of M (x) M
};

inline BmwContext bmw_context(int r, int ell, int max_r = 3) {
  if (r < 2) throw Error("BMW checks need r >= 2");
  if (r > max_r) throw Error("tensor power " + std::to_string(r) + " is over the budget (max r = " + std::to_string(max_r) + ")");
  BmwContext c;
  c.r = r;
  c.ell = ell;
  c.module = standard_module(2, ell);
  c.dim = c.module->dim();
  const CycField* f = c.module->field();
  auto ci = [&](long long quarter) { return CycInt::from_cyc(q_quarter(ell, quarter), f); };
  c.s = ci(-2);
  c.s_inv = ci(2);
  c.t = ci(-6);
  c.t_inv = ci(6);
  c.loop = CycInt::q(f, -1) + CycInt(f, 2) + CycInt::q(f, 1);
  const Braiding& br = c.module->braiding();
  auto ts = tensor_square_decompose(*c.module);
  c.quasi_projection = IMat::from_matrix(ts.quasi_projection);
  for (const auto& x : ts.trivial_vector) c.trivial_vector.push_back(CycInt::from_cyc(x, f));
  for (int i = 0; i + 1 < r; ++i) {
    c.R.push_back(on_slots(br.R, c.dim, r, i));
    c.R_inv.push_back(on_slots(br.Rinv, c.dim, r, i));
    c.e.push_back(on_slots(c.quasi_projection, c.dim, r, i));
  }
  return c;
}

inline Report check_bmw(const BmwContext& c) {
  Report rep;
  const CycField* f = c.module->field();
  long long N = 1;
  for (int i = 0; i < c.r; ++i) N *= c.dim;
  IMat I = IMat::identity(static_cast<int>(N), f);
  std::string tag = "r=" + std::to_string(c.r) + " ell=" + std::to_string(c.ell) + ": ";
  int n = c.r - 1;
  auto label = [](const char* rel, int i) { return std::string(rel) + " i=" + std::to_string(i + 1); };
  for (int i = 0; i < n; ++i) {
    const IMat& R = c.R[i];
    IMat cubic = (R - c.s * I) * (R + c.s_inv * I) * (R - c.t_inv * I);
    rep.add(tag + label("cubic: (R-s)(R+s^-1)(R-t^-1) = 0", i), cubic.is_zero());
    rep.add(tag + label("R R^-1 = 1", i), R * c.R_inv[i] == I);
    rep.add(tag + label("absorb: e R = R e = t^-1 e", i), c.e[i] * R == c.t_inv * c.e[i] && R * c.e[i] == c.t_inv * c.e[i]);
    rep.add(tag + label("loop: e^2 = (q^-1+2+q) e", i), c.e[i] * c.e[i] == c.loop * c.e[i]);
  }
  for (int i = 0; i + 1 < n; ++i)
    rep.add(tag + label("braid: R_i R_i+1 R_i = R_i+1 R_i R_i+1", i), c.R[i] * c.R[i + 1] * c.R[i] == c.R[i + 1] * c.R[i] * c.R[i + 1]);
  for (int i = 0; i < n; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 0 || j >= n) continue;
      std::string pair = " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
      rep.add(tag + "kink: e_i R_j e_i = t e_i" + pair, c.e[i] * c.R[j] * c.e[i] == c.t * c.e[i]);
      rep.add(tag + "kink: e_i R_j^-1 e_i = t^-1 e_i" + pair, c.e[i] * c.R_inv[j] * c.e[i] == c.t_inv * c.e[i]);
      rep.add(tag + "snake: e_i e_j e_i = e_i" + pair, c.e[i] * c.e[j] * c.e[i] == c.e[i]);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      std::string pair = " i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
      rep.add(tag + "far: R_i R_j = R_j R_i" + pair, c.R[i] * c.R[j] == c.R[j] * c.R[i]);
      rep.add(tag + "far: e_i e_j = e_j e_i" + pair, c.e[i] * c.e[j] == c.e[j] * c.e[i]);
    }
  if (c.r >= 3) {
    // e_1 R_2^{+-1} on (trivial vector) (x) b_i
    int d = c.dim;
    for (int i = 0; i < d; ++i) {
      std::vector<CycInt> v(static_cast<size_t>(N), CycInt::zero(f));
      for (int k = 0; k < d * d; ++k) v[static_cast<size_t>(k) * d * (N / (d * d * d)) + static_cast<size_t>(i) * (N / (d * d * d))] = c.trivial_vector[k];
      for (int sign : {1, -1}) {
        const IMat& R = sign > 0 ? c.module->braiding().R : c.module->braiding().Rinv;
        auto w = apply_on_slots(c.quasi_projection, d, c.r, 0, apply_on_slots(R, d, c.r, 1, v));
        const CycInt& lam = sign > 0 ? c.t : c.t_inv;
        bool ok = true;
        for (long long k = 0; k < N; ++k)
          if (w[k] != lam * v[k]) ok = false;
        rep.add(tag + "e_1 R_2^" + (sign > 0 ? "+1" : "-1") + " (v00 (x) b" + std::to_string(i + 1) + ") = t^" + (sign > 0 ? "+1" : "-1") + " v00 (x) b" + std::to_string(i + 1), ok);
      }
    }
  }
  return rep;
}

// the span of {1, R_1, e_1} and products against the commutant, at r = 2
struct StrictnessReport {
  int span_dimension = 0;
  int commutant_dimension = 0;
  bool strict = false;
};

inline StrictnessReport bmw_image_strictness(int ell) {
  auto c = bmw_context(2, ell);
  StrictnessReport s;
  s.span_dimension = algebra_span_dimension({c.R[0], c.R_inv[0], c.e[0]});
  s.commutant_dimension = module_commutant_dimension(*c.module, 2).dimension;
  s.strict = s.span_dimension < s.commutant_dimension;
  return s;
}

}  // namespace taftknot
