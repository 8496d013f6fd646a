#pragma once

#include "taftknot/hopf.hpp"
#include "taftknot/repmod.hpp"
#include "taftknot/skein.hpp"

namespace taftknot {

enum class Normalization { Regular, Ambient, UnknotOne };

inline std::string normalization_name(Normalization n) {
  switch (n) {
    case Normalization::Regular: return "regular";
    case Normalization::Ambient: return "ambient";
    default: return "unknot-one";
  }
}
inline Normalization parse_normalization(const std::string& s) {
  if (s == "regular") return Normalization::Regular;
  if (s == "ambient") return Normalization::Ambient;
  if (s == "unknot-one" || s == "unknot_one") return Normalization::UnknotOne;
  throw Error("unknown normalization '" + s + "'");
}

// ---------------------------------------------------------------------------
// matrix data of the evaluation: crossing decorations and twist

// A decoration term puts `over` on the over strand and `under` on the under strand.
using BeadPair = std::pair<IMat, IMat>;

// Rewrites sum E_i (x) F_i as sum over matrix units e_ab (x) (sum_i E_i(a,b) F_i).
inline std::vector<BeadPair> compress_pairs(const std::vector<BeadPair>& pairs, int d, const CycField* f) {
  std::vector<BeadPair> out;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      IMat F(d, d, f);
      for (const auto& [E, E2] : pairs)
        if (!E(a, b).is_zero()) F += E(a, b) * E2;
      if (F.is_zero()) continue;
      IMat unit(d, d, f);
      unit(a, b) = CycInt::one(f);
      out.emplace_back(std::move(unit), std::move(F));
    }
  return out;
}

inline IMat pair_sum(const std::vector<BeadPair>& pairs, int d, const CycField* f) {
  IMat s(d * d, d * d, f);
  for (const auto& [a, b] : pairs) s += a.kron(b);
  return s;
}

struct ToqaMatrices {
  std::shared_ptr<const SimpleModule> module;
  int dim = 0;
  const CycField* field = nullptr;
  std::vector<BeadPair> pos, neg;
  IMat G, G_inv, u, u_inv, h, h_inv;
  CycInt v;
  Cyc v_cyc, v_inv;

  IMat identity() const { return IMat::identity(dim, field); }
  // G^k x G^-k
  IMat dress(const IMat& x, int k) const {
    if (k == 0) return x;
    IMat r = x;
    const IMat& g = k > 0 ? G : G_inv;
    const IMat& gi = k > 0 ? G_inv : G;
    for (int i = 0; i < std::abs(k); ++i) r = g * r * gi;
    return r;
  }
  IMat G_pow(long long k) const { return k >= 0 ? G.pow(k) : G_inv.pow(-k); }
  IMat u_pow(long long k) const { return k >= 0 ? u.pow(k) : u_inv.pow(-k); }
  IMat h_pow(long long k) const { return k >= 0 ? h.pow(k) : h_inv.pow(-k); }
  int ell() const { return module->ell(); }
  int rank() const { return module->rank(); }
};

inline ToqaMatrices toqa_matrices(std::shared_ptr<const SimpleModule> M) {
  ToqaMatrices T;
  T.dim = M->dim();
  T.field = M->field();
  const Braiding& br = M->braiding();
  const RibbonData& rd = M->ribbon();
  T.pos = compress_pairs(br.rho, T.dim, T.field);
  T.neg = compress_pairs(br.rho_inv, T.dim, T.field);
  T.G = rd.G;
  T.G_inv = rd.G_inv;
  T.u = rd.u;
  T.u_inv = rd.u_inv;
  T.h = rd.h;
  std::vector<CycInt> hi;
  for (const auto& e : rd.h.diag()) hi.push_back(CycInt::from_cyc(e.to_cyc().inverse(), T.field));
  T.h_inv = IMat::diagonal(hi, T.field);
  T.v = rd.v;
  T.v_cyc = rd.v.to_cyc();
  T.v_inv = T.v_cyc.inverse();
  T.module = std::move(M);
  return T;
}

// per crossing, per decoration term: the bead on line 1 and on line 2
using CrossingBeads = std::vector<std::array<IMat, 2>>;

// A crossing whose down strand runs along line 1 is an upward crossing turned a quarter;
// the bead on that strand is dressed by G ( ) G^-1.
inline std::vector<CrossingBeads> decorate(const LinkDiagram& d, const ToqaMatrices& T) {
  std::vector<CrossingBeads> out;
  for (const auto& c : d.crossings) {
    const auto& pairs = c.sign > 0 ? T.pos : T.neg;
    CrossingBeads cb;
    for (const auto& [over, under] : pairs) {
      std::array<IMat, 2> b{c.over_line == 1 ? over : under, c.over_line == 2 ? over : under};
      if (c.sideways_left()) b[0] = T.dress(b[0], 1);
      cb.push_back(std::move(b));
    }
    out.push_back(std::move(cb));
  }
  return out;
}

// ---------------------------------------------------------------------------
// the traversal as a flat event list

struct WalkEvent {
  enum Kind : std::uint8_t { Bead, Twist, End } kind = Bead;
  int crossing = -1, line = 0;
  int power = 0;        // twist: +1 for G, -1 for G^-1
  bool closed = true;   // end of a closed component
};

inline void check_components(const LinkDiagram& d) {
  int open = 0;
  for (const auto& c : d.components)
    if (!c.closed) ++open;
  if (open > 1) throw Error("bead sliding handles at most one open strand");
  for (const auto& c : d.components)
    if (!c.closed && !(c.steps.front().up && c.steps.back().up))
      throw Error("the open strand must run upward at both ends");
}

// closed components first, the open strand (if any) last
inline std::vector<WalkEvent> walk_events(const LinkDiagram& d, const std::vector<Component>& comps) {
  std::vector<WalkEvent> ev;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& c : comps) {
      if (c.closed != (pass == 0)) continue;
      for (const auto& s : c.steps) {
        if (s.kind == Step::Crossing) ev.push_back({WalkEvent::Bead, s.crossing, s.line, 0, true});
        else if (s.kind == Step::Extremum && s.leftward()) ev.push_back({WalkEvent::Twist, -1, 0, s.extremum == Frag::CapCcw ? 1 : -1, true});
      }
      ev.push_back({WalkEvent::End, -1, 0, 0, c.closed});
    }
  (void)d;
  return ev;
}

struct StateSumStats {
  long long leaves = 0, pruned = 0;
};

// Sum over decoration states of (prod over closed components of tr P) times P of the open strand,
// where P multiplies beads and twists onto the left in traversal order.
inline IMat bead_state_sum(const LinkDiagram& d, const ToqaMatrices& T, const std::vector<Component>& comps,
                           StateSumStats* stats = nullptr) {
  check_components(d);
  auto beads = decorate(d, T);
  auto ev = walk_events(d, comps);
  std::vector<int> choice(d.crossings.size(), -1);
  IMat acc(T.dim, T.dim, T.field);
  StateSumStats st;
  IMat I = T.identity();
  std::function<void(size_t, IMat, CycInt)> dfs = [&](size_t e, IMat P, CycInt scal) {
    for (; e < ev.size(); ++e) {
      const WalkEvent& w = ev[e];
      if (w.kind == WalkEvent::Twist) {
        P = (w.power > 0 ? T.G : T.G_inv) * P;
      } else if (w.kind == WalkEvent::End) {
        if (w.closed) {
          scal = scal * P.trace();
          if (scal.is_zero()) {
            ++st.pruned;
            return;
          }
          P = I;
        }
      } else if (choice[w.crossing] >= 0) {
        P = beads[w.crossing][choice[w.crossing]][w.line - 1] * P;
        if (P.is_zero()) {
          ++st.pruned;
          return;
        }
      } else {
        const auto& terms = beads[w.crossing];
        for (size_t t = 0; t < terms.size(); ++t) {
          IMat Q = terms[t][w.line - 1] * P;
          if (Q.is_zero()) {
            ++st.pruned;
            continue;
          }
          choice[w.crossing] = static_cast<int>(t);
          dfs(e + 1, std::move(Q), scal);
        }
        choice[w.crossing] = -1;
        return;
      }
    }
    ++st.leaves;
    acc += scal * P;
  };
  dfs(0, I, CycInt::one(T.field));
  if (stats) *stats = st;
  return acc;
}

inline void check_crossings(const LinkDiagram& d, int budget) {
  if (d.crossing_count() > budget)
    throw Error("diagram has " + std::to_string(d.crossing_count()) + " crossings, over the budget of " + std::to_string(budget));
}

// sum over states of prod_components tr(G^Wd w)
inline Cyc regular_invariant(const LinkDiagram& d, const ToqaMatrices& T, int budget = 12) {
  if (!d.closed()) throw Error("link invariant needs a closed diagram");
  check_crossings(d, budget);
  if (d.components.empty()) return Cyc::one(T.ell());
  return bead_state_sum(d, T, d.components)(0, 0).to_cyc();
}

// w of a 1-1 tangle: sum over states of the product of dressed beads along the strand
inline IMat open_tangle_w(const LinkDiagram& t, const ToqaMatrices& T, int budget = 12) {
  if (t.components.size() != 1 || t.components[0].closed) throw Error("expected a 1-1 tangle");
  check_crossings(t, budget);
  IMat P = bead_state_sum(t, T, t.components);
  return P * T.G_pow(-t.components[0].turn2 / 2);
}

// ---------------------------------------------------------------------------
// the word form: each bead conjugated by G once per leftward cap (less leftward cups) after it

// w for one component in one state; later lines multiply on the left
inline IMat component_word(const Component& c, const std::vector<CrossingBeads>& beads, const std::vector<int>& state,
                           const ToqaMatrices& T) {
  IMat w = T.identity();
  for (const auto& l : c.lines) w = T.dress(beads[l.crossing][state[l.crossing]][l.line - 1], l.u_up) * w;
  return w;
}

// enumerates every state; for cross-checks on small diagrams
inline Cyc word_form_invariant(const LinkDiagram& d, const std::vector<Component>& comps, const ToqaMatrices& T,
                               long long max_states = 1000000) {
  auto beads = decorate(d, T);
  size_t C = d.crossings.size();
  long long total = 1;
  for (const auto& b : beads) {
    total *= static_cast<long long>(b.size());
    if (total > max_states) throw Error("too many states for the word form");
  }
  std::vector<int> state(C, 0);
  CycInt sum = CycInt::zero(T.field);
  for (long long s = 0; s < total; ++s) {
    long long r = s;
    for (size_t c = 0; c < C; ++c) {
      state[c] = static_cast<int>(r % static_cast<long long>(beads[c].size()));
      r /= static_cast<long long>(beads[c].size());
    }
    CycInt prod = CycInt::one(T.field);
    for (const auto& comp : comps) {
      prod = prod * (T.G_pow(comp.turn2 / 2) * component_word(comp, beads, state, T)).trace();
      if (prod.is_zero()) break;
    }
    sum += prod;
  }
  return sum.to_cyc();
}

inline IMat word_form_tangle(const LinkDiagram& t, const ToqaMatrices& T, long long max_states = 1000000) {
  if (t.components.size() != 1 || t.components[0].closed) throw Error("expected a 1-1 tangle");
  auto beads = decorate(t, T);
  long long total = 1;
  for (const auto& b : beads) {
    total *= static_cast<long long>(b.size());
    if (total > max_states) throw Error("too many states for the word form");
  }
  std::vector<int> state(beads.size());
  IMat sum(T.dim, T.dim, T.field);
  for (long long s = 0; s < total; ++s) {
    long long r = s;
    for (size_t c = 0; c < beads.size(); ++c) {
      state[c] = static_cast<int>(r % static_cast<long long>(beads[c].size()));
      r /= static_cast<long long>(beads[c].size());
    }
    sum += component_word(t.components[0], beads, state, T);
  }
  return sum;
}

// closed form of w for a curl tangle: h^{-(Wr+Wd)/2} u^{-Wr}
inline IMat curl_closed_form(const LinkDiagram& t, const ToqaMatrices& T) {
  int wr = t.writhe, wd2 = t.whitney2();
  if ((2 * wr + wd2) % 4 != 0) throw Error("Wr + Wd is odd");
  return T.h_pow(-(2 * wr + wd2) / 4) * T.u_pow(-wr);
}

// ---------------------------------------------------------------------------
// normalizations

inline Cyc signed_power(const Cyc& x, const Cyc& x_inv, long long k) {
  Cyc r = Cyc::one(x.field()->ell);
  for (long long i = 0; i < std::llabs(k); ++i) r = r * (k > 0 ? x : x_inv);
  return r;
}

struct InvariantValue {
  int ell = 0;
  Cyc regular, ambient, unknot_one;
  const Cyc& get(Normalization n) const {
    switch (n) {
      case Normalization::Regular: return regular;
      case Normalization::Ambient: return ambient;
      default: return unknot_one;
    }
  }
};

inline Cyc ambient_from_regular(const Cyc& regular, int writhe, const ToqaMatrices& T) {
  return signed_power(T.v_cyc, T.v_inv, writhe) * regular;
}

inline Cyc unknot_ambient(const ToqaMatrices& T) {
  auto o = builtin_knot("O");
  return ambient_from_regular(regular_invariant(o, T), o.writhe, T);
}

inline InvariantValue evaluate(const LinkDiagram& d, const ToqaMatrices& T, int budget = 12) {
  InvariantValue out;
  out.ell = T.ell();
  out.regular = regular_invariant(d, T, budget);
  out.ambient = ambient_from_regular(out.regular, d.writhe, T);
  out.unknot_one = out.ambient * unknot_ambient(T).inverse();
  return out;
}

// ---------------------------------------------------------------------------
// lifting back to Laurent polynomials

// window for the rank-n invariant under a normalization; the unknot-one value is a
// power of the Jones polynomial and the ambient one carries (q^-1/2 + q^1/2)^n more
inline LiftWindow lift_window(const LinkDiagram& d, int rank, Normalization norm) {
  LiftWindow w = power_window(d, rank);
  if (norm == Normalization::UnknotOne) return w;
  if (norm == Normalization::Regular) throw Error("regular values need an explicit lift window");
  long long lo = 4 * w.lo + w.offset - 2 * rank, hi = 4 * w.hi + w.offset + 2 * rank;
  int off = static_cast<int>(mod(lo, 4));
  return {(lo - off) / 4, (hi - off) / 4, off};
}

// rank-n value at each ell, for one normalization
inline std::vector<std::pair<int, Cyc>> invariant_values(const LinkDiagram& d, int rank, const std::vector<int>& ells,
                                                         Normalization norm, int budget = 12) {
  std::vector<std::pair<int, Cyc>> out;
  for (int ell : ells) {
    auto T = toqa_matrices(standard_module(rank, ell));
    out.emplace_back(ell, evaluate(d, T, budget).get(norm));
  }
  return out;
}

inline Laurent lift_invariant(const std::vector<std::pair<int, Cyc>>& values, const LiftWindow& w) {
  return lift_to_laurent(values, w.lo, w.hi, w.offset);
}

// ---------------------------------------------------------------------------
// power relation with the Jones oracle

// Jones polynomial with a split unknot contributing q^-1/2 + q^1/2 instead of its negative:
// (-1)^(components-1) V, raised to the rank
inline Laurent jones_reference(const LinkDiagram& d, int rank) {
  Laurent v = jones_oracle(d);
  if (d.components.size() % 2 == 0) v = -v;
  return v.pow(rank);
}

inline Report power_relation_check(const std::vector<std::string>& names, int rank, int ell, int budget = 12) {
  if (rank < 1 || rank > 3) throw Error("power relation check for rank 1..3");
  if (ell < 5 || ell % 2 == 0) throw Error("power relation check needs odd ell >= 5");
  Report rep;
  auto T = toqa_matrices(standard_module(rank, ell));
  Cyc o = unknot_ambient(T).inverse();
  for (const auto& name : names) {
    auto d = builtin_knot(name);
    Cyc got = ambient_from_regular(regular_invariant(d, T, budget), d.writhe, T) * o;
    Cyc want = specialize(jones_reference(d, rank), ell);
    rep.add(name + " rank " + std::to_string(rank) + " at ell=" + std::to_string(ell) + " equals Jones^" + std::to_string(rank), got == want,
            got == want ? "" : got.str() + " vs " + want.str());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// the same bead sliding inside D(A), for tiny cases

inline IMat act_double(const SimpleModule& M, const TaftDouble& D, const Elem& x) {
  IMat r(M.dim(), M.dim(), M.field());
  for (const auto& t : x) {
    IMat p = M.act_dual_basis(D.p_of(t.key));
    if (p.is_zero()) continue;
    IMat h = M.act_A_basis(D.h_of(t.key));
    if (h.is_zero()) continue;
    r += t.c * (p * h);
  }
  return r;
}

struct DoubleData {
  std::shared_ptr<const TaftDouble> D;
  std::vector<std::pair<Elem, Elem>> pos, neg;  // (first factor, second factor)
  Elem G, G_inv, u, u_inv, h, h_inv;
};

inline DoubleData double_data(std::shared_ptr<const TaftAlgebra> A, long long max_dim = 625) {
  auto D = build_double(A);
  if (D->dim() > max_dim) throw Error("D(A) of dimension " + std::to_string(D->dim()) + " is over the budget of " + std::to_string(max_dim));
  DoubleData out;
  const TaftAlgebra& Aa = *A;
  for (long long i = 0; i < Aa.dim(); ++i) {
    Elem second = D->basis(D->key(i, 0));
    out.pos.emplace_back(D->embed_A(Aa.basis(i)), second);
    out.neg.emplace_back(D->embed_A(Aa.antipode(Aa.basis(i))), second);
  }
  int n = Aa.rank(), ell = Aa.ell();
  if (ell % 2 == 0) throw NotRibbon("no ribbon element for even ell = " + std::to_string(ell));
  int half = (ell - 1) / 2, i0 = (ell + 1) / 2;
  out.G = D->pure(D->dual().k_tilde(Exponent(n, half)), Aa.K(Exponent(n, i0)));
  out.G_inv = D->pure(D->dual().k_tilde(Exponent(n, -half)), Aa.K(Exponent(n, -i0)));
  auto dd = drinfeld_u(*D);
  out.u = dd.u;
  out.u_inv = dd.u_inv;
  out.h = h_element(*D, dd);
  out.h_inv = D->pure(D->dual().k_tilde(ones_exp(n)), Aa.K(Exponent(n, ell - 1)));
  out.D = std::move(D);
  return out;
}

inline Elem double_power(const TaftDouble& D, const Elem& x, const Elem& x_inv, long long k) {
  Elem r = D.unit();
  for (long long i = 0; i < std::llabs(k); ++i) r = D.mul(k > 0 ? x : x_inv, r);
  return r;
}

// w of a 1-1 tangle computed in D(A)
inline Elem double_tangle_w(const LinkDiagram& t, const DoubleData& dd) {
  if (t.components.size() != 1 || t.components[0].closed) throw Error("expected a 1-1 tangle");
  const TaftDouble& D = *dd.D;
  const Component& comp = t.components[0];
  std::vector<int> choice(t.crossings.size(), -1);
  auto bead = [&](int c, int term, int line) {
    const CrossingInfo& ci = t.crossings[c];
    const auto& pr = (ci.sign > 0 ? dd.pos : dd.neg)[term];
    Elem x = ci.over_line == line ? pr.first : pr.second;
    if (ci.sideways_left() && line == 1) x = D.mul(D.mul(dd.G, x), dd.G_inv);
    return x;
  };
  auto ev = walk_events(t, t.components);
  Elem acc;
  std::function<void(size_t, Elem)> dfs = [&](size_t e, Elem P) {
    for (; e < ev.size(); ++e) {
      const WalkEvent& w = ev[e];
      if (w.kind == WalkEvent::Twist) {
        P = D.mul(w.power > 0 ? dd.G : dd.G_inv, P);
      } else if (w.kind == WalkEvent::End) {
        continue;
      } else if (choice[w.crossing] >= 0) {
        P = D.mul(bead(w.crossing, choice[w.crossing], w.line), P);
        if (P.empty()) return;
      } else {
        size_t terms = (t.crossings[w.crossing].sign > 0 ? dd.pos : dd.neg).size();
        for (size_t k = 0; k < terms; ++k) {
          Elem Q = D.mul(bead(w.crossing, static_cast<int>(k), w.line), P);
          if (Q.empty()) continue;
          choice[w.crossing] = static_cast<int>(k);
          dfs(e + 1, std::move(Q));
        }
        choice[w.crossing] = -1;
        return;
      }
    }
    acc = acc + P;
  };
  dfs(0, D.unit());
  return D.mul(acc, double_power(D, dd.G, dd.G_inv, -comp.turn2 / 2));
}

inline Elem double_curl_closed_form(const LinkDiagram& t, const DoubleData& dd) {
  int wr = t.writhe, wd2 = t.whitney2();
  if ((2 * wr + wd2) % 4 != 0) throw Error("Wr + Wd is odd");
  const TaftDouble& D = *dd.D;
  return D.mul(double_power(D, dd.h, dd.h_inv, -(2 * wr + wd2) / 4), double_power(D, dd.u, dd.u_inv, -wr));
}

}  // namespace taftknot
