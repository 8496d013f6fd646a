#pragma once

#include <array>
#include <functional>
#include <unordered_map>

#include "taftknot/knotio.hpp"

namespace taftknot {

// Corners of a crossing: 0 bottom-left, 1 bottom-right, 2 top-left, 3 top-right.
// Ports are 4*crossing + corner; arcs join ports along the diagram.
struct PortGraph {
  int crossings = 0;
  std::vector<int> arc;  // partner port
  int free_loops = 0;    // components without crossings
  std::vector<int> over_line;
  int writhe = 0;
  int components = 0;
};

namespace detail {

inline std::pair<int, int> pass_corners(int line, bool upward) {
  if (line == 1) return upward ? std::pair{0, 3} : std::pair{3, 0};
  return upward ? std::pair{1, 2} : std::pair{2, 1};
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace detail

inline PortGraph port_graph(const LinkDiagram& d) {
  if (!d.closed()) throw Error("skein evaluation needs a closed diagram");
  PortGraph g;
  g.crossings = d.crossing_count();
  g.arc.assign(4 * g.crossings, -1);
  g.writhe = d.writhe;
  g.components = static_cast<int>(d.components.size());
  for (const auto& c : d.crossings) g.over_line.push_back(c.over_line);
  for (const auto& comp : d.components) {
    std::vector<std::pair<int, int>> ends;  // (entry port, exit port) per pass
    for (size_t i = 0; i < comp.steps.size(); ++i) {
      const Step& s = comp.steps[i];
      if (s.kind != Step::Crossing) continue;
      auto [in, out] = detail::pass_corners(s.line, comp.steps[i - 1].up);
      ends.emplace_back(4 * s.crossing + in, 4 * s.crossing + out);
    }
    if (ends.empty()) {
      ++g.free_loops;
      continue;
    }
    for (size_t i = 0; i < ends.size(); ++i) {
      int a = ends[i].second, b = ends[(i + 1) % ends.size()].first;
      g.arc[a] = b;
      g.arc[b] = a;
    }
  }
  for (int v : g.arc)
    if (v < 0) throw Error("port graph has a dangling port");
  return g;
}

// loops after smoothing every crossing; vertical[c] joins 0-2 and 1-3, otherwise 0-1 and 2-3
inline int smoothing_loops(const PortGraph& g, const std::vector<bool>& vertical) {
  detail::Dsu dsu(4 * g.crossings);
  for (int p = 0; p < 4 * g.crossings; ++p) dsu.unite(p, g.arc[p]);
  for (int c = 0; c < g.crossings; ++c) {
    if (vertical[c]) {
      dsu.unite(4 * c, 4 * c + 2);
      dsu.unite(4 * c + 1, 4 * c + 3);
    } else {
      dsu.unite(4 * c, 4 * c + 1);
      dsu.unite(4 * c + 2, 4 * c + 3);
    }
  }
  int loops = g.free_loops;
  for (int p = 0; p < 4 * g.crossings; ++p)
    if (dsu.find(p) == p) ++loops;
  return loops;
}

// the A-smoothing is vertical when line 1 is over
inline bool a_smoothing_vertical(int over_line) { return over_line == 1; }

inline void check_crossing_budget(const PortGraph& g, int budget) {
  if (g.crossings > budget)
    throw Error("diagram has " + std::to_string(g.crossings) + " crossings, over the budget of " + std::to_string(budget));
}

// Kauffman bracket with <O> = 1, in the variable s with A = s^-1
inline Laurent kauffman_bracket(const PortGraph& g, int budget = 12) {
  check_crossing_budget(g, budget);
  Laurent d = -(Laurent::s_pow(-2) + Laurent::s_pow(2));
  int C = g.crossings;
  Laurent total;
  std::vector<Laurent> dpow{Laurent(1)};
  for (unsigned long long st = 0; st < (1ULL << C); ++st) {
    std::vector<bool> vertical(C);
    int a_minus_b = 0;
    for (int c = 0; c < C; ++c) {
      bool a = (st >> c & 1) == 0;
      vertical[c] = a == a_smoothing_vertical(g.over_line[c]);
      a_minus_b += a ? 1 : -1;
    }
    int loops = smoothing_loops(g, vertical);
    while (static_cast<int>(dpow.size()) < loops) dpow.push_back(dpow.back() * d);
    total += Laurent::s_pow(-a_minus_b) * dpow[loops - 1];
  }
  return total;
}

// loops of the all-A and all-B states
inline std::pair<int, int> extreme_state_loops(const PortGraph& g) {
  std::vector<bool> va(g.crossings), vb(g.crossings);
  for (int c = 0; c < g.crossings; ++c) {
    va[c] = a_smoothing_vertical(g.over_line[c]);
    vb[c] = !va[c];
  }
  return {smoothing_loops(g, va), smoothing_loops(g, vb)};
}

// Jones polynomial, V(O) = 1, as a Laurent polynomial in s = t^(1/4)
inline Laurent jones_oracle(const LinkDiagram& d, int budget = 12) {
  PortGraph g = port_graph(d);
  Laurent br = kauffman_bracket(g, budget);
  // (-A^3)^-w = (-1)^w s^(3w)
  Laurent f = Laurent::s_pow(3 * g.writhe, Rational(g.writhe % 2 == 0 ? 1 : -1));
  return f * br;
}

// s-exponent range [lo, hi] that must contain the Jones polynomial of the diagram
inline std::pair<long long, long long> jones_s_bounds(const LinkDiagram& d) {
  PortGraph g = port_graph(d);
  auto [sa, sb] = extreme_state_loops(g);
  long long w = g.writhe, c = g.crossings;
  return {3 * w - c - 2 * sa + 2, 3 * w + c + 2 * sb - 2};
}

// Lift window for the n-th power: q-exponent range [lo, hi] of s^(4k + offset)
struct LiftWindow {
  long long lo = 0, hi = 0;
  int offset = 0;
};
inline LiftWindow power_window(const LinkDiagram& d, int n) {
  auto [lo, hi] = jones_s_bounds(d);
  int comps = static_cast<int>(d.components.size());
  int offset = (n * (comps - 1)) % 2 == 0 ? 0 : 2;
  auto floor_div = [](long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
  auto ceil_div = [&](long long a, long long b) { return -floor_div(-a, b); };
  return {ceil_div(n * lo - offset, 4), floor_div(n * hi - offset, 4), offset};
}

// ---------------------------------------------------------------------------
// Dubrovnik polynomial

// D(L+) - D(L-) = z (D(L0) - D(Linf)) with L+ having line 1 over, L0 the vertical
// smoothing; a positive kink is a, the unknot 1, a split unknot delta.
template <class Scalar>
struct DubrovnikParams {
  Scalar a, a_inv, z, delta, one;
};

template <class Scalar>
Scalar dubrovnik_framed(const PortGraph& g, const DubrovnikParams<Scalar>& P, int budget = 10) {
  check_crossing_budget(g, budget);
  // per crossing: 1 / 2 = that line over, 3 vertical smoothing, 4 horizontal
  std::map<std::vector<std::uint8_t>, Scalar> memo;
  auto through = [](std::uint8_t st, int corner) {
    switch (st) {
      case 1:
      case 2: return 3 - corner;
      case 3: return corner ^ 2;
      default: return corner ^ 1;
    }
  };
  auto power = [&](int k) {
    Scalar r = P.one;
    for (int i = 0; i < std::abs(k); ++i) r = r * (k > 0 ? P.a : P.a_inv);
    return r;
  };
  std::function<Scalar(std::vector<std::uint8_t>&)> eval = [&](std::vector<std::uint8_t>& st) -> Scalar {
    auto it = memo.find(st);
    if (it != memo.end()) return it->second;
    int C = g.crossings;
    std::vector<int> first_comp(C, -1), second_comp(C, -1);
    std::vector<std::array<int, 2>> dir_first(C), dir_second(C);
    std::vector<bool> seen(C);
    std::vector<bool> used(4 * C);
    int comps = g.free_loops;
    int bad = -1;
    // corner direction vectors: entering corner -> exiting corner
    static const int cx[4] = {-1, 1, -1, 1}, cy[4] = {-1, -1, 1, 1};
    int walked = 0;
    for (int start = 0; start < 4 * C && bad < 0; ++start) {
      if (used[start]) continue;
      int comp = walked++;
      ++comps;
      int p = start;
      do {
        used[p] = true;
        int q = g.arc[p];
        used[q] = true;
        int c = q / 4, corner = q % 4;
        int out = through(st[c], corner);
        used[4 * c + out] = true;
        if (st[c] <= 2) {
          bool on_line1 = corner == 0 || corner == 3;
          bool over = (st[c] == 1) == on_line1;
          std::array<int, 2> dv{cx[out] - cx[corner], cy[out] - cy[corner]};
          if (!seen[c]) {
            seen[c] = true;
            first_comp[c] = comp;
            dir_first[c] = dv;
            if (!over) {
              bad = c;
              break;
            }
          } else {
            second_comp[c] = comp;
            dir_second[c] = dv;
          }
        }
        p = 4 * c + out;
      } while (p != start);
    }
    Scalar result = P.one;
    if (bad >= 0) {
      std::uint8_t orig = st[bad];
      st[bad] = orig == 1 ? 2 : 1;
      Scalar switched = eval(st);
      st[bad] = 3;
      Scalar v0 = eval(st);
      st[bad] = 4;
      Scalar vinf = eval(st);
      st[bad] = orig;
      Scalar skew = P.z * (v0 - vinf);
      result = orig == 1 ? switched + skew : switched - skew;
    } else {
      int self_writhe = 0;
      for (int c = 0; c < C; ++c) {
        if (st[c] > 2 || first_comp[c] != second_comp[c]) continue;
        // over strand is the first pass
        const auto& o = dir_first[c];
        const auto& u = dir_second[c];
        int cross = o[0] * u[1] - o[1] * u[0];
        self_writhe += cross > 0 ? 1 : -1;
      }
      result = power(self_writhe);
      for (int i = 1; i < comps; ++i) result = result * P.delta;
    }
    memo.emplace(st, result);
    return result;
  };
  std::vector<std::uint8_t> st(g.crossings);
  for (int c = 0; c < g.crossings; ++c) st[c] = static_cast<std::uint8_t>(g.over_line[c]);
  return eval(st);
}

// unframed value a^{-Wr} D
template <class Scalar>
Scalar dubrovnik_oracle(const LinkDiagram& d, const DubrovnikParams<Scalar>& P, int budget = 10) {
  PortGraph g = port_graph(d);
  Scalar v = dubrovnik_framed(g, P, budget);
  for (int i = 0; i < std::abs(g.writhe); ++i) v = v * (g.writhe > 0 ? P.a_inv : P.a);
  return v;
}

// (a, z) = (q^{-3/2}, q^{-1/2} - q^{1/2}) inside Q(zeta_ell)
inline DubrovnikParams<Cyc> dubrovnik_at_rank_two(int ell) {
  Cyc a = q_quarter(ell, -6), ai = q_quarter(ell, 6);
  Cyc z = q_quarter(ell, -2) - q_quarter(ell, 2);
  Cyc one = Cyc::one(ell);
  return {a, ai, z, (a - ai) * z.inverse() + one, one};
}

}  // namespace taftknot
