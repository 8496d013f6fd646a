#pragma once

#include <functional>

#include "taftknot/endoalg.hpp"
#include "taftknot/evaluator.hpp"
#include "taftknot/golden.hpp"
#include "taftknot/quasi.hpp"
#include "taftknot/twist.hpp"

// Named verification suites shared by the command line and the acceptance run.
namespace taftknot {

// A, its dual and the double. Above the exhaustive budget the double is checked on random triples.
inline Report hopf_suite(int n, int ell, bool sample_double = true) {
  Report rep;
  auto A = build_taft(n, ell);
  rep.merge(verify_hopf_axioms(*A));
  rep.merge(verify_hopf_axioms(*build_dual(A)));
  AxiomOptions opt;
  if (sample_double) opt.generator_reduced = false;
  rep.merge(verify_hopf_axioms(*build_double(A), opt));
  return rep;
}

inline Report quasitriangular_suite(int n, int ell) {
  auto D = build_double(build_taft(n, ell));
  Report rep = verify_quasitriangular(*D, universal_R(*D));
  rep.merge(verify_drinfeld(*D, drinfeld_u(*D)));
  return rep;
}

// odd ell: the ribbon axioms; even ell: the construction must refuse
inline Report ribbon_suite(int n, int ell) {
  auto D = build_double(build_taft(n, ell));
  DrinfeldData dd = drinfeld_u(*D);
  Report rep;
  if (ell % 2 == 0) {
    bool raised = false;
    try {
      ribbon_element(*D, dd);
    } catch (const NotRibbon&) {
      raised = true;
    }
    rep.add(D->name() + ": no ribbon element at even ell", raised);
    return rep;
  }
  rep.merge(verify_ribbon(*D, universal_R(*D), dd, ribbon_element(*D, dd)));
  return rep;
}

inline Report golden_suite(int ell) {
  Report rep = golden_matrix_report(ell);
  rep.merge(tensor_square_report(ell));
  return rep;
}

inline Report table_suite(const std::vector<int>& ells = {11, 13}) {
  Report rep;
  for (const auto& [name, row] : golden::table_rows()) {
    auto d = builtin_knot(name);
    std::string got = lift_invariant(invariant_values(d, 2, ells, Normalization::UnknotOne), lift_window(d, 2, Normalization::UnknotOne)).str_q();
    rep.add("table " + name, got == row, got == row ? "" : got);
  }
  return rep;
}

// ranks 1 and 2 on every built-in, rank 3 on the trefoil and the figure eight
inline Report power_suite(int ell, bool with_rank_three = true) {
  Report rep;
  rep.merge(power_relation_check(builtin_names(), 1, ell));
  rep.merge(power_relation_check(builtin_names(), 2, ell));
  if (with_rank_three) {
    rep.merge(power_relation_check({"3_1_R", "4_1"}, 3, ell));
    rep.merge(rank_three_minimal_polynomial_report(ell));
  }
  return rep;
}

inline std::vector<std::pair<std::string, MorseWord>> curl_tangles() {
  std::vector<std::pair<std::string, MorseWord>> out;
  for (auto side : {CurlSide::Left, CurlSide::Right})
    for (int sign : {1, -1})
      out.emplace_back(std::string(side == CurlSide::Left ? "left" : "right") + (sign > 0 ? " positive" : " negative") + " curl",
                       add_curl(straight_strand(), 1, 0, side, sign));
  return out;
}

inline Report curl_suite(int ell, const std::vector<int>& ranks = {1, 2}) {
  Report rep;
  for (int rank : ranks) {
    auto T = toqa_matrices(standard_module(rank, ell));
    for (const auto& [name, m] : curl_tangles()) {
      auto t = analyze(m);
      IMat w = open_tangle_w(t, T);
      rep.add("rank " + std::to_string(rank) + " ell=" + std::to_string(ell) + ": " + name + " w = h^-(Wr+Wd)/2 u^-Wr", w == curl_closed_form(t, T));
    }
  }
  return rep;
}

// D(A)-level against End(M)-level bead sliding
inline Report cross_engine_suite(int n = 1, int ell = 3) {
  Report rep;
  auto M = standard_module(n, ell);
  auto T = toqa_matrices(M);
  auto dd = double_data(M->A_ptr());
  auto cases = curl_tangles();
  cases.emplace_back("open trefoil", open_closure(builtin_braid("3_1_R")));
  cases.emplace_back("straight strand", straight_strand());
  for (const auto& [name, m] : cases) {
    auto t = analyze(m);
    rep.add("(" + std::to_string(n) + "," + std::to_string(ell) + ") " + name, act_double(*M, *dd.D, double_tangle_w(t, dd)) == open_tangle_w(t, T));
  }
  return rep;
}

inline Report isotopy_suite(int ell = 5) {
  Report rep;
  auto T1 = toqa_matrices(standard_module(1, ell));
  auto T2 = toqa_matrices(standard_module(2, ell));
  const std::vector<const ToqaMatrices*> both{&T1, &T2};
  auto tally = [&](const std::string& name, const std::function<void(Tally&)>& body) {
    Tally t;
    body(t);
    rep.add(name, t.ok(), t.witness());
  };
  tally("second move, ranks 1 and 2", [&](Tally& t) {
    for (const auto* T : both)
      for (const char* name : {"Hopf_L", "3_1_R", "4_1"})
        for (bool rev : {false, true}) {
          MorseWord m = builtin_morse(name);
          if (rev) m = reverse_orientation(m);
          Cyc base = regular_invariant(analyze(m), *T);
          auto lv = morse_levels(m);
          for (size_t j = 0; j < lv.size(); ++j)
            for (int p = 0; p + 1 < static_cast<int>(lv[j].size()); ++p)
              for (int over : {1, 2}) {
                ++t.checked;
                if (regular_invariant(analyze(add_r2(m, static_cast<int>(j), p, over)), *T) != base)
                  t.fail(std::string(name) + " level " + std::to_string(j) + " pos " + std::to_string(p));
              }
        }
  });
  // rank 1 at every admissible position, rank 2 at the first one
  tally("third move", [&](Tally& t) {
    for (const char* name : {"4_1", "5_2_R"})
      for (bool rev : {false, true}) {
        MorseWord m = builtin_morse(name);
        if (rev) m = reverse_orientation(m);
        auto lv = morse_levels(m);
        bool rank_two_done = false;
        for (size_t j = 0; j < lv.size(); ++j)
          for (int p = 0; p + 2 < static_cast<int>(lv[j].size()); ++p) {
            if (lv[j][p] != lv[j][p + 2]) continue;
            for (int e : {1, -1})
              for (int dd : {1, -1})
                for (bool conj : {false, true}) {
                  if (!conj && dd != e) continue;
                  auto [a, b] = r3_pair(m, static_cast<int>(j), p, e, dd, conj);
                  auto da = analyze(a), db = analyze(b);
                  ++t.checked;
                  if (regular_invariant(da, T1) != regular_invariant(db, T1)) t.fail(std::string(name) + " level " + std::to_string(j));
                  if (!rank_two_done && regular_invariant(da, T2) != regular_invariant(db, T2)) t.fail(std::string(name) + " rank 2");
                }
            rank_two_done = true;
          }
      }
  });
  tally("opposite kinks", [&](Tally& t) {
    for (const char* name : {"O", "3_1_L", "Hopf_R"}) {
      MorseWord m = builtin_morse(name);
      auto d = analyze(m);
      Cyc base = regular_invariant(d, T2);
      int level = static_cast<int>(morse_levels(m).size()) / 2;
      for (auto s1 : {CurlSide::Left, CurlSide::Right})
        for (auto s2 : {CurlSide::Left, CurlSide::Right})
          for (int sign : {1, -1}) {
            auto dk = analyze(add_curl(add_curl(m, level, 0, s1, sign), level, 0, s2, -sign));
            if (dk.whitney2() != d.whitney2()) continue;
            ++t.checked;
            if (regular_invariant(dk, T2) != base) t.fail(name);
          }
    }
  });
  tally("base-point independence", [&](Tally& t) {
    for (const auto* T : both)
      for (const char* name : {"Hopf_R", "3_1_R", "4_1"}) {
        auto d = builtin_knot(name);
        Cyc base = regular_invariant(d, *T);
        std::vector<Component> comps = d.components;
        for (size_t i : base_points(d.components[0])) {
          comps[0] = rebase(d.components[0], i);
          ++t.checked;
          if (word_form_invariant(d, comps, *T) != base) t.fail(std::string(name) + " base " + std::to_string(i));
        }
      }
  });
  tally("curl insertion keeps the ambient value", [&](Tally& t) {
    for (const auto* T : both)
      for (const char* name : {"O", "3_1_R", "Hopf_L", "4_1"}) {
        MorseWord m = builtin_morse(name);
        Cyc base = evaluate(analyze(m), *T).ambient;
        auto lv = morse_levels(m);
        for (size_t j : {size_t{1}, lv.size() / 2})
          for (auto side : {CurlSide::Left, CurlSide::Right})
            for (int sign : {1, -1}) {
              ++t.checked;
              if (evaluate(analyze(add_curl(m, static_cast<int>(j), 0, side, sign)), *T).ambient != base) t.fail(name);
            }
      }
  });
  // unknot-one lifts for every built-in, ambient lifts where the window fits
  tally("mirror is q -> q^-1", [&](Tally& t) {
    for (const auto& name : builtin_names()) {
      MorseWord m = builtin_morse(name);
      auto d = analyze(m), dm = analyze(mirror(m));
      for (auto norm : {Normalization::UnknotOne, Normalization::Ambient}) {
        LiftWindow w = lift_window(d, 2, norm), wm = lift_window(dm, 2, norm);
        if (w.hi - w.lo + 1 > cyc_field(13)->phi || wm.hi - wm.lo + 1 > cyc_field(13)->phi) continue;
        ++t.checked;
        Laurent a = lift_invariant(invariant_values(d, 2, {11, 13}, norm), w);
        Laurent b = lift_invariant(invariant_values(dm, 2, {11, 13}, norm), wm);
        if (b != a.bar()) t.fail(name + " " + normalization_name(norm));
      }
    }
  });
  return rep;
}

inline Report bmw_suite(int ell, int max_r = 3) {
  Report rep;
  for (int r = 2; r <= max_r; ++r) rep.merge(check_bmw(bmw_context(r, ell, max_r)));
  int rank_two = module_commutant_dimension(*standard_module(2, ell), 2).dimension;
  int rank_one = module_commutant_dimension(*standard_module(1, ell), 2).dimension;
  std::string tag = "ell=" + std::to_string(ell) + ": ";
  rep.add(tag + "commutant of M (x) M is " + std::to_string(catalan(2) * catalan(2)) + "-dimensional", rank_two == catalan(2) * catalan(2),
          std::to_string(rank_two));
  rep.add(tag + "commutant for the rank-1 module is 2-dimensional", rank_one == 2, std::to_string(rank_one));
  auto s = bmw_image_strictness(ell);
  rep.add(tag + "image of the BMW algebra is a strict subalgebra", s.strict,
          "span " + std::to_string(s.span_dimension) + " in " + std::to_string(s.commutant_dimension));
  return rep;
}

inline Report twist_suite(const std::vector<std::pair<int, int>>& cases = {{2, 3}, {2, 5}}) {
  Report rep;
  for (auto [n, ell] : cases) rep.merge(twist_check(n, ell));
  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"hopf", "quasitriangular", "ribbon", "golden-matrices", "table", "power", "curl", "isotopy", "bmw", "twist", "cross-engine"};
}

}  // namespace taftknot
