// One PASS/FAIL line per acceptance criterion. A criterion also fails when it
// runs past its time target.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "taftknot/suites.hpp"

using namespace taftknot;

namespace {

struct Criterion {
  int id;
  std::string name;
  double target_seconds;
  std::function<Report()> run;
};

Report hopf_criterion() {
  Report rep;
  // (1,3) and (1,5): every triple, or generators x basis x basis with a span certificate
  for (auto [n, ell] : {std::pair{1, 3}, std::pair{1, 5}}) rep.merge(hopf_suite(n, ell, false));
  // D(A) at (2,3) has dimension 6561: random triples
  rep.merge(hopf_suite(2, 3, true));
  return rep;
}

Report ribbon_criterion() {
  Report rep;
  for (auto [n, ell] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{2, 3}}) rep.merge(ribbon_suite(n, ell));
  for (int ell : {2, 4}) rep.merge(ribbon_suite(1, ell));
  return rep;
}

Report golden_criterion() {
  Report rep = golden_matrix_report(5);
  rep.merge(golden_matrix_report(7));
  return rep;
}

Report power_criterion() {
  Report rep;
  rep.merge(power_relation_check(builtin_names(), 1, 7));
  rep.merge(power_relation_check(builtin_names(), 2, 7));
  rep.merge(power_relation_check({"3_1_R", "3_1_L", "4_1"}, 3, 7));
  rep.merge(rank_three_minimal_polynomial_report(7));
  return rep;
}

Report bmw_criterion() {
  Report rep;
  // r = 4 is the first power where the far relations say anything
  for (int ell : {5, 7}) rep.merge(bmw_suite(ell, 4));
  return rep;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Hopf axioms for A, A*, D(A) at (1,3), (1,5), (2,3)", 120, hopf_criterion},
      {2, "quasitriangularity, hexagons and QYBE at (1,3)", 60, [] { return quasitriangular_suite(1, 3); }},
      {3, "ribbon element at (1,3), (1,5), (2,3); none at ell = 2, 4", 120, ribbon_criterion},
      {4, "golden matrices at ell = 5, 7", 60, golden_criterion},
      {5, "tensor-square decomposition at ell = 5", 30, [] { return tensor_square_report(5); }},
      {6, "table rows from ell = 11, 13 and lift", 300, [] { return table_suite({11, 13}); }},
      {7, "power relations with the Jones polynomial, rank-3 minimal polynomial", 600, power_criterion},
      {8, "curl formula at ranks 1, 2, ell = 5", 30, [] { return curl_suite(5); }},
      {9, "regular and ambient isotopy, base points, mirror", 300, [] { return isotopy_suite(5); }},
      {10, "BMW and Temperley-Lieb relations, commutant, strict image at ell = 5, 7", 180, bmw_criterion},
      {11, "cocycle twist at (2,3), (2,5)", 60, [] { return twist_suite({{2, 3}, {2, 5}}); }},
      {12, "D(A)-level and End(M)-level bead sliding agree at (1,3)", 60, [] { return cross_engine_suite(1, 3); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    std::string error;
    try {
      rep = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.target_seconds;
    bool ok = error.empty() && !rep.entries.empty() && rep.ok() && in_time;
    if (!ok) ++failed;
    std::cout << (ok ? "PASS " : "FAIL ") << std::setw(2) << c.id << " " << c.name << "  (" << rep.entries.size() << " checks, " << std::fixed
              << std::setprecision(1) << secs << " s of " << c.target_seconds << " s)\n";
    if (!error.empty()) std::cout << "       error: " << error << "\n";
    if (!in_time) std::cout << "       over the time target\n";
    for (const auto& e : rep.entries)
      if (!e.ok) std::cout << "       FAIL " << e.name << (e.witness.empty() ? "" : "  [" + e.witness + "]") << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
