#pragma once

#include <algorithm>

#include "taftknot/repmod.hpp"

// Reference displays for the self-dual modules of rank 1, 2 and 3, written out
// entry by entry in quarter powers of q, and the rank-2 knot table.
namespace taftknot {

namespace golden {

// sum c q^{e/4}
inline Cyc quarters(int ell, std::initializer_list<std::pair<int, int>> terms) {
  Cyc r = Cyc::zero(ell);
  for (auto [c, e] : terms) r += q_quarter(ell, e) * Cyc(cyc_field(ell), Rational(c));
  return r;
}

inline IMat from_entries(int ell, int n, const std::vector<std::tuple<int, int, Cyc>>& entries) {
  Matrix m(n, n, cyc_field(ell));
  for (const auto& [r, c, v] : entries) m(r - 1, c - 1) = v;
  return IMat::from_matrix(m);
}

inline IMat quarter_diagonal(int ell, std::initializer_list<int> ks) {
  std::vector<CycInt> d;
  for (int k : ks) d.push_back(CycInt::from_cyc(q_quarter(ell, k), cyc_field(ell)));
  return IMat::diagonal(d, cyc_field(ell));
}

inline IMat rank_one_R(int ell) {
  Cyc a = quarters(ell, {{1, -1}}), b = quarters(ell, {{1, -1}, {-1, 3}}), c = quarters(ell, {{1, 1}});
  return from_entries(ell, 4, {{1, 1, a}, {2, 2, b}, {2, 3, c}, {3, 2, c}, {4, 4, a}});
}

inline IMat rank_two_R(int ell) {
  auto e = [&](std::initializer_list<std::pair<int, int>> t) { return quarters(ell, t); };
  Cyc sq = e({{1, 2}}), isq = e({{1, -2}}), a = e({{1, -2}, {-1, 2}});
  Cyc a2 = e({{1, -2}, {-2, 2}, {1, 6}}), b = e({{1, 2}, {-1, 6}});
  return from_entries(ell, 16,
                      {{1, 1, isq},  {2, 2, a},    {2, 5, sq},   {3, 3, a},    {3, 9, isq},   {4, 4, a2},  {4, 7, b},
                       {4, 10, b},   {4, 13, sq},  {5, 2, isq},  {6, 6, isq},  {7, 4, a},     {7, 10, sq}, {8, 8, a},
                       {8, 14, sq},  {9, 3, sq},   {10, 4, a},   {10, 7, sq},  {11, 11, isq}, {12, 12, a}, {12, 15, isq},
                       {13, 4, sq},  {14, 8, isq}, {15, 12, sq}, {16, 16, isq}});
}

inline IMat rank_two_R_inv(int ell) {
  auto e = [&](std::initializer_list<std::pair<int, int>> t) { return quarters(ell, t); };
  Cyc sq = e({{1, 2}}), isq = e({{1, -2}});
  Cyc na = e({{-1, -2}, {1, 2}}), nc = e({{-1, -6}, {1, -2}}), d2 = e({{1, -6}, {-2, -2}, {1, 2}});
  return from_entries(ell, 16,
                      {{1, 1, sq},    {2, 5, sq},   {3, 9, isq},   {4, 13, isq}, {5, 2, isq},   {5, 5, na},   {6, 6, sq},
                       {7, 10, isq},  {7, 13, nc},  {8, 14, sq},   {9, 3, sq},   {9, 9, na},    {10, 7, isq}, {10, 13, nc},
                       {11, 11, sq},  {12, 15, isq}, {13, 4, isq}, {13, 7, na},  {13, 10, na},  {13, 13, d2}, {14, 8, isq},
                       {14, 14, na},  {15, 12, sq}, {15, 15, na},  {16, 16, sq}});
}

inline Matrix quasi_projection(int ell) {
  Cyc q1 = Cyc::q(ell, 1), qm = Cyc::q(ell, -1), one = Cyc::one(ell);
  const std::vector<std::tuple<int, int, Cyc>> entries{
      {4, 4, q1},   {4, 7, -q1},  {4, 10, -q1},  {4, 13, one},  {7, 4, -one},  {7, 7, one},   {7, 10, one},   {7, 13, -qm},
      {10, 4, -one}, {10, 7, one}, {10, 10, one}, {10, 13, -qm}, {13, 4, one}, {13, 7, -one}, {13, 10, -one}, {13, 13, qm}};
  Matrix m(16, 16, cyc_field(ell));
  for (const auto& [r, c, v] : entries) m(r - 1, c - 1) = v;
  return m;
}

// roots of the minimal polynomial of R, as signed quarter powers
inline std::vector<Cyc> rank_one_roots(int ell) { return {q_quarter(ell, -1), -q_quarter(ell, 3)}; }
inline std::vector<Cyc> rank_two_roots(int ell) { return {q_quarter(ell, -2), -q_quarter(ell, 2), q_quarter(ell, 6)}; }
inline std::vector<Cyc> rank_three_roots(int ell) {
  std::vector<Cyc> roots;
  for (int j = 0; j <= 3; ++j) roots.push_back((j % 2 ? -Cyc::one(ell) : Cyc::one(ell)) * q_quarter(ell, -3 + 4 * j));
  return roots;
}

// rank 2, unknot normalized
inline const std::vector<std::pair<std::string, std::string>>& table_rows() {
  static const std::vector<std::pair<std::string, std::string>> rows{
      {"Hopf_L", "q^-5 + 2*q^-3 + q^-1"},
      {"Hopf_R", "q + 2*q^3 + q^5"},
      {"3_1_L", "q^-8 - 2*q^-7 + q^-6 - 2*q^-5 + 2*q^-4 + q^-2"},
      {"3_1_R", "q^2 + 2*q^4 - 2*q^5 + q^6 - 2*q^7 + q^8"},
      {"4_1", "q^-4 - 2*q^-3 + 3*q^-2 - 4*q^-1 + 5 - 4*q + 3*q^2 - 2*q^3 + q^4"},
      {"5_1_L", "q^-14 - 2*q^-13 + 3*q^-12 - 4*q^-11 + 3*q^-10 - 4*q^-9 + 3*q^-8 - 2*q^-7 + 2*q^-6 + q^-4"},
      {"5_1_R", "q^4 + 2*q^6 - 2*q^7 + 3*q^8 - 4*q^9 + 3*q^10 - 4*q^11 + 3*q^12 - 2*q^13 + q^14"},
      {"5_2_L", "q^-12 - 2*q^-11 + 3*q^-10 - 6*q^-9 + 7*q^-8 - 8*q^-7 + 8*q^-6 - 6*q^-5 + 5*q^-4 - 2*q^-3 + q^-2"},
      {"5_2_R", "q^2 - 2*q^3 + 5*q^4 - 6*q^5 + 8*q^6 - 8*q^7 + 7*q^8 - 6*q^9 + 3*q^10 - 2*q^11 + q^12"},
  };
  return rows;
}

}  // namespace golden

// compare the computed rank-1 and rank-2 data with the reference displays
inline Report golden_matrix_report(int ell) {
  if (ell < 5 || ell % 2 == 0) throw Error("golden matrices are given for odd ell >= 5, got " + std::to_string(ell));
  Report rep;
  const std::string tag = "ell=" + std::to_string(ell) + ": ";
  auto mp_ok = [&](const IMat& R, const std::vector<Cyc>& roots) {
    return minimal_polynomial(R.to_matrix()) == poly_from_roots(roots, cyc_field(ell));
  };
  {
    auto M = standard_module(1, ell);
    const RibbonData& rd = M->ribbon();
    const IMat& R = M->braiding().R;
    rep.add(tag + "rank 1 R", R == golden::rank_one_R(ell));
    rep.add(tag + "rank 1 u", rd.u == golden::quarter_diagonal(ell, {5, 1}));
    rep.add(tag + "rank 1 G", rd.G == golden::quarter_diagonal(ell, {-2, 2}));
    rep.add(tag + "rank 1 v", rd.v == CycInt::from_cyc(q_quarter(ell, 3), M->field()));
    rep.add(tag + "rank 1 minimal polynomial", mp_ok(R, golden::rank_one_roots(ell)));
  }
  {
    auto M = standard_module(2, ell);
    const RibbonData& rd = M->ribbon();
    const Braiding& br = M->braiding();
    rep.add(tag + "rank 2 R", br.R == golden::rank_two_R(ell));
    rep.add(tag + "rank 2 R^-1", br.Rinv == golden::rank_two_R_inv(ell));
    rep.add(tag + "rank 2 u", rd.u == golden::quarter_diagonal(ell, {10, 6, 6, 2}));
    rep.add(tag + "rank 2 G", rd.G == golden::quarter_diagonal(ell, {-4, 0, 0, 4}));
    rep.add(tag + "rank 2 h", rd.h == golden::quarter_diagonal(ell, {-8, 0, 0, 8}));
    rep.add(tag + "rank 2 quasi-projection", tensor_square_decompose(*M).quasi_projection == golden::quasi_projection(ell));
    rep.add(tag + "rank 2 minimal polynomial", mp_ok(br.R, golden::rank_two_roots(ell)));
  }
  return rep;
}

inline Report rank_three_minimal_polynomial_report(int ell) {
  Report rep;
  auto M = standard_module(3, ell);
  auto mp = minimal_polynomial(M->braiding().R.to_matrix());
  rep.add("ell=" + std::to_string(ell) + ": rank 3 minimal polynomial", mp == poly_from_roots(golden::rank_three_roots(ell), cyc_field(ell)));
  return rep;
}

// eigenvalues of R on M (x) M and the trivial eigenvector
inline Report tensor_square_report(int ell) {
  Report rep;
  auto M = standard_module(2, ell);
  auto ts = tensor_square_decompose(*M);
  std::vector<Cyc> want = golden::rank_two_roots(ell);
  bool values = ts.spaces.size() == want.size() && ts.total_dim == 16;
  for (const auto& e : ts.spaces)
    if (std::find(want.begin(), want.end(), e.value) == want.end()) values = false;
  std::string found;
  for (const auto& e : ts.spaces) found += signed_root_str(e.value, ell) + " (dim " + std::to_string(e.dim) + ") ";
  rep.add("ell=" + std::to_string(ell) + ": eigenvalues q^-1/2, -q^1/2, q^3/2", values, values ? "" : found);
  bool line = false;
  for (const auto& e : ts.spaces)
    if (e.value == q_quarter(ell, 6)) line = e.dim == 1;
  rep.add("ell=" + std::to_string(ell) + ": q^3/2 eigenspace spanned by v00", line && ts.trivial_is_eigenvector);
  return rep;
}

}  // namespace taftknot
