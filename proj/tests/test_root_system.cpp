#include "thetarep/root_system.hpp"

#include "doctest.h"

using namespace thetarep;

namespace {

std::vector<std::pair<Family, int>> all_types_up_to(int max_rank) {
  std::vector<std::pair<Family, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

}  // namespace

TEST_CASE("root counts match the classical formulas for all ranks <= 12") {
  for (auto [f, n] : all_types_up_to(12)) {
    RootSystem rs = build_root_system(f, n);
    CAPTURE(rs.type_name());
    CHECK(static_cast<long>(rs.roots.size()) == root_count_formula(f, n));
  }
}

TEST_CASE("A2 has 6 roots, all long") {
  RootSystem rs = build_root_system(Family::A, 2);
  CHECK(rs.roots.size() == 6);
  auto [nl, ns] = root_counts_by_length(rs);
  CHECK(nl == 6);
  CHECK(ns == 0);
}

TEST_CASE("E7 has 126 roots") {
  CHECK(build_root_system(Family::E, 7).roots.size() == 126);
}

TEST_CASE("B3 splits into 12 long and 6 short roots") {
  // oracle: +-e_i +- e_j are the 12 long roots, +-e_i the 6 short ones
  RootSystem rs = build_root_system(Family::B, 3);
  auto [nl, ns] = root_counts_by_length(rs);
  CHECK(nl == 12);
  CHECK(ns == 6);
}

TEST_CASE("length splits: F4 is 24+24, G2 is 6+6, A_n all long") {
  auto f4 = root_counts_by_length(build_root_system(Family::F, 4));
  CHECK(f4 == std::pair<int, int>{24, 24});
  auto g2 = root_counts_by_length(build_root_system(Family::G, 2));
  CHECK(g2 == std::pair<int, int>{6, 6});
  for (int n = 1; n <= 6; ++n) {
    auto an = root_counts_by_length(build_root_system(Family::A, n));
    CHECK(an.first == n * (n + 1));
    CHECK(an.second == 0);
  }
}

TEST_CASE("invalid simple types are rejected with a diagnostic") {
  CHECK_THROWS_WITH_AS(build_root_system(Family::C, 2),
                       doctest::Contains("C:n>=3"), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::B, 1), std::invalid_argument);
}

TEST_CASE("negation closure and simple-reflection closure") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 3},
                                                         {Family::F, 4},
                                                         {Family::G, 2},
                                                         {Family::E, 6},
                                                         {Family::D, 5}}) {
    RootSystem rs = build_root_system(f, n);
    for (const VecQ& r : rs.roots) {
      CHECK(rs.is_root(VecQ(-r)));
      for (const VecQ& s : rs.simple_roots)
        CHECK(rs.is_root(weyl_reflect(s, r)));
    }
  }
}

TEST_CASE("cartan pairing basics") {
  RootSystem a2 = build_root_system(Family::A, 2);
  const VecQ& a = a2.simple_roots[0];
  CHECK(cartan_pairing(a, a) == 2);
  CHECK(cartan_pairing(a2.simple_roots[0], a2.simple_roots[1]) == -1);
  CHECK_THROWS_AS(cartan_pairing(a, VecQ(VecQ::Zero(a.size()))),
                  std::invalid_argument);
}

TEST_CASE("pairing of equal-length roots lies in {-1,0,1} off the axis") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::E, 6}, {Family::F, 4}, {Family::B, 4}}) {
    RootSystem rs = build_root_system(f, n);
    for (size_t i = 0; i < rs.roots.size(); ++i)
      for (size_t j = 0; j < rs.roots.size(); ++j) {
        if (rs.is_long[i] != rs.is_long[j]) continue;
        const VecQ& b = rs.roots[i];
        const VecQ& a = rs.roots[j];
        if (b == a || b == VecQ(-a)) continue;
        Rat p = cartan_pairing(b, a);
        CHECK((p == 0 || p == 1 || p == -1));
      }
  }
}

TEST_CASE("pairings are small integers and products bounded by 3") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::G, 2}, {Family::C, 3}, {Family::B, 2}}) {
    RootSystem rs = build_root_system(f, n);
    for (const VecQ& b : rs.roots)
      for (const VecQ& a : rs.roots) {
        Rat p = cartan_pairing(b, a);
        CHECK(is_integer(p));
        Int v = to_integer(p);
        CHECK(v <= 3);
        CHECK(v >= -3);
        if (b != a && b != VecQ(-a)) {
          Int prod = to_integer(p * cartan_pairing(a, b));
          CHECK(prod <= 3);
          CHECK(prod >= -3);
        }
      }
  }
}

TEST_CASE("weyl_reflect is an involution and sends alpha to -alpha") {
  RootSystem rs = build_root_system(Family::F, 4);
  for (const VecQ& a : rs.roots) {
    CHECK(weyl_reflect(a, a) == VecQ(-a));
    for (const VecQ& v : rs.simple_roots)
      CHECK(weyl_reflect(a, weyl_reflect(a, v)) == v);
  }
}

TEST_CASE("weyl orbit of a long simple root of B2 is the 4 long roots") {
  RootSystem b2 = build_root_system(Family::B, 2);
  auto orbit = weyl_orbit(b2, b2.simple_roots[0]);  // e1 - e2, long
  CHECK(orbit.size() == 4);
  for (const VecQ& v : orbit) {
    int idx = b2.root_index(v);
    REQUIRE(idx >= 0);
    CHECK(b2.is_long[idx]);
  }
}

TEST_CASE("weyl orbit in A2 is all six roots") {
  RootSystem a2 = build_root_system(Family::A, 2);
  CHECK(weyl_orbit(a2, a2.roots[0]).size() == 6);
}

TEST_CASE("Weyl orbits are exactly the length classes") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 3},
                                                         {Family::C, 3},
                                                         {Family::G, 2},
                                                         {Family::F, 4},
                                                         {Family::D, 4},
                                                         {Family::E, 6}}) {
    RootSystem rs = build_root_system(f, n);
    auto [nl, ns] = root_counts_by_length(rs);
    int long_idx = -1, short_idx = -1;
    for (size_t i = 0; i < rs.roots.size(); ++i)
      (rs.is_long[i] ? long_idx : short_idx) = static_cast<int>(i);
    CHECK(weyl_orbit(rs, rs.roots[long_idx]).size() == nl);
    if (short_idx >= 0)
      CHECK(weyl_orbit(rs, rs.roots[short_idx]).size() == ns);
  }
}

TEST_CASE("simple root coordinates: units, exactness, uniform sign") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::E, 8}, {Family::F, 4}, {Family::B, 5}, {Family::G, 2}}) {
    RootSystem rs = build_root_system(f, n);
    for (int i = 0; i < rs.rank; ++i) {
      Eigen::VectorXi c = simple_root_coordinates(rs, rs.simple_roots[i]);
      for (int j = 0; j < rs.rank; ++j) CHECK(c(j) == (i == j ? 1 : 0));
    }
    for (const VecQ& r : rs.roots) {
      Eigen::VectorXi c = simple_root_coordinates(rs, r);
      VecQ back = VecQ::Zero(rs.ambient_dim);
      bool pos = false, neg = false;
      for (int j = 0; j < rs.rank; ++j) {
        back += Rat(c(j)) * rs.simple_roots[j];
        pos |= c(j) > 0;
        neg |= c(j) < 0;
      }
      CHECK(back == r);
      CHECK(!(pos && neg));
    }
  }
}

TEST_CASE("simple_root_coordinates rejects non-roots") {
  RootSystem rs = build_root_system(Family::A, 3);
  VecQ v = VecQ::Zero(rs.ambient_dim);
  v(0) = 5;
  CHECK_THROWS_AS(simple_root_coordinates(rs, v), std::invalid_argument);
}

TEST_CASE("highest root coordinates: F4 (2,3,4,2), E8 (2,3,4,6,5,4,3,2)") {
  RootSystem f4 = build_root_system(Family::F, 4);
  Eigen::VectorXi cf = simple_root_coordinates(f4, highest_root(f4));
  CHECK(cf(0) == 2);
  CHECK(cf(1) == 3);
  CHECK(cf(2) == 4);
  CHECK(cf(3) == 2);
  RootSystem e8 = build_root_system(Family::E, 8);
  Eigen::VectorXi ce = simple_root_coordinates(e8, highest_root(e8));
  int expected[8] = {2, 3, 4, 6, 5, 4, 3, 2};
  for (int i = 0; i < 8; ++i) CHECK(ce(i) == expected[i]);
}
