#include "thetarep/chow.hpp"

#include "doctest.h"
#include "thetarep/codegree.hpp"

using namespace thetarep;

TEST_CASE("projective spaces have degenerate duals") {
  for (int n = 1; n <= 6; ++n)
    CHECK(katz_kleiman(projective_space_profile(n)).value == 0);
}

TEST_CASE("smooth quadrics of every dimension have codegree 2") {
  for (int d = 1; d <= 9; ++d) {
    CodegreeResult r = katz_kleiman(quadric_profile(d));
    CHECK(r.value == 2);
    CHECK(r.is_hypersurface);
  }
}

TEST_CASE("Veronese duals reproduce (n+1)(d-1)^n") {
  CHECK(katz_kleiman(projective_space_profile(1, 2)).value == 2);
  CHECK(katz_kleiman(projective_space_profile(1, 3)).value == 4);
  CHECK(katz_kleiman(projective_space_profile(2, 2)).value == 3);
  CHECK(katz_kleiman(projective_space_profile(2, 3)).value == 12);
  for (int n = 1; n <= 3; ++n)
    for (int d = 2; d <= 4; ++d) {
      Int expect = Int(n + 1);
      Int pw = 1;
      for (int i = 0; i < n; ++i) pw *= (d - 1);
      expect *= pw;
      CHECK(katz_kleiman(projective_space_profile(n, d)).value == expect);
    }
}

TEST_CASE("Schubert ring basics on G(2,4)") {
  SchubertRing g(2, 4);
  CHECK(g.dim() == 4);
  CHECK(g.pluecker_degree() == 2);
  // Poincare pairing of complementary classes
  auto s11 = g.sigma(Partition{1, 1});
  auto s2 = g.sigma(Partition{2});
  CHECK(g.pair(s11, s11) == 1);
  CHECK(g.pair(s2, s2) == 1);
  CHECK(g.pair(s11, s2) == 0);
}

TEST_CASE("Pluecker degrees via the hook-content product formula") {
  // deg G(k,n) = (k(n-k))! prod_{i=0}^{k-1} i! / (n-k+i)!
  for (auto [k, n] : std::vector<std::pair<int, int>>{
           {2, 4}, {2, 5}, {3, 6}, {2, 6}, {4, 8}}) {
    SchubertRing g(k, n);
    Rat expect = Rat(factorial(k * (n - k)));
    for (int i = 0; i < k; ++i)
      expect *= Rat(factorial(i)) / Rat(factorial(n - k + i));
    CHECK(Rat(g.pluecker_degree()) == expect);
  }
}

TEST_CASE("power sums of E^dual and Q satisfy ch(E) + ch(Q) = n") {
  SchubertRing g(2, 5);
  for (int r = 1; r <= 4; ++r) {
    auto pe = g.power_sum_dual_sub(r);
    auto pq = g.power_sum_quotient(r);
    // p_r(Q) = (-1)^{r+1} p_r(E^dual)
    auto scaled = g.scale(pe, (r % 2) ? Rat(1) : Rat(-1));
    CHECK(g.add(pq, g.scale(scaled, Rat(-1))).empty());
  }
}

TEST_CASE("c_1 of the cotangent bundle of G(k,n) is -n sigma_1") {
  for (auto [k, n] :
       std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    SchubertRing g(k, n);
    auto c = g.cotangent_chern();
    auto want = g.scale(g.sigma(Partition{1}), Rat(-n));
    CHECK(g.add(c[1], g.scale(want, Rat(-1))).empty());
  }
}

TEST_CASE("cotangent Chern classes agree with tensor_chern substitution") {
  // c(E (x) Q^dual) via the universal expansion in e_i(x), e_j(y), with
  // e_i(x) -> c_i(E) = (-1)^i sigma_{1^i}, e_j(y) -> c_j(Q^dual) =
  // (-1)^j sigma_{(j)}, multiplied out with Littlewood-Richardson.
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}}) {
    SchubertRing g(k, n);
    TensorChern t = tensor_chern(k, n - k, g.dim());
    std::vector<SchubertRing::Cls> by_degree(g.dim() + 1);
    for (const auto& [key, coef] : t.terms) {
      const Partition& mu = key.first;   // e-indices for E
      const Partition& nu = key.second;  // e-indices for Q^dual
      int deg = mu.weight() + nu.weight();
      if (deg > g.dim()) continue;
      auto cls = g.unit();
      for (int i = 0; i < mu.length(); ++i) cls = g.multiply_e(cls, mu.part(i));
      for (int i = 0; i < nu.length(); ++i) cls = g.multiply_h(cls, nu.part(i));
      int sign = deg % 2 ? -1 : 1;  // (-1)^{|mu|} (-1)^{|nu|}
      by_degree[deg] = g.add(by_degree[deg], g.scale(cls, Rat(sign * coef)));
    }
    auto c = g.cotangent_chern();
    for (int j = 0; j <= g.dim(); ++j) {
      CAPTURE(j);
      CHECK(g.add(c[j], g.scale(by_degree[j], Rat(-1))).empty());
    }
  }
}

TEST_CASE("G(2,4) is the 4-dimensional quadric: profiles agree") {
  KKProfile gq = grassmannian_profile(2, 4);
  KKProfile q4 = quadric_profile(4);
  REQUIRE(gq.dim == q4.dim);
  for (int p = 0; p <= 4; ++p) CHECK(gq.I(p) == q4.I(p));
  CHECK(katz_kleiman(gq).value == 2);
}

TEST_CASE("product profile: P^2 x P^2 x P^2 gives codegree 36") {
  KKProfile p2 = projective_space_profile(2);
  KKProfile p = product_profile(product_profile(p2, p2), p2);
  CHECK(katz_kleiman(p).value == 36);
}

TEST_CASE("Segre criterion: dual degenerate iff largest factor dominates") {
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      Int v2 = katz_kleiman(product_profile(projective_space_profile(a),
                                            projective_space_profile(b)))
                   .value;
      CHECK((v2 == 0) == (b > a));
      for (int c = b; c <= 4; ++c) {
        KKProfile p = product_profile(
            product_profile(projective_space_profile(a),
                            projective_space_profile(b)),
            projective_space_profile(c));
        Int v3 = katz_kleiman(p).value;
        CHECK((v3 == 0) == (c > a + b));
      }
    }
}

TEST_CASE("2x2x2 hyperdeterminant: P^1 x P^1 x P^1 has codegree 4") {
  CHECK(codegree_segre({1, 1, 1}).value == 4);
  // cross-check via Q^2 x P^1 (Q^2 is P^1 x P^1 in its Segre embedding)
  CHECK(codegree_product_with_pk(quadric_profile(2), 1).value == 4);
}

TEST_CASE("product with P^0 and k = 0 reduce to katz_kleiman") {
  KKProfile q = quadric_profile(3);
  CHECK(codegree_product_with_pk(q, 0).value == katz_kleiman(q).value);
}

TEST_CASE("lagrangian profile: LG(2,4) is the 3-dim quadric") {
  KKProfile lg = lagrangian_profile(2);
  CHECK(katz_kleiman(lg).value == 2);
}

TEST_CASE("spinor profile: S_8 is the 6-dim quadric in the half-spin") {
  KKProfile s8 = spinor_profile(4);
  KKProfile q6 = quadric_profile(6);
  REQUIRE(s8.dim == 6);
  for (int p = 0; p <= 6; ++p) CHECK(s8.I(p) == q6.I(p));
}

namespace {

// Explicit quadric Chow ring: h-powers below the middle, the two ruling
// classes a, b in the middle degree of an even quadric, halved powers l_i
// above the middle, with the standard unimodular pairing.  Serves as an
// independent oracle for the quadric profiles: the h-subring facts
// (h^m = a + b, int h^d = 2) emerge from the ring structure.
struct QuadricRing {
  int d, m;
  bool even;
  // class in degree deg: coefficients on the basis of that degree
  // basis sizes: 1 everywhere except degree m of an even quadric (size 2)
  int basis_size(int deg) const { return (even && deg == m) ? 2 : 1; }

  std::vector<Rat> mul_h(int deg, const std::vector<Rat>& c) const {
    // multiply a degree-deg class by h
    int nd = deg + 1;
    if (nd > d) return {};
    std::vector<Rat> out(basis_size(nd), Rat(0));
    if (even && nd == m) {  // h^{m-1} . h = a + b
      out[0] = c[0];
      out[1] = c[0];
    } else if (even && deg == m) {  // a . h = b . h = l_{m+1}
      out[0] = c[0] + c[1];
    } else if (!even && deg == m) {  // h^m . h = 2 l_{m+1}
      out[0] = 2 * c[0];
    } else {
      out[0] = c[0];
    }
    return out;
  }

  Rat pair(int deg, const std::vector<Rat>& x,
           const std::vector<Rat>& y) const {
    // int of (deg class) * (d-deg class)
    int codeg = d - deg;
    if (even && deg == m) {
      // int a.a = [m even], int a.b = [m odd]
      if (m % 2 == 0) return x[0] * y[0] + x[1] * y[1];
      return x[0] * y[1] + x[1] * y[0];
    }
    if (deg < m || (even && deg < m)) {
      // h^deg against the dual basis element of degree codeg > m: l-class
      return x[0] * y[0];
    }
    return x[0] * y[0];
  }
};

}  // namespace

TEST_CASE("quadric Chow ring with middle classes: unimodular, int h^d = 2") {
  for (int d = 2; d <= 8; ++d) {
    QuadricRing ring{d, d / 2, d % 2 == 0};
    // walk h-powers through the ring
    std::vector<std::vector<Rat>> hpow(d + 1);
    hpow[0] = {Rat(1)};
    for (int j = 1; j <= d; ++j) hpow[j] = ring.mul_h(j - 1, hpow[j - 1]);
    // int h^d = 2 emerges from the ring structure
    std::vector<Rat> point(1, Rat(1));
    CHECK(ring.pair(d, hpow[d], point) == 2);
    if (ring.even) {
      // middle pairing is unimodular: det of the 2x2 Gram is +-1
      std::vector<Rat> a{Rat(1), Rat(0)}, b{Rat(0), Rat(1)};
      Rat aa = ring.pair(ring.m, a, a);
      Rat ab = ring.pair(ring.m, a, b);
      Rat bb = ring.pair(ring.m, b, b);
      Rat det = aa * bb - ab * ab;
      CHECK((det == 1 || det == -1));
      // h^m = a + b pairs to 2 against itself... (a+b).(a+b) = 2
      std::vector<Rat> hm = hpow[ring.m];
      CHECK(ring.pair(ring.m, hm, hm) == 2);
    }
    // profile agreement: I(p) computed through the explicit ring
    for (int mult : {1, 2}) {
      KKProfile prof = quadric_profile(d, mult);
      // c_{d-p}(Omega) is a multiple of h^{d-p}; recompute the multiple
      // from (1+h)^{d+2}/(1+2h) and integrate through the ring
      for (int p = 0; p <= d; ++p) {
        Rat coef = 0;
        for (int i = 0; i <= d - p; ++i) {
          Rat t = Rat(binomial(d + 2, d - p - i));
          Int tw = pow2(i);
          if (i % 2) t = -t;
          coef += t * Rat(tw);
        }
        if ((d - p) % 2) coef = -coef;  // c(Omega) signs
        // I(p) = coef * mult^p * int h^d, the integral through the ring
        Rat mp = 1;
        for (int i = 0; i < p; ++i) mp *= mult;
        std::vector<Rat> pt(1, Rat(1));
        CHECK(prof.I(p) == coef * mp * ring.pair(d, hpow[d], pt));
      }
    }
  }
}
