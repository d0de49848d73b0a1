#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetarep/chow.hpp"

namespace thetarep {

struct CodegreeResult {
  std::string variety;
  std::string embedding;  // "pluecker", "veronese d", "half-spin", ...
  std::string method;
  Int value = 0;
  bool is_hypersurface = false;
  std::vector<std::pair<std::string, Int>> cross_checks;
};

// deg(X^dual) = int_X c(Omega_X) / (1-lambda)^2, nonnegative-integer checked.
CodegreeResult katz_kleiman(const KKProfile& x);

// deg((X x P^k)^dual) = (k+1) int_X lambda^k c(Omega_X) / (1-lambda)^{k+2}.
CodegreeResult codegree_product_with_pk(const KKProfile& x, int k);

// Closed-form localization sum for deg(G(k,n)^dual): fixed points are the
// k-subsets S of {1..n}, lambda_S = l(S) = sum of S, cotangent weights
// l(S)+j-i over i in S, j not in S; the per-point numerator is the top Chern
// class of the first jet bundle of O(1).  Calibrated against deg G(3,9) = 120
// and deg G(4,8) = 126 and frozen.
Int grassmannian_dual_degree_sum(int k, int n);
// The sum as printed in the source formula (2k/(n+1) prefactor, no jet
// correction); reported alongside for reference, not used as a result.
Rat grassmannian_dual_degree_sum_raw(int k, int n);

CodegreeResult codegree_grassmannian_sum(int k, int n);

enum class Route { Closed, KatzKleiman, Both };

// deg(LG(n,2n)^dual) via the alternating a_mu K_{mu,delta(n+1)} sum and/or
// the direct integral inside G(n,2n).
CodegreeResult codegree_lagrangian(int n, Route route = Route::Both);
// deg(S_2n^dual) via the 2-power b_mu K_{mu,delta(n)} sum and/or the direct
// half-spin integral inside G(n,2n).
CodegreeResult codegree_spinor(int n, Route route = Route::Both);

// Codegree of Q^{a-2} x Q^{b-2} by series-coefficient extraction:
//   4 [x^a y^b] (1-x)^{a+2} (1-y)^{b+2} / ((1-2x)(1-x-y)^2(1-2y)),
// with the conjectured closed form 4 C(min(a,b),2) reported alongside.
struct SegreQuadricResult {
  Int value;
  Int conjectured;  // 4 * C(min(a,b), 2)
  bool matches_conjecture;
};
SegreQuadricResult codegree_segre_quadrics(int a, int b);

// Segre product of projective spaces P^{d1} x ... x P^{dr}.
CodegreeResult codegree_segre(const std::vector<int>& dims);

struct Table3Check {
  std::string diagram;
  std::string g0;
  std::string g1;
  std::string orbit;
  long expected;             // reflection-count route (Table 3 column)
  std::optional<Int> computed;  // Katz-Kleiman route where a model exists
  std::string method;
  bool match;
  std::vector<std::string> warnings;
};
std::vector<Table3Check> table3_crosscheck(int max_param = 3);

}  // namespace thetarep
