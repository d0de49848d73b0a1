#pragma once

#include <map>
#include <optional>
#include <utility>

#include "thetarep/arith.hpp"
#include "thetarep/partition.hpp"
#include "thetarep/polynomial.hpp"

namespace thetarep {

// Finite Z-linear combination of Schur functions in a bounded number of
// variables: partitions of length > nvars are identically zero and dropped.
class SchurExpansion {
 public:
  explicit SchurExpansion(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Partition, Int>& coefficients() const { return coef_; }
  Int coefficient(const Partition& mu) const;
  void add(const Partition& mu, const Int& c);
  bool operator==(const SchurExpansion& o) const { return coef_ == o.coef_; }

 private:
  int nvars_;
  std::map<Partition, Int> coef_;
};

// Schur expansion of the total Chern class of Sym^2 E for rank(E) = n,
// i.e. of prod_{i<=j} (1 + x_i + x_j).
SchurExpansion expand_sym_square(int n);
// Same for wedge^2 E: prod_{i<j} (1 + x_i + x_j).
SchurExpansion expand_alt_square(int n);

// Number of standard Young tableaux of skew shape nu/mu (0 if mu is not
// contained in nu).  Determinantal (Aitken) formula.
Int skew_syt_count(const Partition& mu, const Partition& nu);
// Independent recursive count, for cross-checking.
Int skew_syt_count_recursive(const Partition& mu, const Partition& nu);

struct BoxBound {
  int rows;
  int cols;
};

// Multiplication by complete homogeneous h_k (row Pieri) and elementary
// e_k (column Pieri); partitions outside the box are dropped when given.
SchurExpansion pieri_h(const SchurExpansion& f, int k,
                       std::optional<BoxBound> box = std::nullopt);
SchurExpansion pieri_e(const SchurExpansion& f, int k,
                       std::optional<BoxBound> box = std::nullopt);

// s_mu * s_nu as a Schur expansion (Littlewood-Richardson coefficients),
// via the Jacobi-Trudi determinant and iterated Pieri.
SchurExpansion lr_product(const Partition& mu, const Partition& nu, int nvars,
                          std::optional<BoxBound> box = std::nullopt);

// Total Chern class of a tensor product E (x) F with rank(E) = k,
// rank(F) = l, written in the elementary symmetric classes of the factors:
//   prod_{i,j} (1 + x_i + y_j) = sum_{mu,nu} c_{mu,nu} e_mu(x) e_nu(y),
// where e_mu = prod e_{mu_t}.  Terms of degree > degree_bound are dropped.
struct TensorChern {
  int k, l;
  std::map<std::pair<Partition, Partition>, Int> terms;
};
TensorChern tensor_chern(int k, int l, int degree_bound);

// Exact Schur decomposition of a symmetric polynomial by leading-term
// subtraction in lex order; throws if the input is not symmetric.
SchurExpansion schur_decompose(const Poly& p);

// Re-expand a Schur expansion as a polynomial (for round-trip tests).
Poly to_polynomial(const SchurExpansion& f);

}  // namespace thetarep
