#pragma once

#include <map>
#include <vector>

#include "thetarep/arith.hpp"
#include "thetarep/partition.hpp"

namespace thetarep {

// Sparse multivariate polynomial with exact integer coefficients.
// Exponent vectors have a fixed number of variables.  Used by the
// symmetric-function oracles and the tensor Chern expansion; not tuned for
// large inputs.
class Poly {
 public:
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Int& c);
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<int>& expo, const Int& c);
  Int coefficient(const std::vector<int>& expo) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly truncated(int max_degree) const;

  // invariance under all adjacent transpositions
  bool is_symmetric() const;
  Poly swap_vars(int i, int j) const;

  // leading term in lex order, or nullptr if zero
  const std::pair<const std::vector<int>, Int>* lex_leading() const;

 private:
  int nvars_;
  std::map<std::vector<int>, Int> terms_;  // lex-ordered by exponent vector
};

Poly elementary_symmetric(int nvars, int k);
Poly complete_homogeneous(int nvars, int k);
Poly power_sum(int nvars, int k);
Poly monomial_symmetric(int nvars, const Partition& mu);
// Schur polynomial via Jacobi-Trudi determinant in the h's.
Poly schur_polynomial(int nvars, const Partition& mu);

}  // namespace thetarep
