#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "thetarep/arith.hpp"
#include "thetarep/partition.hpp"
#include "thetarep/symfun.hpp"

namespace thetarep {

// Everything the Katz-Kleiman formula and its product variants need from an
// embedded variety X is the vector I(p) = int_X lambda^p c_{dim-p}(Omega_X),
// p = 0..dim.  Kuenneth then turns products into binomial convolutions:
//   I_{XxY}(p) = sum_i C(p,i) I_X(i) I_Y(p-i).
struct KKProfile {
  std::string name;
  int dim = 0;
  std::vector<Rat> chern_lambda;  // I(p), size dim+1

  const Rat& I(int p) const { return chern_lambda[p]; }
};

// P^n embedded by O(d) (d = 1 Segre factor, d >= 2 Veronese v_d).
KKProfile projective_space_profile(int n, int veronese = 1);
// Smooth quadric of dimension d, embedded by O(multiple).
KKProfile quadric_profile(int d, int multiple = 1);
KKProfile product_profile(const KKProfile& x, const KKProfile& y);

// --- Schubert calculus on G(k,n) ---------------------------------------
// Classes are sparse vectors over the Schubert basis sigma_mu, mu inside
// the k x (n-k) box; sigma_1 is the Pluecker hyperplane class.
class SchubertRing {
 public:
  SchubertRing(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int dim() const { return k_ * (n_ - k_); }

  using Cls = std::unordered_map<std::uint64_t, Rat>;

  Cls sigma(const Partition& mu) const;
  Cls unit() const { return sigma(Partition()); }

  Cls pieri1(const Cls& c) const;                   // * sigma_1
  Cls multiply_h(const Cls& c, int r) const;        // * h_r = sigma_(r)
  Cls multiply_e(const Cls& c, int r) const;        // * e_r = sigma_(1^r)
  Cls multiply_p(const Cls& c, int r) const;        // * p_r (Murnaghan-Nakayama)
  Cls scale(const Cls& c, const Rat& f) const;
  Cls add(const Cls& a, const Cls& b) const;

  // Poincare pairing: sum over complementary pairs in the box.
  Rat pair(const Cls& a, const Cls& b) const;
  Rat integrate_top(const Cls& a) const;  // coefficient of the box class

  // power sums of the tautological bundles in the Schubert basis
  Cls power_sum_dual_sub(int r) const;   // p_r(E^dual)
  Cls power_sum_quotient(int r) const;   // p_r(Q)

  // Chern classes c_j(Omega) for j = 0..dim, via Newton's identities.
  std::vector<Cls> cotangent_chern() const;

  Int pluecker_degree() const;  // int sigma_1^{dim}
 private:
  int k_, n_;
};

KKProfile grassmannian_profile(int k, int n);

// LG(n,2n) in its minimal (Pluecker-restriction) embedding, evaluated inside
// G(n,2n) against the fundamental class sigma_{delta(n)}.
KKProfile lagrangian_profile(int n);
// Spinor variety S_2n in the half-spin embedding (Pluecker class is twice
// the generator), fundamental class 2^n sigma_{delta(n+1)} in G(n,2n).
KKProfile spinor_profile(int n);

}  // namespace thetarep
