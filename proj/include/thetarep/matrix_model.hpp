#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetarep/cyclotomic.hpp"
#include "thetarep/linalg.hpp"

namespace thetarep {

// Explicit matrix model of a Z_m-graded algebra g in gl_N.  All basis
// matrices are rational; the automorphism theta scales the grade-i basis by
// zeta_m^i by construction (conjugation by a diagonal zeta-power matrix or a
// split involution composed with it, depending on the case).
//
// Case tags: "sl:inner:d0,d1,...,d{N-1}" (m = max d + 1),
//            "sl:outer-sym:N", "so:block:a,b".
struct GradedMatrixAlgebra {
  std::string case_tag;
  int N = 0;
  int m = 0;
  int rank = 0;   // rank of g
  long nroots = 0;  // |R(g)|
  std::vector<MatQ> basis;      // flat basis, grade-homogeneous, rational
  std::vector<int> grade;       // grade of each basis element
  std::vector<long> dims;       // dim g_i
  int dim() const { return static_cast<int>(basis.size()); }

  // coordinates of a matrix in the flat basis (throws when outside g)
  VecQ coordinates(const MatQ& x) const;
  MatQ bracket(const MatQ& a, const MatQ& b) const { return a * b - b * a; }
  MatQ from_coordinates(const VecQ& c) const;
  MatQ ad_matrix(const MatQ& x) const;  // dim x dim, rational

  // internal solver state
  MatQ basis_flat;       // N^2 x dim
  MatQ coord_extractor;  // dim x N^2 (valid on the span)
};

GradedMatrixAlgebra realize(const std::string& case_tag, int max_n = 10);

struct CartanSubspace {
  std::vector<MatQ> c_basis;  // commuting semisimple matrices in g_1
  std::vector<MatQ> t_basis;  // centralizer of c in g, grade-homogeneous
  std::vector<int> t_grades;  // grade of each t basis element
  int theta_rank() const { return static_cast<int>(c_basis.size()); }
};

// Structured search with certification: returned subspaces are certified
// maximal (the g_1-commutant of c equals c); throws on search failure.
CartanSubspace find_cartan_subspace(const GradedMatrixAlgebra& a);

struct RestrictedRoot {
  VecC on_t;     // values on the t basis
  VecC on_c;     // restriction alpha_1: values on the grade-1 part
  VecC vec;      // flat coordinates of the root vector in g
  Cyclotomic norm;  // Killing (alpha, alpha)
  int line = -1;
};

struct RootLine {
  std::vector<int> root_ids;
  std::string length_class;  // "alpha", "alpha_l" or "alpha_s"
  int minus_one_pairing_power = 1;  // i with <theta^i(alpha), alpha> = -1
};

struct RestrictedRootDatum {
  CartanSubspace cartan;
  std::vector<RestrictedRoot> roots;
  std::vector<RootLine> lines;
  MatQ killing;  // Gram matrix of the Killing form on the t basis
};

// Joint eigenspace decomposition of g under ad(t); requires corank 0
// (t abelian of dimension rank(g)); rejected otherwise with a diagnosis.
RestrictedRootDatum restricted_roots(const GradedMatrixAlgebra& a,
                                     const CartanSubspace& c);

struct ThetaSubsystem {
  int line;
  MatC basis;  // flat coordinates, columns; dim should be m^2 - 1
  int dim() const { return static_cast<int>(basis.cols()); }
};

// Smallest subalgebra containing the root spaces of one line; verified to
// have dimension m^2 - 1, nondegenerate Killing form, and abelian
// intersection with g_0 of dimension m - 1.
ThetaSubsystem theta_subsystem(const GradedMatrixAlgebra& a,
                               const RestrictedRootDatum& datum, int line);

struct LittleWeylGroup {
  std::vector<MatC> elements;  // acting on t, graded-block matrices
  std::vector<MatC> generators;
  // reflections on the Cartan subspace block (grade 1)
  struct ReflectionInfo {
    int order;
    std::string cls;  // length class of the matching line
  };
  std::vector<std::pair<int, ReflectionInfo>> reflections;  // element index
  long hyperplanes = 0;
  long order() const { return static_cast<long>(elements.size()); }
  std::map<std::pair<int, std::string>, long> census() const;
};

LittleWeylGroup little_weyl_group(const GradedMatrixAlgebra& a,
                                  const RestrictedRootDatum& datum,
                                  std::size_t element_cap = 1000000);

struct SliceDiscriminant {
  std::string cls;
  std::vector<VecC> forms;  // linear forms on t_{-1}, the W_theta orbit
  int degree() const { return static_cast<int>(forms.size()); }
};

// D = product of the W_theta orbit of alpha_{-1}, on the t_{-1} block.
SliceDiscriminant restricted_discriminant(const GradedMatrixAlgebra& a,
                                          const RestrictedRootDatum& datum,
                                          const LittleWeylGroup& w,
                                          const std::string& cls);
// checks that every generator permutes the forms projectively
bool discriminant_is_invariant(const GradedMatrixAlgebra& a,
                               const SliceDiscriminant& d,
                               const RestrictedRootDatum& datum,
                               const LittleWeylGroup& w);

struct SliceTestReport {
  bool kernel_equals_hyperplane = false;  // z_{-1}(e) cap t_{-1} = ker a_{-1}
  bool centralizer_dim_matches = false;   // dim z_{-1}(e) = dim g_{-1} - dim [g_0, e]
  bool passed() const { return kernel_equals_hyperplane && centralizer_dim_matches; }
};

SliceTestReport centralizer_slice_test(const GradedMatrixAlgebra& a,
                                       const RestrictedRootDatum& datum,
                                       int line);

// rank of (u, y) -> [u, f + y0] + y at a seeded generic point y0 of the
// hyperplane; retries up to 8 samples before reporting failure
bool regular_slice_dimension_test(const GradedMatrixAlgebra& a,
                                  const RestrictedRootDatum& datum, int line,
                                  unsigned seed = 1);

}  // namespace thetarep
