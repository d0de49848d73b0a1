#pragma once

#include <set>
#include <string>
#include <vector>

#include "thetarep/arith.hpp"

namespace thetarep {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_letter(Family f) { return static_cast<char>(f); }
Family family_from_letter(char c);

// Finite root system in an explicit rational ambient space; roots are stored
// in a fixed lexicographic order so all downstream output is reproducible.
struct RootSystem {
  Family family;
  int rank;
  int ambient_dim;
  std::vector<VecQ> roots;         // lex-sorted
  std::vector<VecQ> simple_roots;  // Bourbaki numbering
  std::vector<bool> is_long;       // parallel to roots
  Eigen::MatrixXi cartan_matrix;   // (i,j) = <alpha_i, alpha_j^check>

  int root_index(const VecQ& v) const;  // -1 when not a root
  bool is_root(const VecQ& v) const { return root_index(v) >= 0; }
  std::string type_name() const;  // e.g. "E8"
};

// Valid ranks: A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F 4, G 2.
RootSystem build_root_system(Family family, int rank);

// (long count, short count); short = 0 for simply laced types.
std::pair<int, int> root_counts_by_length(const RootSystem& rs);

// classical count |R| without building the system
long root_count_formula(Family family, int rank);
long long weyl_group_order(Family family, int rank);

Rat inner(const VecQ& a, const VecQ& b);
// <beta, alpha^check> = 2 (beta,alpha) / (alpha,alpha); alpha != 0
Rat cartan_pairing(const VecQ& beta, const VecQ& alpha);

VecQ weyl_reflect(const VecQ& alpha, const VecQ& v);

struct VecLess {
  bool operator()(const VecQ& a, const VecQ& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  }
};

std::set<VecQ, VecLess> weyl_orbit(const RootSystem& rs, const VecQ& v);

// coefficients n_i with alpha = sum n_i alpha_i (exact; throws off-lattice)
Eigen::VectorXi simple_root_coordinates(const RootSystem& rs,
                                        const VecQ& alpha);

// column j = simple-root coordinates of roots[j]; one elimination for all
Eigen::MatrixXi all_simple_coordinates(const RootSystem& rs);

const VecQ& highest_root(const RootSystem& rs);

}  // namespace thetarep
