#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetarep/root_system.hpp"

namespace thetarep {

// Affine (twist 1) or twisted (twist 2, 3) Kac diagram.  For twist 1 the
// nodes are (affine node, alpha_1 ... alpha_n in Bourbaki order) and all
// structure is derived from the root system.  Twisted diagrams carry the
// printed marks; their grading data comes from a hand-entered catalog
// validated by dimension identities.
struct KacDiagram {
  Family base_family;
  int base_rank;
  int twist;
  std::string name;  // e.g. "E8^1", "A4^2", "D4^3"
  std::vector<int> marks;
  std::vector<std::pair<int, int>> edges;
  int nodes() const { return static_cast<int>(marks.size()); }
};

KacDiagram kac_diagram(Family family, int rank, int twist);
KacDiagram kac_diagram(const std::string& name);  // parses "E8^1"

struct ReflectionClass {
  std::string label;  // "alpha", "alpha_l", "alpha_s"
  int order;          // = m
  long count;
  long hyperplanes;
  long deg_d;  // = #roots(class)/(m-1)
};

struct GradingReport {
  std::string diagram;
  int node = -1;
  int m = 0;
  std::string status = "ok";  // "ok", "unknown-theta-rank", "unsupported-order"
  std::string g0_type;        // canonical component string, e.g. "C3xA1"
  std::string g1_desc;
  std::vector<long> dims;  // dim g_i for i = 0..m-1 (empty if unknown)
  long dim_g = 0;
  int rank_g = 0;
  int theta_rank = -1;  // -1 when unknown
  int theta_corank = -1;
  bool in_table1 = false;
  std::string little_weyl;
  long long weyl_order = 0;
  std::vector<ReflectionClass> reflections;
  std::string closed_orbit;
  long codegree = -1;
  std::vector<std::string> warnings;
};

GradingReport grading_from_node(const KacDiagram& diagram, int node);

// (theta rank, theta corank); throws if unknown for this grading.
std::pair<int, int> theta_rank_and_corank(const GradingReport& report);

// reflection classes of a maximal-rank prime grading; throws with the failed
// hypothesis named when m not in {2,3,5}, corank != 0, or not single-node.
std::vector<ReflectionClass> reflection_profile(const GradingReport& report);

// degree of the invariant discriminant for the given class ("alpha",
// "alpha_l", "alpha_s"); throws when the class is absent.
long deg_discriminant(const GradingReport& report, const std::string& cls);

// All corank-0 gradings with m in {2,3,5} and rho_1(G_0) semisimple:
// the fixed exceptional/twisted rows plus classical families instantiated
// with parameters p, n <= max_param.
std::vector<GradingReport> scan_table1(int max_param = 6);

// The 16 printed rows (10 exceptional/twisted + 6 parametric families kept
// symbolic), for golden tests and table output.
struct Table1Printed {
  std::string type;      // "E7^1" or "B_{2p}^1"
  std::string g0;        // as printed
  std::string g1;        // as printed
  int m;
  std::string weyl;      // "W(E7)", "25th", "W(B_{2p})"
  std::string census;    // "2^63", "2^{4p^2}"
  std::string orbit;     // Table 3 label
  std::string codegree;  // printed degree ("126" or "4p(2p-1)")
  bool discrepancy = false;
};
const std::vector<Table1Printed>& table1_printed_rows();

// Table 2 entries: (Weyl group label, class label, degree formula).
struct Table2Entry {
  std::string group;       // "W(A_{2n-2})", "32nd", ...
  std::string root_class;  // "alpha", "alpha_l", "alpha_s"
  // value at parameter (p or n); parameter ignored for fixed entries
  long (*value)(int);
  bool parametric;
  char param_name;  // 'p' or 'n'
  std::string formula;
};
const std::vector<Table2Entry>& table2_entries();

}  // namespace thetarep
