#include "thetarep/kac.hpp"

#include <algorithm>

#include "thetarep/cyclotomic.hpp"
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thetarep {

namespace {

std::string diagram_name(Family f, int rank, int twist) {
  return std::string(1, family_letter(f)) + std::to_string(rank) + "^" +
         std::to_string(twist);
}

long dim_of_type(Family f, int rank) {
  return root_count_formula(f, rank) + rank;
}

// (long, short) counts without building the root system
std::pair<long, long> length_split(Family f, int n) {
  switch (f) {
    case Family::B: return {2L * n * (n - 1), 2L * n};
    case Family::C: return {2L * n, 2L * n * (n - 1)};
    case Family::F: return {24, 24};
    case Family::G: return {6, 6};
    default: return {root_count_formula(f, n), 0};
  }
}

struct TwistedRow {
  int m;
  std::string g0;
  std::string g1;
  std::vector<long> dims;
  int theta_rank;
  bool table1;
};

std::string canonical_small(Family f, int rank) {
  // low-rank coincidences, canonical letters
  if (rank == 0) return "";
  if ((f == Family::B || f == Family::C || f == Family::D) && rank == 1)
    return "A1";
  if (f == Family::C && rank == 2) return "B2";
  if (f == Family::D && rank == 2) return "A1xA1";
  if (f == Family::D && rank == 3) return "A3";
  return std::string(1, family_letter(f)) + std::to_string(rank);
}

std::string join_components(std::vector<std::string> comps) {
  // descending rank then letter, matching the catalog conventions
  auto key = [](const std::string& s) {
    int r = std::stoi(s.substr(1));
    return std::make_pair(-r, s[0]);
  };
  std::vector<std::string> flat;
  for (auto& c : comps) {
    if (c.empty()) continue;
    size_t pos = 0;
    while (true) {
      size_t x = c.find('x', pos);
      if (x != pos) flat.push_back(c.substr(pos, x - pos));
      if (x == std::string::npos) break;
      pos = x + 1;
    }
  }
  std::sort(flat.begin(), flat.end(),
            [&](const std::string& a, const std::string& b) {
              return key(a) < key(b);
            });
  std::string out;
  for (size_t i = 0; i < flat.size(); ++i) {
    if (i) out += "x";
    out += flat[i];
  }
  return out;
}

}  // namespace

KacDiagram kac_diagram(Family family, int rank, int twist) {
  KacDiagram d;
  d.base_family = family;
  d.base_rank = rank;
  d.twist = twist;
  d.name = diagram_name(family, rank, twist);
  if (twist == 1) {
    RootSystem rs = build_root_system(family, rank);
    const VecQ& theta = highest_root(rs);
    Eigen::VectorXi hc = simple_root_coordinates(rs, theta);
    d.marks.assign(rank + 1, 1);
    for (int i = 0; i < rank; ++i) d.marks[i + 1] = hc(i);
    std::vector<VecQ> node_roots;
    node_roots.push_back(VecQ(-theta));
    for (const VecQ& s : rs.simple_roots) node_roots.push_back(s);
    for (int i = 0; i <= rank; ++i)
      for (int j = i + 1; j <= rank; ++j)
        if (inner(node_roots[i], node_roots[j]) != 0) d.edges.push_back({i, j});
    return d;
  }
  if (twist == 2 && family == Family::A && rank >= 2 && rank % 2 == 0) {
    int l = rank / 2;  // nodes 0..l, the unique mark-2 node is node l
    d.marks.assign(l + 1, 4);
    d.marks[l] = 2;
    for (int i = 0; i < l; ++i) d.edges.push_back({i, i + 1});
    return d;
  }
  if (twist == 2 && family == Family::A && rank >= 3 && rank % 2 == 1) {
    int l = (rank + 1) / 2;  // nodes 0..l; 0,1 fork onto 2; chain to l
    d.marks.assign(l + 1, 4);
    d.marks[0] = d.marks[1] = d.marks[l] = 2;
    d.edges.push_back({0, 2});
    d.edges.push_back({1, 2});
    for (int i = 2; i < l; ++i) d.edges.push_back({i, i + 1});
    return d;
  }
  if (twist == 2 && family == Family::D && rank >= 2) {
    d.marks.assign(rank, 2);  // nodes 0..n-1
    for (int i = 0; i + 1 < rank; ++i) d.edges.push_back({i, i + 1});
    return d;
  }
  if (twist == 2 && family == Family::E && rank == 6) {
    d.marks = {2, 4, 6, 4, 2};  // node 4 end: g0 = C4; node 0 end: g0 = F4
    for (int i = 0; i < 4; ++i) d.edges.push_back({i, i + 1});
    return d;
  }
  if (twist == 3 && family == Family::D && rank == 4) {
    d.marks = {3, 6, 3};  // node 0: g0 = G2; node 2: g0 = A2
    d.edges.push_back({0, 1});
    d.edges.push_back({1, 2});
    return d;
  }
  throw std::invalid_argument("unsupported Kac diagram " +
                              diagram_name(family, rank, twist));
}

KacDiagram kac_diagram(const std::string& name) {
  size_t caret = name.find('^');
  if (caret == std::string::npos || caret < 2)
    throw std::invalid_argument("diagram name must look like E8^1: " + name);
  Family f = family_from_letter(name[0]);
  int rank = std::stoi(name.substr(1, caret - 1));
  int twist = std::stoi(name.substr(caret + 1));
  return kac_diagram(f, rank, twist);
}

namespace {

// classify a connected subdiagram of an affine diagram into a simple type,
// using the actual root vectors (bond multiplicities and lengths)
std::string classify_component(const std::vector<VecQ>& roots) {
  int n = static_cast<int>(roots.size());
  if (n == 1) return "A1";
  std::vector<std::vector<int>> adj(n);
  int max_bond = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat b = cartan_pairing(roots[i], roots[j]) *
              cartan_pairing(roots[j], roots[i]);
      if (b != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        int bi = static_cast<int>(to_integer(b).get_si());
        max_bond = std::max(max_bond, bi);
      }
    }
  if (max_bond == 3) return "G2";
  if (max_bond == 2) {
    // path with one double bond: count long and short nodes
    Rat maxlen = 0;
    for (const VecQ& r : roots) maxlen = std::max(maxlen, inner(r, r));
    int nlong = 0;
    for (const VecQ& r : roots)
      if (inner(r, r) == maxlen) ++nlong;
    int nshort = n - nlong;
    if (nlong == 2 && nshort == 2 && n == 4) return "F4";
    if (nshort == 1) return canonical_small(Family::B, n);
    if (nlong == 1) return canonical_small(Family::C, n);
    throw std::logic_error("unrecognized multiply-laced component");
  }
  // simply laced: path or one branch node
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 3) throw std::logic_error("node of valence > 3");
    if (adj[i].size() == 3) {
      if (branch >= 0) throw std::logic_error("two branch nodes");
      branch = i;
    }
  }
  if (branch < 0) return canonical_small(Family::A, n);
  std::vector<int> arms;
  for (int s : adj[branch]) {
    int len = 0, prev = branch, cur = s;
    while (true) {
      ++len;
      int next = -1;
      for (int t : adj[cur])
        if (t != prev) next = t;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return canonical_small(Family::D, n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(n);
  throw std::logic_error("unrecognized simply-laced component");
}

struct ExcRow {
  const char* diagram;
  int node;
  int m;
  const char* g0;
  const char* g1;
  long g1_dim;
  const char* weyl;
  long long weyl_order;
  const char* orbit;
};

// the fixed exceptional/twisted catalog of corank-0 rows (classification
// data, validated by the dimension identities in grading_from_node)
const ExcRow kExcRows[] = {
    {"E6^1", 4, 3, "A2xA2xA2", "C^3(x)C^3(x)C^3", 27, "25th", 648,
     "P^2 x P^2 x P^2"},
    {"E7^1", 2, 2, "A7", "wedge^4 C^8", 70, "W(E7)", 2903040, "G(4,8)"},
    {"E8^1", 1, 2, "D8", "S^+_16", 128, "W(E8)", 696729600, "OG(8,16)_+"},
    {"E8^1", 2, 3, "A8", "wedge^3 C^9", 84, "32nd", 155520, "G(3,9)"},
    {"E8^1", 5, 5, "A4xA4", "C^5(x)wedge^2 C^5", 50, "16th", 600,
     "P^4 x G(2,5)"},
    {"F4^1", 1, 2, "C3xA1", "wedge^<3>C^6(x)C^2", 28, "W(F4)", 1152,
     "OG(3,7) x P^1"},
    {"F4^1", 2, 3, "A2xA2", "Sym^2 C^3(x)C^3", 18, "5th", 72,
     "v_2(P^2) x P^2"},
    {"G2^1", 2, 2, "A1xA1", "Sym^3 C^2(x)C^2", 8, "W(G2)", 12,
     "v_3(P^1) x P^1"},
};

const ExcRow* find_exc_row(const std::string& diagram, int node) {
  for (const ExcRow& r : kExcRows)
    if (diagram == r.diagram && node == r.node) return &r;
  return nullptr;
}

void attach_profile(GradingReport& rep, Family base, int base_rank) {
  auto [nl, ns] = length_split(base, base_rank);
  long m = rep.m;
  auto mk = [&](const std::string& label, long nroots) {
    ReflectionClass rc;
    rc.label = label;
    rc.order = rep.m;
    if (nroots % m || nroots % (m * (m - 1)) || nroots % (m - 1))
      throw std::logic_error("reflection counts not integral");
    rc.count = nroots / m;
    rc.hyperplanes = nroots / (m * (m - 1));
    rc.deg_d = nroots / (m - 1);
    return rc;
  };
  rep.reflections.clear();
  if (ns == 0) {
    rep.reflections.push_back(mk("alpha", nl));
  } else {
    rep.reflections.push_back(mk("alpha_l", nl));
    rep.reflections.push_back(mk("alpha_s", ns));
  }
  rep.codegree = rep.reflections.front().deg_d;
}

}  // namespace

GradingReport grading_from_node(const KacDiagram& d, int node) {
  if (node < 0 || node >= d.nodes())
    throw std::invalid_argument("node index out of range for " + d.name);
  GradingReport rep;
  rep.diagram = d.name;
  rep.node = node;
  rep.m = d.marks[node];
  rep.rank_g = d.base_rank;
  rep.dim_g = dim_of_type(d.base_family, d.base_rank);

  if (d.twist == 1) {
    RootSystem rs = build_root_system(d.base_family, d.base_rank);
    const int r = d.base_rank;
    const int m = rep.m;
    if (m == 1) {
      rep.status = "trivial-grading";
      rep.g0_type = rs.type_name();
      rep.dims = {rep.dim_g};
      return rep;
    }
    // dims by counting coordinates mod m at the chosen simple root
    rep.dims.assign(m, 0);
    Eigen::MatrixXi coords = all_simple_coordinates(rs);
    for (int c = 0; c < coords.cols(); ++c) {
      int j = ((coords(node - 1, c) % m) + m) % m;
      rep.dims[j] += 1;
    }
    rep.dims[0] += r;
    // g0 components
    const VecQ theta = highest_root(rs);
    std::vector<VecQ> node_roots;
    node_roots.push_back(VecQ(-theta));
    for (const VecQ& s : rs.simple_roots) node_roots.push_back(s);
    std::vector<int> remaining;
    for (int i = 0; i <= r; ++i)
      if (i != node) remaining.push_back(i);
    std::map<int, int> comp;  // node -> component id
    int ncomp = 0;
    for (int s : remaining) {
      if (comp.count(s)) continue;
      std::vector<int> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : remaining) {
          if (comp.count(y) || y == x) continue;
          if (inner(node_roots[x], node_roots[y]) != 0) {
            comp[y] = ncomp;
            stack.push_back(y);
          }
        }
      }
      ++ncomp;
    }
    std::vector<std::string> comp_names;
    std::vector<std::vector<int>> comp_nodes(ncomp);
    for (auto& [nd, c] : comp) comp_nodes[c].push_back(nd);
    for (auto& nodes : comp_nodes) {
      std::vector<VecQ> vecs;
      for (int nd : nodes) vecs.push_back(node_roots[nd]);
      comp_names.push_back(classify_component(vecs));
    }
    rep.g0_type = join_components(comp_names);

    // theta rank: classical min rules, exceptional catalog
    auto comp_size_meeting = [&](std::initializer_list<int> marksides) {
      std::set<int> ids;
      for (int s : marksides)
        if (comp.count(s)) ids.insert(comp[s]);
      int total = 0;
      for (auto& [nd, c] : comp)
        if (ids.count(c)) ++total;
      return total;
    };
    switch (d.base_family) {
      case Family::B: {
        if (m == 2) {
          int p2 = comp_size_meeting({0, 1});  // D_p side (so_{2p})
          int q = r - p2;                      // B_q side (so_{2q+1})
          rep.theta_rank = std::min(2 * p2, 2 * q + 1);
          rep.theta_corank = r - rep.theta_rank;
        }
        break;
      }
      case Family::C: {
        if (m == 2) {
          int p2 = comp_size_meeting({0});
          int q = r - p2;
          rep.theta_rank = std::min(p2, q);
          rep.theta_corank = r - rep.theta_rank;
        }
        break;
      }
      case Family::D: {
        if (m == 2) {
          int p2 = comp_size_meeting({0, 1});
          int q = r - p2;
          rep.theta_rank = std::min(2 * p2, 2 * q);
          rep.theta_corank = r - rep.theta_rank;
        }
        break;
      }
      case Family::A: {
        break;  // all marks 1, unreachable for m >= 2
      }
      default: {  // E, F, G: catalog only
        const ExcRow* row = find_exc_row(d.name, node);
        if (row) {
          rep.theta_corank = 0;
          rep.theta_rank = r / euler_phi(m);
        }
        break;
      }
    }
    if (rep.theta_rank < 0 && (m == 2 || m == 3 || m == 5)) {
      rep.status = "unknown-theta-rank";
    } else if (m != 2 && m != 3 && m != 5) {
      rep.status = "unsupported-order";
    }

    const ExcRow* row = find_exc_row(d.name, node);
    if (row) {
      if (rep.g0_type != row->g0)
        throw std::logic_error("catalog mismatch for " + d.name + " node " +
                               std::to_string(node) + ": computed " +
                               rep.g0_type + " vs " + row->g0);
      rep.in_table1 = true;
      rep.g1_desc = row->g1;
      rep.little_weyl = row->weyl;
      rep.weyl_order = row->weyl_order;
      rep.closed_orbit = row->orbit;
      if (rep.dims[1] != row->g1_dim)
        throw std::logic_error("catalog g1 dimension mismatch for " + d.name);
      if (d.name == "F4^1" && node == 1) {
        rep.warnings.push_back(
            "table prints g0 = B3xA1 with g1 = S_7(x)C^2 (dim 16); node "
            "deletion yields g0 = C3xA1 with dim g1 = 28 and 24+16 != 52; "
            "recording computed row, printed closed orbit OG(3,7) x P^1 is "
            "abstractly LG(3,6) x P^1");
      }
      attach_profile(rep, d.base_family, d.base_rank);
    } else if (m == 2 && rep.theta_corank == 0 &&
               (d.base_family == Family::B || d.base_family == Family::D)) {
      // classical corank-0 families (Table 1 parametric rows)
      rep.in_table1 = true;
      rep.little_weyl = "W(" + rs.type_name() + ")";
      rep.weyl_order = weyl_group_order(d.base_family, d.base_rank);
      int p2 = comp_size_meeting({0, 1});
      int q = r - p2;
      std::ostringstream orbit, g1;
      if (d.base_family == Family::B) {
        orbit << "Q^" << (2 * p2 - 2) << " x Q^" << (2 * q - 1);
        g1 << "C^" << 2 * p2 << "(x)C^" << (2 * q + 1);
      } else {
        orbit << "Q^" << (2 * p2 - 2) << " x Q^" << (2 * q - 2);
        g1 << "C^" << 2 * p2 << "(x)C^" << 2 * q;
      }
      rep.closed_orbit = orbit.str();
      rep.g1_desc = g1.str();
      attach_profile(rep, d.base_family, d.base_rank);
    }

    // dimension identities (every corank-0 prime-order row)
    if (rep.in_table1) {
      long sum = std::accumulate(rep.dims.begin(), rep.dims.end(), 0L);
      if (sum != rep.dim_g)
        throw std::logic_error("dimension sum identity failed for " + d.name);
      long r0 = root_count_formula(d.base_family, d.base_rank);
      if (r0 % m != 0 || rep.dims[0] != r0 / m)
        throw std::logic_error("dim g0 != |R|/m for " + d.name);
      for (int i = 1; i < m; ++i)
        if (rep.dims[i] != rep.dims[0] + rep.theta_rank)
          throw std::logic_error("graded dimension identity failed");
    }
    return rep;
  }

  // twisted diagrams: hand-entered catalog validated by dimension sums
  const int l = d.nodes() - 1;
  auto finish_table1 = [&](const std::string& g0, const std::string& g1,
                           long dim0, long dim1, int trank,
                           const std::string& weyl, long long worder,
                           const std::string& orbit) {
    rep.g0_type = g0;
    rep.g1_desc = g1;
    rep.dims = {dim0, dim1};
    rep.theta_rank = trank;
    rep.theta_corank = d.base_rank - trank * euler_phi(rep.m);
    rep.in_table1 = rep.theta_corank == 0;
    if (rep.in_table1) {
      rep.little_weyl = weyl;
      rep.weyl_order = worder;
      rep.closed_orbit = orbit;
      attach_profile(rep, d.base_family, d.base_rank);
    }
    if (dim0 + dim1 != rep.dim_g)
      throw std::logic_error("twisted catalog dimension sum failed for " +
                             d.name);
  };

  if (d.twist == 2 && d.base_family == Family::A && d.base_rank % 2 == 0) {
    if (node == l) {
      // g0 = so_{2l+1}, g1 = traceless symmetric square
      finish_table1(canonical_small(Family::B, l), "S^<2>C^" +
                        std::to_string(2 * l + 1),
                    1L * l * (2 * l + 1), 1L * (l + 1) * (2 * l + 1) - 1,
                    2 * l, "W(A" + std::to_string(2 * l) + ")",
                    weyl_group_order(Family::A, 2 * l),
                    "v_2(Q^" + std::to_string(2 * l - 1) + ")");
      return rep;
    }
    rep.status = "unsupported-order";
    return rep;
  }
  if (d.twist == 2 && d.base_family == Family::A && d.base_rank % 2 == 1) {
    if (node == l) {
      finish_table1(canonical_small(Family::D, l),
                    "S^<2>C^" + std::to_string(2 * l),
                    1L * l * (2 * l - 1), 1L * l * (2 * l + 1) - 1, 2 * l - 1,
                    "W(A" + std::to_string(2 * l - 1) + ")",
                    weyl_group_order(Family::A, 2 * l - 1),
                    "v_2(Q^" + std::to_string(2 * l - 2) + ")");
      return rep;
    }
    if (node == 0 || node == 1) {
      // g0 = sp_{2l}, g1 = reduced wedge square; corank l > 0
      rep.g0_type = canonical_small(Family::C, l);
      rep.g1_desc = "wedge^<2>C^" + std::to_string(2 * l);
      rep.dims = {1L * l * (2 * l + 1), 1L * l * (2 * l - 1) - 1};
      rep.theta_rank = l - 1;
      rep.theta_corank = d.base_rank - (l - 1);
      if (rep.dims[0] + rep.dims[1] != rep.dim_g)
        throw std::logic_error("twisted catalog dimension sum failed");
      return rep;
    }
    rep.status = "unsupported-order";
    return rep;
  }
  if (d.twist == 2 && d.base_family == Family::D) {
    int n = d.base_rank;
    int p = node, q = n - 1 - node;
    std::string g0;
    {
      std::string a = canonical_small(Family::B, p);
      std::string b = canonical_small(Family::B, q);
      g0 = join_components({a, b});
      if (g0.empty()) g0 = "0";
    }
    std::ostringstream g1;
    g1 << "C^" << (2 * p + 1) << "(x)C^" << (2 * q + 1);
    long dim0 = 1L * p * (2 * p + 1) + 1L * q * (2 * q + 1);
    long dim1 = 1L * (2 * p + 1) * (2 * q + 1);
    std::ostringstream orbit;
    orbit << "Q^" << (2 * p - 1) << " x Q^" << (2 * q - 1);
    finish_table1(g0, g1.str(), dim0, dim1, std::min(2 * p + 1, 2 * q + 1),
                  "W(D" + std::to_string(n) + ")",
                  weyl_group_order(Family::D, n), orbit.str());
    return rep;
  }
  if (d.twist == 2 && d.base_family == Family::E) {
    if (node == 4) {
      finish_table1("C4", "wedge^<4>C^8", 36, 42, 6, "W(E6)",
                    weyl_group_order(Family::E, 6), "LG(4,8)");
      return rep;
    }
    if (node == 0) {
      rep.g0_type = "F4";
      rep.g1_desc = "C^26";
      rep.dims = {52, 26};
      rep.theta_rank = 2;
      rep.theta_corank = 4;
      return rep;
    }
    rep.status = "unsupported-order";
    return rep;
  }
  if (d.twist == 3) {
    if (node == 2) {
      rep.dims = {8, 10, 10};
      rep.g0_type = "A2";
      rep.g1_desc = "Sym^3 C^3";
      rep.theta_rank = 2;
      rep.theta_corank = 0;
      rep.in_table1 = true;
      rep.little_weyl = "4th";
      rep.weyl_order = 24;
      rep.closed_orbit = "v_3(P^2)";
      attach_profile(rep, Family::D, 4);
      if (8 + 10 + 10 != rep.dim_g)
        throw std::logic_error("D4^3 dimension sum failed");
      return rep;
    }
    if (node == 0) {
      rep.dims = {14, 7, 7};
      rep.g0_type = "G2";
      rep.g1_desc = "C^7";
      rep.theta_rank = 1;
      rep.theta_corank = 2;
      return rep;
    }
    rep.status = "unsupported-order";
    return rep;
  }
  throw std::logic_error("unhandled diagram " + d.name);
}

std::pair<int, int> theta_rank_and_corank(const GradingReport& rep) {
  if (rep.theta_rank < 0)
    throw std::runtime_error("unknown theta-rank for " + rep.diagram +
                             " node " + std::to_string(rep.node) +
                             " (grading outside the supported catalog)");
  return {rep.theta_rank, rep.theta_corank};
}

std::vector<ReflectionClass> reflection_profile(const GradingReport& rep) {
  if (rep.m != 2 && rep.m != 3 && rep.m != 5)
    throw std::runtime_error("reflection_profile: order m = " +
                             std::to_string(rep.m) + " not in {2,3,5}");
  if (rep.theta_corank != 0)
    throw std::runtime_error("reflection_profile: theta-corank is " +
                             std::to_string(rep.theta_corank) + ", not 0");
  if (!rep.in_table1)
    throw std::runtime_error(
        "reflection_profile: rho_1(G_0) not semisimple or grading outside "
        "the catalog");
  return rep.reflections;
}

long deg_discriminant(const GradingReport& rep, const std::string& cls) {
  for (const ReflectionClass& rc : reflection_profile(rep))
    if (rc.label == cls) return rc.deg_d;
  throw std::runtime_error("deg_discriminant: class " + cls +
                           " absent for " + rep.diagram);
}

std::vector<GradingReport> scan_table1(int max_param) {
  std::vector<GradingReport> out;
  auto add_if_table1 = [&](const KacDiagram& d, int node) {
    GradingReport r = grading_from_node(d, node);
    if (r.in_table1) out.push_back(std::move(r));
  };
  // exceptional and twisted fixed rows
  for (const ExcRow& row : kExcRows)
    add_if_table1(kac_diagram(row.diagram), row.node);
  add_if_table1(kac_diagram("E6^2"), 4);
  add_if_table1(kac_diagram("D4^3"), 2);
  // classical inner families: scan all mark-2 nodes
  for (int r = 2; r <= 2 * max_param; ++r) {
    KacDiagram d = kac_diagram(Family::B, r, 1);
    for (int node = 1; node <= r; ++node)
      if (d.marks[node] == 2) add_if_table1(d, node);
  }
  for (int r = 4; r <= 2 * max_param; ++r) {
    KacDiagram d = kac_diagram(Family::D, r, 1);
    for (int node = 1; node <= r; ++node)
      if (d.marks[node] == 2) add_if_table1(d, node);
  }
  for (int r = 3; r <= 2 * max_param; ++r) {  // corank never 0; kept explicit
    KacDiagram d = kac_diagram(Family::C, r, 1);
    for (int node = 1; node <= r; ++node)
      if (d.marks[node] == 2) add_if_table1(d, node);
  }
  // twisted families
  for (int l = 1; l <= max_param; ++l)
    add_if_table1(kac_diagram(Family::A, 2 * l, 2), l);
  for (int l = 2; l <= max_param; ++l)
    add_if_table1(kac_diagram(Family::A, 2 * l - 1, 2), l);
  for (int n = 2; n <= 2 * max_param + 1; ++n) {
    KacDiagram d = kac_diagram(Family::D, n, 2);
    for (int node = 0; node < n; ++node) add_if_table1(d, node);
  }
  // dedupe (D^{(2)} nodes p and n-1-p give the same grading)
  std::vector<GradingReport> dedup;
  std::set<std::string> seen;
  for (auto& r : out) {
    std::string key = r.diagram + "|" + r.g0_type + "|" + std::to_string(r.m);
    if (seen.insert(key).second) dedup.push_back(std::move(r));
  }
  return dedup;
}

const std::vector<Table1Printed>& table1_printed_rows() {
  static const std::vector<Table1Printed> rows = {
      {"B_{2p}^1", "DpxBp", "C^{2p}(x)C^{2p+1}", 2, "W(B_{2p})", "2^{4p^2}",
       "Q^{2p-2} x Q^{2p-1}", "4p(2p-1)", false},
      {"B_{2p-1}^1", "DpxB{p-1}", "C^{2p}(x)C^{2p-1}", 2, "W(B_{2p-1})",
       "2^{4p^2-4p+1}", "Q^{2p-2} x Q^{2p-3}", "4(p-1)(2p-1)", false},
      {"D_{2p}^1", "DpxDp", "C^{2p}(x)C^{2p}", 2, "W(D_{2p})", "2^{4p^2-2p}",
       "Q^{2p-2} x Q^{2p-2}", "4p(2p-1)", false},
      {"A_{2n-2}^2", "B{n-1}", "S^<2>C^{2n-1}", 2, "W(A_{2n-2})",
       "2^{2n^2-3n+1}", "v_2(Q^{2n-3})", "2(n-1)(2n-1)", false},
      {"A_{2n-3}^2", "D{n-1}", "S^<2>C^{2n-2}", 2, "W(A_{2n-3})",
       "2^{2n^2-5n+3}", "v_2(Q^{2n-4})", "2(n-1)(2n-3)", false},
      {"D_{2p+1}^2", "BpxBp", "C^{2p+1}(x)C^{2p+1}", 2, "W(D_{2p+1})",
       "2^{4p^2+2p}", "Q^{2p-1} x Q^{2p-1}", "4p(2p+1)", false},
      {"E6^1", "A2xA2xA2", "C^3(x)C^3(x)C^3", 3, "25th", "3^24",
       "P^2 x P^2 x P^2", "36", false},
      {"E7^1", "A7", "wedge^4 C^8", 2, "W(E7)", "2^63", "G(4,8)", "126",
       false},
      {"E8^1", "D8", "S^+_16", 2, "W(E8)", "2^120", "OG(8,16)_+", "240",
       false},
      {"E8^1", "A8", "wedge^3 C^9", 3, "32nd", "3^80", "G(3,9)", "120", false},
      {"E8^1", "A4xA4", "C^5(x)wedge^2 C^5", 5, "16th", "5^48",
       "P^4 x G(2,5)", "60", false},
      {"F4^1", "B3xA1", "S_7(x)C^2", 2, "W(F4)", "2^24", "OG(3,7) x P^1",
       "24", true},
      {"F4^1", "A2xA2", "Sym^2 C^3(x)C^3", 3, "5th", "3^16", "v_2(P^2) x P^2",
       "12", false},
      {"G2^1", "A1xA1", "Sym^3 C^2(x)C^2", 2, "W(G2)", "2^6", "v_3(P^1) x P^1",
       "6", false},
      {"E6^2", "C4", "wedge^<4>C^8", 2, "W(E6)", "2^36", "LG(4,8)", "72",
       false},
      {"D4^3", "A2", "Sym^3 C^3", 3, "4th", "3^8", "v_3(P^2)", "12", false},
  };
  return rows;
}

namespace {
long v_a2n2(int n) { return (2L * n - 1) * (2 * n - 2); }
long v_b2p_l(int p) { return 4L * p * (2 * p - 1); }
long v_b2p_s(int p) { return 4L * p; }
long v_e6(int) { return 72; }
long v_32(int) { return 120; }
long v_a2n3(int n) { return (2L * n - 2) * (2 * n - 3); }
long v_d2p1(int p) { return 4L * p * (2 * p + 1); }
long v_b2p1_s(int p) { return 4L * p - 2; }
long v_e7(int) { return 126; }
long v_16(int) { return 60; }
long v_b2p1_l(int p) { return 4L * (p - 1) * (2 * p - 1); }
long v_d2p(int p) { return 4L * p * (2 * p - 1); }
long v_25(int) { return 36; }
long v_e8(int) { return 240; }
long v_4(int) { return 12; }
long v_g2(int) { return 6; }
long v_5(int) { return 12; }
long v_f4(int) { return 24; }
}  // namespace

const std::vector<Table2Entry>& table2_entries() {
  static const std::vector<Table2Entry> rows = {
      {"W(A_{2n-2})", "alpha", v_a2n2, true, 'n', "(2n-1)(2n-2)"},
      {"W(B_{2p})", "alpha_l", v_b2p_l, true, 'p', "4p(2p-1)"},
      {"W(B_{2p})", "alpha_s", v_b2p_s, true, 'p', "4p"},
      {"W(E6)", "alpha", v_e6, false, ' ', "72"},
      {"32nd", "alpha", v_32, false, ' ', "120"},
      {"W(A_{2n-3})", "alpha", v_a2n3, true, 'n', "(2n-2)(2n-3)"},
      {"W(D_{2p+1})", "alpha", v_d2p1, true, 'p', "4p(2p+1)"},
      {"W(B_{2p-1})", "alpha_s", v_b2p1_s, true, 'p', "4p-2"},
      {"W(E7)", "alpha", v_e7, false, ' ', "126"},
      {"16th", "alpha", v_16, false, ' ', "60"},
      {"W(B_{2p-1})", "alpha_l", v_b2p1_l, true, 'p', "4(p-1)(2p-1)"},
      {"W(D_{2p})", "alpha", v_d2p, true, 'p', "4p(2p-1)"},
      {"25th", "alpha", v_25, false, ' ', "36"},
      {"W(E8)", "alpha", v_e8, false, ' ', "240"},
      {"4th", "alpha", v_4, false, ' ', "12"},
      {"W(G2)", "alpha_l", v_g2, false, ' ', "6"},
      {"W(G2)", "alpha_s", v_g2, false, ' ', "6"},
      {"5th", "alpha_l", v_5, false, ' ', "12"},
      {"5th", "alpha_s", v_5, false, ' ', "12"},
      {"W(F4)", "alpha_l", v_f4, false, ' ', "24"},
      {"W(F4)", "alpha_s", v_f4, false, ' ', "24"},
  };
  return rows;
}

}  // namespace thetarep
