#include "thetarep/root_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "thetarep/linalg.hpp"

namespace thetarep {

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
  }
  throw std::invalid_argument(std::string("unknown family letter: ") + c);
}

Rat inner(const VecQ& a, const VecQ& b) {
  Rat s = 0;
  for (int i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

Rat cartan_pairing(const VecQ& beta, const VecQ& alpha) {
  Rat aa = inner(alpha, alpha);
  if (aa == 0) throw std::invalid_argument("cartan_pairing: alpha = 0");
  return 2 * inner(beta, alpha) / aa;
}

VecQ weyl_reflect(const VecQ& alpha, const VecQ& v) {
  return v - cartan_pairing(v, alpha) * alpha;
}

namespace {

VecQ make_vec(int dim, std::initializer_list<std::pair<int, Rat>> entries) {
  VecQ v = VecQ::Zero(dim);
  for (auto& [i, x] : entries) v(i) = x;
  return v;
}

void validate(Family f, int n) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 3; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw std::invalid_argument(
        std::string("invalid simple type ") + family_letter(f) +
        std::to_string(n) +
        " (need A:n>=1, B:n>=2, C:n>=3, D:n>=4, E:6-8, F:4, G:2)");
}

std::vector<VecQ> e8_roots() {
  std::vector<VecQ> roots;
  // +-e_i +- e_j
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          roots.push_back(make_vec(8, {{i, Rat(si)}, {j, Rat(sj)}}));
  // (1/2)(sum +-e_i), even number of minus signs
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    VecQ v(8);
    for (int i = 0; i < 8; ++i)
      v(i) = (mask >> i) & 1 ? Rat(-1, 2) : Rat(1, 2);
    roots.push_back(v);
  }
  return roots;
}

std::vector<VecQ> e8_simple_roots() {
  // Bourbaki
  std::vector<VecQ> s;
  VecQ a1(8);
  a1 << Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2),
      Rat(-1, 2), Rat(1, 2);
  s.push_back(a1);
  s.push_back(make_vec(8, {{0, 1}, {1, 1}}));
  s.push_back(make_vec(8, {{0, -1}, {1, 1}}));
  for (int i = 1; i <= 5; ++i)
    s.push_back(make_vec(8, {{i, -1}, {i + 1, 1}}));
  return s;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  validate(family, rank);
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  std::vector<VecQ>& roots = rs.roots;
  std::vector<VecQ>& simple = rs.simple_roots;

  switch (family) {
    case Family::A: {
      int d = rank + 1;
      rs.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) roots.push_back(make_vec(d, {{i, 1}, {j, -1}}));
      for (int i = 0; i < rank; ++i)
        simple.push_back(make_vec(d, {{i, 1}, {i + 1, -1}}));
      break;
    }
    case Family::B: {
      int d = rank;
      rs.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              roots.push_back(make_vec(d, {{i, Rat(si)}, {j, Rat(sj)}}));
      for (int i = 0; i < d; ++i)
        for (int s : {1, -1}) roots.push_back(make_vec(d, {{i, Rat(s)}}));
      for (int i = 0; i < rank - 1; ++i)
        simple.push_back(make_vec(d, {{i, 1}, {i + 1, -1}}));
      simple.push_back(make_vec(d, {{rank - 1, 1}}));
      break;
    }
    case Family::C: {
      int d = rank;
      rs.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              roots.push_back(make_vec(d, {{i, Rat(si)}, {j, Rat(sj)}}));
      for (int i = 0; i < d; ++i)
        for (int s : {1, -1}) roots.push_back(make_vec(d, {{i, Rat(2 * s)}}));
      for (int i = 0; i < rank - 1; ++i)
        simple.push_back(make_vec(d, {{i, 1}, {i + 1, -1}}));
      simple.push_back(make_vec(d, {{rank - 1, 2}}));
      break;
    }
    case Family::D: {
      int d = rank;
      rs.ambient_dim = d;
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              roots.push_back(make_vec(d, {{i, Rat(si)}, {j, Rat(sj)}}));
      for (int i = 0; i < rank - 1; ++i)
        simple.push_back(make_vec(d, {{i, 1}, {i + 1, -1}}));
      simple.push_back(make_vec(d, {{rank - 2, 1}, {rank - 1, 1}}));
      break;
    }
    case Family::E: {
      rs.ambient_dim = 8;
      std::vector<VecQ> all = e8_roots();
      std::vector<VecQ> s8 = e8_simple_roots();
      simple.assign(s8.begin(), s8.begin() + rank);
      if (rank == 8) {
        roots = all;
      } else {
        // roots of E8 lying in the span of the first `rank` simple roots
        MatQ basis(8, rank);
        for (int i = 0; i < rank; ++i) basis.col(i) = simple[i];
        for (const VecQ& r : all)
          if (in_column_span<Rat>(basis, r)) roots.push_back(r);
      }
      break;
    }
    case Family::F: {
      rs.ambient_dim = 4;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              roots.push_back(make_vec(4, {{i, Rat(si)}, {j, Rat(sj)}}));
      for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) roots.push_back(make_vec(4, {{i, Rat(s)}}));
      for (int mask = 0; mask < 16; ++mask) {
        VecQ v(4);
        for (int i = 0; i < 4; ++i)
          v(i) = (mask >> i) & 1 ? Rat(-1, 2) : Rat(1, 2);
        roots.push_back(v);
      }
      simple.push_back(make_vec(4, {{1, 1}, {2, -1}}));
      simple.push_back(make_vec(4, {{2, 1}, {3, -1}}));
      simple.push_back(make_vec(4, {{3, 1}}));
      VecQ a4(4);
      a4 << Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2);
      simple.push_back(a4);
      break;
    }
    case Family::G: {
      rs.ambient_dim = 3;
      int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (auto& p : perms) {
        roots.push_back(make_vec(3, {{p[0], 1}, {p[1], -1}}));
        if (p[1] < p[2])
          for (int s : {1, -1})
            roots.push_back(make_vec(
                3, {{p[0], Rat(2 * s)}, {p[1], Rat(-s)}, {p[2], Rat(-s)}}));
      }
      simple.push_back(make_vec(3, {{0, 1}, {1, -1}}));
      simple.push_back(make_vec(3, {{0, -2}, {1, 1}, {2, 1}}));
      break;
    }
  }

  std::sort(roots.begin(), roots.end(), VecLess());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](const VecQ& a, const VecQ& b) {
                            return !(VecLess()(a, b)) && !(VecLess()(b, a));
                          }),
              roots.end());

  // length classes: at most two squared lengths, larger = long
  Rat maxlen = 0;
  std::set<Rat> lengths;
  for (const VecQ& r : roots) {
    Rat l = inner(r, r);
    lengths.insert(l);
    if (l > maxlen) maxlen = l;
  }
  if (lengths.size() > 2)
    throw std::logic_error("more than two root lengths in " + rs.type_name());
  rs.is_long.reserve(roots.size());
  for (const VecQ& r : roots) rs.is_long.push_back(inner(r, r) == maxlen);

  rs.cartan_matrix.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.cartan_matrix(i, j) =
          static_cast<int>(to_integer(cartan_pairing(simple[i], simple[j]))
                               .get_si());
  return rs;
}

int RootSystem::root_index(const VecQ& v) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), v, VecLess());
  if (it == roots.end()) return -1;
  if (VecLess()(v, *it)) return -1;
  return static_cast<int>(it - roots.begin());
}

std::string RootSystem::type_name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

std::pair<int, int> root_counts_by_length(const RootSystem& rs) {
  int nl = 0, ns = 0;
  for (bool b : rs.is_long) (b ? nl : ns)++;
  return {nl, ns};
}

long root_count_formula(Family f, int n) {
  switch (f) {
    case Family::A: return static_cast<long>(n) * (n + 1);
    case Family::B:
    case Family::C: return 2L * n * n;
    case Family::D: return 2L * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

long long weyl_group_order(Family f, int n) {
  auto fact = [](int k) {
    long long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  switch (f) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return fact(n) << n;
    case Family::D: return n >= 1 ? (fact(n) << (n - 1)) : 1;
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::set<VecQ, VecLess> weyl_orbit(const RootSystem& rs, const VecQ& v) {
  std::set<VecQ, VecLess> orbit;
  std::vector<VecQ> queue{v};
  orbit.insert(v);
  while (!queue.empty()) {
    VecQ x = queue.back();
    queue.pop_back();
    for (const VecQ& s : rs.simple_roots) {
      VecQ y = weyl_reflect(s, x);
      if (orbit.insert(y).second) queue.push_back(y);
    }
  }
  return orbit;
}

Eigen::VectorXi simple_root_coordinates(const RootSystem& rs,
                                        const VecQ& alpha) {
  if (!rs.is_root(alpha))
    throw std::invalid_argument("simple_root_coordinates: not a root");
  MatQ basis(rs.ambient_dim, rs.rank);
  for (int i = 0; i < rs.rank; ++i) basis.col(i) = rs.simple_roots[i];
  auto x = solve_exact<Rat>(basis, alpha);
  if (!x) throw std::logic_error("root outside simple-root span");
  Eigen::VectorXi out(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    out(i) = static_cast<int>(to_integer((*x)(i)).get_si());
  return out;
}

Eigen::MatrixXi all_simple_coordinates(const RootSystem& rs) {
  int nr = static_cast<int>(rs.roots.size());
  MatQ aug(rs.ambient_dim, rs.rank + nr);
  for (int i = 0; i < rs.rank; ++i) aug.col(i) = rs.simple_roots[i];
  for (int j = 0; j < nr; ++j) aug.col(rs.rank + j) = rs.roots[j];
  std::vector<int> pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) != rs.rank)
    throw std::logic_error("simple roots not independent");
  for (int i = 0; i < rs.rank; ++i)
    if (pivots[i] != i) throw std::logic_error("root outside simple span");
  Eigen::MatrixXi out(rs.rank, nr);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < nr; ++j)
      out(i, j) = static_cast<int>(to_integer(aug(i, rs.rank + j)).get_si());
  return out;
}

const VecQ& highest_root(const RootSystem& rs) {
  // the long root of maximal height (the unique dominant long root)
  Eigen::MatrixXi coords = all_simple_coordinates(rs);
  const VecQ* best = nullptr;
  long best_height = -1;
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    if (!rs.is_long[i]) continue;
    long h = coords.col(static_cast<int>(i)).sum();
    if (h > best_height) {
      best_height = h;
      best = &rs.roots[i];
    }
  }
  return *best;
}

}  // namespace thetarep
