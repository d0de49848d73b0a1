#include "thetarep/matrix_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <set>
#include <sstream>
#include <stdexcept>

namespace thetarep {

namespace {

std::vector<std::string> split_tag(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

VecQ vec_of(const MatQ& x) {
  VecQ v(x.rows() * x.cols());
  int t = 0;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) v(t++) = x(i, j);
  return v;
}

VecC vec_of_c(const MatC& x) {
  VecC v(x.rows() * x.cols());
  int t = 0;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) v(t++) = x(i, j);
  return v;
}

void build_solver(GradedMatrixAlgebra& a) {
  int d = a.dim();
  int nn = a.N * a.N;
  a.basis_flat.resize(nn, d);
  for (int j = 0; j < d; ++j) a.basis_flat.col(j) = vec_of(a.basis[j]);
  MatQ aug(nn, d + nn);
  aug.leftCols(d) = a.basis_flat;
  aug.rightCols(nn) = MatQ::Identity(nn, nn);
  std::vector<int> pivots = row_reduce(aug);
  a.coord_extractor.resize(d, nn);
  int got = 0;
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= d) break;
    if (pivots[r] != static_cast<int>(r))
      throw std::logic_error("basis matrices not independent");
    a.coord_extractor.row(r) = aug.block(r, d, 1, nn);
    ++got;
  }
  if (got != d) throw std::logic_error("basis matrices not independent");
}

void verify_grading(const GradedMatrixAlgebra& a) {
  int d = a.dim();
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      MatQ br = a.bracket(a.basis[i], a.basis[j]);
      VecQ c = a.coordinates(br);  // throws when outside g
      int target = (a.grade[i] + a.grade[j]) % a.m;
      for (int t = 0; t < d; ++t)
        if (c(t) != 0 && a.grade[t] != target)
          throw std::logic_error("bracket grading closure violated in " +
                                 a.case_tag);
    }
}

// minimal polynomial of a rational matrix, constant term first
std::vector<Rat> min_poly(const MatQ& x) {
  int nn = static_cast<int>(x.rows() * x.cols());
  MatQ krylov(nn, x.rows() + 1);
  MatQ p = MatQ::Identity(x.rows(), x.cols());
  for (int d = 0;; ++d) {
    krylov.col(d) = vec_of(p);
    MatQ sub = krylov.leftCols(d + 1);
    if (rank_of<Rat>(sub) <= d) {
      // p (the d-th power) depends on lower powers
      auto coeffs = solve_exact<Rat>(MatQ(krylov.leftCols(d)),
                                     VecQ(krylov.col(d)));
      if (!coeffs) throw std::logic_error("min_poly: dependency vanished");
      std::vector<Rat> out(d + 1);
      for (int i = 0; i < d; ++i) out[i] = -(*coeffs)(i);
      out[d] = 1;
      return out;
    }
    if (d == x.rows()) throw std::logic_error("min_poly: no dependency");
    p = p * x;
  }
}

// all rational roots of a rational polynomial (via the primitive integer form)
std::vector<Rat> rational_roots(const std::vector<Rat>& p) {
  // clear denominators
  Int lcm = 1;
  for (const Rat& c : p) {
    Int den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Int> q;
  for (const Rat& c : p) q.push_back(Int(c * Rat(lcm)));
  while (!q.empty() && q.back() == 0) q.pop_back();
  if (q.empty()) throw std::logic_error("rational_roots of zero polynomial");
  // strip zero roots
  std::vector<Rat> roots;
  size_t low = 0;
  while (low < q.size() && q[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  std::vector<Int> qq(q.begin() + low, q.end());
  if (qq.size() <= 1) return roots;
  auto divisors = [](Int v) {
    std::vector<Int> out;
    if (v < 0) v = -v;
    for (Int d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        out.push_back(d);
        out.push_back(v / d);
      }
      if (d > 2000000) throw std::runtime_error("rational_roots: trial bound");
    }
    return out;
  };
  auto eval = [&](const Rat& x) {
    Rat s = 0, pw = 1;
    for (const Int& c : qq) {
      s += Rat(c) * pw;
      pw *= x;
    }
    return s;
  };
  for (const Int& num : divisors(qq.front()))
    for (const Int& den : divisors(qq.back()))
      for (int sign : {1, -1}) {
        Rat cand(sign * num, den);
        cand.canonicalize();
        if (eval(cand) == 0) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// eigenvalues of a rational matrix inside Q(zeta_cond), certified complete;
// candidates are r zeta^j with r a rational root of prod_j q(s zeta^j).
std::vector<Cyclotomic> matrix_eigenvalues(const MatQ& x, int cond) {
  std::vector<Rat> q = min_poly(x);
  // N(s) = prod_{j} q(s zeta^j) has rational coefficients
  std::vector<Cyclotomic> acc{Cyclotomic(1)};
  for (int j = 0; j < cond; ++j) {
    // q(s zeta^j): coefficient of s^i is q_i zeta^{ij}
    std::vector<Cyclotomic> f(q.size());
    for (size_t i = 0; i < q.size(); ++i)
      f[i] = Cyclotomic(q[i]) *
             Cyclotomic::zeta(cond, static_cast<long>(i) * j % cond);
    std::vector<Cyclotomic> prod(acc.size() + f.size() - 1, Cyclotomic(0));
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t t = 0; t < f.size(); ++t) prod[i + t] += acc[i] * f[t];
    acc = std::move(prod);
  }
  std::vector<Rat> nn;
  for (const Cyclotomic& c : acc) {
    if (!c.is_rational())
      throw std::logic_error("norm polynomial not rational");
    nn.push_back(c.rational_part());
  }
  std::vector<Cyclotomic> cands;
  for (const Rat& r : rational_roots(nn))
    for (int j = 0; j < cond; ++j) {
      Cyclotomic z = Cyclotomic(r) * Cyclotomic::zeta(cond, j);
      bool dup = false;
      for (const Cyclotomic& w : cands) dup |= (w == z);
      if (!dup) cands.push_back(z);
    }
  // verify q(z) = 0 to filter, then completeness of eigenspaces
  std::vector<Cyclotomic> eigs;
  for (const Cyclotomic& z : cands) {
    Cyclotomic v(0), pw(1);
    for (const Rat& c : q) {
      v += Cyclotomic(c) * pw;
      pw *= z;
    }
    if (v.is_zero()) eigs.push_back(z);
  }
  MatC xc = lift_to_cyclotomic(x);
  int total = 0;
  for (const Cyclotomic& z : eigs) {
    MatC shifted = xc;
    for (int i = 0; i < xc.rows(); ++i) shifted(i, i) = shifted(i, i) - z;
    total += static_cast<int>(kernel_basis<Cyclotomic>(shifted).cols());
  }
  if (total != x.rows())
    throw std::runtime_error(
        "matrix eigenvalues do not split over Q(zeta_" +
        std::to_string(cond) + "); semisimplicity/field assumption failed");
  return eigs;
}

}  // namespace

VecQ GradedMatrixAlgebra::coordinates(const MatQ& x) const {
  VecQ v = vec_of(x);
  VecQ c = coord_extractor * v;
  VecQ back = basis_flat * c;
  for (int i = 0; i < v.size(); ++i)
    if (back(i) != v(i))
      throw std::runtime_error("matrix outside the algebra span");
  return c;
}

MatQ GradedMatrixAlgebra::from_coordinates(const VecQ& c) const {
  MatQ x = MatQ::Zero(N, N);
  for (int j = 0; j < dim(); ++j)
    if (c(j) != 0) x += c(j) * basis[j];
  return x;
}

MatQ GradedMatrixAlgebra::ad_matrix(const MatQ& x) const {
  MatQ out(dim(), dim());
  for (int j = 0; j < dim(); ++j)
    out.col(j) = coordinates(bracket(x, basis[j]));
  return out;
}

GradedMatrixAlgebra realize(const std::string& case_tag, int max_n) {
  std::vector<std::string> head = split_tag(case_tag, ':');
  GradedMatrixAlgebra a;
  a.case_tag = case_tag;
  if (head.size() == 3 && head[0] == "sl" && head[1] == "inner") {
    std::vector<int> d;
    for (const std::string& t : split_tag(head[2], ',')) d.push_back(std::stoi(t));
    int n = static_cast<int>(d.size());
    if (n < 2 || n > max_n)
      throw std::invalid_argument("sl:inner: size 2.." + std::to_string(max_n));
    a.N = n;
    a.m = *std::max_element(d.begin(), d.end()) + 1;
    a.rank = n - 1;
    a.nroots = 1L * n * (n - 1);
    for (int i = 0; i + 1 < n; ++i) {
      MatQ h = MatQ::Zero(n, n);
      h(i, i) = 1;
      h(i + 1, i + 1) = -1;
      a.basis.push_back(h);
      a.grade.push_back(0);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        MatQ e = MatQ::Zero(n, n);
        e(i, j) = 1;
        a.basis.push_back(e);
        a.grade.push_back((((d[i] - d[j]) % a.m) + a.m) % a.m);
      }
  } else if (head.size() == 3 && head[0] == "sl" && head[1] == "outer-sym") {
    int n = std::stoi(head[2]);
    if (n < 2 || n > max_n)
      throw std::invalid_argument("sl:outer-sym: N in 2.." + std::to_string(max_n));
    a.N = n;
    a.m = 2;
    a.rank = n - 1;
    a.nroots = 1L * n * (n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        MatQ x = MatQ::Zero(n, n);
        x(i, j) = 1;
        x(j, i) = -1;
        a.basis.push_back(x);
        a.grade.push_back(0);
      }
    for (int i = 0; i + 1 < n; ++i) {
      MatQ h = MatQ::Zero(n, n);
      h(i, i) = 1;
      h(i + 1, i + 1) = -1;
      a.basis.push_back(h);
      a.grade.push_back(1);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        MatQ x = MatQ::Zero(n, n);
        x(i, j) = 1;
        x(j, i) = 1;
        a.basis.push_back(x);
        a.grade.push_back(1);
      }
  } else if (head.size() == 3 && head[0] == "so" && head[1] == "block") {
    std::vector<std::string> ab = split_tag(head[2], ',');
    if (ab.size() != 2) throw std::invalid_argument("so:block:a,b");
    int pa = std::stoi(ab[0]), pb = std::stoi(ab[1]);
    int n = pa + pb;
    if (pa < 1 || pb < 1 || n > max_n)
      throw std::invalid_argument("so:block: a,b >= 1, a+b <= " +
                                  std::to_string(max_n));
    a.N = n;
    a.m = 2;
    a.rank = n / 2;
    a.nroots = n % 2 ? 2L * a.rank * a.rank : 2L * a.rank * (a.rank - 1);
    // Split form J: antidiagonal ones, except the middle entry is -1/2 for
    // odd n.  With that scaling the short-root sl_2 triples have eigenvalues
    // in Q(i) rather than Q(sqrt(2) i), keeping the slice tests inside a
    // cyclotomic field.  so(J) = { X : X^T J + J X = 0 }.
    MatQ jform = MatQ::Zero(n, n);
    for (int i = 0; i < n; ++i) jform(i, n - 1 - i) = 1;
    if (n % 2) jform((n - 1) / 2, (n - 1) / 2) = Rat(-1, 2);
    // basis of so(J) as the kernel of X -> X^T J + J X
    MatQ cond(n * n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        MatQ e = MatQ::Zero(n, n);
        e(i, j) = 1;
        cond.col(i * n + j) = vec_of(MatQ(e.transpose() * jform + jform * e));
      }
    MatQ k = kernel_basis<Rat>(cond);
    if (k.cols() != n * (n - 1) / 2)
      throw std::logic_error("so(J) has wrong dimension");
    std::vector<MatQ> raw;
    for (int c = 0; c < k.cols(); ++c) {
      MatQ x = MatQ::Zero(n, n);
      int idx = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = k(idx++, c);
      raw.push_back(x);
    }
    int t = std::min(pa, pb);
    auto flip = [&](int i) {  // the involution S (0-based indices)
      return (i < t || i >= n - t) ? n - 1 - i : i;
    };
    MatQ s = MatQ::Zero(n, n);
    for (int i = 0; i < n; ++i) s(i, flip(i)) = 1;
    if (!(MatQ(s.transpose() * jform * s) == jform))
      throw std::logic_error("involution not orthogonal for J");
    std::vector<MatQ> plus, minus;
    for (const MatQ& x : raw) {
      MatQ tx = s * x * s;
      plus.push_back(x + tx);
      minus.push_back(x - tx);
    }
    auto push_basis = [&](std::vector<MatQ>& cand, int grade) {
      MatQ flat(n * n, static_cast<int>(cand.size()));
      for (size_t c = 0; c < cand.size(); ++c) flat.col(c) = vec_of(cand[c]);
      MatQ basis = column_space_basis<Rat>(flat);
      for (int c = 0; c < basis.cols(); ++c) {
        MatQ x = MatQ::Zero(n, n);
        int idx = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) x(i, j) = basis(idx++, c);
        a.basis.push_back(x);
        a.grade.push_back(grade);
      }
    };
    push_basis(plus, 0);
    push_basis(minus, 1);
    if (a.dim() != n * (n - 1) / 2)
      throw std::logic_error("so grading split dimension mismatch");
  } else {
    throw std::invalid_argument("unknown case tag: " + case_tag +
                                " (use sl:inner:<d,..>, sl:outer-sym:<N>, "
                                "so:block:<a>,<b>)");
  }
  a.dims.assign(a.m, 0);
  for (int g : a.grade) a.dims[g] += 1;
  build_solver(a);
  verify_grading(a);
  return a;
}

namespace {

bool is_semisimple(const MatQ& x) {
  // squarefree minimal polynomial over Q (exact gcd with the derivative)
  std::vector<Rat> p = min_poly(x);
  std::vector<Rat> dp(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = Rat(static_cast<long>(i)) * p[i];
  // euclidean gcd
  std::vector<Rat> r0 = p, r1 = dp;
  auto trim = [](std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    // r0 mod r1
    std::vector<Rat> rem = r0;
    while (rem.size() >= r1.size()) {
      Rat f = rem.back() / r1.back();
      size_t shift = rem.size() - r1.size();
      for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
      trim(rem);
      if (rem.empty()) break;
    }
    r0 = r1;
    r1 = rem;
  }
  return r0.size() == 1;  // gcd is a nonzero constant
}

MatQ matrices_to_flat(const GradedMatrixAlgebra& a,
                      const std::vector<MatQ>& xs) {
  MatQ out(a.dim(), static_cast<int>(xs.size()));
  for (size_t j = 0; j < xs.size(); ++j) out.col(j) = a.coordinates(xs[j]);
  return out;
}

// basis (flat coords) of the grade-g coordinate subspace intersected with
// the column span of v
MatQ intersect_with_grade(const GradedMatrixAlgebra& a, const MatQ& v, int g) {
  std::vector<int> other;
  for (int i = 0; i < a.dim(); ++i)
    if (a.grade[i] != g) other.push_back(i);
  MatQ rows(static_cast<int>(other.size()), v.cols());
  for (size_t r = 0; r < other.size(); ++r) rows.row(r) = v.row(other[r]);
  MatQ k = kernel_basis<Rat>(rows);
  MatQ out(a.dim(), k.cols());
  for (int c = 0; c < k.cols(); ++c) out.col(c) = v * k.col(c);
  return out;
}

}  // namespace

CartanSubspace find_cartan_subspace(const GradedMatrixAlgebra& a) {
  std::vector<MatQ> c;
  auto commutes_with_all = [&](const MatQ& x) {
    for (const MatQ& y : c)
      if (!(a.bracket(x, y) == MatQ::Zero(a.N, a.N))) return false;
    return true;
  };
  auto try_add = [&](const MatQ& x) {
    if (x == MatQ::Zero(a.N, a.N)) return false;
    if (!commutes_with_all(x)) return false;
    if (!is_semisimple(x)) return false;
    if (!c.empty()) {
      MatQ flat = matrices_to_flat(a, c);
      if (in_column_span<Rat>(flat, a.coordinates(x))) return false;
    }
    c.push_back(x);
    return true;
  };
  // candidate 1: diagonal matrices inside g_1
  {
    std::vector<int> g1;
    for (int i = 0; i < a.dim(); ++i)
      if (a.grade[i] == 1) g1.push_back(i);
    // conditions: off-diagonal entries vanish
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < a.N; ++i)
      for (int j = 0; j < a.N; ++j)
        if (i != j) offdiag.push_back({i, j});
    MatQ cond(static_cast<int>(offdiag.size()), static_cast<int>(g1.size()));
    for (size_t r = 0; r < offdiag.size(); ++r)
      for (size_t cc = 0; cc < g1.size(); ++cc)
        cond(static_cast<int>(r), static_cast<int>(cc)) =
            a.basis[g1[cc]](offdiag[r].first, offdiag[r].second);
    MatQ k = kernel_basis<Rat>(cond);
    for (int col = 0; col < k.cols(); ++col) {
      MatQ x = MatQ::Zero(a.N, a.N);
      for (size_t cc = 0; cc < g1.size(); ++cc)
        if (k(static_cast<int>(cc), col) != 0)
          x += k(static_cast<int>(cc), col) * a.basis[g1[cc]];
      try_add(x);
    }
  }
  // candidate 2: sum of all grade-1 elementary basis matrices (cyclic cases)
  {
    MatQ x = MatQ::Zero(a.N, a.N);
    for (int i = 0; i < a.dim(); ++i)
      if (a.grade[i] == 1) x += a.basis[i];
    try_add(x);
  }
  // extension loop from the g_1 commutant, seeded rational samples
  unsigned long rng = 88172645463325252ull;
  auto next_small = [&]() {
    rng ^= rng << 13;
    rng ^= rng >> 7;
    rng ^= rng << 17;
    return static_cast<long>(rng % 7) - 3;
  };
  for (int round = 0; round < 16; ++round) {
    // Z = {x in g_1 : [x, c] = 0}
    std::vector<int> g1;
    for (int i = 0; i < a.dim(); ++i)
      if (a.grade[i] == 1) g1.push_back(i);
    MatQ cond(a.dim() * std::max<size_t>(c.size(), 1), static_cast<int>(g1.size()));
    cond.setConstant(Rat(0));
    for (size_t ci = 0; ci < c.size(); ++ci)
      for (size_t cc = 0; cc < g1.size(); ++cc)
        cond.block(static_cast<int>(ci) * a.dim(), static_cast<int>(cc),
                   a.dim(), 1) =
            a.coordinates(a.bracket(c[ci], a.basis[g1[cc]]));
    MatQ z = kernel_basis<Rat>(cond);
    if (z.cols() == static_cast<int>(c.size())) {
      // the commutant equals span(c): certified maximal (the semisimple part
      // of the commutant is c itself)
      if (!c.empty()) {
        MatQ zmats(a.dim(), z.cols());
        for (int col = 0; col < z.cols(); ++col) {
          VecQ flat = VecQ::Zero(a.dim());
          for (size_t cc = 0; cc < g1.size(); ++cc)
            flat(g1[cc]) = z(static_cast<int>(cc), col);
          zmats.col(col) = flat;
        }
        if (!same_column_span<Rat>(matrices_to_flat(a, c), zmats))
          throw std::runtime_error("cartan search: commutant mismatch");
      }
      break;
    }
    bool extended = false;
    for (int attempt = 0; attempt < 8 && !extended; ++attempt) {
      MatQ x = MatQ::Zero(a.N, a.N);
      for (int col = 0; col < z.cols(); ++col) {
        long w = attempt == 0 ? (col == z.cols() - 1 ? 1 : 0) : next_small();
        if (w == 0) continue;
        for (size_t cc = 0; cc < g1.size(); ++cc)
          if (z(static_cast<int>(cc), col) != 0)
            x += Rat(w) * z(static_cast<int>(cc), col) * a.basis[g1[cc]];
      }
      extended = try_add(x);
    }
    if (!extended)
      throw std::runtime_error(
          "cartan subspace search failed within iteration budget for " +
          a.case_tag);
  }
  if (c.empty())
    throw std::runtime_error("no nonzero semisimple elements found in g_1 of " +
                             a.case_tag);

  CartanSubspace out;
  out.c_basis = c;
  // t = centralizer of c in g
  MatQ stacked(a.dim() * static_cast<int>(c.size()), a.dim());
  for (size_t ci = 0; ci < c.size(); ++ci)
    stacked.block(static_cast<int>(ci) * a.dim(), 0, a.dim(), a.dim()) =
        a.ad_matrix(c[ci]);
  MatQ t = kernel_basis<Rat>(stacked);
  // grade-split t
  for (int g = 0; g < a.m; ++g) {
    MatQ part = intersect_with_grade(a, t, g);
    for (int col = 0; col < part.cols(); ++col) {
      out.t_basis.push_back(a.from_coordinates(part.col(col)));
      out.t_grades.push_back(g);
    }
  }
  if (static_cast<int>(out.t_basis.size()) != t.cols())
    throw std::logic_error("centralizer of c is not grade-split");
  for (size_t i = 0; i < out.t_basis.size(); ++i)
    for (size_t j = i + 1; j < out.t_basis.size(); ++j)
      if (!(a.bracket(out.t_basis[i], out.t_basis[j]) ==
            MatQ::Zero(a.N, a.N)))
        throw std::runtime_error(
            "centralizer of the Cartan subspace is not abelian (theta-corank "
            "> 0) for " + a.case_tag);
  return out;
}

namespace {

struct EigenPiece {
  MatC space;  // columns: flat coordinates
  std::vector<Cyclotomic> values;
};

std::vector<EigenPiece> split_under_ops(
    const std::vector<MatQ>& ad_ops,
    const std::vector<std::vector<Cyclotomic>>& candidates, const MatC& start,
    int cond) {
  std::vector<EigenPiece> pieces{{start, {}}};
  for (size_t op = 0; op < ad_ops.size(); ++op) {
    MatC adc = lift_to_cyclotomic(ad_ops[op]);
    std::vector<EigenPiece> next;
    for (EigenPiece& piece : pieces) {
      // restriction R with ad * V = V * R
      MatC av = adc * piece.space;
      auto r = coordinates_in_span<Cyclotomic>(piece.space, av);
      if (!r)
        throw std::runtime_error("subspace not ad-invariant (internal)");
      int dim_v = static_cast<int>(piece.space.cols());
      int found = 0;
      for (const Cyclotomic& z : candidates[op]) {
        MatC shifted = *r;
        for (int i = 0; i < dim_v; ++i) shifted(i, i) = shifted(i, i) - z;
        MatC k = kernel_basis<Cyclotomic>(shifted);
        if (k.cols() == 0) continue;
        EigenPiece p2;
        p2.space = piece.space * k;
        p2.values = piece.values;
        p2.values.push_back(z);
        found += static_cast<int>(k.cols());
        next.push_back(std::move(p2));
      }
      if (found != dim_v)
        throw std::runtime_error(
            "ad action does not split over the cyclotomic field "
            "(non-semisimple action or theta-corank > 0)");
    }
    pieces = std::move(next);
  }
  return pieces;
}

MatQ killing_gram(const GradedMatrixAlgebra& a,
                  const std::vector<MatQ>& t_basis) {
  int r = static_cast<int>(t_basis.size());
  std::vector<MatQ> ads;
  for (const MatQ& t : t_basis) ads.push_back(a.ad_matrix(t));
  MatQ k(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Rat tr = 0;
      MatQ prod = ads[i] * ads[j];
      for (int t = 0; t < prod.rows(); ++t) tr += prod(t, t);
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return k;
}

}  // namespace

RestrictedRootDatum restricted_roots(const GradedMatrixAlgebra& a,
                                     const CartanSubspace& cs) {
  RestrictedRootDatum out;
  out.cartan = cs;
  const int rank = static_cast<int>(cs.t_basis.size());
  int corank = a.rank - cs.theta_rank() * euler_phi(a.m);
  if (corank != 0)
    throw std::runtime_error("theta-corank is " + std::to_string(corank) +
                             ", not 0: rejected");
  if (rank != a.rank)
    throw std::runtime_error(
        "centralizer dimension " + std::to_string(rank) + " != rank " +
        std::to_string(a.rank) + ": theta-corank > 0, rejected");
  for (int g : cs.t_grades)
    if (std::gcd(g, a.m) != 1)
      throw std::runtime_error(
          "t has a component in grade " + std::to_string(g) +
          " with gcd(grade, m) != 1: theta-corank > 0, rejected");
  const int cond = a.m == 1 ? 1 : a.m;
  std::vector<MatQ> ad_ops;
  std::vector<std::vector<Cyclotomic>> cands;
  for (const MatQ& tau : cs.t_basis) {
    ad_ops.push_back(a.ad_matrix(tau));
    std::vector<Cyclotomic> eig = matrix_eigenvalues(tau, cond);
    std::vector<Cyclotomic> diffs;
    for (const Cyclotomic& x : eig)
      for (const Cyclotomic& y : eig) {
        Cyclotomic d = x - y;
        bool dup = false;
        for (const Cyclotomic& w : diffs) dup |= (w == d);
        if (!dup) diffs.push_back(d);
      }
    cands.push_back(std::move(diffs));
  }
  MatC id = lift_to_cyclotomic(MatQ(MatQ::Identity(a.dim(), a.dim())));
  std::vector<EigenPiece> pieces = split_under_ops(ad_ops, cands, id, cond);

  out.killing = killing_gram(a, cs.t_basis);

  // invert the Killing Gram matrix exactly
  MatQ kinv;
  {
    MatQ aug(rank, 2 * rank);
    aug.leftCols(rank) = out.killing;
    aug.rightCols(rank) = MatQ::Identity(rank, rank);
    std::vector<int> piv = row_reduce(aug);
    if (static_cast<int>(piv.size()) != rank)
      throw std::runtime_error("Killing form degenerate on t");
    kinv = aug.rightCols(rank);
  }
  MatC kinv_c = lift_to_cyclotomic(kinv);

  MatC t_flat(a.dim(), rank);
  for (int j = 0; j < rank; ++j)
    t_flat.col(j) = lift_to_cyclotomic(MatQ(a.coordinates(cs.t_basis[j]))).col(0);

  for (EigenPiece& p : pieces) {
    bool zero = true;
    for (const Cyclotomic& v : p.values) zero &= v.is_zero();
    if (zero) {
      if (p.space.cols() != rank ||
          !same_column_span<Cyclotomic>(p.space, t_flat))
        throw std::runtime_error(
            "zero-weight space differs from t: corank > 0 or model error");
      continue;
    }
    if (p.space.cols() != 1)
      throw std::runtime_error("joint eigenspace not one-dimensional");
    RestrictedRoot rr;
    rr.on_t.resize(rank);
    for (int i = 0; i < rank; ++i) rr.on_t(i) = p.values[i];
    rr.vec = p.space.col(0);
    // norm via the dual Killing form
    VecC k = kinv_c * rr.on_t;
    Cyclotomic nrm(0);
    for (int i = 0; i < rank; ++i) nrm += rr.on_t(i) * k(i);
    rr.norm = nrm;
    // restriction to the grade-1 block
    int r1 = 0;
    for (int g : cs.t_grades) r1 += (g == 1);
    rr.on_c.resize(r1);
    int t = 0;
    for (int i = 0; i < rank; ++i)
      if (cs.t_grades[i] == 1) rr.on_c(t++) = rr.on_t(i);
    out.roots.push_back(std::move(rr));
  }
  if (static_cast<long>(out.roots.size()) != a.nroots)
    throw std::runtime_error("found " + std::to_string(out.roots.size()) +
                             " restricted roots, expected " +
                             std::to_string(a.nroots));

  // group into lines: projective proportionality of alpha_1
  auto proportional = [](const VecC& x, const VecC& y) {
    for (int i = 0; i < x.size(); ++i)
      for (int j = i + 1; j < x.size(); ++j)
        if (!((x(i) * y(j) - x(j) * y(i)).is_zero())) return false;
    return true;
  };
  for (size_t i = 0; i < out.roots.size(); ++i) {
    bool nonzero = false;
    for (int t = 0; t < out.roots[i].on_c.size(); ++t)
      nonzero |= !out.roots[i].on_c(t).is_zero();
    if (!nonzero)
      throw std::runtime_error("restricted root vanishes on the Cartan "
                               "subspace (contradicts corank 0)");
    for (size_t j = 0; j < i && out.roots[i].line < 0; ++j)
      if (proportional(out.roots[i].on_c, out.roots[j].on_c))
        out.roots[i].line = out.roots[j].line;
    if (out.roots[i].line < 0) {
      out.roots[i].line = static_cast<int>(out.lines.size());
      out.lines.push_back(RootLine{});
    }
    out.lines[out.roots[i].line].root_ids.push_back(static_cast<int>(i));
  }

  // length classes by Killing norm
  std::vector<Cyclotomic> norms;
  for (const RootLine& line : out.lines) {
    Cyclotomic n0 = out.roots[line.root_ids[0]].norm;
    for (int id : line.root_ids)
      if (!(out.roots[id].norm == n0))
        throw std::runtime_error("mixed root lengths within one line");
    bool dup = false;
    for (const Cyclotomic& w : norms) dup |= (w == n0);
    if (!dup) norms.push_back(n0);
  }
  if (norms.size() > 2)
    throw std::runtime_error("more than two restricted root lengths");
  if (norms.size() == 1) {
    for (RootLine& line : out.lines) line.length_class = "alpha";
  } else {
    for (const Cyclotomic& w : norms)
      if (!w.is_rational())
        throw std::runtime_error("cannot order irrational root norms");
    Rat big = std::max(norms[0].rational_part(), norms[1].rational_part());
    for (RootLine& line : out.lines)
      line.length_class =
          out.roots[line.root_ids[0]].norm.rational_part() == big ? "alpha_l"
                                                                  : "alpha_s";
  }

  // theta-orbit bookkeeping: theta scales the grade-i component by zeta^i;
  // detect which theta power pairs to -1 with alpha (the canonical
  // labeling of the orbit generators)
  for (RootLine& line : out.lines) {
    const RestrictedRoot& alpha = out.roots[line.root_ids[0]];
    if (a.m == 2) {
      line.minus_one_pairing_power = 1;
      continue;
    }
    VecC kdual = kinv_c * alpha.on_t;
    line.minus_one_pairing_power = 0;
    for (int pw = 1; pw < a.m; ++pw) {
      // theta^pw(alpha) values: zeta^{pw * grade_i} alpha_i
      Cyclotomic ip(0);
      for (int i = 0; i < rank; ++i)
        ip += Cyclotomic::zeta(cond, static_cast<long>(pw) * cs.t_grades[i]) *
              alpha.on_t(i) * kdual(i);
      Cyclotomic pairing = Cyclotomic(2) * ip / alpha.norm;
      if (pairing == Cyclotomic(-1)) {
        line.minus_one_pairing_power = pw;
        break;
      }
    }
    if (line.minus_one_pairing_power == 0)
      throw std::runtime_error("no theta power pairs to -1 on a line");
  }
  return out;
}

ThetaSubsystem theta_subsystem(const GradedMatrixAlgebra& a,
                               const RestrictedRootDatum& datum, int line) {
  if (line < 0 || line >= static_cast<int>(datum.lines.size()))
    throw std::invalid_argument("line index out of range");
  const int m = a.m;
  std::vector<VecC> span;
  auto add_if_independent = [&](const VecC& v) {
    MatC mat(a.dim(), static_cast<int>(span.size()) + 1);
    for (size_t j = 0; j < span.size(); ++j) mat.col(static_cast<int>(j)) = span[j];
    mat.col(static_cast<int>(span.size())) = v;
    if (rank_of<Cyclotomic>(mat) == static_cast<int>(span.size()) + 1) {
      span.push_back(v);
      return true;
    }
    return false;
  };
  for (int id : datum.lines[line].root_ids) add_if_independent(datum.roots[id].vec);
  MatC lifted_extractor = lift_to_cyclotomic(a.coord_extractor);
  auto bracket_vec = [&](const VecC& x, const VecC& y) {
    MatC xm = MatC::Constant(a.N, a.N, Cyclotomic(0));
    MatC ym = xm;
    for (int j = 0; j < a.dim(); ++j) {
      if (!x(j).is_zero())
        xm += lift_to_cyclotomic(a.basis[j]) * x(j);
      if (!y(j).is_zero())
        ym += lift_to_cyclotomic(a.basis[j]) * y(j);
    }
    MatC br = xm * ym - ym * xm;
    return VecC(lifted_extractor * vec_of_c(br));
  };
  bool grew = true;
  while (grew) {
    grew = false;
    size_t sz = span.size();
    for (size_t i = 0; i < sz && !grew; ++i)
      for (size_t j = i + 1; j < sz && !grew; ++j)
        grew = add_if_independent(bracket_vec(span[i], span[j]));
  }
  ThetaSubsystem out;
  out.line = line;
  out.basis.resize(a.dim(), static_cast<int>(span.size()));
  for (size_t j = 0; j < span.size(); ++j) out.basis.col(static_cast<int>(j)) = span[j];
  if (out.dim() != m * m - 1)
    throw std::runtime_error("theta-subsystem has dimension " +
                             std::to_string(out.dim()) + ", expected " +
                             std::to_string(m * m - 1));
  return out;
}

namespace {

std::vector<int> grade_indices(const CartanSubspace& cs, int g) {
  std::vector<int> out;
  for (size_t i = 0; i < cs.t_grades.size(); ++i)
    if (cs.t_grades[i] == g) out.push_back(static_cast<int>(i));
  return out;
}

std::string canonical_key(const MatC& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) os << m(i, j).str() << ";";
  return os.str();
}

VecC normalized_covector(VecC v) {
  for (int i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) {
      Cyclotomic inv = v(i).inverse();
      for (int j = 0; j < v.size(); ++j) v(j) = v(j) * inv;
      return v;
    }
  return v;
}

}  // namespace

LittleWeylGroup little_weyl_group(const GradedMatrixAlgebra& a,
                                  const RestrictedRootDatum& datum,
                                  std::size_t element_cap) {
  const int rank = static_cast<int>(datum.cartan.t_basis.size());
  const int cond = a.m;
  MatC kinv_c;
  {
    MatQ aug(rank, 2 * rank);
    aug.leftCols(rank) = datum.killing;
    aug.rightCols(rank) = MatQ::Identity(rank, rank);
    row_reduce(aug);
    kinv_c = lift_to_cyclotomic(MatQ(aug.rightCols(rank)));
  }
  MatC kc = lift_to_cyclotomic(datum.killing);
  LittleWeylGroup out;
  MatC identity = MatC::Constant(rank, rank, Cyclotomic(0));
  for (int i = 0; i < rank; ++i) identity(i, i) = Cyclotomic(1);

  for (size_t ln = 0; ln < datum.lines.size(); ++ln) {
    const RestrictedRoot& alpha = datum.roots[datum.lines[ln].root_ids[0]];
    VecC kalpha = kinv_c * alpha.on_t;  // coords of the dual vector
    // coroot t_alpha = 2 k_alpha / (alpha, alpha), graded components h_i
    VecC talpha = kalpha;
    Cyclotomic inv_norm = (Cyclotomic(2) / alpha.norm);
    for (int i = 0; i < rank; ++i) talpha(i) = talpha(i) * inv_norm;
    std::vector<std::pair<int, VecC>> hs;  // (grade, component)
    for (int g = 1; g < a.m; ++g) {
      VecC h = VecC::Constant(rank, Cyclotomic(0));
      bool nonzero = false;
      for (int i = 0; i < rank; ++i)
        if (datum.cartan.t_grades[i] == g) {
          h(i) = talpha(i);
          nonzero |= !talpha(i).is_zero();
        }
      if (nonzero) hs.push_back({g, h});
    }
    if (hs.empty()) throw std::runtime_error("coroot has no graded parts");
    int hn = static_cast<int>(hs.size());
    MatC h(rank, hn);
    for (int j = 0; j < hn; ++j) h.col(j) = hs[j].second;
    // M = (H^T K H)^{-1} H^T K
    MatC htk = h.transpose() * kc;
    MatC gram = htk * h;
    MatC gram_aug(hn, 2 * hn);
    gram_aug.leftCols(hn) = gram;
    gram_aug.rightCols(hn) = MatC::Constant(hn, hn, Cyclotomic(0));
    for (int i = 0; i < hn; ++i) gram_aug(i, hn + i) = Cyclotomic(1);
    std::vector<int> piv = row_reduce(gram_aug);
    if (static_cast<int>(piv.size()) != hn)
      throw std::runtime_error("coroot Gram matrix degenerate");
    MatC coords = MatC(gram_aug.rightCols(hn)) * htk;
    MatC diag = MatC::Constant(hn, hn, Cyclotomic(0));
    for (int j = 0; j < hn; ++j)
      diag(j, j) = Cyclotomic::zeta(cond, hs[j].first) - Cyclotomic(1);
    MatC w = identity + h * diag * coords;
    // sanity: order m
    MatC p = w;
    for (int e = 1; e < a.m; ++e) p = p * w;
    if (!(canonical_key(p) == canonical_key(identity)))
      throw std::runtime_error("reflection does not have order m");
    out.generators.push_back(w);
  }

  // closure
  std::map<std::string, int> seen;
  std::vector<MatC> queue;
  out.elements.push_back(identity);
  seen[canonical_key(identity)] = 0;
  queue.push_back(identity);
  while (!queue.empty()) {
    MatC x = queue.back();
    queue.pop_back();
    for (const MatC& g : out.generators) {
      MatC y = x * g;
      std::string key = canonical_key(y);
      if (seen.count(key)) continue;
      if (out.elements.size() >= element_cap)
        throw std::runtime_error("little Weyl group generation exceeded cap");
      seen[key] = static_cast<int>(out.elements.size());
      out.elements.push_back(y);
      queue.push_back(y);
    }
  }

  // reflection census on the grade-1 block
  std::vector<int> ix1 = grade_indices(datum.cartan, 1);
  int r1 = static_cast<int>(ix1.size());
  std::set<std::string> hyperplane_keys;
  for (size_t ei = 0; ei < out.elements.size(); ++ei) {
    MatC b(r1, r1);
    for (int i = 0; i < r1; ++i)
      for (int j = 0; j < r1; ++j) b(i, j) = out.elements[ei](ix1[i], ix1[j]);
    MatC bmi = b;
    for (int i = 0; i < r1; ++i) bmi(i, i) = bmi(i, i) - Cyclotomic(1);
    if (rank_of<Cyclotomic>(bmi) != 1) continue;
    // order of the element
    int order = 1;
    MatC p = b;
    MatC id1 = MatC::Constant(r1, r1, Cyclotomic(0));
    for (int i = 0; i < r1; ++i) id1(i, i) = Cyclotomic(1);
    while (!(canonical_key(p) == canonical_key(id1))) {
      p = p * b;
      ++order;
      if (order > 1000) throw std::runtime_error("reflection order overflow");
    }
    // hyperplane key: first nonzero row of (b - 1), normalized
    VecC row;
    for (int i = 0; i < r1 && row.size() == 0; ++i) {
      bool nz = false;
      for (int j = 0; j < r1; ++j) nz |= !bmi(i, j).is_zero();
      if (nz) row = VecC(bmi.row(i).transpose());
    }
    row = normalized_covector(row);
    std::ostringstream hk;
    for (int i = 0; i < row.size(); ++i) hk << row(i).str() << ";";
    hyperplane_keys.insert(hk.str());
    // class: which line's alpha_1 has the same kernel (proportional covector)
    std::string cls = "?";
    for (const RootLine& line : datum.lines) {
      VecC a1 = normalized_covector(datum.roots[line.root_ids[0]].on_c);
      bool same = a1.size() == row.size();
      for (int i = 0; same && i < row.size(); ++i) same = (a1(i) == row(i));
      if (same) {
        cls = line.length_class;
        break;
      }
    }
    out.reflections.push_back(
        {static_cast<int>(ei), LittleWeylGroup::ReflectionInfo{order, cls}});
  }
  out.hyperplanes = static_cast<long>(hyperplane_keys.size());
  return out;
}

std::map<std::pair<int, std::string>, long> LittleWeylGroup::census() const {
  std::map<std::pair<int, std::string>, long> out;
  for (const auto& [idx, info] : reflections) out[{info.order, info.cls}]++;
  return out;
}

SliceDiscriminant restricted_discriminant(const GradedMatrixAlgebra& a,
                                          const RestrictedRootDatum& datum,
                                          const LittleWeylGroup& w,
                                          const std::string& cls) {
  int line = -1;
  for (size_t i = 0; i < datum.lines.size(); ++i)
    if (datum.lines[i].length_class == cls) {
      line = static_cast<int>(i);
      break;
    }
  if (line < 0)
    throw std::invalid_argument("no restricted-root class " + cls);
  const RestrictedRoot& alpha = datum.roots[datum.lines[line].root_ids[0]];
  int gm1 = (a.m - 1) % a.m;
  std::vector<int> ixm = grade_indices(datum.cartan, gm1);
  VecC am1(static_cast<int>(ixm.size()));
  for (size_t i = 0; i < ixm.size(); ++i) am1(static_cast<int>(i)) = alpha.on_t(ixm[i]);
  SliceDiscriminant out;
  out.cls = cls;
  std::set<std::string> seen;
  for (const MatC& g : w.elements) {
    MatC block(static_cast<int>(ixm.size()), static_cast<int>(ixm.size()));
    for (size_t i = 0; i < ixm.size(); ++i)
      for (size_t j = 0; j < ixm.size(); ++j)
        block(static_cast<int>(i), static_cast<int>(j)) = g(ixm[i], ixm[j]);
    VecC form = VecC(block.transpose() * am1);  // alpha composed with g
    std::ostringstream key;
    for (int i = 0; i < form.size(); ++i) key << form(i).str() << ";";
    if (seen.insert(key.str()).second) out.forms.push_back(form);
  }
  return out;
}

bool discriminant_is_invariant(const GradedMatrixAlgebra& a,
                               const SliceDiscriminant& d,
                               const RestrictedRootDatum& datum,
                               const LittleWeylGroup& w) {
  auto norm_key = [](const VecC& v) {
    VecC n = normalized_covector(v);
    std::ostringstream os;
    for (int i = 0; i < n.size(); ++i) os << n(i).str() << ";";
    return os.str();
  };
  std::multiset<std::string> base;
  for (const VecC& f : d.forms) base.insert(norm_key(f));
  std::vector<int> ix = grade_indices(datum.cartan, (a.m - 1) % a.m);
  for (const MatC& g : w.generators) {
    MatC block(static_cast<int>(ix.size()), static_cast<int>(ix.size()));
    for (size_t i = 0; i < ix.size(); ++i)
      for (size_t j = 0; j < ix.size(); ++j)
        block(static_cast<int>(i), static_cast<int>(j)) = g(ix[i], ix[j]);
    std::multiset<std::string> moved;
    for (const VecC& f : d.forms)
      moved.insert(norm_key(VecC(block.transpose() * f)));
    if (moved != base) return false;
  }
  return true;
}

namespace {

// split s cap g_1 (or g_{-1}) into root spaces for the Cartan s_0 = s cap g_0
struct SmallRoots {
  std::vector<VecC> vectors;            // flat coordinates
  std::vector<std::vector<Cyclotomic>> values;  // per s_0 basis element
};

MatC intersect_with_grade_c(const GradedMatrixAlgebra& a, const MatC& v,
                            int g) {
  std::vector<int> other;
  for (int i = 0; i < a.dim(); ++i)
    if (a.grade[i] != g) other.push_back(i);
  MatC rows(static_cast<int>(other.size()), v.cols());
  for (size_t r = 0; r < other.size(); ++r) rows.row(static_cast<int>(r)) = v.row(other[r]);
  MatC k = kernel_basis<Cyclotomic>(rows);
  MatC out(a.dim(), k.cols());
  for (int c = 0; c < k.cols(); ++c) out.col(c) = v * k.col(c);
  return out;
}

bool demote_to_rational(const MatC& v, MatQ& out) {
  out.resize(v.rows(), v.cols());
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j) {
      if (!v(i, j).is_rational()) return false;
      out(i, j) = v(i, j).rational_part();
    }
  return true;
}

// basis of the Q-rational vectors inside the C-span of v's columns; the
// cyclotomic coordinates are unpacked into phi(k) rational coordinates
MatQ rational_subspace(const MatC& v) {
  MatQ direct;
  if (demote_to_rational(v, direct)) return column_space_basis<Rat>(direct);
  int cond = 1;
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j)
      cond = std::max(cond, v(i, j).conductor());
  int phi = euler_phi(cond);
  int rows = static_cast<int>(v.rows());
  int cols = static_cast<int>(v.cols());
  // unknowns: c in F^cols (cols*phi rationals), x in Q^rows;
  // equations: V c - x = 0 read off in the power basis (rows*phi equations)
  MatQ sys(rows * phi, cols * phi + rows);
  sys.setConstant(Rat(0));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Cyclotomic coef = v(r, c).promoted(cond);
      for (int t = 0; t < phi; ++t) {
        Cyclotomic prod = coef * Cyclotomic::zeta(cond, t);
        for (int e = 0; e < phi; ++e)
          sys(r * phi + e, c * phi + t) = prod.coeffs()[e];
      }
    }
    sys(r * phi + 0, cols * phi + r) = -1;
  }
  MatQ kern = kernel_basis<Rat>(sys);
  MatQ xs(rows, kern.cols());
  for (int c = 0; c < kern.cols(); ++c)
    xs.col(c) = kern.block(cols * phi, c, rows, 1);
  return column_space_basis<Rat>(xs);
}

SmallRoots split_grade_part(const GradedMatrixAlgebra& a,
                            const ThetaSubsystem& s, int grade_sel, int cond) {
  // s_0 basis, rationalized (the Cartan s cap g_0 is defined over Q in all
  // supported models even when the root vectors are not)
  MatC s0 = intersect_with_grade_c(a, s.basis, 0);
  MatQ s0q = rational_subspace(s0);
  if (s0q.cols() != s0.cols())
    throw std::runtime_error("s_0 has no rational basis; slice test scope");
  std::vector<MatQ> ops;
  std::vector<std::vector<Cyclotomic>> cands;
  for (int c = 0; c < s0q.cols(); ++c) {
    MatQ x = a.from_coordinates(s0q.col(c));
    ops.push_back(a.ad_matrix(x));
    std::vector<Cyclotomic> eig = matrix_eigenvalues(x, cond);
    std::vector<Cyclotomic> diffs;
    for (const Cyclotomic& u : eig)
      for (const Cyclotomic& v : eig) {
        Cyclotomic dd = u - v;
        bool dup = false;
        for (const Cyclotomic& w : diffs) dup |= (w == dd);
        if (!dup) diffs.push_back(dd);
      }
    cands.push_back(std::move(diffs));
  }
  MatC part = intersect_with_grade_c(a, s.basis, grade_sel);
  // promote to the working conductor
  MatC part_p(part.rows(), part.cols());
  for (int i = 0; i < part.rows(); ++i)
    for (int j = 0; j < part.cols(); ++j)
      part_p(i, j) = part(i, j).is_rational()
                         ? Cyclotomic(part(i, j).rational_part()).promoted(cond)
                         : part(i, j);
  std::vector<EigenPiece> pieces = split_under_ops(ops, cands, part_p, cond);
  SmallRoots out;
  for (EigenPiece& p : pieces) {
    for (int c = 0; c < p.space.cols(); ++c) {
      out.vectors.push_back(VecC(p.space.col(c)));
      out.values.push_back(p.values);
    }
  }
  return out;
}

}  // namespace

SliceTestReport centralizer_slice_test(const GradedMatrixAlgebra& a,
                                       const RestrictedRootDatum& datum,
                                       int line) {
  const int cond = a.m == 2 ? 4 : a.m;
  ThetaSubsystem s = theta_subsystem(a, datum, line);
  // check s_0 abelian of dimension m-1
  MatC s0 = intersect_with_grade_c(a, s.basis, 0);
  if (s0.cols() != a.m - 1)
    throw std::runtime_error("s cap g_0 has wrong dimension");
  SmallRoots plus = split_grade_part(a, s, 1 % a.m, cond);
  if (static_cast<int>(plus.vectors.size()) != a.m)
    throw std::runtime_error("s cap g_1 does not split into m root spaces");
  // e = first root vector of s cap g_1
  const VecC e_flat = plus.vectors[0];
  MatC e_mat = MatC::Constant(a.N, a.N, Cyclotomic(0));
  for (int j = 0; j < a.dim(); ++j)
    if (!e_flat(j).is_zero()) e_mat += lift_to_cyclotomic(a.basis[j]) * e_flat(j);

  // (a) { x in t_{-1} : [x, e] = 0 } = ker(alpha_{-1})
  int gm1 = (a.m - 1) % a.m;
  std::vector<int> ixm = grade_indices(datum.cartan, gm1);
  int rm = static_cast<int>(ixm.size());
  MatC brackets(a.N * a.N, rm);
  for (int i = 0; i < rm; ++i) {
    MatC tm = lift_to_cyclotomic(datum.cartan.t_basis[ixm[i]]);
    MatC br = tm * e_mat - e_mat * tm;
    brackets.col(i) = vec_of_c(br);
  }
  MatC kerne = kernel_basis<Cyclotomic>(brackets);
  const RestrictedRoot& alpha = datum.roots[datum.lines[line].root_ids[0]];
  MatC acov(1, rm);
  for (int i = 0; i < rm; ++i) acov(0, i) = alpha.on_t(ixm[i]).promoted(cond);
  MatC kera = kernel_basis<Cyclotomic>(acov);
  SliceTestReport rep;
  rep.kernel_equals_hyperplane =
      kerne.cols() == kera.cols() && same_column_span<Cyclotomic>(kera, kerne);

  // (b) dim z_{-1}(e) = dim g_{-1} - dim [g_0, e]
  std::vector<int> gmid, g0id;
  for (int i = 0; i < a.dim(); ++i) {
    if (a.grade[i] == gm1) gmid.push_back(i);
    if (a.grade[i] == 0) g0id.push_back(i);
  }
  MatC lifted_extractor = lift_to_cyclotomic(a.coord_extractor);
  MatC admap(a.dim(), static_cast<int>(gmid.size()));
  for (size_t c = 0; c < gmid.size(); ++c) {
    MatC bm = lift_to_cyclotomic(a.basis[gmid[c]]);
    MatC br = bm * e_mat - e_mat * bm;
    admap.col(static_cast<int>(c)) = lifted_extractor * vec_of_c(br);
  }
  int dim_z = static_cast<int>(kernel_basis<Cyclotomic>(admap).cols());
  MatC adg0(a.dim(), static_cast<int>(g0id.size()));
  for (size_t c = 0; c < g0id.size(); ++c) {
    MatC bm = lift_to_cyclotomic(a.basis[g0id[c]]);
    MatC br = bm * e_mat - e_mat * bm;
    adg0.col(static_cast<int>(c)) = lifted_extractor * vec_of_c(br);
  }
  int dim_g0e = rank_of<Cyclotomic>(adg0);
  rep.centralizer_dim_matches =
      dim_z == static_cast<int>(gmid.size()) - dim_g0e;
  return rep;
}

bool regular_slice_dimension_test(const GradedMatrixAlgebra& a,
                                  const RestrictedRootDatum& datum, int line,
                                  unsigned seed) {
  const int cond = a.m == 2 ? 4 : a.m;
  ThetaSubsystem s = theta_subsystem(a, datum, line);
  SmallRoots plus = split_grade_part(a, s, 1 % a.m, cond);
  SmallRoots minus = split_grade_part(a, s, (a.m - 1) % a.m, cond);
  if (static_cast<int>(plus.vectors.size()) != a.m ||
      static_cast<int>(minus.vectors.size()) != a.m)
    throw std::runtime_error("theta-subsystem graded parts do not split");
  const VecC& e_flat = plus.vectors[0];
  // f = sum of the root vectors of s cap g_{-1} whose functional is not the
  // negative of e's (those span the opposite nilradical containing a regular
  // nilpotent of s)
  VecC f_flat = VecC::Constant(a.dim(), Cyclotomic(0));
  int used = 0;
  for (size_t i = 0; i < minus.vectors.size(); ++i) {
    bool neg_of_e = true;
    for (size_t t = 0; t < minus.values[i].size(); ++t)
      neg_of_e &= (minus.values[i][t] == -plus.values[0][t]);
    if (neg_of_e) continue;
    f_flat += minus.vectors[i];
    ++used;
  }
  if (used != a.m - 1)
    throw std::runtime_error("regular nilpotent construction failed");

  int gm1 = (a.m - 1) % a.m;
  std::vector<int> ixm = grade_indices(datum.cartan, gm1);
  int rm = static_cast<int>(ixm.size());
  const RestrictedRoot& alpha = datum.roots[datum.lines[line].root_ids[0]];
  MatC acov(1, rm);
  for (int i = 0; i < rm; ++i) acov(0, i) = alpha.on_t(ixm[i]).promoted(cond);
  MatC kera = kernel_basis<Cyclotomic>(acov);  // coords in the t_{-1} block

  std::vector<int> gmid, g0id;
  for (int i = 0; i < a.dim(); ++i) {
    if (a.grade[i] == gm1) gmid.push_back(i);
    if (a.grade[i] == 0) g0id.push_back(i);
  }
  // map to the g_{-1} coordinate block
  auto to_gm_block = [&](const VecC& full) {
    VecC out(static_cast<int>(gmid.size()));
    for (size_t i = 0; i < gmid.size(); ++i) out(static_cast<int>(i)) = full(gmid[i]);
    return out;
  };
  MatC lifted_extractor = lift_to_cyclotomic(a.coord_extractor);

  unsigned long rng = 0x9E3779B97F4A7C15ull ^ (seed * 0x2545F4914F6CDD1Dull);
  auto next_rat = [&]() {
    rng ^= rng << 13;
    rng ^= rng >> 7;
    rng ^= rng << 17;
    return Rat(static_cast<long>(rng % 19) - 9);
  };
  for (int attempt = 0; attempt < 8; ++attempt) {
    // y0 = generic point of ker(alpha_{-1}) inside t_{-1}
    VecC y0 = VecC::Constant(a.dim(), Cyclotomic(0));
    for (int c = 0; c < kera.cols(); ++c) {
      Cyclotomic wgt = Cyclotomic(next_rat()).promoted(cond);
      for (int i = 0; i < rm; ++i) {
        VecQ tcoords = a.coordinates(datum.cartan.t_basis[ixm[i]]);
        for (int t = 0; t < a.dim(); ++t)
          y0(t) += wgt * kera(i, c) * Cyclotomic(tcoords(t)).promoted(cond);
      }
    }
    VecC x_flat = f_flat + y0;
    MatC x_mat = MatC::Constant(a.N, a.N, Cyclotomic(0));
    for (int j = 0; j < a.dim(); ++j)
      if (!x_flat(j).is_zero())
        x_mat += lift_to_cyclotomic(a.basis[j]) * x_flat(j);
    // Phi: (u, y) -> [u, f + y0] + y into the g_{-1} block
    MatC phi(static_cast<int>(gmid.size()),
             static_cast<int>(g0id.size()) + kera.cols());
    for (size_t c = 0; c < g0id.size(); ++c) {
      MatC bm = lift_to_cyclotomic(a.basis[g0id[c]]);
      MatC br = bm * x_mat - x_mat * bm;
      phi.col(static_cast<int>(c)) = to_gm_block(VecC(lifted_extractor * vec_of_c(br)));
    }
    for (int c = 0; c < kera.cols(); ++c) {
      VecC y = VecC::Constant(a.dim(), Cyclotomic(0));
      for (int i = 0; i < rm; ++i) {
        VecQ tcoords = a.coordinates(datum.cartan.t_basis[ixm[i]]);
        for (int t = 0; t < a.dim(); ++t)
          y(t) += kera(i, c) * Cyclotomic(tcoords(t)).promoted(cond);
      }
      phi.col(static_cast<int>(g0id.size()) + c) = to_gm_block(y);
    }
    int rank_phi = rank_of<Cyclotomic>(phi);
    if (rank_phi == static_cast<int>(gmid.size()) - 1) return true;
  }
  return false;
}

}  // namespace thetarep
