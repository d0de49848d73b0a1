#include "thetarep/symfun.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "thetarep/linalg.hpp"

namespace thetarep {

Int SchurExpansion::coefficient(const Partition& mu) const {
  auto it = coef_.find(mu);
  return it == coef_.end() ? Int(0) : it->second;
}

void SchurExpansion::add(const Partition& mu, const Int& c) {
  if (c == 0 || mu.length() > nvars_) return;
  auto it = coef_.find(mu);
  if (it == coef_.end()) {
    coef_.emplace(mu, c);
  } else {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

namespace {

// One variable-extension step of the Chern-class product expansions.
//
// F_j(x_1..x_j) = F_{j-1}(x_1..x_{j-1}) * prod_{i<j} (1 + x_i + x_j)
//                 [ * (1 + 2 x_j) for the symmetric square ]
//
// Using prod_{i<j}(1 + x_i + t) = sum_a e_a(x_{<j}) (1+t)^{j-1-a} the product
// becomes sum over (mu, s) of coefficients times s_mu(x_{<j}) x_j^s, and the
// Schur expansion in j variables is recovered by inverting the branching rule
// s_lambda(x_1..x_j) = sum_{mu horiz. strip below lambda} s_mu(x_{<j})
// x_j^{|lambda|-|mu|}, processed in dominance-compatible order.
SchurExpansion extend_one_variable(const SchurExpansion& prev, int j,
                                   bool sym_square) {
  const int m = j - 1;  // previous variable count
  // A[(mu, s)] = coefficient of s_mu(x_{<j}) x_j^s
  std::map<std::pair<Partition, int>, Int> a;
  for (const auto& [nu, c] : prev.coefficients()) {
    for (int e = 0; e <= m; ++e) {
      std::vector<Partition> mus = add_vertical_strip(nu, e, m, 1 << 20);
      if (mus.empty()) continue;
      for (int s = 0; s + e <= m + (sym_square ? 1 : 0); ++s) {
        // (1+t)^{m-e} contributes C(m-e, s); with the extra (1+2t) factor the
        // t^s coefficient of (1+t)^{m-e}(1+2t) is C(m-e,s) + 2 C(m-e,s-1).
        Int w = binomial(m - e, s);
        if (sym_square && s >= 1) w += 2 * binomial(m - e, s - 1);
        if (w == 0) continue;
        Int cw = c * w;
        for (const Partition& mu : mus) a[{mu, s}] += cw;
      }
    }
  }
  // invert branching, degree by degree, lex-descending within a degree
  SchurExpansion out(j);
  std::map<int, std::map<Partition, std::map<int, Int>>> by_degree;
  for (const auto& [key, c] : a) {
    if (c == 0) continue;
    by_degree[key.first.weight() + key.second][key.first][key.second] += c;
  }
  for (auto& [deg, table] : by_degree) {
    // candidates: lambda of weight deg with <= j rows; processed lex-desc
    // (a linear extension of dominance order restricted to equal weight)
    std::vector<Partition> lambdas = partitions_of(deg, j, deg == 0 ? 1 : deg);
    std::sort(lambdas.begin(), lambdas.end());
    std::reverse(lambdas.begin(), lambdas.end());
    for (const Partition& lam : lambdas) {
      // head = lambda without its j-th row, tail = that row's size
      std::vector<int> head(lam.parts());
      int tail = 0;
      if (lam.length() == j) {
        tail = head.back();
        head.pop_back();
      }
      Partition mu_star{std::vector<int>(head)};
      auto it1 = table.find(mu_star);
      if (it1 == table.end()) continue;
      auto it2 = it1->second.find(tail);
      if (it2 == it1->second.end() || it2->second == 0) continue;
      Int c = it2->second;
      out.add(lam, c);
      // subtract the full branching of lambda
      for (const Partition& mu : remove_horizontal_strips(lam)) {
        if (mu.length() > m) continue;
        table[mu][lam.weight() - mu.weight()] -= c;
      }
    }
    for (const auto& [mu, row] : table)
      for (const auto& [s, c] : row)
        if (c != 0)
          throw std::logic_error("branching inversion left residue");
  }
  return out;
}

SchurExpansion expand_square(int n, bool sym) {
  SchurExpansion f(0);
  f.add(Partition(), 1);
  for (int j = 1; j <= n; ++j) {
    SchurExpansion widened(j);
    for (const auto& [mu, c] : f.coefficients()) widened.add(mu, c);
    f = extend_one_variable(widened, j, sym);
  }
  return f;
}

}  // namespace

SchurExpansion expand_sym_square(int n) {
  if (n < 1) throw std::invalid_argument("expand_sym_square: n >= 1 required");
  return expand_square(n, true);
}

SchurExpansion expand_alt_square(int n) {
  if (n < 1) throw std::invalid_argument("expand_alt_square: n >= 1 required");
  return expand_square(n, false);
}

Int skew_syt_count(const Partition& mu, const Partition& nu) {
  if (!nu.contains(mu)) return 0;
  int l = nu.weight() - mu.weight();
  if (l == 0) return 1;
  int r = nu.length();
  MatQ m(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int d = (nu.part(i) - i) - (mu.part(j) - j);
      m(i, j) = d < 0 ? Rat(0) : Rat(1) / Rat(factorial(d));
    }
  // exact determinant by elimination
  Rat det = 1;
  for (int c = 0; c < r; ++c) {
    int p = -1;
    for (int i = c; i < r; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < r; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (int j = c; j < r; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return to_integer(det * Rat(factorial(l)));
}

Int skew_syt_count_recursive(const Partition& mu, const Partition& nu) {
  if (!nu.contains(mu)) return 0;
  if (nu.weight() == mu.weight()) return 1;
  static std::mutex memo_mutex;
  static std::map<std::pair<Partition, Partition>, Int> memo;
  auto key = std::make_pair(mu, nu);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  // remove one outer corner of nu staying above mu
  Int total = 0;
  for (int i = 0; i < nu.length(); ++i) {
    if (nu.part(i) == nu.part(i + 1)) continue;  // not a corner
    std::vector<int> p = nu.parts();
    p[i] -= 1;
    Partition smaller{std::move(p)};
    if (smaller.contains(mu)) total += skew_syt_count_recursive(mu, smaller);
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo[key] = total;
  return total;
}

SchurExpansion pieri_h(const SchurExpansion& f, int k,
                       std::optional<BoxBound> box) {
  int max_len = box ? box->rows : f.nvars();
  int max_part = box ? box->cols : 1 << 20;
  SchurExpansion out(f.nvars());
  for (const auto& [mu, c] : f.coefficients())
    for (const Partition& nu : add_horizontal_strip(mu, k, max_len, max_part))
      out.add(nu, c);
  return out;
}

SchurExpansion pieri_e(const SchurExpansion& f, int k,
                       std::optional<BoxBound> box) {
  int max_len = box ? box->rows : f.nvars();
  int max_part = box ? box->cols : 1 << 20;
  SchurExpansion out(f.nvars());
  for (const auto& [mu, c] : f.coefficients())
    for (const Partition& nu : add_vertical_strip(mu, k, max_len, max_part))
      out.add(nu, c);
  return out;
}

SchurExpansion lr_product(const Partition& mu, const Partition& nu, int nvars,
                          std::optional<BoxBound> box) {
  // s_nu = det(h_{nu_i - i + j}); expand the determinant and apply Pieri.
  SchurExpansion out(nvars);
  if (mu.length() > nvars || nu.length() > nvars) return out;
  int l = std::max(nu.length(), 1);
  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  do {
    int sign = 1;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    bool zero = false;
    SchurExpansion term(nvars);
    term.add(mu, sign);
    for (int i = 0; i < l && !zero; ++i) {
      int deg = nu.part(i) - i + perm[i];
      if (deg < 0) {
        zero = true;
        break;
      }
      if (deg > 0) term = pieri_h(term, deg, box);
    }
    if (!zero)
      for (const auto& [lam, c] : term.coefficients()) out.add(lam, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TensorChern tensor_chern(int k, int l, int degree_bound) {
  if (k < 1 || l < 1) throw std::invalid_argument("tensor_chern: k,l >= 1");
  int nv = k + l;
  Poly prod = Poly::constant(nv, 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) {
      Poly f = Poly::constant(nv, 1) + Poly::variable(nv, i) +
               Poly::variable(nv, k + j);
      prod = (prod * f).truncated(degree_bound);
    }
  // decompose into e_mu(x) e_nu(y) by leading-term subtraction, separately
  // bi-symmetric in the two blocks
  TensorChern out{k, l, {}};
  while (!prod.is_zero()) {
    auto* lead = prod.lex_leading();
    std::vector<int> ex(lead->first.begin(), lead->first.begin() + k);
    std::vector<int> ey(lead->first.begin() + k, lead->first.end());
    std::sort(ex.rbegin(), ex.rend());
    std::sort(ey.rbegin(), ey.rend());
    Partition lx{std::vector<int>(ex)};
    Partition ly{std::vector<int>(ey)};
    // lex-leading monomial of e_{mu} is x^{mu'}
    Partition mx = lx.conjugate();
    Partition my = ly.conjugate();
    Int c = lead->second;
    out.terms[{mx, my}] += c;
    Poly ex_poly = Poly::constant(nv, c);
    for (int i = 0; i < mx.length(); ++i) {
      Poly e = Poly(nv);
      // e_{mx_i}(x block)
      Poly block = elementary_symmetric(k, mx.part(i));
      for (const auto& [ee, cc] : block.terms()) {
        std::vector<int> full(nv, 0);
        std::copy(ee.begin(), ee.end(), full.begin());
        e.add_term(full, cc);
      }
      ex_poly *= e;
    }
    for (int i = 0; i < my.length(); ++i) {
      Poly e = Poly(nv);
      Poly block = elementary_symmetric(l, my.part(i));
      for (const auto& [ee, cc] : block.terms()) {
        std::vector<int> full(nv, 0);
        std::copy(ee.begin(), ee.end(), full.begin() + k);
        e.add_term(full, cc);
      }
      ex_poly *= e;
    }
    prod = (prod - ex_poly).truncated(degree_bound);
  }
  return out;
}

SchurExpansion schur_decompose(const Poly& p) {
  if (!p.is_symmetric())
    throw std::invalid_argument("schur_decompose: polynomial not symmetric");
  SchurExpansion out(p.nvars());
  Poly rest = p;
  while (!rest.is_zero()) {
    auto* lead = rest.lex_leading();
    std::vector<int> e = lead->first;
    for (size_t i = 1; i < e.size(); ++i)
      if (e[i] > e[i - 1])
        throw std::logic_error("leading exponent of symmetric poly not sorted");
    Partition lam{std::vector<int>(e)};
    Int c = lead->second;
    out.add(lam, c);
    Poly s = schur_polynomial(p.nvars(), lam);
    Poly cs(p.nvars());
    for (const auto& [ee, cc] : s.terms()) cs.add_term(ee, cc * c);
    rest = rest - cs;
  }
  return out;
}

Poly to_polynomial(const SchurExpansion& f) {
  Poly out(f.nvars());
  for (const auto& [mu, c] : f.coefficients()) {
    Poly s = schur_polynomial(f.nvars(), mu);
    for (const auto& [e, cc] : s.terms()) out.add_term(e, cc * c);
  }
  return out;
}

}  // namespace thetarep
