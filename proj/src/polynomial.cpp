#include "thetarep/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace thetarep {

Poly Poly::constant(int nvars, const Int& c) {
  Poly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

void Poly::add_term(const std::vector<int>& expo, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(expo);
  if (it == terms_.end()) {
    terms_.emplace(expo, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int Poly::coefficient(const std::vector<int>& expo) const {
  auto it = terms_.find(expo);
  return it == terms_.end() ? Int(0) : it->second;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::truncated(int max_degree) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) <= max_degree) r.add_term(e, c);
  return r;
}

Poly Poly::swap_vars(int i, int j) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    std::swap(e2[i], e2[j]);
    r.add_term(e2, c);
  }
  return r;
}

bool Poly::is_symmetric() const {
  for (int i = 0; i + 1 < nvars_; ++i)
    if (!(swap_vars(i, i + 1).terms_ == terms_)) return false;
  return true;
}

const std::pair<const std::vector<int>, Int>* Poly::lex_leading() const {
  if (terms_.empty()) return nullptr;
  return &*terms_.rbegin();
}

Poly elementary_symmetric(int nvars, int k) {
  Poly p(nvars);
  if (k == 0) return Poly::constant(nvars, 1);
  if (k > nvars || k < 0) return p;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> e(nvars, 0);
    for (int i : idx) e[i] = 1;
    p.add_term(e, 1);
    int i = k - 1;
    while (i >= 0 && idx[i] == nvars - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return p;
}

Poly complete_homogeneous(int nvars, int k) {
  Poly p(nvars);
  if (k < 0) return p;
  for (const Partition& mu : partitions_of(k, nvars, k == 0 ? 1 : k))
    p += monomial_symmetric(nvars, mu);
  if (k == 0) return Poly::constant(nvars, 1);
  return p;
}

Poly power_sum(int nvars, int k) {
  Poly p(nvars);
  for (int i = 0; i < nvars; ++i) {
    std::vector<int> e(nvars, 0);
    e[i] = k;
    p.add_term(e, 1);
  }
  return p;
}

Poly monomial_symmetric(int nvars, const Partition& mu) {
  Poly p(nvars);
  if (mu.length() > nvars) return p;
  std::vector<int> e(nvars, 0);
  for (int i = 0; i < mu.length(); ++i) e[i] = mu.part(i);
  std::sort(e.begin(), e.end());
  std::set<std::vector<int>> seen;
  do {
    if (seen.insert(e).second) p.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

Poly schur_polynomial(int nvars, const Partition& mu) {
  if (mu.length() > nvars) return Poly(nvars);
  if (mu.empty()) return Poly::constant(nvars, 1);
  int l = mu.length();
  // det(h_{mu_i - i + j})_{1<=i,j<=l} via permutation expansion
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det(nvars);
  do {
    int sign = 1;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Poly term = Poly::constant(nvars, sign);
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      int deg = mu.part(i) - i + perm[i];
      if (deg < 0) {
        zero = true;
        break;
      }
      term *= complete_homogeneous(nvars, deg);
    }
    if (!zero) det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace thetarep
