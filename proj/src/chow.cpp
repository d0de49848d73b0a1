#include "thetarep/chow.hpp"

#include <stdexcept>

namespace thetarep {

namespace {

// c(T_X) coefficients of h^j for P^n: (1+h)^{n+1} truncated
std::vector<Rat> proj_tangent(int n) {
  std::vector<Rat> c(n + 1);
  for (int j = 0; j <= n; ++j) c[j] = Rat(binomial(n + 1, j));
  return c;
}

// c(T_Q) for the d-dimensional quadric: (1+h)^{d+2} / (1+2h) truncated
std::vector<Rat> quadric_tangent(int d) {
  std::vector<Rat> c(d + 1, Rat(0));
  // 1/(1+2h) = sum (-2h)^i
  for (int j = 0; j <= d; ++j) {
    Rat s = 0;
    for (int i = 0; i <= j; ++i) {
      Rat t = Rat(binomial(d + 2, j - i));
      Int p2;
      mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(i));
      if (i % 2) t = -t;
      s += t * Rat(p2);
    }
    c[j] = s;
  }
  return c;
}

}  // namespace

KKProfile projective_space_profile(int n, int veronese) {
  KKProfile p;
  p.name = veronese == 1 ? "P^" + std::to_string(n)
                         : "v_" + std::to_string(veronese) + "(P^" +
                               std::to_string(n) + ")";
  p.dim = n;
  std::vector<Rat> t = proj_tangent(n);
  p.chern_lambda.assign(n + 1, Rat(0));
  Rat dpow = 1;
  for (int j = 0; j <= n; ++j) {
    // I(j) = d^j * c_{n-j}(Omega) integrated against h^j; int h^n = 1
    Rat c = t[n - j];
    if ((n - j) % 2) c = -c;
    p.chern_lambda[j] = dpow * c;
    dpow *= veronese;
  }
  return p;
}

KKProfile quadric_profile(int d, int multiple) {
  KKProfile p;
  p.name = multiple == 1 ? "Q^" + std::to_string(d)
                         : "v_" + std::to_string(multiple) + "(Q^" +
                               std::to_string(d) + ")";
  p.dim = d;
  std::vector<Rat> t = quadric_tangent(d);
  p.chern_lambda.assign(d + 1, Rat(0));
  Rat dpow = 1;
  for (int j = 0; j <= d; ++j) {
    Rat c = t[d - j];
    if ((d - j) % 2) c = -c;
    p.chern_lambda[j] = dpow * c * 2;  // int_Q h^d = 2
    dpow *= multiple;
  }
  return p;
}

KKProfile product_profile(const KKProfile& x, const KKProfile& y) {
  KKProfile p;
  p.name = x.name + " x " + y.name;
  p.dim = x.dim + y.dim;
  p.chern_lambda.assign(p.dim + 1, Rat(0));
  for (int i = 0; i <= x.dim; ++i)
    for (int j = 0; j <= y.dim; ++j)
      p.chern_lambda[i + j] +=
          Rat(binomial(i + j, i)) * x.chern_lambda[i] * y.chern_lambda[j];
  return p;
}

SchubertRing::SchubertRing(int k, int n) : k_(k), n_(n) {
  if (k < 1 || k >= n) throw std::invalid_argument("SchubertRing: 1<=k<n");
}

SchubertRing::Cls SchubertRing::sigma(const Partition& mu) const {
  Cls c;
  if (mu.fits_in_box(k_, n_ - k_)) c[mu.pack()] = 1;
  return c;
}

SchubertRing::Cls SchubertRing::pieri1(const Cls& c) const {
  return multiply_h(c, 1);
}

SchubertRing::Cls SchubertRing::multiply_h(const Cls& c, int r) const {
  Cls out;
  for (const auto& [key, coef] : c) {
    Partition mu = Partition::unpack(key);
    for (const Partition& nu : add_horizontal_strip(mu, r, k_, n_ - k_))
      out[nu.pack()] += coef;
  }
  return out;
}

SchubertRing::Cls SchubertRing::multiply_e(const Cls& c, int r) const {
  Cls out;
  for (const auto& [key, coef] : c) {
    Partition mu = Partition::unpack(key);
    for (const Partition& nu : add_vertical_strip(mu, r, k_, n_ - k_))
      out[nu.pack()] += coef;
  }
  return out;
}

SchubertRing::Cls SchubertRing::multiply_p(const Cls& c, int r) const {
  Cls out;
  std::vector<std::pair<Partition, int>> strips;
  for (const auto& [key, coef] : c) {
    Partition mu = Partition::unpack(key);
    strips.clear();
    add_border_strips(mu, r, k_, n_ - k_, strips);
    for (const auto& [nu, height] : strips) {
      Rat term = coef;
      if (height % 2) term = -term;
      out[nu.pack()] += term;
    }
  }
  return out;
}

SchubertRing::Cls SchubertRing::scale(const Cls& c, const Rat& f) const {
  Cls out;
  if (f == 0) return out;
  for (const auto& [key, coef] : c) out[key] = coef * f;
  return out;
}

SchubertRing::Cls SchubertRing::add(const Cls& a, const Cls& b) const {
  Cls out = a;
  for (const auto& [key, coef] : b) {
    out[key] += coef;
    if (out[key] == 0) out.erase(key);
  }
  return out;
}

Rat SchubertRing::pair(const Cls& a, const Cls& b) const {
  Rat s = 0;
  for (const auto& [key, coef] : a) {
    Partition mu = Partition::unpack(key);
    auto it = b.find(mu.box_complement(k_, n_ - k_).pack());
    if (it != b.end()) s += coef * it->second;
  }
  return s;
}

Rat SchubertRing::integrate_top(const Cls& a) const {
  std::vector<int> full(k_, n_ - k_);
  auto it = a.find(Partition(full).pack());
  return it == a.end() ? Rat(0) : it->second;
}

SchubertRing::Cls SchubertRing::power_sum_dual_sub(int r) const {
  // p_r = sum_j (-1)^j s_{(r-j,1^j)}; s_mu(E^dual) = sigma_mu
  Cls out;
  for (int j = 0; j < r; ++j) {
    std::vector<int> hook{r - j};
    for (int t = 0; t < j; ++t) hook.push_back(1);
    Partition mu(hook);
    if (!mu.fits_in_box(k_, n_ - k_)) continue;
    out[mu.pack()] += (j % 2) ? Rat(-1) : Rat(1);
  }
  return out;
}

SchubertRing::Cls SchubertRing::power_sum_quotient(int r) const {
  // s_mu(Q) = sigma_{mu'}
  Cls out;
  for (int j = 0; j < r; ++j) {
    std::vector<int> hook{j + 1};
    for (int t = 0; t < r - j - 1; ++t) hook.push_back(1);
    Partition mu(hook);
    if (!mu.fits_in_box(k_, n_ - k_)) continue;
    out[mu.pack()] += (j % 2) ? Rat(-1) : Rat(1);
  }
  return out;
}

std::vector<SchubertRing::Cls> SchubertRing::cotangent_chern() const {
  const int d = dim();
  // p_r(T) = sum_s C(r,s) p_s(E^dual) p_{r-s}(Q), p_0 = rank;
  // p_r(Omega) = (-1)^r p_r(T)
  // Multiplication by p_i(T), T = E^dual (x) Q, written in the operators
  // "multiply by p_t(E^dual)" via p_i(T) = sum_s C(i,s) p_s(E^dual) p_{i-s}(Q)
  // and p_t(Q) = (-1)^{t+1} p_t(E^dual) (from ch(E) + ch(Q) = n).
  auto multiply_pT = [&](const Cls& c, int i) {
    Rat lin = Rat(n_ - k_);  // s = i term
    lin += (i % 2) ? Rat(k_) : Rat(-k_);  // s = 0 term: k * (-1)^{i+1}
    Cls acc = scale(multiply_p(c, i), lin);
    for (int s = 1; s < i; ++s) {
      Cls prod = multiply_p(multiply_p(c, s), i - s);
      Rat f = Rat(binomial(i, s));
      if ((i - s) % 2 == 0) f = -f;
      acc = add(acc, scale(prod, f));
    }
    return acc;
  };
  // Newton: j c_j(Omega) = sum_i (-1)^{i-1} c_{j-i}(Omega) p_i(Omega)
  // with p_i(Omega) = (-1)^i p_i(T); the two signs collapse to -1.
  std::vector<Cls> c(d + 1);
  c[0] = unit();
  for (int j = 1; j <= d; ++j) {
    Cls acc;
    for (int i = 1; i <= j; ++i)
      acc = add(acc, scale(multiply_pT(c[j - i], i), Rat(-1)));
    c[j] = scale(acc, Rat(1, j));
  }
  return c;
}

Int SchubertRing::pluecker_degree() const {
  Cls c = unit();
  for (int i = 0; i < dim(); ++i) c = pieri1(c);
  return to_integer(integrate_top(c));
}

KKProfile grassmannian_profile(int k, int n) {
  SchubertRing g(k, n);
  KKProfile p;
  p.name = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
  p.dim = g.dim();
  p.chern_lambda.assign(p.dim + 1, Rat(0));
  std::vector<SchubertRing::Cls> c = g.cotangent_chern();
  SchubertRing::Cls lpow = g.unit();
  for (int j = 0; j <= p.dim; ++j) {
    p.chern_lambda[j] = g.pair(c[p.dim - j], lpow);
    if (j < p.dim) lpow = g.pieri1(lpow);
  }
  return p;
}

namespace {

// common evaluator for LG(n,2n) and S_2n inside G(n,2n):
//   I(p) = lambda_den^{-p} * mult * sum_{|mu| = dim-p} (-1)^{|mu|} coeff_mu
//          int_G  sigma_mu lambda^p sigma_{fclass}
KKProfile sub_grassmannian_profile(const std::string& name, int n, int dim,
                                   const SchurExpansion& chern,
                                   const Partition& fclass, const Int& mult,
                                   int lambda_den) {
  SchubertRing g(n, 2 * n);
  KKProfile p;
  p.name = name;
  p.dim = dim;
  p.chern_lambda.assign(dim + 1, Rat(0));
  SchubertRing::Cls w = g.sigma(fclass);
  Rat denpow = 1;
  for (int j = 0; j <= dim; ++j) {
    // pair c_{dim-j} against lambda^j sigma_{fclass}
    Rat s = 0;
    for (const auto& [mu, a] : chern.coefficients()) {
      if (mu.weight() != dim - j) continue;
      if (!mu.fits_in_box(n, n)) continue;
      auto it = w.find(mu.box_complement(n, n).pack());
      if (it == w.end()) continue;
      Rat term = Rat(a) * it->second;
      if ((dim - j) % 2) term = -term;
      s += term;
    }
    p.chern_lambda[j] = s * Rat(mult) / denpow;
    denpow *= lambda_den;
    if (j < dim) w = g.pieri1(w);
  }
  return p;
}

}  // namespace

KKProfile lagrangian_profile(int n) {
  if (n < 2) throw std::invalid_argument("lagrangian_profile: n >= 2");
  SchurExpansion a = expand_sym_square(n);
  return sub_grassmannian_profile(
      "LG(" + std::to_string(n) + "," + std::to_string(2 * n) + ")", n,
      n * (n + 1) / 2, a, Partition::staircase(n), 1, 1);
}

KKProfile spinor_profile(int n) {
  if (n < 3) throw std::invalid_argument("spinor_profile: n >= 3");
  SchurExpansion b = expand_alt_square(n);
  // the section of S^2 E^dual cuts out both spinor families, so the class
  // of one family is half of c_top(S^2 E^dual) = 2^n sigma_{delta(n+1)}
  Int mult = pow2(n - 1);
  return sub_grassmannian_profile("S_" + std::to_string(2 * n), n,
                                  n * (n - 1) / 2, b,
                                  Partition::staircase(n + 1), mult, 2);
}

}  // namespace thetarep
