#include "thetarep/cyclotomic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace thetarep {

namespace {

using Poly = std::vector<Rat>;  // constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// division with remainder; b must be monic-ish (leading coeff nonzero)
void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
  trim(a);
  quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
  Rat lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / lead;
    size_t shift = a.size() - b.size();
    quot[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  rem = a;
  trim(quot);
}

Poly poly_mod(const Poly& a, const Poly& m) {
  Poly q, r;
  poly_divmod(a, m, q, r);
  return r;
}

}  // namespace

int euler_phi(int k) {
  int r = k;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      r -= r / p;
      while (k % p == 0) k /= p;
    }
  }
  if (k > 1) r -= r / k;
  return r;
}

const std::vector<Rat>& cyclotomic_polynomial(int k) {
  static std::map<int, Poly> cache;
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d
  Poly num(k + 1, Rat(0));
  num[0] = -1;
  num[k] = 1;
  for (int d = 1; d < k; ++d) {
    if (k % d) continue;
    Poly q, r;
    poly_divmod(num, cyclotomic_polynomial(d), q, r);
    if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
    num = q;
  }
  return cache.emplace(k, num).first->second;
}

Cyclotomic Cyclotomic::zeta(int conductor, long power) {
  long p = ((power % conductor) + conductor) % conductor;
  Poly x(static_cast<size_t>(p) + 1, Rat(0));
  x[static_cast<size_t>(p)] = 1;
  Poly r = poly_mod(x, cyclotomic_polynomial(conductor));
  Cyclotomic out;
  out.cond_ = conductor;
  out.c_.assign(euler_phi(conductor), Rat(0));
  for (size_t i = 0; i < r.size(); ++i) out.c_[i] = r[i];
  return out;
}

Cyclotomic Cyclotomic::from_coeffs(int conductor, std::vector<Rat> coeffs) {
  Poly r = poly_mod(coeffs, cyclotomic_polynomial(conductor));
  Cyclotomic out;
  out.cond_ = conductor;
  out.c_.assign(euler_phi(conductor), Rat(0));
  for (size_t i = 0; i < r.size(); ++i) out.c_[i] = r[i];
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_part() const {
  if (!is_rational()) throw std::runtime_error("not a rational value: " + str());
  return c_[0];
}

Cyclotomic Cyclotomic::promoted(int conductor) const {
  if (cond_ == conductor) return *this;
  if (!is_rational())
    throw std::runtime_error("cannot mix conductors " + std::to_string(cond_) +
                             " and " + std::to_string(conductor));
  Cyclotomic out;
  out.cond_ = conductor;
  out.c_.assign(euler_phi(conductor), Rat(0));
  out.c_[0] = c_[0];
  return out;
}

Cyclotomic Cyclotomic::galois(long u) const {
  Poly x(static_cast<size_t>(cond_) * c_.size() + 1, Rat(0));
  Poly acc(1, Rat(0));
  acc.resize(1);
  Poly res;
  // substitute z -> z^u term by term
  Poly total;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long e = (static_cast<long>(i) * u) % cond_;
    if (e < 0) e += cond_;
    if (total.size() < static_cast<size_t>(e) + 1)
      total.resize(static_cast<size_t>(e) + 1, Rat(0));
    total[static_cast<size_t>(e)] += c_[i];
  }
  return from_coeffs(cond_, total);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

static void align(const Cyclotomic& a, const Cyclotomic& b, Cyclotomic& a2,
                  Cyclotomic& b2) {
  if (a.conductor() == b.conductor()) {
    a2 = a;
    b2 = b;
  } else if (a.is_rational()) {
    a2 = a.promoted(b.conductor());
    b2 = b;
  } else {
    a2 = a;
    b2 = b.promoted(a.conductor());
  }
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x, y;
  align(a, b, x, y);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x, y;
  align(a, b, x, y);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x, y;
  align(a, b, x, y);
  std::vector<Rat> prod(x.c_.size() + y.c_.size(), Rat(0));
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j] == 0) continue;
      prod[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return Cyclotomic::from_coeffs(x.cond_, prod);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::runtime_error("division by zero cyclotomic");
  if (is_rational()) {
    Cyclotomic r = *this;
    r.c_[0] = Rat(1) / r.c_[0];
    return r;
  }
  // extended euclid in Q[x] against Phi_cond (irreducible over Q)
  Poly r0 = cyclotomic_polynomial(cond_);
  Poly r1(c_.begin(), c_.end());
  trim(r1);
  Poly s0{}, s1{Rat(1)};
  while (true) {
    Poly q, r2;
    poly_divmod(r0, r1, q, r2);
    trim(r2);
    if (r2.empty()) break;
    Poly qs = poly_mul(q, s1);
    Poly s2(std::max(s0.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  // r1 = gcd (a nonzero constant), s1 * this == r1 (mod Phi)
  Rat g = r1[0];
  for (Rat& x : s1) x /= g;
  return from_coeffs(cond_, s1);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  return a * b.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x, y;
  align(a, b, x, y);
  return x.c_ == y.c_;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i > 0) os << "*z" << cond_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

MatC lift_to_cyclotomic(const MatQ& m) {
  MatC out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = Cyclotomic(m(i, j));
  return out;
}

}  // namespace thetarep
