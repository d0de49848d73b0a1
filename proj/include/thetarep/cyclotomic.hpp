#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "thetarep/arith.hpp"

namespace thetarep {

// Element of the cyclotomic field Q(zeta_k), in the power basis
// 1, z, ..., z^{phi(k)-1} reduced modulo the k-th cyclotomic polynomial.
// Values of different conductors mix only when one of them is rational.
class Cyclotomic {
 public:
  Cyclotomic() : cond_(1), c_(1, Rat(0)) {}
  Cyclotomic(const Rat& r) : cond_(1), c_(1, r) {}  // NOLINT(runtime/explicit)
  Cyclotomic(int i) : cond_(1), c_(1, Rat(i)) {}    // NOLINT(runtime/explicit)
  Cyclotomic(long i) : cond_(1), c_(1, Rat(static_cast<long>(i))) {}  // NOLINT

  static Cyclotomic zeta(int conductor, long power = 1);
  static Cyclotomic from_coeffs(int conductor, std::vector<Rat> coeffs);

  int conductor() const { return cond_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational_part() const;  // requires is_rational()

  Cyclotomic promoted(int conductor) const;  // rational value into Q(zeta_k)

  // zeta -> zeta^u, gcd(u, conductor) = 1
  Cyclotomic galois(long u) const;

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }

  std::string str() const;

 private:
  int cond_;
  std::vector<Rat> c_;
};

// Coefficients of the k-th cyclotomic polynomial, constant term first.
const std::vector<Rat>& cyclotomic_polynomial(int k);
int euler_phi(int k);

using MatC = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using VecC = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;

MatC lift_to_cyclotomic(const MatQ& m);

}  // namespace thetarep

namespace Eigen {

template <>
struct NumTraits<thetarep::Cyclotomic>
    : GenericNumTraits<thetarep::Cyclotomic> {
  typedef thetarep::Cyclotomic Real;
  typedef thetarep::Cyclotomic NonInteger;
  typedef thetarep::Cyclotomic Nested;
  typedef thetarep::Cyclotomic Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 400,
    MulCost = 800
  };
};

}  // namespace Eigen
