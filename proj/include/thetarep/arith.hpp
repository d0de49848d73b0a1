#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>

// Exact arithmetic used everywhere: mpz/mpq scalars, Eigen dense containers.
// No floating point anywhere in the library.

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace thetarep {

using Int = mpz_class;
using Rat = mpq_class;

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(long n) {
  if (n < 0) return 0;
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_integer(const Rat& q) {
  if (!is_integer(q))
    throw std::runtime_error("expected integer, got " + q.get_str());
  return q.get_num();
}

inline Int pow2(long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

}  // namespace thetarep
