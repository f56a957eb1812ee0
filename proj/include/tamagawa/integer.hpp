#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <string>

namespace tamagawa {
using BigInt = mpz_class;
using Rational = mpq_class;
}  // namespace tamagawa

namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 40,
    MulCost = 60
  };
};
}  // namespace Eigen

namespace tamagawa {

using Index = Eigen::Index;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using BigMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using BigVector = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;

// Thrown by the checked 64-bit kernels; callers retry with BigInt.
struct ArithmeticOverflow {};

// Uniform integer operations for the scalar-templated kernels.
template <class T>
struct IntOps;

template <>
struct IntOps<std::int64_t> {
  using T = std::int64_t;
  static T add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
  }
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
  }
  // a + c * b
  static T addmul(T a, T c, T b) { return add(a, mul(c, b)); }
  static T neg(T a) {
    if (a == std::numeric_limits<T>::min()) throw ArithmeticOverflow{};
    return -a;
  }
  static T quot(T a, T b) { return a / b; }  // truncating
  static T abs(T a) { return a < 0 ? neg(a) : a; }
  static bool is_zero(T a) { return a == 0; }
  static bool is_unit(T a) { return a == 1 || a == -1; }
  static int sign(T a) { return (a > 0) - (a < 0); }
  static bool divides(T d, T a) { return a % d == 0; }
  static T from(const BigInt& v) {
    if (!v.fits_slong_p()) throw ArithmeticOverflow{};
    return v.get_si();
  }
  static T from(std::int64_t v) { return v; }
};

template <>
struct IntOps<BigInt> {
  using T = BigInt;
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T addmul(const T& a, const T& c, const T& b) { return a + c * b; }
  static T neg(const T& a) { return -a; }
  static T quot(const T& a, const T& b) {
    T q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static T abs(const T& a) { return ::abs(a); }
  static bool is_zero(const T& a) { return sgn(a) == 0; }
  static bool is_unit(const T& a) { return a == 1 || a == -1; }
  static int sign(const T& a) { return sgn(a); }
  static bool divides(const T& d, const T& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }
  static T from(const BigInt& v) { return v; }
  static T from(std::int64_t v) { return BigInt(static_cast<long>(v)); }
};

inline BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

// Narrow a BigInt that is known to be small; throws RangeError otherwise.
std::int64_t to_int64(const BigInt& v);

// Non-negative representative of a mod m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}
std::int64_t mod_floor(const BigInt& a, std::int64_t m);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

BigMatrix to_big(const IntMatrix& m);
IntMatrix to_int(const BigMatrix& m);

std::string to_string(const Rational& q);

}  // namespace tamagawa
