#include <tamagawa/errors.hpp>
#include <tamagawa/integer.hpp>

#include <numeric>

namespace tamagawa {

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw RangeError("integer does not fit in 64 bits", {{"value", v.get_str()}});
  return v.get_si();
}

std::int64_t mod_floor(const BigInt& a, std::int64_t m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), to_big(m).get_mpz_t());
  return r.get_si();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t r;
  if (__builtin_mul_overflow(a / std::gcd(a, b), b, &r)) throw RangeError("lcm overflows 64 bits");
  return r < 0 ? -r : r;
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = to_big(m(i, j));
  return r;
}

IntMatrix to_int(const BigMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = to_int64(m(i, j));
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tamagawa
