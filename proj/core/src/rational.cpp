#include "xisum/rational.hpp"

#include <cmath>
#include <utility>

namespace xisum {

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw domain_error("rational denominator must be nonzero");
  Rational q;
  mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return domain_error("not a rational: '" + std::string(text) + "' (expected p or p/q)");
  };
  if (text.empty()) throw bad();

  const auto slash = text.find('/');
  const std::string num_part(text.substr(0, slash));
  std::string den_part = slash == std::string_view::npos
                             ? std::string("1")
                             : std::string(text.substr(slash + 1));
  BigInt num, den;
  if (num_part.empty() || den_part.empty() ||
      mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0 ||
      mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0) {
    throw bad();
  }
  if (den == 0) throw domain_error("rational denominator must be nonzero: '" + std::string(text) + "'");
  return make_rational(std::move(num), std::move(den));
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow_rational(const Rational& base, std::int64_t exp) {
  if (exp == 0) return Rational(1);  // includes 0^0 = 1
  if (base == 0) {
    if (exp < 0) throw domain_error("zero base with negative exponent");
    return Rational(0);
  }
  const auto e = static_cast<std::uint64_t>(exp < 0 ? -exp : exp);
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  // base is canonical, so numerator/denominator powers stay coprime
  if (exp < 0) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  return r;
}

BigInt pow_big(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

double to_double(const Rational& value) { return mpq_get_d(value.get_mpq_t()); }

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw domain_error("cannot convert non-finite double to rational");
  Rational q;
  mpq_set_d(q.get_mpq_t(), value);
  return q;
}

Rational exact_relative_error(double approx, const Rational& exact) {
  if (exact == 0) throw domain_error("relative error undefined for exact value 0");
  Rational err = rational_from_double(approx) - exact;
  Rational rel = err / exact;
  return abs(rel);
}

}  // namespace xisum
