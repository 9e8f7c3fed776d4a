#include "xisum/abel.hpp"

#include <sstream>
#include <string>

namespace xisum {
namespace {

void require_positive_m(std::int64_t m, const char* where) {
  if (m < 1) {
    throw domain_error(std::string(where) + ": m must be a positive integer, got " +
                       std::to_string(m));
  }
}

// (base)^exp with 0^0 = 1, multiplied into acc. Returns false (leaving acc
// alone) when the factor is zero, true otherwise. Throws via on_singular
// when a zero base meets a negative exponent.
template <typename SingularFn>
bool multiply_power(Rational& acc, const Rational& base, std::int64_t exp,
                    SingularFn&& on_singular) {
  if (base == 0) {
    if (exp < 0) on_singular();
    if (exp > 0) return false;  // factor 0 annihilates the term
    return true;                // 0^0 = 1
  }
  if (exp == 0) return true;
  acc *= pow_rational(base, exp);
  return true;
}

}  // namespace

Rational abel_sum(const AbelSpec& spec) {
  require_positive_m(spec.m, "abel_sum");
  const std::int64_t m = spec.m;

  Rational sum(0);
  BigInt binom = 1;  // C(m, k)
  for (std::int64_t k = 0; k <= m; ++k) {
    const auto singular = [&](std::int64_t exp, const Rational& base, const char* side) {
      std::ostringstream msg;
      msg << "abel_sum: singular term at k=" << k << " (" << side << " base "
          << to_fraction_string(base) << " with negative exponent " << exp << ")";
      throw singular_term_error(msg.str());
    };

    Rational term(binom);
    const Rational left = spec.x + Rational(k);
    const Rational right = spec.y + Rational(m - k);
    const std::int64_t left_exp = k + spec.p;
    const std::int64_t right_exp = (m - k) + spec.q;

    bool nonzero = multiply_power(term, left, left_exp,
                                  [&] { singular(left_exp, left, "x+k"); });
    if (nonzero) {
      nonzero = multiply_power(term, right, right_exp,
                               [&] { singular(right_exp, right, "y+m-k"); });
    }
    if (nonzero) sum += term;

    if (k < m) {
      binom *= static_cast<unsigned long>(m - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      static_cast<unsigned long>(k + 1));
    }
  }
  return sum;
}

Rational hurwitz_sum(const HurwitzSpec& spec) {
  require_positive_m(spec.m, "hurwitz_sum");
  if (spec.parts.empty()) {
    throw domain_error("hurwitz_sum: at least one part is required");
  }

  const auto n = static_cast<std::int64_t>(spec.parts.size());
  Rational sum(0);
  for (CompositionStream stream(spec.m, n); !stream.done(); stream.advance()) {
    const auto& ks = stream.parts();
    Rational term(stream.coefficient());
    bool nonzero = true;
    for (std::size_t j = 0; j < ks.size() && nonzero; ++j) {
      const Rational base = spec.parts[j].x + Rational(ks[j]);
      const std::int64_t exp = ks[j] + spec.parts[j].p;
      nonzero = multiply_power(term, base, exp, [&] {
        std::ostringstream msg;
        msg << "hurwitz_sum: singular term at composition (";
        for (std::size_t i = 0; i < ks.size(); ++i) {
          msg << (i ? "," : "") << ks[i];
        }
        msg << "), part j=" << j + 1 << " (base " << to_fraction_string(base)
            << " with negative exponent " << exp << ")";
        throw singular_term_error(msg.str());
      });
    }
    if (nonzero) sum += term;
  }
  return sum;
}

BigInt alpha(std::int64_t k, std::int64_t r) {
  if (r < 1) {
    throw domain_error("alpha: r must be a positive integer, got " + std::to_string(r));
  }
  if (k < 0) {
    throw domain_error("alpha: k must be non-negative, got " + std::to_string(k));
  }
  BigInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= static_cast<unsigned long>(r + i);
  }
  return result;
}

Rational riordan_binomial_rhs(std::int64_t m, const Rational& x, const Rational& y) {
  require_positive_m(m, "riordan_binomial_rhs");
  const Rational base = x + y + Rational(m);

  Rational sum(0);
  BigInt coeff = 1;  // C(m,k) k!, i.e. the falling factorial m (m-1) ... (m-k+1)
  for (std::int64_t k = 0; k <= m; ++k) {
    Rational term(coeff);
    if (multiply_power(term, base, m - k, [] {})) sum += term;
    if (k < m) coeff *= static_cast<unsigned long>(m - k);
  }
  return sum;
}

Rational riordan_multinomial_rhs(std::int64_t m, std::span<const Rational> xs) {
  require_positive_m(m, "riordan_multinomial_rhs");
  const auto n = static_cast<std::int64_t>(xs.size());
  if (n < 2) {
    throw domain_error("riordan_multinomial_rhs: needs n >= 2 parts, got " +
                       std::to_string(n));
  }

  Rational base(m);
  for (const auto& x : xs) base += x;

  Rational sum(0);
  BigInt binom = 1;        // C(m, k)
  BigInt rising = 1;       // alpha_k(n-1) = (n-1) n ... (n+k-2)
  for (std::int64_t k = 0; k <= m; ++k) {
    Rational term(binom * rising);
    if (multiply_power(term, base, m - k, [] {})) sum += term;
    if (k < m) {
      binom *= static_cast<unsigned long>(m - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      static_cast<unsigned long>(k + 1));
      rising *= static_cast<unsigned long>(n - 1 + k);
    }
  }
  return sum;
}

}  // namespace xisum
