#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xisum/compositions.hpp"
#include "xisum/rational.hpp"

namespace xisum {

// Generalized Abel binomial sum
//   A_m(x,y;p,q) = sum_{k=0}^m C(m,k) (x+k)^(k+p) (y+m-k)^(m-k+q)
// over exact rationals, 0^0 = 1. Terms with a zero base and a negative
// exponent are undefined; abel_sum raises singular_term_error for them.
struct AbelSpec {
  std::int64_t m = 1;
  Rational x;
  Rational y;
  std::int64_t p = 0;
  std::int64_t q = 0;
};

// Hurwitz multinomial sum
//   B_m(x_1..x_n; p_1..p_n) = sum_{k_1+..+k_n=m} m!/(k_1!..k_n!)
//                             prod_j (x_j+k_j)^(k_j+p_j)
struct HurwitzPart {
  Rational x;
  std::int64_t p = 0;
};

struct HurwitzSpec {
  std::int64_t m = 1;
  std::vector<HurwitzPart> parts;  // n >= 1
};

Rational abel_sum(const AbelSpec& spec);
Rational hurwitz_sum(const HurwitzSpec& spec);

// Rising factorial r(r+1)...(r+k-1) = (r+k-1)!/(r-1)!, computed as a product
// of k consecutive integers. alpha(k, 2) == (k+1)!. Requires r >= 1, k >= 0.
BigInt alpha(std::int64_t k, std::int64_t r);

// Right-hand side of the binomial identity
//   A_m(x,y;0,0) = sum_{k=0}^m C(m,k) k! (x+y+m)^(m-k).
Rational riordan_binomial_rhs(std::int64_t m, const Rational& x, const Rational& y);

// Right-hand side of the multinomial identity (n = xs.size() >= 2)
//   B_m(x_1..x_n;0..0) = sum_{k=0}^m C(m,k) (x_1+..+x_n+m)^(m-k) alpha_k(n-1).
Rational riordan_multinomial_rhs(std::int64_t m, std::span<const Rational> xs);

}  // namespace xisum
