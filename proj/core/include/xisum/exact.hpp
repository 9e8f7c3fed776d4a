#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "xisum/rational.hpp"

namespace xisum {

// Exact evaluation of the majority-vote complexity sums
//
//   gamma(m)  = sum_{k=0}^m C(m,k) k^k (m-k)^(m-k)
//   gamma2(m) = sum_{j=0}^m sum_{k=0}^{m-j} C(m,j) C(m-j,k) j^j k^k (m-j-k)^(m-j-k)
//
// with the convention 0^0 = 1, together with their closed simplified series
//
//   gamma(m)  = sum_{j=0}^m m^j m!/j!
//   gamma2(m) = sum_{j=0}^m m^(m-j) C(m,j) (j+1)!
//
// and xi(m) = gamma(m)/m^m, xi2(m) = gamma2(m)/m^m. All functions require
// m >= 1 and throw domain_error otherwise.

// Definitional binomial sum; O(m) big-integer terms.
BigInt gamma_defn(std::int64_t m);

// Simplified series; factors maintained as a running product, O(m) cheap ops.
BigInt gamma_simplified(std::int64_t m);

// Definitional double sum over compositions (j, k, m-j-k); O(m^2) terms.
BigInt gamma2_defn(std::int64_t m);

// Simplified series; O(m) terms via an exact term-to-term recurrence.
BigInt gamma2_simplified(std::int64_t m);

// sum_{k=0}^m m^k (m!/k!) (m-k); equals m^(m+1) for every m >= 1.
BigInt telescope_sum(std::int64_t m);

// gamma_simplified(m) / m^m in lowest terms.
Rational xi_exact(std::int64_t m);

// gamma2_simplified(m) / m^m in lowest terms.
Rational xi2_exact(std::int64_t m);

struct VerifyReport {
  std::int64_t m = 0;
  BigInt gamma_simplified;
  BigInt gamma2_simplified;
  std::optional<BigInt> gamma_defn;   // set when cross-checked
  std::optional<BigInt> gamma2_defn;  // set when cross-checked
  bool identity_holds = false;        // gamma2 - gamma == m^(m+1)
  bool telescope_holds = false;       // telescope_sum(m) == m^(m+1)
  std::chrono::duration<double> elapsed{0};

  // identity, telescope, and (when computed) definitional agreement
  bool passed() const;
};

struct VerifyOptions {
  bool cross_check = false;
  // The definitional double sum costs O(m^2) big-integer terms; keep it capped.
  std::int64_t cross_check_cap = 200;
  std::int64_t simplified_cap = 5000;
};

// Evaluates both simplified forms, the m^(m+1) identity and the telescoping
// sum; with cross_check also the definitional sums. Throws resource_error
// above the configured caps.
VerifyReport verify_identity(std::int64_t m, const VerifyOptions& options = {});

// Reports for every m in [first, last], ordered by m. jobs > 1 fans the
// per-m work out across threads; ordering of the result is unaffected.
std::vector<VerifyReport> verify_range(std::int64_t first, std::int64_t last,
                                       const VerifyOptions& options = {},
                                       unsigned jobs = 1);

}  // namespace xisum
