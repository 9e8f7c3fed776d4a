#include "xisum/exact.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

namespace xisum {
namespace {

void require_positive(std::int64_t m, const char* where) {
  if (m < 1) {
    throw domain_error(std::string(where) + ": m must be a positive integer, got " +
                       std::to_string(m));
  }
}

// Table of i^i for i in [0, m], with 0^0 = 1.
std::vector<BigInt> self_power_table(std::int64_t m) {
  std::vector<BigInt> table(static_cast<std::size_t>(m) + 1);
  table[0] = 1;
  for (std::int64_t i = 1; i <= m; ++i) {
    table[static_cast<std::size_t>(i)] =
        pow_big(BigInt(i), static_cast<std::uint64_t>(i));
  }
  return table;
}

}  // namespace

BigInt gamma_defn(std::int64_t m) {
  require_positive(m, "gamma_defn");
  const auto pw = self_power_table(m);
  BigInt sum = 0;
  BigInt binom = 1;  // C(m, k), updated across k
  BigInt term;
  for (std::int64_t k = 0; k <= m; ++k) {
    term = binom * pw[static_cast<std::size_t>(k)];
    term *= pw[static_cast<std::size_t>(m - k)];
    sum += term;
    if (k < m) {
      // C(m, k+1) = C(m, k) (m-k) / (k+1)
      binom *= static_cast<unsigned long>(m - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      static_cast<unsigned long>(k + 1));
    }
  }
  return sum;
}

BigInt gamma_simplified(std::int64_t m) {
  require_positive(m, "gamma_simplified");
  // Descending recurrence for t_j = m^j m!/j!: t_m = m^m,
  // t_{j-1} = t_j * j / m (the division is exact).
  BigInt term = pow_big(BigInt(m), static_cast<std::uint64_t>(m));
  BigInt sum = term;
  for (std::int64_t j = m; j >= 1; --j) {
    term *= static_cast<unsigned long>(j);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(m));
    sum += term;
  }
  return sum;
}

BigInt gamma2_defn(std::int64_t m) {
  require_positive(m, "gamma2_defn");
  const auto pw = self_power_table(m);
  BigInt sum = 0;
  BigInt binom_j = 1;  // C(m, j)
  BigInt term;
  for (std::int64_t j = 0; j <= m; ++j) {
    BigInt binom_k = 1;  // C(m-j, k)
    for (std::int64_t k = 0; k <= m - j; ++k) {
      term = binom_j * binom_k;
      term *= pw[static_cast<std::size_t>(j)];
      term *= pw[static_cast<std::size_t>(k)];
      term *= pw[static_cast<std::size_t>(m - j - k)];
      sum += term;
      if (k < m - j) {
        binom_k *= static_cast<unsigned long>(m - j - k);
        mpz_divexact_ui(binom_k.get_mpz_t(), binom_k.get_mpz_t(),
                        static_cast<unsigned long>(k + 1));
      }
    }
    if (j < m) {
      binom_j *= static_cast<unsigned long>(m - j);
      mpz_divexact_ui(binom_j.get_mpz_t(), binom_j.get_mpz_t(),
                      static_cast<unsigned long>(j + 1));
    }
  }
  return sum;
}

BigInt gamma2_simplified(std::int64_t m) {
  require_positive(m, "gamma2_simplified");
  // t_j = m^(m-j) C(m,j) (j+1)!; t_0 = m^m and
  // t_{j+1} = t_j (m-j)(j+2) / (m (j+1)), exact division at each step.
  BigInt term = pow_big(BigInt(m), static_cast<std::uint64_t>(m));
  BigInt sum = term;
  for (std::int64_t j = 0; j < m; ++j) {
    term *= static_cast<unsigned long>(m - j);
    term *= static_cast<unsigned long>(j + 2);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(j + 1));
    sum += term;
  }
  return sum;
}

BigInt telescope_sum(std::int64_t m) {
  require_positive(m, "telescope_sum");
  // g_k = m^k m!/k!, descending from g_m = m^m; weight each by (m-k).
  BigInt g = pow_big(BigInt(m), static_cast<std::uint64_t>(m));
  BigInt sum = 0;  // k = m contributes weight 0
  BigInt term;
  for (std::int64_t k = m; k >= 1; --k) {
    g *= static_cast<unsigned long>(k);
    mpz_divexact_ui(g.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(m));
    term = g * static_cast<unsigned long>(m - (k - 1));
    sum += term;
  }
  return sum;
}

Rational xi_exact(std::int64_t m) {
  require_positive(m, "xi_exact");
  return make_rational(gamma_simplified(m),
                       pow_big(BigInt(m), static_cast<std::uint64_t>(m)));
}

Rational xi2_exact(std::int64_t m) {
  require_positive(m, "xi2_exact");
  return make_rational(gamma2_simplified(m),
                       pow_big(BigInt(m), static_cast<std::uint64_t>(m)));
}

bool VerifyReport::passed() const {
  if (!identity_holds || !telescope_holds) return false;
  if (gamma_defn && *gamma_defn != gamma_simplified) return false;
  if (gamma2_defn && *gamma2_defn != gamma2_simplified) return false;
  return true;
}

VerifyReport verify_identity(std::int64_t m, const VerifyOptions& options) {
  require_positive(m, "verify_identity");
  if (m > options.simplified_cap) {
    throw resource_error("verify_identity: m = " + std::to_string(m) +
                         " exceeds the simplified-form cap " +
                         std::to_string(options.simplified_cap));
  }
  if (options.cross_check && m > options.cross_check_cap) {
    throw resource_error("verify_identity: m = " + std::to_string(m) +
                         " exceeds the cross-check cap " +
                         std::to_string(options.cross_check_cap) +
                         " (the definitional double sum is O(m^2))");
  }

  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.m = m;
  report.gamma_simplified = gamma_simplified(m);
  report.gamma2_simplified = gamma2_simplified(m);
  const BigInt m_pow = pow_big(BigInt(m), static_cast<std::uint64_t>(m + 1));
  report.identity_holds = (report.gamma2_simplified - report.gamma_simplified == m_pow);
  report.telescope_holds = (telescope_sum(m) == m_pow);
  if (options.cross_check) {
    report.gamma_defn = gamma_defn(m);
    report.gamma2_defn = gamma2_defn(m);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<VerifyReport> verify_range(std::int64_t first, std::int64_t last,
                                       const VerifyOptions& options, unsigned jobs) {
  require_positive(first, "verify_range");
  if (last < first) {
    throw domain_error("verify_range: empty range, last " + std::to_string(last) +
                       " < first " + std::to_string(first));
  }

  const auto count = static_cast<std::size_t>(last - first + 1);
  std::vector<VerifyReport> reports(count);

  if (jobs <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      reports[i] = verify_identity(first + static_cast<std::int64_t>(i), options);
    }
    return reports;
  }

  const unsigned worker_count =
      std::min<unsigned>(jobs, static_cast<unsigned>(count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        reports[i] = verify_identity(first + static_cast<std::int64_t>(i), options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(worker_count);
  for (unsigned t = 0; t < worker_count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  if (failure) std::rethrow_exception(failure);
  return reports;
}

}  // namespace xisum
