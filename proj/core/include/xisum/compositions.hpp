#pragma once

#include <cstdint>
#include <vector>

#include "xisum/rational.hpp"

namespace xisum {

// Single-consumer stream over all compositions of `total` into `part_count`
// ordered non-negative parts, in descending lexicographic order:
//
//   (m,0,...,0), ..., (0,...,0,m)
//
// The multinomial coefficient m!/(k_1! ... k_n!) is maintained incrementally
// alongside the cursor (one small multiply and one exact divide per step).
class CompositionStream {
 public:
  // total >= 0, part_count >= 1; throws domain_error otherwise.
  CompositionStream(std::int64_t total, std::int64_t part_count);

  bool done() const { return done_; }
  const std::vector<std::int64_t>& parts() const { return parts_; }
  const BigInt& coefficient() const { return coefficient_; }

  // Advances to the next composition; sets done() past the last one.
  void advance();

 private:
  std::vector<std::int64_t> parts_;
  BigInt coefficient_;
  bool done_ = false;
};

// C(total + part_count - 1, part_count - 1), the number of compositions.
BigInt composition_count(std::int64_t total, std::int64_t part_count);

}  // namespace xisum
