#include "xisum/compositions.hpp"

#include <string>

namespace xisum {
namespace {

void validate(std::int64_t total, std::int64_t part_count) {
  if (total < 0) {
    throw domain_error("compositions: total must be non-negative, got " +
                       std::to_string(total));
  }
  if (part_count < 1) {
    throw domain_error("compositions: part count must be positive, got " +
                       std::to_string(part_count));
  }
}

}  // namespace

CompositionStream::CompositionStream(std::int64_t total, std::int64_t part_count)
    : coefficient_(1) {
  validate(total, part_count);
  parts_.assign(static_cast<std::size_t>(part_count), 0);
  parts_[0] = total;  // first composition in descending lex order
}

void CompositionStream::advance() {
  if (done_) return;
  const std::size_t n = parts_.size();

  // Rightmost donor position before the last part.
  std::size_t i = n - 1;
  while (i > 0 && parts_[i - 1] == 0) --i;
  if (i == 0) {  // all remaining mass sits in the last part
    done_ = true;
    return;
  }
  --i;

  const std::int64_t tail = parts_[n - 1];
  const std::int64_t donor = parts_[i];
  parts_[n - 1] = 0;
  parts_[i] = donor - 1;
  parts_[i + 1] = tail + 1;

  // m!/(k_1!...k_n!) changes by the factor donor/(tail+1) under this move.
  coefficient_ *= static_cast<unsigned long>(donor);
  mpz_divexact_ui(coefficient_.get_mpz_t(), coefficient_.get_mpz_t(),
                  static_cast<unsigned long>(tail + 1));
}

BigInt composition_count(std::int64_t total, std::int64_t part_count) {
  validate(total, part_count);
  return binomial(static_cast<std::uint64_t>(total + part_count - 1),
                  static_cast<std::uint64_t>(part_count - 1));
}

}  // namespace xisum
