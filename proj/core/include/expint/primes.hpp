#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

// Eratosthenes sieve, prime counting, and the comparison of pi(x) against
// the offset logarithmic integral with the Schoenfeld error bound.

namespace expint {

class PrimeTable {
 public:
  // Sieve of Eratosthenes up to limit inclusive.  limit >= 2; limits above
  // 1e8 are rejected (LimitTooLarge) to keep memory and build time bounded.
  explicit PrimeTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const;      // n <= limit, else OutOfRange
  std::uint64_t pi(std::uint64_t x) const;   // primes <= x; x <= limit

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;  // bit n set iff n is prime
  std::vector<std::uint32_t> cum_;   // primes below each 64-bit word
};

PrimeTable sieve(std::uint64_t limit);
std::uint64_t pi_of(const PrimeTable& table, std::uint64_t x);

struct ComparisonRow {
  std::uint64_t x = 0;
  std::uint64_t pi_x = 0;
  double li_offset = 0.0;  // Li(x) = li(x) - li(2), via the evaluator
  double abs_diff = 0.0;   // |pi(x) - Li(x)|
  double schoenfeld_bound = 0.0;  // sqrt(x) ln(x) / (8 pi)
  // The bound is only proven for x > 2657; below that the field is empty.
  std::optional<bool> bound_holds{};
};

ComparisonRow schoenfeld_row(const PrimeTable& table, std::uint64_t x);

// Rows for each x in input order; every x must be within [2, limit].
std::vector<ComparisonRow> compare_table(const PrimeTable& table,
                                         std::span<const std::uint64_t> xs);

// CSV with header x,pi,li_offset,abs_diff,schoenfeld_bound,bound_holds.
// Real-valued columns print with 6 decimal places; bound_holds prints
// true/false, or empty where the bound is not defined.
void write_comparison_csv(std::ostream& os, std::span<const ComparisonRow> rows);

}  // namespace expint
