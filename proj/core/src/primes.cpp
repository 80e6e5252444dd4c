#include "expint/primes.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "expint/errors.hpp"
#include "expint/evaluator.hpp"

namespace expint {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  if (limit > 100000000ULL) {
    throw LimitTooLarge("sieve limit capped at 1e8");
  }
  const std::size_t words = static_cast<std::size_t>(limit / 64 + 1);
  bits_.assign(words, ~0ULL);
  auto clear = [this](std::uint64_t n) { bits_[n / 64] &= ~(1ULL << (n % 64)); };
  clear(0);
  clear(1);
  // mask out bit positions beyond limit in the last word
  if ((limit + 1) % 64 != 0) {
    bits_.back() &= (1ULL << ((limit + 1) % 64)) - 1;
  }
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (!(bits_[p / 64] >> (p % 64) & 1)) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) clear(m);
  }
  cum_.resize(words);
  std::uint32_t running = 0;
  for (std::size_t w = 0; w < words; ++w) {
    cum_[w] = running;
    running += static_cast<std::uint32_t>(std::popcount(bits_[w]));
  }
}

bool PrimeTable::is_prime(std::uint64_t n) const {
  if (n > limit_) throw OutOfRange("primality query beyond sieve limit");
  return bits_[n / 64] >> (n % 64) & 1;
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
  if (x > limit_) throw OutOfRange("prime-count query beyond sieve limit");
  const std::uint64_t word = x / 64;
  const std::uint64_t mask = (x % 64 == 63) ? ~0ULL : (1ULL << (x % 64 + 1)) - 1;
  return cum_[word] + std::popcount(bits_[word] & mask);
}

PrimeTable sieve(std::uint64_t limit) { return PrimeTable(limit); }

std::uint64_t pi_of(const PrimeTable& table, std::uint64_t x) { return table.pi(x); }

ComparisonRow schoenfeld_row(const PrimeTable& table, std::uint64_t x) {
  if (x < 2 || x > table.limit()) {
    throw OutOfRange("comparison row needs 2 <= x <= sieve limit");
  }
  ComparisonRow row;
  row.x = x;
  row.pi_x = table.pi(x);
  const double xd = static_cast<double>(x);
  row.li_offset = eval_log(FnId::of(FnId::Kind::LiOffset), xd).value;
  row.abs_diff = std::abs(static_cast<double>(row.pi_x) - row.li_offset);
  row.schoenfeld_bound = std::sqrt(xd) * std::log(xd) / (8.0 * std::numbers::pi);
  if (x > 2657) row.bound_holds = row.abs_diff < row.schoenfeld_bound;
  return row;
}

std::vector<ComparisonRow> compare_table(const PrimeTable& table,
                                         std::span<const std::uint64_t> xs) {
  std::vector<ComparisonRow> rows;
  rows.reserve(xs.size());
  for (const std::uint64_t x : xs) rows.push_back(schoenfeld_row(table, x));
  return rows;
}

void write_comparison_csv(std::ostream& os, std::span<const ComparisonRow> rows) {
  os << "x,pi,li_offset,abs_diff,schoenfeld_bound,bound_holds\n";
  char buf[160];
  for (const ComparisonRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%llu,%llu,%.6f,%.6f,%.6f,%s\n",
                  static_cast<unsigned long long>(r.x),
                  static_cast<unsigned long long>(r.pi_x), r.li_offset, r.abs_diff,
                  r.schoenfeld_bound,
                  r.bound_holds ? (*r.bound_holds ? "true" : "false") : "");
    os << buf;
  }
}

}  // namespace expint
