#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace blockset {

/// Arbitrary-precision fraction in lowest terms with positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const mpz_class& num, const mpz_class& den);
  explicit ExactRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  /// Smallest integer >= this value.
  mpz_class ceil() const;
  double to_double() const { return q_.get_d(); }
  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ + b.q_));
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ - b.q_));
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.q_ * b.q_));
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// ceil(n(n-2)/3); the exact minimum for n >= 3.
std::uint64_t phi3(std::uint64_t n);

/// 2 n (n-1) ... (n-d+3) (n-d+1) / d!  for d >= 3, n >= d (else OutOfDomain).
ExactRational lower_bound(std::size_t d, std::size_t n);
std::uint64_t lower_bound_ceil(std::size_t d, std::size_t n);

/// Star bound C(n-1, d-1).
std::uint64_t trivial_upper(std::size_t d, std::size_t n);

/// Best upper bound from the split and peel recurrences and the star.
/// Memo table filled once; queries outside the filled range extend it.
class UpperBoundTable {
 public:
  UpperBoundTable(std::size_t d_max, std::size_t n_max);
  std::uint64_t at(std::size_t d, std::size_t n) const;
  std::size_t d_max() const noexcept { return d_max_; }
  std::size_t n_max() const noexcept { return n_max_; }

 private:
  std::size_t d_max_;
  std::size_t n_max_;
  std::vector<std::vector<std::uint64_t>> value_;  // [d][n]
};

std::uint64_t dp_upper(std::size_t d, std::size_t n);

/// Leading-coefficient constants: 1, 1, 1/3, then
/// gamma_d = (sum_{i=1}^{d-1} gamma_{d-i} / i!) / (2^{d-1} - 1).
/// Returns gamma_0 .. gamma_{d_max}; gamma_0 is unused and set to 0.
std::vector<ExactRational> gamma_sequence(std::size_t d_max);
ExactRational gamma(std::size_t d);

ExactRational factorial(std::size_t m);

struct GammaCheckRow {
  std::size_t d = 0;
  ExactRational gamma;
  ExactRational threshold;  // (43/50) / (d-1)!
  ExactRational star_coefficient;  // 1 / (d-1)!
  bool below_threshold = false;  // strict
  bool at_most_star = false;
};

/// Rows for 3 <= d <= d_max; throws OutOfDomain if d_max < 3.
std::vector<GammaCheckRow> check_gamma_bounds(std::size_t d_max);

struct BoundRow {
  std::size_t d = 0;
  std::size_t n = 0;
  std::uint64_t lower_ceil = 0;
  std::uint64_t trivial_upper = 0;
  std::uint64_t dp_upper = 0;
  std::optional<std::uint64_t> phi3_exact;

  std::uint64_t gap() const noexcept { return dp_upper - lower_ceil; }
};

BoundRow bound_row(std::size_t d, std::size_t n);

/// Rows for 3 <= d <= d_max and d <= n <= n_max, ordered by (d, n).
std::vector<BoundRow> bound_table(std::size_t d_max, std::size_t n_max);

}  // namespace blockset
