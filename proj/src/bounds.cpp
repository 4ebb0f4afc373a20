#include "blockset/bounds.hpp"

#include <algorithm>
#include <limits>

#include "blockset/core.hpp"

namespace blockset {

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw Error(ErrorCode::OutOfDomain, "zero denominator");
  q_.canonicalize();
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.q_ == 0) throw Error(ErrorCode::OutOfDomain, "division by zero");
  return ExactRational(mpq_class(a.q_ / b.q_));
}

mpz_class ExactRational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string ExactRational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

std::uint64_t to_u64(const mpz_class& z) {
  if (z < 0 || !z.fits_ulong_p()) throw Error(ErrorCode::OutOfDomain, "value does not fit in 64 bits");
  return z.get_ui();
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::OutOfDomain, "bound overflows 64 bits");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::OutOfDomain, "bound overflows 64 bits");
  return r;
}

}  // namespace

std::uint64_t phi3(std::uint64_t n) {
  if (n < 3) return 0;  // n(n-2)/3 is in (-1, 0] there
  return (checked_mul(n, n - 2) + 2) / 3;
}

ExactRational lower_bound(std::size_t d, std::size_t n) {
  if (d < 3 || n < d) {
    throw Error(ErrorCode::OutOfDomain,
                "lower bound needs d >= 3 and n >= d, got d=" + std::to_string(d) + ", n=" + std::to_string(n));
  }
  mpz_class num = 2;
  for (std::size_t t = 0; t + 3 <= d; ++t) num *= static_cast<unsigned long>(n - t);
  num *= static_cast<unsigned long>(n - (d - 1));
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), d);
  return ExactRational(num, den);
}

std::uint64_t lower_bound_ceil(std::size_t d, std::size_t n) { return to_u64(lower_bound(d, n).ceil()); }

std::uint64_t trivial_upper(std::size_t d, std::size_t n) {
  if (d < 1 || n < d) throw Error(ErrorCode::OutOfDomain, "star bound needs 1 <= d <= n");
  return binomial(n - 1, d - 1);
}

UpperBoundTable::UpperBoundTable(std::size_t d_max, std::size_t n_max)
    : d_max_(d_max), n_max_(n_max), value_(d_max + 1, std::vector<std::uint64_t>(n_max + 1, 0)) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t d = 1; d <= d_max; ++d) {
      std::uint64_t& out = value_[d][n];
      if (n < d) out = 0;
      else if (d == 1) out = 1;
      else if (d == 2) out = n - 1;
      else if (d == 3) out = phi3(n);
      else if (n == d) out = 1;
      else {
        std::uint64_t best = binomial(n - 1, d - 1);
        if (n % 2 == 1) {
          best = std::min(best, checked_add(value_[d - 1][n - 1], value_[d][n - 1]));
        } else {
          const std::size_t k = n / 2;
          std::uint64_t split = 0;
          for (std::size_t i = 0; i < d; ++i) {
            split = checked_add(split, checked_mul(binomial(k, i), value_[d - i][k]));
          }
          best = std::min(best, split);
        }
        out = best;
      }
    }
  }
}

std::uint64_t UpperBoundTable::at(std::size_t d, std::size_t n) const {
  if (d < 1 || d > d_max_ || n > n_max_) throw Error(ErrorCode::OutOfDomain, "query outside the table");
  return value_[d][n];
}

std::uint64_t dp_upper(std::size_t d, std::size_t n) {
  if (d < 1) throw Error(ErrorCode::OutOfDomain, "d must be at least 1");
  return UpperBoundTable(d, n).at(d, n);
}

ExactRational factorial(std::size_t m) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return ExactRational(f, 1);
}

std::vector<ExactRational> gamma_sequence(std::size_t d_max) {
  std::vector<ExactRational> g(std::max<std::size_t>(d_max, 3) + 1);
  g[0] = 0;
  g[1] = 1;
  g[2] = 1;
  g[3] = ExactRational(1, 3);
  for (std::size_t d = 4; d <= d_max; ++d) {
    ExactRational sum = 0;
    for (std::size_t i = 1; i < d; ++i) sum = sum + g[d - i] / factorial(i);
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, d - 1);
    g[d] = sum / ExactRational(pow2 - 1, 1);
  }
  g.resize(d_max + 1);
  return g;
}

ExactRational gamma(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::OutOfDomain, "gamma needs d >= 1");
  return gamma_sequence(d)[d];
}

std::vector<GammaCheckRow> check_gamma_bounds(std::size_t d_max) {
  if (d_max < 3) throw Error(ErrorCode::OutOfDomain, "table starts at d = 3");
  const auto g = gamma_sequence(d_max);
  const ExactRational point86(43, 50);
  std::vector<GammaCheckRow> rows;
  for (std::size_t d = 3; d <= d_max; ++d) {
    GammaCheckRow row;
    row.d = d;
    row.gamma = g[d];
    row.star_coefficient = ExactRational(1) / factorial(d - 1);
    row.threshold = point86 * row.star_coefficient;
    row.below_threshold = row.gamma < row.threshold;
    row.at_most_star = row.gamma <= row.star_coefficient;
    rows.push_back(std::move(row));
  }
  return rows;
}

BoundRow bound_row(std::size_t d, std::size_t n) {
  BoundRow row;
  row.d = d;
  row.n = n;
  row.lower_ceil = lower_bound_ceil(d, n);
  row.trivial_upper = trivial_upper(d, n);
  row.dp_upper = dp_upper(d, n);
  if (d == 3) row.phi3_exact = phi3(n);
  return row;
}

std::vector<BoundRow> bound_table(std::size_t d_max, std::size_t n_max) {
  std::vector<BoundRow> rows;
  if (d_max < 3) return rows;
  const UpperBoundTable table(d_max, n_max);
  for (std::size_t d = 3; d <= d_max; ++d) {
    for (std::size_t n = d; n <= n_max; ++n) {
      BoundRow row;
      row.d = d;
      row.n = n;
      row.lower_ceil = lower_bound_ceil(d, n);
      row.trivial_upper = trivial_upper(d, n);
      row.dp_upper = table.at(d, n);
      if (d == 3) row.phi3_exact = phi3(n);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace blockset
