#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace citerank::kernels {

using u128 = unsigned __int128;

enum class Backend { parallel, serial };

// Elements per reduction block. Sums are formed per block and the block
// partials are combined in index order, so the floating-point result is the
// same for any thread count.
inline constexpr std::size_t kReductionBlock = 8192;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// OpenMP kernels. Every routine is deterministic with respect to the thread
// count: row-wise kernels own their output element, reductions use the fixed
// block tree described above.
namespace parallel {

double sum(std::span<const double> x);

double l1_distance(std::span<const double> a, std::span<const double> b);

// Sum of x[i] over the indices i where mask[i] != 0.
double masked_sum(std::span<const double> x, std::span<const std::uint8_t> mask);

// y[r] = sum over k in [offsets[r], offsets[r+1]) of x[sources[k]]
void pull_sum(std::span<const std::uint64_t> offsets, std::span<const std::uint32_t> sources,
              std::span<const double> x, std::span<double> y);

// y[r] = sum over k in [offsets[r], offsets[r+1]) of weights[k] * x[sources[k]]
void pull_weighted_sum(std::span<const std::uint64_t> offsets,
                       std::span<const std::uint32_t> sources,
                       std::span<const double> weights, std::span<const double> x,
                       std::span<double> y);

// out[g] = compensated sum of x[members[k]] for k in group g.
void grouped_sum(std::span<const std::uint64_t> group_offsets,
                 std::span<const std::uint32_t> members, std::span<const double> x,
                 std::span<double> out);

// sum over i of (a[i+1]-a[i]) * (b[i+1]-b[i]): degree products from two CSR
// offset arrays of equal length.
u128 offset_degree_product(std::span<const std::uint64_t> a_offsets,
                           std::span<const std::uint64_t> b_offsets);

// sum over i of a[i] * b[i]
u128 dot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

}  // namespace parallel

// Straight-line serial versions. Kept as the reference the parallel kernels
// are tested and benchmarked against.
namespace reference {

double sum(std::span<const double> x);
double l1_distance(std::span<const double> a, std::span<const double> b);
double masked_sum(std::span<const double> x, std::span<const std::uint8_t> mask);
void pull_sum(std::span<const std::uint64_t> offsets, std::span<const std::uint32_t> sources,
              std::span<const double> x, std::span<double> y);
void pull_weighted_sum(std::span<const std::uint64_t> offsets,
                       std::span<const std::uint32_t> sources,
                       std::span<const double> weights, std::span<const double> x,
                       std::span<double> y);
void grouped_sum(std::span<const std::uint64_t> group_offsets,
                 std::span<const std::uint32_t> members, std::span<const double> x,
                 std::span<double> out);
u128 offset_degree_product(std::span<const std::uint64_t> a_offsets,
                           std::span<const std::uint64_t> b_offsets);
u128 dot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

}  // namespace reference

}  // namespace citerank::kernels
