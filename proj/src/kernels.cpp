#include "citerank/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

namespace citerank::kernels {

namespace {

std::size_t block_count(std::size_t n) {
  return (n + kReductionBlock - 1) / kReductionBlock;
}

// Block partials are filled in parallel; the final fold is serial and in
// block order.
template <typename BlockFn>
double blocked_sum(std::size_t n, BlockFn&& block_fn) {
  const auto blocks = static_cast<std::int64_t>(block_count(n));
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    CompensatedSum acc;
    for (std::size_t i = lo; i < hi; ++i) block_fn(i, acc);
    partial[static_cast<std::size_t>(b)] = acc.value();
  }
  CompensatedSum total;
  for (double p : partial) total.add(p);
  return total.value();
}

template <typename BlockFn>
u128 blocked_integer_sum(std::size_t n, BlockFn&& block_fn) {
  const auto blocks = static_cast<std::int64_t>(block_count(n));
  std::vector<u128> partial(static_cast<std::size_t>(blocks), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    u128 acc = 0;
    for (std::size_t i = lo; i < hi; ++i) acc += block_fn(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  u128 total = 0;
  for (u128 p : partial) total += p;
  return total;
}

}  // namespace

namespace parallel {

double sum(std::span<const double> x) {
  return blocked_sum(x.size(), [&](std::size_t i, CompensatedSum& acc) { acc.add(x[i]); });
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return blocked_sum(a.size(), [&](std::size_t i, CompensatedSum& acc) {
    const double d = a[i] - b[i];
    acc.add(d >= 0 ? d : -d);
  });
}

double masked_sum(std::span<const double> x, std::span<const std::uint8_t> mask) {
  assert(x.size() == mask.size());
  return blocked_sum(x.size(), [&](std::size_t i, CompensatedSum& acc) {
    if (mask[i] != 0) acc.add(x[i]);
  });
}

void pull_sum(std::span<const std::uint64_t> offsets, std::span<const std::uint32_t> sources,
              std::span<const double> x, std::span<double> y) {
  const auto rows = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t r = 0; r < rows; ++r) {
    double acc = 0.0;
    for (std::uint64_t k = offsets[r]; k < offsets[r + 1]; ++k) acc += x[sources[k]];
    y[r] = acc;
  }
}

void pull_weighted_sum(std::span<const std::uint64_t> offsets,
                       std::span<const std::uint32_t> sources,
                       std::span<const double> weights, std::span<const double> x,
                       std::span<double> y) {
  const auto rows = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t r = 0; r < rows; ++r) {
    double acc = 0.0;
    for (std::uint64_t k = offsets[r]; k < offsets[r + 1]; ++k) {
      acc += weights[k] * x[sources[k]];
    }
    y[r] = acc;
  }
}

void grouped_sum(std::span<const std::uint64_t> group_offsets,
                 std::span<const std::uint32_t> members, std::span<const double> x,
                 std::span<double> out) {
  const auto groups = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t g = 0; g < groups; ++g) {
    CompensatedSum acc;
    for (std::uint64_t k = group_offsets[g]; k < group_offsets[g + 1]; ++k) {
      acc.add(x[members[k]]);
    }
    out[g] = acc.value();
  }
}

u128 offset_degree_product(std::span<const std::uint64_t> a_offsets,
                           std::span<const std::uint64_t> b_offsets) {
  assert(a_offsets.size() == b_offsets.size());
  if (a_offsets.empty()) return 0;
  return blocked_integer_sum(a_offsets.size() - 1, [&](std::size_t i) {
    return static_cast<u128>(a_offsets[i + 1] - a_offsets[i]) *
           static_cast<u128>(b_offsets[i + 1] - b_offsets[i]);
  });
}

u128 dot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  assert(a.size() == b.size());
  return blocked_integer_sum(a.size(), [&](std::size_t i) {
    return static_cast<u128>(a[i]) * static_cast<u128>(b[i]);
  });
}

}  // namespace parallel

namespace reference {

double sum(std::span<const double> x) {
  CompensatedSum acc;
  for (double v : x) acc.add(v);
  return acc.value();
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc.add(d >= 0 ? d : -d);
  }
  return acc.value();
}

double masked_sum(std::span<const double> x, std::span<const std::uint8_t> mask) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (mask[i] != 0) acc.add(x[i]);
  }
  return acc.value();
}

void pull_sum(std::span<const std::uint64_t> offsets, std::span<const std::uint32_t> sources,
              std::span<const double> x, std::span<double> y) {
  for (std::size_t r = 0; r < y.size(); ++r) {
    double acc = 0.0;
    for (std::uint64_t k = offsets[r]; k < offsets[r + 1]; ++k) acc += x[sources[k]];
    y[r] = acc;
  }
}

void pull_weighted_sum(std::span<const std::uint64_t> offsets,
                       std::span<const std::uint32_t> sources,
                       std::span<const double> weights, std::span<const double> x,
                       std::span<double> y) {
  for (std::size_t r = 0; r < y.size(); ++r) {
    double acc = 0.0;
    for (std::uint64_t k = offsets[r]; k < offsets[r + 1]; ++k) {
      acc += weights[k] * x[sources[k]];
    }
    y[r] = acc;
  }
}

void grouped_sum(std::span<const std::uint64_t> group_offsets,
                 std::span<const std::uint32_t> members, std::span<const double> x,
                 std::span<double> out) {
  for (std::size_t g = 0; g < out.size(); ++g) {
    CompensatedSum acc;
    for (std::uint64_t k = group_offsets[g]; k < group_offsets[g + 1]; ++k) {
      acc.add(x[members[k]]);
    }
    out[g] = acc.value();
  }
}

u128 offset_degree_product(std::span<const std::uint64_t> a_offsets,
                           std::span<const std::uint64_t> b_offsets) {
  u128 total = 0;
  for (std::size_t i = 0; i + 1 < a_offsets.size(); ++i) {
    total += static_cast<u128>(a_offsets[i + 1] - a_offsets[i]) *
             static_cast<u128>(b_offsets[i + 1] - b_offsets[i]);
  }
  return total;
}

u128 dot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  u128 total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += static_cast<u128>(a[i]) * static_cast<u128>(b[i]);
  }
  return total;
}

}  // namespace reference

}  // namespace citerank::kernels
