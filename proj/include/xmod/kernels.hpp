// Exhaustive search kernels.
//
// Every axiom check in the library is a scan over a finite index space for
// the first tuple that violates a predicate.  Each kernel exists twice: a
// plain serial loop (kept as the reference) and an OpenMP version that splits
// the outer index across threads and reduces to the minimal failing linear
// index, so both return the same witness.

#ifndef XMOD_KERNELS_HPP_
#define XMOD_KERNELS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace xmod::kernels {

enum class Exec { serial, parallel };

// Below this many predicate evaluations the parallel path runs serially.
inline constexpr std::size_t kParallelThreshold = 1u << 14;

namespace serial {

template <class Pred>
std::optional<std::pair<std::size_t, std::size_t>> first_failure_2d(
    std::size_t rows, std::size_t cols, Pred&& ok) {
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (!ok(r, c)) return std::make_pair(r, c);
  return std::nullopt;
}

}  // namespace serial

namespace parallel {

template <class Pred>
std::optional<std::pair<std::size_t, std::size_t>> first_failure_2d(
    std::size_t rows, std::size_t cols, Pred&& ok) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::size_t best = none;
  const auto n_rows = static_cast<std::ptrdiff_t>(rows);
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
  for (std::ptrdiff_t r = 0; r < n_rows; ++r) {
    const auto row = static_cast<std::size_t>(r);
    for (std::size_t c = 0; c < cols; ++c) {
      if (!ok(row, c)) {
        best = std::min(best, row * cols + c);
        break;
      }
    }
  }
  if (best == none) return std::nullopt;
  return std::make_pair(best / cols, best % cols);
}

}  // namespace parallel

template <class Pred>
std::optional<std::pair<std::size_t, std::size_t>> first_failure_2d(
    std::size_t rows, std::size_t cols, Pred&& ok,
    Exec exec = Exec::parallel) {
  if (exec == Exec::serial || rows * cols < kParallelThreshold)
    return serial::first_failure_2d(rows, cols, std::forward<Pred>(ok));
  return parallel::first_failure_2d(rows, cols, std::forward<Pred>(ok));
}

template <class Pred>
std::optional<std::size_t> first_failure_1d(std::size_t n, Pred&& ok,
                                            Exec exec = Exec::parallel) {
  auto hit = first_failure_2d(
      n, 1, [&](std::size_t r, std::size_t) { return ok(r); }, exec);
  if (!hit) return std::nullopt;
  return hit->first;
}

// Table kernels.  `table` is a row-major n*n multiplication table.

std::optional<std::array<std::uint32_t, 3>> find_associativity_failure(
    std::span<const std::uint32_t> table, std::size_t n,
    Exec exec = Exec::parallel);

std::optional<std::array<std::uint32_t, 2>> find_hom_failure(
    std::span<const std::uint32_t> src_table, std::size_t src_order,
    std::span<const std::uint32_t> dst_table, std::size_t dst_order,
    std::span<const std::uint32_t> images, Exec exec = Exec::parallel);

// First (a, b) with a in `left`, b in `right`, a*b != b*a.
std::optional<std::array<std::uint32_t, 2>> find_noncommuting_pair(
    std::span<const std::uint32_t> table, std::size_t n,
    std::span<const std::uint32_t> left, std::span<const std::uint32_t> right,
    Exec exec = Exec::parallel);

// Evaluates a predicate over candidate indices 0..count-1 and returns the
// accepted ones in increasing order regardless of thread scheduling.
template <class Pred>
std::vector<std::size_t> filter_indices(std::size_t count, Pred&& accept,
                                        Exec exec = Exec::parallel) {
  std::vector<unsigned char> keep(count, 0);
  const auto n = static_cast<std::ptrdiff_t>(count);
  if (exec == Exec::parallel && count >= 64) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      keep[static_cast<std::size_t>(i)] =
          accept(static_cast<std::size_t>(i)) ? 1 : 0;
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i)
      keep[static_cast<std::size_t>(i)] =
          accept(static_cast<std::size_t>(i)) ? 1 : 0;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i)
    if (keep[i]) out.push_back(i);
  return out;
}

}  // namespace xmod::kernels

#endif  // XMOD_KERNELS_HPP_
