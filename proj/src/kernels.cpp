#include "xmod/kernels.hpp"

#include <array>

namespace xmod::kernels {

std::optional<std::array<std::uint32_t, 3>> find_associativity_failure(
    std::span<const std::uint32_t> table, std::size_t n, Exec exec) {
  const auto* t = table.data();
  auto hit = first_failure_2d(
      n, n * n,
      [t, n](std::size_t a, std::size_t bc) {
        const std::size_t b = bc / n, c = bc % n;
        return t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]];
      },
      exec);
  if (!hit) return std::nullopt;
  return std::array<std::uint32_t, 3>{
      static_cast<std::uint32_t>(hit->first),
      static_cast<std::uint32_t>(hit->second / n),
      static_cast<std::uint32_t>(hit->second % n)};
}

std::optional<std::array<std::uint32_t, 2>> find_hom_failure(
    std::span<const std::uint32_t> src_table, std::size_t src_order,
    std::span<const std::uint32_t> dst_table, std::size_t dst_order,
    std::span<const std::uint32_t> images, Exec exec) {
  const auto* s = src_table.data();
  const auto* d = dst_table.data();
  const auto* im = images.data();
  const std::size_t n = src_order, m = dst_order;
  auto hit = first_failure_2d(
      n, n,
      [=](std::size_t x, std::size_t y) {
        return im[s[x * n + y]] == d[im[x] * m + im[y]];
      },
      exec);
  if (!hit) return std::nullopt;
  return std::array<std::uint32_t, 2>{static_cast<std::uint32_t>(hit->first),
                                      static_cast<std::uint32_t>(hit->second)};
}

std::optional<std::array<std::uint32_t, 2>> find_noncommuting_pair(
    std::span<const std::uint32_t> table, std::size_t n,
    std::span<const std::uint32_t> left, std::span<const std::uint32_t> right,
    Exec exec) {
  const auto* t = table.data();
  auto hit = first_failure_2d(
      left.size(), right.size(),
      [&](std::size_t i, std::size_t j) {
        const std::uint32_t a = left[i], b = right[j];
        return t[a * n + b] == t[b * n + a];
      },
      exec);
  if (!hit) return std::nullopt;
  return std::array<std::uint32_t, 2>{left[hit->first], right[hit->second]};
}

}  // namespace xmod::kernels
