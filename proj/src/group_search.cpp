#include "xmod/group_search.hpp"

#include <map>

#include "xmod/error.hpp"

namespace xmod {

std::optional<std::vector<Elem>> extend_along_generators(
    const FiniteGroup& g, std::span<const Elem> gens,
    const std::function<Elem(Elem, Elem, std::size_t)>& step) {
  const std::size_t n = g.order();
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> val(n, unset);
  val[0] = 0;
  std::vector<Elem> queue{0};
  queue.reserve(n);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = g.mul(x, gens[k]);
      const Elem v = step(x, val[x], k);
      if (val[y] == unset) {
        val[y] = v;
        queue.push_back(y);
      } else if (val[y] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n) return std::nullopt;
  return val;
}

std::optional<std::vector<Elem>> try_extend_hom(const FiniteGroup& src,
                                                const FiniteGroup& dst,
                                                std::span<const Elem> gens,
                                                std::span<const Elem> images) {
  auto val = extend_along_generators(
      src, gens, [&](Elem, Elem vx, std::size_t k) { return dst.mul(vx, images[k]); });
  if (!val) return std::nullopt;
  if (kernels::find_hom_failure(src.table(), src.order(), dst.table(), dst.order(),
                                *val, kernels::Exec::serial))
    return std::nullopt;
  return val;
}

std::vector<GroupHom> all_homs(const GroupPtr& src, const GroupPtr& dst,
                               const Limits& limits, kernels::Exec exec) {
  const std::vector<Elem> gens = greedy_generators(*src, all_elements(*src));
  std::vector<std::vector<Elem>> cand(gens.size());
  std::size_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t ord = src->element_order(gens[i]);
    for (std::size_t y = 0; y < dst->order(); ++y)
      if (ord % dst->element_order(static_cast<Elem>(y)) == 0)
        cand[i].push_back(static_cast<Elem>(y));
    total *= cand[i].size();
    if (total > limits.enum_bound)
      throw SizeLimitError("homomorphism enumeration exceeds bound " +
                           std::to_string(limits.enum_bound));
  }
  auto decode = [&](std::size_t idx) {
    std::vector<Elem> im(gens.size());
    for (std::size_t i = gens.size(); i-- > 0;) {
      im[i] = cand[i][idx % cand[i].size()];
      idx /= cand[i].size();
    }
    return im;
  };
  const auto keep = kernels::filter_indices(
      total,
      [&](std::size_t idx) {
        const auto im = decode(idx);
        return try_extend_hom(*src, *dst, gens, im).has_value();
      },
      exec);
  std::vector<GroupHom> out;
  out.reserve(keep.size());
  for (std::size_t idx : keep) {
    const auto im = decode(idx);
    out.push_back(GroupHom::from_images(src, dst, *try_extend_hom(*src, *dst, gens, im)));
  }
  return out;
}

std::vector<GroupHom> automorphisms(const GroupPtr& g, const Limits& limits) {
  std::vector<GroupHom> out{identity_hom(g)};
  for (auto& h : all_homs(g, g, limits)) {
    if (h == out.front() || !h.is_injective()) continue;
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::size_t> order_histogram(const FiniteGroup& g) {
  std::vector<std::size_t> h(g.order() + 1, 0);
  for (std::size_t x = 0; x < g.order(); ++x) ++h[g.element_order(static_cast<Elem>(x))];
  return h;
}

std::optional<GroupHom> find_isomorphism(
    const GroupPtr& a, const GroupPtr& b,
    const std::function<bool(const std::vector<Elem>&)>& accept,
    const std::function<bool(std::size_t, Elem)>& allow) {
  if (a->order() != b->order()) return std::nullopt;
  if (order_histogram(*a) != order_histogram(*b)) return std::nullopt;
  const std::vector<Elem> gens = greedy_generators(*a, all_elements(*a));
  std::vector<std::vector<Elem>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t y = 0; y < b->order(); ++y) {
      const Elem ye = static_cast<Elem>(y);
      if (b->element_order(ye) != a->element_order(gens[i])) continue;
      if (allow && !allow(i, ye)) continue;
      cand[i].push_back(ye);
    }
    if (cand[i].empty()) return std::nullopt;
  }
  std::vector<Elem> im(gens.size());
  std::optional<std::vector<Elem>> found;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) {
      auto val = try_extend_hom(*a, *b, gens, im);
      if (!val) return false;
      std::vector<char> hit(b->order(), 0);
      for (Elem y : *val) {
        if (hit[y]) return false;
        hit[y] = 1;
      }
      if (accept && !accept(*val)) return false;
      found = std::move(val);
      return true;
    }
    for (Elem y : cand[depth]) {
      im[depth] = y;
      if (search(depth + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return GroupHom::from_images(a, b, std::move(*found));
}

GroupPtr group_of_maps(const std::vector<std::vector<Elem>>& maps,
                       const std::vector<std::string>& labels) {
  const std::size_t n = maps.size();
  if (n == 0) throw ArgumentError("empty map set");
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(maps[i], static_cast<Elem>(i));
  if (index.size() != n) throw ArgumentError("duplicate maps");
  std::vector<Elem> table(n * n);
  std::vector<Elem> comp(maps[0].size());
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = maps[f][maps[g][x]];
      auto it = index.find(comp);
      if (it == index.end()) throw ArgumentError("map set not closed under composition");
      table[f * n + g] = it->second;
    }
  }
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(n, std::move(table), labels));
}

}  // namespace xmod
