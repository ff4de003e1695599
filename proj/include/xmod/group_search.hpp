// Brute-force searches over maps between finite groups: homomorphism
// enumeration, automorphism groups and isomorphism search.

#ifndef XMOD_GROUP_SEARCH_HPP_
#define XMOD_GROUP_SEARCH_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "xmod/group.hpp"
#include "xmod/kernels.hpp"

namespace xmod {

/// Extends images of `gens` to all of `g` along BFS words, using
/// `step(x_value, generator_index, next_element)` to produce the value at
/// x * gens[i].  Returns nullopt if two words give different values or the
/// generators do not reach every element.
std::optional<std::vector<Elem>> extend_along_generators(
    const FiniteGroup& g, std::span<const Elem> gens,
    const std::function<Elem(Elem x, Elem value_at_x, std::size_t gen)>& step);

/// Homomorphism extension without throwing; nullopt if not a homomorphism.
std::optional<std::vector<Elem>> try_extend_hom(const FiniteGroup& src,
                                                const FiniteGroup& dst,
                                                std::span<const Elem> gens,
                                                std::span<const Elem> images);

/// All homomorphisms src -> dst, ordered lexicographically by the images of
/// src's greedy generators.
std::vector<GroupHom> all_homs(const GroupPtr& src, const GroupPtr& dst,
                               const Limits& limits = {},
                               kernels::Exec exec = kernels::Exec::parallel);

/// Automorphisms of g; the identity comes first, the rest in the order of
/// all_homs.
std::vector<GroupHom> automorphisms(const GroupPtr& g, const Limits& limits = {});

/// First isomorphism a -> b in lexicographic order of generator images for
/// which `accept` holds.  `allow(i, y)` may reject image y for generator i
/// early.
std::optional<GroupHom> find_isomorphism(
    const GroupPtr& a, const GroupPtr& b,
    const std::function<bool(const std::vector<Elem>&)>& accept = {},
    const std::function<bool(std::size_t, Elem)>& allow = {});

/// Group whose elements are the given self-maps (each an image array), under
/// composition (f*g)(x) = f(g(x)).  maps[0] must be the identity; the set
/// must be closed under composition.
GroupPtr group_of_maps(const std::vector<std::vector<Elem>>& maps,
                       const std::vector<std::string>& labels = {});

/// Histogram of element orders, used to rule out isomorphism quickly.
std::vector<std::size_t> order_histogram(const FiniteGroup& g);

}  // namespace xmod

#endif  // XMOD_GROUP_SEARCH_HPP_
