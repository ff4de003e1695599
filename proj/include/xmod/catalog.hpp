// Small named groups used by tests, examples and the CLI.

#ifndef XMOD_CATALOG_HPP_
#define XMOD_CATALOG_HPP_

#include <string>
#include <vector>

#include "xmod/crossed_module.hpp"
#include "xmod/group.hpp"

namespace xmod {

/// Symmetric group on n letters, generated by (1 2 ... n) and (1 2).
GroupPtr symmetric_group(std::size_t n, const Limits& limits = {});
/// Even permutations, generated by the 3-cycles (1 2 k).
GroupPtr alternating_group(std::size_t n, const Limits& limits = {});
/// Dihedral group of order 2n acting on an n-gon.
GroupPtr dihedral_group(std::size_t n, const Limits& limits = {});
/// Quaternion group of order 8 as a permutation group on 8 points.
GroupPtr quaternion_group();
/// C_n x| C_m where the generator of C_m acts by x -> r x; needs r^m = 1 mod n.
GroupPtr metacyclic_group(std::size_t n, std::size_t m, std::size_t r);
/// Generalized quaternion group of order 4n: <a, b | a^2n, b^2 = a^n, b a b^-1 = a^-1>.
GroupPtr dicyclic_group(std::size_t n);
/// Central product C4 o D4 (the Pauli group), order 16.
GroupPtr pauli_group();
/// Direct product of two groups.
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b);

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

/// One group per isomorphism class of order <= max_order (max_order <= 16).
std::vector<NamedGroup> small_groups(std::size_t max_order);

struct NamedXMod {
  std::string name;
  CrossedModule xmod;
};

/// Fixed list of small crossed modules covering identity maps, trivial top
/// and bottom groups, normal inclusions, central quotients and a zero map.
std::vector<NamedXMod> xmod_catalog();

}  // namespace xmod

#endif  // XMOD_CATALOG_HPP_
