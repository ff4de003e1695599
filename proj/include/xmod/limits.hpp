#ifndef XMOD_LIMITS_HPP_
#define XMOD_LIMITS_HPP_

#include <cstddef>

namespace xmod {

/// Size bounds for table-based constructions and brute-force enumerations.
struct Limits {
  std::size_t order_bound = 512;      // largest group built as a table
  std::size_t enum_bound = 1000000;   // largest candidate set enumerated
};

inline constexpr std::size_t kMaxWordLength = 1000000;

}  // namespace xmod

#endif  // XMOD_LIMITS_HPP_
