// Free groups of finite rank: reduced words, coset tables for the kernel of
// a map onto a finite group, Schreier bases and Reidemeister rewriting.
//
// A letter k > 0 is the generator x_k and -k its inverse.  Because the
// quotient is given as a finite group, the cosets of the kernel are simply
// the elements of that group, so no coset enumeration is needed.

#ifndef XMOD_WORDS_HPP_
#define XMOD_WORDS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xmod/group.hpp"

namespace xmod {

using Letter = std::int32_t;

/// A freely reduced word.  Construction always reduces; length is capped at
/// kMaxWordLength.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  Word pow(std::int64_t k) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(std::vector<Letter> letters);

/// Letters a..z are x1..x26, A..Z their inverses; "1" or "" is the empty word.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// Signed letter counts for generators 1..rank.
std::vector<std::int64_t> exponent_vector(const Word& w, std::size_t rank);

/// Cosets of N = ker(f) in the free group of the given rank, where f sends
/// x_k to images[k-1] in the finite group m.  Coset c is the element c of m;
/// coset 0 is N itself.
struct CosetTable {
  std::size_t rank = 0;
  GroupPtr m;
  std::vector<Elem> images;
  /// action[c * 2 * rank + 2 * (k - 1)] is c.x_k and "+ 1" is c.x_k^-1.
  std::vector<Elem> action;
  /// Schreier representative of each coset (every prefix is again one).
  std::vector<Word> transversal;
  /// Whether edge (c, x_k) is a BFS tree edge; indexed c * rank + (k - 1).
  std::vector<char> tree_edge;

  std::size_t index() const { return transversal.size(); }
  Elem step(Elem coset, Letter l) const {
    const std::size_t k = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
    return action[coset * 2 * rank + 2 * k + (l < 0 ? 1 : 0)];
  }
  /// Image of a word in m.
  Elem evaluate(const Word& w) const;
};

/// Transversal by BFS over positive letters, generators ascending.  Throws
/// NotSurjectiveError if the images do not generate m.
CosetTable coset_table(std::size_t rank, GroupPtr m, std::vector<Elem> images);

struct SchreierBasis {
  CosetTable table;
  /// (coset, generator) pairs of the non-tree edges, ordered by coset then
  /// generator.
  std::vector<std::pair<Elem, Letter>> generators;
  std::vector<Word> words;
  /// Basis position of edge c * rank + (k - 1), or -1 for tree edges.
  std::vector<std::int64_t> edge_index;

  std::size_t size() const { return words.size(); }
};

SchreierBasis schreier_generators(const CosetTable& table);

/// Rewrites a word of N as a product of basis elements; the result lists
/// signed 1-based basis positions.  Throws MembershipError if w is not in N.
std::vector<std::int64_t> reidemeister_rewrite(const Word& w, const SchreierBasis& basis);

/// Product of basis words along a signed 1-based index sequence.
Word basis_product(const std::vector<std::int64_t>& rewritten, const SchreierBasis& basis);

}  // namespace xmod

#endif  // XMOD_WORDS_HPP_
