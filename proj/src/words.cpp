#include "xmod/words.hpp"

#include <cctype>

#include "xmod/error.hpp"

namespace xmod {

namespace {

void check_length(std::size_t n) {
  if (n > kMaxWordLength)
    throw WordOverflowError("word length " + std::to_string(n) + " exceeds limit " +
                            std::to_string(kMaxWordLength));
}

}  // namespace

Word free_reduce(std::vector<Letter> letters) { return Word(std::move(letters)); }

Word::Word(std::vector<Letter> letters) {
  // Stack reduction; a reduced input passes through unchanged.
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) throw ArgumentError("letter 0 is not a generator");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
  check_length(letters_.size());
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out(letters_);
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::pow(std::int64_t k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word r;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
  return r;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> out;
  if (text == "1") return Word();
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c >= 'a' && c <= 'z')
      out.push_back(c - 'a' + 1);
    else if (c >= 'A' && c <= 'Z')
      out.push_back(-(c - 'A' + 1));
    else
      throw ArgumentError(std::string("bad letter '") + c + "' in word");
  }
  return Word(std::move(out));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w.letters()) {
    if (l > 26 || l < -26) {
      s += (l > 0 ? "x" : "X") + std::to_string(l > 0 ? l : -l) + " ";
      continue;
    }
    s += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
  }
  return s;
}

std::vector<std::int64_t> exponent_vector(const Word& w, std::size_t rank) {
  std::vector<std::int64_t> e(rank, 0);
  for (Letter l : w.letters()) {
    const std::size_t k = static_cast<std::size_t>(l > 0 ? l : -l);
    if (k > rank) throw ArgumentError("letter exceeds rank");
    e[k - 1] += l > 0 ? 1 : -1;
  }
  return e;
}

Elem CosetTable::evaluate(const Word& w) const {
  Elem c = 0;
  for (Letter l : w.letters()) {
    if (static_cast<std::size_t>(l > 0 ? l : -l) > rank)
      throw ArgumentError("letter exceeds rank");
    c = step(c, l);
  }
  return c;
}

CosetTable coset_table(std::size_t rank, GroupPtr m, std::vector<Elem> images) {
  if (images.size() != rank) throw ArgumentError("need one image per generator");
  for (Elem y : images)
    if (y >= m->order()) throw ArgumentError("image out of range");
  if (subgroup_closure(*m, images).size() != m->order())
    throw NotSurjectiveError("generator images do not generate the quotient group");
  const std::size_t n = m->order();
  CosetTable t;
  t.rank = rank;
  t.m = m;
  t.images = std::move(images);
  t.action.resize(n * 2 * rank);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < rank; ++k) {
      t.action[c * 2 * rank + 2 * k] = m->mul(static_cast<Elem>(c), t.images[k]);
      t.action[c * 2 * rank + 2 * k + 1] = m->mul(static_cast<Elem>(c), m->inv(t.images[k]));
    }
  }
  // Positive letters suffice: in a finite group every inverse is a positive
  // power, so the BFS reaches every coset.
  t.transversal.assign(n, Word());
  t.tree_edge.assign(n * rank, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem c = queue[i];
    for (std::size_t k = 0; k < rank; ++k) {
      const Elem d = t.action[c * 2 * rank + 2 * k];
      if (seen[d]) continue;
      seen[d] = 1;
      t.tree_edge[c * rank + k] = 1;
      t.transversal[d] = t.transversal[c] * Word({static_cast<Letter>(k + 1)});
      queue.push_back(d);
    }
  }
  return t;
}

SchreierBasis schreier_generators(const CosetTable& table) {
  SchreierBasis b;
  b.table = table;
  const std::size_t n = table.index(), r = table.rank;
  b.edge_index.assign(n * r, -1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < r; ++k) {
      if (table.tree_edge[c * r + k]) continue;
      const Letter x = static_cast<Letter>(k + 1);
      const Elem d = table.step(static_cast<Elem>(c), x);
      Word w = table.transversal[c] * Word({x}) * table.transversal[d].inverse();
      if (w.empty()) invariant_failed("non-tree Schreier edge gave the trivial word");
      b.edge_index[c * r + k] = static_cast<std::int64_t>(b.words.size());
      b.generators.emplace_back(static_cast<Elem>(c), x);
      b.words.push_back(std::move(w));
    }
  }
  const auto expected = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(r) - 1) + 1;
  if (static_cast<std::int64_t>(b.words.size()) != expected)
    invariant_failed("Schreier basis size differs from the Nielsen-Schreier count");
  return b;
}

std::vector<std::int64_t> reidemeister_rewrite(const Word& w, const SchreierBasis& basis) {
  const auto& t = basis.table;
  std::vector<std::int64_t> out;
  Elem c = 0;
  for (Letter l : w.letters()) {
    const std::size_t k = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
    if (k >= t.rank) throw ArgumentError("letter exceeds rank");
    if (l > 0) {
      const auto idx = basis.edge_index[c * t.rank + k];
      if (idx >= 0) out.push_back(idx + 1);
      c = t.step(c, l);
    } else {
      const Elem d = t.step(c, l);
      const auto idx = basis.edge_index[d * t.rank + k];
      if (idx >= 0) out.push_back(-(idx + 1));
      c = d;
    }
  }
  if (c != 0) throw MembershipError("word " + to_string(w) + " is not in the subgroup");
  return out;
}

Word basis_product(const std::vector<std::int64_t>& rewritten, const SchreierBasis& basis) {
  std::vector<Letter> out;
  for (std::int64_t s : rewritten) {
    const std::size_t i = static_cast<std::size_t>(s > 0 ? s : -s) - 1;
    if (s == 0 || i >= basis.size()) throw ArgumentError("basis index out of range");
    const Word& w = basis.words[i];
    if (s > 0) {
      out.insert(out.end(), w.letters().begin(), w.letters().end());
    } else {
      const Word inv = w.inverse();
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    }
    if (out.size() > 4 * kMaxWordLength) check_length(out.size());
  }
  return Word(std::move(out));
}

}  // namespace xmod
