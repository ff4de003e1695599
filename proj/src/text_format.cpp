#include "xmod/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "xmod/error.hpp"

namespace xmod {

namespace {

struct Line {
  std::size_t no = 0;
  std::vector<std::string> tokens;
};

struct Section {
  std::string name;
  std::size_t no = 0;
  std::vector<Line> body;
};

struct Document {
  std::vector<Line> preamble;
  std::vector<Section> sections;
  std::size_t last_line = 0;

  const Section* find(const std::string& name) const {
    for (const auto& s : sections)
      if (s.name == name) return &s;
    return nullptr;
  }
  const Section& get(const std::string& name) const {
    if (const auto* s = find(name)) return *s;
    throw ParseError(last_line, "missing section [" + name + "]");
  }
};

Document split(std::string_view text) {
  Document doc;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{no, {}};
    for (std::string tok; ls >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty()) continue;
    const std::string& first = line.tokens[0];
    if (first.front() == '[') {
      if (line.tokens.size() != 1 || first.back() != ']' || first.size() < 3)
        throw ParseError(no, "malformed section header");
      std::string name = first.substr(1, first.size() - 2);
      for (const auto& s : doc.sections)
        if (s.name == name) throw ParseError(no, "duplicate section [" + name + "]");
      doc.sections.push_back({std::move(name), no, {}});
    } else if (doc.sections.empty()) {
      doc.preamble.push_back(std::move(line));
    } else {
      doc.sections.back().body.push_back(std::move(line));
    }
  }
  doc.last_line = no;
  return doc;
}

std::int64_t parse_int(const std::string& tok, std::size_t line) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  const auto v = parse_int(tok, line);
  if (v < 0) throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
  return static_cast<std::size_t>(v);
}

Elem parse_element(const FiniteGroup& g, const std::string& tok, std::size_t line) {
  if (!tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-')) {
    const auto v = parse_int(tok, line);
    if (v < 0 || static_cast<std::size_t>(v) >= g.order())
      throw ParseError(line, "element " + tok + " out of range for a group of order " +
                                 std::to_string(g.order()));
    return static_cast<Elem>(v);
  }
  // Cycle labels contain spaces, so "(1,2,3)" also matches "(1 2 3)".
  std::string spaced = tok;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  if (g.has_labels())
    for (std::size_t e = 0; e < g.order(); ++e) {
      const std::string l = g.label(static_cast<Elem>(e));
      if (l == tok || l == spaced) return static_cast<Elem>(e);
    }
  throw ParseError(line, "unknown element '" + tok + "'");
}

// 1-based generator number to its position in g.generators().
std::size_t parse_generator(const FiniteGroup& g, const std::string& tok, std::size_t line) {
  const auto v = parse_int(tok, line);
  if (v < 1 || static_cast<std::size_t>(v) > g.generators().size())
    throw ParseError(line, "generator " + tok + " out of range (group has " +
                               std::to_string(g.generators().size()) + ")");
  return static_cast<std::size_t>(v - 1);
}

void expect_arrow(const Line& l, std::size_t pos) {
  if (l.tokens.size() != pos + 2 || l.tokens[pos] != "->")
    throw ParseError(l.no, "expected '... -> <element>'");
}

GroupPtr group_from_lines(const std::vector<Line>& body, std::size_t header_line,
                          const Limits& limits) {
  if (body.empty()) throw ParseError(header_line, "missing group");
  const Line& head = body.front();
  const std::string& kind = head.tokens[0];
  if (kind == "abelian") {
    std::vector<std::int64_t> factors;
    for (std::size_t i = 1; i < head.tokens.size(); ++i) {
      factors.push_back(parse_int(head.tokens[i], head.no));
      if (factors.back() < 2) throw ParseError(head.no, "cyclic orders must be >= 2");
    }
    if (body.size() > 1) throw ParseError(body[1].no, "unexpected line after abelian group");
    return factors.empty() ? trivial_group() : abelian_group(factors, limits);
  }
  if (kind == "perm") {
    if (head.tokens.size() != 2) throw ParseError(head.no, "expected 'perm <degree>'");
    const std::size_t degree = parse_count(head.tokens[1], head.no);
    if (degree == 0) throw ParseError(head.no, "degree must be positive");
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t i = 1; i < body.size(); ++i) {
      const Line& l = body[i];
      if (l.tokens.size() != degree)
        throw ParseError(l.no, "generator needs " + std::to_string(degree) + " images");
      std::vector<std::size_t> p;
      std::vector<char> seen(degree + 1, 0);
      for (const auto& tok : l.tokens) {
        const std::size_t v = parse_count(tok, l.no);
        if (v < 1 || v > degree || seen[v]) throw ParseError(l.no, "not a permutation");
        seen[v] = 1;
        p.push_back(v);
      }
      gens.push_back(std::move(p));
    }
    return group_from_permutations(degree, gens, limits);
  }
  if (kind == "table") {
    if (head.tokens.size() != 2) throw ParseError(head.no, "expected 'table <order>'");
    const std::size_t n = parse_count(head.tokens[1], head.no);
    if (n == 0) throw ParseError(head.no, "order must be positive");
    if (n > limits.order_bound)
      throw SizeLimitError("table of order " + std::to_string(n) + " exceeds order bound");
    std::size_t i = 1;
    std::vector<Elem> gens;
    if (i < body.size() && body[i].tokens[0] == "gens") {
      for (std::size_t k = 1; k < body[i].tokens.size(); ++k) {
        const std::size_t e = parse_count(body[i].tokens[k], body[i].no);
        if (e >= n) throw ParseError(body[i].no, "generator out of range");
        gens.push_back(static_cast<Elem>(e));
      }
      ++i;
    }
    if (body.size() - i != n)
      throw ParseError(body.back().no, "table needs " + std::to_string(n) + " rows");
    std::vector<Elem> table;
    for (; i < body.size(); ++i) {
      if (body[i].tokens.size() != n)
        throw ParseError(body[i].no, "row needs " + std::to_string(n) + " entries");
      for (const auto& tok : body[i].tokens) {
        const std::size_t e = parse_count(tok, body[i].no);
        if (e >= n) throw ParseError(body[i].no, "entry out of range");
        table.push_back(static_cast<Elem>(e));
      }
    }
    auto g = std::make_shared<const FiniteGroup>(
        FiniteGroup::from_table(n, std::move(table), {}, gens));
    if (!gens.empty() && subgroup_closure(*g, gens).size() != n)
      throw ArgumentError("listed generators do not generate the table");
    return g;
  }
  throw ParseError(head.no, "expected 'perm', 'abelian' or 'table', got '" + kind + "'");
}

// Lines [first, last) of body hold "gen i -> e" rows.
GroupHom hom_from_rows(const std::vector<Line>& body, std::size_t first, std::size_t last,
                       const GroupPtr& src, const GroupPtr& tgt) {
  const auto& gens = src->generators();
  std::vector<Elem> img(gens.size(), 0);
  std::vector<char> given(gens.size(), 0);
  for (std::size_t i = first; i < last; ++i) {
    const Line& l = body[i];
    if (l.tokens[0] != "gen") throw ParseError(l.no, "expected 'gen <i> -> <element>'");
    expect_arrow(l, 2);
    const std::size_t k = parse_generator(*src, l.tokens[1], l.no);
    if (given[k]) throw ParseError(l.no, "generator given twice");
    given[k] = 1;
    img[k] = parse_element(*tgt, l.tokens[3], l.no);
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (std::size_t k = 0; k < gens.size(); ++k) pairs.emplace_back(gens[k], img[k]);
  return make_hom(src, tgt, pairs);
}

GroupHom hom_from_lines(const std::vector<Line>& body, std::size_t header_line,
                        const GroupPtr& src, const GroupPtr& tgt) {
  if (body.empty() || body[0].tokens != std::vector<std::string>{"hom"})
    throw ParseError(body.empty() ? header_line : body[0].no, "expected 'hom'");
  return hom_from_rows(body, 1, body.size(), src, tgt);
}

// Extends per-generator maps X -> X to all of g by composition, so that
// elem(h x) = elem(h) o elem(x).  Maps are image arrays.
template <class Map, class Compose>
std::vector<Map> extend_over_group(const FiniteGroup& g, const std::vector<Map>& on_gens,
                                   const Map& identity, Compose compose,
                                   const std::string& axiom) {
  const auto& gens = g.generators();
  std::vector<Map> out(g.order());
  std::vector<char> set(g.order(), 0);
  out[0] = identity;
  set[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem h = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = g.mul(h, gens[k]);
      Map v = compose(out[h], on_gens[k]);
      if (!set[y]) {
        out[y] = std::move(v);
        set[y] = 1;
        queue.push_back(y);
      } else if (out[y] != v) {
        throw AxiomError(axiom, {h, gens[k]},
                         axiom + ": generator data violate a relation at element " +
                             std::to_string(y));
      }
    }
  }
  if (queue.size() != g.order()) invariant_failed("group generators do not generate");
  return out;
}

std::vector<Elem> compose_maps(const std::vector<Elem>& p, const std::vector<Elem>& q) {
  std::vector<Elem> r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Elem>(i);
  return id;
}

CrossedModule xmod_from_sections(const Document& doc, const std::string& prefix,
                                 const Limits& limits) {
  const auto& ts = doc.get(prefix + "T");
  const auto& gs = doc.get(prefix + "G");
  const auto& ms = doc.get(prefix + "mu");
  GroupPtr t = group_from_lines(ts.body, ts.no, limits);
  GroupPtr g = group_from_lines(gs.body, gs.no, limits);
  GroupHom mu = hom_from_lines(ms.body, ms.no, t, g);

  const auto& tg = t->generators();
  std::vector<std::vector<Elem>> gen_images(g->generators().size(), std::vector<Elem>(tg));
  if (const auto* as = doc.find(prefix + "action")) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (const auto& l : as->body) {
      expect_arrow(l, 2);
      const std::size_t gi = parse_generator(*g, l.tokens[0], l.no);
      const std::size_t ti = parse_generator(*t, l.tokens[1], l.no);
      if (!seen.emplace(std::pair{gi, ti}, l.no).second)
        throw ParseError(l.no, "action row given twice");
      gen_images[gi][ti] = parse_element(*t, l.tokens[3], l.no);
    }
  }
  std::vector<std::vector<Elem>> on_gens;
  for (const auto& imgs : gen_images) {
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t k = 0; k < tg.size(); ++k) pairs.emplace_back(tg[k], imgs[k]);
    const GroupHom h = make_hom(t, t, pairs);
    on_gens.emplace_back(h.images().begin(), h.images().end());
  }
  auto rows = extend_over_group(*g, on_gens, identity_map(t->order()), compose_maps, "action");
  std::vector<Elem> table;
  for (const auto& r : rows) table.insert(table.end(), r.begin(), r.end());
  return make_crossed_module(t, g, std::move(mu), GroupAction::from_table(g, t, std::move(table)));
}

XModMorphism morphism_from_section(const Document& doc, const std::string& name,
                                   const CrossedModule& src, const CrossedModule& tgt) {
  const auto& s = doc.get(name);
  std::size_t top = s.body.size(), bottom = s.body.size();
  for (std::size_t i = 0; i < s.body.size(); ++i) {
    const auto& tok = s.body[i].tokens;
    if (tok == std::vector<std::string>{"top"}) top = i;
    if (tok == std::vector<std::string>{"bottom"}) bottom = i;
  }
  if (top != 0 || bottom == s.body.size())
    throw ParseError(s.no, "[" + name + "] needs a 'top' block followed by a 'bottom' block");
  GroupHom f = hom_from_rows(s.body, top + 1, bottom, src.top(), tgt.top());
  GroupHom h = hom_from_rows(s.body, bottom + 1, s.body.size(), src.bottom(), tgt.bottom());
  return XModMorphism::make(src, tgt, std::move(f), std::move(h));
}

void require_no_preamble(const Document& doc) {
  if (!doc.preamble.empty())
    throw ParseError(doc.preamble.front().no, "text before the first section");
}

}  // namespace

std::string to_string(FileKind k) {
  switch (k) {
    case FileKind::group: return "group";
    case FileKind::crossed_module: return "crossed module";
    case FileKind::cat1: return "cat1-group";
    case FileKind::extension: return "extension";
    case FileKind::action: return "action";
  }
  return "?";
}

FileKind detect_kind(std::string_view text) {
  const Document doc = split(text);
  if (!doc.preamble.empty()) {
    const Line& l = doc.preamble.front();
    const std::string& k = l.tokens[0];
    if (k == "perm" || k == "abelian" || k == "table") {
      if (!doc.sections.empty()) throw ParseError(doc.sections.front().no, "unexpected section");
      return FileKind::group;
    }
    throw ParseError(l.no, "unrecognized header '" + k + "'");
  }
  if (doc.sections.empty()) throw ParseError(doc.last_line, "empty file");
  if (doc.find("epsilon")) return FileKind::action;
  if (doc.find("incl")) return FileKind::extension;
  if (doc.find("d0")) return FileKind::cat1;
  if (doc.find("mu")) return FileKind::crossed_module;
  throw ParseError(doc.sections.front().no,
                   "cannot tell the file kind from section [" + doc.sections.front().name + "]");
}

GroupPtr parse_group(std::string_view text, const Limits& limits) {
  const Document doc = split(text);
  if (!doc.sections.empty()) throw ParseError(doc.sections.front().no, "unexpected section");
  return group_from_lines(doc.preamble, doc.last_line, limits);
}

GroupHom parse_hom(std::string_view text, const GroupPtr& source, const GroupPtr& target) {
  const Document doc = split(text);
  if (!doc.sections.empty()) throw ParseError(doc.sections.front().no, "unexpected section");
  return hom_from_lines(doc.preamble, doc.last_line, source, target);
}

CrossedModule parse_crossed_module(std::string_view text, const Limits& limits) {
  const Document doc = split(text);
  require_no_preamble(doc);
  return xmod_from_sections(doc, "", limits);
}

Cat1Group parse_cat1(std::string_view text, const Limits& limits) {
  const Document doc = split(text);
  require_no_preamble(doc);
  const auto& gs = doc.get("G");
  GroupPtr g = group_from_lines(gs.body, gs.no, limits);
  const auto& s0 = doc.get("d0");
  const auto& s1 = doc.get("d1");
  return make_cat1(g, hom_from_lines(s0.body, s0.no, g, g), hom_from_lines(s1.body, s1.no, g, g));
}

XModExtension parse_extension(std::string_view text, const Limits& limits) {
  const Document doc = split(text);
  require_no_preamble(doc);
  CrossedModule kernel = xmod_from_sections(doc, "kernel.", limits);
  CrossedModule total = xmod_from_sections(doc, "total.", limits);
  CrossedModule quotient = xmod_from_sections(doc, "quotient.", limits);
  XModMorphism incl = morphism_from_section(doc, "incl", kernel, total);
  XModMorphism proj = morphism_from_section(doc, "proj", total, quotient);
  return {std::move(kernel), std::move(total), std::move(quotient), std::move(incl),
          std::move(proj)};
}

ActionFile parse_action(std::string_view text, const Limits& limits) {
  const Document doc = split(text);
  require_no_preamble(doc);
  CrossedModule base = xmod_from_sections(doc, "base.", limits);
  CrossedModule coeff = xmod_from_sections(doc, "coeff.", limits);
  const FiniteGroup &t = *base.top(), &g = *base.bottom();
  const FiniteGroup &a = *coeff.top(), &b = *coeff.bottom();

  // eps on generators of T, each a derivation fixed by its values on B's
  // generators.
  std::vector<std::vector<Elem>> eps_gen(t.generators().size(),
                                         std::vector<Elem>(b.generators().size(), 0));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (const auto& l : doc.get("epsilon").body) {
    expect_arrow(l, 2);
    const std::size_t ti = parse_generator(t, l.tokens[0], l.no);
    const std::size_t bi = parse_generator(b, l.tokens[1], l.no);
    if (!seen.emplace(std::pair{ti, bi}, l.no).second)
      throw ParseError(l.no, "epsilon row given twice");
    eps_gen[ti][bi] = parse_element(a, l.tokens[3], l.no);
  }
  std::vector<std::vector<Elem>> eps_on_gens;
  for (const auto& vals : eps_gen) {
    // d(h x) = d(h) . h.d(x)
    const auto& gens_b = b.generators();
    std::vector<Elem> d(b.order(), 0);
    std::vector<char> set(b.order(), 0);
    set[0] = 1;
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Elem h = queue[i];
      for (std::size_t k = 0; k < gens_b.size(); ++k) {
        const Elem y = b.mul(h, gens_b[k]);
        const Elem v = a.mul(d[h], coeff.act(h, vals[k]));
        if (!set[y]) {
          d[y] = v;
          set[y] = 1;
          queue.push_back(y);
        } else if (d[y] != v) {
          throw AxiomError("epsilon-derivation", {h, gens_b[k]},
                           "epsilon values on generators do not extend to a derivation");
        }
      }
    }
    eps_on_gens.push_back(std::move(d));
  }
  auto whitehead = [&](const std::vector<Elem>& d1, const std::vector<Elem>& d2) {
    return whitehead_product(coeff, Derivation{d1}, Derivation{d2}).map;
  };
  ActionData data;
  data.epsilon = extend_over_group(t, eps_on_gens, zero_derivation(coeff).map, whitehead,
                                   "epsilon-hom");

  std::vector<AutPair> rho_gen;
  std::vector<std::vector<Elem>> top_img(g.generators().size(), a.generators());
  std::vector<std::vector<Elem>> bottom_img(g.generators().size(), b.generators());
  seen.clear();
  for (const auto& l : doc.get("rho").body) {
    expect_arrow(l, 3);
    const std::size_t gi = parse_generator(g, l.tokens[0], l.no);
    const std::string& level = l.tokens[1];
    if (level != "top" && level != "bottom") throw ParseError(l.no, "expected 'top' or 'bottom'");
    const bool top = level == "top";
    const std::size_t i = parse_generator(top ? a : b, l.tokens[2], l.no);
    if (!seen.emplace(std::pair{gi, i + (top ? 0 : a.order() + 1)}, l.no).second)
      throw ParseError(l.no, "rho row given twice");
    (top ? top_img : bottom_img)[gi][i] = parse_element(top ? a : b, l.tokens[4], l.no);
  }
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    std::vector<std::pair<Elem, Elem>> pt, pb;
    for (std::size_t i = 0; i < a.generators().size(); ++i)
      pt.emplace_back(a.generators()[i], top_img[k][i]);
    for (std::size_t i = 0; i < b.generators().size(); ++i)
      pb.emplace_back(b.generators()[i], bottom_img[k][i]);
    auto ht = make_hom(coeff.top(), coeff.top(), pt);
    auto hb = make_hom(coeff.bottom(), coeff.bottom(), pb);
    rho_gen.push_back({{ht.images().begin(), ht.images().end()},
                       {hb.images().begin(), hb.images().end()}});
  }
  auto compose_pairs = [](const AutPair& p, const AutPair& q) {
    return AutPair{compose_maps(p.top, q.top), compose_maps(p.bottom, q.bottom)};
  };
  data.rho = extend_over_group(g, rho_gen, identity_pair(coeff), compose_pairs, "rho-hom");
  return {std::move(base), std::move(coeff), std::move(data)};
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << "table " << g.order() << "\n";
  out << "gens";
  for (Elem x : g.generators()) out << ' ' << x;
  out << "\n";
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b)
      out << (b ? " " : "") << g.mul(static_cast<Elem>(a), static_cast<Elem>(b));
    out << "\n";
  }
  return out.str();
}

std::string format_hom(const GroupHom& h) {
  std::ostringstream out;
  out << "hom\n";
  const auto& gens = h.source()->generators();
  for (std::size_t k = 0; k < gens.size(); ++k)
    out << "gen " << k + 1 << " -> " << h(gens[k]) << "\n";
  return out.str();
}

std::string format_crossed_module(const CrossedModule& x) {
  std::ostringstream out;
  out << "[T]\n" << format_group(*x.top()) << "[G]\n" << format_group(*x.bottom());
  out << "[mu]\n" << format_hom(x.boundary()) << "[action]\n";
  const auto& gg = x.bottom()->generators();
  const auto& tg = x.top()->generators();
  for (std::size_t i = 0; i < gg.size(); ++i)
    for (std::size_t k = 0; k < tg.size(); ++k)
      if (x.act(gg[i], tg[k]) != tg[k])
        out << i + 1 << ' ' << k + 1 << " -> " << x.act(gg[i], tg[k]) << "\n";
  return out.str();
}

std::string format_cat1(const Cat1Group& c) {
  std::ostringstream out;
  out << "[G]\n" << format_group(*c.group());
  out << "[d0]\n" << format_hom(c.d0()) << "[d1]\n" << format_hom(c.d1());
  return out.str();
}

}  // namespace xmod
