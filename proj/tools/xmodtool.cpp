// xmodtool: command-line front end for the crossed-module library.
//
// Exit codes: 0 ok (or witness found), 1 invalid input object, 2 usage,
// parse or size-bound error, 3 certify found no witness, 4 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xmod/action.hpp"
#include "xmod/cat1.hpp"
#include "xmod/certifier.hpp"
#include "xmod/derived.hpp"
#include "xmod/error.hpp"
#include "xmod/lattice.hpp"
#include "xmod/text_format.hpp"

using namespace xmod;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kNoWitness = 3, kInternal = 4 };

struct Options {
  std::string path;
  bool json = false;
  std::size_t order_bound = Limits{}.order_bound;
  std::size_t enum_bound = Limits{}.enum_bound;
  std::vector<std::int64_t> m;
  std::size_t rank = 0;

  Limits limits() const { return {order_bound, enum_bound}; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json map_json(std::span<const Elem> m) { return Json(std::vector<Elem>(m.begin(), m.end())); }

Json group_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["generators"] = g.generators();
  return j;
}

Json xmod_json(const CrossedModule& x) {
  Json j;
  j["T"] = group_json(*x.top());
  j["G"] = group_json(*x.bottom());
  j["mu"] = map_json(x.boundary().images());
  return j;
}

Json cat1_json(const Cat1Group& c) {
  Json j;
  j["G"] = group_json(*c.group());
  j["d0"] = map_json(c.d0().images());
  j["d1"] = map_json(c.d1().images());
  return j;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_check(const Options& o) {
  const std::string text = read_file(o.path);
  const FileKind kind = detect_kind(text);
  const Limits lim = o.limits();
  Json j;
  j["kind"] = to_string(kind);
  std::ostringstream out;
  switch (kind) {
    case FileKind::group: {
      auto g = parse_group(text, lim);
      j["group"] = group_json(*g);
      out << "group of order " << g->order() << (g->is_abelian() ? ", abelian" : "") << "\n";
      break;
    }
    case FileKind::crossed_module: {
      auto x = parse_crossed_module(text, lim);
      j["xmod"] = xmod_json(x);
      out << "crossed module (" << x.top()->order() << ", " << x.bottom()->order() << ")\n";
      break;
    }
    case FileKind::cat1: {
      auto c = parse_cat1(text, lim);
      j["cat1"] = cat1_json(c);
      out << "cat1-group of order " << c.group()->order() << "\n";
      break;
    }
    case FileKind::extension: {
      auto e = parse_extension(text, lim);
      validate_extension(e);
      out << "extension with kernel (" << e.kernel.top()->order() << ", "
          << e.kernel.bottom()->order() << ") and quotient (" << e.quotient.top()->order()
          << ", 1)\n";
      break;
    }
    case FileKind::action: {
      auto f = parse_action(text, lim);
      XModAction::make(f.base, f.coeff, f.data, lim);
      auto routes = module_routes(f.base, f.coeff, f.data, lim);
      const bool module = routes.singular_cat1 && routes.split_extension && routes.actor_morphism;
      if (!module && (routes.singular_cat1 || routes.split_extension || routes.actor_morphism))
        invariant_failed("module characterizations disagree");
      j["module"] = module;
      out << "action" << (module ? ", a module" : ", not a module: " + routes.reason) << "\n";
      break;
    }
  }
  j["valid"] = true;
  out << "axioms OK\n";
  emit(o, j, out.str());
  return kOk;
}

int cmd_equiv(const Options& o) {
  const std::string text = read_file(o.path);
  const FileKind kind = detect_kind(text);
  const Limits lim = o.limits();
  Json j;
  std::ostringstream out;
  if (kind == FileKind::crossed_module) {
    auto x = parse_crossed_module(text, lim);
    auto c = cm_to_cat1(x, lim).cat1;
    auto back = cat1_to_cm(c).xmod;
    auto iso = find_xmod_isomorphism(x, back);
    if (!iso) invariant_failed("crossed module does not round trip");
    j["input"] = "crossed module";
    j["cat1"] = cat1_json(c);
    j["round_trip"] = {{"top", map_json(iso->top().images())},
                       {"bottom", map_json(iso->bottom().images())}};
    out << "cat1-group of order " << c.group()->order() << ":\n" << format_cat1(c);
    out << "round trip isomorphism X -> X':\n" << "[top]\n" << format_hom(iso->top())
        << "[bottom]\n" << format_hom(iso->bottom());
  } else if (kind == FileKind::cat1) {
    auto c = parse_cat1(text, lim);
    auto x = cat1_to_cm(c).xmod;
    auto back = cm_to_cat1(x, lim).cat1;
    auto iso = cat1_iso(c, back);
    if (!iso) invariant_failed("cat1-group does not round trip");
    j["input"] = "cat1-group";
    j["xmod"] = xmod_json(x);
    j["round_trip"] = map_json(iso->images());
    out << "crossed module (" << x.top()->order() << ", " << x.bottom()->order() << "):\n"
        << format_crossed_module(x);
    out << "round trip isomorphism C -> C':\n" << format_hom(*iso);
  } else {
    throw ParseError(1, "equiv needs a crossed-module or cat1-group file, got " + to_string(kind));
  }
  emit(o, j, out.str());
  return kOk;
}

Json eps_json(const std::vector<std::vector<Elem>>& eps) {
  Json j = Json::array();
  for (const auto& row : eps) j.push_back(row);
  return j;
}

void print_eps(std::ostream& out, const std::string& name,
               const std::vector<std::vector<Elem>>& eps) {
  out << name << " (row m, column b):\n";
  for (std::size_t m = 0; m < eps.size(); ++m) {
    out << "  " << m << ":";
    for (Elem v : eps[m]) out << ' ' << v;
    out << "\n";
  }
}

int cmd_three_term(const Options& o) {
  const std::string text = read_file(o.path);
  if (detect_kind(text) != FileKind::extension)
    throw ParseError(1, "three-term needs an extension file");
  const Limits lim = o.limits();
  auto e = parse_extension(text, lim);
  validate_extension(e);
  auto s = three_term(e, lim);
  auto r = exactness_report(s);
  auto orders = [](const XModModule& m) {
    return Json::array({m.coeff.top()->order(), m.coeff.bottom()->order()});
  };
  Json j;
  j["left"] = orders(s.left);
  j["mid"] = orders(s.mid);
  j["right"] = orders(s.right);
  j["eps_mid"] = eps_json(s.mid.action.data().epsilon);
  j["eps_left"] = eps_json(s.left.action.data().epsilon);
  j["u"] = map_json(s.u_map.top().images());
  j["f_bar"] = map_json(s.f_map.top().images());
  j["right_surjective"] = r.right_surjective;
  j["middle_exact"] = r.middle_exact;
  j["u_injective"] = r.u_injective;

  std::ostringstream out;
  auto line = [&](const char* name, const XModModule& m) {
    out << name << " (" << m.coeff.top()->order() << ", " << m.coeff.bottom()->order() << ")\n";
  };
  line("N/[G,N] x G_ab:", s.left);
  line("T/J x G_ab:    ", s.mid);
  line("M x 1:         ", s.right);
  print_eps(out, "eps'", s.mid.action.data().epsilon);
  print_eps(out, "eps''", s.left.action.data().epsilon);
  out << std::boolalpha << "right_surjective " << r.right_surjective << "\nmiddle_exact "
      << r.middle_exact << "\nu_injective " << r.u_injective << "\n";
  emit(o, j, out.str());
  return kOk;
}

int cmd_certify(const Options& o) {
  auto c = certify_nonbalanced(o.m, o.rank, o.limits());
  if (o.json)
    std::cout << certificate_json(c) << "\n";
  else
    std::cout << c.text;
  return c.witness ? kOk : kNoWitness;
}

int cmd_h2(const Options& o) {
  for (auto n : o.m)
    if (n < 2) throw PreconditionError("invariants must be >= 2");
  auto h = schur_multiplier_abelian(o.m);
  Json j;
  j["m"] = o.m;
  j["h2"] = {{"rank", h.rank()}, {"torsion", h.torsion()}, {"text", h.to_string()}};
  emit(o, j, h.to_string() + "\n");
  return kOk;
}

Json matrix_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    j.push_back(row);
  }
  return j;
}

int cmd_snf(const Options& o) {
  const std::string text = read_file(o.path);
  const IntMatrix a = parse_matrix(text);
  auto s = smith_normal_form(a);
  Json j;
  j["u"] = matrix_json(s.u);
  j["d"] = matrix_json(s.d);
  j["v"] = matrix_json(s.v);
  j["rank"] = s.rank;
  j["cokernel"] = cokernel_invariants(a).to_string();
  std::ostringstream out;
  out << "U\n" << format_matrix(s.u) << "D\n" << format_matrix(s.d) << "V\n"
      << format_matrix(s.v) << "cokernel " << cokernel_invariants(a).to_string() << "\n";
  emit(o, j, out.str());
  return kOk;
}

std::vector<std::int64_t> parse_invariants(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.empty())
      throw CLI::ValidationError("--m", "expected comma-separated integers, got '" + s + "'");
    out.push_back(v);
  }
  return out;
}

int report_invalid(const Options& o, const std::exception& e, const AxiomError* ax) {
  if (o.json) {
    Json j;
    j["valid"] = false;
    j["error"] = e.what();
    if (ax) {
      j["axiom"] = ax->axiom();
      j["witness"] = ax->witness();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "invalid: " << e.what() << "\n";
    if (ax) {
      std::cout << "axiom " << ax->axiom() << ", witness";
      for (auto w : ax->witness()) std::cout << ' ' << w;
      std::cout << "\n";
    }
  }
  return kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed modules, cat1-groups and the Hopf-formula certificate"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--order-bound", o.order_bound, "largest group built as a table")
      ->envname("XMOD_ORDER_BOUND")
      ->check(CLI::PositiveNumber);
  app.add_option("--enum-bound", o.enum_bound, "largest candidate set enumerated")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "machine-readable output");

  auto* check = app.add_subcommand("check", "validate a group, crossed module, cat1-group, "
                                            "extension or action file");
  check->add_option("file", o.path)->required();
  auto* equiv = app.add_subcommand("equiv", "convert between crossed modules and cat1-groups");
  equiv->add_option("file", o.path)->required();
  auto* three = app.add_subcommand("three-term", "three-term sequence of an extension");
  three->add_option("file", o.path)->required();
  std::string m_text;
  auto* certify = app.add_subcommand("certify", "non-balanced certificate from M");
  certify->add_option("--m", m_text, "invariants of M, e.g. 2,2")->required();
  certify->add_option("--rank", o.rank, "rank of the free group")->required();
  auto* h2 = app.add_subcommand("h2", "Schur multiplier of an abelian group");
  h2->add_option("--m", m_text, "invariants of M")->required();
  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf->add_option("file", o.path)->required();

  try {
    app.parse(argc, argv);
    if (!m_text.empty()) o.m = parse_invariants(m_text);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*equiv) return cmd_equiv(o);
    if (*three) return cmd_three_term(o);
    if (*certify) return cmd_certify(o);
    if (*h2) return cmd_h2(o);
    if (*snf) return cmd_snf(o);
  } catch (const CLI::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << o.path << ": " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << " (raise --order-bound or --enum-bound)\n";
    return kUsage;
  } catch (const WordOverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AxiomError& e) {
    return report_invalid(o, e, &e);
  } catch (const Error& e) {
    return report_invalid(o, e, nullptr);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
