#include "doctest.h"

#include "xmod/catalog.hpp"
#include "xmod/error.hpp"
#include "xmod/text_format.hpp"

using namespace xmod;

namespace {

const char* kS3 = "perm 3\n2 3 1\n2 1 3\n";

std::size_t parse_error_line(const auto& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("text_format") {

TEST_CASE("groups") {
  auto s3 = parse_group(kS3);
  CHECK(s3->order() == 6);
  CHECK(s3->generators().size() == 2);
  CHECK_FALSE(s3->is_abelian());
  CHECK(parse_group("abelian 2 2")->order() == 4);
  CHECK(parse_group("abelian")->order() == 1);
  CHECK(parse_group("# comment\n  abelian 3 # trailing\n")->order() == 3);

  auto back = parse_group(format_group(*s3));
  CHECK(back->same_table(*s3));
  CHECK(back->generators() == s3->generators());
  auto q8 = quaternion_group();
  CHECK(parse_group(format_group(*q8))->same_table(*q8));
}

TEST_CASE("homomorphisms by index and by label") {
  auto s3 = parse_group(kS3);
  auto c2 = parse_group("abelian 2");
  auto sign = parse_hom("hom\ngen 1 -> 0\ngen 2 -> (1)\n", s3, c2);
  CHECK(sign.is_surjective());
  CHECK(kernel(sign).size() == 3);
  // The 3-cycle by its label.
  auto h = parse_hom("hom\ngen 1 -> (1,2,3)\n", cyclic_group(3), s3);
  CHECK(s3->label(h(1)) == "(1 2 3)");
  CHECK(parse_hom(format_hom(sign), s3, c2) == sign);
  CHECK_THROWS_AS(parse_hom("hom\ngen 1 -> 1\n", cyclic_group(3), c2), NotHomomorphismError);
}

TEST_CASE("crossed modules") {
  const char* ok =
      "[T]\nabelian 3\n"
      "[G]\nabelian 2\n"
      "[mu]\nhom\n"
      "[action]\n1 1 -> 2   # inversion\n";
  auto x = parse_crossed_module(ok);
  CHECK(x.top()->order() == 3);
  CHECK(x.act(1, 1) == 2);
  CHECK(x.act(1, 2) == 1);
  CHECK(detect_kind(ok) == FileKind::crossed_module);

  auto y = parse_crossed_module(format_crossed_module(x));
  CHECK(y.top()->same_table(*x.top()));
  CHECK(y.action().table().size() == x.action().table().size());
  CHECK(std::equal(y.action().table().begin(), y.action().table().end(),
                   x.action().table().begin()));

  // (S3, 1, 0) with trivial action fails Peiffer.
  std::string bad = std::string("[T]\n") + kS3 + "[G]\nabelian\n[mu]\nhom\n";
  try {
    parse_crossed_module(bad);
    FAIL("accepted a non-crossed module");
  } catch (const AxiomError& e) {
    CHECK(e.axiom() == "peiffer");
    CHECK(e.witness().size() == 2);
  }

  // Action rows that are not a homomorphism of G.
  CHECK_THROWS_AS(parse_crossed_module("[T]\nabelian 3\n[G]\nabelian 3\n[mu]\nhom\n"
                                       "[action]\n1 1 -> 2\n"),
                  AxiomError);
}

TEST_CASE("cat1-groups") {
  // cat1-group of (C2, C2, id) on C2 x C2 = T x G.
  const char* text =
      "[G]\nabelian 2 2\n"
      "[d0]\nhom\ngen 1 -> 0\ngen 2 -> (0,1)\n"
      "[d1]\nhom\ngen 1 -> (0,1)\ngen 2 -> (0,1)\n";
  CHECK(detect_kind(text) == FileKind::cat1);
  auto c = parse_cat1(text);
  CHECK(c.group()->order() == 4);
  CHECK(c.d1()(2) == 1);
  auto back = parse_cat1(format_cat1(c));
  CHECK(back.d0() == c.d0());
  CHECK(back.d1() == c.d1());
  CHECK_THROWS_AS(parse_cat1("[G]\nabelian 2 2\n[d0]\nhom\ngen 1 -> 1\n[d1]\nhom\ngen 2 -> 2\n"),
                  AxiomError);
}

TEST_CASE("extensions") {
  const char* text =
      "[kernel.T]\nabelian 2\n[kernel.G]\nabelian\n[kernel.mu]\nhom\n"
      "[total.T]\nabelian 4\n[total.G]\nabelian\n[total.mu]\nhom\n"
      "[quotient.T]\nabelian 2\n[quotient.G]\nabelian\n[quotient.mu]\nhom\n"
      "[incl]\ntop\ngen 1 -> 2\nbottom\n"
      "[proj]\ntop\ngen 1 -> 1\nbottom\n";
  CHECK(detect_kind(text) == FileKind::extension);
  auto e = parse_extension(text);
  CHECK_NOTHROW(validate_extension(e));
  CHECK(e.total.top()->order() == 4);
  CHECK(parse_error_line([&] {
          parse_extension("[kernel.T]\nabelian 2\n[incl]\ngen 1 -> 2\n");
        }) > 0);
}

TEST_CASE("action files") {
  // C2 = <g> inverts C3; eps = 0.
  const char* inv =
      "[base.T]\nabelian\n[base.G]\nabelian 2\n[base.mu]\nhom\n"
      "[coeff.T]\nabelian 3\n[coeff.G]\nabelian\n[coeff.mu]\nhom\n"
      "[epsilon]\n"
      "[rho]\n1 top 1 -> 2\n";
  CHECK(detect_kind(inv) == FileKind::action);
  auto f = parse_action(inv);
  CHECK(f.data.rho[1].top == std::vector<Elem>{0, 2, 1});
  CHECK_NOTHROW(XModAction::make(f.base, f.coeff, f.data));

  // (C2, 1, 0) acting on (C2, C2, 0) through the nonzero derivation.
  const char* der =
      "[base.T]\nabelian 2\n[base.G]\nabelian\n[base.mu]\nhom\n"
      "[coeff.T]\nabelian 2\n[coeff.G]\nabelian 2\n[coeff.mu]\nhom\n"
      "[epsilon]\n1 1 -> 1\n"
      "[rho]\n";
  auto d = parse_action(der);
  CHECK(d.data.epsilon[1] == std::vector<Elem>{0, 1});
  CHECK(d.data.epsilon[0] == std::vector<Elem>{0, 0});
  CHECK_NOTHROW(XModAction::make(d.base, d.coeff, d.data));

  // eps values that are no derivation: C3 -> C2 sending the generator to 1.
  const char* bad =
      "[base.T]\nabelian 2\n[base.G]\nabelian\n[base.mu]\nhom\n"
      "[coeff.T]\nabelian 2\n[coeff.G]\nabelian 3\n[coeff.mu]\nhom\n"
      "[epsilon]\n1 1 -> 1\n"
      "[rho]\n";
  CHECK_THROWS_AS(parse_action(bad), AxiomError);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line([] { parse_group("perm 3\n1 2\n"); }) == 2);
  CHECK(parse_error_line([] { parse_group("perm 3\n1 1 2\n"); }) == 2);
  CHECK(parse_error_line([] { parse_group("\n\ncyclic 3\n"); }) == 3);
  CHECK(parse_error_line([] { parse_group("abelian 2 x\n"); }) == 1);
  CHECK(parse_error_line([] { parse_group("table 2\n0 1\n"); }) == 2);
  CHECK(parse_error_line([] { detect_kind("[T\nabelian 2\n"); }) == 1);
  CHECK(parse_error_line([] { detect_kind("hello\n"); }) == 1);
  CHECK(parse_error_line([] { detect_kind("[stuff]\n"); }) == 1);
  CHECK(parse_error_line([] { parse_crossed_module("[T]\nabelian 2\n[G]\nabelian 2\n"); }) == 4);
  CHECK(parse_error_line([] {
          parse_crossed_module("[T]\nabelian 2\n[G]\nabelian 2\n[mu]\nhom\ngen 1 -> 5\n");
        }) == 7);
  CHECK(parse_error_line([] {
          parse_crossed_module("[T]\nabelian 2\n[G]\nabelian 2\n[mu]\nhom\ngen 2 -> 1\n");
        }) == 7);
  CHECK(parse_error_line([] {
          parse_crossed_module("[T]\nabelian 2\n[G]\nabelian 2\n[mu]\nhom\n[action]\n1 1 => 1\n");
        }) == 8);
  CHECK(parse_error_line([] { parse_group("abelian 2\n[T]\n"); }) == 2);
  CHECK(parse_error_line([] {
          parse_crossed_module("[T]\nabelian 2\n[T]\nabelian 2\n");
        }) == 3);
  CHECK_THROWS_AS(parse_group("table 2\ngens 0\n0 1\n1 0\n"), ArgumentError);
}

}  // TEST_SUITE
