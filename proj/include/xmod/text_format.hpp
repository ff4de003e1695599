// Plain-text input files for groups, homomorphisms, crossed modules,
// cat1-groups, extensions and actions.
//
// '#' starts a comment.  A group is one of
//   perm <degree>          then one generator per line as images of 1..degree
//   abelian n1 n2 ...
//   table <n>              then optionally "gens e1 e2 ...", then n rows of
//                          the multiplication table
// A homomorphism is "hom" then "gen <i> -> <element>" lines, i counting the
// source generators from 1.  Elements are written as their index or their
// label, e.g. "(1,2,3)" in a permutation group or "(1,0)" in an abelian one.
// Generators without a line go to the identity.
//
// Composite files are split into "[name]" sections:
//   crossed module  [T] [G] [mu] [action]      action rows "g t -> t'"
//   cat1-group      [G] [d0] [d1]
//   extension       [kernel.*] [total.*] [quotient.*] with * in T, G, mu,
//                   action, then [incl] and [proj], each a "top" and a
//                   "bottom" homomorphism
//   action          [base.*] [coeff.*] [epsilon] [rho]
// In [action], g and t are generator numbers and t' an element; a missing
// row means g fixes t.  [epsilon] rows "t b -> a" give eps(t)(b) for
// generators t of the base top and b of the coefficient bottom; [rho] rows
// are "g top i -> a" or "g bottom i -> b".  Everything else is completed
// along words in the generators.
//
// Syntax errors throw ParseError with the line number.  Well-formed files
// describing invalid objects throw the validator's own error.

#ifndef XMOD_TEXT_FORMAT_HPP_
#define XMOD_TEXT_FORMAT_HPP_

#include <string>
#include <string_view>

#include "xmod/action.hpp"
#include "xmod/cat1.hpp"
#include "xmod/derived.hpp"

namespace xmod {

enum class FileKind { group, crossed_module, cat1, extension, action };

/// Decided by the first line (a group header) or by the section names.
FileKind detect_kind(std::string_view text);
std::string to_string(FileKind k);

GroupPtr parse_group(std::string_view text, const Limits& limits = {});
GroupHom parse_hom(std::string_view text, const GroupPtr& source, const GroupPtr& target);
CrossedModule parse_crossed_module(std::string_view text, const Limits& limits = {});
Cat1Group parse_cat1(std::string_view text, const Limits& limits = {});
XModExtension parse_extension(std::string_view text, const Limits& limits = {});

struct ActionFile {
  CrossedModule base, coeff;
  ActionData data;
};
ActionFile parse_action(std::string_view text, const Limits& limits = {});

/// Writers produce files the parsers read back to identical tables; groups
/// are written in table form.
std::string format_group(const FiniteGroup& g);
std::string format_hom(const GroupHom& h);
std::string format_crossed_module(const CrossedModule& x);
std::string format_cat1(const Cat1Group& c);

}  // namespace xmod

#endif  // XMOD_TEXT_FORMAT_HPP_
