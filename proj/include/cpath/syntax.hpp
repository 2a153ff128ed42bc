#pragma once

#include <string>
#include <string_view>

#include "cpath/path.hpp"
#include "cpath/sexpr.hpp"
#include "cpath/term.hpp"

namespace cpath {

// Term grammar:
//   (var x) | (lam x T) | (app T T) | zero | (succ T) | star | base | 0 1 2 ...
// Path grammar:
//   (rho T) | (beta T [i ...]) | (eta T [i ...]) | (sigma P) | (tau P P)
//   | (mu P T) | (mu P succ) | (nu P T) | (xi x P) | (subl P P) | (subr P P)
//   | loop | (K P ... [T T])  for opaque K in mu1 mu2 mu2arg mu3arg xi1 xi2
//                             xipair nu0 xi0, with optional declared endpoints

Term parseTerm(std::string_view text);
Term termFromSexpr(const sexpr::Node& node);

/// Throws ParseError on syntax errors and CoherenceError (prefixed with the
/// line and column of the offending constructor) on endpoint mismatches.
Path parsePath(std::string_view text);
Path pathFromSexpr(const sexpr::Node& node);
Location locationFromSexpr(const sexpr::Node& node);

std::string printTerm(const Term& t);
std::string printPath(const Path& p);

/// Lambda notation for humans, e.g. "(λx.x) y". Not parseable.
std::string prettyTerm(const Term& t);

}  // namespace cpath
