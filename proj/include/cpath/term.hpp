#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cpath {

/// Sequence of child indices from a tree root. Used both for redex
/// locations inside terms and for rewrite positions inside paths.
struct Location {
    std::vector<std::uint32_t> steps;

    Location() = default;
    Location(std::initializer_list<std::uint32_t> s) : steps(s) {}
    explicit Location(std::vector<std::uint32_t> s) : steps(std::move(s)) {}

    bool isRoot() const { return steps.empty(); }
    Location child(std::uint32_t index) const;
    Location prefixed(const Location& outer) const;

    friend bool operator==(const Location&, const Location&) = default;
};

std::string toString(const Location& loc);

class TermNode;

/// Immutable lambda term extended with zero/succ, the unit element and the
/// circle base point. Copies share structure.
///
/// operator== is alpha-equivalence; use identical() for exact syntax.
class Term {
   public:
    enum class Kind : std::uint8_t { Var, Lam, App, Zero, Succ, Star, Base };

    static Term var(std::string name);
    static Term lam(std::string binder, Term body);
    static Term app(Term fn, Term arg);
    static Term zero();
    static Term succ(Term pred);
    static Term star();
    static Term base();
    static Term numeral(std::uint64_t n);

    Kind kind() const;
    /// Variable name for Var, binder for Lam.
    const std::string& name() const;
    const Term& body() const;  // Lam
    const Term& fn() const;    // App
    const Term& arg() const;   // App
    const Term& pred() const;  // Succ

    std::size_t childCount() const;
    const Term& child(std::size_t index) const;
    Term withChild(std::size_t index, Term replacement) const;

    /// Alpha-invariant structural hash (bound variables by depth, free by name).
    std::size_t hash() const;
    std::size_t size() const;

    bool identical(const Term& other) const;
    const TermNode* node() const { return node_.get(); }

    friend bool operator==(const Term& a, const Term& b);

   private:
    explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
    static Term make(Kind kind, std::string name, std::vector<Term> children);

    std::shared_ptr<const TermNode> node_;
};

class TermNode {
   public:
    Term::Kind kind;
    std::string name;
    std::vector<Term> children;
    std::size_t hash = 0;
    std::size_t size = 1;
};

/// Binder pairs in scope on the two sides of a comparison, innermost last.
using BinderEnv = std::vector<std::pair<std::string, std::string>>;

bool alphaEq(const Term& a, const Term& b);
bool alphaEqUnder(const Term& a, const Term& b, BinderEnv& env);

std::set<std::string> freeVars(const Term& t);
bool occursFree(const std::string& name, const Term& t);
bool isClosed(const Term& t);

/// Value of a canonical numeral (succ^n zero), if t is one.
std::optional<std::uint64_t> numeralValue(const Term& t);

/// Capture-avoiding substitution body[var := value]. Binders that would
/// capture a free variable of value are renamed by appending primes.
Term substitute(const Term& body, const std::string& var, const Term& value);

/// Replaces every subterm alpha-equal to `from` by `to`. Plain structural
/// replacement; used for subterm substitution paths.
Term replaceAll(const Term& t, const Term& from, const Term& to);
bool containsSubterm(const Term& t, const Term& sub);

enum class RedexKind : std::uint8_t { Beta, Eta };

const char* toString(RedexKind kind);

struct Redex {
    Location location;
    RedexKind kind;

    friend bool operator==(const Redex&, const Redex&) = default;
};

bool isBetaRedex(const Term& t);
bool isEtaRedex(const Term& t);

/// All redexes in preorder: a node before its children, children left to right.
std::vector<Redex> findRedexes(const Term& t);

/// Subterm at loc; throws PositionError if the location leaves the tree.
const Term& subtermAt(const Term& t, const Location& loc);
Term replaceAt(const Term& t, const Location& loc, Term replacement);

/// Contracts the redex at loc once. Throws PositionError when loc is not
/// inside t or does not designate a redex.
Term contractAt(const Term& t, const Location& loc);

/// Kind of redex at loc, if any.
std::optional<RedexKind> redexKindAt(const Term& t, const Location& loc);

}  // namespace cpath

template <>
struct std::hash<cpath::Term> {
    std::size_t operator()(const cpath::Term& t) const { return t.hash(); }
};
