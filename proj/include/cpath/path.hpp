#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpath/term.hpp"

namespace cpath {

/// Constructors of computational paths.
///
/// Mu1 .. Xi0 are opaque: their introduction rules are not part of the
/// term language, so they only carry the endpoints declared when they were
/// built. They exist so the rewrite rules that mention them can match.
enum class PathKind : std::uint8_t {
    Rho,
    Beta,
    Eta,
    Sigma,
    Tau,
    Mu,
    Nu,
    Xi,
    SubL,
    SubR,
    Loop,
    Mu1,
    Mu2,
    Mu2Arg,
    Mu3Arg,
    Xi1,
    Xi2,
    XiPair,
    Nu0,
    Xi0,
};

inline constexpr std::size_t kPathKindCount = 20;

/// Grammar keyword, e.g. "tau" or "mu3arg".
const char* keyword(PathKind kind);
std::optional<PathKind> pathKindFromKeyword(std::string_view word);
bool isOpaque(PathKind kind);
/// Number of sub-path children a node of this kind has.
std::size_t pathArity(PathKind kind);

class PathNode;

/// Immutable proof object with a source and target term. Copies share
/// structure. The static constructors validate endpoint coherence; see
/// `raw` for the unvalidated variants used while rewriting.
class Path {
   public:
    static Path rho(Term t);
    /// One beta-contraction of the redex at loc inside t.
    static Path beta(Term t, Location loc);
    static Path eta(Term t, Location loc);
    static Path sigma(Path p);
    /// Throws CoherenceError unless target(p) alpha-equals source(q).
    static Path tau(Path p, Path q);
    /// fn applied on the left of both endpoints: fn M = fn M'.
    static Path mu(Path p, Term fn);
    /// The successor constructor applied to both endpoints.
    static Path muSucc(Path p);
    static Path nu(Path p, Term arg);
    static Path xi(std::string binder, Path p);
    /// x =r C[y], y =s u  gives  x = C[u]. Requires source(s) to occur in target(r).
    static Path subL(Path r, Path s);
    /// x =r w, C[w] =s u  gives  C[x] = u. Requires target(r) to occur in source(s).
    static Path subR(Path r, Path s);
    static Path loop();
    /// Opaque constructor. Declared endpoints default to the first child's.
    static Path opaque(PathKind kind, std::vector<Path> children,
                       std::optional<std::pair<Term, Term>> endpoints = std::nullopt);

    PathKind kind() const;
    const Term& source() const;
    const Term& target() const;

    /// Rho: the reflexive term. Beta/Eta: the pre-contraction term.
    /// Mu: the applied function (absent for the successor congruence).
    /// Nu: the argument.
    const Term& term() const;
    bool isSuccCongruence() const;
    const std::string& binder() const;
    const Location& location() const;

    std::size_t childCount() const;
    const Path& child(std::size_t index) const;
    std::span<const Path> children() const;

    /// Same node with one child replaced. Not validated; derived endpoints
    /// are recomputed, declared ones kept.
    Path withChild(std::size_t index, Path replacement) const;
    /// Opaque node with the declared endpoints replaced.
    Path withEndpoints(Term source, Term target) const;

    std::size_t hash() const;
    std::size_t size() const;
    const PathNode* node() const { return node_.get(); }

   private:
    friend struct PathBuilder;
    explicit Path(std::shared_ptr<const PathNode> node) : node_(std::move(node)) {}

    std::shared_ptr<const PathNode> node_;
};

class PathNode {
   public:
    PathKind kind = PathKind::Rho;
    Term source = Term::base();
    Term target = Term::base();
    std::optional<Term> term;
    std::string binder;
    Location location;
    std::vector<Path> children;
    std::size_t hash = 0;
    std::size_t size = 1;
};

/// Constructors without coherence checks. Endpoints follow the same
/// derivation rules as the checked ones.
namespace raw {
Path tau(Path p, Path q);
Path subL(Path r, Path s);
Path subR(Path r, Path s);
Path opaque(PathKind kind, std::vector<Path> children, Term source, Term target);
}  // namespace raw

/// Structural equality with terms compared up to alpha and xi binders by name.
bool samePath(const Path& a, const Path& b);
/// Structural equality that also identifies xi binders up to renaming.
bool alphaEqPath(const Path& a, const Path& b);

/// Every tau junction, subterm-substitution occurrence and atomic redex
/// holds throughout p.
bool wellFormed(const Path& p);
/// Describes the first violation found, or nullopt when p is well formed.
std::optional<std::string> firstIncoherence(const Path& p);

const Path& subpathAt(const Path& p, const Location& loc);
Path replaceSubpath(const Path& p, const Location& loc, Path replacement);

/// r after s, i.e. tau(s, r). Throws CoherenceError on an endpoint mismatch.
Path compose(const Path& r, const Path& s);
Path inverse(const Path& p);

/// True if p mentions no atom other than rho (and uses no constructor
/// besides sigma, tau, mu, nu, xi).
bool isRhoGenerated(const Path& p);

}  // namespace cpath
