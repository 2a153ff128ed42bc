#include "cpath/path.hpp"

#include <array>
#include <string_view>

#include "cpath/error.hpp"
#include "cpath/syntax.hpp"

namespace cpath {

namespace {

struct KindInfo {
    PathKind kind;
    const char* keyword;
    std::size_t arity;
    bool opaque;
};

constexpr std::array<KindInfo, kPathKindCount> kKinds{{
    {PathKind::Rho, "rho", 0, false},
    {PathKind::Beta, "beta", 0, false},
    {PathKind::Eta, "eta", 0, false},
    {PathKind::Sigma, "sigma", 1, false},
    {PathKind::Tau, "tau", 2, false},
    {PathKind::Mu, "mu", 1, false},
    {PathKind::Nu, "nu", 1, false},
    {PathKind::Xi, "xi", 1, false},
    {PathKind::SubL, "subl", 2, false},
    {PathKind::SubR, "subr", 2, false},
    {PathKind::Loop, "loop", 0, false},
    {PathKind::Mu1, "mu1", 1, true},
    {PathKind::Mu2, "mu2", 1, true},
    {PathKind::Mu2Arg, "mu2arg", 2, true},
    {PathKind::Mu3Arg, "mu3arg", 3, true},
    {PathKind::Xi1, "xi1", 1, true},
    {PathKind::Xi2, "xi2", 1, true},
    {PathKind::XiPair, "xipair", 2, true},
    {PathKind::Nu0, "nu0", 1, true},
    {PathKind::Xi0, "xi0", 1, true},
}};

const KindInfo& info(PathKind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

const char* keyword(PathKind kind) { return info(kind).keyword; }

std::optional<PathKind> pathKindFromKeyword(std::string_view word) {
    for (const auto& k : kKinds)
        if (word == k.keyword) return k.kind;
    return std::nullopt;
}

bool isOpaque(PathKind kind) { return info(kind).opaque; }
std::size_t pathArity(PathKind kind) { return info(kind).arity; }

// Single place that assembles nodes, derives endpoints and caches hashes.
struct PathBuilder {
    static Path finish(std::shared_ptr<PathNode> node) {
        std::size_t h = mix(0x7a3f, static_cast<std::size_t>(node->kind));
        std::size_t size = 1;
        if (node->term) h = mix(h, node->term->hash());
        for (auto step : node->location.steps) h = mix(h, step + 1);
        for (const Path& c : node->children) {
            h = mix(h, c.hash());
            size += c.size();
        }
        if (isOpaque(node->kind)) {
            h = mix(h, node->source.hash());
            h = mix(h, node->target.hash());
        }
        node->hash = h;
        node->size = size;
        return Path(std::move(node));
    }

    static void derive(PathNode& n) {
        switch (n.kind) {
            case PathKind::Rho:
                n.source = *n.term;
                n.target = *n.term;
                break;
            case PathKind::Beta:
            case PathKind::Eta:
                n.source = *n.term;
                n.target = contractAt(*n.term, n.location);
                break;
            case PathKind::Sigma:
                n.source = n.children[0].target();
                n.target = n.children[0].source();
                break;
            case PathKind::Tau:
                n.source = n.children[0].source();
                n.target = n.children[1].target();
                break;
            case PathKind::Mu:
                if (n.term) {
                    n.source = Term::app(*n.term, n.children[0].source());
                    n.target = Term::app(*n.term, n.children[0].target());
                } else {
                    n.source = Term::succ(n.children[0].source());
                    n.target = Term::succ(n.children[0].target());
                }
                break;
            case PathKind::Nu:
                n.source = Term::app(n.children[0].source(), *n.term);
                n.target = Term::app(n.children[0].target(), *n.term);
                break;
            case PathKind::Xi:
                n.source = Term::lam(n.binder, n.children[0].source());
                n.target = Term::lam(n.binder, n.children[0].target());
                break;
            case PathKind::SubL: {
                const Path& r = n.children[0];
                const Path& s = n.children[1];
                n.source = r.source();
                n.target = replaceAll(r.target(), s.source(), s.target());
                break;
            }
            case PathKind::SubR: {
                const Path& r = n.children[0];
                const Path& s = n.children[1];
                n.source = replaceAll(s.source(), r.target(), r.source());
                n.target = s.target();
                break;
            }
            case PathKind::Loop:
                n.source = Term::base();
                n.target = Term::base();
                break;
            default:
                break;  // opaque: declared
        }
    }

    static Path make(PathKind kind, std::vector<Path> children, std::optional<Term> term = {},
                     std::string binder = {}, Location loc = {}) {
        auto node = std::make_shared<PathNode>();
        node->kind = kind;
        node->children = std::move(children);
        node->term = std::move(term);
        node->binder = std::move(binder);
        node->location = std::move(loc);
        derive(*node);
        return finish(std::move(node));
    }

    static Path makeOpaque(PathKind kind, std::vector<Path> children, Term source,
                           Term target) {
        auto node = std::make_shared<PathNode>();
        node->kind = kind;
        node->children = std::move(children);
        node->source = std::move(source);
        node->target = std::move(target);
        return finish(std::move(node));
    }

    static Path rebuild(const PathNode& from, std::size_t index, Path replacement) {
        auto node = std::make_shared<PathNode>(from);
        node->children.at(index) = std::move(replacement);
        if (!isOpaque(node->kind)) derive(*node);
        return finish(std::move(node));
    }

    static Path reendpoint(const PathNode& from, Term source, Term target) {
        auto node = std::make_shared<PathNode>(from);
        node->source = std::move(source);
        node->target = std::move(target);
        return finish(std::move(node));
    }
};

namespace {

void requireJunction(const Term& left, const Term& right, const char* where) {
    if (!alphaEq(left, right))
        throw CoherenceError(std::string(where) + ": endpoint mismatch between " +
                             printTerm(left) + " and " + printTerm(right));
}

}  // namespace

Path Path::rho(Term t) { return PathBuilder::make(PathKind::Rho, {}, std::move(t)); }

Path Path::beta(Term t, Location loc) {
    if (redexKindAt(t, loc) != RedexKind::Beta)
        throw PositionError("no beta-redex at " + toString(loc) + " in " + printTerm(t));
    return PathBuilder::make(PathKind::Beta, {}, std::move(t), {}, std::move(loc));
}

Path Path::eta(Term t, Location loc) {
    if (redexKindAt(t, loc) != RedexKind::Eta)
        throw PositionError("no eta-redex at " + toString(loc) + " in " + printTerm(t));
    return PathBuilder::make(PathKind::Eta, {}, std::move(t), {}, std::move(loc));
}

Path Path::sigma(Path p) { return PathBuilder::make(PathKind::Sigma, {std::move(p)}); }

Path Path::tau(Path p, Path q) {
    requireJunction(p.target(), q.source(), "tau");
    return raw::tau(std::move(p), std::move(q));
}

Path Path::mu(Path p, Term fn) {
    return PathBuilder::make(PathKind::Mu, {std::move(p)}, std::move(fn));
}

Path Path::muSucc(Path p) { return PathBuilder::make(PathKind::Mu, {std::move(p)}); }

Path Path::nu(Path p, Term arg) {
    return PathBuilder::make(PathKind::Nu, {std::move(p)}, std::move(arg));
}

Path Path::xi(std::string binder, Path p) {
    return PathBuilder::make(PathKind::Xi, {std::move(p)}, {}, std::move(binder));
}

Path Path::subL(Path r, Path s) {
    if (!containsSubterm(r.target(), s.source()))
        throw CoherenceError("subl: " + printTerm(s.source()) + " does not occur in " +
                             printTerm(r.target()));
    return raw::subL(std::move(r), std::move(s));
}

Path Path::subR(Path r, Path s) {
    if (!containsSubterm(s.source(), r.target()))
        throw CoherenceError("subr: " + printTerm(r.target()) + " does not occur in " +
                             printTerm(s.source()));
    return raw::subR(std::move(r), std::move(s));
}

Path Path::loop() {
    static const Path l = PathBuilder::make(PathKind::Loop, {});
    return l;
}

Path Path::opaque(PathKind kind, std::vector<Path> children,
                  std::optional<std::pair<Term, Term>> endpoints) {
    if (!isOpaque(kind))
        throw PreconditionError(std::string(keyword(kind)) + " is not an opaque constructor");
    if (children.size() != pathArity(kind))
        throw PreconditionError(std::string(keyword(kind)) + " expects " +
                                std::to_string(pathArity(kind)) + " sub-paths, got " +
                                std::to_string(children.size()));
    Term source = endpoints ? endpoints->first : children.front().source();
    Term target = endpoints ? endpoints->second : children.front().target();
    return raw::opaque(kind, std::move(children), std::move(source), std::move(target));
}

namespace raw {

Path tau(Path p, Path q) {
    return PathBuilder::make(PathKind::Tau, {std::move(p), std::move(q)});
}

Path subL(Path r, Path s) {
    return PathBuilder::make(PathKind::SubL, {std::move(r), std::move(s)});
}

Path subR(Path r, Path s) {
    return PathBuilder::make(PathKind::SubR, {std::move(r), std::move(s)});
}

Path opaque(PathKind kind, std::vector<Path> children, Term source, Term target) {
    return PathBuilder::makeOpaque(kind, std::move(children), std::move(source),
                                   std::move(target));
}

}  // namespace raw

PathKind Path::kind() const { return node_->kind; }
const Term& Path::source() const { return node_->source; }
const Term& Path::target() const { return node_->target; }

const Term& Path::term() const {
    if (!node_->term)
        throw PreconditionError(std::string(keyword(kind())) + " node carries no term");
    return *node_->term;
}

bool Path::isSuccCongruence() const { return kind() == PathKind::Mu && !node_->term; }
const std::string& Path::binder() const { return node_->binder; }
const Location& Path::location() const { return node_->location; }
std::size_t Path::childCount() const { return node_->children.size(); }
const Path& Path::child(std::size_t index) const { return node_->children.at(index); }
std::span<const Path> Path::children() const { return node_->children; }

Path Path::withChild(std::size_t index, Path replacement) const {
    return PathBuilder::rebuild(*node_, index, std::move(replacement));
}

Path Path::withEndpoints(Term source, Term target) const {
    if (!isOpaque(kind()))
        throw PreconditionError("only opaque constructors carry declared endpoints");
    return PathBuilder::reendpoint(*node_, std::move(source), std::move(target));
}

std::size_t Path::hash() const { return node_->hash; }
std::size_t Path::size() const { return node_->size; }

namespace {

bool sameData(const PathNode& a, const PathNode& b, BinderEnv* env) {
    if (a.kind != b.kind) return false;
    if (a.term.has_value() != b.term.has_value()) return false;
    if (a.term) {
        if (env ? !alphaEqUnder(*a.term, *b.term, *env) : !alphaEq(*a.term, *b.term))
            return false;
    }
    if (a.location != b.location) return false;
    if (isOpaque(a.kind)) {
        if (env) {
            if (!alphaEqUnder(a.source, b.source, *env) ||
                !alphaEqUnder(a.target, b.target, *env))
                return false;
        } else if (!alphaEq(a.source, b.source) || !alphaEq(a.target, b.target)) {
            return false;
        }
    }
    return true;
}

bool alphaEqPathUnder(const Path& a, const Path& b, BinderEnv& env) {
    if (a.hash() != b.hash()) return false;
    if (!sameData(*a.node(), *b.node(), &env)) return false;
    if (a.kind() == PathKind::Xi) env.emplace_back(a.binder(), b.binder());
    bool eq = true;
    for (std::size_t i = 0; eq && i < a.childCount(); ++i)
        eq = alphaEqPathUnder(a.child(i), b.child(i), env);
    if (a.kind() == PathKind::Xi) env.pop_back();
    return eq;
}

}  // namespace

bool samePath(const Path& a, const Path& b) {
    if (a.node() == b.node()) return true;
    if (a.hash() != b.hash() || a.size() != b.size()) return false;
    if (!sameData(*a.node(), *b.node(), nullptr)) return false;
    if (a.kind() == PathKind::Xi && a.binder() != b.binder()) return false;
    for (std::size_t i = 0; i < a.childCount(); ++i)
        if (!samePath(a.child(i), b.child(i))) return false;
    return true;
}

bool alphaEqPath(const Path& a, const Path& b) {
    if (a.node() == b.node()) return true;
    BinderEnv env;
    return alphaEqPathUnder(a, b, env);
}

std::optional<std::string> firstIncoherence(const Path& p) {
    for (std::size_t i = 0; i < p.childCount(); ++i)
        if (auto inner = firstIncoherence(p.child(i))) return inner;
    switch (p.kind()) {
        case PathKind::Beta:
            if (redexKindAt(p.term(), p.location()) != RedexKind::Beta)
                return "beta step without a beta-redex at " + toString(p.location());
            break;
        case PathKind::Eta:
            if (redexKindAt(p.term(), p.location()) != RedexKind::Eta)
                return "eta step without an eta-redex at " + toString(p.location());
            break;
        case PathKind::Tau:
            if (!alphaEq(p.child(0).target(), p.child(1).source()))
                return "tau junction " + printTerm(p.child(0).target()) +
                       " != " + printTerm(p.child(1).source());
            break;
        case PathKind::SubL:
            if (!containsSubterm(p.child(0).target(), p.child(1).source()))
                return "subl: " + printTerm(p.child(1).source()) + " does not occur in " +
                       printTerm(p.child(0).target());
            break;
        case PathKind::SubR:
            if (!containsSubterm(p.child(1).source(), p.child(0).target()))
                return "subr: " + printTerm(p.child(0).target()) + " does not occur in " +
                       printTerm(p.child(1).source());
            break;
        default:
            break;
    }
    return std::nullopt;
}

bool wellFormed(const Path& p) { return !firstIncoherence(p).has_value(); }

const Path& subpathAt(const Path& p, const Location& loc) {
    const Path* cur = &p;
    for (auto step : loc.steps) {
        if (step >= cur->childCount())
            throw PositionError("position " + toString(loc) + " leaves the path");
        cur = &cur->child(step);
    }
    return *cur;
}

namespace {

Path replaceFrom(const Path& p, const Location& loc, std::size_t depth, Path replacement) {
    if (depth == loc.steps.size()) return replacement;
    auto step = loc.steps[depth];
    if (step >= p.childCount())
        throw PositionError("position " + toString(loc) + " leaves the path");
    return p.withChild(step, replaceFrom(p.child(step), loc, depth + 1, std::move(replacement)));
}

}  // namespace

Path replaceSubpath(const Path& p, const Location& loc, Path replacement) {
    return replaceFrom(p, loc, 0, std::move(replacement));
}

Path compose(const Path& r, const Path& s) { return Path::tau(s, r); }

Path inverse(const Path& p) { return Path::sigma(p); }

bool isRhoGenerated(const Path& p) {
    switch (p.kind()) {
        case PathKind::Rho:
            return true;
        case PathKind::Sigma:
        case PathKind::Tau:
        case PathKind::Mu:
        case PathKind::Nu:
        case PathKind::Xi:
            for (const Path& c : p.children())
                if (!isRhoGenerated(c)) return false;
            return true;
        default:
            return false;
    }
}

}  // namespace cpath
