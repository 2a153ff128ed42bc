#include <algorithm>
#include <array>

#include "cpath/trs.hpp"

namespace cpath {

namespace {

using Rewrite = std::optional<Path>;

bool is(const Path& p, PathKind kind) { return p.kind() == kind; }

// Unary congruences through which a one-hole context may pass: sigma and
// the mu/nu/xi congruences commute with inversion, so C[sigma r] and
// sigma(C[r]) denote the same path.
bool isContextKind(PathKind kind) {
    return kind == PathKind::Sigma || kind == PathKind::Mu || kind == PathKind::Nu ||
           kind == PathKind::Xi;
}

bool sameContextData(const Path& a, const Path& b) {
    switch (a.kind()) {
        case PathKind::Mu:
            if (a.isSuccCongruence() != b.isSuccCongruence()) return false;
            return a.isSuccCongruence() || alphaEq(a.term(), b.term());
        case PathKind::Nu:
            return alphaEq(a.term(), b.term());
        case PathKind::Xi:
            return a.binder() == b.binder();
        default:
            return true;
    }
}

struct ContextMatch {
    std::vector<Path> frames;  // outermost first
    Path left;
    Path right;
};

/// Finds C with a = C[x], b = C[y] and hole(x, y), trying the empty
/// context first and then descending through common unary congruences.
template <typename HolePredicate>
std::optional<ContextMatch> matchContext(const Path& a, const Path& b, HolePredicate hole) {
    std::vector<Path> frames;
    const Path* x = &a;
    const Path* y = &b;
    for (;;) {
        if (hole(*x, *y)) return ContextMatch{std::move(frames), *x, *y};
        if (x->kind() != y->kind() || !isContextKind(x->kind()) || !sameContextData(*x, *y))
            return std::nullopt;
        frames.push_back(*x);
        x = &x->child(0);
        y = &y->child(0);
    }
}

Path plug(const std::vector<Path>& frames, Path hole) {
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) hole = it->withChild(0, hole);
    return hole;
}

// hole pairs
bool inverseOf(const Path& r, const Path& sr) {
    return is(sr, PathKind::Sigma) && samePath(sr.child(0), r);
}
bool leftInverse(const Path& sr, const Path& r) { return inverseOf(r, sr); }
bool rightIsRho(const Path&, const Path& b) { return is(b, PathKind::Rho); }
bool leftIsRho(const Path& a, const Path&) { return is(a, PathKind::Rho); }

Path sigmaPushedOpaque(const Path& p) {
    std::vector<Path> children;
    for (const Path& c : p.children()) children.push_back(Path::sigma(c));
    return raw::opaque(p.kind(), std::move(children), p.target(), p.source());
}

// 1-2
Rewrite sr(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Sigma) && is(p.child(0), PathKind::Rho)) return p.child(0);
    return std::nullopt;
}

Rewrite ss(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Sigma) && is(p.child(0), PathKind::Sigma)) return p.child(0).child(0);
    return std::nullopt;
}

// 3-6: tau with a common context around the two arguments
Rewrite tr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau)) return std::nullopt;
    auto m = matchContext(p.child(0), p.child(1), inverseOf);
    if (!m) return std::nullopt;
    return plug(m->frames, Path::rho(m->left.source()));
}

Rewrite tsr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau)) return std::nullopt;
    auto m = matchContext(p.child(0), p.child(1), leftInverse);
    if (!m) return std::nullopt;
    return plug(m->frames, Path::rho(m->right.target()));
}

Rewrite trr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau) || !matchContext(p.child(0), p.child(1), rightIsRho))
        return std::nullopt;
    return p.child(0);
}

Rewrite tlr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau) || !matchContext(p.child(0), p.child(1), leftIsRho))
        return std::nullopt;
    return p.child(1);
}

// 7-12: subterm substitution
Rewrite slr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::SubL) || !matchContext(p.child(0), p.child(1), rightIsRho))
        return std::nullopt;
    return p.child(0);
}

Rewrite srr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::SubR) || !matchContext(p.child(0), p.child(1), leftIsRho))
        return std::nullopt;
    return p.child(1);
}

Rewrite sls(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::SubL) || !is(p.child(0), PathKind::SubL)) return std::nullopt;
    const Path& inner = p.child(0);
    if (!matchContext(inner.child(1), p.child(1), inverseOf)) return std::nullopt;
    return inner.child(0);
}

Rewrite slss(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::SubL) || !is(p.child(0), PathKind::SubL)) return std::nullopt;
    const Path& inner = p.child(0);
    if (!matchContext(inner.child(1), p.child(1), leftInverse)) return std::nullopt;
    return inner.child(0);
}

Rewrite srs(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::SubR) || !is(p.child(1), PathKind::SubR)) return std::nullopt;
    const Path& inner = p.child(1);
    if (!matchContext(p.child(0), inner.child(0), inverseOf)) return std::nullopt;
    return inner.child(1);
}

Rewrite srrr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::SubR) || !is(p.child(1), PathKind::SubR)) return std::nullopt;
    const Path& inner = p.child(1);
    if (!matchContext(p.child(0), inner.child(0), leftInverse)) return std::nullopt;
    return inner.child(1);
}

// 13-24: opaque introduction/elimination pairs
Rewrite mx2l1(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu1) && is(p.child(0), PathKind::Xi1)) return p.child(0).child(0);
    return std::nullopt;
}

Rewrite mx2l2(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu1) && is(p.child(0), PathKind::XiPair)) return p.child(0).child(0);
    return std::nullopt;
}

Rewrite mx2r1(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu2) && is(p.child(0), PathKind::XiPair)) return p.child(0).child(1);
    return std::nullopt;
}

Rewrite mx2r2(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu2) && is(p.child(0), PathKind::Xi2)) return p.child(0).child(0);
    return std::nullopt;
}

Rewrite mx3l(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu3Arg) && is(p.child(0), PathKind::Xi1)) return p.child(1);
    return std::nullopt;
}

Rewrite mx3r(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu3Arg) && is(p.child(0), PathKind::Xi2)) return p.child(2);
    return std::nullopt;
}

Rewrite mxl(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Nu0) && is(p.child(0), PathKind::Xi0)) return p.child(0).child(0);
    return std::nullopt;
}

Rewrite mxr(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu2Arg) && is(p.child(0), PathKind::Xi2)) return p.child(1);
    return std::nullopt;
}

Rewrite mx(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::XiPair) && is(p.child(0), PathKind::Mu1) &&
        is(p.child(1), PathKind::Mu2) && samePath(p.child(0).child(0), p.child(1).child(0)))
        return p.child(0).child(0);
    return std::nullopt;
}

Rewrite mxx(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu3Arg) && is(p.child(1), PathKind::Xi1) && is(p.child(2), PathKind::Xi2))
        return p.child(0);
    return std::nullopt;
}

Rewrite xmr(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Xi0) && is(p.child(0), PathKind::Nu0)) return p.child(0).child(0);
    return std::nullopt;
}

Rewrite mx1r(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu2Arg) && is(p.child(1), PathKind::Xi2)) return p.child(0);
    return std::nullopt;
}

// 25-32: pushing sigma inwards
Rewrite stss(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Sigma) || !is(p.child(0), PathKind::Tau)) return std::nullopt;
    const Path& t = p.child(0);
    return raw::tau(Path::sigma(t.child(1)), Path::sigma(t.child(0)));
}

Rewrite ssbl(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Sigma) || !is(p.child(0), PathKind::SubL)) return std::nullopt;
    const Path& t = p.child(0);
    return raw::subR(Path::sigma(t.child(1)), Path::sigma(t.child(0)));
}

Rewrite ssbr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Sigma) || !is(p.child(0), PathKind::SubR)) return std::nullopt;
    const Path& t = p.child(0);
    return raw::subL(Path::sigma(t.child(1)), Path::sigma(t.child(0)));
}

Rewrite sx(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Sigma)) return std::nullopt;
    const Path& x = p.child(0);
    if (is(x, PathKind::Xi)) return x.withChild(0, Path::sigma(x.child(0)));
    if (is(x, PathKind::Xi0) || is(x, PathKind::Xi1) || is(x, PathKind::Xi2))
        return sigmaPushedOpaque(x);
    return std::nullopt;
}

Rewrite sxss(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Sigma) && is(p.child(0), PathKind::XiPair))
        return sigmaPushedOpaque(p.child(0));
    return std::nullopt;
}

Rewrite sm(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Sigma)) return std::nullopt;
    const Path& m = p.child(0);
    if (is(m, PathKind::Mu)) return m.withChild(0, Path::sigma(m.child(0)));
    if (is(m, PathKind::Mu1) || is(m, PathKind::Mu2)) return sigmaPushedOpaque(m);
    return std::nullopt;
}

Rewrite smss(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Sigma) && is(p.child(0), PathKind::Mu2Arg))
        return sigmaPushedOpaque(p.child(0));
    return std::nullopt;
}

Rewrite smsss(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Sigma) && is(p.child(0), PathKind::Mu3Arg))
        return sigmaPushedOpaque(p.child(0));
    return std::nullopt;
}

// 33-36: tau against subterm substitution
Rewrite tsbll(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau) || !is(p.child(1), PathKind::SubL) ||
        !is(p.child(1).child(0), PathKind::Rho))
        return std::nullopt;
    return raw::subL(p.child(0), p.child(1).child(1));
}

Rewrite tsbrl(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau) || !is(p.child(1), PathKind::SubR) ||
        !is(p.child(1).child(1), PathKind::Rho))
        return std::nullopt;
    return raw::subL(p.child(0), p.child(1).child(0));
}

Rewrite tsblr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau) || !is(p.child(0), PathKind::SubL)) return std::nullopt;
    const Path& l = p.child(0);
    return raw::tau(l.child(0), raw::subR(l.child(1), p.child(1)));
}

Rewrite tsbrr(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau) || !is(p.child(0), PathKind::SubR)) return std::nullopt;
    const Path& l = p.child(0);
    return raw::subR(l.child(0), raw::tau(l.child(1), p.child(1)));
}

// 37-39: associativity and cancellation inside right-nested chains
Rewrite tt(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau) || !is(p.child(0), PathKind::Tau)) return std::nullopt;
    const Path& l = p.child(0);
    return raw::tau(l.child(0), raw::tau(l.child(1), p.child(1)));
}

Rewrite tts(const Path& p, const RuleOptions&) {
    if (!is(p, PathKind::Tau) || !is(p.child(1), PathKind::Tau)) return std::nullopt;
    const Path& rest = p.child(1);
    if (!matchContext(p.child(0), rest.child(0), inverseOf)) return std::nullopt;
    return rest.child(1);
}

Rewrite tst(const Path& p, const RuleOptions& options) {
    if (!is(p, PathKind::Tau) || !is(p.child(1), PathKind::Tau)) return std::nullopt;
    const Path& rest = p.child(1);
    auto m = matchContext(p.child(0), rest.child(0), leftInverse);
    if (!m) return std::nullopt;
    if (options.rule39Literal) return m->right;
    return rest.child(1);
}

// 40-42: congruences over reflexivity
Rewrite mxp(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Mu) && is(p.child(0), PathKind::Rho)) return Path::rho(p.source());
    return std::nullopt;
}

Rewrite nxp(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Nu) && is(p.child(0), PathKind::Rho)) return Path::rho(p.source());
    return std::nullopt;
}

Rewrite xxp(const Path& p, const RuleOptions&) {
    if (is(p, PathKind::Xi) && is(p.child(0), PathKind::Rho)) return Path::rho(p.source());
    return std::nullopt;
}

constexpr std::array<Rule, kRuleCount> kCatalog{{
    {RuleId::sr, 1, "sr", "σ(ρ)", "ρ", sr},
    {RuleId::ss, 2, "ss", "σ(σ(r))", "r", ss},
    {RuleId::tr, 3, "tr", "τ(C[r], C[σ(r)])", "C[ρ]", tr},
    {RuleId::tsr, 4, "tsr", "τ(C[σ(r)], C[r])", "C[ρ]", tsr},
    {RuleId::trr, 5, "trr", "τ(C[r], C[ρ])", "C[r]", trr},
    {RuleId::tlr, 6, "tlr", "τ(C[ρ], C[r])", "C[r]", tlr},
    {RuleId::slr, 7, "slr", "subL(C[r], C[ρ])", "C[r]", slr},
    {RuleId::srr, 8, "srr", "subR(C[ρ], C[r])", "C[r]", srr},
    {RuleId::sls, 9, "sls", "subL(subL(s, C[r]), C[σ(r)])", "s", sls},
    {RuleId::slss, 10, "slss", "subL(subL(s, C[σ(r)]), C[r])", "s", slss},
    {RuleId::srs, 11, "srs", "subR(C[s], subR(C[σ(s)], r))", "r", srs},
    {RuleId::srrr, 12, "srrr", "subR(C[σ(s)], subR(C[s], r))", "r", srrr},
    {RuleId::mx2l1, 13, "mx2l1", "μ1(ξ1(r))", "r", mx2l1},
    {RuleId::mx2l2, 14, "mx2l2", "μ1(ξ∧(r, s))", "r", mx2l2},
    {RuleId::mx2r1, 15, "mx2r1", "μ2(ξ∧(r, s))", "s", mx2r1},
    {RuleId::mx2r2, 16, "mx2r2", "μ2(ξ2(s))", "s", mx2r2},
    {RuleId::mx3l, 17, "mx3l", "μ(ξ1(r), s, u)", "s", mx3l},
    {RuleId::mx3r, 18, "mx3r", "μ(ξ2(r), s, u)", "u", mx3r},
    {RuleId::mxl, 19, "mxl", "ν(ξ(r))", "r", mxl},
    {RuleId::mxr, 20, "mxr", "μ(ξ2(r), s)", "s", mxr},
    {RuleId::mx, 21, "mx", "ξ(μ1(r), μ2(r))", "r", mx},
    {RuleId::mxx, 22, "mxx", "μ(t, ξ1(r), ξ2(s))", "t", mxx},
    {RuleId::xmr, 23, "xmr", "ξ(ν(r))", "r", xmr},
    {RuleId::mx1r, 24, "mx1r", "μ(s, ξ2(r))", "s", mx1r},
    {RuleId::stss, 25, "stss", "σ(τ(r, s))", "τ(σ(s), σ(r))", stss},
    {RuleId::ssbl, 26, "ssbl", "σ(subL(r, s))", "subR(σ(s), σ(r))", ssbl},
    {RuleId::ssbr, 27, "ssbr", "σ(subR(r, s))", "subL(σ(s), σ(r))", ssbr},
    {RuleId::sx, 28, "sx", "σ(ξ(r))", "ξ(σ(r))", sx},
    {RuleId::sxss, 29, "sxss", "σ(ξ(s, r))", "ξ(σ(s), σ(r))", sxss},
    {RuleId::sm, 30, "sm", "σ(μ(r))", "μ(σ(r))", sm},
    {RuleId::smss, 31, "smss", "σ(μ(s, r))", "μ(σ(s), σ(r))", smss},
    {RuleId::smsss, 32, "smsss", "σ(μ(r, u, v))", "μ(σ(r), σ(u), σ(v))", smsss},
    {RuleId::tsbll, 33, "tsbll", "τ(r, subL(ρ, s))", "subL(r, s)", tsbll},
    {RuleId::tsbrl, 34, "tsbrl", "τ(r, subR(s, ρ))", "subL(r, s)", tsbrl},
    {RuleId::tsblr, 35, "tsblr", "τ(subL(r, s), t)", "τ(r, subR(s, t))", tsblr},
    {RuleId::tsbrr, 36, "tsbrr", "τ(subR(s, t), u)", "subR(s, τ(t, u))", tsbrr},
    {RuleId::tt, 37, "tt", "τ(τ(t, r), s)", "τ(t, τ(r, s))", tt},
    {RuleId::tts, 38, "tts", "τ(C[u], τ(C[σ(u)], v))", "v", tts},
    {RuleId::tst, 39, "tst", "τ(C[σ(u)], τ(C[u], v))", "v", tst},
    {RuleId::mxp, 40, "mxp", "μ_f(ρ_x)", "ρ_{f(x)}", mxp},
    {RuleId::nxp, 41, "nxp", "ν(ρ_x)", "ρ_{f(x)}", nxp},
    {RuleId::xxp, 42, "xxp", "ξ(ρ)", "ρ", xxp},
}};

// Checks the local laws of the nodes a rule may have created (the top two
// levels of a right-hand side).
bool locallyCoherent(const Path& p, int depth) {
    switch (p.kind()) {
        case PathKind::Tau:
            if (!alphaEq(p.child(0).target(), p.child(1).source())) return false;
            break;
        case PathKind::SubL:
            if (!containsSubterm(p.child(0).target(), p.child(1).source())) return false;
            break;
        case PathKind::SubR:
            if (!containsSubterm(p.child(1).source(), p.child(0).target())) return false;
            break;
        default:
            break;
    }
    if (depth > 1)
        for (const Path& c : p.children())
            if (!locallyCoherent(c, depth - 1)) return false;
    return true;
}

struct KindTable {
    std::array<std::vector<RuleId>, kPathKindCount> byKind;

    KindTable() {
        auto add = [&](PathKind k, std::initializer_list<int> numbers) {
            for (int n : numbers) byKind[static_cast<std::size_t>(k)].push_back(ruleFromNumber(n));
        };
        add(PathKind::Sigma, {1, 2, 25, 26, 27, 28, 29, 30, 31, 32});
        add(PathKind::Tau, {3, 4, 5, 6, 33, 34, 35, 36, 37, 38, 39});
        add(PathKind::SubL, {7, 9, 10});
        add(PathKind::SubR, {8, 11, 12});
        add(PathKind::Mu1, {13, 14});
        add(PathKind::Mu2, {15, 16});
        add(PathKind::Mu3Arg, {17, 18, 22});
        add(PathKind::Nu0, {19});
        add(PathKind::Mu2Arg, {20, 24});
        add(PathKind::XiPair, {21});
        add(PathKind::Xi0, {23});
        add(PathKind::Mu, {40});
        add(PathKind::Nu, {41});
        add(PathKind::Xi, {42});
    }
};

}  // namespace

int ruleNumber(RuleId id) { return static_cast<int>(id); }

std::string_view ruleLabel(RuleId id) { return rule(id).label; }

std::optional<RuleId> ruleFromLabel(std::string_view label) {
    for (const Rule& r : kCatalog)
        if (r.label == label) return r.id;
    return std::nullopt;
}

RuleId ruleFromNumber(int number) {
    if (number < 1 || number > kRuleCount)
        throw PreconditionError("rule number out of range: " + std::to_string(number));
    return static_cast<RuleId>(number);
}

std::span<const Rule> ruleCatalog() { return kCatalog; }

const Rule& rule(RuleId id) { return kCatalog[static_cast<std::size_t>(id) - 1]; }

std::optional<Path> applyRule(RuleId id, const Path& p, const RuleOptions& options) {
    auto rhs = rule(id).rewrite(p, options);
    if (!rhs) return std::nullopt;
    if (id == RuleId::tst && options.rule39Literal) return rhs;
    if (!alphaEq(rhs->source(), p.source()) || !alphaEq(rhs->target(), p.target()))
        return std::nullopt;
    if (!locallyCoherent(*rhs, 2)) return std::nullopt;
    return rhs;
}

std::span<const RuleId> rulesForKind(PathKind kind) {
    static const KindTable table;
    return table.byKind[static_cast<std::size_t>(kind)];
}

}  // namespace cpath
