#include "cpath/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cpath/error.hpp"

namespace cpath {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Location Location::child(std::uint32_t index) const {
    Location out = *this;
    out.steps.push_back(index);
    return out;
}

Location Location::prefixed(const Location& outer) const {
    Location out = outer;
    out.steps.insert(out.steps.end(), steps.begin(), steps.end());
    return out;
}

std::string toString(const Location& loc) {
    std::string out = "[";
    for (std::size_t i = 0; i < loc.steps.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(loc.steps[i]);
    }
    out += ']';
    return out;
}

// Variable names are deliberately left out of the hash so it stays
// alpha-invariant without tracking binders.
Term Term::make(Kind kind, std::string name, std::vector<Term> children) {
    auto node = std::make_shared<TermNode>();
    node->kind = kind;
    node->name = std::move(name);
    std::size_t h = mix(0x51ed27, static_cast<std::size_t>(kind));
    std::size_t size = 1;
    for (const Term& c : children) {
        h = mix(h, c.hash());
        size += c.size();
    }
    node->hash = h;
    node->size = size;
    node->children = std::move(children);
    return Term(std::move(node));
}

Term Term::var(std::string name) { return make(Kind::Var, std::move(name), {}); }

Term Term::lam(std::string binder, Term body) {
    return make(Kind::Lam, std::move(binder), {std::move(body)});
}

Term Term::app(Term fn, Term arg) {
    return make(Kind::App, {}, {std::move(fn), std::move(arg)});
}

Term Term::zero() {
    static const Term z = make(Kind::Zero, {}, {});
    return z;
}

Term Term::succ(Term pred) { return make(Kind::Succ, {}, {std::move(pred)}); }

Term Term::star() {
    static const Term s = make(Kind::Star, {}, {});
    return s;
}

Term Term::base() {
    static const Term b = make(Kind::Base, {}, {});
    return b;
}

Term Term::numeral(std::uint64_t n) {
    Term t = zero();
    for (std::uint64_t i = 0; i < n; ++i) t = succ(std::move(t));
    return t;
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::body() const { return node_->children.at(0); }
const Term& Term::fn() const { return node_->children.at(0); }
const Term& Term::arg() const { return node_->children.at(1); }
const Term& Term::pred() const { return node_->children.at(0); }
std::size_t Term::childCount() const { return node_->children.size(); }
const Term& Term::child(std::size_t index) const { return node_->children.at(index); }

Term Term::withChild(std::size_t index, Term replacement) const {
    std::vector<Term> children = node_->children;
    children.at(index) = std::move(replacement);
    return make(node_->kind, node_->name, std::move(children));
}

std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_->size; }

bool Term::identical(const Term& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind() || hash() != other.hash() || name() != other.name())
        return false;
    for (std::size_t i = 0; i < childCount(); ++i)
        if (!child(i).identical(other.child(i))) return false;
    return true;
}

bool operator==(const Term& a, const Term& b) { return alphaEq(a, b); }

bool alphaEqUnder(const Term& a, const Term& b, BinderEnv& env) {
    if (a.kind() != b.kind() || a.hash() != b.hash()) return false;
    switch (a.kind()) {
        case Term::Kind::Var: {
            for (auto it = env.rbegin(); it != env.rend(); ++it) {
                bool left = it->first == a.name();
                bool right = it->second == b.name();
                if (left || right) return left && right;
            }
            return a.name() == b.name();
        }
        case Term::Kind::Lam: {
            env.emplace_back(a.name(), b.name());
            bool eq = alphaEqUnder(a.body(), b.body(), env);
            env.pop_back();
            return eq;
        }
        default:
            if (a.node() == b.node() && env.empty()) return true;
            for (std::size_t i = 0; i < a.childCount(); ++i)
                if (!alphaEqUnder(a.child(i), b.child(i), env)) return false;
            return true;
    }
}

bool alphaEq(const Term& a, const Term& b) {
    if (a.node() == b.node()) return true;
    BinderEnv env;
    return alphaEqUnder(a, b, env);
}

namespace {

void collectFree(const Term& t, std::vector<std::string>& bound,
                 std::set<std::string>& out) {
    switch (t.kind()) {
        case Term::Kind::Var:
            if (std::find(bound.begin(), bound.end(), t.name()) == bound.end())
                out.insert(t.name());
            return;
        case Term::Kind::Lam:
            bound.push_back(t.name());
            collectFree(t.body(), bound, out);
            bound.pop_back();
            return;
        default:
            for (std::size_t i = 0; i < t.childCount(); ++i)
                collectFree(t.child(i), bound, out);
    }
}

}  // namespace

std::set<std::string> freeVars(const Term& t) {
    std::set<std::string> out;
    std::vector<std::string> bound;
    collectFree(t, bound, out);
    return out;
}

bool occursFree(const std::string& name, const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return t.name() == name;
        case Term::Kind::Lam:
            return t.name() != name && occursFree(name, t.body());
        default:
            for (std::size_t i = 0; i < t.childCount(); ++i)
                if (occursFree(name, t.child(i))) return true;
            return false;
    }
}

bool isClosed(const Term& t) { return freeVars(t).empty(); }

std::optional<std::uint64_t> numeralValue(const Term& t) {
    std::uint64_t n = 0;
    const Term* cur = &t;
    while (cur->kind() == Term::Kind::Succ) {
        ++n;
        cur = &cur->pred();
    }
    if (cur->kind() != Term::Kind::Zero) return std::nullopt;
    return n;
}

namespace {

std::string freshName(const std::string& base, const std::set<std::string>& avoid) {
    std::string candidate = base + "'";
    while (avoid.count(candidate)) candidate += "'";
    return candidate;
}

Term substituteWith(const Term& body, const std::string& var, const Term& value,
                    const std::set<std::string>& valueFree) {
    switch (body.kind()) {
        case Term::Kind::Var:
            return body.name() == var ? value : body;
        case Term::Kind::Lam: {
            const std::string& binder = body.name();
            if (binder == var || !occursFree(var, body.body())) return body;
            if (!valueFree.count(binder))
                return Term::lam(binder,
                                 substituteWith(body.body(), var, value, valueFree));
            std::set<std::string> avoid = valueFree;
            for (const auto& v : freeVars(body.body())) avoid.insert(v);
            avoid.insert(var);
            std::string renamed = freshName(binder, avoid);
            Term renamedBody = substitute(body.body(), binder, Term::var(renamed));
            return Term::lam(renamed,
                             substituteWith(renamedBody, var, value, valueFree));
        }
        case Term::Kind::Zero:
        case Term::Kind::Star:
        case Term::Kind::Base:
            return body;
        default: {
            Term out = body;
            for (std::size_t i = 0; i < body.childCount(); ++i)
                out = out.withChild(i, substituteWith(body.child(i), var, value, valueFree));
            return out;
        }
    }
}

}  // namespace

Term substitute(const Term& body, const std::string& var, const Term& value) {
    return substituteWith(body, var, value, freeVars(value));
}

Term replaceAll(const Term& t, const Term& from, const Term& to) {
    if (alphaEq(t, from)) return to;
    Term out = t;
    for (std::size_t i = 0; i < t.childCount(); ++i) {
        Term c = replaceAll(t.child(i), from, to);
        if (c.node() != t.child(i).node()) out = out.withChild(i, std::move(c));
    }
    return out;
}

bool containsSubterm(const Term& t, const Term& sub) {
    if (alphaEq(t, sub)) return true;
    for (std::size_t i = 0; i < t.childCount(); ++i)
        if (containsSubterm(t.child(i), sub)) return true;
    return false;
}

const char* toString(RedexKind kind) { return kind == RedexKind::Beta ? "beta" : "eta"; }

bool isBetaRedex(const Term& t) {
    return t.kind() == Term::Kind::App && t.fn().kind() == Term::Kind::Lam;
}

bool isEtaRedex(const Term& t) {
    if (t.kind() != Term::Kind::Lam) return false;
    const Term& body = t.body();
    return body.kind() == Term::Kind::App && body.arg().kind() == Term::Kind::Var &&
           body.arg().name() == t.name() && !occursFree(t.name(), body.fn());
}

namespace {

void collectRedexes(const Term& t, Location& here, std::vector<Redex>& out) {
    if (isBetaRedex(t)) out.push_back({here, RedexKind::Beta});
    if (isEtaRedex(t)) out.push_back({here, RedexKind::Eta});
    for (std::uint32_t i = 0; i < t.childCount(); ++i) {
        here.steps.push_back(i);
        collectRedexes(t.child(i), here, out);
        here.steps.pop_back();
    }
}

}  // namespace

std::vector<Redex> findRedexes(const Term& t) {
    std::vector<Redex> out;
    Location here;
    collectRedexes(t, here, out);
    return out;
}

const Term& subtermAt(const Term& t, const Location& loc) {
    const Term* cur = &t;
    for (std::uint32_t step : loc.steps) {
        if (step >= cur->childCount())
            throw PositionError("location " + toString(loc) + " leaves the term");
        cur = &cur->child(step);
    }
    return *cur;
}

namespace {

Term replaceFrom(const Term& t, const Location& loc, std::size_t depth, Term replacement) {
    if (depth == loc.steps.size()) return replacement;
    std::uint32_t step = loc.steps[depth];
    if (step >= t.childCount())
        throw PositionError("location " + toString(loc) + " leaves the term");
    return t.withChild(step, replaceFrom(t.child(step), loc, depth + 1, std::move(replacement)));
}

}  // namespace

Term replaceAt(const Term& t, const Location& loc, Term replacement) {
    return replaceFrom(t, loc, 0, std::move(replacement));
}

std::optional<RedexKind> redexKindAt(const Term& t, const Location& loc) {
    const Term* cur = &t;
    for (std::uint32_t step : loc.steps) {
        if (step >= cur->childCount()) return std::nullopt;
        cur = &cur->child(step);
    }
    if (isBetaRedex(*cur)) return RedexKind::Beta;
    if (isEtaRedex(*cur)) return RedexKind::Eta;
    return std::nullopt;
}

Term contractAt(const Term& t, const Location& loc) {
    const Term& redex = subtermAt(t, loc);
    if (isBetaRedex(redex)) {
        const Term& lam = redex.fn();
        return replaceAt(t, loc, substitute(lam.body(), lam.name(), redex.arg()));
    }
    if (isEtaRedex(redex)) return replaceAt(t, loc, redex.body().fn());
    throw PositionError("no redex at " + toString(loc));
}

}  // namespace cpath
