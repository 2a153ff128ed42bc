#include "cpath/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cpath/error.hpp"

namespace cpath {

namespace {

using sexpr::Node;

[[noreturn]] void fail(const Node& at, const std::string& message) {
    throw ParseError(message, at.line, at.column);
}

bool isDigits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string identifier(const Node& node) {
    if (!node.isAtom() || node.atom.empty() || isDigits(node.atom))
        fail(node, "expected an identifier");
    return node.atom;
}

void expectArity(const Node& node, std::size_t operands) {
    if (node.items.size() != operands + 1)
        fail(node, "'" + std::string(node.head()) + "' expects " + std::to_string(operands) +
                       " operand(s), got " + std::to_string(node.items.size() - 1));
}

}  // namespace

Term termFromSexpr(const Node& node) {
    if (node.isAtom()) {
        if (node.atom == "zero") return Term::zero();
        if (node.atom == "star") return Term::star();
        if (node.atom == "base") return Term::base();
        if (isDigits(node.atom)) {
            std::uint64_t n = 0;
            auto [ptr, ec] =
                std::from_chars(node.atom.data(), node.atom.data() + node.atom.size(), n);
            if (ec != std::errc() || n > 100000) fail(node, "numeral out of range");
            return Term::numeral(n);
        }
        fail(node, "unknown term atom '" + node.atom + "'");
    }
    if (!node.isList() || node.head().empty()) fail(node, "expected a term");
    std::string_view head = node.head();
    if (head == "var") {
        expectArity(node, 1);
        return Term::var(identifier(node.items[1]));
    }
    if (head == "lam") {
        expectArity(node, 2);
        return Term::lam(identifier(node.items[1]), termFromSexpr(node.items[2]));
    }
    if (head == "app") {
        expectArity(node, 2);
        return Term::app(termFromSexpr(node.items[1]), termFromSexpr(node.items[2]));
    }
    if (head == "succ") {
        expectArity(node, 1);
        return Term::succ(termFromSexpr(node.items[1]));
    }
    fail(node, "unknown term constructor '" + std::string(head) + "'");
}

Term parseTerm(std::string_view text) { return termFromSexpr(sexpr::read(text)); }

Location locationFromSexpr(const Node& node) {
    if (node.kind != Node::Kind::Bracket) fail(node, "expected a location like [0 1]");
    Location loc;
    for (const Node& item : node.items) {
        if (!item.isAtom() || !isDigits(item.atom) || item.atom.size() > 9)
            fail(item, "location entries must be child indices");
        loc.steps.push_back(static_cast<std::uint32_t>(std::stoul(item.atom)));
    }
    return loc;
}

namespace {

Path buildPath(const Node& node);

template <typename F>
Path located(const Node& node, F&& build) {
    try {
        return build();
    } catch (const CoherenceError& e) {
        throw CoherenceError(std::to_string(node.line) + ":" + std::to_string(node.column) +
                             ": " + e.what());
    } catch (const PositionError& e) {
        throw CoherenceError(std::to_string(node.line) + ":" + std::to_string(node.column) +
                             ": " + e.what());
    }
}

Path buildOpaque(const Node& node, PathKind kind) {
    std::size_t arity = pathArity(kind);
    std::size_t operands = node.items.size() - 1;
    if (operands != arity && operands != arity + 2)
        fail(node, "'" + std::string(keyword(kind)) + "' expects " + std::to_string(arity) +
                       " sub-path(s) and optionally two endpoint terms");
    std::vector<Path> children;
    for (std::size_t i = 0; i < arity; ++i) children.push_back(buildPath(node.items[i + 1]));
    std::optional<std::pair<Term, Term>> endpoints;
    if (operands == arity + 2)
        endpoints.emplace(termFromSexpr(node.items[arity + 1]),
                          termFromSexpr(node.items[arity + 2]));
    return Path::opaque(kind, std::move(children), std::move(endpoints));
}

Path buildPath(const Node& node) {
    if (node.isAtom()) {
        if (node.atom == "loop") return Path::loop();
        fail(node, "unknown path atom '" + node.atom + "'");
    }
    if (!node.isList() || node.head().empty()) fail(node, "expected a path");
    std::string_view head = node.head();
    auto kind = pathKindFromKeyword(head);
    if (!kind || *kind == PathKind::Loop)
        fail(node, "unknown path constructor '" + std::string(head) + "'");
    if (isOpaque(*kind)) return located(node, [&] { return buildOpaque(node, *kind); });

    switch (*kind) {
        case PathKind::Rho:
            expectArity(node, 1);
            return Path::rho(termFromSexpr(node.items[1]));
        case PathKind::Beta:
        case PathKind::Eta: {
            expectArity(node, 2);
            Term t = termFromSexpr(node.items[1]);
            Location loc = locationFromSexpr(node.items[2]);
            return located(node, [&] {
                return *kind == PathKind::Beta ? Path::beta(t, loc) : Path::eta(t, loc);
            });
        }
        case PathKind::Sigma:
            expectArity(node, 1);
            return Path::sigma(buildPath(node.items[1]));
        case PathKind::Tau: {
            expectArity(node, 2);
            Path p = buildPath(node.items[1]);
            Path q = buildPath(node.items[2]);
            return located(node, [&] { return Path::tau(p, q); });
        }
        case PathKind::Mu: {
            expectArity(node, 2);
            Path p = buildPath(node.items[1]);
            if (node.items[2].isAtom("succ")) return Path::muSucc(std::move(p));
            return Path::mu(std::move(p), termFromSexpr(node.items[2]));
        }
        case PathKind::Nu:
            expectArity(node, 2);
            return Path::nu(buildPath(node.items[1]), termFromSexpr(node.items[2]));
        case PathKind::Xi:
            expectArity(node, 2);
            return Path::xi(identifier(node.items[1]), buildPath(node.items[2]));
        case PathKind::SubL:
        case PathKind::SubR: {
            expectArity(node, 2);
            Path r = buildPath(node.items[1]);
            Path s = buildPath(node.items[2]);
            return located(node, [&] {
                return *kind == PathKind::SubL ? Path::subL(r, s) : Path::subR(r, s);
            });
        }
        default:
            fail(node, "unsupported path constructor");
    }
}

}  // namespace

Path pathFromSexpr(const Node& node) { return buildPath(node); }

Path parsePath(std::string_view text) { return buildPath(sexpr::read(text)); }

namespace {

void printTermTo(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Var:
            out += "(var " + t.name() + ")";
            return;
        case Term::Kind::Lam:
            out += "(lam " + t.name() + " ";
            printTermTo(t.body(), out);
            out += ")";
            return;
        case Term::Kind::App:
            out += "(app ";
            printTermTo(t.fn(), out);
            out += " ";
            printTermTo(t.arg(), out);
            out += ")";
            return;
        case Term::Kind::Zero:
            out += "zero";
            return;
        case Term::Kind::Succ:
            if (auto n = numeralValue(t)) {
                out += std::to_string(*n);
                return;
            }
            out += "(succ ";
            printTermTo(t.pred(), out);
            out += ")";
            return;
        case Term::Kind::Star:
            out += "star";
            return;
        case Term::Kind::Base:
            out += "base";
            return;
    }
}

void printPathTo(const Path& p, std::string& out) {
    PathKind kind = p.kind();
    if (kind == PathKind::Loop) {
        out += "loop";
        return;
    }
    out += "(";
    out += keyword(kind);
    switch (kind) {
        case PathKind::Rho:
            out += " ";
            printTermTo(p.term(), out);
            break;
        case PathKind::Beta:
        case PathKind::Eta:
            out += " ";
            printTermTo(p.term(), out);
            out += " " + toString(p.location());
            break;
        case PathKind::Mu:
            out += " ";
            printPathTo(p.child(0), out);
            out += " ";
            if (p.isSuccCongruence())
                out += "succ";
            else
                printTermTo(p.term(), out);
            break;
        case PathKind::Nu:
            out += " ";
            printPathTo(p.child(0), out);
            out += " ";
            printTermTo(p.term(), out);
            break;
        case PathKind::Xi:
            out += " " + p.binder() + " ";
            printPathTo(p.child(0), out);
            break;
        default:
            for (const Path& c : p.children()) {
                out += " ";
                printPathTo(c, out);
            }
            if (isOpaque(kind) && !(p.source().identical(p.child(0).source()) &&
                                    p.target().identical(p.child(0).target()))) {
                out += " ";
                printTermTo(p.source(), out);
                out += " ";
                printTermTo(p.target(), out);
            }
            break;
    }
    out += ")";
}

bool needsParensAsFn(const Term& t) { return t.kind() == Term::Kind::Lam; }

bool needsParensAsArg(const Term& t) {
    return t.kind() == Term::Kind::Lam || t.kind() == Term::Kind::App ||
           (t.kind() == Term::Kind::Succ && !numeralValue(t));
}

void prettyTo(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Var:
            out += t.name();
            return;
        case Term::Kind::Lam:
            out += "λ" + t.name() + ".";
            prettyTo(t.body(), out);
            return;
        case Term::Kind::App:
            if (needsParensAsFn(t.fn())) out += "(";
            prettyTo(t.fn(), out);
            if (needsParensAsFn(t.fn())) out += ")";
            out += " ";
            if (needsParensAsArg(t.arg())) out += "(";
            prettyTo(t.arg(), out);
            if (needsParensAsArg(t.arg())) out += ")";
            return;
        case Term::Kind::Zero:
            out += "0";
            return;
        case Term::Kind::Succ:
            if (auto n = numeralValue(t)) {
                out += std::to_string(*n);
                return;
            }
            out += "succ ";
            if (needsParensAsArg(t.pred())) out += "(";
            prettyTo(t.pred(), out);
            if (needsParensAsArg(t.pred())) out += ")";
            return;
        case Term::Kind::Star:
            out += "*";
            return;
        case Term::Kind::Base:
            out += "base";
            return;
    }
}

}  // namespace

std::string printTerm(const Term& t) {
    std::string out;
    printTermTo(t, out);
    return out;
}

std::string printPath(const Path& p) {
    std::string out;
    printPathTo(p, out);
    return out;
}

std::string prettyTerm(const Term& t) {
    std::string out;
    prettyTo(t, out);
    return out;
}

}  // namespace cpath
