#pragma once

// Independent reference implementations used to derive expected values.
// Nothing here calls into the engine's alpha, substitution or rewriting code.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cpath/path.hpp"
#include "cpath/term.hpp"

namespace oracle {

using cpath::Path;
using cpath::PathKind;
using cpath::Term;

// Nameless terms: bound variables are indices, free ones keep their names.
struct Db {
    enum class K { Bound, Free, Lam, App, Zero, Succ, Star, Base } k;
    int index = 0;
    std::string name;
    std::vector<Db> kids;

    bool operator==(const Db&) const = default;
};

inline Db toDb(const Term& t, std::vector<std::string>& scope) {
    switch (t.kind()) {
        case Term::Kind::Var:
            for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i)
                if (scope[static_cast<std::size_t>(i)] == t.name())
                    return {Db::K::Bound, static_cast<int>(scope.size()) - 1 - i, "", {}};
            return {Db::K::Free, 0, t.name(), {}};
        case Term::Kind::Lam: {
            scope.push_back(t.name());
            Db body = toDb(t.body(), scope);
            scope.pop_back();
            return {Db::K::Lam, 0, "", {body}};
        }
        case Term::Kind::App:
            return {Db::K::App, 0, "", {toDb(t.fn(), scope), toDb(t.arg(), scope)}};
        case Term::Kind::Zero:
            return {Db::K::Zero, 0, "", {}};
        case Term::Kind::Succ:
            return {Db::K::Succ, 0, "", {toDb(t.pred(), scope)}};
        case Term::Kind::Star:
            return {Db::K::Star, 0, "", {}};
        case Term::Kind::Base:
            return {Db::K::Base, 0, "", {}};
    }
    return {Db::K::Star, 0, "", {}};
}

inline Db toDb(const Term& t) {
    std::vector<std::string> scope;
    return toDb(t, scope);
}

inline bool alphaEquivalent(const Term& a, const Term& b) { return toDb(a) == toDb(b); }

inline Db shift(const Db& t, int by, int cutoff = 0) {
    Db out = t;
    if (t.k == Db::K::Bound) {
        if (t.index >= cutoff) out.index += by;
        return out;
    }
    for (std::size_t i = 0; i < t.kids.size(); ++i)
        out.kids[i] = shift(t.kids[i], by, cutoff + (t.k == Db::K::Lam ? 1 : 0));
    return out;
}

// t[j := s] in nameless form.
inline Db substIndex(const Db& t, int j, const Db& s) {
    if (t.k == Db::K::Bound) return t.index == j ? s : t;
    Db out = t;
    for (std::size_t i = 0; i < t.kids.size(); ++i)
        out.kids[i] = t.k == Db::K::Lam ? substIndex(t.kids[i], j + 1, shift(s, 1))
                                        : substIndex(t.kids[i], j, s);
    return out;
}

// Free variable x replaced by s.
inline Db substFree(const Db& t, const std::string& x, const Db& s) {
    if (t.k == Db::K::Free) return t.name == x ? s : t;
    Db out = t;
    for (std::size_t i = 0; i < t.kids.size(); ++i)
        out.kids[i] = substFree(t.kids[i], x, t.k == Db::K::Lam ? shift(s, 1) : s);
    return out;
}

inline Db betaContract(const Db& redex) {
    const Db& body = redex.kids[0].kids[0];
    const Db& arg = redex.kids[1];
    return shift(substIndex(body, 0, shift(arg, 1)), -1);
}

inline bool mentionsIndex(const Db& t, int j) {
    if (t.k == Db::K::Bound) return t.index == j;
    for (const Db& k : t.kids)
        if (mentionsIndex(k, t.k == Db::K::Lam ? j + 1 : j)) return true;
    return false;
}

inline bool isBetaRedex(const Db& t) { return t.k == Db::K::App && t.kids[0].k == Db::K::Lam; }

inline bool isEtaRedex(const Db& t) {
    if (t.k != Db::K::Lam) return false;
    const Db& b = t.kids[0];
    return b.k == Db::K::App && b.kids[1].k == Db::K::Bound && b.kids[1].index == 0 &&
           !mentionsIndex(b.kids[0], 0);
}

// Every one-step beta/eta reduct, by exhaustive search.
inline void reducts(const Db& t, std::vector<Db>& out) {
    if (isBetaRedex(t)) out.push_back(betaContract(t));
    if (isEtaRedex(t)) out.push_back(shift(t.kids[0].kids[0], -1));
    for (std::size_t i = 0; i < t.kids.size(); ++i) {
        std::vector<Db> inner;
        reducts(t.kids[i], inner);
        for (Db& r : inner) {
            Db copy = t;
            copy.kids[i] = std::move(r);
            out.push_back(std::move(copy));
        }
    }
}

inline std::vector<Db> reducts(const Db& t) {
    std::vector<Db> out;
    reducts(t, out);
    return out;
}

// Normal form by always taking the first reduct; nullopt past the budget.
inline std::optional<Db> normalForm(Db t, int budget = 10000) {
    for (int i = 0; i < budget; ++i) {
        auto next = reducts(t);
        if (next.empty()) return t;
        t = next.front();
    }
    return std::nullopt;
}

inline std::set<std::string> freeNames(const Term& t) {
    std::set<std::string> out;
    std::vector<std::string> bound;
    auto walk = [&](auto&& self, const Term& u) -> void {
        switch (u.kind()) {
            case Term::Kind::Var: {
                bool isBound = false;
                for (const auto& b : bound) isBound = isBound || b == u.name();
                if (!isBound) out.insert(u.name());
                return;
            }
            case Term::Kind::Lam:
                bound.push_back(u.name());
                self(self, u.body());
                bound.pop_back();
                return;
            default:
                for (std::size_t i = 0; i < u.childCount(); ++i) self(self, u.child(i));
        }
    };
    walk(walk, t);
    return out;
}

// Winding of a loop expression: loop counts +1, sigma flips the sign of
// everything beneath it, tau adds, rho is 0.
inline std::int64_t signedCount(const Path& p) {
    switch (p.kind()) {
        case PathKind::Loop:
            return 1;
        case PathKind::Sigma:
            return -signedCount(p.child(0));
        case PathKind::Tau:
            return signedCount(p.child(0)) + signedCount(p.child(1));
        default:
            return 0;
    }
}

}  // namespace oracle
