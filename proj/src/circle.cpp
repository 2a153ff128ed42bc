#include "cpath/circle.hpp"

#include "cpath/error.hpp"
#include "cpath/syntax.hpp"

namespace cpath {

namespace {

bool isBase(const Term& t) { return t.kind() == Term::Kind::Base; }

void checkLoopExpr(const Path& p) {
    switch (p.kind()) {
        case PathKind::Loop:
            return;
        case PathKind::Rho:
            if (!isBase(p.source()))
                throw CoherenceError("loop expression: rho over " + printTerm(p.source()) +
                                     ", expected base");
            return;
        case PathKind::Sigma:
            checkLoopExpr(p.child(0));
            return;
        case PathKind::Tau:
            checkLoopExpr(p.child(0));
            checkLoopExpr(p.child(1));
            return;
        default:
            throw PreconditionError(std::string("loop expression may not contain ") +
                                    keyword(p.kind()));
    }
}

// Letter of a single-letter canonical form, 0 otherwise.
int letterOf(const Path& p) {
    if (p.kind() == PathKind::Loop) return 1;
    if (p.kind() == PathKind::Sigma && p.child(0).kind() == PathKind::Loop) return -1;
    return 0;
}

void collectLetters(const Path& p, bool inverted, std::vector<int>& out) {
    switch (p.kind()) {
        case PathKind::Loop:
            out.push_back(inverted ? -1 : 1);
            return;
        case PathKind::Sigma:
            collectLetters(p.child(0), !inverted, out);
            return;
        case PathKind::Tau:
            collectLetters(p.child(inverted ? 1 : 0), inverted, out);
            collectLetters(p.child(inverted ? 0 : 1), inverted, out);
            return;
        default:
            return;
    }
}

}  // namespace

LoopExpr::LoopExpr(Path p) : path_(std::move(p)) { checkLoopExpr(path_); }

bool isLoopExpr(const Path& p) {
    try {
        checkLoopExpr(p);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool isCanonicalLoop(const Path& p) {
    if (p.kind() == PathKind::Rho) return isBase(p.source());
    int letter = letterOf(p);
    if (letter != 0) return true;
    if (p.kind() != PathKind::Tau) return false;
    letter = letterOf(p.child(0));
    if (letter == 0) return false;
    const Path* rest = &p.child(1);
    while (rest->kind() == PathKind::Tau) {
        if (letterOf(rest->child(0)) != letter) return false;
        rest = &rest->child(1);
    }
    return letterOf(*rest) == letter;
}

std::int64_t toInteger(const LoopExpr& w) {
    const Path& p = w.path();
    if (!isCanonicalLoop(p))
        throw NonCanonicalError("toInteger needs a canonical loop^n, got " + printPath(p) +
                                "; normalize it first");
    if (p.kind() == PathKind::Rho) return 0;
    if (p.kind() != PathKind::Tau) return letterOf(p);
    // loop^n = tau(letter, loop^(n-1)) read as succ / pred of the shorter power.
    std::int64_t inner = toInteger(LoopExpr(p.child(1)));
    return letterOf(p.child(0)) > 0 ? inner + 1 : inner - 1;
}

LoopExpr toPath(std::int64_t n) {
    if (n == 0) return LoopExpr(Path::rho(Term::base()));
    Path letter = n > 0 ? Path::loop() : Path::sigma(Path::loop());
    std::int64_t count = n > 0 ? n : -n;
    Path acc = letter;
    for (std::int64_t i = 1; i < count; ++i) acc = Path::tau(letter, acc);
    return LoopExpr(std::move(acc));
}

std::string printLoop(const LoopExpr& w) {
    if (!isCanonicalLoop(w.path())) return printPath(w.path());
    return "loop^" + std::to_string(toInteger(w));
}

Winding circleNormalize(const LoopExpr& w, const EngineConfig& config) {
    Path normal = normalize(w.path(), config).normalForm;
    return Winding{toInteger(LoopExpr(std::move(normal)))};
}

LoopExpr groupOp(const LoopExpr& r, const LoopExpr& s) {
    return LoopExpr(Path::tau(s.path(), r.path()));
}

LoopExpr groupInverse(const LoopExpr& r) { return LoopExpr(Path::sigma(r.path())); }

LoopExpr groupIdentity() { return LoopExpr(Path::rho(Term::base())); }

std::vector<int> loopLetters(const LoopExpr& w) {
    std::vector<int> out;
    collectLetters(w.path(), false, out);
    return out;
}

const char* toString(ExtendCase c) {
    switch (c) {
        case ExtendCase::RhoThenLoop:
            return "rho.loop";
        case ExtendCase::RhoThenInverse:
            return "rho.loop^-1";
        case ExtendCase::PositiveThenLoop:
            return "loop^n.loop";
        case ExtendCase::PositiveThenInverse:
            return "loop^n.loop^-1";
        case ExtendCase::NegativeThenLoop:
            return "loop^-n.loop";
        case ExtendCase::NegativeThenInverse:
            return "loop^-n.loop^-1";
    }
    return "?";
}

ExtendStep extendByLetter(std::int64_t n, int letter) {
    if (letter != 1 && letter != -1)
        throw PreconditionError("loop letter must be +1 or -1");
    ExtendCase c;
    if (n == 0)
        c = letter > 0 ? ExtendCase::RhoThenLoop : ExtendCase::RhoThenInverse;
    else if (n > 0)
        c = letter > 0 ? ExtendCase::PositiveThenLoop : ExtendCase::PositiveThenInverse;
    else
        c = letter > 0 ? ExtendCase::NegativeThenLoop : ExtendCase::NegativeThenInverse;
    return {c, n, n + letter};
}

LetterRun letterNormalize(const LoopExpr& w) {
    LetterRun run;
    std::int64_t n = 0;
    for (int letter : loopLetters(w)) {
        run.steps.push_back(extendByLetter(n, letter));
        n = run.steps.back().after;
    }
    run.result = Winding{n};
    return run;
}

}  // namespace cpath
