#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpath/path.hpp"
#include "cpath/trs.hpp"

namespace cpath {

/// A path at base built only from loop and rho(base) with sigma and tau.
class LoopExpr {
   public:
    /// Throws PreconditionError for any other atom or constructor, and
    /// CoherenceError when an endpoint is not base.
    explicit LoopExpr(Path p);

    const Path& path() const { return path_; }

   private:
    Path path_;
};

bool isLoopExpr(const Path& p);

struct Winding {
    std::int64_t n = 0;
    friend bool operator==(const Winding&, const Winding&) = default;
};

Winding circleNormalize(const LoopExpr& w, const EngineConfig& config = {});

/// Exponent of a canonical loop^n: rho(base), loop, sigma(loop), or a
/// right-nested tau chain of one of those letters. Throws NonCanonicalError.
std::int64_t toInteger(const LoopExpr& w);
bool isCanonicalLoop(const Path& p);

/// toPath(0) = rho(base), toPath(n) = toPath(n-1) o loop,
/// toPath(-n) = toPath(-(n-1)) o sigma(loop), with the base cases
/// collapsed so the result is already a normal form.
LoopExpr toPath(std::int64_t n);

/// "loop^n" for a canonical form, the s-expression otherwise.
std::string printLoop(const LoopExpr& w);

/// r o s = tau(s, r).
LoopExpr groupOp(const LoopExpr& r, const LoopExpr& s);
LoopExpr groupInverse(const LoopExpr& r);
LoopExpr groupIdentity();

/// The word of a loop expression read in travel order: +1 for loop, -1 for
/// sigma(loop). Rho contributes nothing.
std::vector<int> loopLetters(const LoopExpr& w);

/// The inductive cases used to extend loop^n by one letter.
enum class ExtendCase : std::uint8_t {
    RhoThenLoop,       // rho o loop = loop^1
    RhoThenInverse,    // rho o sigma(loop) = loop^-1
    PositiveThenLoop,  // loop^n o loop = loop^(n+1)
    PositiveThenInverse,
    NegativeThenLoop,
    NegativeThenInverse,
};

const char* toString(ExtendCase c);

struct ExtendStep {
    ExtendCase rule;
    std::int64_t before;
    std::int64_t after;
};

ExtendStep extendByLetter(std::int64_t n, int letter);

struct LetterRun {
    Winding result;
    std::vector<ExtendStep> steps;
};

/// Folds the letters of w from rho through the six inductive cases,
/// without the rewrite engine.
LetterRun letterNormalize(const LoopExpr& w);

}  // namespace cpath
