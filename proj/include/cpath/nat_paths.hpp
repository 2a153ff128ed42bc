#pragma once

#include <optional>

#include "cpath/path.hpp"
#include "cpath/term.hpp"
#include "cpath/trs.hpp"

namespace cpath {

/// The two types code(m, n) can unfold to: the unit type or the empty type.
enum class CodeType { Unit, Empty };

const char* toString(CodeType type);

/// An inhabitant of some code(m, n). The only inhabitant of the unit type
/// is star, so a witness is either star or absent.
class CodeWitness {
   public:
    static CodeWitness star() { return CodeWitness(true); }
    static CodeWitness absent() { return CodeWitness(false); }

    bool inhabited() const { return inhabited_; }
    /// The star term when inhabited.
    std::optional<Term> witness() const {
        return inhabited_ ? std::optional<Term>(Term::star()) : std::nullopt;
    }

    friend bool operator==(const CodeWitness&, const CodeWitness&) = default;

   private:
    explicit CodeWitness(bool inhabited) : inhabited_(inhabited) {}
    bool inhabited_;
};

/// code(0,0) = 1, code(succ m, 0) = code(0, succ n) = 0,
/// code(succ m, succ n) = code(m, n). Arguments must be canonical numerals.
CodeType code(const Term& m, const Term& n);

/// r(0) = *, r(succ n) = r(n).
CodeWitness rfun(const Term& n);

/// Carries w : code(m, a) along p : a = b to a witness of code(m, b).
/// p must normalize to reflexivity, so the transport is the identity.
CodeWitness transportCode(const Term& m, const Path& p, const CodeWitness& w,
                          const EngineConfig& config = {});

/// transport of r(m) along p in the family code(m, -).
CodeWitness encode(const Term& m, const Term& n, const Path& p,
                   const EngineConfig& config = {});

/// decode(0, 0, c) = rho_0, decode(succ m, succ n, c) = mu_succ(decode(m, n, c)).
/// Throws UninhabitedError when code(m, n) is empty or c is absent.
Path decode(const Term& m, const Term& n, const CodeWitness& c);

bool natPathNormalizesToRho(const Path& p, const EngineConfig& config = {});

}  // namespace cpath
