#include "cpath/nat_paths.hpp"

#include "cpath/error.hpp"
#include "cpath/syntax.hpp"

namespace cpath {

const char* toString(CodeType type) { return type == CodeType::Unit ? "1" : "0"; }

namespace {

void requireNumeral(const Term& t, const char* what) {
    if (!numeralValue(t))
        throw PreconditionError(std::string(what) + " is not a canonical numeral: " +
                                printTerm(t));
}

}  // namespace

CodeType code(const Term& m, const Term& n) {
    requireNumeral(m, "code: first argument");
    requireNumeral(n, "code: second argument");
    const Term* a = &m;
    const Term* b = &n;
    for (;;) {
        bool aZero = a->kind() == Term::Kind::Zero;
        bool bZero = b->kind() == Term::Kind::Zero;
        if (aZero && bZero) return CodeType::Unit;
        if (aZero || bZero) return CodeType::Empty;
        a = &a->pred();
        b = &b->pred();
    }
}

CodeWitness rfun(const Term& n) {
    requireNumeral(n, "r");
    const Term* cur = &n;
    while (cur->kind() == Term::Kind::Succ) cur = &cur->pred();
    return CodeWitness::star();
}

CodeWitness transportCode(const Term& m, const Path& p, const CodeWitness& w,
                          const EngineConfig& config) {
    requireNumeral(m, "transport: family index");
    if (!numeralValue(p.source()) || !numeralValue(p.target()))
        throw PreconditionError("transport: path endpoints must be numerals, got " +
                                printTerm(p.source()) + " -> " + printTerm(p.target()));
    if (!w.inhabited() || code(m, p.source()) != CodeType::Unit)
        throw ContractError("transport: witness does not inhabit code(" + printTerm(m) + ", " +
                            printTerm(p.source()) + ")");
    Path normal = normalize(p, config).normalForm;
    if (normal.kind() != PathKind::Rho)
        throw ContractError("transport: path does not reduce to reflexivity: " +
                            printPath(normal));
    return w;
}

CodeWitness encode(const Term& m, const Term& n, const Path& p, const EngineConfig& config) {
    if (!alphaEq(p.source(), m) || !alphaEq(p.target(), n))
        throw CoherenceError("encode: path runs " + printTerm(p.source()) + " -> " +
                             printTerm(p.target()) + ", expected " + printTerm(m) + " -> " +
                             printTerm(n));
    return transportCode(m, p, rfun(m), config);
}

Path decode(const Term& m, const Term& n, const CodeWitness& c) {
    requireNumeral(m, "decode: first argument");
    requireNumeral(n, "decode: second argument");
    if (code(m, n) == CodeType::Empty)
        throw UninhabitedError("decode: code(" + printTerm(m) + ", " + printTerm(n) +
                               ") is the empty type");
    if (!c.inhabited()) throw UninhabitedError("decode: no witness supplied");
    if (m.kind() == Term::Kind::Zero) return Path::rho(Term::zero());
    return Path::muSucc(decode(m.pred(), n.pred(), c));
}

bool natPathNormalizesToRho(const Path& p, const EngineConfig& config) {
    return normalize(p, config).normalForm.kind() == PathKind::Rho;
}

}  // namespace cpath
