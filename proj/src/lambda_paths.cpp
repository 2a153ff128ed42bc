#include "cpath/lambda_paths.hpp"

#include "cpath/syntax.hpp"

namespace cpath {

std::optional<Redex> nextRedex(const Term& t) {
    auto redexes = findRedexes(t);
    for (const Redex& r : redexes)
        if (r.kind == RedexKind::Eta) return r;
    if (!redexes.empty()) return redexes.front();
    return std::nullopt;
}

ReductionSequence reduceToNormal(const Term& t, std::size_t fuel) {
    ReductionSequence seq;
    seq.terms.push_back(t);
    while (auto redex = nextRedex(seq.terms.back())) {
        if (seq.steps.size() >= fuel)
            throw DivergenceError(DivergenceError::Side::Left, fuel);
        seq.terms.push_back(contractAt(seq.terms.back(), redex->location));
        seq.steps.push_back({redex->location,
                             redex->kind == RedexKind::Beta ? StepKind::Beta : StepKind::Eta,
                             Direction::Forward});
    }
    return seq;
}

namespace {

[[noreturn]] void incoherent(std::size_t index, const std::string& why) {
    throw CoherenceError("reduction sequence incoherent at step " + std::to_string(index) +
                         ": " + why);
}

Path atomFor(const Term& t, const SequenceStep& step) {
    return step.kind == StepKind::Beta ? Path::beta(t, step.location)
                                       : Path::eta(t, step.location);
}

}  // namespace

Path pathFromSequence(const ReductionSequence& seq) {
    if (seq.terms.empty()) throw CoherenceError("reduction sequence has no terms");
    if (seq.terms.size() != seq.steps.size() + 1)
        throw CoherenceError("reduction sequence needs exactly one more term than steps");

    std::optional<Path> acc;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const SequenceStep& step = seq.steps[i];
        const Term& from = seq.terms[i];
        const Term& to = seq.terms[i + 1];
        if (step.kind == StepKind::Alpha) {
            if (!alphaEq(from, to)) incoherent(i, "terms are not alpha-equivalent");
            continue;
        }
        const Term& redexTerm = step.direction == Direction::Forward ? from : to;
        const Term& reduct = step.direction == Direction::Forward ? to : from;
        auto kind = redexKindAt(redexTerm, step.location);
        RedexKind wanted = step.kind == StepKind::Beta ? RedexKind::Beta : RedexKind::Eta;
        if (kind != wanted)
            incoherent(i, std::string("no ") + toString(wanted) + "-redex at " +
                              toString(step.location) + " in " + printTerm(redexTerm));
        Path atom = atomFor(redexTerm, step);
        if (!alphaEq(atom.target(), reduct))
            incoherent(i, "contraction gives " + printTerm(atom.target()) + ", recorded " +
                              printTerm(reduct));
        if (step.direction == Direction::Reversed) atom = Path::sigma(atom);
        acc = acc ? Path::tau(*acc, atom) : atom;
    }
    return acc ? *acc : Path::rho(seq.first());
}

std::optional<Path> findPath(const Term& m, const Term& n, std::size_t fuel) {
    ReductionSequence left = reduceToNormal(m, fuel);
    ReductionSequence right;
    try {
        right = reduceToNormal(n, fuel);
    } catch (const DivergenceError&) {
        throw DivergenceError(DivergenceError::Side::Right, fuel);
    }
    if (!alphaEq(left.last(), right.last())) return std::nullopt;

    bool leftMoves = !left.steps.empty();
    bool rightMoves = !right.steps.empty();
    if (!leftMoves && !rightMoves) return Path::rho(m);
    if (!rightMoves) return pathFromSequence(left);
    Path back = Path::sigma(pathFromSequence(right));
    if (!leftMoves) return back;
    return Path::tau(pathFromSequence(left), back);
}

}  // namespace cpath
