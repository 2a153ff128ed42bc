#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cpath/error.hpp"
#include "cpath/path.hpp"
#include "cpath/term.hpp"

namespace cpath {

enum class StepKind : std::uint8_t { Beta, Eta, Alpha };
enum class Direction : std::uint8_t { Forward, Reversed };

struct SequenceStep {
    Location location;
    StepKind kind = StepKind::Beta;
    /// Reversed: terms[i+1] contracts to terms[i].
    Direction direction = Direction::Forward;
};

/// P0, ..., Pn with one recorded relation between each adjacent pair.
struct ReductionSequence {
    std::vector<Term> terms;
    std::vector<SequenceStep> steps;

    const Term& first() const { return terms.front(); }
    const Term& last() const { return terms.back(); }
};

/// Raised when a term does not reach normal form within the fuel budget.
class DivergenceError : public Error {
   public:
    enum class Side { Left, Right };

    DivergenceError(Side side, std::size_t fuel)
        : Error(ErrorCode::Fuel, std::string(side == Side::Left ? "left" : "right") +
                                     " term did not reach beta-eta normal form within " +
                                     std::to_string(fuel) + " steps"),
          side_(side) {}

    Side side() const { return side_; }

   private:
    Side side_;
};

/// Next contraction chosen by the normalizer: the leftmost-outermost
/// eta-redex if there is one, otherwise the leftmost-outermost beta-redex.
std::optional<Redex> nextRedex(const Term& t);

/// Forward sequence from t to its beta-eta normal form. Throws
/// DivergenceError(Left) after `fuel` contractions.
ReductionSequence reduceToNormal(const Term& t, std::size_t fuel);

/// Left-nested tau fold of the sequence's steps. Alpha steps contribute no
/// atom; an empty fold yields rho of the first term. Throws CoherenceError
/// naming the first index whose recorded step does not relate its terms.
Path pathFromSequence(const ReductionSequence& seq);

/// A path from m to n through their common normal form, or nullopt when the
/// normal forms differ.
std::optional<Path> findPath(const Term& m, const Term& n, std::size_t fuel = 10000);

}  // namespace cpath
