#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cpath/trs.hpp"

namespace cpath::cli {

enum class Verb { Normalize, Equal, Trace, Winding, NatEncode, NatDecode, LambdaPath };

const char* toString(Verb verb);

struct Settings {
    std::size_t fuel = 10000;
    Strategy strategy = Strategy::LeftmostOutermost;
    bool rule39Literal = false;
    bool json = false;
    /// winding: also print the rewrite trace.
    bool showTrace = false;
    /// When set, the JSON trace is written here as well.
    std::optional<std::string> traceOut;

    EngineConfig engine() const { return {fuel, strategy, rule39Literal}; }
};

/// Operands are raw texts already resolved from files or stdin.
struct Command {
    Verb verb = Verb::Normalize;
    std::vector<std::string> operands;
    Settings settings;
};

/// key=value lines with keys fuel, strategy, rule39_literal; '#' comments.
/// Unknown keys or bad values throw PreconditionError.
void applyConfig(const std::string& text, Settings& settings);

Strategy parseStrategy(const std::string& name);

/// "-" reads stdin, "@path" reads a file, anything else is the text itself.
std::string resolveOperand(const std::string& arg, std::istream& in);

/// 0 on success; 1 parse, 2 coherence, 3 fuel, 4 uninhabited premise, 5 other.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

int exitCodeFor(ErrorCode code);

}  // namespace cpath::cli
