#include "cpath/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cpath/circle.hpp"
#include "cpath/lambda_paths.hpp"
#include "cpath/nat_paths.hpp"
#include "cpath/syntax.hpp"
#include "cpath/trace_io.hpp"

namespace cpath::cli {

const char* toString(Verb verb) {
    switch (verb) {
        case Verb::Normalize:
            return "normalize";
        case Verb::Equal:
            return "equal";
        case Verb::Trace:
            return "trace";
        case Verb::Winding:
            return "winding";
        case Verb::NatEncode:
            return "nat-encode";
        case Verb::NatDecode:
            return "nat-decode";
        case Verb::LambdaPath:
            return "lambda-path";
    }
    return "?";
}

Strategy parseStrategy(const std::string& name) {
    if (name == "lo") return Strategy::LeftmostOutermost;
    if (name == "priority") return Strategy::RulePriority;
    throw PreconditionError("unknown strategy '" + name + "' (expected lo or priority)");
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parseBool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw PreconditionError("expected a boolean, got '" + v + "'");
}

}  // namespace

void applyConfig(const std::string& text, Settings& settings) {
    std::istringstream lines(text);
    std::string line;
    int number = 0;
    while (std::getline(lines, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw PreconditionError("config line " + std::to_string(number) +
                                    ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "fuel") {
            std::size_t fuel = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), fuel);
            if (ec != std::errc() || ptr != value.data() + value.size())
                throw PreconditionError("config line " + std::to_string(number) +
                                        ": fuel must be a non-negative integer");
            settings.fuel = fuel;
        } else if (key == "strategy") {
            settings.strategy = parseStrategy(value);
        } else if (key == "rule39_literal") {
            settings.rule39Literal = parseBool(value);
        } else {
            throw PreconditionError("config line " + std::to_string(number) +
                                    ": unknown key '" + key + "'");
        }
    }
}

std::string resolveOperand(const std::string& arg, std::istream& in) {
    if (arg == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    if (arg.size() > 1 && arg[0] == '@') {
        std::ifstream file(arg.substr(1), std::ios::binary);
        if (!file) throw PreconditionError("cannot read " + arg.substr(1));
        std::ostringstream buf;
        buf << file.rdbuf();
        return buf.str();
    }
    return arg;
}

int exitCodeFor(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse:
        case ErrorCode::Coherence:
        case ErrorCode::Fuel:
        case ErrorCode::Uninhabited:
            return static_cast<int>(code);
        default:
            return 5;
    }
}

namespace {

void expectOperands(const Command& cmd, std::size_t n) {
    if (cmd.operands.size() != n)
        throw PreconditionError(std::string(toString(cmd.verb)) + " expects " +
                                std::to_string(n) + " operand(s)");
}

void writeTraceFile(const Settings& s, const Json& doc) {
    if (!s.traceOut) return;
    std::ofstream file(*s.traceOut, std::ios::binary);
    if (!file) throw PreconditionError("cannot write " + *s.traceOut);
    file << doc.dump(2) << "\n";
}

Term numeralOperand(const std::string& text) {
    Term t = parseTerm(text);
    if (!numeralValue(t)) throw PreconditionError("expected a numeral, got " + printTerm(t));
    return t;
}

void normalizeCmd(const Command& cmd, std::ostream& out) {
    expectOperands(cmd, 1);
    Path p = parsePath(cmd.operands[0]);
    auto result = normalize(p, cmd.settings.engine());
    Json doc = traceToJson(p, result.normalForm, result.trace);
    writeTraceFile(cmd.settings, doc);
    if (cmd.settings.json) {
        out << doc.dump(2) << "\n";
    } else {
        out << printPath(result.normalForm) << "\n";
        out << "steps: " << result.trace.size() << "\n";
    }
}

void traceCmd(const Command& cmd, std::ostream& out) {
    expectOperands(cmd, 1);
    Path p = parsePath(cmd.operands[0]);
    auto result = normalize(p, cmd.settings.engine());
    Json doc = traceToJson(p, result.normalForm, result.trace);
    writeTraceFile(cmd.settings, doc);
    if (cmd.settings.json)
        out << doc.dump(2) << "\n";
    else
        out << traceToText(p, result.normalForm, result.trace);
}

void equalCmd(const Command& cmd, std::ostream& out) {
    expectOperands(cmd, 2);
    Path p = parsePath(cmd.operands[0]);
    Path q = parsePath(cmd.operands[1]);
    bool same = rwEqual(p, q, cmd.settings.engine());
    if (cmd.settings.json)
        out << Json{{"left", printPath(p)}, {"right", printPath(q)}, {"equal", same}}.dump(2)
            << "\n";
    else
        out << (same ? "true" : "false") << "\n";
}

void windingCmd(const Command& cmd, std::ostream& out) {
    expectOperands(cmd, 1);
    LoopExpr w(parsePath(cmd.operands[0]));
    auto result = normalize(w.path(), cmd.settings.engine());
    std::int64_t n = toInteger(LoopExpr(result.normalForm));
    Json doc = traceToJson(w.path(), result.normalForm, result.trace);
    writeTraceFile(cmd.settings, doc);
    if (cmd.settings.json) {
        Json full{{"winding", n}};
        if (cmd.settings.showTrace) full["trace"] = doc;
        out << full.dump(2) << "\n";
        return;
    }
    out << n << "\n";
    if (cmd.settings.showTrace) out << traceToText(w.path(), result.normalForm, result.trace);
}

void natEncodeCmd(const Command& cmd, std::ostream& out) {
    expectOperands(cmd, 3);
    Term m = numeralOperand(cmd.operands[0]);
    Term n = numeralOperand(cmd.operands[1]);
    Path p = parsePath(cmd.operands[2]);
    CodeWitness w = encode(m, n, p, cmd.settings.engine());
    if (cmd.settings.json)
        out << Json{{"code", toString(code(m, n))}, {"witness", printTerm(*w.witness())}}.dump(2)
            << "\n";
    else
        out << printTerm(*w.witness()) << "\n";
}

void natDecodeCmd(const Command& cmd, std::ostream& out) {
    expectOperands(cmd, 2);
    Term m = numeralOperand(cmd.operands[0]);
    Term n = numeralOperand(cmd.operands[1]);
    Path p = decode(m, n, rfun(m));
    if (cmd.settings.json)
        out << Json{{"code", toString(code(m, n))}, {"path", printPath(p)}}.dump(2) << "\n";
    else
        out << printPath(p) << "\n";
}

void lambdaPathCmd(const Command& cmd, std::ostream& out) {
    expectOperands(cmd, 2);
    Term m = parseTerm(cmd.operands[0]);
    Term n = parseTerm(cmd.operands[1]);
    ReductionSequence left = reduceToNormal(m, cmd.settings.fuel);
    ReductionSequence right;
    try {
        right = reduceToNormal(n, cmd.settings.fuel);
    } catch (const DivergenceError&) {
        throw DivergenceError(DivergenceError::Side::Right, cmd.settings.fuel);
    }
    auto certificate = findPath(m, n, cmd.settings.fuel);
    if (!certificate) {
        if (cmd.settings.json)
            out << Json{{"left", printTerm(m)},
                        {"right", printTerm(n)},
                        {"left_normal_form", printTerm(left.last())},
                        {"right_normal_form", printTerm(right.last())},
                        {"certificate", nullptr}}
                       .dump(2)
                << "\n";
        else
            out << "no path: normal forms " << printTerm(left.last()) << " and "
                << printTerm(right.last()) << " differ\n";
        return;
    }
    Json doc = certificateToJson(left, right, *certificate);
    writeTraceFile(cmd.settings, doc);
    if (cmd.settings.json)
        out << doc.dump(2) << "\n";
    else
        out << certificateToText(left, right, *certificate);
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        switch (cmd.verb) {
            case Verb::Normalize:
                normalizeCmd(cmd, out);
                break;
            case Verb::Equal:
                equalCmd(cmd, out);
                break;
            case Verb::Trace:
                traceCmd(cmd, out);
                break;
            case Verb::Winding:
                windingCmd(cmd, out);
                break;
            case Verb::NatEncode:
                natEncodeCmd(cmd, out);
                break;
            case Verb::NatDecode:
                natDecodeCmd(cmd, out);
                break;
            case Verb::LambdaPath:
                lambdaPathCmd(cmd, out);
                break;
        }
        return 0;
    } catch (const Error& e) {
        err << "error (" << errorCodeName(e.code()) << "): " << e.what() << "\n";
        return exitCodeFor(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 5;
    }
}

}  // namespace cpath::cli
