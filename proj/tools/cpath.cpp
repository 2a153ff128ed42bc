#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cpath/cli.hpp"
#include "cpath/error.hpp"

using namespace cpath;

namespace {

struct Verbs {
    cli::Verb verb;
    const char* help;
    std::vector<std::string> operandNames;
};

const Verbs kVerbs[] = {
    {cli::Verb::Normalize, "Rewrite a path to normal form", {"path"}},
    {cli::Verb::Equal, "Decide rw-equality of two paths", {"path", "path"}},
    {cli::Verb::Trace, "Print every rewrite step", {"path"}},
    {cli::Verb::Winding, "Winding number of a loop expression", {"path"}},
    {cli::Verb::NatEncode, "encode m n p", {"m", "n", "path"}},
    {cli::Verb::NatDecode, "decode m n", {"m", "n"}},
    {cli::Verb::LambdaPath, "Build a beta-eta path between two terms", {"term", "term"}},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computational paths: rewrite, compare and certify equality proofs"};
    app.require_subcommand(1);

    std::size_t fuel = 0;
    std::string strategy;
    std::string configFile;
    std::string traceOut;
    bool json = false;
    bool literal = false;
    bool showTrace = false;

    auto* fuelOpt = app.add_option("--fuel", fuel, "Rewrite step budget (default 10000)");
    auto* strategyOpt = app.add_option("--strategy", strategy, "lo or priority")
                            ->check(CLI::IsMember({"lo", "priority"}));
    app.add_option("--config", configFile, "key=value file: fuel, strategy, rule39_literal");
    app.add_option("--trace-out", traceOut, "Also write the JSON trace to this file");
    app.add_flag("--json", json, "Machine-readable output");
    auto* literalOpt =
        app.add_flag("--rule39-literal", literal, "Rule tst rewrites to u as printed");
    app.add_flag("--trace", showTrace, "winding: print the rewrite trace too");

    std::vector<std::pair<CLI::App*, cli::Verb>> subs;
    std::vector<std::string> operands;
    for (const auto& v : kVerbs) {
        auto* sub = app.add_subcommand(cli::toString(v.verb), v.help);
        std::string names;
        for (const auto& n : v.operandNames) names += (names.empty() ? "" : " ") + n;
        sub->add_option("operands", operands,
                        names + " (text, - for stdin, @file for a file)")
            ->expected(static_cast<int>(v.operandNames.size()))
            ->required();
        sub->fallthrough();
        subs.emplace_back(sub, v.verb);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 5;
    }

    cli::Command cmd;
    try {
        if (!configFile.empty()) {
            std::ifstream in(configFile);
            if (!in) throw PreconditionError("cannot read config " + configFile);
            std::ostringstream buf;
            buf << in.rdbuf();
            cli::applyConfig(buf.str(), cmd.settings);
        }
        if (fuelOpt->count()) cmd.settings.fuel = fuel;
        if (strategyOpt->count()) cmd.settings.strategy = cli::parseStrategy(strategy);
        if (literalOpt->count()) cmd.settings.rule39Literal = literal;
        cmd.settings.json = json;
        cmd.settings.showTrace = showTrace;
        if (!traceOut.empty()) cmd.settings.traceOut = traceOut;
        for (auto& [sub, verb] : subs)
            if (sub->parsed()) cmd.verb = verb;
        for (const auto& op : operands) cmd.operands.push_back(cli::resolveOperand(op, std::cin));
    } catch (const Error& e) {
        std::cerr << "error (" << errorCodeName(e.code()) << "): " << e.what() << "\n";
        return cli::exitCodeFor(e.code());
    }
    return cli::run(cmd, std::cout, std::cerr);
}
