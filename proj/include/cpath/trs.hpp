#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpath/error.hpp"
#include "cpath/path.hpp"

namespace cpath {

/// The 42 rewrite rules over paths, numbered 1..42 in catalog order.
enum class RuleId : std::uint8_t {
    sr = 1, ss, tr, tsr, trr, tlr, slr, srr, sls, slss, srs, srrr,
    mx2l1, mx2l2, mx2r1, mx2r2, mx3l, mx3r, mxl, mxr, mx, mxx, xmr, mx1r,
    stss, ssbl, ssbr, sx, sxss, sm, smss, smsss,
    tsbll, tsbrl, tsblr, tsbrr, tt, tts, tst,
    mxp, nxp, xxp,
};

inline constexpr int kRuleCount = 42;

int ruleNumber(RuleId id);
std::string_view ruleLabel(RuleId id);
std::optional<RuleId> ruleFromLabel(std::string_view label);
RuleId ruleFromNumber(int number);

struct RuleOptions {
    /// Rule tst rewrites to the inner u as printed in its original statement
    /// instead of v, and skips the endpoint check for that rule.
    bool rule39Literal = false;
};

struct Rule {
    RuleId id;
    int number;
    std::string_view label;
    std::string_view lhs;
    std::string_view rhs;
    /// Candidate right-hand side for p at its root, before the endpoint check.
    std::optional<Path> (*rewrite)(const Path& p, const RuleOptions& options);
};

std::span<const Rule> ruleCatalog();
const Rule& rule(RuleId id);

/// Fires `id` at the root of p. A match whose result would change the
/// endpoints of p is treated as no match (except tst in literal mode).
std::optional<Path> applyRule(RuleId id, const Path& p, const RuleOptions& options = {});

/// Rules that can fire on a node of this kind, in catalog order.
std::span<const RuleId> rulesForKind(PathKind kind);

enum class Strategy {
    /// First redex in preorder; at each node rules are tried in catalog order.
    LeftmostOutermost,
    /// Lowest-numbered applicable rule anywhere; ties go to the leftmost-outermost node.
    RulePriority,
};

const char* toString(Strategy strategy);

struct EngineConfig {
    std::size_t fuel = 10000;
    Strategy strategy = Strategy::LeftmostOutermost;
    bool rule39Literal = false;

    RuleOptions ruleOptions() const { return {rule39Literal}; }
};

struct RwStep {
    RuleId rule;
    Location position;
    Path before;
    Path after;
};

struct RwTrace {
    std::vector<RwStep> steps;

    bool empty() const { return steps.empty(); }
    std::size_t size() const { return steps.size(); }
    /// Each step starts where the previous one ended.
    bool chained() const;
};

class FuelExhausted : public Error {
   public:
    FuelExhausted(std::size_t fuel, RwTrace partial)
        : Error(ErrorCode::Fuel,
                "rewrite fuel of " + std::to_string(fuel) + " steps exhausted"),
          partial_(std::move(partial)) {}

    const RwTrace& partialTrace() const { return partial_; }

   private:
    RwTrace partial_;
};

std::optional<RwStep> contractOnce(const Path& p, const EngineConfig& config = {});

bool isNormal(const Path& p, const EngineConfig& config = {});

struct Normalization {
    Path normalForm;
    RwTrace trace;
};

/// Rewrites p until no rule applies. Throws CoherenceError if p is not
/// well formed and FuelExhausted after config.fuel steps.
Normalization normalize(const Path& p, const EngineConfig& config = {});

/// Equality of normal forms (up to alpha, including xi binders). Throws
/// CoherenceError if the endpoints of p and q differ.
bool rwEqual(const Path& p, const Path& q, const EngineConfig& config = {});

/// Structural recursion collapsing a path built from rho atoms with sigma,
/// tau, mu, nu and xi: children first, then sr / trr / mxp / nxp / xxp at
/// the node. Throws PreconditionError for any other shape.
RwTrace reduceRhoGenerated(const Path& p);

}  // namespace cpath
