#include "cpath/trs.hpp"

#include <limits>

#include "cpath/syntax.hpp"

namespace cpath {

const char* toString(Strategy strategy) {
    return strategy == Strategy::LeftmostOutermost ? "lo" : "priority";
}

bool RwTrace::chained() const {
    for (std::size_t i = 1; i < steps.size(); ++i)
        if (!samePath(steps[i - 1].after, steps[i].before)) return false;
    return true;
}

namespace {

struct Found {
    RuleId rule;
    Location position;
    Path replacement;
};

std::optional<Found> firstAt(const Path& node, const RuleOptions& options) {
    for (RuleId id : rulesForKind(node.kind()))
        if (auto rhs = applyRule(id, node, options)) return Found{id, {}, std::move(*rhs)};
    return std::nullopt;
}

std::optional<Found> leftmostOutermost(const Path& p, Location& here,
                                       const RuleOptions& options) {
    if (auto found = firstAt(p, options)) {
        found->position = here;
        return found;
    }
    for (std::uint32_t i = 0; i < p.childCount(); ++i) {
        here.steps.push_back(i);
        auto found = leftmostOutermost(p.child(i), here, options);
        here.steps.pop_back();
        if (found) return found;
    }
    return std::nullopt;
}

void lowestRule(const Path& p, Location& here, const RuleOptions& options,
                std::optional<Found>& best) {
    // Only rules numbered below the current best can improve on it.
    for (RuleId id : rulesForKind(p.kind())) {
        if (best && ruleNumber(id) >= ruleNumber(best->rule)) break;
        if (auto rhs = applyRule(id, p, options)) {
            best = Found{id, here, std::move(*rhs)};
            break;
        }
    }
    for (std::uint32_t i = 0; i < p.childCount(); ++i) {
        here.steps.push_back(i);
        lowestRule(p.child(i), here, options, best);
        here.steps.pop_back();
    }
}

}  // namespace

std::optional<RwStep> contractOnce(const Path& p, const EngineConfig& config) {
    Location here;
    std::optional<Found> found;
    if (config.strategy == Strategy::LeftmostOutermost) {
        found = leftmostOutermost(p, here, config.ruleOptions());
    } else {
        lowestRule(p, here, config.ruleOptions(), found);
    }
    if (!found) return std::nullopt;
    Path after = replaceSubpath(p, found->position, std::move(found->replacement));
    return RwStep{found->rule, std::move(found->position), p, std::move(after)};
}

bool isNormal(const Path& p, const EngineConfig& config) {
    EngineConfig lo = config;
    lo.strategy = Strategy::LeftmostOutermost;
    return !contractOnce(p, lo).has_value();
}

Normalization normalize(const Path& p, const EngineConfig& config) {
    if (auto problem = firstIncoherence(p))
        throw CoherenceError("cannot normalize an incoherent path: " + *problem);
    RwTrace trace;
    Path current = p;
    for (;;) {
        auto step = contractOnce(current, config);
        if (!step) return {std::move(current), std::move(trace)};
        if (trace.size() >= config.fuel) throw FuelExhausted(config.fuel, std::move(trace));
        current = step->after;
        trace.steps.push_back(std::move(*step));
    }
}

bool rwEqual(const Path& p, const Path& q, const EngineConfig& config) {
    if (!alphaEq(p.source(), q.source()) || !alphaEq(p.target(), q.target()))
        throw CoherenceError("rw-equality needs common endpoints: " + printTerm(p.source()) +
                             " -> " + printTerm(p.target()) + " vs " +
                             printTerm(q.source()) + " -> " + printTerm(q.target()));
    Path left = normalize(p, config).normalForm;
    Path right = normalize(q, config).normalForm;
    return alphaEqPath(left, right);
}

namespace {

class RhoReducer {
   public:
    explicit RhoReducer(Path whole) : current_(std::move(whole)) {}

    void reduce(const Location& at) {
        const Path node = subpathAt(current_, at);
        for (std::uint32_t i = 0; i < node.childCount(); ++i) reduce(at.child(i));
        RuleId id;
        switch (node.kind()) {
            case PathKind::Rho:
                return;
            case PathKind::Sigma:
                id = RuleId::sr;
                break;
            case PathKind::Tau:
                id = RuleId::trr;
                break;
            case PathKind::Mu:
                id = RuleId::mxp;
                break;
            case PathKind::Nu:
                id = RuleId::nxp;
                break;
            case PathKind::Xi:
                id = RuleId::xxp;
                break;
            default:
                throw PreconditionError(std::string("not a rho-generated path: found ") +
                                        keyword(node.kind()));
        }
        const Path& reduced = subpathAt(current_, at);
        auto rhs = applyRule(id, reduced);
        if (!rhs)
            throw ContractError(std::string("rule ") + std::string(ruleLabel(id)) +
                                " did not apply at " + toString(at));
        Path after = replaceSubpath(current_, at, *rhs);
        trace_.steps.push_back(RwStep{id, at, current_, after});
        current_ = std::move(after);
    }

    RwTrace take() { return std::move(trace_); }

   private:
    Path current_;
    RwTrace trace_;
};

}  // namespace

RwTrace reduceRhoGenerated(const Path& p) {
    if (!isRhoGenerated(p))
        throw PreconditionError("reduceRhoGenerated expects a path built from rho with "
                                "sigma, tau, mu, nu and xi only");
    if (auto problem = firstIncoherence(p)) throw CoherenceError(*problem);
    RhoReducer reducer(p);
    reducer.reduce(Location{});
    return reducer.take();
}

}  // namespace cpath
