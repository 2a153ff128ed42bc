#include <doctest.h>

#include "cpath/circle.hpp"
#include "cpath/error.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cpath;
using fx::P;

namespace {

LoopExpr L(const std::string& text) { return LoopExpr(P(text)); }

std::vector<RuleId> rulesOf(const RwTrace& t) {
    std::vector<RuleId> out;
    for (const RwStep& s : t.steps) out.push_back(s.rule);
    return out;
}

EngineConfig priority() {
    EngineConfig c;
    c.strategy = Strategy::RulePriority;
    return c;
}

}  // namespace

TEST_CASE("loop expressions") {
    CHECK(isLoopExpr(P("(tau loop (sigma (rho base)))")));
    CHECK_THROWS_AS(L("(mu loop (var f))"), PreconditionError);
    CHECK_THROWS_AS(L("(rho zero)"), CoherenceError);
    CHECK_FALSE(isLoopExpr(P("(xi x (rho (var x)))")));
}

TEST_CASE("winding numbers") {
    CHECK(circleNormalize(L("(rho base)")).n == 0);
    CHECK(circleNormalize(L("(tau (sigma loop) loop)")).n == 0);
    auto trace = normalize(P("(tau (sigma loop) loop)")).trace;
    CHECK(rulesOf(trace) == std::vector<RuleId>{RuleId::tsr});

    gen::Random r(71);
    for (int i = 0; i < 200; ++i) {
        auto w = gen::loopWord(r, 200);
        LoopExpr e(w.path);
        CHECK(circleNormalize(e).n == oracle::signedCount(w.path));
        CHECK(letterNormalize(e).result.n == oracle::signedCount(w.path));
    }
}

TEST_CASE("toInteger and toPath") {
    CHECK(toInteger(L("(rho base)")) == 0);
    CHECK(toInteger(L("loop")) == 1);
    CHECK(toInteger(L("(tau (sigma loop) (sigma loop))")) == -2);
    CHECK_THROWS_AS(toInteger(L("(tau loop (sigma loop))")), NonCanonicalError);
    CHECK_THROWS_AS(toInteger(L("(tau (tau loop loop) loop)")), NonCanonicalError);

    CHECK(samePath(toPath(0).path(), P("(rho base)")));
    CHECK(samePath(toPath(1).path(), P("loop")));
    CHECK(samePath(toPath(2).path(), P("(tau loop loop)")));
    CHECK(samePath(toPath(-1).path(), P("(sigma loop)")));
    CHECK(samePath(toPath(3).path(), groupOp(toPath(2), L("loop")).path()));
    CHECK(samePath(toPath(-3).path(), groupOp(toPath(-2), L("(sigma loop)")).path()));
    CHECK(printLoop(toPath(-3)) == "loop^-3");
    CHECK(printLoop(toPath(0)) == "loop^0");
    CHECK(printLoop(L("(tau loop (sigma loop))")) == "(tau loop (sigma loop))");
    for (std::int64_t n = -100; n <= 100; ++n) {
        CHECK(toInteger(toPath(n)) == n);
        CHECK(isNormal(toPath(n).path()));
    }
}

TEST_CASE("group structure") {
    CHECK(normalize(groupOp(L("loop"), L("(sigma loop)")).path()).normalForm.kind() ==
          PathKind::Rho);
    LoopExpr r = L("loop");
    CHECK(samePath(normalize(groupOp(r, groupIdentity()).path()).normalForm, r.path()));
    CHECK(circleNormalize(groupOp(toPath(2), toPath(3))).n == 5);
    CHECK(samePath(groupInverse(r).path(), P("(sigma loop)")));

    gen::Random g(72);
    for (int i = 0; i < 100; ++i) {
        LoopExpr a(gen::loopWord(g, g.between(0, 20)).path);
        LoopExpr b(gen::loopWord(g, g.between(0, 20)).path);
        LoopExpr c(gen::loopWord(g, g.between(0, 20)).path);
        CHECK(circleNormalize(groupOp(a, b)).n == circleNormalize(a).n + circleNormalize(b).n);
        CHECK(circleNormalize(groupOp(a, groupInverse(a))).n == 0);
        CHECK(circleNormalize(groupOp(groupInverse(a), a)).n == 0);
        CHECK(rwEqual(groupOp(a, groupOp(b, c)).path(), groupOp(groupOp(a, b), c).path()));
        Path nf = normalize(a.path()).normalForm;
        CHECK(rwEqual(toPath(toInteger(LoopExpr(nf))).path(), nf));
    }
}

TEST_CASE("inductive cases of the loop normal form") {
    // rho o loop = tau(loop, rho) -> loop
    auto a = normalize(groupOp(groupIdentity(), L("loop")).path());
    CHECK(rulesOf(a.trace) == std::vector<RuleId>{RuleId::trr});
    CHECK(samePath(a.normalForm, toPath(1).path()));
    CHECK((extendByLetter(0, 1).rule == ExtendCase::RhoThenLoop));

    // rho o sigma(loop) -> sigma(loop)
    auto b = normalize(groupOp(groupIdentity(), L("(sigma loop)")).path());
    CHECK(rulesOf(b.trace) == std::vector<RuleId>{RuleId::trr});
    CHECK(samePath(b.normalForm, toPath(-1).path()));
    CHECK((extendByLetter(0, -1).rule == ExtendCase::RhoThenInverse));

    // loop^n o loop is loop^(n+1) on the nose
    for (std::int64_t n = 1; n <= 5; ++n) {
        Path next = groupOp(toPath(n), L("loop")).path();
        CHECK(samePath(next, toPath(n + 1).path()));
        CHECK(normalize(next).trace.empty());
        CHECK((extendByLetter(n, 1).rule == ExtendCase::PositiveThenLoop));
        CHECK(extendByLetter(n, 1).after == n + 1);
    }

    // loop^n o sigma(loop): tt relates the two bracketings, then tsr and tlr
    for (std::int64_t n = 1; n <= 5; ++n) {
        LoopExpr lower = toPath(n - 1);
        LoopExpr grouped = groupOp(lower, groupOp(L("loop"), L("(sigma loop)")));
        LoopExpr flat = groupOp(groupOp(lower, L("loop")), L("(sigma loop)"));
        auto tt = applyRule(RuleId::tt, grouped.path());
        REQUIRE(tt);
        CHECK(samePath(*tt, flat.path()));
        auto run = normalize(grouped.path(), priority());
        // with n = 1 the remainder is rho(base) and trr closes instead
        RuleId last = n == 1 ? RuleId::trr : RuleId::tlr;
        CHECK(rulesOf(run.trace) == std::vector<RuleId>{RuleId::tsr, last});
        CHECK(samePath(run.normalForm, lower.path()));
        CHECK(circleNormalize(LoopExpr(groupOp(toPath(n), L("(sigma loop)")))).n == n - 1);
        CHECK((extendByLetter(n, -1).rule == ExtendCase::PositiveThenInverse));
    }

    // loop^-n o loop: tt, then tr and tlr
    for (std::int64_t n = 1; n <= 5; ++n) {
        LoopExpr upper = toPath(-(n - 1));
        LoopExpr grouped = groupOp(upper, groupOp(L("(sigma loop)"), L("loop")));
        LoopExpr flat = groupOp(groupOp(upper, L("(sigma loop)")), L("loop"));
        auto tt = applyRule(RuleId::tt, grouped.path());
        REQUIRE(tt);
        CHECK(samePath(*tt, flat.path()));
        auto run = normalize(grouped.path(), priority());
        RuleId last = n == 1 ? RuleId::trr : RuleId::tlr;
        CHECK(rulesOf(run.trace) == std::vector<RuleId>{RuleId::tr, last});
        CHECK(samePath(run.normalForm, upper.path()));
        CHECK(circleNormalize(groupOp(toPath(-n), L("loop"))).n == -(n - 1));
        CHECK((extendByLetter(-n, 1).rule == ExtendCase::NegativeThenLoop));
    }

    // loop^-n o sigma(loop) is loop^-(n+1) on the nose
    for (std::int64_t n = 1; n <= 5; ++n) {
        Path next = groupOp(toPath(-n), L("(sigma loop)")).path();
        CHECK(samePath(next, toPath(-(n + 1)).path()));
        CHECK((extendByLetter(-n, -1).rule == ExtendCase::NegativeThenInverse));
    }
}

TEST_CASE("letters are read in travel order") {
    CHECK(loopLetters(L("(tau loop (sigma loop))")) == std::vector<int>{1, -1});
    CHECK(loopLetters(L("(sigma (tau loop (sigma loop)))")) == std::vector<int>{1, -1});
    CHECK(loopLetters(L("(sigma (tau loop loop))")) == std::vector<int>{-1, -1});
    auto run = letterNormalize(L("(tau loop (tau loop (sigma loop)))"));
    REQUIRE(run.steps.size() == 3);
    CHECK((run.steps[2].rule == ExtendCase::PositiveThenInverse));
    CHECK(run.result.n == 1);
}
