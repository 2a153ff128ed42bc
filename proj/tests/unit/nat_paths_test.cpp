#include <doctest.h>

#include "cpath/nat_paths.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace cpath;
using fx::P;
using fx::T;

TEST_CASE("code") {
    CHECK((code(T("0"), T("0")) == CodeType::Unit));
    CHECK((code(T("(succ zero)"), T("0")) == CodeType::Empty));
    CHECK((code(T("0"), T("2")) == CodeType::Empty));
    CHECK((code(T("3"), T("3")) == CodeType::Unit));
    CHECK_THROWS_AS(code(T("(var n)"), T("0")), PreconditionError);
}

TEST_CASE("code is inhabited exactly on the diagonal") {
    for (std::uint64_t m = 0; m <= 50; ++m)
        for (std::uint64_t n = 0; n <= 50; ++n)
            CHECK(((code(Term::numeral(m), Term::numeral(n)) == CodeType::Unit) == (m == n)));
}

TEST_CASE("r gives star") {
    CHECK(rfun(T("0")).witness()->kind() == Term::Kind::Star);
    CHECK(rfun(T("1")) == CodeWitness::star());
    for (std::uint64_t n = 0; n <= 20; ++n) {
        CHECK((code(Term::numeral(n), Term::numeral(n)) == CodeType::Unit));
        CHECK(rfun(Term::numeral(n)).inhabited());
    }
}

TEST_CASE("transport along code") {
    CodeWitness star = CodeWitness::star();
    CHECK(transportCode(T("4"), P("(rho 4)"), star) == star);
    CHECK(transportCode(T("1"), P("(mu (rho 0) succ)"), star) == star);
    CHECK_THROWS_AS(transportCode(T("2"), P("(rho 3)"), star), ContractError);
    CHECK_THROWS_AS(transportCode(T("3"), P("(rho 3)"), CodeWitness::absent()), ContractError);
    CHECK_THROWS_AS(transportCode(T("0"), P("(xi1 (rho 0))"), star), ContractError);

    gen::Random r(61);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t n = static_cast<std::uint64_t>(r.between(0, 20));
        Path p = gen::rhoOver(r, Term::numeral(n), 6);
        CHECK(transportCode(Term::numeral(n), p, star) == star);
    }
}

TEST_CASE("encode") {
    CHECK(encode(T("0"), T("0"), P("(rho 0)")) == CodeWitness::star());
    for (std::uint64_t n = 0; n <= 20; ++n)
        CHECK(encode(Term::numeral(n), Term::numeral(n), Path::rho(Term::numeral(n))) ==
              rfun(Term::numeral(n)));
    CHECK(encode(T("1"), T("1"), P("(mu (rho 0) succ)")) == CodeWitness::star());
    CHECK_THROWS_AS(encode(T("1"), T("2"), P("(rho 1)")), CoherenceError);
}

TEST_CASE("decode") {
    CHECK(samePath(decode(T("0"), T("0"), CodeWitness::star()), P("(rho 0)")));
    Path one = decode(T("1"), T("1"), CodeWitness::star());
    CHECK(samePath(one, P("(mu (rho 0) succ)")));
    CHECK(rwEqual(one, P("(rho 1)")));
    CHECK_THROWS_AS(decode(T("2"), T("0"), CodeWitness::star()), UninhabitedError);
    CHECK_THROWS_AS(decode(T("0"), T("1"), CodeWitness::star()), UninhabitedError);
    CHECK_THROWS_AS(decode(T("1"), T("1"), CodeWitness::absent()), UninhabitedError);
    Path five = decode(T("5"), T("5"), CodeWitness::star());
    CHECK(alphaEq(five.source(), T("5")));
    CHECK(alphaEq(five.target(), T("5")));
}

TEST_CASE("round trips") {
    gen::Random r(62);
    for (std::uint64_t m = 0; m <= 20; ++m) {
        Term n = Term::numeral(m);
        CHECK(encode(n, n, decode(n, n, CodeWitness::star())) == CodeWitness::star());
        for (int k = 0; k < 5; ++k) {
            Path p = gen::rhoOver(r, n, 6);
            Path back = decode(n, n, encode(n, n, p));
            CHECK(rwEqual(back, normalize(p).normalForm));
        }
    }
}

TEST_CASE("paths between numerals normalize to rho") {
    CHECK(natPathNormalizesToRho(P("(sigma (rho 0))")));
    CHECK(natPathNormalizesToRho(P("(rho 5)")));
    CHECK_FALSE(natPathNormalizesToRho(P("(xi1 (rho 5))")));
    gen::Random r(63);
    for (int i = 0; i < 300; ++i) {
        Path p = gen::rhoGenerated(r, 10, 20);
        CHECK(natPathNormalizesToRho(p));
    }
}
