#include "doctest.h"
#include "qqs/coeff.hpp"

using namespace qqs;

namespace {

RatScalar v(int k = 1) { return RatScalar::vpow(k); }

// [c] computed as an honest quotient in Q(v).
RatScalar qint_by_division(int c) { return (v(c) - v(-c)) / (v() - v(-1)); }

// Gaussian binomial from the recurrence [c, m] = v^{-m}[c-1, m] + v^{c-m}[c-1, m-1].
RatScalar qbinom_pascal(int c, int m) {
    if (m == 0) return 1;
    if (c < m) return 0;
    return v(-m) * qbinom_pascal(c - 1, m) + v(c - m) * qbinom_pascal(c - 1, m - 1);
}

long binom(int c, int m) {
    long r = 1;
    for (int k = 1; k <= m; ++k) r = r * (c - m + k) / k;
    return r;
}

}  // namespace

TEST_CASE("quantum integers agree with the quotient definition") {
    for (int c = -8; c <= 12; ++c) {
        CHECK(RatScalar(qint(c)) == qint_by_division(c));
        CHECK(specialize_v1(RatScalar(qint(c))) == c);
    }
    CHECK(to_string(qint(3)) == "q^2 + 1 + q^-2");
}

TEST_CASE("gaussian binomials match the q-Pascal recurrence") {
    for (int c = 0; c <= 9; ++c)
        for (int m = 0; m <= c; ++m) {
            CHECK(RatScalar(qbinom(c, m)) == qbinom_pascal(c, m));
            CHECK(specialize_v1(RatScalar(qbinom(c, m))) == binom(c, m));
        }
    CHECK(qbinom(4, 2) * qfact(2) == qint(4) * qint(3));
}

TEST_CASE("weighted binomial is the binomial of the shifted top") {
    for (int lam = 0; lam <= 4; ++lam)
        for (int c = 0; c <= 3; ++c)
            for (int t = 0; t <= lam + c; ++t) CHECK(qbinom_weight(lam, c, t) == qbinom(lam + c, t));
}

TEST_CASE("quantum integer identities") {
    const LaurentPoly s = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
    for (int a = 1; a <= 10; ++a) {
        CHECK(qint(a + 2) + qint(a) == s * qint(a + 1));
        CHECK(qint(a + 2) - qint(a) == LaurentPoly::monomial(a + 1) + LaurentPoly::monomial(-a - 1));
        CHECK(qint(a + 1) - LaurentPoly::monomial(1) * qint(a) == LaurentPoly::monomial(-a));
        CHECK(qint(a + 2) - LaurentPoly::monomial(2) * qint(a) == s * LaurentPoly::monomial(-a));
    }
}

TEST_CASE("canonical form") {
    RatScalar x = (v(2) - 1) / (v() - 1);
    CHECK(x.is_laurent());
    CHECK(x == v() + 1);

    RatScalar y = v() / (RatScalar(2) * v());
    CHECK(y == RatScalar(mpq_class(1, 2)));

    RatScalar z = RatScalar(1) / (RatScalar(3) * v(2) + RatScalar(6) * v(3));
    CHECK(z.den().coeff(0) != 0);
    CHECK(z.den().coeff(z.den().max_exp()) == 1);
    CHECK(z * (RatScalar(3) * v(2) + RatScalar(6) * v(3)) == RatScalar(1));

    RatScalar c = odd_square_coeff();
    CHECK(c * (v() + v(-1)) == v() - v(-1));
    CHECK(specialize_v1(c) == 0);
    CHECK((c + 1) - c == RatScalar(1));
    CHECK(c.bar() == -c);
    CHECK(v(3).is_signed_vpow());
    CHECK((-v(-2)).is_signed_vpow());
    CHECK_FALSE((v() + 1).is_signed_vpow());
}

TEST_CASE("arithmetic errors") {
    CHECK_THROWS_AS(RatScalar(1) / RatScalar(0), DivisionByZero);
    CHECK_THROWS_AS(RatScalar(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(specialize_v1(RatScalar(1) / (v() - 1)), EvaluationError);
    CHECK_THROWS_AS(qfact(-1), ContractError);
    CHECK_THROWS_AS(parse_scalar("q^"), ParseError);
    CHECK_THROWS_AS(parse_scalar("(q + 1"), ParseError);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
}

TEST_CASE("text round trip") {
    const RatScalar samples[] = {
        RatScalar(0),
        RatScalar(mpq_class(-3, 7)),
        v(-3) - RatScalar(mpq_class(5, 2)) * v(4) + 1,
        odd_square_coeff(),
        RatScalar(1) / (v(2) - v(-2)),
        (RatScalar(2) * v() + 1) / (v(3) - v() + RatScalar(mpq_class(1, 3))),
    };
    for (const RatScalar& s : samples) CHECK(parse_scalar(to_string(s)) == s);
    CHECK(parse_scalar("v^2 - 2*v^(-1)") == v(2) - RatScalar(2) * v(-1));
    CHECK(parse_scalar("(q - q^-1)/(q + q^-1)") == odd_square_coeff());
    CHECK(parse_scalar(" 3 / 6 ") == RatScalar(mpq_class(1, 2)));
}
