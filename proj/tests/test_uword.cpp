#include <set>

#include "doctest.h"
#include "qqs/uword.hpp"

using namespace qqs;

namespace {

Action<SuperIndex> apoly_composites(int n) {
    return [n](const GenSymbol& g, const QPolyElement& x) { return gen_op(n, g)(x); };
}

Action<SuperIndex> apoly_closed() {
    return [](const GenSymbol& g, const QPolyElement& x) { return act_closed(g, x); };
}

}  // namespace

TEST_CASE("word text round trip") {
    for (const char* s : {"E1^(2) F2 Kb1 K1^-1", "1", "K2^3 Eb1 Fb2"}) CHECK(to_string(parse_word(s)) == s);
    CHECK(parse_word("  E1   F1 ").symbols.size() == 2);
    CHECK_THROWS_AS(parse_word("E1 Q2"), ParseError);
}

TEST_CASE("relation list covers every family") {
    auto rel = relations(3);
    std::set<std::string> fams;
    for (const auto& r : rel) fams.insert(r.id.substr(0, 3));
    CHECK(fams == std::set<std::string>{"QQ1", "QQ2", "QQ3", "QQ4", "QQ5", "QQ6"});
    std::set<std::string> ids;
    for (const auto& r : rel) ids.insert(r.id);
    CHECK(ids.size() == rel.size());
}

TEST_CASE("relations hold on the polynomial superalgebra") {
    for (auto [n, d] : {std::pair{2, 3}, std::pair{3, 2}}) {
        auto basis = qpoly_basis(n, d);
        auto act = apoly_composites(n);
        for (const Relation& r : relations(n))
            for (const auto& a : basis) {
                INFO(r.id, " at ", to_string(a));
                CHECK(relation_residual(r, act, QPolyElement::basis(a)).is_zero());
            }
    }
}

TEST_CASE("a perturbed relation is detected") {
    // Replacing v by v^2 in K_1 E_1 = v E_1 K_1 must leave a residual on X_2.
    Relation bad{"bad", as_combination(parse_word("K1 E1")) - as_combination(parse_word("E1 K1"), RatScalar::vpow(2))};
    SuperIndex x2({0, 1}, {0, 0});
    CHECK_FALSE(relation_residual(bad, apoly_closed(), QPolyElement::basis(x2)).is_zero());
}

TEST_CASE("root vectors of small rank") {
    CHECK(root_vector(1, 2, false) == as_combination(parse_word("E1")));
    CHECK(root_vector(2, 1, false) == as_combination(parse_word("F1")));
    CHECK(root_vector(2, 2, true) == as_combination(parse_word("Kb2")));
    WordCombination e13 = as_combination(parse_word("E1 E2")) - as_combination(parse_word("E2 E1"), RatScalar::vpow(1));
    CHECK(root_vector(1, 3, false) == e13);
    WordCombination f31 = as_combination(parse_word("F2 F1")) - as_combination(parse_word("F1 F2"), RatScalar::vpow(-1));
    CHECK(root_vector(3, 1, false) == f31);
    WordCombination eb13 = as_combination(parse_word("E1 Eb2")) - as_combination(parse_word("Eb2 E1"), RatScalar::vpow(1));
    CHECK(root_vector(1, 3, true) == eb13);
    WordCombination eb31 = as_combination(parse_word("Fb2 F1")) - as_combination(parse_word("F1 Fb2"), RatScalar::vpow(-1));
    CHECK(root_vector(3, 1, true) == eb31);
}

TEST_CASE("omega is an involution and swaps root vectors of rank one") {
    GeneratorWord w = parse_word("E1^(2) F2 Kb1 K1^-1 Eb2");
    CHECK(omega(omega(w)) == w);
    CHECK(to_string(omega(w)) == "Fb2 K1 Kb1 E2 F1^(2)");
    WordCombination c = as_combination(w, RatScalar::vpow(3));
    CHECK(omega(omega(c)) == c);
    CHECK(omega(c).begin()->second == RatScalar::vpow(-3));
    CHECK(omega(root_vector(1, 2, false)) == root_vector(2, 1, false));
    CHECK(omega(root_vector(1, 2, true)) == root_vector(2, 1, true));
}

TEST_CASE("monomial word for a 3x3 matrix") {
    SuperMatrix a(3);
    a.e(1, 3) = 1;
    a.e(2, 3) = 2;
    a.o(3, 3) = 1;
    a.o(2, 2) = 1;
    a.e(1, 2) = 1;
    a.e(3, 1) = 1;
    a.e(2, 1) = 2;
    a.e(3, 2) = 1;
    // Column 3: odd part F2 F1 Kb1, then E1^(1+1) E2^(1+2+1).
    // Column 2: F1 Kb1, then E1^(1+1). Column 1: nothing.
    // Lower part: F2^(1) F1^(3), then F2^(1).
    CHECK(to_string(monomial_word(a, {0, 0, 0})) == "F2 F1 Kb1 E1^(2) E2^(4) F1 Kb1 E1^(2) F2 F1^(3) F2");
    CHECK(to_string(monomial_word(a, {1, 0, -2})) == "K1 K3^-2 F2 F1 Kb1 E1^(2) E2^(4) F1 Kb1 E1^(2) F2 F1^(3) F2");
    CHECK(monomial_word(SuperMatrix(3), {0, 0, 0}).empty());
}

TEST_CASE("PBW word segments") {
    SuperMatrix a(2);
    a.e(1, 2) = 2;
    a.o(1, 2) = 1;
    a.o(2, 1) = 1;
    a.e(2, 1) = 3;
    // K^j E_{12}^{(2)} Ebar_{12} Ebar_{21} F_1^{(3)}
    CHECK(pbw_word(a, {1, 0}) == as_combination(parse_word("K1 E1^(2) Eb1 Fb1 F1^(3)")));
    SuperMatrix with_diag(2);
    with_diag.e(1, 1) = 1;
    CHECK_THROWS_AS(pbw_word(with_diag, {0, 0}), ContractError);
}

TEST_CASE("divided powers of composite root vectors") {
    WordCombination x = root_vector(1, 3, false);
    CHECK(divided_power(x, 2) * as_combination(GeneratorWord(), RatScalar(qfact(2))) == x * x);
    CHECK(divided_power(x, 0) == as_combination(GeneratorWord()));
}

TEST_CASE("K-binomials act as weight projections on polynomials") {
    // [K_1; 0 over t] on X^a with weight w = a_1 + b_1 is [w over t].
    auto act = apoly_closed();
    for (const auto& a : qpoly_basis(2, 4))
        for (int t = 0; t <= 3; ++t) {
            int w = a.even[0] + a.odd[0];
            QPolyElement got = evaluate(kbinom(1, 0, t), act, QPolyElement::basis(a));
            CHECK(got == QPolyElement::basis(a, RatScalar(qbinom(w, t))));
        }
}
