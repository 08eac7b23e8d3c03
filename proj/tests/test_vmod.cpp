#include "doctest.h"
#include "qqs/vmod.hpp"

using namespace qqs;

namespace {

std::vector<GenSymbol> generators(int n) {
    std::vector<GenSymbol> gs{{GenKind::Kb, 1, 1}};
    for (int i = 1; i <= n; ++i) {
        gs.push_back({GenKind::K, i, 1});
        gs.push_back({GenKind::Kinv, i, 1});
    }
    for (int h = 1; h < n; ++h)
        for (int m = 1; m <= 2; ++m) {
            gs.push_back({GenKind::E, h, m});
            gs.push_back({GenKind::F, h, m});
        }
    return gs;
}

std::vector<std::vector<int>> small_shifts() {
    std::vector<std::vector<int>> out;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b) out.push_back({a, b});
    return out;
}

SuperMatrix m2(int e11, int e12, int e21, int e22, int o11, int o12, int o21, int o22) {
    SuperMatrix a(2);
    a.e(1, 1) = e11;
    a.e(1, 2) = e12;
    a.e(2, 1) = e21;
    a.e(2, 2) = e22;
    a.o(1, 1) = o11;
    a.o(1, 2) = o12;
    a.o(2, 1) = o21;
    a.o(2, 2) = o22;
    return a;
}

}  // namespace

TEST_CASE("truncation commutes with the action") {
    const int n = 2;
    for (const auto& a : enumerate_primed_upto(n, 3))
        for (const auto& j : small_shifts()) {
            VElement x = symbol(a, j);
            int depth = a.degree() + 4;
            for (const GenSymbol& g : generators(n)) {
                INFO(to_string(g), " on ", to_string(VKey{a, j}));
                CHECK(truncate(act(g, x), depth) == act_closed(g, truncate(x, depth)));
            }
        }
}

TEST_CASE("the shifted diagonal constant breaks equivariance") {
    // Kb_1 on (0|E_11)(0) produces an odd square on the diagonal.
    SuperMatrix a = m2(0, 0, 0, 0, 1, 0, 0, 0);
    VElement x = symbol(a, {0, 0});
    GenSymbol kb{GenKind::Kb, 1, 1};
    TensorElement want = act_closed(kb, truncate(x, 5));
    CHECK(truncate(act(kb, x, DiagonalConstant::Series), 5) == want);
    CHECK_FALSE(truncate(act(kb, x, DiagonalConstant::Shifted), 5) == want);
}

TEST_CASE("reduction rules") {
    VElement canon = symbol(m2(0, 1, 0, 0, 0, 0, 1, 0), {1, -1});
    CHECK(reduce_close(canon) == canon);

    // Off-diagonal odd square: (0|2E_12)(j) = c [2 over 2] (2E_12|0)(j).
    VElement off;
    off.add(VKey{m2(0, 0, 0, 0, 0, 2, 0, 0), {0, 0}}, RatScalar(1));
    CHECK(reduce_close(off) == symbol(m2(0, 2, 0, 0, 0, 0, 0, 0), {0, 0}, odd_square_coeff()));

    // Diagonal odd square at j = 0 against its truncation.
    VElement diag;
    diag.add(VKey{m2(0, 0, 0, 0, 2, 0, 0, 0), {0, 0}}, RatScalar(1));
    VElement red = reduce_close(diag);
    CHECK(red.size() == 3);
    for (const auto& [k, c] : red) CHECK(k.a == SuperMatrix(2));
    // X^{[diag(mu)]} with mu_1 >= 2: coefficient c [mu_1 over 2].
    TensorElement t = truncate(red, 4);
    for (const auto& [b, c] : t) {
        int mu = b.e(1, 1);
        CHECK(mu >= 2);
        CHECK(c == odd_square_coeff() * RatScalar(qbinom(mu, 2)));
    }
}

TEST_CASE("truncation examples") {
    CHECK(truncate(zero_symbol(1, {0}), 0) == TensorElement::basis(SuperMatrix(1)));
    SuperMatrix x1(1), x2(1);
    x1.e(1, 1) = 1;
    x2.e(1, 1) = 2;
    CHECK(truncate(zero_symbol(1, {0}), 1) == TensorElement::basis(SuperMatrix(1)) + TensorElement::basis(x1));
    TensorElement want = TensorElement::basis(SuperMatrix(1)) + TensorElement::basis(x1, RatScalar::vpow(1)) +
                         TensorElement::basis(x2, RatScalar::vpow(2));
    CHECK(truncate(zero_symbol(1, {1}), 2) == want);
    SuperMatrix neg(2);
    neg.e(1, 2) = -1;
    CHECK(symbol(neg, {0, 0}).is_zero());
}

TEST_CASE("generator images of the cyclic vector") {
    for (int n : {2, 3}) {
        VElement o = zero_symbol(n, std::vector<int>(n, 0));
        for (int i = 1; i <= n; ++i) {
            std::vector<int> ei(n, 0);
            ei[i - 1] = 1;
            CHECK(act({GenKind::K, i, 1}, o) == zero_symbol(n, ei));
        }
        for (int i = 1; i < n; ++i) {
            SuperMatrix e(n), f(n);
            e.e(i, i + 1) = 1;
            f.e(i + 1, i) = 1;
            CHECK(act({GenKind::E, i, 1}, o) == symbol(e, std::vector<int>(n, 0)));
            CHECK(act({GenKind::F, i, 1}, o) == symbol(f, std::vector<int>(n, 0)));
        }
        SuperMatrix kb(n);
        kb.o(1, 1) = 1;
        CHECK(act({GenKind::Kb, 1, 1}, o) == symbol(kb, std::vector<int>(n, 0)));
    }
}

TEST_CASE("monomial images are triangular") {
    for (auto [n, d] : {std::pair{2, 3}, std::pair{3, 2}})
        for (const auto& a : enumerate_primed_upto(n, d)) {
            VElement img = monomial_image(a, std::vector<int>(n, 0));
            INFO(to_string(a));
            REQUIRE_FALSE(img.is_zero());
            LeadingTerm lt = leading_term(img);
            CHECK(lt.a == a);
            CHECK(lt.coeff.is_signed_vpow());
            int at_a = 0;
            for (const auto& [k, c] : img)
                if (k.a == a) ++at_a;
            CHECK(at_a == 1);
        }
}

TEST_CASE("leading term selection") {
    SuperMatrix big = m2(0, 0, 0, 0, 0, 0, 0, 1);
    SuperMatrix small = m2(0, 0, 5, 0, 0, 0, 0, 0);
    VElement x = symbol(big, {1, 0}, RatScalar(3)) + symbol(small, {0, 0});
    LeadingTerm lt = leading_term(x);
    CHECK(lt.a == big);
    CHECK(lt.j == std::vector<int>{1, 0});
    CHECK(lt.coeff == RatScalar(3));
    CHECK_THROWS_AS(leading_term(VElement()), ContractError);
}

TEST_CASE("derived odd generators respect truncation") {
    const int n = 2;
    std::vector<GenSymbol> odd{{GenKind::Kb, 2, 1}, {GenKind::Eb, 1, 1}, {GenKind::Fb, 1, 1}};
    for (const auto& a : enumerate_primed_upto(n, 2))
        for (const auto& j : std::vector<std::vector<int>>{{0, 0}, {1, -1}}) {
            VElement x = symbol(a, j);
            int depth = a.degree() + 3;
            for (const GenSymbol& g : odd) {
                INFO(to_string(g), " on ", to_string(VKey{a, j}));
                CHECK(truncate(act_derived(g, x), depth) == act_derived(g, truncate(x, depth)));
            }
        }
}
