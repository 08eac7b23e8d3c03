#include "doctest.h"
#include "qqs/schur.hpp"

using namespace qqs;

namespace {

SuperMatrix single(int n, int i, int j, bool odd, int val = 1) {
    SuperMatrix a(n);
    (odd ? a.o(i, j) : a.e(i, j)) = val;
    return a;
}

}  // namespace

TEST_CASE("one_r") {
    CHECK(one_r(1, 2) == TensorElement::basis(diag_matrix({2})));
    CHECK(one_r(2, 1) == TensorElement::basis(diag_matrix({1, 0})) + TensorElement::basis(diag_matrix({0, 1})));
    CHECK(one_r(3, 0) == TensorElement::basis(SuperMatrix(3)));
}

TEST_CASE("K-binomial words project 1_r onto a weight") {
    for (const auto& lam : std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}})
        CHECK(evaluate(kbinom_weight(lam), tensor_action(), one_r(2, 2)) == TensorElement::basis(diag_matrix(lam)));
}

TEST_CASE("generator matrices") {
    GenMatrix k = gen_matrix({GenKind::K, 2, 1}, 2, 2);
    for (std::size_t c = 0; c < k.basis.size(); ++c)
        CHECK(k.columns[c] == TensorElement::basis(k.basis[c], RatScalar::vpow(ro(k.basis[c])[1])));

    // n = 1, r = 1: Kb_1 swaps (1|0) and (0|1), both with coefficient 1.
    GenMatrix kb = gen_matrix({GenKind::Kb, 1, 1}, 1, 1);
    REQUIRE(kb.basis.size() == 2);
    SuperMatrix ev = single(1, 1, 1, false), od = single(1, 1, 1, true);
    for (std::size_t c = 0; c < 2; ++c)
        CHECK(kb.columns[c] == TensorElement::basis(kb.basis[c] == ev ? od : ev));

    // e_1 kills matrices with zero second row.
    GenMatrix e = gen_matrix({GenKind::E, 1, 1}, 2, 2);
    for (std::size_t c = 0; c < e.basis.size(); ++c)
        if (ro(e.basis[c])[1] == 0) CHECK(e.columns[c].is_zero());

    // Block structure: column sums are preserved.
    for (const GenMatrix* m : {&k, &e})
        for (std::size_t c = 0; c < m->basis.size(); ++c)
            for (const auto& [b, s] : m->columns[c]) CHECK(co(b) == co(m->basis[c]));
}

TEST_CASE("witness family dimensions") {
    // Sizes from the enumeration oracle; rank is recomputed by elimination.
    struct Case {
        int n, r, dim;
    };
    for (Case cs : {Case{1, 0, 1}, Case{1, 1, 2}, Case{1, 3, 2}, Case{2, 1, 8}, Case{2, 2, 32}}) {
        WitnessFamily fam = build_witness_family(cs.n, cs.r);
        CHECK(static_cast<int>(fam.basis.size()) == cs.dim);
        CHECK(exact_rank(fam.images) == cs.dim);
        for (const auto& g : fam.leading) CHECK(g.is_signed_vpow());
    }
}

TEST_CASE("exact rank detects dependence") {
    SuperMatrix a = single(2, 1, 2, false), b = single(2, 2, 1, true);
    TensorElement x = TensorElement::basis(a) + TensorElement::basis(b, RatScalar::vpow(1));
    TensorElement y = TensorElement::basis(a, RatScalar::vpow(2));
    CHECK(exact_rank({x, y}) == 2);
    CHECK(exact_rank({x, y, x - y}) == 2);
    CHECK(exact_rank({TensorElement()}) == 0);
}

TEST_CASE("psi and multiplication") {
    WitnessFamily fam = build_witness_family(2, 2);
    for (const auto& a : fam.basis) CHECK(psi(fam, a).canonical == TensorElement::basis(a));

    SchurElement d20 = psi(fam, diag_matrix({2, 0}));
    SchurElement d11 = psi(fam, diag_matrix({1, 1}));
    CHECK(multiply(d20, d20) == d20);
    CHECK(multiply(d20, d11).canonical.is_zero());

    // Associativity on a sample triple.
    SuperMatrix a(2), b(2), c(2);
    a.e(1, 2) = 1;
    a.o(2, 2) = 1;
    b.o(2, 1) = 1;
    b.e(1, 1) = 1;
    c.o(1, 1) = 1;
    c.e(2, 1) = 1;
    SchurElement pa = psi(fam, a), pb = psi(fam, b), pc = psi(fam, c);
    CHECK(multiply(multiply(pa, pb), pc) == multiply(pa, multiply(pb, pc)));

    // The sum of weight idempotents is a two-sided unit.
    SchurElement unit{2, 2, one_r(2, 2), {}};
    for (const auto& l : std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}}) unit.witness += psi(fam, diag_matrix(l)).witness;
    CHECK(multiply(unit, pa) == pa);
    CHECK(multiply(pa, unit) == pa);
}

TEST_CASE("ideal and integrality reports") {
    for (auto [n, r] : {std::pair{1, 3}, std::pair{2, 2}}) {
        Report ideal = ideal_check(n, r);
        INFO(ideal.to_text());
        CHECK(ideal.pass());
        Report integ = integrality_check(n, r);
        INFO(integ.to_text());
        CHECK(integ.pass());
    }
}

TEST_CASE("full verification at a small scale") {
    Report rep = schur_verify(2, 1);
    INFO(rep.to_text());
    CHECK(rep.pass());
}
