#include <algorithm>

#include "doctest.h"
#include "qqs/qpoly.hpp"

using namespace qqs;

namespace {

// Bubble sort of a generator word: odd letters anticommute, equal odd
// neighbours collapse to c X_i X_i, even letters commute with everything.
QPolyElement bubble_normal_order(int n, std::vector<QVar> w) {
    RatScalar coeff(1);
    auto key = [](const QVar& q) { return q.odd ? 100 + q.index : q.index; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k].odd && w[k + 1].odd && w[k].index == w[k + 1].index) {
                coeff *= odd_square_coeff();
                w[k].odd = w[k + 1].odd = false;
                changed = true;
            } else if (key(w[k]) > key(w[k + 1])) {
                if (w[k].odd && w[k + 1].odd) coeff = -coeff;
                std::swap(w[k], w[k + 1]);
                changed = true;
            }
        }
    }
    SuperIndex a(n);
    for (const QVar& q : w) ++(q.odd ? a.odd : a.even)[q.index - 1];
    return QPolyElement::basis(a, coeff);
}

std::vector<QVar> word_of(const SuperIndex& a) {
    std::vector<QVar> w;
    for (int i = 0; i < a.n(); ++i)
        for (int k = 0; k < a.even[i]; ++k) w.push_back({i + 1, false});
    for (int i = 0; i < a.n(); ++i)
        for (int k = 0; k < a.odd[i]; ++k) w.push_back({i + 1, true});
    return w;
}

}  // namespace

TEST_CASE("normal ordering matches bubble sort") {
    const int n = 3;
    std::vector<QVar> letters;
    for (int i = 1; i <= n; ++i) letters.push_back({i, false}), letters.push_back({i, true});
    // Every word of length <= 4 over the six letters.
    std::vector<std::vector<QVar>> words{{}};
    for (int len = 1; len <= 4; ++len) {
        std::vector<std::vector<QVar>> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (const QVar& l : letters) {
                    auto x = w;
                    x.push_back(l);
                    next.push_back(x);
                }
        words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& w : words) CHECK(normal_order(n, w) == bubble_normal_order(n, w));
}

TEST_CASE("product is associative with unit") {
    auto basis = qpoly_basis(3, 2);
    QPolyElement one = QPolyElement::basis(SuperIndex(3));
    for (const auto& a : basis) {
        QPolyElement x = QPolyElement::basis(a);
        CHECK(product(one, x) == x);
        CHECK(product(x, one) == x);
        for (const auto& b : basis)
            for (const auto& c : basis) {
                QPolyElement y = QPolyElement::basis(b), z = QPolyElement::basis(c);
                CHECK(product(product(x, y), z) == product(x, product(y, z)));
            }
    }
}

TEST_CASE("odd generators anticommute and square to c X_i^2") {
    const int n = 2;
    CHECK(normal_order(n, {{2, true}, {1, true}}) == RatScalar(-1) * normal_order(n, {{1, true}, {2, true}}));
    SuperIndex sq(n);
    sq.even[0] = 2;
    CHECK(normal_order(n, {{1, true}, {1, true}}) == QPolyElement::basis(sq, odd_square_coeff()));
}

TEST_CASE("monomial with odd exponents above one is the ordered product") {
    SuperIndex a({1, 0, 2}, {2, 1, 3});
    CHECK(monomial(a) == bubble_normal_order(3, word_of(a)));
}

TEST_CASE("divided odd square carries a binomial factor") {
    // X_i^{(a)} X_ibar^{[2]} = c [a+2 over 2] X_i^{(a+2)}
    for (int a = 0; a <= 5; ++a) {
        SuperIndex lhs({a}, {2});
        SuperIndex rhs({a + 2}, {0});
        QPolyElement expect = divided_monomial(rhs);
        expect *= odd_square_coeff() * RatScalar(qbinom(a + 2, 2));
        CHECK(divided_monomial(lhs) == expect);
    }
}

TEST_CASE("divided coordinates round trip") {
    QPolyElement x;
    for (const auto& a : qpoly_basis(2, 4)) x.add(a, RatScalar(a.degree() + 1));
    QPolyElement y = divided_convert(divided_convert(x, Divided::ToDivided), Divided::FromDivided);
    CHECK(y == x);
}

TEST_CASE("basis size") {
    // Even part: C(d + n - 1, n - 1) per degree; odd part: subsets.
    CHECK(qpoly_basis(3, 4).size() == 129);
    CHECK(qpoly_basis(1, 3).size() == 7);
}
