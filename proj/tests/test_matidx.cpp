#include <set>

#include "doctest.h"
#include "qqs/matidx.hpp"

using namespace qqs;

namespace {

long binom(long a, long b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

// Choose which k odd cells are 1, then distribute r - k over n^2 even cells.
long stars_and_bars(int n, int r) {
    long n2 = n * n;
    long total = 0;
    for (int k = 0; k <= std::min<long>(r, n2); ++k) total += binom(n2, k) * binom(r - k + n2 - 1, n2 - 1);
    return total;
}

}  // namespace

TEST_CASE("enumeration sizes") {
    CHECK(enumerate(1, 1).size() == 2);
    CHECK(enumerate(2, 1).size() == 8);
    CHECK(enumerate(2, 2).size() == 32);
    CHECK(enumerate(3, 2).size() == 162);
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= (n == 3 ? 2 : 4); ++r) CHECK(enumerate(n, r).size() == static_cast<std::size_t>(stars_and_bars(n, r)));
}

TEST_CASE("enumeration is sorted, distinct and reduced") {
    auto all = enumerate(2, 3);
    std::set<SuperMatrix> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (std::size_t k = 0; k + 1 < all.size(); ++k) CHECK(total_compare(all[k], all[k + 1]) < 0);
    for (const auto& a : all) {
        CHECK(a.reduced());
        CHECK(a.degree() == 3);
    }
    for (const auto& a : enumerate(2, 3, true)) CHECK(a.primed());
}

TEST_CASE("vec layout for n = 3") {
    SuperMatrix a(3);
    int val = 1;
    // Label each entry by its position in vec.
    const int order[][3] = {{1, 3, 3}, {1, 2, 3}, {1, 1, 3}, {0, 1, 3}, {0, 2, 3}, {1, 3, 2}, {1, 2, 2}, {1, 1, 2},
                            {0, 1, 2}, {1, 3, 1}, {1, 2, 1}, {1, 1, 1}, {0, 3, 1}, {0, 2, 1}, {0, 3, 2}};
    for (const auto& o : order) (o[0] ? a.o(o[1], o[2]) : a.e(o[1], o[2])) = val++;
    a.e(1, 1) = 99;
    auto v = vec(a);
    REQUIRE(v.size() == 15);
    for (int k = 0; k < 15; ++k) CHECK(v[k] == k + 1);
}

TEST_CASE("vec layout for n = 2") {
    SuperMatrix a(2);
    a.o(2, 2) = 1;
    a.o(1, 2) = 2;
    a.e(1, 2) = 3;
    a.o(2, 1) = 4;
    a.o(1, 1) = 5;
    a.e(2, 1) = 6;
    CHECK(vec(a) == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("prec reports the first differing position") {
    SuperMatrix a(2), b(2);
    CHECK(prec(a, b).cmp == Cmp::Equal);
    CHECK(prec(a, b).position == 0);
    b.e(1, 1) = 5;
    CHECK(prec(a, b).cmp == Cmp::Equal);
    CHECK(total_compare(a, b) < 0);
    a.e(2, 1) = 1;
    b.o(1, 2) = 1;
    PrecResult p = prec(a, b);
    CHECK(p.cmp == Cmp::Less);
    CHECK(p.position == 2);
    CHECK(prec(b, a).cmp == Cmp::Greater);
}

TEST_CASE("an odd entry in the last column outranks the lower even part") {
    SuperMatrix a(2), b(2);
    a.o(2, 2) = 1;
    b.e(2, 1) = 5;
    PrecResult p = prec(a, b);
    CHECK(p.cmp == Cmp::Greater);
    CHECK(p.position == 1);
}

TEST_CASE("row and column sums, diagonal split") {
    SuperMatrix a(3);
    a.e(1, 2) = 2;
    a.o(3, 1) = 1;
    a.e(2, 2) = 4;
    CHECK(ro(a) == std::vector<int>{2, 4, 1});
    CHECK(co(a) == std::vector<int>{1, 6, 0});
    Stripped s = strip_diag(a);
    CHECK(s.primed.primed());
    CHECK(s.diag == std::vector<int>{0, 4, 0});
    CHECK(add_diag(s.primed, s.diag) == a);
    CHECK(a.parity() == 1);
    CHECK(a.column(1).odd == std::vector<int>{0, 0, 1});
}

TEST_CASE("primed enumeration up to a degree") {
    auto all = enumerate_primed_upto(2, 2);
    long expect = 0;
    for (int d = 0; d <= 2; ++d) expect += enumerate(2, d, true).size();
    CHECK(all.size() == static_cast<std::size_t>(expect));
}
