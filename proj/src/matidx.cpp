#include "qqs/matidx.hpp"

#include <algorithm>
#include <numeric>

#include "qqs/errors.hpp"

namespace qqs {

int SuperIndex::degree() const {
    return std::accumulate(even.begin(), even.end(), 0) + std::accumulate(odd.begin(), odd.end(), 0);
}

int SuperIndex::parity() const {
    return std::accumulate(odd.begin(), odd.end(), 0) & 1;
}

bool SuperIndex::reduced() const {
    return std::all_of(odd.begin(), odd.end(), [](int b) { return b == 0 || b == 1; });
}

std::string to_string(const SuperIndex& a) {
    std::string out = "(";
    for (int i = 0; i < a.n(); ++i) out += (i ? "," : "") + std::to_string(a.even[i]);
    out += "|";
    for (int i = 0; i < a.n(); ++i) out += (i ? "," : "") + std::to_string(a.odd[i]);
    return out + ")";
}

int SuperMatrix::degree() const {
    return std::accumulate(a0.begin(), a0.end(), 0) + std::accumulate(a1.begin(), a1.end(), 0);
}

int SuperMatrix::parity() const {
    return std::accumulate(a1.begin(), a1.end(), 0) & 1;
}

bool SuperMatrix::reduced() const {
    return std::all_of(a1.begin(), a1.end(), [](int b) { return b == 0 || b == 1; });
}

bool SuperMatrix::primed() const {
    for (int i = 1; i <= n; ++i)
        if (e(i, i) != 0) return false;
    return true;
}

bool SuperMatrix::nonnegative() const {
    auto nn = [](int x) { return x >= 0; };
    return std::all_of(a0.begin(), a0.end(), nn) && std::all_of(a1.begin(), a1.end(), nn);
}

SuperIndex SuperMatrix::column(int j) const {
    SuperIndex c(n);
    for (int i = 1; i <= n; ++i) {
        c.even[i - 1] = e(i, j);
        c.odd[i - 1] = o(i, j);
    }
    return c;
}

void SuperMatrix::set_column(int j, const SuperIndex& c) {
    for (int i = 1; i <= n; ++i) {
        e(i, j) = c.even[i - 1];
        o(i, j) = c.odd[i - 1];
    }
}

std::string to_string(const SuperMatrix& a) {
    auto block = [&](const std::vector<int>& m) {
        std::string s;
        for (int i = 0; i < a.n; ++i) {
            if (i) s += "; ";
            for (int j = 0; j < a.n; ++j) s += (j ? " " : "") + std::to_string(m[i * a.n + j]);
        }
        return s;
    };
    return "(" + block(a.a0) + " | " + block(a.a1) + ")";
}

std::vector<int> ro(const SuperMatrix& a) {
    std::vector<int> r(a.n, 0);
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= a.n; ++j) r[i - 1] += a.e(i, j) + a.o(i, j);
    return r;
}

std::vector<int> co(const SuperMatrix& a) {
    std::vector<int> c(a.n, 0);
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= a.n; ++j) c[j - 1] += a.e(i, j) + a.o(i, j);
    return c;
}

std::vector<int> vec(const SuperMatrix& a) {
    const int n = a.n;
    std::vector<int> v;
    v.reserve(2 * n * n - n);
    // Columns n..1: odd column bottom to top, then the even entries above the diagonal top to bottom.
    for (int j = n; j >= 1; --j) {
        for (int i = n; i >= 1; --i) v.push_back(a.o(i, j));
        for (int i = 1; i < j; ++i) v.push_back(a.e(i, j));
    }
    // Columns 1..n-1: even entries below the diagonal, bottom to top.
    for (int j = 1; j < n; ++j)
        for (int i = n; i > j; --i) v.push_back(a.e(i, j));
    return v;
}

PrecResult prec(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.n != b.n) throw ContractError("prec on matrices of different size");
    std::vector<int> va = vec(a);
    std::vector<int> vb = vec(b);
    for (std::size_t k = 0; k < va.size(); ++k) {
        if (va[k] != vb[k]) return {va[k] < vb[k] ? Cmp::Less : Cmp::Greater, static_cast<int>(k) + 1};
    }
    return {};
}

int total_compare(const SuperMatrix& a, const SuperMatrix& b) {
    PrecResult p = prec(a, b);
    if (p.cmp != Cmp::Equal) return p.cmp == Cmp::Less ? -1 : 1;
    for (int i = 1; i <= a.n; ++i) {
        if (a.e(i, i) != b.e(i, i)) return a.e(i, i) < b.e(i, i) ? -1 : 1;
    }
    return 0;
}

namespace {

void fill(int n, bool primed, int cell, int remaining, bool exact, SuperMatrix& cur, std::vector<SuperMatrix>& out) {
    const int cells = 2 * n * n;
    if (cell == cells) {
        if (!exact || remaining == 0) out.push_back(cur);
        return;
    }
    const bool odd = cell >= n * n;
    const int idx = odd ? cell - n * n : cell;
    const int i = idx / n;
    const int j = idx % n;
    int hi = remaining;
    if (odd) hi = std::min(hi, 1);
    if (!odd && primed && i == j) hi = 0;
    int& slot = odd ? cur.a1[idx] : cur.a0[idx];
    for (int x = 0; x <= hi; ++x) {
        slot = x;
        fill(n, primed, cell + 1, remaining - x, exact, cur, out);
    }
    slot = 0;
}

void sort_total(std::vector<SuperMatrix>& v) {
    std::sort(v.begin(), v.end(), [](const SuperMatrix& a, const SuperMatrix& b) { return total_compare(a, b) < 0; });
}

}  // namespace

std::vector<SuperMatrix> enumerate(int n, int r, bool primed) {
    if (n < 1 || r < 0) throw ContractError("enumerate needs n >= 1 and r >= 0");
    std::vector<SuperMatrix> out;
    SuperMatrix cur(n);
    fill(n, primed, 0, r, true, cur, out);
    sort_total(out);
    return out;
}

std::vector<SuperMatrix> enumerate_primed_upto(int n, int maxdeg) {
    if (n < 1 || maxdeg < 0) throw ContractError("enumerate needs n >= 1 and maxdeg >= 0");
    std::vector<SuperMatrix> out;
    SuperMatrix cur(n);
    fill(n, true, 0, maxdeg, false, cur, out);
    sort_total(out);
    return out;
}

Stripped strip_diag(const SuperMatrix& a) {
    Stripped s{a, std::vector<int>(a.n, 0)};
    for (int i = 1; i <= a.n; ++i) {
        s.diag[i - 1] = a.e(i, i);
        s.primed.e(i, i) = 0;
    }
    return s;
}

SuperMatrix add_diag(const SuperMatrix& a, const std::vector<int>& lambda) {
    SuperMatrix b = a;
    for (int i = 1; i <= a.n; ++i) b.e(i, i) += lambda[i - 1];
    return b;
}

SuperMatrix diag_matrix(const std::vector<int>& lambda) {
    return add_diag(SuperMatrix(static_cast<int>(lambda.size())), lambda);
}

}  // namespace qqs
