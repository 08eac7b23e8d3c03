#include "qqs/qpoly.hpp"

#include "qqs/errors.hpp"

namespace qqs {

QPolyElement monomial_product(const SuperIndex& a, const SuperIndex& b) {
    if (a.n() != b.n()) throw ContractError("monomial_product on different n");
    if (!a.reduced() || !b.reduced()) throw ContractError("monomial_product needs reduced indices");
    const int n = a.n();
    SuperIndex c(n);
    int swaps = 0;
    int squares = 0;
    for (int i = 0; i < n; ++i) {
        c.even[i] = a.even[i] + b.even[i];
        // Moving odd X_jbar of b left past each odd X_ibar of a with i > j.
        if (b.odd[i])
            for (int k = i + 1; k < n; ++k) swaps += a.odd[k];
        if (a.odd[i] && b.odd[i]) {
            ++squares;
            c.even[i] += 2;
        } else {
            c.odd[i] = a.odd[i] + b.odd[i];
        }
    }
    RatScalar coeff = odd_square_coeff().pow(squares);
    if (swaps & 1) coeff = -coeff;
    return QPolyElement::basis(c, coeff);
}

QPolyElement product(const QPolyElement& x, const QPolyElement& y) {
    QPolyElement out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.axpy(ca * cb, monomial_product(a, b));
    return out;
}

QPolyElement normal_order(int n, const std::vector<QVar>& word) {
    QPolyElement acc = QPolyElement::basis(SuperIndex(n));
    for (const QVar& q : word) {
        if (q.index < 1 || q.index > n) throw ContractError("generator index out of range");
        SuperIndex g(n);
        (q.odd ? g.odd : g.even)[q.index - 1] = 1;
        acc = product(acc, QPolyElement::basis(g));
    }
    return acc;
}

QPolyElement monomial(const SuperIndex& a) {
    // Odd factors are already in increasing order, so X_ibar^b only collapses squares.
    SuperIndex r = a;
    int squares = 0;
    for (int i = 0; i < a.n(); ++i) {
        if (a.even[i] < 0 || a.odd[i] < 0) return {};
        int h = a.odd[i] / 2;
        squares += h;
        r.even[i] += 2 * h;
        r.odd[i] -= 2 * h;
    }
    return QPolyElement::basis(r, odd_square_coeff().pow(squares));
}

LaurentPoly divided_factor(const SuperIndex& a) {
    LaurentPoly f(1);
    for (int i = 0; i < a.n(); ++i) {
        if (a.even[i] > 1) f *= qfact(a.even[i]);
        if (a.odd[i] > 1) f *= qfact(a.odd[i]);
    }
    return f;
}

QPolyElement divided_monomial(const SuperIndex& a) {
    QPolyElement m = monomial(a);
    m *= RatScalar(1) / RatScalar(divided_factor(a));
    return m;
}

QPolyElement divided_convert(const QPolyElement& x, Divided dir) {
    QPolyElement out;
    for (const auto& [a, c] : x) {
        RatScalar f(divided_factor(a));
        out.add(a, dir == Divided::ToDivided ? c * f : c / f);
    }
    return out;
}

namespace {

void gen_basis(int n, int pos, int remaining, SuperIndex& cur, std::vector<SuperIndex>& out) {
    if (pos == 2 * n) {
        out.push_back(cur);
        return;
    }
    bool odd = pos >= n;
    int idx = odd ? pos - n : pos;
    int hi = odd ? std::min(1, remaining) : remaining;
    int& slot = odd ? cur.odd[idx] : cur.even[idx];
    for (int x = 0; x <= hi; ++x) {
        slot = x;
        gen_basis(n, pos + 1, remaining - x, cur, out);
    }
    slot = 0;
}

}  // namespace

std::vector<SuperIndex> qpoly_basis(int n, int maxdeg) {
    std::vector<SuperIndex> out;
    SuperIndex cur(n);
    gen_basis(n, 0, maxdeg, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const QPolyElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [a, c] : x) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        for (int i = 0; i < a.n(); ++i) {
            if (a.even[i]) out += "*X" + std::to_string(i + 1) + (a.even[i] > 1 ? "^" + std::to_string(a.even[i]) : "");
        }
        for (int i = 0; i < a.n(); ++i)
            if (a.odd[i]) out += "*Xb" + std::to_string(i + 1);
    }
    return out;
}

}  // namespace qqs
