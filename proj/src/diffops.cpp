#include "qqs/diffops.hpp"

#include <cctype>

#include "qqs/errors.hpp"

namespace qqs {

namespace {

RatScalar vp(int k) { return RatScalar::vpow(k); }
RatScalar qi(int c) { return RatScalar(qint(c)); }

// Adds c * X^a (read as an ordered product) unless a has a negative entry.
void emit(QPolyElement& out, const SuperIndex& a, const RatScalar& c) {
    if (c.is_zero()) return;
    for (int i = 0; i < a.n(); ++i)
        if (a.even[i] < 0 || a.odd[i] < 0) return;
    out.axpy(c, monomial(a));
}

int odd_sum_before(const SuperIndex& a, int i) {  // sum of b_j for j < i (1-based)
    int s = 0;
    for (int j = 1; j < i; ++j) s += a.odd[j - 1];
    return s;
}

RatScalar sign(int e) { return (e & 1) ? RatScalar(-1) : RatScalar(1); }

void check_index(int n, int i, int hi) {
    if (i < 1 || i > hi) throw ContractError("generator index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
}

int require_n(const QPolyElement& x) {
    return x.is_zero() ? 0 : x.begin()->first.n();
}

}  // namespace

std::string to_string(const GenSymbol& g) {
    static const char* names[] = {"K", "K", "E", "F", "Kb", "Eb", "Fb"};
    std::string s = names[static_cast<int>(g.kind)] + std::to_string(g.index);
    switch (g.kind) {
    case GenKind::K:
        if (g.power != 1) s += "^" + std::to_string(g.power);
        break;
    case GenKind::Kinv:
        s += "^-" + std::to_string(g.power);
        break;
    case GenKind::E:
    case GenKind::F:
        if (g.power != 1) s += "^(" + std::to_string(g.power) + ")";
        break;
    default:
        break;
    }
    return s;
}

GenSymbol parse_gen(const std::string& text) {
    std::size_t p = 0;
    auto fail = [&](const std::string& what) -> GenSymbol { throw ParseError("bad generator '" + text + "': " + what); };
    if (text.empty()) return fail("empty");
    GenSymbol g;
    char head = text[p++];
    bool bar = p < text.size() && text[p] == 'b';
    if (bar) ++p;
    switch (head) {
    case 'K': g.kind = bar ? GenKind::Kb : GenKind::K; break;
    case 'E': g.kind = bar ? GenKind::Eb : GenKind::E; break;
    case 'F': g.kind = bar ? GenKind::Fb : GenKind::F; break;
    default: return fail("unknown generator");
    }
    std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (start == p) return fail("missing index");
    g.index = std::stoi(text.substr(start, p - start));
    if (p == text.size()) return g;
    if (text[p++] != '^') return fail("expected '^'");
    bool paren = p < text.size() && text[p] == '(';
    if (paren) ++p;
    bool neg = p < text.size() && text[p] == '-';
    if (neg) ++p;
    start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (start == p) return fail("missing exponent");
    int e = std::stoi(text.substr(start, p - start));
    if (paren && (p >= text.size() || text[p++] != ')')) return fail("expected ')'");
    if (p != text.size()) return fail("trailing characters");
    if (e < 1) return fail("exponent must be positive");
    if (g.odd()) return fail("odd generators take no power");
    if (g.kind == GenKind::K) {
        if (paren) return fail("K takes an ordinary power");
        if (neg) g.kind = GenKind::Kinv;
    } else {
        if (!paren || neg) return fail("E and F take a divided power ^(m)");
    }
    g.power = e;
    return g;
}

// ---------------------------------------------------------------------------

QPolyElement LinOp::operator()(const QPolyElement& x) const {
    QPolyElement out;
    for (const auto& [a, c] : x) out.axpy(c, on_basis(a));
    return out;
}

LinOp operator*(const LinOp& f, const LinOp& g) {
    return {[f, g](const SuperIndex& a) { return f(g(a)); }, f.parity ^ g.parity};
}

LinOp operator+(const LinOp& f, const LinOp& g) {
    return {[f, g](const SuperIndex& a) { return f(a) + g(a); }, f.parity};
}

LinOp operator-(const LinOp& f, const LinOp& g) {
    return {[f, g](const SuperIndex& a) { return f(a) - g(a); }, f.parity};
}

LinOp operator*(const RatScalar& s, const LinOp& f) {
    return {[s, f](const SuperIndex& a) { return s * f(a); }, f.parity};
}

LinOp identity_op() {
    return {[](const SuperIndex& a) { return QPolyElement::basis(a); }, 0};
}

LinOp odd_projection(int i, int value) {
    return {[i, value](const SuperIndex& a) {
                return a.odd[i - 1] == value ? QPolyElement::basis(a) : QPolyElement();
            },
            0};
}

LinOp partial(int n, int i) {
    check_index(n, i, 2 * n);
    if (i <= n) {
        return {[i](const SuperIndex& a) {
                    QPolyElement out;
                    if (a.even[i - 1] == 0) return out;
                    SuperIndex b = a;
                    --b.even[i - 1];
                    out.add(b, qi(a.even[i - 1]));
                    return out;
                },
                0};
    }
    int k = i - n;
    return {[k](const SuperIndex& a) {
                QPolyElement out;
                if (a.odd[k - 1] == 0) return out;
                SuperIndex b = a;
                --b.odd[k - 1];
                out.add(b, sign(odd_sum_before(a, k)));
                return out;
            },
            1};
}

LinOp partial_shift(int i, int j) {
    return {[i, j](const SuperIndex& a) {
                QPolyElement out;
                if (a.even[i - 1] == 0) return out;
                SuperIndex b = a;
                --b.even[i - 1];
                out.add(b, qi(a.even[i - 1] + j));
                return out;
            },
            0};
}

LinOp chi(int n, int i) {
    check_index(n, i, 2 * n);
    SuperIndex g(n);
    if (i <= n)
        g.even[i - 1] = 1;
    else
        g.odd[i - n - 1] = 1;
    return {[g](const SuperIndex& a) { return monomial_product(g, a); }, i > n ? 1 : 0};
}

LinOp delta(int n, int i, int sgn) {
    check_index(n, i, 2 * n);
    return {[n, i, sgn](const SuperIndex& a) {
                int e = i <= n ? a.even[i - 1] : a.odd[i - n - 1];
                return QPolyElement::basis(a, vp(sgn * e));
            },
            0};
}

LinOp sgn_bar(int i) {
    return {[i](const SuperIndex& a) { return QPolyElement::basis(a, sign(a.odd[i - 1])); }, 0};
}

namespace {

LinOp gen_op_single(int n, GenKind kind, int i) {
    auto d = [n](int k) { return partial(n, k); };
    auto x = [n](int k) { return chi(n, k); };
    auto dl = [n](int k, int s) { return delta(n, k, s); };
    const int b = n;  // bar offset
    switch (kind) {
    case GenKind::K:
        return dl(i, 1) * dl(b + i, 1);
    case GenKind::Kinv:
        return dl(i, -1) * dl(b + i, -1);
    case GenKind::E:
        return x(i) * d(i + 1) * dl(b + i + 1, 1) + x(b + i) * d(b + i + 1) * dl(i + 1, -1) * sgn_bar(i);
    case GenKind::F:
        return x(i + 1) * d(i) * dl(b + i, -1) + x(b + i + 1) * d(b + i) * dl(i, 1);
    case GenKind::Kb:
        return x(i) * d(b + i) * dl(i, -1) + x(b + i) * d(i) * dl(b + i, 1);
    case GenKind::Eb:
        return x(b + i) * d(i + 1) * dl(b + i + 1, 1) * sgn_bar(i) + x(i) * d(b + i + 1) * dl(i + 1, -1);
    case GenKind::Fb:
        return x(b + i + 1) * d(i) * dl(b + i, -1) + x(i + 1) * d(b + i) * dl(i, 1);
    }
    throw InternalError("unhandled generator kind");
}

void validate(int n, const GenSymbol& g) {
    bool chevalley = g.kind == GenKind::E || g.kind == GenKind::F || g.kind == GenKind::Eb || g.kind == GenKind::Fb;
    check_index(n, g.index, chevalley ? n - 1 : n);
    if (g.power < 1) throw ContractError("generator power must be positive");
    if (g.odd() && g.power != 1) throw ContractError("odd generators take power 1");
}

}  // namespace

LinOp gen_op(int n, const GenSymbol& g) {
    validate(n, g);
    LinOp base = gen_op_single(n, g.kind, g.index);
    LinOp out = base;
    for (int k = 1; k < g.power; ++k) out = base * out;
    if ((g.kind == GenKind::E || g.kind == GenKind::F) && g.power > 1)
        out = (RatScalar(1) / RatScalar(qfact(g.power))) * out;
    return out;
}

namespace {

QPolyElement closed_single(GenKind kind, int i, const SuperIndex& a) {
    const int n = a.n();
    QPolyElement out;
    auto ev = [&](int k) { return a.even[k - 1]; };
    auto od = [&](int k) { return a.odd[k - 1]; };
    auto shifted = [&](std::initializer_list<std::pair<int, int>> even_moves,
                       std::initializer_list<std::pair<int, int>> odd_moves) {
        SuperIndex b = a;
        for (auto [k, d] : even_moves) b.even[k - 1] += d;
        for (auto [k, d] : odd_moves) b.odd[k - 1] += d;
        return b;
    };
    (void)n;
    switch (kind) {
    case GenKind::K:
        out.add(a, vp(ev(i) + od(i)));
        break;
    case GenKind::Kinv:
        out.add(a, vp(-ev(i) - od(i)));
        break;
    case GenKind::E: {
        int h = i;
        emit(out, shifted({{h, 1}, {h + 1, -1}}, {}), vp(od(h + 1)) * qi(ev(h + 1)));
        emit(out, shifted({}, {{h, 1}, {h + 1, -1}}), vp(-ev(h + 1)) * qi(od(h + 1)));
        break;
    }
    case GenKind::F: {
        int h = i;
        emit(out, shifted({{h, -1}, {h + 1, 1}}, {}), vp(-od(h)) * qi(ev(h)));
        emit(out, shifted({}, {{h, -1}, {h + 1, 1}}), vp(ev(h)) * qi(od(h)));
        break;
    }
    case GenKind::Kb: {
        RatScalar s = sign(odd_sum_before(a, i));
        emit(out, shifted({{i, 1}}, {{i, -1}}), s * vp(-ev(i)) * qi(od(i)));
        emit(out, shifted({{i, -1}}, {{i, 1}}), s * vp(od(i)) * qi(ev(i)));
        break;
    }
    case GenKind::Eb: {
        int h = i;
        RatScalar s = sign(odd_sum_before(a, h + 1));
        emit(out, shifted({{h + 1, -1}}, {{h, 1}}), s * vp(od(h + 1)) * qi(ev(h + 1)));
        emit(out, shifted({{h, 1}}, {{h + 1, -1}}), s * vp(-ev(h + 1)) * qi(od(h + 1)));
        break;
    }
    case GenKind::Fb: {
        int h = i;
        emit(out, shifted({{h, -1}}, {{h + 1, 1}}), sign(odd_sum_before(a, h + 1)) * vp(-od(h)) * qi(ev(h)));
        emit(out, shifted({{h + 1, 1}}, {{h, -1}}), sign(odd_sum_before(a, h)) * vp(ev(h)) * qi(od(h)));
        break;
    }
    }
    return out;
}

}  // namespace

QPolyElement act_closed(const GenSymbol& g, const QPolyElement& x) {
    int n = require_n(x);
    if (n == 0) return {};
    validate(n, g);
    QPolyElement cur = x;
    for (int k = 0; k < g.power; ++k) {
        QPolyElement next;
        for (const auto& [a, c] : cur) next.axpy(c, closed_single(g.kind, g.index, a));
        cur = std::move(next);
    }
    if ((g.kind == GenKind::E || g.kind == GenKind::F) && g.power > 1)
        cur *= RatScalar(1) / RatScalar(qfact(g.power));
    return cur;
}

// ---------------------------------------------------------------------------

namespace {

using Domain = std::function<bool(const SuperIndex&)>;

bool everywhere(const SuperIndex&) { return true; }

struct OpeChecker {
    int n;
    std::vector<SuperIndex> basis;
    Report report;

    void check(const std::string& name, const LinOp& lhs, const LinOp& rhs, const Domain& dom = everywhere) {
        CheckResult* r = nullptr;
        for (auto& c : report.checks)
            if (c.name == name) r = &c;
        if (!r) {
            report.checks.push_back(CheckResult{name, true, 0, ""});
            r = &report.checks.back();
        }
        for (const SuperIndex& a : basis) {
            if (!dom(a)) continue;
            record(*r, lhs(a) == rhs(a), "at X^" + to_string(a));
        }
    }
};

}  // namespace

Report verify_opecom(int n, int maxdeg) {
    OpeChecker ck{n, qpoly_basis(n, maxdeg), {}};
    auto d = [n](int k) { return partial(n, k); };
    auto x = [n](int k) { return chi(n, k); };
    auto dl = [n](int k, int s) { return delta(n, k, s); };
    auto par = [n](int k) { return k > n ? 1 : 0; };
    auto base = [n](int k) { return k > n ? k - n : k; };
    const RatScalar c = odd_square_coeff();
    const RatScalar v = vp(1);
    const RatScalar vinv = vp(-1);
    const RatScalar vsum = v + vinv;

    auto odd_is = [](int i, int val) { return [i, val](const SuperIndex& a) { return a.odd[i - 1] == val; }; };
    auto even_pos = [](int i) { return [i](const SuperIndex& a) { return a.even[i - 1] >= 1; }; };

    for (int i = 1; i <= 2 * n; ++i) {
        for (int j = 1; j <= 2 * n; ++j) {
            if (i == j) continue;
            RatScalar s = sign(par(i) * par(j));
            ck.check("partial supercommute", d(i) * d(j), s * (d(j) * d(i)));
            ck.check("chi supercommute", x(i) * x(j), s * (x(j) * x(i)));
            ck.check("partial delta commute", d(i) * dl(j, 1), dl(j, 1) * d(i));
            if (base(i) != base(j)) {
                ck.check("chi partial supercommute", x(j) * d(i), s * (d(i) * x(j)));
                ck.check("chi delta commute", x(j) * dl(i, 1), dl(i, 1) * x(j));
            }
        }
        ck.check("partial delta q-commute", d(i) * dl(i, 1), v * (dl(i, 1) * d(i)));
    }

    const LinOp id = identity_op();
    for (int i = 1; i <= n; ++i) {
        const int ib = n + i;
        LinOp d0 = d(i);
        LinOp d1 = partial_shift(i, 1);
        LinOp d2 = partial_shift(i, 2);
        auto on_ai = even_pos(i);
        auto on_bar0 = odd_is(i, 0);
        auto on_bar1 = odd_is(i, 1);
        auto on_bar1_ai = [&](const SuperIndex& a) { return on_bar1(a) && on_ai(a); };

        ck.check("odd partial squares to zero", d(ib) * d(ib), LinOp{[](const SuperIndex&) { return QPolyElement(); }, 0});
        ck.check("odd chi squares to c chi^2", x(ib) * x(ib), c * (x(i) * x(i)));

        ck.check("partial chi shift", d0 * x(i), x(i) * d1, on_ai);
        ck.check("odd chi partial projects onto b=1", x(ib) * d(ib), odd_projection(i, 1));
        ck.check("odd partial chi projects onto b=0", d(ib) * x(ib), odd_projection(i, 0));
        ck.check("odd projections sum to identity", x(ib) * d(ib) + d(ib) * x(ib), id);
        ck.check("partial odd chi on b=0", d0 * x(ib), x(ib) * d0, on_bar0);
        ck.check("partial odd chi on b=1", d0 * x(ib), x(ib) * d2, on_bar1_ai);

        ck.check("chi delta q-commute", x(i) * dl(i, 1), vinv * (dl(i, 1) * x(i)));
        ck.check("odd chi odd delta on b=0", x(ib) * dl(ib, 1), vinv * (dl(ib, 1) * x(ib)), on_bar0);
        ck.check("odd chi odd delta on b=1", x(ib) * dl(ib, 1), v * (dl(ib, 1) * x(ib)), on_bar1);
        ck.check("odd chi even delta on b=0", x(ib) * dl(i, 1), dl(i, 1) * x(ib), on_bar0);
        ck.check("odd chi even delta on b=1", x(ib) * dl(i, 1), vp(-2) * (dl(i, 1) * x(ib)), on_bar1);

        ck.check("sign anticommutes with odd chi", sgn_bar(i) * x(ib), RatScalar(-1) * (x(ib) * sgn_bar(i)));
        ck.check("sign absorbed by odd partial", sgn_bar(i) * d(ib), d(ib));

        ck.check("shifted partial three-term", x(i) * d2 + x(i) * d0, vsum * (x(i) * d1));
        ck.check("shifted partial by two", x(i) * d2, x(i) * d0 + v * dl(i, 1) + vinv * dl(i, -1), on_ai);
        ck.check("shifted partial by one", x(i) * d1, v * (x(i) * d0) + dl(i, -1), on_ai);
        for (int s : {1, -1}) {
            ck.check("odd projection commutes with delta",
                     d(ib) * dl(i, s) * x(ib) + x(ib) * d(ib) * dl(i, s), dl(i, s));
        }
        ck.check("shifted partial by two, v^2 form", x(i) * d2, vp(2) * (x(i) * d0) + vsum * dl(i, -1), on_ai);
        ck.check("shifted partial products", d1 * d1 + d0 * d0, vsum * (d1 * d0));
    }
    return ck.report;
}

}  // namespace qqs
