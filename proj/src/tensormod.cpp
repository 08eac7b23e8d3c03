#include "qqs/tensormod.hpp"

#include "qqs/errors.hpp"

namespace qqs {

namespace {

RatScalar vp(int k) { return RatScalar::vpow(k); }
RatScalar qi(int c) { return RatScalar(qint(c)); }
RatScalar sign(int e) { return (e & 1) ? RatScalar(-1) : RatScalar(1); }

int row_part(const SuperMatrix& a, int i, int t) { return a.e(i, t) + a.o(i, t); }

// Adds c * X^{[b]} in reduced form; b may carry odd entries above 1.
void emit(TensorElement& out, const SuperMatrix& b, const RatScalar& c) {
    if (c.is_zero()) return;
    if (b.reduced())
        out.add(b, c);
    else
        out.axpy(c, normalize_monomial(b));
}

int require_n(const TensorElement& x) { return x.is_zero() ? 0 : x.begin()->first.n; }

void validate(int n, const GenSymbol& g, bool closed_only) {
    bool chevalley = g.kind == GenKind::E || g.kind == GenKind::F || g.kind == GenKind::Eb || g.kind == GenKind::Fb;
    int hi = chevalley ? n - 1 : n;
    if (g.index < 1 || g.index > hi) throw ContractError("generator " + to_string(g) + " out of range for n = " + std::to_string(n));
    if (g.power < 1 || (g.odd() && g.power != 1)) throw ContractError("bad power for " + to_string(g));
    if (closed_only && (g.kind == GenKind::Eb || g.kind == GenKind::Fb || (g.kind == GenKind::Kb && g.index != 1)))
        throw ContractError(to_string(g) + " has no closed form on the tensor space; use act_derived");
}

TensorElement closed_single(const GenSymbol& g, const SuperMatrix& a) {
    const int n = a.n;
    TensorElement out;
    switch (g.kind) {
    case GenKind::K:
    case GenKind::Kinv: {
        int r = ro(a)[g.index - 1];
        out.add(a, vp(g.kind == GenKind::K ? r : -r));
        break;
    }
    case GenKind::E: {
        const int h = g.index;
        for (int j = 1; j <= n; ++j) {
            if (a.e(h + 1, j) != 0) {
                SuperMatrix b = a;
                ++b.e(h, j);
                --b.e(h + 1, j);
                emit(out, b, vp(sigma_e_plus(h, j, a)) * qi(a.e(h, j) + 1));
            }
            if (a.o(h + 1, j) != 0) {
                SuperMatrix b = a;
                ++b.o(h, j);
                --b.o(h + 1, j);
                emit(out, b, vp(sigma_e_minus(h, j, a)) * qi(a.o(h, j) + 1));
            }
        }
        break;
    }
    case GenKind::F: {
        const int h = g.index;
        for (int j = 1; j <= n; ++j) {
            if (a.e(h, j) != 0) {
                SuperMatrix b = a;
                --b.e(h, j);
                ++b.e(h + 1, j);
                emit(out, b, vp(sigma_f_plus(h, j, a)) * qi(a.e(h + 1, j) + 1));
            }
            if (a.o(h, j) != 0) {
                SuperMatrix b = a;
                --b.o(h, j);
                ++b.o(h + 1, j);
                emit(out, b, vp(sigma_f_minus(h, j, a)) * qi(a.o(h + 1, j) + 1));
            }
        }
        break;
    }
    case GenKind::Kb: {
        for (int j = 1; j <= n; ++j) {
            RatScalar s = sign(koszul_s(j, a));
            if (a.o(1, j) != 0) {
                SuperMatrix b = a;
                ++b.e(1, j);
                --b.o(1, j);
                emit(out, b, s * vp(sigma_k_plus(j, a)) * qi(a.e(1, j) + 1));
            }
            if (a.e(1, j) != 0) {
                SuperMatrix b = a;
                --b.e(1, j);
                ++b.o(1, j);
                emit(out, b, s * vp(sigma_k_minus(j, a)) * qi(a.o(1, j) + 1));
            }
        }
        break;
    }
    default:
        throw InternalError("closed_single called on a derived generator");
    }
    return out;
}

// --- oracle ------------------------------------------------------------------

// Tensor factor acting on one column: a word applied through the polynomial action.
struct Factor {
    std::vector<GenSymbol> word;  // applied right to left
    int parity = 0;
};

// Column j as an element of A_v(n) in the divided basis, then acted on by f,
// returned in divided coordinates.
QPolyElement act_on_column(const Factor& f, const SuperIndex& col) {
    QPolyElement x = divided_monomial(col);
    for (auto it = f.word.rbegin(); it != f.word.rend() && !x.is_zero(); ++it) x = qqs::act_closed(*it, x);
    return divided_convert(x, Divided::ToDivided);
}

TensorElement apply_pure_tensor(const std::vector<Factor>& factors, const SuperMatrix& a) {
    const int n = a.n;
    // Koszul sign: factor k passes the columns to its left.
    int koszul = 0;
    int parity_left = 0;
    for (int k = 1; k <= n; ++k) {
        koszul += factors[k - 1].parity * parity_left;
        parity_left += a.column(k).parity();
    }
    std::vector<std::pair<SuperMatrix, RatScalar>> acc{{SuperMatrix(n), sign(koszul)}};
    for (int k = 1; k <= n; ++k) {
        QPolyElement col = act_on_column(factors[k - 1], a.column(k));
        std::vector<std::pair<SuperMatrix, RatScalar>> next;
        for (const auto& [m, c] : acc)
            for (const auto& [idx, d] : col) {
                SuperMatrix m2 = m;
                m2.set_column(k, idx);
                next.emplace_back(m2, c * d);
            }
        acc = std::move(next);
        if (acc.empty()) return {};
    }
    TensorElement out;
    for (const auto& [m, c] : acc) out.add(m, c);
    return out;
}

TensorElement oracle_single(const GenSymbol& g, const SuperMatrix& a) {
    const int n = a.n;
    const int h = g.index;
    auto K = [](int i, int p) { return p > 0 ? GenSymbol{GenKind::K, i, p} : GenSymbol{GenKind::Kinv, i, -p}; };
    TensorElement out;
    switch (g.kind) {
    case GenKind::K:
    case GenKind::Kinv: {
        std::vector<Factor> fs(n, Factor{{g}, 0});
        return apply_pure_tensor(fs, a);
    }
    case GenKind::E:
        // sum_j 1 .. 1 (x) E_h (x) Kt_h^{-1} .. Kt_h^{-1},  Kt_h = K_h K_{h+1}^{-1}
        for (int j = 1; j <= n; ++j) {
            std::vector<Factor> fs(n);
            fs[j - 1] = Factor{{GenSymbol{GenKind::E, h, 1}}, 0};
            for (int k = j + 1; k <= n; ++k) fs[k - 1] = Factor{{K(h, -1), K(h + 1, 1)}, 0};
            out += apply_pure_tensor(fs, a);
        }
        return out;
    case GenKind::F:
        for (int j = 1; j <= n; ++j) {
            std::vector<Factor> fs(n);
            for (int k = 1; k < j; ++k) fs[k - 1] = Factor{{K(h, 1), K(h + 1, -1)}, 0};
            fs[j - 1] = Factor{{GenSymbol{GenKind::F, h, 1}}, 0};
            out += apply_pure_tensor(fs, a);
        }
        return out;
    case GenKind::Kb:
        for (int j = 1; j <= n; ++j) {
            std::vector<Factor> fs(n);
            for (int k = 1; k < j; ++k) fs[k - 1] = Factor{{K(1, -1)}, 0};
            fs[j - 1] = Factor{{GenSymbol{GenKind::Kb, 1, 1}}, 1};
            for (int k = j + 1; k <= n; ++k) fs[k - 1] = Factor{{K(1, 1)}, 0};
            out += apply_pure_tensor(fs, a);
        }
        return out;
    default:
        throw InternalError("oracle_single called on a derived generator");
    }
}

template <class Single>
TensorElement apply_each(const Single& single, const GenSymbol& g, const TensorElement& x) {
    std::function<TensorElement(const GenSymbol&, const TensorElement&)> lin = [&](const GenSymbol& s, const TensorElement& y) {
        TensorElement out;
        for (const auto& [a, c] : y) out.axpy(c, single(s, a));
        return out;
    };
    if (g.kind == GenKind::K || g.kind == GenKind::Kinv) return lin(g, x);  // single handles K powers directly
    return apply_with_powers<SuperMatrix>(lin, g, x);
}

}  // namespace

TensorElement normalize_monomial(const SuperMatrix& a) {
    std::vector<std::pair<SuperMatrix, RatScalar>> acc{{a, RatScalar(1)}};
    for (int j = 1; j <= a.n; ++j) {
        SuperIndex col = a.column(j);
        if (col.reduced()) continue;
        QPolyElement exp = divided_convert(divided_monomial(col), Divided::ToDivided);
        std::vector<std::pair<SuperMatrix, RatScalar>> next;
        for (const auto& [m, c] : acc)
            for (const auto& [idx, d] : exp) {
                SuperMatrix m2 = m;
                m2.set_column(j, idx);
                next.emplace_back(m2, c * d);
            }
        acc = std::move(next);
    }
    TensorElement out;
    for (const auto& [m, c] : acc) out.add(m, c);
    return out;
}

int sigma_e_plus(int h, int j, const SuperMatrix& a) {
    int s = a.o(h + 1, j);
    for (int t = j + 1; t <= a.n; ++t) s += -row_part(a, h, t) + row_part(a, h + 1, t);
    return s;
}

int sigma_e_minus(int h, int j, const SuperMatrix& a) {
    int s = -a.e(h + 1, j);
    for (int t = j + 1; t <= a.n; ++t) s += -row_part(a, h, t) + row_part(a, h + 1, t);
    return s;
}

int sigma_f_plus(int h, int j, const SuperMatrix& a) {
    int s = -a.o(h, j);
    for (int t = 1; t < j; ++t) s += row_part(a, h, t) - row_part(a, h + 1, t);
    return s;
}

int sigma_f_minus(int h, int j, const SuperMatrix& a) {
    int s = a.e(h, j);
    for (int t = 1; t < j; ++t) s += row_part(a, h, t) - row_part(a, h + 1, t);
    return s;
}

int sigma_k_plus(int j, const SuperMatrix& a) {
    int s = -a.e(1, j);
    for (int t = 1; t < j; ++t) s -= row_part(a, 1, t);
    for (int t = j + 1; t <= a.n; ++t) s += row_part(a, 1, t);
    return s;
}

int sigma_k_minus(int j, const SuperMatrix& a) {
    int s = a.o(1, j);
    for (int t = 1; t < j; ++t) s -= row_part(a, 1, t);
    for (int t = j + 1; t <= a.n; ++t) s += row_part(a, 1, t);
    return s;
}

int koszul_s(int j, const SuperMatrix& a) {
    int s = 0;
    for (int t = 1; t < j; ++t)
        for (int i = 1; i <= a.n; ++i) s += a.o(i, t);
    return s;
}

TensorElement act_closed(const GenSymbol& g, const TensorElement& x) {
    int n = require_n(x);
    if (n == 0) return {};
    validate(n, g, true);
    auto single = [](const GenSymbol& s, const SuperMatrix& a) {
        if (s.kind == GenKind::K || s.kind == GenKind::Kinv) {
            int r = ro(a)[s.index - 1] * s.power;
            return TensorElement::basis(a, vp(s.kind == GenKind::K ? r : -r));
        }
        return closed_single(s, a);
    };
    return apply_each(single, g, x);
}

TensorElement act_oracle(const GenSymbol& g, const TensorElement& x) {
    int n = require_n(x);
    if (n == 0) return {};
    validate(n, g, true);
    return apply_each(oracle_single, g, x);
}

TensorElement act_derived(const GenSymbol& g, const TensorElement& x) {
    int n = require_n(x);
    if (n == 0) return {};
    validate(n, g, false);
    bool base = !g.odd() || (g.kind == GenKind::Kb && g.index == 1);
    if (base) return act_closed(g, x);
    return evaluate<SuperMatrix>(derived_odd(g), tensor_action(), x);
}

Action<SuperMatrix> tensor_action() {
    return [](const GenSymbol& g, const TensorElement& x) { return act_derived(g, x); };
}

std::vector<int> weight(const TensorElement& x) {
    if (x.is_zero()) throw ContractError("weight of zero element");
    std::vector<int> w = ro(x.begin()->first);
    for (const auto& [a, c] : x)
        if (ro(a) != w) throw ContractError("element mixes weights");
    return w;
}

TensorElement co_project(const TensorElement& x, const std::vector<int>& lambda) {
    TensorElement out;
    for (const auto& [a, c] : x)
        if (co(a) == lambda) out.add(a, c);
    return out;
}

std::string to_string(const TensorElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [a, c] : x) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*X" + to_string(a);
    }
    return s;
}

}  // namespace qqs
