#include "qqs/vmod.hpp"

#include "qqs/errors.hpp"

namespace qqs {

namespace {

RatScalar vp(int k) { return RatScalar::vpow(k); }
RatScalar qi(int c) { return RatScalar(qint(c)); }
RatScalar sign(int e) { return (e & 1) ? RatScalar(-1) : RatScalar(1); }

// 1 / (v - v^{-1})
RatScalar inv_vdiff() { return (vp(1) - vp(-1)).inverse(); }

std::vector<int> shift(std::vector<int> j, int i, int d) {
    j[i - 1] += d;
    return j;
}

// j - alpha_h = j - e_h + e_{h+1}
std::vector<int> minus_alpha(const std::vector<int>& j, int h) { return shift(shift(j, h, -1), h + 1, 1); }
std::vector<int> plus_alpha(const std::vector<int>& j, int h) { return shift(shift(j, h, 1), h + 1, -1); }
std::vector<int> plus_beta(const std::vector<int>& j, int h) { return shift(shift(j, h, 1), h + 1, 1); }

void emit(VElement& out, const SuperMatrix& b, const std::vector<int>& j, const RatScalar& c) {
    if (c.is_zero() || !b.nonnegative()) return;
    out.add(VKey{b, j}, c);
}

int require_n(const VElement& x) { return x.is_zero() ? 0 : x.begin()->first.a.n; }

void validate(int n, const GenSymbol& g, bool closed_only) {
    bool chevalley = g.kind == GenKind::E || g.kind == GenKind::F || g.kind == GenKind::Eb || g.kind == GenKind::Fb;
    int hi = chevalley ? n - 1 : n;
    if (g.index < 1 || g.index > hi) throw ContractError("generator " + to_string(g) + " out of range for n = " + std::to_string(n));
    if (g.power < 1 || (g.odd() && g.power != 1)) throw ContractError("bad power for " + to_string(g));
    if (closed_only && (g.kind == GenKind::Eb || g.kind == GenKind::Fb || (g.kind == GenKind::Kb && g.index != 1)))
        throw ContractError(to_string(g) + " has no closed form on V_v(n); use act_derived");
}

VElement act_e(int h, const SuperMatrix& a, const std::vector<int>& j) {
    const int n = a.n;
    VElement out;
    for (int t = 1; t <= n; ++t) {
        // even half
        if (t == h) {
            if (a.e(h + 1, h) >= 1) {
                SuperMatrix b = a;
                --b.e(h + 1, h);
                RatScalar c = vp(sigma_e_plus(h, h, a) - j[h - 1]) * inv_vdiff();
                emit(out, b, plus_beta(j, h), c);
                emit(out, b, minus_alpha(j, h), -c);
            }
        } else if (t == h + 1) {
            SuperMatrix b = a;
            ++b.e(h, h + 1);
            emit(out, b, j, vp(sigma_e_plus(h, h + 1, a) + j[h]) * qi(a.e(h, h + 1) + 1));
        } else if (a.e(h + 1, t) >= 1) {
            SuperMatrix b = a;
            ++b.e(h, t);
            --b.e(h + 1, t);
            emit(out, b, t < h ? minus_alpha(j, h) : j, vp(sigma_e_plus(h, t, a)) * qi(a.e(h, t) + 1));
        }
        // odd half
        if (a.o(h + 1, t) == 1) {
            SuperMatrix b = a;
            ++b.o(h, t);
            --b.o(h + 1, t);
            std::vector<int> jj = t < h ? minus_alpha(j, h) : t == h ? shift(j, h + 1, 1) : t == h + 1 ? shift(j, h + 1, -1) : j;
            emit(out, b, jj, vp(sigma_e_minus(h, t, a)) * qi(a.o(h, t) + 1));
        }
    }
    return out;
}

VElement act_f(int h, const SuperMatrix& a, const std::vector<int>& j) {
    const int n = a.n;
    VElement out;
    for (int t = 1; t <= n; ++t) {
        // even half
        if (t == h) {
            SuperMatrix b = a;
            ++b.e(h + 1, h);
            emit(out, b, j, vp(sigma_f_plus(h, h, a) + j[h - 1]) * qi(a.e(h + 1, h) + 1));
        } else if (t == h + 1) {
            if (a.e(h, h + 1) >= 1) {
                SuperMatrix b = a;
                --b.e(h, h + 1);
                RatScalar c = vp(sigma_f_plus(h, h + 1, a) - j[h]) * inv_vdiff();
                emit(out, b, plus_beta(j, h), c);
                emit(out, b, plus_alpha(j, h), -c);
            }
        } else if (a.e(h, t) >= 1) {
            SuperMatrix b = a;
            --b.e(h, t);
            ++b.e(h + 1, t);
            emit(out, b, t < h ? j : plus_alpha(j, h), vp(sigma_f_plus(h, t, a)) * qi(a.e(h + 1, t) + 1));
        }
        // odd half
        if (a.o(h, t) == 1) {
            SuperMatrix b = a;
            --b.o(h, t);
            ++b.o(h + 1, t);
            std::vector<int> jj = t < h ? j : t <= h + 1 ? shift(j, h, 1) : plus_alpha(j, h);
            emit(out, b, jj, vp(sigma_f_minus(h, t, a)) * qi(a.o(h + 1, t) + 1));
        }
    }
    return out;
}

VElement act_kb1(const SuperMatrix& a, const std::vector<int>& j) {
    const int n = a.n;
    VElement out;
    if (a.o(1, 1) == 1) {
        SuperMatrix b = a;
        --b.o(1, 1);
        RatScalar c = vp(sigma_k_plus(1, a) - j[0] + 1) * inv_vdiff();
        emit(out, b, j, c);
        emit(out, b, shift(j, 1, -2), -c);
    }
    {
        SuperMatrix b = a;
        ++b.o(1, 1);
        emit(out, b, j, vp(sigma_k_minus(1, a) + j[0]) * qi(a.o(1, 1) + 1));
    }
    for (int t = 2; t <= n; ++t) {
        RatScalar s = sign(koszul_s(t, a));
        if (a.o(1, t) == 1) {
            SuperMatrix b = a;
            ++b.e(1, t);
            --b.o(1, t);
            emit(out, b, shift(j, 1, -1), s * vp(sigma_k_plus(t, a)) * qi(a.e(1, t) + 1));
        }
        if (a.e(1, t) >= 1) {
            SuperMatrix b = a;
            --b.e(1, t);
            ++b.o(1, t);
            emit(out, b, shift(j, 1, -1), s * vp(sigma_k_minus(t, a)) * qi(a.o(1, t) + 1));
        }
    }
    return out;
}

VElement single_term(const GenSymbol& g, const VKey& k) {
    switch (g.kind) {
    case GenKind::K:
    case GenKind::Kinv: {
        int m = g.kind == GenKind::K ? g.power : -g.power;
        return VElement::basis(VKey{k.a, shift(k.j, g.index, m)}, vp(m * ro(k.a)[g.index - 1]));
    }
    case GenKind::E: return act_e(g.index, k.a, k.j);
    case GenKind::F: return act_f(g.index, k.a, k.j);
    case GenKind::Kb: return act_kb1(k.a, k.j);
    default: throw InternalError("single_term called on a derived generator");
    }
}

}  // namespace

VElement zero_symbol(int n, const std::vector<int>& j) { return symbol(SuperMatrix(n), j); }

VElement symbol(const SuperMatrix& a, const std::vector<int>& j, const RatScalar& c) {
    if (static_cast<int>(j.size()) != a.n) throw ContractError("j has wrong length");
    if (!a.nonnegative()) return {};
    if (!a.primed()) throw ContractError("A(j) needs a matrix with zero even diagonal");
    VElement out;
    emit(out, a, j, c);
    return reduce_close(out);
}

VElement reduce_close(const VElement& x, DiagonalConstant dc) {
    VElement out;
    std::vector<std::pair<VKey, RatScalar>> work(x.begin(), x.end());
    while (!work.empty()) {
        auto [k, c] = std::move(work.back());
        work.pop_back();
        int pos = -1;
        for (int p = 0; p < static_cast<int>(k.a.a1.size()); ++p) {
            if (k.a.a1[p] > 2) throw InternalError("odd entry above 2 in " + to_string(k));
            if (k.a.a1[p] == 2 && pos < 0) pos = p;
        }
        if (pos < 0) {
            out.add(k, c);
            continue;
        }
        const int i = pos / k.a.n + 1;
        const int t = pos % k.a.n + 1;
        SuperMatrix b = k.a;
        b.o(i, t) = 0;
        if (i != t) {
            int a0 = b.e(i, t);
            b.e(i, t) += 2;
            work.emplace_back(VKey{b, k.j}, c * odd_square_coeff() * RatScalar(qbinom(a0 + 2, 2)));
        } else {
            RatScalar vsum = vp(1) + vp(-1);
            int e = -2 * k.j[i - 1] - (dc == DiagonalConstant::Shifted ? 1 : 0);
            RatScalar f = c * vp(e) * inv_vdiff() * (vsum * vsum).inverse();
            work.emplace_back(VKey{b, shift(k.j, i, 2)}, f * vp(-1));
            work.emplace_back(VKey{b, shift(k.j, i, -2)}, f * vp(1));
            work.emplace_back(VKey{b, k.j}, -f * vsum);
        }
    }
    return out;
}

VElement act(const GenSymbol& g, const VElement& x, DiagonalConstant dc) {
    int n = require_n(x);
    if (n == 0) return {};
    validate(n, g, true);
    std::function<VElement(const GenSymbol&, const VElement&)> lin = [dc](const GenSymbol& s, const VElement& y) {
        VElement out;
        for (const auto& [k, c] : y) out.axpy(c, single_term(s, k));
        return reduce_close(out, dc);
    };
    if (g.kind == GenKind::K || g.kind == GenKind::Kinv) return lin(g, x);
    return apply_with_powers<VKey>(lin, g, x);
}

VElement act_derived(const GenSymbol& g, const VElement& x) {
    int n = require_n(x);
    if (n == 0) return {};
    validate(n, g, false);
    bool base = !g.odd() || (g.kind == GenKind::Kb && g.index == 1);
    if (base) return act(g, x);
    return evaluate<VKey>(derived_odd(g), vmod_action(), x);
}

Action<VKey> vmod_action() {
    return [](const GenSymbol& g, const VElement& x) { return act_derived(g, x); };
}

TensorElement truncate(const VElement& x, int rmax) {
    TensorElement out;
    for (const auto& [k, c] : x) {
        const int n = k.a.n;
        int room = rmax - k.a.degree();
        if (room < 0) continue;
        // Enumerate lambda in N^n with |lambda| <= room.
        std::vector<int> lam(n, 0);
        while (true) {
            int dot = 0;
            for (int i = 0; i < n; ++i) dot += lam[i] * k.j[i];
            out.add(add_diag(k.a, lam), c * vp(dot));
            int p = 0;
            int used = 0;
            for (int v : lam) used += v;
            while (p < n) {
                if (used < room) {
                    ++lam[p];
                    break;
                }
                used -= lam[p];
                lam[p] = 0;
                ++p;
            }
            if (p == n) break;
        }
    }
    return out;
}

LeadingTerm leading_term(const VElement& x) {
    if (x.is_zero()) throw ContractError("leading term of zero element");
    auto best = x.begin();
    for (auto it = std::next(x.begin()); it != x.end(); ++it) {
        int c = total_compare(it->first.a, best->first.a);
        if (c > 0 || (c == 0 && it->first.j > best->first.j)) best = it;
    }
    return {best->first.a, best->first.j, best->second};
}

VElement monomial_image(const SuperMatrix& a, const std::vector<int>& j) {
    if (!a.primed() || !a.reduced()) throw ContractError("monomial_image needs a primed reduced matrix");
    return evaluate<VKey>(as_combination(monomial_word(a, j)), vmod_action(), zero_symbol(a.n, std::vector<int>(a.n, 0)));
}

std::string to_string(const VKey& k) {
    std::string s = to_string(k.a) + "(";
    for (std::size_t i = 0; i < k.j.size(); ++i) s += (i ? "," : "") + std::to_string(k.j[i]);
    return s + ")";
}

std::string to_string(const VElement& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : x) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*" + to_string(k);
    }
    return s;
}

}  // namespace qqs
