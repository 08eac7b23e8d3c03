#include "qqs/uword.hpp"

#include <sstream>

#include "qqs/errors.hpp"

namespace qqs {

namespace {

GenSymbol K(int i, int p = 1) { return p >= 0 ? GenSymbol{GenKind::K, i, p} : GenSymbol{GenKind::Kinv, i, -p}; }
GenSymbol E(int i, int p = 1) { return {GenKind::E, i, p}; }
GenSymbol F(int i, int p = 1) { return {GenKind::F, i, p}; }
GenSymbol Kb(int i) { return {GenKind::Kb, i, 1}; }
GenSymbol Eb(int i) { return {GenKind::Eb, i, 1}; }
GenSymbol Fb(int i) { return {GenKind::Fb, i, 1}; }

RatScalar vp(int k) { return RatScalar::vpow(k); }

WordCombination W(std::initializer_list<GenSymbol> s, const RatScalar& c = RatScalar(1)) {
    return as_combination(GeneratorWord(s), c);
}

const WordCombination& one() {
    static const WordCombination w = as_combination(GeneratorWord());
    return w;
}

// Appends a generator power to a word, skipping zero powers.
void push_power(std::vector<GenSymbol>& w, GenSymbol g) {
    if (g.power > 0) w.push_back(g);
}

}  // namespace

GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b) {
    GeneratorWord w = a;
    w.symbols.insert(w.symbols.end(), b.symbols.begin(), b.symbols.end());
    return w;
}

std::string to_string(const GeneratorWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& g : w.symbols) {
        if (!s.empty()) s += ' ';
        s += to_string(g);
    }
    return s;
}

GeneratorWord parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    GeneratorWord w;
    while (in >> tok) {
        if (tok == "1") continue;
        w.symbols.push_back(parse_gen(tok));
    }
    return w;
}

WordCombination operator*(const WordCombination& a, const WordCombination& b) {
    WordCombination out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) out.add(wa * wb, ca * cb);
    return out;
}

WordCombination as_combination(const GeneratorWord& w, const RatScalar& c) {
    return WordCombination::basis(w, c);
}

std::string to_string(const WordCombination& w) {
    if (w.is_zero()) return "0";
    std::string s;
    for (const auto& [word, c] : w) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")*[" + to_string(word) + "]";
    }
    return s;
}

WordCombination divided_power(const WordCombination& x, int m) {
    if (m < 0) throw ContractError("negative divided power");
    WordCombination out = one();
    for (int k = 0; k < m; ++k) out = out * x;
    if (m > 1) out *= RatScalar(1) / RatScalar(qfact(m));
    return out;
}

WordCombination root_vector(int i, int j, bool odd) {
    if (i < 1 || j < 1) throw ContractError("root vector index out of range");
    if (odd) {
        if (i == j) return W({Kb(i)});
        if (j == i + 1) return W({Eb(i)});
        if (i == j + 1) return W({Fb(j)});
        if (i < j) {
            int k = j - 1;
            return root_vector(i, k, false) * root_vector(k, j, true) - vp(1) * (root_vector(k, j, true) * root_vector(i, k, false));
        }
        int k = j + 1;
        return root_vector(i, k, true) * root_vector(k, j, false) - vp(-1) * (root_vector(k, j, false) * root_vector(i, k, true));
    }
    if (i == j) throw ContractError("even root vector needs i != j");
    if (j == i + 1) return W({E(i)});
    if (i == j + 1) return W({F(j)});
    int k = i < j ? j - 1 : j + 1;
    int eps = i < j ? 1 : -1;
    return root_vector(i, k, false) * root_vector(k, j, false) - vp(eps) * (root_vector(k, j, false) * root_vector(i, k, false));
}

GeneratorWord k_word(const std::vector<int>& j) {
    GeneratorWord w;
    for (std::size_t i = 0; i < j.size(); ++i)
        if (j[i] != 0) w.symbols.push_back(K(static_cast<int>(i) + 1, j[i]));
    return w;
}

namespace {

void require_primed(const SuperMatrix& a, const std::vector<int>& j) {
    if (!a.primed() || !a.reduced() || !a.nonnegative()) throw ContractError("expected a primed reduced matrix: " + to_string(a));
    if (static_cast<int>(j.size()) != a.n) throw ContractError("weight vector has wrong length");
}

// Single generators keep their divided power as one symbol.
WordCombination even_root_power(int i, int j, int m) {
    if (m == 0) return one();
    if (j == i + 1) return W({E(i, m)});
    if (i == j + 1) return W({F(j, m)});
    return divided_power(root_vector(i, j, false), m);
}

}  // namespace

WordCombination pbw_word(const SuperMatrix& a, const std::vector<int>& j) {
    require_primed(a, j);
    const int n = a.n;
    WordCombination out = as_combination(k_word(j));
    for (int c = n; c >= 1; --c) {
        for (int i = c - 1; i >= 1; --i) out = out * even_root_power(i, c, a.e(i, c));
        for (int i = 1; i <= n; ++i)
            if (a.o(i, c)) out = out * root_vector(i, c, true);
    }
    for (int c = 1; c < n; ++c)
        for (int i = c + 1; i <= n; ++i) out = out * even_root_power(i, c, a.e(i, c));
    return out;
}

GeneratorWord monomial_word(const SuperMatrix& a, const std::vector<int>& j) {
    require_primed(a, j);
    const int n = a.n;
    std::vector<GenSymbol> w = k_word(j).symbols;
    for (int c = n; c >= 1; --c) {
        int odd_col = 0;
        for (int i = 1; i <= n; ++i) {
            int b = a.o(i, c);
            odd_col += b;
            if (!b) continue;
            for (int s = i - 1; s >= 1; --s) w.push_back(F(s));
            w.push_back(Kb(1));
        }
        int acc = odd_col;
        for (int s = 1; s <= c - 1; ++s) {
            acc += a.e(s, c);
            push_power(w, E(s, acc));
        }
    }
    for (int c = 1; c < n; ++c) {
        int acc = 0;
        for (int s = n; s > c; --s) {
            acc += a.e(s, c);
            push_power(w, F(s - 1, acc));
        }
    }
    return GeneratorWord(std::move(w));
}

GeneratorWord omega(const GeneratorWord& w) {
    GeneratorWord out;
    for (auto it = w.symbols.rbegin(); it != w.symbols.rend(); ++it) {
        GenSymbol g = *it;
        switch (g.kind) {
        case GenKind::K: g.kind = GenKind::Kinv; break;
        case GenKind::Kinv: g.kind = GenKind::K; break;
        case GenKind::E: g.kind = GenKind::F; break;
        case GenKind::F: g.kind = GenKind::E; break;
        case GenKind::Eb: g.kind = GenKind::Fb; break;
        case GenKind::Fb: g.kind = GenKind::Eb; break;
        case GenKind::Kb: break;
        }
        out.symbols.push_back(g);
    }
    return out;
}

WordCombination bar_coefficients(const WordCombination& w) {
    WordCombination out;
    for (const auto& [word, c] : w) out.add(word, c.bar());
    return out;
}

WordCombination omega(const WordCombination& w) {
    WordCombination out;
    for (const auto& [word, c] : w) out.add(omega(word), c.bar());
    return out;
}

WordCombination kbinom(int i, int c, int t) {
    WordCombination out = one();
    for (int s = 1; s <= t; ++s) {
        RatScalar d = RatScalar(1) / (vp(s) - vp(-s));
        WordCombination f = W({K(i)}, vp(c - s + 1) * d) - W({K(i, -1)}, vp(-c + s - 1) * d);
        out = out * f;
    }
    return out;
}

WordCombination kbinom_weight(const std::vector<int>& lambda) {
    WordCombination out = one();
    for (std::size_t i = 0; i < lambda.size(); ++i) out = out * kbinom(static_cast<int>(i) + 1, 0, lambda[i]);
    return out;
}

WordCombination derived_odd(const GenSymbol& g) {
    const RatScalar v = vp(1);
    const int h = g.index;
    switch (g.kind) {
    case GenKind::Eb:
        return W({Kb(h), E(h), K(h)}) - W({E(h), Kb(h), K(h)}, v);
    case GenKind::Fb:
        return W({F(h), Kb(h), K(h, -1)}, v) - W({Kb(h), F(h), K(h, -1)});
    case GenKind::Kb:
        if (h < 2) break;
        return W({K(h, -1), Kb(h - 1), K(h - 1)}) - W({E(h - 1), Fb(h - 1), K(h - 1)}) + W({Fb(h - 1), E(h - 1), K(h - 1)});
    default:
        break;
    }
    throw ContractError("no derived expression for " + to_string(g));
}

// ---------------------------------------------------------------------------

std::vector<Relation> relations(int n) {
    if (n < 1) throw ContractError("relations need n >= 1");
    std::vector<Relation> rel;
    auto add = [&](std::string id, WordCombination r) { rel.push_back({std::move(id), std::move(r)}); };
    auto tag = [](const char* fam, std::initializer_list<int> idx) {
        std::string s = fam;
        s += "(";
        bool first = true;
        for (int x : idx) {
            s += (first ? "" : ",") + std::to_string(x);
            first = false;
        }
        return s + ")";
    };
    const RatScalar v = vp(1);

    // QQ1
    for (int i = 1; i <= n; ++i) {
        add(tag("QQ1 K Kinv", {i}), W({K(i), K(i, -1)}) - one());
        add(tag("QQ1 Kinv K", {i}), W({K(i, -1), K(i)}) - one());
        for (int j = i + 1; j <= n; ++j) add(tag("QQ1 K K", {i, j}), W({K(i), K(j)}) - W({K(j), K(i)}));
        for (int j = 1; j <= n; ++j) add(tag("QQ1 K Kb", {i, j}), W({K(i), Kb(j)}) - W({Kb(j), K(i)}));
        for (int j = i; j <= n; ++j) {
            WordCombination r = W({Kb(i), Kb(j)}) + W({Kb(j), Kb(i)});
            if (i == j) {
                RatScalar c = RatScalar(2) / (vp(2) - vp(-2));
                r -= W({K(i, 2)}, c) - W({K(i, -2)}, c);
            }
            add(tag("QQ1 Kb Kb", {i, j}), r);
        }
    }

    // QQ2
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < n; ++j) {
            int e = (i == j) - (i == j + 1);
            add(tag("QQ2 K E", {i, j}), W({K(i), E(j)}) - W({E(j), K(i)}, vp(e)));
            add(tag("QQ2 K F", {i, j}), W({K(i), F(j)}) - W({F(j), K(i)}, vp(-e)));
            add(tag("QQ2 K Eb", {i, j}), W({K(i), Eb(j)}) - W({Eb(j), K(i)}, vp(e)));
            add(tag("QQ2 K Fb", {i, j}), W({K(i), Fb(j)}) - W({Fb(j), K(i)}, vp(-e)));
        }

    // QQ3
    for (int j = 1; j < n; ++j) {
        for (int i = 1; i <= n; ++i) {
            if (i == j || i == j + 1) continue;
            add(tag("QQ3 Kb E", {i, j}), W({Kb(i), E(j)}) - W({E(j), Kb(i)}));
            add(tag("QQ3 Kb F", {i, j}), W({Kb(i), F(j)}) - W({F(j), Kb(i)}));
        }
        add(tag("QQ3 Kb_j E_j", {j}), W({Kb(j), E(j)}) - W({E(j), Kb(j)}, v) - W({Eb(j), K(j, -1)}));
        add(tag("QQ3 Kb_j+1 E_j", {j}), W({Kb(j + 1), E(j)}, v) - W({E(j), Kb(j + 1)}) + W({K(j + 1, -1), Eb(j)}));
        add(tag("QQ3 Kb_j F_j", {j}), W({Kb(j), F(j)}) - W({F(j), Kb(j)}, v) + W({Fb(j), K(j)}));
        add(tag("QQ3 Kb_j+1 F_j", {j}), W({Kb(j + 1), F(j)}, v) - W({F(j), Kb(j + 1)}) - W({K(j + 1), Fb(j)}));
    }

    // QQ4
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            WordCombination r1 = W({E(i), F(j)}) - W({F(j), E(i)});
            WordCombination r2 = W({E(i), Fb(j)}) - W({Fb(j), E(i)});
            WordCombination r3 = W({Eb(i), F(j)}) - W({F(j), Eb(i)});
            if (i == j) {
                RatScalar d = RatScalar(1) / (v - vp(-1));
                r1 -= W({K(i), K(i + 1, -1)}, d) - W({K(i, -1), K(i + 1)}, d);
                r2 -= W({K(i + 1, -1), Kb(i)}) - W({Kb(i + 1), K(i, -1)});
                r3 -= W({K(i + 1), Kb(i)}) - W({Kb(i + 1), K(i)});
            }
            add(tag("QQ4 E F", {i, j}), r1);
            add(tag("QQ4 E Fb", {i, j}), r2);
            add(tag("QQ4 Eb F", {i, j}), r3);
        }

    // QQ5
    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            add(tag("QQ5 E E", {i, j}), W({E(i), E(j)}) - W({E(j), E(i)}));
            add(tag("QQ5 F F", {i, j}), W({F(i), F(j)}) - W({F(j), F(i)}));
        }
        add(tag("QQ5 E Eb", {i}), W({E(i), Eb(i)}) - W({Eb(i), E(i)}));
        add(tag("QQ5 F Fb", {i}), W({F(i), Fb(i)}) - W({Fb(i), F(i)}));
        if (i + 1 < n) {
            add(tag("QQ5 E E+1", {i}), W({E(i), E(i + 1)}) - W({E(i + 1), E(i)}, v) - W({Eb(i), Eb(i + 1)}) - W({Eb(i + 1), Eb(i)}, v));
            add(tag("QQ5 F F+1", {i}), W({F(i + 1), F(i)}, v) - W({F(i), F(i + 1)}) - W({Fb(i), Fb(i + 1)}) - W({Fb(i + 1), Fb(i)}, v));
        }
    }

    // QQ6
    const RatScalar s = v + vp(-1);
    for (int i = 1; i < n; ++i)
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j >= n) continue;
            add(tag("QQ6 E E", {i, j}), W({E(i), E(i), E(j)}) - W({E(i), E(j), E(i)}, s) + W({E(j), E(i), E(i)}));
            add(tag("QQ6 F F", {i, j}), W({F(i), F(i), F(j)}) - W({F(i), F(j), F(i)}, s) + W({F(j), F(i), F(i)}));
            add(tag("QQ6 E Eb", {i, j}), W({E(i), E(i), Eb(j)}) - W({E(i), Eb(j), E(i)}, s) + W({Eb(j), E(i), E(i)}));
            add(tag("QQ6 F Fb", {i, j}), W({F(i), F(i), Fb(j)}) - W({F(i), Fb(j), F(i)}, s) + W({Fb(j), F(i), F(i)}));
        }
    return rel;
}

}  // namespace qqs
