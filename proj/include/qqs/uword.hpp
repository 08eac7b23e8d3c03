#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qqs/diffops.hpp"
#include "qqs/matidx.hpp"
#include "qqs/sparse.hpp"

namespace qqs {

/// Ordered product of generator symbols; the empty word is 1.
struct GeneratorWord {
    std::vector<GenSymbol> symbols;

    GeneratorWord() = default;
    GeneratorWord(std::initializer_list<GenSymbol> s) : symbols(s) {}
    explicit GeneratorWord(std::vector<GenSymbol> s) : symbols(std::move(s)) {}

    bool empty() const { return symbols.empty(); }
    auto operator<=>(const GeneratorWord&) const = default;
};

GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b);

/// "E1^(2) F2 Kb1 K1^-1"; "1" for the empty word.
std::string to_string(const GeneratorWord& w);
GeneratorWord parse_word(const std::string& text);

/// Q(v)-linear combination of generator words, an element of U_v(q(n)) in
/// unreduced form.
using WordCombination = SparseVec<GeneratorWord>;

WordCombination operator*(const WordCombination& a, const WordCombination& b);
WordCombination as_combination(const GeneratorWord& w, const RatScalar& c = RatScalar(1));
std::string to_string(const WordCombination& w);

/// Even root vector E_{i,j} (odd = false) or odd root vector Ebar_{i,j}.
/// Ebar_{i,i} is Kb_i.
WordCombination root_vector(int i, int j, bool odd);

/// Divided power x^m / [m]!.
WordCombination divided_power(const WordCombination& x, int m);

/// K_1^{j_1}..K_n^{j_n}.
GeneratorWord k_word(const std::vector<int>& j);

/// PBW element K^j E_A^{n+,nbar} .. E_A^{1+,1bar} E_A^{1-} .. E_A^{(n-1)-}.
WordCombination pbw_word(const SuperMatrix& a, const std::vector<int>& j);

/// Monomial K^j m^{A,0} in the generators E^{(m)}, F^{(m)}, K^{+-1}, Kb_1.
GeneratorWord monomial_word(const SuperMatrix& a, const std::vector<int>& j);

/// Anti-involution: reverses the word, swaps E and F, inverts K, fixes Kb.
GeneratorWord omega(const GeneratorWord& w);
/// Word-level anti-involution together with v -> v^{-1} on coefficients.
WordCombination omega(const WordCombination& w);
/// v -> v^{-1} on coefficients only.
WordCombination bar_coefficients(const WordCombination& w);

/// [K_i; c over t] = prod_{s=1..t} (K_i v^{c-s+1} - K_i^{-1} v^{-c+s-1}) / (v^s - v^{-s}).
WordCombination kbinom(int i, int c, int t);
/// prod_i [K_i; 0 over lambda_i].
WordCombination kbinom_weight(const std::vector<int>& lambda);

/// Expresses Eb_h, Fb_h and Kb_{h+1} through generators of lower index:
///   Eb_h = (Kb_h E_h - v E_h Kb_h) K_h
///   Fb_h = (-Kb_h F_h + v F_h Kb_h) K_h^{-1}
///   Kb_{h+1} = (K_{h+1}^{-1} Kb_h - E_h Fb_h + Fb_h E_h) K_h
WordCombination derived_odd(const GenSymbol& g);

/// One instance of a defining relation, written as lhs - rhs.
struct Relation {
    std::string id;
    WordCombination residual;
};

/// All instances of the defining relations for rank n.
std::vector<Relation> relations(int n);

template <class Key>
using Action = std::function<SparseVec<Key>(const GenSymbol&, const SparseVec<Key>&)>;

/// Applies each word right to left through the action and sums.
template <class Key>
SparseVec<Key> evaluate(const WordCombination& w, const Action<Key>& act, const SparseVec<Key>& x) {
    SparseVec<Key> out;
    for (const auto& [word, c] : w) {
        SparseVec<Key> y = x;
        for (auto it = word.symbols.rbegin(); it != word.symbols.rend() && !y.is_zero(); ++it) y = act(*it, y);
        out.axpy(c, y);
    }
    return out;
}

template <class Key>
SparseVec<Key> relation_residual(const Relation& r, const Action<Key>& act, const SparseVec<Key>& x) {
    return evaluate(r.residual, act, x);
}

/// Lifts an action defined for power 1 to all powers: m-fold application,
/// divided by [m]! for E and F.
template <class Key>
SparseVec<Key> apply_with_powers(const std::function<SparseVec<Key>(const GenSymbol&, const SparseVec<Key>&)>& single,
                                 const GenSymbol& g, const SparseVec<Key>& x) {
    GenSymbol one = g;
    one.power = 1;
    SparseVec<Key> y = x;
    for (int k = 0; k < g.power && !y.is_zero(); ++k) y = single(one, y);
    if ((g.kind == GenKind::E || g.kind == GenKind::F) && g.power > 1) y *= RatScalar(1) / RatScalar(qfact(g.power));
    return y;
}

}  // namespace qqs
