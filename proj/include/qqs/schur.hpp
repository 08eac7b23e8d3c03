#pragma once

#include <vector>

#include "qqs/report.hpp"
#include "qqs/tensormod.hpp"

namespace qqs {

/// Action of a generator on the basis of T_v(n, r): column k holds
/// g . X^{[basis[k]]} in the divided basis.
struct GenMatrix {
    std::vector<SuperMatrix> basis;
    std::vector<TensorElement> columns;
};

GenMatrix gen_matrix(const GenSymbol& g, int n, int r);

/// 1_r = sum over compositions lambda of r of X^{[diag(lambda)]}.
TensorElement one_r(int n, int r);

/// Words W_A = m^{A',0} [K; co(A)] and their images on 1_r, with the
/// triangular inverse expressing each X^{[A]} through the W_B . 1_r.
struct WitnessFamily {
    int n = 0;
    int r = 0;
    std::vector<SuperMatrix> basis;  ///< enumerate(n, r)
    std::vector<WordCombination> words;
    std::vector<TensorElement> images;
    /// Coefficient of X^{[A]} in W_A . 1_r.
    std::vector<RatScalar> leading;
    /// inverse[a] = sum_b c_b e_b with X^{[basis[a]]} = sum_b c_b W_b . 1_r.
    std::vector<SparseVec<int>> inverse;

    int index_of(const SuperMatrix& a) const;
};

/// Evaluates every W_A . 1_r, checks that it equals g_A X^{[A]} plus terms
/// strictly prec-below A with the same column sums, g_A in +-v^Z, and
/// back-substitutes. VerificationError when triangularity fails.
WitnessFamily build_witness_family(int n, int r);

/// Rank over Q(v) of a list of vectors, by Gaussian elimination.
int exact_rank(const std::vector<TensorElement>& vectors);

/// Element of Q_v(n, r) held as its image u . 1_r together with a word
/// combination acting as u.
struct SchurElement {
    int n = 0;
    int r = 0;
    TensorElement canonical;
    WordCombination witness;

    friend bool operator==(const SchurElement& a, const SchurElement& b) {
        return a.n == b.n && a.r == b.r && a.canonical == b.canonical;
    }
};

/// psi_A: the element sending 1_r to X^{[A]}. Checks its witness.
SchurElement psi(const WitnessFamily& fam, const SuperMatrix& a);

SchurElement multiply(const SchurElement& u, const SchurElement& w);

/// The three annihilator families of T_v(n, r) and the vanishing of Kb_i on
/// vectors of weight zero at i.
Report ideal_check(int n, int r);

/// Every generator matrix entry lies in Z[v, v^{-1}].
Report integrality_check(int n, int r);

/// Dimension, triangularity, rank and psi checks for Q_v(n, r).
Report schur_verify(int n, int r);

}  // namespace qqs
