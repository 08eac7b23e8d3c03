#pragma once

#include <string>
#include <vector>

#include "qqs/tensormod.hpp"

namespace qqs {

/// Symbol A(j): A primed, j in Z^n.
struct VKey {
    SuperMatrix a;
    std::vector<int> j;

    auto operator<=>(const VKey&) const = default;
};

/// Element of V_v(n), a finite combination of the formal series
/// A(j) = sum_lambda v^{lambda.j} X^{[A + lambda]}.
using VElement = SparseVec<VKey>;

/// O(j) = 0(j).
VElement zero_symbol(int n, const std::vector<int>& j);

/// c * A(j), or zero when A has a negative entry.
VElement symbol(const SuperMatrix& a, const std::vector<int>& j, const RatScalar& c = RatScalar(1));

/// Scalar in the diagonal rewrite rule for an odd square at (i, i).
enum class DiagonalConstant {
    /// v^{-2 j_i} / ((v - v^{-1})(v + v^{-1})^2); agrees with the series.
    Series,
    /// v^{-2 j_i - 1} / ((v - v^{-1})(v + v^{-1})^2).
    Shifted,
};

/// Rewrites symbols with an odd entry 2 into reduced symbols.
VElement reduce_close(const VElement& x, DiagonalConstant dc = DiagonalConstant::Series);

/// Action of K_i^{+-m}, E_h^{(m)}, F_h^{(m)} and Kb_1; the result is reduced.
VElement act(const GenSymbol& g, const VElement& x, DiagonalConstant dc = DiagonalConstant::Series);

/// Action of any generator; other odd generators go through derived_odd.
VElement act_derived(const GenSymbol& g, const VElement& x);
Action<VKey> vmod_action();

/// Sum over terms and lambda of v^{lambda.j} X^{[A + lambda]} with total degree <= rmax.
TensorElement truncate(const VElement& x, int rmax);

struct LeadingTerm {
    SuperMatrix a;
    std::vector<int> j;
    RatScalar coeff;
};

/// Term with prec-maximal matrix; ties by total_compare, then j.
/// ContractError on zero input.
LeadingTerm leading_term(const VElement& x);

/// K^j m^{A,0} applied to O(0).
VElement monomial_image(const SuperMatrix& a, const std::vector<int>& j);

std::string to_string(const VKey& k);
std::string to_string(const VElement& x);

}  // namespace qqs
