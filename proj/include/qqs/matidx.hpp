#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qqs {

/// Exponent vector of a monomial X_1^{a_1}..X_n^{a_n} X_1bar^{b_1}..X_nbar^{b_n}.
/// Reduced when every odd exponent is 0 or 1.
struct SuperIndex {
    std::vector<int> even;
    std::vector<int> odd;

    SuperIndex() = default;
    explicit SuperIndex(int n) : even(n, 0), odd(n, 0) {}
    SuperIndex(std::vector<int> e, std::vector<int> o) : even(std::move(e)), odd(std::move(o)) {}

    int n() const { return static_cast<int>(even.size()); }
    int degree() const;
    int parity() const;
    bool reduced() const;

    auto operator<=>(const SuperIndex&) const = default;
};

std::string to_string(const SuperIndex& a);

/// Pair (A^0 | A^1) of n x n nonnegative integer matrices, row-major.
/// Accessors are 1-based to match the usual (i, j) indexing.
struct SuperMatrix {
    int n = 0;
    std::vector<int> a0;
    std::vector<int> a1;

    SuperMatrix() = default;
    explicit SuperMatrix(int n_) : n(n_), a0(n_ * n_, 0), a1(n_ * n_, 0) {}

    int& e(int i, int j) { return a0[(i - 1) * n + (j - 1)]; }
    int e(int i, int j) const { return a0[(i - 1) * n + (j - 1)]; }
    int& o(int i, int j) { return a1[(i - 1) * n + (j - 1)]; }
    int o(int i, int j) const { return a1[(i - 1) * n + (j - 1)]; }

    int degree() const;
    int parity() const;
    /// All odd entries are 0 or 1.
    bool reduced() const;
    /// Even diagonal is zero.
    bool primed() const;
    bool nonnegative() const;

    /// Column j as an exponent vector (even part from A^0, odd part from A^1).
    SuperIndex column(int j) const;
    void set_column(int j, const SuperIndex& c);

    auto operator<=>(const SuperMatrix&) const = default;
};

std::string to_string(const SuperMatrix& a);

/// Row sums ro(A)_i = sum_j a0_ij + a1_ij.
std::vector<int> ro(const SuperMatrix& a);
/// Column sums co(A)_j = sum_i a0_ij + a1_ij.
std::vector<int> co(const SuperMatrix& a);

/// Off-diagonal-and-odd entries listed in the order used by the ordering prec.
/// Length 2n^2 - n; the even diagonal does not appear.
std::vector<int> vec(const SuperMatrix& a);

enum class Cmp { Less, Equal, Greater };

struct PrecResult {
    Cmp cmp = Cmp::Equal;
    /// 1-based position of the first differing vec entry, 0 when equal.
    int position = 0;
};

/// Lexicographic comparison of vec(a) against vec(b).
PrecResult prec(const SuperMatrix& a, const SuperMatrix& b);

/// Total order: prec, ties broken by the even diagonal read lexicographically.
/// Returns -1, 0 or 1.
int total_compare(const SuperMatrix& a, const SuperMatrix& b);

/// All reduced matrices of degree r (with zero even diagonal when primed),
/// sorted ascending by total_compare.
std::vector<SuperMatrix> enumerate(int n, int r, bool primed = false);

/// All reduced primed matrices of degree <= maxdeg, ascending by total_compare.
std::vector<SuperMatrix> enumerate_primed_upto(int n, int maxdeg);

struct Stripped {
    SuperMatrix primed;
    std::vector<int> diag;
};

/// Splits A into A' (even diagonal cleared) and its even diagonal.
Stripped strip_diag(const SuperMatrix& a);

/// A + diag(lambda) on the even part.
SuperMatrix add_diag(const SuperMatrix& a, const std::vector<int>& lambda);

/// Diagonal matrix (diag(lambda) | 0).
SuperMatrix diag_matrix(const std::vector<int>& lambda);

}  // namespace qqs
