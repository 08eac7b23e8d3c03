#pragma once

#include <compare>
#include <functional>
#include <string>

#include "qqs/qpoly.hpp"
#include "qqs/report.hpp"

namespace qqs {

/// Generator kinds of U_v(q(n)). Kb, Eb, Fb are the odd generators.
enum class GenKind { K, Kinv, E, F, Kb, Eb, Fb };

/// A generator with an index and a power.
///
/// For E and F the power is a divided power E^{(m)}; for K and Kinv it is an
/// ordinary power. Odd generators only take power 1.
struct GenSymbol {
    GenKind kind = GenKind::K;
    int index = 1;
    int power = 1;

    bool odd() const { return kind == GenKind::Kb || kind == GenKind::Eb || kind == GenKind::Fb; }

    auto operator<=>(const GenSymbol&) const = default;
};

/// "K1", "K1^-1", "K2^3", "E1^(2)", "Kb1", "Eb2", "Fb1".
std::string to_string(const GenSymbol& g);
GenSymbol parse_gen(const std::string& text);

/// Linear operator on A_v(n) given by its values on basis monomials.
struct LinOp {
    std::function<QPolyElement(const SuperIndex&)> on_basis;
    int parity = 0;

    QPolyElement operator()(const SuperIndex& a) const { return on_basis(a); }
    QPolyElement operator()(const QPolyElement& x) const;
};

/// f after g.
LinOp operator*(const LinOp& f, const LinOp& g);
LinOp operator+(const LinOp& f, const LinOp& g);
LinOp operator-(const LinOp& f, const LinOp& g);
LinOp operator*(const RatScalar& s, const LinOp& f);

LinOp identity_op();
/// Projection onto the span of monomials with odd exponent b_i equal to value.
LinOp odd_projection(int i, int value);

// Index convention: i in 1..n is X_i, i in n+1..2n is X_{i-n}bar.

/// Quantum partial derivative.
LinOp partial(int n, int i);
/// X^a -> [a_i + j] X^{a - e_i} for even i in 1..n; zero when a_i = 0.
LinOp partial_shift(int i, int j);
/// Left multiplication by the generator.
LinOp chi(int n, int i);
/// X^a -> v^{sign * a_i}.
LinOp delta(int n, int i, int sign);
/// X^a -> (-1)^{b_i}, i in 1..n.
LinOp sgn_bar(int i);

/// Operator image of a generator (power handled by composition).
LinOp gen_op(int n, const GenSymbol& g);

/// Closed-form action of a generator on A_v(n).
QPolyElement act_closed(const GenSymbol& g, const QPolyElement& x);

/// Commutation identities among partial, chi, delta and sgn_bar on all monomials
/// of degree <= maxdeg.
Report verify_opecom(int n, int maxdeg);

}  // namespace qqs
