#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "qqs/errors.hpp"

namespace qqs {

/// Laurent polynomial in v with rational coefficients, stored sparsely.
class LaurentPoly {
public:
    using Terms = std::map<int, mpq_class>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)

    /// c * v^e
    static LaurentPoly monomial(int e, const mpq_class& c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int min_exp() const;
    int max_exp() const;
    mpq_class coeff(int e) const;
    const Terms& terms() const { return terms_; }

    /// Multiply by v^k.
    LaurentPoly shifted(int k) const;
    /// Substitute v -> v^{-1}.
    LaurentPoly bar() const;
    mpq_class eval_at_one() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const mpq_class& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(int e, const mpq_class& c);
    Terms terms_;
};

/// Element of Q(v) in canonical form num/den.
///
/// num is a Laurent polynomial, den is a monic polynomial with nonzero
/// constant term, and gcd(num, den) = 1. Equality is therefore structural.
class RatScalar {
public:
    RatScalar() = default;
    RatScalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    RatScalar(const mpq_class& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    RatScalar(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
    RatScalar(const LaurentPoly& num, const LaurentPoly& den);

    /// v^k
    static RatScalar vpow(int k) { return RatScalar(LaurentPoly::monomial(k)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_constant(); }
    /// True for +-v^k.
    bool is_signed_vpow() const;

    RatScalar inverse() const;
    RatScalar bar() const;
    RatScalar pow(int k) const;

    RatScalar& operator+=(const RatScalar& o);
    RatScalar& operator-=(const RatScalar& o);
    RatScalar& operator*=(const RatScalar& o);
    RatScalar& operator/=(const RatScalar& o);

    friend RatScalar operator+(RatScalar a, const RatScalar& b) { return a += b; }
    friend RatScalar operator-(RatScalar a, const RatScalar& b) { return a -= b; }
    friend RatScalar operator*(RatScalar a, const RatScalar& b) { return a *= b; }
    friend RatScalar operator/(RatScalar a, const RatScalar& b) { return a /= b; }
    RatScalar operator-() const;

    friend bool operator==(const RatScalar& a, const RatScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void canonicalize();
    LaurentPoly num_;
    LaurentPoly den_{1};
};

/// Quantum integer [c] = (v^c - v^{-c}) / (v - v^{-1}); defined for all integers c.
LaurentPoly qint(int c);
/// [m]! for m >= 0.
LaurentPoly qfact(int m);
/// Gaussian binomial [c over m] = [c][c-1]...[c-m+1] / [m]!, m >= 0.
LaurentPoly qbinom(int c, int m);
/// prod_{s=1..t} (v^{lam+c-s+1} - v^{-lam-c+s-1}) / (v^s - v^{-s}).
LaurentPoly qbinom_weight(int lam, int c, int t);

/// (v - v^{-1}) / (v + v^{-1}), the scalar by which an odd square collapses.
RatScalar odd_square_coeff();

/// Value at v = 1; throws EvaluationError at a pole.
mpq_class specialize_v1(const RatScalar& x);

std::string to_string(const LaurentPoly& p);
std::string to_string(const RatScalar& x);

/// Parses expressions in q or v with + - * / ^ and parentheses.
RatScalar parse_scalar(const std::string& text);

}  // namespace qqs
