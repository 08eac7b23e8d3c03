#include "qqs/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace qqs {

namespace {

// Dense polynomial, index = exponent, no trailing zeros.
using Dense = std::vector<mpq_class>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Caller guarantees min_exp() >= shift so all exponents land at >= 0.
Dense to_dense(const LaurentPoly& p, int shift) {
    Dense d;
    if (p.is_zero()) return d;
    d.assign(p.max_exp() - shift + 1, 0);
    for (const auto& [e, c] : p.terms()) d[e - shift] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
    LaurentPoly out;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) out += LaurentPoly::monomial(static_cast<int>(i) + shift, d[i]);
    return out;
}

// Returns quotient, leaves remainder in a.
Dense divmod(Dense& a, const Dense& b) {
    Dense q;
    if (a.size() < b.size()) return q;
    q.assign(a.size() - b.size() + 1, 0);
    const mpq_class& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t k = a.size() - b.size();
        mpq_class f = a.back() / lb;
        q[k] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

Dense monic_gcd(Dense a, Dense b) {
    while (!b.empty()) {
        divmod(a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        mpq_class l = a.back();
        for (auto& c : a) c /= l;
    }
    return a;
}

// Exact division of Laurent polynomials; InternalError on a remainder.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return a;
    int sa = a.min_exp();
    int sb = b.min_exp();
    Dense da = to_dense(a, sa);
    Dense q = divmod(da, to_dense(b, sb));
    if (!da.empty()) throw InternalError("inexact division of Laurent polynomials");
    return from_dense(q, sa - sb);
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
    if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int e, const mpq_class& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw ContractError("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw ContractError("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

mpq_class LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
    return out;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

mpq_class LaurentPoly::eval_at_one() const {
    mpq_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::add_term(int e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

// ---------------------------------------------------------------------------

RatScalar::RatScalar(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
}

void RatScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    // Move the monomial part of den into num.
    int ds = den_.min_exp();
    if (ds != 0) {
        num_ = num_.shifted(-ds);
        den_ = den_.shifted(-ds);
    }
    if (den_.is_constant()) {
        mpq_class c = den_.coeff(0);
        if (c != 1) {
            num_ *= mpq_class(1 / c);
            den_ = LaurentPoly(1);
        }
        return;
    }
    int ns = num_.min_exp();
    Dense dn = to_dense(num_, ns);
    Dense dd = to_dense(den_, 0);
    Dense g = monic_gcd(dn, dd);
    if (g.size() > 1) {
        Dense r1 = dn;
        Dense qn = divmod(r1, g);
        Dense r2 = dd;
        Dense qd = divmod(r2, g);
        dn = std::move(qn);
        dd = std::move(qd);
    }
    mpq_class lead = dd.back();
    if (lead != 1) {
        for (auto& c : dn) c /= lead;
        for (auto& c : dd) c /= lead;
    }
    num_ = from_dense(dn, ns);
    den_ = from_dense(dd, 0);
}

bool RatScalar::is_signed_vpow() const {
    if (!is_laurent() || num_.terms().size() != 1) return false;
    const mpq_class& c = num_.terms().begin()->second;
    return c == 1 || c == -1;
}

RatScalar RatScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatScalar(den_, num_);
}

RatScalar RatScalar::bar() const {
    if (is_laurent()) return RatScalar(num_.bar());
    return RatScalar(num_.bar(), den_.bar());
}

RatScalar RatScalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatScalar out(1);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
}

RatScalar& RatScalar::operator+=(const RatScalar& o) {
    if (is_laurent() && o.is_laurent()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

RatScalar& RatScalar::operator-=(const RatScalar& o) {
    return *this += -o;
}

RatScalar& RatScalar::operator*=(const RatScalar& o) {
    if (is_laurent() && o.is_laurent()) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

RatScalar& RatScalar::operator/=(const RatScalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

RatScalar RatScalar::operator-() const {
    RatScalar out = *this;
    out.num_ = -out.num_;
    return out;
}

// ---------------------------------------------------------------------------

LaurentPoly qint(int c) {
    if (c == 0) return LaurentPoly();
    if (c < 0) return -qint(-c);
    LaurentPoly out;
    for (int k = 0; k < c; ++k) out += LaurentPoly::monomial(c - 1 - 2 * k);
    return out;
}

LaurentPoly qfact(int m) {
    if (m < 0) throw ContractError("qfact of negative integer");
    LaurentPoly out(1);
    for (int k = 2; k <= m; ++k) out *= qint(k);
    return out;
}

LaurentPoly qbinom(int c, int m) {
    if (m < 0) throw ContractError("qbinom with negative lower index");
    LaurentPoly num(1);
    for (int k = 0; k < m; ++k) num *= qint(c - k);
    return exact_div(num, qfact(m));
}

LaurentPoly qbinom_weight(int lam, int c, int t) {
    if (t < 0) throw ContractError("qbinom_weight with negative t");
    LaurentPoly num(1);
    LaurentPoly den(1);
    for (int s = 1; s <= t; ++s) {
        int e = lam + c - s + 1;
        num *= LaurentPoly::monomial(e) - LaurentPoly::monomial(-e);
        den *= LaurentPoly::monomial(s) - LaurentPoly::monomial(-s);
    }
    return exact_div(num, den);
}

RatScalar odd_square_coeff() {
    static const RatScalar c(LaurentPoly::monomial(1) - LaurentPoly::monomial(-1),
                             LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
    return c;
}

mpq_class specialize_v1(const RatScalar& x) {
    mpq_class d = x.den().eval_at_one();
    if (d == 0) throw EvaluationError("pole at v = 1: " + to_string(x));
    return x.num().eval_at_one() / d;
}

// ---------------------------------------------------------------------------

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        int e = it->first;
        mpq_class c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (e == 0) {
            out += c.get_str();
            continue;
        }
        if (c != 1) out += c.get_str() + "*";
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string to_string(const RatScalar& x) {
    if (x.is_laurent()) return to_string(x.num());
    return "(" + to_string(x.num()) + ")/(" + to_string(x.den()) + ")";
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    RatScalar run() {
        RatScalar x = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return x;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatScalar expr() {
        RatScalar x = term();
        for (;;) {
            if (eat('+'))
                x += term();
            else if (eat('-'))
                x -= term();
            else
                return x;
        }
    }

    RatScalar term() {
        RatScalar x = unary();
        for (;;) {
            if (eat('*'))
                x *= unary();
            else if (eat('/'))
                x /= unary();
            else
                return x;
        }
    }

    RatScalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RatScalar power() {
        RatScalar base = atom();
        if (!eat('^')) return base;
        int sign = 1;
        bool paren = eat('(');
        if (eat('-')) sign = -1;
        skip();
        int e = integer();
        if (paren && !eat(')')) fail("expected ')'");
        return base.pow(sign * e);
    }

    int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    RatScalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatScalar x = expr();
            if (!eat(')')) fail("expected ')'");
            return x;
        }
        if (c == 'q' || c == 'v') {
            ++pos_;
            return RatScalar::vpow(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatScalar(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
        }
        fail("unexpected character");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatScalar parse_scalar(const std::string& text) {
    return ScalarParser(text).run();
}

}  // namespace qqs
