#pragma once

#include <map>

#include "qqs/coeff.hpp"

namespace qqs {

/// Finite Q(v)-linear combination of basis keys. Zero coefficients are never stored.
template <class Key>
class SparseVec {
public:
    using Map = std::map<Key, RatScalar>;
    using const_iterator = typename Map::const_iterator;

    SparseVec() = default;

    static SparseVec basis(const Key& k, const RatScalar& c = RatScalar(1)) {
        SparseVec v;
        v.add(k, c);
        return v;
    }

    void add(const Key& k, const RatScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RatScalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? RatScalar() : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    SparseVec& operator+=(const SparseVec& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    SparseVec& operator-=(const SparseVec& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    SparseVec& operator*=(const RatScalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    /// this += s * o
    void axpy(const RatScalar& s, const SparseVec& o) {
        if (s.is_zero()) return;
        for (const auto& [k, c] : o.terms_) add(k, s * c);
    }

    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
    friend SparseVec operator*(const RatScalar& s, SparseVec a) { return a *= s; }
    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

}  // namespace qqs
