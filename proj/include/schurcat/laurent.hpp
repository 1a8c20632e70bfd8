#pragma once

#include "schurcat/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace schurcat {

/// Laurent polynomial in q with rational coefficients, the scalar ring for
/// all algebra-level computation.  Zero coefficients are never stored.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(long c) { if (c != 0) coeffs_[0] = rat(c); }
    LaurentQ(const Rat& c) { if (!schurcat::is_zero(c)) coeffs_[0] = c; }

    static LaurentQ q_power(int k, const Rat& c = Rat(1)) {
        LaurentQ p;
        if (!schurcat::is_zero(c)) p.coeffs_[k] = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    const std::map<int, Rat>& coeffs() const { return coeffs_; }

    Rat coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    LaurentQ& operator+=(const LaurentQ& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k, c);
        return *this;
    }
    LaurentQ& operator-=(const LaurentQ& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
        return *this;
    }

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { a += b; return a; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { a -= b; return a; }
    friend LaurentQ operator-(const LaurentQ& a) {
        LaurentQ r;
        for (const auto& [k, c] : a.coeffs_) r.coeffs_[k] = -c;
        return r;
    }

    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
        LaurentQ r;
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_)
                r.add_term(ka + kb, ca * cb);
        return r;
    }
    LaurentQ& operator*=(const LaurentQ& o) { *this = *this * o; return *this; }

    friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentQ& a, const LaurentQ& b) { return !(a == b); }

    /// bar involution, q -> q^{-1}
    LaurentQ bar() const {
        LaurentQ r;
        for (const auto& [k, c] : coeffs_) r.coeffs_[-k] = c;
        return r;
    }

    /// Specialize q to an exact rational value.
    Rat eval_at(const Rat& q) const {
        Rat acc(0);
        for (const auto& [k, c] : coeffs_) {
            Rat p(1);
            Rat base = k >= 0 ? q : Rat(1) / q;
            for (int j = 0; j < (k >= 0 ? k : -k); ++j) p *= base;
            acc += c * p;
        }
        return acc;
    }

    /// Canonical text form: sum of c*q^k terms, descending exponents.
    std::string str() const;

private:
    void add_term(int k, const Rat& c) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            if (!schurcat::is_zero(c)) coeffs_[k] = c;
        } else {
            it->second += c;
            if (schurcat::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    std::map<int, Rat> coeffs_;  // exponent -> nonzero coefficient
};

/// Balanced q-integer [a] = (q^a - q^{-a})/(q - q^{-1}).
LaurentQ qint(int a);

/// q-factorial [m]! = [m][m-1]...[1].
LaurentQ qfact(int m);

/// q-binomial [m choose k] = [m]!/([k]![m-k]!), exact Laurent division.
LaurentQ qbinom(int m, int k);

} // namespace schurcat
