#pragma once

#include "schurcat/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schurcat {

/// Interned variable identifier.  Names are registered once per process;
/// ids are stable and cheap to compare.
using Var = int;

Var intern_var(const std::string& name);
std::string var_name(Var v);
/// A fresh variable with a unique generated name (prefix + counter).
Var fresh_var(const std::string& prefix);

/// Sparse exponent vector, kept sorted by variable id, no zero exponents.
struct Monomial {
    std::vector<std::pair<Var, int>> exps;

    int deg() const {
        int s = 0;
        for (auto& [v, e] : exps) s += e;
        return s;
    }
    int exp_of(Var v) const {
        for (auto& [w, e] : exps)
            if (w == v) return e;
        return 0;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    /// graded lexicographic order (total degree first, then lex on ids)
    bool operator<(const Monomial& o) const {
        int da = deg(), db = o.deg();
        if (da != db) return da < db;
        return exps < o.exps;
    }
    Monomial mul(const Monomial& o) const;
    std::string str() const;
};

/// Exact multivariate polynomial over Q with sparse support.
class MPoly {
public:
    MPoly() = default;
    MPoly(long c) { if (c != 0) terms_[Monomial{}] = rat(c); }
    MPoly(const Rat& c) { if (!schurcat::is_zero(c)) terms_[Monomial{}] = c; }

    static MPoly var(Var v, int e = 1) {
        MPoly p;
        if (e == 0) return MPoly(1);
        p.terms_[Monomial{{{v, e}}}] = Rat(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    int total_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.deg());
        return d;
    }
    int degree_in(Var v) const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.exp_of(v));
        return d;
    }
    bool depends_on(Var v) const { return degree_in(v) > 0; }
    /// true if every monomial has the same total degree (or p == 0)
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const Rat& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { a += b; return a; }
    friend MPoly operator-(MPoly a, const MPoly& b) { a -= b; return a; }
    friend MPoly operator-(const MPoly& a);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
    friend MPoly operator*(const Rat& c, const MPoly& a);
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// swap two variables
    MPoly swapped(Var x, Var y) const;
    /// substitute variable -> polynomial
    MPoly subst(Var x, const MPoly& value) const;
    /// substitute variable -> rational constant
    MPoly subst_rat(Var x, const Rat& value) const;
    /// coefficient of x^k, as a polynomial in the remaining variables
    MPoly coeff_of(Var x, int k) const;

    /// canonical text: graded-lex sorted monomials, descending
    std::string str() const;

private:
    std::map<Monomial, Rat> terms_;
};

/// Ordered alphabet of variables (one strand/edge of a diagram).
using Alphabet = std::vector<Var>;

Alphabet make_alphabet(const std::string& prefix, int size);

/// elementary symmetric polynomial e_k of an explicit alphabet
MPoly elem_sym(int k, const Alphabet& a);
/// complete homogeneous symmetric polynomial h_k
MPoly complete_sym(int k, const Alphabet& a);
/// Schur polynomial via the Jacobi-Trudi determinant det(h_{l_i+j-i})
MPoly schur_poly(const std::vector<int>& partition, const Alphabet& a);

/// divided difference (p - p|_{x<->y})/(x - y); division is always exact,
/// a nonzero remainder throws (it signals an internal bug).
MPoly divided_diff(const MPoly& p, Var x, Var y);

/// iterated operators d_{x_1 y} d_{x_2 y} ... (order = "alphabet_first"),
/// or d_{y x_1} d_{y x_2} ... (order = "var_first"); composition is applied
/// right-to-left as written, i.e. the last factor acts first.
enum class ChainOrder { AlphabetFirst, VarFirst };
MPoly divided_diff_chain(const MPoly& p, const Alphabet& a, Var y, ChainOrder ord);

/// exact division of p by (x - y); remainder must vanish
MPoly divide_by_linear_diff(const MPoly& p, Var x, Var y);

} // namespace schurcat

#include "schurcat/report.hpp"

namespace schurcat {

/// the divided-difference and elementary/complete symmetric identities used
/// throughout the polynomial calculus, verified exactly for alphabet sizes
/// up to max_size
Report polysym_identity_oracles(int max_size = 5);

} // namespace schurcat
