#pragma once

#include <optional>
#include <vector>

namespace schurcat {

/// gl_n weight: a vector of n integers.  Membership in Lambda(n,d) means
/// all entries >= 0 and sum d.
using GlWeight = std::vector<int>;

/// sl_n weight: a vector of n-1 integers.
using SlWeight = std::vector<int>;

inline int weight_sum(const GlWeight& w) {
    int s = 0;
    for (int x : w) s += x;
    return s;
}

inline bool in_lambda(const GlWeight& w, int n, int d) {
    if ((int)w.size() != n) return false;
    int s = 0;
    for (int x : w) {
        if (x < 0) return false;
        s += x;
    }
    return s == d;
}

/// bar(lambda)_j = lambda_j - lambda_{j+1}
inline SlWeight bar(const GlWeight& w) {
    SlWeight m(w.size() - 1);
    for (size_t j = 0; j + 1 < w.size(); ++j) m[j] = w[j] - w[j + 1];
    return m;
}

/// lambda_bar_i for a single color i (1-based).
inline int bar_entry(const GlWeight& w, int i) { return w[i - 1] - w[i]; }

/// phi_{n,d}: the unique gl-weight with bar(lambda) = mu and sum d, or
/// nullopt when no integral solution exists.
std::optional<GlWeight> phi(const SlWeight& mu, int n, int d);

/// All of Lambda(n,d), in lexicographic order (the total order used for
/// the ideal [mu > lambda]).
std::vector<GlWeight> enumerate_lambda(int n, int d);

/// The dominant weights Lambda^+(n,d).
std::vector<GlWeight> enumerate_dominant(int n, int d);

/// lambda +- alpha_i, colors 1-based.
inline GlWeight shift_weight(GlWeight w, int i, int sign) {
    w[i - 1] += sign;
    w[i] -= sign;
    return w;
}

/// Cartan pairing on colors: i.i = 2, i.(i+-1) = -1, 0 otherwise.
inline int cartan(int i, int j) {
    int d = i > j ? i - j : j - i;
    if (d == 0) return 2;
    if (d == 1) return -1;
    return 0;
}

/// Partial sums k_i = lambda_1 + ... + lambda_i (k_0 = 0), 0-based index i.
inline int partial_sum(const GlWeight& w, int i) {
    int s = 0;
    for (int j = 0; j < i; ++j) s += w[j];
    return s;
}

/// lexicographic comparison (mu > lambda used in Lemma-of-Weyl checks)
inline bool lex_less(const GlWeight& a, const GlWeight& b) { return a < b; }

/// Number of semistandard Young tableaux of shape lambda with entries <= n,
/// by direct enumeration.  Independent oracle for Weyl module dimensions.
long ssyt_count(const GlWeight& shape, int n);

/// binom(n,k) as a long (small arguments only).
long binom_long(int n, int k);

} // namespace schurcat
