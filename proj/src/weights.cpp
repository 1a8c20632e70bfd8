#include "schurcat/weights.hpp"

#include <algorithm>
#include <functional>

namespace schurcat {

std::optional<GlWeight> phi(const SlWeight& mu, int n, int d) {
    // lambda_i - lambda_{i+1} = mu_i and sum lambda_i = d.  Writing
    // everything in terms of lambda_n: lambda_i = lambda_n + s_i with
    // s_i = mu_i + ... + mu_{n-1}; the sum condition gives
    // n*lambda_n = d - sum s_i, integral or no solution.
    std::vector<int> s(n, 0);
    for (int i = n - 2; i >= 0; --i) s[i] = s[i + 1] + mu[i];
    int total = 0;
    for (int i = 0; i < n; ++i) total += s[i];
    int num = d - total;
    if (num % n != 0) return std::nullopt;
    int ln = num / n;
    GlWeight w(n);
    for (int i = 0; i < n; ++i) w[i] = ln + s[i];
    return w;
}

std::vector<GlWeight> enumerate_lambda(int n, int d) {
    std::vector<GlWeight> out;
    GlWeight cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    if (n >= 1) rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GlWeight> enumerate_dominant(int n, int d) {
    std::vector<GlWeight> out;
    for (const auto& w : enumerate_lambda(n, d)) {
        bool dom = true;
        for (int i = 0; i + 1 < n; ++i)
            if (w[i] < w[i + 1]) { dom = false; break; }
        if (dom) out.push_back(w);
    }
    return out;
}

long ssyt_count(const GlWeight& shape, int n) {
    // Rows weakly increase, columns strictly increase; entries in 1..n.
    std::vector<int> rows;
    for (int r : shape)
        if (r > 0) rows.push_back(r);
    if (rows.empty()) return 1;
    // Fill cells row by row, left to right.
    std::vector<std::vector<int>> t(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) t[r].assign(rows[r], 0);
    std::function<long(size_t, int)> rec = [&](size_t r, int c) -> long {
        if (r == rows.size()) return 1;
        size_t nr = r;
        int nc = c + 1;
        if (nc >= rows[r]) { nr = r + 1; nc = 0; }
        int lo = 1, hi = n;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        long acc = 0;
        for (int v = lo; v <= hi; ++v) {
            t[r][c] = v;
            acc += rec(nr, nc);
        }
        return acc;
    };
    return rec(0, 0);
}

long binom_long(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

} // namespace schurcat
