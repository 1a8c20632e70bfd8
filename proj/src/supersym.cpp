#include "schurcat/supersym.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schurcat {

Partition normalize_partition(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1]) throw std::invalid_argument("not a partition");
    return p;
}

int partition_weight(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition conjugate_partition(const Partition& p0) {
    Partition p = normalize_partition(p0);
    if (p.empty()) return {};
    Partition c(p[0], 0);
    for (int j = 0; j < p[0]; ++j)
        for (int x : p)
            if (x > j) c[j]++;
    return c;
}

bool in_gamma(const Partition& alpha0, int a, int b) {
    Partition alpha = normalize_partition(alpha0);
    for (size_t j = 0; j < alpha.size(); ++j)
        if ((int)j + 1 > a && alpha[j] > b) return false;
    return true;
}

MPoly super_elem(int j, const SuperPair& p) {
    if (j < 0) return MPoly();
    MPoly acc;
    for (int s = 0; s <= j; ++s) {
        if (s > p.b()) break;  // eps_s(y) = 0 for s > b
        MPoly t = complete_sym(j - s, p.X) * elem_sym(s, p.Y);
        if (s % 2 == 1) t = -t;
        acc += t;
    }
    return acc;
}

MPoly super_schur(const Partition& alpha0, const SuperPair& p) {
    Partition alpha = normalize_partition(alpha0);
    int m = (int)alpha.size();
    if (m == 0) return MPoly(1);
    std::vector<std::vector<MPoly>> mat(m, std::vector<MPoly>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mat[i][j] = super_elem(alpha[i] + j - i, p);
    std::function<MPoly(std::vector<int>&, int)> det =
        [&](std::vector<int>& rows, int col) -> MPoly {
        if (col == m) return MPoly(1);
        MPoly acc;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (mat[rows[r]][col].is_zero()) continue;
            std::vector<int> rest;
            for (size_t s = 0; s < rows.size(); ++s)
                if (s != r) rest.push_back(rows[s]);
            MPoly term = mat[rows[r]][col] * det(rest, col + 1);
            if (r % 2 == 1) term = -term;
            acc += term;
        }
        return acc;
    };
    std::vector<int> rows(m);
    for (int i = 0; i < m; ++i) rows[i] = i;
    return det(rows, 0);
}

std::vector<Partition> partitions_of(int w, int max_len) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (max_len >= 0 && (int)cur.size() >= max_len) return;
        for (int v = std::min(rem, maxpart); v >= 1; --v) {
            cur.push_back(v);
            rec(rem - v, v);
            cur.pop_back();
        }
    };
    rec(w, w);
    return out;
}

std::map<Partition, long> lr_expand(const Partition& alpha, const Partition& beta,
                                    const SuperPair& p) {
    MPoly prod = super_schur(alpha, p) * super_schur(beta, p);
    int w = partition_weight(normalize_partition(alpha)) +
            partition_weight(normalize_partition(beta));
    std::vector<Partition> basis;
    for (auto& g : partitions_of(w))
        if (in_gamma(g, p.a(), p.b())) basis.push_back(g);

    // Solve prod = sum c_g pi_g by exact Gaussian elimination on monomial
    // coordinates.
    std::vector<MPoly> cols;
    for (auto& g : basis) cols.push_back(super_schur(g, p));

    std::vector<Monomial> mons;
    {
        std::map<Monomial, int> seen;
        auto collect = [&](const MPoly& f) {
            for (auto& [m, c] : f.terms())
                if (!seen.count(m)) {
                    seen[m] = (int)mons.size();
                    mons.push_back(m);
                }
        };
        for (auto& c : cols) collect(c);
        collect(prod);
    }
    size_t R = mons.size(), C = basis.size();
    std::map<Monomial, int> mon_index;
    for (size_t i = 0; i < R; ++i) mon_index[mons[i]] = (int)i;
    std::vector<std::vector<Rat>> A(R, std::vector<Rat>(C + 1, Rat(0)));
    for (size_t j = 0; j < C; ++j)
        for (auto& [m, c] : cols[j].terms()) A[mon_index[m]][j] = c;
    for (auto& [m, c] : prod.terms()) A[mon_index[m]][C] = c;

    // forward elimination
    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t piv = row;
        while (piv < R && is_zero(A[piv][col])) ++piv;
        if (piv == R) continue;
        std::swap(A[piv], A[row]);
        Rat inv = Rat(1) / A[row][col];
        for (size_t j = col; j <= C; ++j) A[row][j] *= inv;
        for (size_t i = 0; i < R; ++i) {
            if (i == row || is_zero(A[i][col])) continue;
            Rat f = A[i][col];
            for (size_t j = col; j <= C; ++j) A[i][j] -= f * A[row][j];
        }
        pivot_col_of_row.push_back((int)col);
        ++row;
    }
    // consistency: rows beyond rank must have zero rhs
    for (size_t i = row; i < R; ++i)
        if (!is_zero(A[i][C]))
            throw std::runtime_error("lr_expand: inconsistent system, increase alphabet sizes");
    // uniqueness: every column must be a pivot (basis property)
    if (pivot_col_of_row.size() != C)
        throw std::runtime_error("lr_expand: pi basis not independent at this size");

    std::map<Partition, long> out;
    for (size_t r2 = 0; r2 < pivot_col_of_row.size(); ++r2) {
        Rat c = A[r2][C];
        if (is_zero(c)) continue;
        if (c.get_den() != 1)
            throw std::runtime_error("lr_expand: non-integer coefficient");
        out[basis[pivot_col_of_row[r2]]] = (long)c.get_num().get_si();
    }
    return out;
}

namespace {
// Count LR skew tableaux of shape gamma/alpha with content beta whose reverse
// reading word is a lattice word.
long lr_count_rec(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    int rows = (int)gamma.size();
    std::vector<int> inner(rows, 0);
    for (size_t i = 0; i < alpha.size(); ++i) inner[i] = alpha[i];
    // cells listed row by row, right to left (reverse reading order)
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = gamma[r] - 1; c >= inner[r]; --c) cells.push_back({r, c});
    // We fill in reading order: row 0 right-to-left, then row 1, ...
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(std::max(0, gamma[r]), 0);
    int k = (int)beta.size();
    std::vector<int> used(k + 1, 0);

    std::function<long(size_t)> rec = [&](size_t idx) -> long {
        if (idx == cells.size()) {
            for (int v = 1; v <= k; ++v)
                if (used[v] != beta[v - 1]) return 0;
            return 1;
        }
        auto [r, c] = cells[idx];
        long acc = 0;
        for (int v = 1; v <= k; ++v) {
            if (used[v] >= beta[v - 1]) continue;
            // rows weakly increase left to right; the right neighbor is
            // already filled in reverse reading order
            if (c + 1 < gamma[r] && fill[r][c + 1] < v) continue;
            // columns strictly increase downward
            if (r > 0 && c >= inner[r - 1] && c < gamma[r - 1] && fill[r - 1][c] >= v)
                continue;
            // lattice word: every prefix has #v <= #(v-1)
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;
            used[v]++;
            fill[r][c] = v;
            acc += rec(idx + 1);
            fill[r][c] = 0;
            used[v]--;
        }
        return acc;
    };
    return rec(0);
}
} // namespace

long lr_tableau(const Partition& alpha0, const Partition& beta0, const Partition& gamma0) {
    Partition alpha = normalize_partition(alpha0);
    Partition beta = normalize_partition(beta0);
    Partition gamma = normalize_partition(gamma0);
    if (partition_weight(gamma) != partition_weight(alpha) + partition_weight(beta)) return 0;
    if (gamma.size() < alpha.size()) return 0;
    for (size_t i = 0; i < alpha.size(); ++i)
        if (gamma[i] < alpha[i]) return 0;
    return lr_count_rec(alpha, beta, gamma);
}

bool conjugate_duality_check(const Partition& alpha, const SuperPair& p) {
    SuperPair flipped{p.Y, p.X};
    MPoly lhs = super_schur(alpha, p);
    MPoly rhs = super_schur(conjugate_partition(alpha), flipped);
    if (partition_weight(normalize_partition(alpha)) % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

bool is_supersymmetric(const MPoly& f, const SuperPair& p) {
    if (p.a() == 0 || p.b() == 0) return true;
    Var t = fresh_var("t");
    MPoly g = f.subst(p.X[0], MPoly::var(t)).subst(p.Y[0], MPoly::var(t));
    // independent of t <=> degree in t is zero
    return !g.depends_on(t);
}

} // namespace schurcat
