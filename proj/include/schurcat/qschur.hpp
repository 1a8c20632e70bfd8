#pragma once

#include "schurcat/laurent.hpp"
#include "schurcat/weights.hpp"
#include "schurcat/report.hpp"

#include <map>
#include <vector>

namespace schurcat {

/// Basis of V^{tensor d} for V the natural n-dimensional representation:
/// all sequences in {1..n}^d, grouped into weight (content) spaces.
struct TensorBasis {
    int n = 0, d = 0;
    std::vector<std::vector<int>> seqs;             // all sequences, fixed order
    std::map<std::vector<int>, int> index_of;       // sequence -> position
    std::map<GlWeight, std::vector<int>> blocks;    // weight -> sequence indices

    TensorBasis(int n_, int d_);
    GlWeight content(const std::vector<int>& s) const;
};

using Mat = std::vector<std::vector<LaurentQ>>;  // dense, row major

/// Block matrix over LaurentQ indexed by (target weight, source weight).
/// Only blocks with both weights in Lambda(n,d) are stored; zero blocks are
/// dropped.
class BlockMatrix {
public:
    BlockMatrix() = default;
    BlockMatrix(int n, int d) : n_(n), d_(d) {}

    int n() const { return n_; }
    int d() const { return d_; }

    static BlockMatrix identity(const TensorBasis& basis);

    void set_block(const GlWeight& tgt, const GlWeight& src, Mat m);
    const Mat* block(const GlWeight& tgt, const GlWeight& src) const;
    const std::map<std::pair<GlWeight, GlWeight>, Mat>& blocks() const { return blocks_; }

    bool is_zero() const;
    BlockMatrix operator+(const BlockMatrix& o) const;
    BlockMatrix operator-(const BlockMatrix& o) const;
    BlockMatrix operator*(const BlockMatrix& o) const;  // block-wise product
    BlockMatrix scaled(const LaurentQ& c) const;
    bool operator==(const BlockMatrix& o) const;

    /// restriction to a single source weight column
    BlockMatrix column(const GlWeight& src) const;

private:
    int n_ = 0, d_ = 0;
    std::map<std::pair<GlWeight, GlWeight>, Mat> blocks_;
    void prune();
};

/// One letter E_{+i} or E_{-i} (sign = +1/-1, color 1-based).
struct Letter {
    int sign;
    int color;
};

/// Word E_{s_1 c_1} ... E_{s_m c_m} 1_lambda with an optional scalar; the
/// rightmost letter acts first.  The word is zero when an intermediate
/// weight leaves Lambda(n,d).
struct AlgebraWord {
    std::vector<Letter> letters;
    GlWeight source;
    LaurentQ scalar = LaurentQ(1);

    /// weights visited right-to-left: source, then after each letter
    std::vector<GlWeight> weight_path() const;
    GlWeight target() const { return weight_path().back(); }
};

/// psi_{n,d}(E_{+-i}) on V^{tensor d}, coproduct as in the header comment of
/// the implementation file.
BlockMatrix generator_matrix(int color, int sign, const TensorBasis& basis);

/// K_i action (diagonal q^{lambda_i}); used in relation checks.
BlockMatrix k_matrix(int i, const TensorBasis& basis);

/// product of generator matrices restricted to the source block; zero when
/// the word dies by label.
BlockMatrix word_matrix(const AlgebraWord& w, const TensorBasis& basis);

/// Hecke generator T_k (1-based, 1 <= k <= d-1) acting on V^{tensor d}.
BlockMatrix hecke_generator(int k, const TensorBasis& basis);

/// anti-involution tau on words, with the q-shift per letter
AlgebraWord tau(const AlgebraWord& w);

/// pi_{d',d}: relabel 1_lambda -> 1_{lambda - (k^n)}; d' = d + n*k required
AlgebraWord pi_project(const AlgebraWord& w, int dprime, int d);

/// iota_{n,m}: pad weights with zeros, m >= n
AlgebraWord iota_embed(const AlgebraWord& w, int n, int m);

/// all four relation families of the Serre-style presentation, exactly
Report check_schur_presentation(int n, int d);

/// quadratic, far-commutation and braid relations of H_q(d)
Report check_hecke(int d, int n);

/// sigma_{n,d}(b_i) = 1_d E_{-i} E_{+i} 1_d on the (1^d) block, plus
/// commutation of Hecke generators with all quantum group generators
Report sigma_check(int n, int d);

/// tau is an anti-homomorphism on length <= 2 words and an involution with
/// the stated shifts
Report tau_check(int n, int d);

/// block-structure check of pi_{d',d} . psi_{n,d'} = psi_{n,d} on generators
Report pi_check(int n, int dprime, int d);

/// dim S_q(n,d) via binom(n^2+d-1, d) and via sum of squared SSYT counts;
/// both routes must agree
long schur_dimension(int n, int d);

/// Weyl module dimension spot check: rank of the 1_lambda column modulo the
/// lexicographic ideal, at exact rational specializations of q
long weyl_dimension_specialized(int n, int d, const GlWeight& lambda,
                                const std::vector<Rat>& q_values, int max_len = 4);

} // namespace schurcat
