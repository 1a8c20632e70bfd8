#pragma once

#include "schurcat/mpoly.hpp"

#include <map>
#include <vector>

namespace schurcat {

/// A pair of disjoint alphabets (x_1..x_a ; y_1..y_b).
struct SuperPair {
    Alphabet X;
    Alphabet Y;
    int a() const { return (int)X.size(); }
    int b() const { return (int)Y.size(); }
};

using Partition = std::vector<int>;  // weakly decreasing, no trailing zeros needed

/// strip trailing zeros, check weakly decreasing
Partition normalize_partition(Partition p);
int partition_weight(const Partition& p);
Partition conjugate_partition(const Partition& p);

/// alpha in Gamma(a,b) iff alpha_j <= b for all j > a
bool in_gamma(const Partition& alpha, int a, int b);

/// supersymmetric elementary e_j(x;y) = sum_s (-1)^s h_{j-s}(x) eps_s(y)
MPoly super_elem(int j, const SuperPair& p);

/// supersymmetric Schur pi_alpha(x;y) = det(e_{alpha_i+j-i}(x;y))
MPoly super_schur(const Partition& alpha, const SuperPair& p);

/// Littlewood-Richardson coefficients of pi_alpha * pi_beta in the pi basis,
/// via exact linear solve against the pi_gamma with |gamma| = |alpha|+|beta|,
/// gamma in Gamma(a,b).  Throws if the linear system is inconsistent (the
/// alphabets are too small for the requested degree).
std::map<Partition, long> lr_expand(const Partition& alpha, const Partition& beta,
                                    const SuperPair& p);

/// independent tableau-based Littlewood-Richardson coefficient c^gamma_{alpha,beta}
long lr_tableau(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// all partitions of weight w with at most max_len parts (max_len<0: unbounded)
std::vector<Partition> partitions_of(int w, int max_len = -1);

/// Lemma-of-ss item (4): pi_alpha(x;y) == (-1)^{|alpha|} pi_{alpha'}(y;x)
bool conjugate_duality_check(const Partition& alpha, const SuperPair& p);

/// supersymmetry probe: substituting x_1 = t = y_1 must kill the t-dependence
bool is_supersymmetric(const MPoly& f, const SuperPair& p);

} // namespace schurcat
