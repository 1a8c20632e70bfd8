#pragma once

#include "schurcat/mpoly.hpp"
#include "schurcat/soergel.hpp"

#include <optional>
#include <vector>

namespace schurcat {

/// Element of the Bott-Samelson style tensor bimodule
///   B_{c_1} ... B_{c_t} = R (x)_{R^{c_1}} R (x)_{R^{c_2}} ... (x)_{R^{c_t}} R
/// over R = Q[x_1..x_n], in the normal form
///   sum over eps in {0,1}^t of  g_eps (x) x_{c_1}^{eps_1} (x) ... ,
/// all coefficients pushed into the leftmost slot.
struct BSElement {
    int n = 0;
    std::vector<int> word;          // colors c_1..c_t
    std::vector<MPoly> comp;        // size 2^t, indexed by the eps bitmask

    static BSElement unit(int n, std::vector<int> word);
    bool is_zero() const;
    BSElement& operator+=(const BSElement& o);
    friend BSElement operator-(BSElement a);
    bool operator==(const BSElement& o) const;
};

/// multiplication by a polynomial in tensor slot `slot` (0 = leftmost),
/// followed by normal-form reduction
BSElement slot_multiply(const BSElement& e, int slot, const MPoly& f);

/// An EK bimodule map between tensor words, stored on the free left-module
/// basis 1 (x) x^eps (x) 1.
struct EKMap {
    int n = 0;
    std::vector<int> src, tgt;
    std::vector<BSElement> images;  // one per source basis mask

    BSElement apply(const BSElement& e) const;
};

EKMap ek_identity(int n, std::vector<int> word);
EKMap ek_compose(const EKMap& second, const EKMap& first);
/// horizontal juxtaposition (left word to the left)
EKMap ek_tensor(const EKMap& left, const EKMap& right);
EKMap ek_add(const EKMap& a, const EKMap& b);
EKMap ek_scale(const Rat& c, EKMap a);
bool ek_equal(const EKMap& a, const EKMap& b);

/// generator maps; the dot convention uses alpha_i = x_{i+1} - x_i, which is
/// the normalization forced by the bubble images of the main 2-representation
EKMap ek_enddot(int n, int i);
EKMap ek_startdot(int n, int i);
EKMap ek_merge(int n, int i);
EKMap ek_split(int n, int i);
EKMap ek_fourvertex(int n, int i, int j);
/// box_i acts as multiplication by -x_i in the given region slot
EKMap ek_box(int n, const std::vector<int>& word, int slot, const MPoly& boxpoly);

/// The six-valent vertex: solved as the unique degree-zero bimodule map
/// B_i B_j B_i -> B_j B_i B_j normalized on the cyclic generator.  Returns
/// nullopt if the solve does not yield a one-dimensional space.
std::optional<EKMap> ek_sixvertex(int n, int i, int j);

/// F'_EK of a whole Soergel word
std::optional<EKMap> ek_functor(const SoergelWord& w, int n);

} // namespace schurcat
