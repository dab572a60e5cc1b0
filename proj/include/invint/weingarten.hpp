#ifndef INVINT_WEINGARTEN_HPP
#define INVINT_WEINGARTEN_HPP

#include <string>
#include <utility>
#include <vector>

#include "invint/tensor.hpp"

// Conventions used throughout this module (also in README):
//  - w_sigma is built from m copies of the metric on the covector block and
//    the tau-interleaved m copies of the inverse form on the vector block,
//    tau(2i-1) = 2i-1, tau(2i) = 2 sigma(i), then symmetrized over the 2m
//    End(E) factors.
//  - a_sigma is the variance-flipped twin with the same numeric entries.
//  - Gram entries pair the symmetrized w-side against the unsymmetrized
//    a-side representative by positional full contraction, normalized by
//    sigma_tilde_id = dim^{#cycles} on both sides. This calibrates the m = 1
//    solve to the coefficient 1/dim for both group kinds.
//  - Admissible cycle types have parts <= dim (Orthogonal) or <= dim/2
//    (Symplectic).

namespace invint {

// Weakly decreasing positive parts summing to the degree m.
struct CycleType {
    std::vector<int> parts;

    int sum() const;
    int num_parts() const { return static_cast<int>(parts.size()); }
    std::string str() const;

    friend bool operator==(const CycleType& a, const CycleType& b) { return a.parts == b.parts; }
    friend bool operator<(const CycleType& a, const CycleType& b) { return a.parts < b.parts; }
};

// All partitions of m with parts <= max_part, descending lexicographic.
std::vector<CycleType> cycle_types(int m, int max_part);

// Class representative with cycles laid on consecutive 0-based points.
std::vector<int> canonical_perm(const CycleType& ct);

// sigma~(Id_1) = dim^{#cycles}, cycles of length 1 included.
Int sigma_tilde_id(const CycleType& ct, int dim);

int admissible_max_part(GroupKind kind, int dim);

// Symmetrized element of S^{2m} End(E), axes [cov x 2m, vec x 2m].
Tensor build_w_sigma(const CycleType& ct, int dim, GroupKind kind);

// Variance-flipped twin in S^{2m} End(E)^*, axes [vec x 2m, cov x 2m].
Tensor build_a_sigma(const CycleType& ct, int dim, GroupKind kind);

// Representative-explicit variants; sigma is a 0-based permutation of {0..m-1}.
Tensor build_w_sigma(const std::vector<int>& sigma, int dim, GroupKind kind);
Tensor build_a_sigma(const std::vector<int>& sigma, int dim, GroupKind kind);

// Cycle type of a permutation (0-based images).
CycleType cycle_type_of(const std::vector<int>& sigma);

// lambda_{sigma sigma'} over the admissible cycle types of degree m,
// ordered as cycle_types(m, max_part).
MatQ gram_matrix(int m, int dim, GroupKind kind);

struct WeingartenTable {
    GroupKind kind;
    int dim;
    int degree;  // m
    std::vector<std::pair<CycleType, Rat>> coeffs;  // coefficient of each symmetrized w_sigma

    const Rat& coeff(const CycleType& ct) const;
};

// Solves the Gram system exactly; coefficient of w_sigma is
// lambda_[sigma] / sigma_tilde_id. Throws on a singular Gram matrix.
WeingartenTable weingarten_coefficients(int m, int dim, GroupKind kind);

// [w]_r as an element of S^r End(E): the coefficient sum for r = 2m,
// the zero tensor for odd r, the scalar 1 for r = 0.
Tensor integral_component(int r, int dim, GroupKind kind);

// Action of [w]_k on v in E^{ox k}; the invariant projection.
Tensor project_invariants(const Tensor& v, int dim, GroupKind kind);

// Deduplicated spanning set { sigma(g_inv^{ox m}) : sigma in S_2m } of
// (E^{ox 2m})^G.
std::vector<Tensor> orthosymplectic_invariant_basis(int m, int dim, GroupKind kind);

std::string kind_name(GroupKind kind);

}  // namespace invint

#endif
