#ifndef INVINT_LIE_ORACLE_HPP
#define INVINT_LIE_ORACLE_HPP

#include "invint/linalg.hpp"

namespace invint {

enum class LieKind { SpecialLinear, Orthogonal, Symplectic };

// Brute-force invariant-subspace dimension on E^{ox k}: the joint kernel of
// the Lie algebra generators acting by the Leibniz rule. For Orthogonal the
// kernel is intersected with the fixed space of diag(-1,1,...,1) to capture
// the full O_n. Bound: dim^k <= 4096.
int lie_invariant_dim_oracle(LieKind kind, int dim, int k);

// Generator matrices (dim x dim) of the Lie algebra, entries in {-1,0,1}.
std::vector<MatQ> lie_generators(LieKind kind, int dim);

}  // namespace invint

#endif
