#ifndef INVINT_CAYLEY_HPP
#define INVINT_CAYLEY_HPP

#include "invint/poly.hpp"

namespace invint {

// The Cayley operator det(d/dx_{ij}); n! signed monomials.
// n is bounded by max_matrix_dim() (default 4, INVINT_MAX_DIM raises it).
DiffOp cayley_operator(int n);

// mu_r = r (r+1) ... (r+n-1) = (r+n-1)!/(r-1)!
Int mu(long r, int n);

// D^r(det^r) = mu_r mu_{r-1} ... mu_1; 1 for r = 0.
Int cayley_power_on_det_power(int r, int n);

struct GlIntegralQuery {
    int n;
    Poly numerator;
    int det_power;  // s >= 0
};

// Invariant integral on Gl_n of p/det^s: D^s applied to the degree-(n s)
// homogeneous component of p, divided by D^s(det^s). Other degrees give 0.
Rat gl_integral(const GlIntegralQuery& q);

// Invariant integral on Sl_n of (a representative) p: sum over i of
// D^i applied to the degree-(n i) component, each normalized by D^i(det^i).
Rat sl_integral(const Poly& p, int n);

// dim (E^{ox nm})^{Sl_n} = (mn)! / D^m(det^m); the quotient must be exact.
Int sl_invariant_dim(int n, int m);

}  // namespace invint

#endif
