#include "invint/cayley.hpp"

#include <string>

namespace invint {

DiffOp cayley_operator(int n) {
    check(n >= 1, "cayley_operator: n must be >= 1");
    check(n <= max_matrix_dim(),
          "cayley_operator: n = " + std::to_string(n) + " above bound " +
              std::to_string(max_matrix_dim()) + " (set INVINT_MAX_DIM to raise)");
    return DiffOp(poly_det(n));
}

Int mu(long r, int n) {
    check(r >= 1 && n >= 1, "mu: need r >= 1, n >= 1");
    Int v = 1;
    for (long k = r; k <= r + n - 1; ++k) v *= k;
    return v;
}

Int cayley_power_on_det_power(int r, int n) {
    check(r >= 0, "cayley_power_on_det_power: r must be >= 0");
    Int v = 1;
    for (int i = 1; i <= r; ++i) v *= mu(i, n);
    return v;
}

Rat gl_integral(const GlIntegralQuery& q) {
    check(q.numerator.n() == q.n, "gl_integral: numerator has wrong n");
    check(q.det_power >= 0, "gl_integral: det power must be >= 0");
    check(q.det_power <= max_matrix_dim(),
          "gl_integral: det power " + std::to_string(q.det_power) + " above bound " +
              std::to_string(max_matrix_dim()) + " (set INVINT_MAX_DIM to raise)");
    const int n = q.n, s = q.det_power;
    Poly p = q.numerator.homogeneous_component(n * s);
    if (p.is_zero()) return Rat(0);
    if (s > 0) {
        DiffOp d = cayley_operator(n);
        for (int i = 0; i < s; ++i) p = apply_diff_op(d, p);
    }
    return p.eval_at_zero() / Rat(cayley_power_on_det_power(s, n));
}

Rat sl_integral(const Poly& p, int n) {
    check(p.n() == n, "sl_integral: polynomial has wrong n");
    Rat total = p.eval_at_zero();  // i = 0 term
    int imax = p.degree() / n;
    if (imax < 1) return total;
    DiffOp d = cayley_operator(n);
    for (int i = 1; i <= imax; ++i) {
        Poly comp = p.homogeneous_component(n * i);
        if (comp.is_zero()) continue;
        for (int k = 0; k < i; ++k) comp = apply_diff_op(d, comp);
        total += comp.eval_at_zero() / Rat(cayley_power_on_det_power(i, n));
    }
    return total;
}

Int sl_invariant_dim(int n, int m) {
    check(n >= 1 && m >= 0, "sl_invariant_dim: need n >= 1, m >= 0");
    Int num = factorial(static_cast<long>(m) * n);
    Int den = cayley_power_on_det_power(m, n);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw bug("sl_invariant_dim: (mn)!/D^m(det^m) is not integral");
    return q;
}

}  // namespace invint
