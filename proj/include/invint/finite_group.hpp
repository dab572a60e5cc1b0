#ifndef INVINT_FINITE_GROUP_HPP
#define INVINT_FINITE_GROUP_HPP

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "invint/rational.hpp"

namespace invint::fg {

using Cplx = std::complex<double>;

// Finite group given by an explicit multiplication table. The table is
// validated eagerly: closure, associativity, identity and inverses.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> mul;
    std::vector<std::string> names;
    int identity = -1;
    std::vector<int> inv;

    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> names = {});

    int op(int g, int h) const { return mul[g][h]; }
    bool contains_subgroup(const std::vector<int>& elems) const;
    bool is_normal(const std::vector<int>& subgroup) const;
};

template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
    static constexpr bool exact = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long n) { return Rat(n); }
    static Rat div_int(const Rat& a, long n) { return a / Rat(n); }
    static bool eq(const Rat& a, const Rat& b) { return a == b; }
};

template <>
struct ScalarOps<Cplx> {
    static constexpr bool exact = false;
    static constexpr double tol = 1e-9;
    static Cplx zero() { return {0.0, 0.0}; }
    static Cplx one() { return {1.0, 0.0}; }
    static Cplx from_int(long n) { return {static_cast<double>(n), 0.0}; }
    static Cplx div_int(const Cplx& a, long n) { return a / static_cast<double>(n); }
    static bool eq(const Cplx& a, const Cplx& b) { return std::abs(a - b) <= tol; }
};

template <class K>
struct Mat {
    int n = 0;
    std::vector<K> a;

    Mat() = default;
    explicit Mat(int n_) : n(n_), a(size_t(n_) * n_, ScalarOps<K>::zero()) {}
    static Mat identity(int n_) {
        Mat m(n_);
        for (int i = 0; i < n_; ++i) m.at(i, i) = ScalarOps<K>::one();
        return m;
    }

    K& at(int r, int c) { return a[size_t(r) * n + c]; }
    const K& at(int r, int c) const { return a[size_t(r) * n + c]; }

    K trace() const {
        K s = ScalarOps<K>::zero();
        for (int i = 0; i < n; ++i) s = s + at(i, i);
        return s;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        Mat r(x.n);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k)
                for (int j = 0; j < x.n; ++j) r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
        return r;
    }
    friend Mat operator+(Mat x, const Mat& y) {
        for (size_t i = 0; i < x.a.size(); ++i) x.a[i] = x.a[i] + y.a[i];
        return x;
    }

    bool approx_equal(const Mat& o) const {
        if (n != o.n) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!ScalarOps<K>::eq(a[i], o.a[i])) return false;
        return true;
    }
};

template <class K>
struct Irrep {
    int degree = 0;
    std::vector<Mat<K>> rho;  // one matrix per group element
};

// Complete irreducible-representation table; validated against its group:
// each rho is a homomorphism over the full table, sum n_i^2 = |G|, and
// distinct characters are T^2-orthogonal.
template <class K>
struct IrrepTable {
    std::vector<Irrep<K>> irreps;
    void validate(const FiniteGroup& g) const;
};

template <class K>
using GroupFunction = std::vector<K>;

template <class K>
using DualElement = std::vector<Mat<K>>;

template <class K>
struct PairingReport {
    K lhs, rhs;
    bool equal;
};

// w_G(a) = (1/|G|) sum_g a(g)
template <class K>
K invariant_integral(const FiniteGroup& g, const GroupFunction<K>& a);

// a*(g) = a(g^{-1})
template <class K>
GroupFunction<K> star(const FiniteGroup& g, const GroupFunction<K>& a);

// (g.a)(x) = a(x g)   and   (a.g)(x) = a(g x)
template <class K>
GroupFunction<K> translate_left(const FiniteGroup& g, const GroupFunction<K>& a, int elem);
template <class K>
GroupFunction<K> translate_right(const FiniteGroup& g, const GroupFunction<K>& a, int elem);

// F(a): block i = (1/|G|) sum_g a(g) rho_i(g)^{-1}
template <class K>
DualElement<K> fourier(const FiniteGroup& g, const IrrepTable<K>& t, const GroupFunction<K>& a);

// a(g) = sum_i n_i tr(A_i rho_i(g))
template <class K>
GroupFunction<K> inverse_fourier(const FiniteGroup& g, const IrrepTable<K>& t,
                                 const DualElement<K>& hat);

// (a*b)(x) = (1/|G|) sum_g a(g^{-1}) b(x g)
template <class K>
GroupFunction<K> convolution(const FiniteGroup& g, const GroupFunction<K>& a,
                             const GroupFunction<K>& b);

// Blockwise product on the dual side.
template <class K>
DualElement<K> dual_product(const DualElement<K>& x, const DualElement<K>& y);

// tr on the dual algebra: sum_i n_i tr(A_i).
template <class K>
K dual_trace(const IrrepTable<K>& t, const DualElement<K>& hat);

// The antipode on the dual side, computed in group-element coordinates.
template <class K>
DualElement<K> dual_star(const FiniteGroup& g, const IrrepTable<K>& t, const DualElement<K>& hat);

// Both sides of Parseval: (1/|G|) sum a(g^{-1}) b(g)  vs  tr(F(a) F(b)).
template <class K>
PairingReport<K> parseval_pairing(const FiniteGroup& g, const IrrepTable<K>& t,
                                  const GroupFunction<K>& a, const GroupFunction<K>& b);

// Gram matrix of all matrix-coefficient functions delta^i_{rs} under T^2;
// throws with indices unless it matches the 1/n_i orthogonality pattern.
template <class K>
std::vector<std::vector<K>> peter_weyl_gram(const FiniteGroup& g, const IrrepTable<K>& t);

// chi_i as a function on G.
template <class K>
GroupFunction<K> character(const FiniteGroup& g, const IrrepTable<K>& t, int i);

// P_i = (n_i/|G|) sum_g chi_i(g^{-1}) rep(g) on an arbitrary representation.
template <class K>
Mat<K> isotypic_projection(const FiniteGroup& g, const IrrepTable<K>& t,
                           const std::vector<Mat<K>>& rep, int i);

// Left regular representation, rep(g) e_h = e_{gh}.
template <class K>
std::vector<Mat<K>> regular_representation(const FiniteGroup& g);

// Poisson summation: lhs = (1/|H|) sum_{h in H} a(h),
// rhs = sum over H-invariant irreps of n_i tr(F(a)_i). H must be normal.
template <class K>
PairingReport<K> poisson_check(const FiniteGroup& g, const std::vector<int>& subgroup,
                               const GroupFunction<K>& a, const IrrepTable<K>& t);

}  // namespace invint::fg

#endif
