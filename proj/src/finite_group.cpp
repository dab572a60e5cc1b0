#include "invint/finite_group.hpp"

#include <algorithm>
#include <set>

namespace invint::fg {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names) {
    FiniteGroup g;
    g.order = static_cast<int>(table.size());
    check(g.order >= 1, "group: empty table");
    for (const auto& row : table) {
        check(static_cast<int>(row.size()) == g.order, "group: table not square");
        for (int v : row) check(0 <= v && v < g.order, "group: entry out of range");
    }
    g.mul = std::move(table);
    // identity
    for (int e = 0; e < g.order; ++e) {
        bool ok = true;
        for (int h = 0; h < g.order && ok; ++h)
            ok = g.mul[e][h] == h && g.mul[h][e] == h;
        if (ok) { g.identity = e; break; }
    }
    check(g.identity >= 0, "group: no identity element");
    // associativity over the full table
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c)
                check(g.mul[g.mul[a][b]][c] == g.mul[a][g.mul[b][c]],
                      "group: multiplication not associative");
    // inverses
    g.inv.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b)
            if (g.mul[a][b] == g.identity && g.mul[b][a] == g.identity) { g.inv[a] = b; break; }
        check(g.inv[a] >= 0, "group: missing inverse");
    }
    if (names.empty()) {
        for (int i = 0; i < g.order; ++i) names.push_back("g" + std::to_string(i));
    }
    check(static_cast<int>(names.size()) == g.order, "group: wrong number of names");
    g.names = std::move(names);
    return g;
}

bool FiniteGroup::contains_subgroup(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    if (s.size() != elems.size()) return false;
    if (!s.count(identity)) return false;
    for (int a : elems) {
        if (a < 0 || a >= order) return false;
        if (!s.count(inv[a])) return false;
        for (int b : elems)
            if (!s.count(mul[a][b])) return false;
    }
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& subgroup) const {
    if (!contains_subgroup(subgroup)) return false;
    std::set<int> s(subgroup.begin(), subgroup.end());
    for (int g = 0; g < order; ++g)
        for (int h : subgroup)
            if (!s.count(mul[mul[g][h]][inv[g]])) return false;
    return true;
}

template <class K>
void IrrepTable<K>::validate(const FiniteGroup& g) const {
    check(!irreps.empty(), "irrep table: empty");
    long sumsq = 0;
    for (const auto& ir : irreps) {
        check(ir.degree >= 1, "irrep table: nonpositive degree");
        check(static_cast<int>(ir.rho.size()) == g.order, "irrep table: wrong matrix count");
        for (const auto& m : ir.rho)
            check(m.n == ir.degree, "irrep table: block shape mismatch");
        check(ir.rho[g.identity].approx_equal(Mat<K>::identity(ir.degree)),
              "irrep table: rho(e) is not the identity");
        for (int a = 0; a < g.order; ++a)
            for (int b = 0; b < g.order; ++b)
                check((ir.rho[a] * ir.rho[b]).approx_equal(ir.rho[g.mul[a][b]]),
                      "irrep table: rho is not a homomorphism");
        sumsq += static_cast<long>(ir.degree) * ir.degree;
    }
    check(sumsq == g.order, "irrep table: sum of squared degrees != |G|");
    // character orthogonality under T^2
    for (size_t i = 0; i < irreps.size(); ++i)
        for (size_t j = 0; j < irreps.size(); ++j) {
            K s = ScalarOps<K>::zero();
            for (int x = 0; x < g.order; ++x)
                s = s + irreps[i].rho[g.inv[x]].trace() * irreps[j].rho[x].trace();
            s = ScalarOps<K>::div_int(s, g.order);
            K expect = i == j ? ScalarOps<K>::one() : ScalarOps<K>::zero();
            check(ScalarOps<K>::eq(s, expect), "irrep table: characters not orthonormal");
        }
}

template <class K>
K invariant_integral(const FiniteGroup& g, const GroupFunction<K>& a) {
    check(static_cast<int>(a.size()) == g.order, "group function: wrong length");
    K s = ScalarOps<K>::zero();
    for (int x = 0; x < g.order; ++x) s = s + a[x];
    return ScalarOps<K>::div_int(s, g.order);
}

template <class K>
GroupFunction<K> star(const FiniteGroup& g, const GroupFunction<K>& a) {
    GroupFunction<K> r(g.order);
    for (int x = 0; x < g.order; ++x) r[x] = a[g.inv[x]];
    return r;
}

template <class K>
GroupFunction<K> translate_left(const FiniteGroup& g, const GroupFunction<K>& a, int elem) {
    GroupFunction<K> r(g.order);
    for (int x = 0; x < g.order; ++x) r[x] = a[g.mul[x][elem]];
    return r;
}

template <class K>
GroupFunction<K> translate_right(const FiniteGroup& g, const GroupFunction<K>& a, int elem) {
    GroupFunction<K> r(g.order);
    for (int x = 0; x < g.order; ++x) r[x] = a[g.mul[elem][x]];
    return r;
}

template <class K>
DualElement<K> fourier(const FiniteGroup& g, const IrrepTable<K>& t, const GroupFunction<K>& a) {
    check(static_cast<int>(a.size()) == g.order, "fourier: function of wrong length");
    DualElement<K> hat;
    for (const auto& ir : t.irreps) {
        Mat<K> block(ir.degree);
        for (int x = 0; x < g.order; ++x) {
            const Mat<K>& m = ir.rho[g.inv[x]];
            for (size_t i = 0; i < block.a.size(); ++i) block.a[i] = block.a[i] + a[x] * m.a[i];
        }
        for (auto& v : block.a) v = ScalarOps<K>::div_int(v, g.order);
        hat.push_back(std::move(block));
    }
    return hat;
}

template <class K>
GroupFunction<K> inverse_fourier(const FiniteGroup& g, const IrrepTable<K>& t,
                                 const DualElement<K>& hat) {
    check(hat.size() == t.irreps.size(), "inverse_fourier: wrong block count");
    GroupFunction<K> a(g.order, ScalarOps<K>::zero());
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        const auto& ir = t.irreps[i];
        check(hat[i].n == ir.degree, "inverse_fourier: block shape mismatch");
        for (int x = 0; x < g.order; ++x)
            a[x] = a[x] + ScalarOps<K>::from_int(ir.degree) * (hat[i] * ir.rho[x]).trace();
    }
    return a;
}

template <class K>
GroupFunction<K> convolution(const FiniteGroup& g, const GroupFunction<K>& a,
                             const GroupFunction<K>& b) {
    check(a.size() == b.size() && static_cast<int>(a.size()) == g.order,
          "convolution: length mismatch");
    GroupFunction<K> r(g.order);
    for (int x = 0; x < g.order; ++x) {
        K s = ScalarOps<K>::zero();
        for (int y = 0; y < g.order; ++y) s = s + a[g.inv[y]] * b[g.mul[x][y]];
        r[x] = ScalarOps<K>::div_int(s, g.order);
    }
    return r;
}

template <class K>
DualElement<K> dual_product(const DualElement<K>& x, const DualElement<K>& y) {
    check(x.size() == y.size(), "dual_product: block count mismatch");
    DualElement<K> r;
    for (size_t i = 0; i < x.size(); ++i) r.push_back(x[i] * y[i]);
    return r;
}

template <class K>
K dual_trace(const IrrepTable<K>& t, const DualElement<K>& hat) {
    K s = ScalarOps<K>::zero();
    for (size_t i = 0; i < t.irreps.size(); ++i)
        s = s + ScalarOps<K>::from_int(t.irreps[i].degree) * hat[i].trace();
    return s;
}

template <class K>
DualElement<K> dual_star(const FiniteGroup& g, const IrrepTable<K>& t, const DualElement<K>& hat) {
    // coordinates of hat in the spanning set {rho(g)}: c_g = (1/|G|) sum_i n_i tr(A_i rho_i(g^{-1}))
    GroupFunction<K> c(g.order);
    for (int x = 0; x < g.order; ++x) {
        K s = ScalarOps<K>::zero();
        for (size_t i = 0; i < t.irreps.size(); ++i)
            s = s + ScalarOps<K>::from_int(t.irreps[i].degree) *
                        (hat[i] * t.irreps[i].rho[g.inv[x]]).trace();
        c[x] = ScalarOps<K>::div_int(s, g.order);
    }
    DualElement<K> r;
    for (const auto& ir : t.irreps) {
        Mat<K> block(ir.degree);
        for (int x = 0; x < g.order; ++x) {
            const Mat<K>& m = ir.rho[g.inv[x]];
            for (size_t i = 0; i < block.a.size(); ++i) block.a[i] = block.a[i] + c[x] * m.a[i];
        }
        r.push_back(std::move(block));
    }
    return r;
}

template <class K>
PairingReport<K> parseval_pairing(const FiniteGroup& g, const IrrepTable<K>& t,
                                  const GroupFunction<K>& a, const GroupFunction<K>& b) {
    K lhs = ScalarOps<K>::zero();
    for (int x = 0; x < g.order; ++x) lhs = lhs + a[g.inv[x]] * b[x];
    lhs = ScalarOps<K>::div_int(lhs, g.order);
    DualElement<K> fa = fourier(g, t, a), fb = fourier(g, t, b);
    K rhs = dual_trace(t, dual_product(fa, fb));
    return {lhs, rhs, ScalarOps<K>::eq(lhs, rhs)};
}

template <class K>
std::vector<std::vector<K>> peter_weyl_gram(const FiniteGroup& g, const IrrepTable<K>& t) {
    struct Idx { int i, r, s; };
    std::vector<Idx> idx;
    for (size_t i = 0; i < t.irreps.size(); ++i)
        for (int r = 0; r < t.irreps[i].degree; ++r)
            for (int s = 0; s < t.irreps[i].degree; ++s)
                idx.push_back({static_cast<int>(i), r, s});
    const size_t n = idx.size();
    std::vector<std::vector<K>> gram(n, std::vector<K>(n));
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
            K s = ScalarOps<K>::zero();
            for (int x = 0; x < g.order; ++x)
                s = s + t.irreps[idx[p].i].rho[g.inv[x]].at(idx[p].r, idx[p].s) *
                            t.irreps[idx[q].i].rho[x].at(idx[q].r, idx[q].s);
            gram[p][q] = ScalarOps<K>::div_int(s, g.order);
            bool hit = idx[p].i == idx[q].i && idx[p].r == idx[q].s && idx[p].s == idx[q].r;
            K expect = hit ? ScalarOps<K>::div_int(ScalarOps<K>::one(), t.irreps[idx[p].i].degree)
                           : ScalarOps<K>::zero();
            if (!ScalarOps<K>::eq(gram[p][q], expect))
                throw error("peter_weyl_gram: pattern violated at (i=" +
                            std::to_string(idx[p].i) + ",r=" + std::to_string(idx[p].r) + ",s=" +
                            std::to_string(idx[p].s) + ") x (i=" + std::to_string(idx[q].i) +
                            ",r=" + std::to_string(idx[q].r) + ",s=" + std::to_string(idx[q].s) +
                            ")");
        }
    return gram;
}

template <class K>
GroupFunction<K> character(const FiniteGroup& g, const IrrepTable<K>& t, int i) {
    check(0 <= i && i < static_cast<int>(t.irreps.size()), "character: index out of range");
    GroupFunction<K> chi(g.order);
    for (int x = 0; x < g.order; ++x) chi[x] = t.irreps[i].rho[x].trace();
    return chi;
}

template <class K>
Mat<K> isotypic_projection(const FiniteGroup& g, const IrrepTable<K>& t,
                           const std::vector<Mat<K>>& rep, int i) {
    check(static_cast<int>(rep.size()) == g.order, "isotypic_projection: wrong matrix count");
    GroupFunction<K> chi = character(g, t, i);
    Mat<K> p(rep[0].n);
    for (int x = 0; x < g.order; ++x) {
        K w = chi[g.inv[x]];
        for (size_t k = 0; k < p.a.size(); ++k) p.a[k] = p.a[k] + w * rep[x].a[k];
    }
    long ni = t.irreps[i].degree;
    for (auto& v : p.a) v = ScalarOps<K>::div_int(ScalarOps<K>::from_int(ni) * v, g.order);
    return p;
}

template <class K>
std::vector<Mat<K>> regular_representation(const FiniteGroup& g) {
    std::vector<Mat<K>> rep;
    for (int x = 0; x < g.order; ++x) {
        Mat<K> m(g.order);
        for (int h = 0; h < g.order; ++h) m.at(g.mul[x][h], h) = ScalarOps<K>::one();
        rep.push_back(std::move(m));
    }
    return rep;
}

template <class K>
PairingReport<K> poisson_check(const FiniteGroup& g, const std::vector<int>& subgroup,
                               const GroupFunction<K>& a, const IrrepTable<K>& t) {
    check(g.is_normal(subgroup), "poisson_check: subgroup is not normal");
    K lhs = ScalarOps<K>::zero();
    for (int h : subgroup) lhs = lhs + a[h];
    lhs = ScalarOps<K>::div_int(lhs, static_cast<long>(subgroup.size()));

    DualElement<K> fa = fourier(g, t, a);
    K rhs = ScalarOps<K>::zero();
    long quotient_order = 0;
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        bool h_invariant = true;
        Mat<K> id = Mat<K>::identity(t.irreps[i].degree);
        for (int h : subgroup)
            if (!t.irreps[i].rho[h].approx_equal(id)) { h_invariant = false; break; }
        if (h_invariant) {
            rhs = rhs + ScalarOps<K>::from_int(t.irreps[i].degree) * fa[i].trace();
            quotient_order += static_cast<long>(t.irreps[i].degree) * t.irreps[i].degree;
        }
    }
    check(quotient_order * static_cast<long>(subgroup.size()) == g.order,
          "poisson_check: H-invariant irreps do not assemble the quotient");
    return {lhs, rhs, ScalarOps<K>::eq(lhs, rhs)};
}

// explicit instantiations
#define INVINT_FG_INSTANTIATE(K)                                                               \
    template void IrrepTable<K>::validate(const FiniteGroup&) const;                           \
    template K invariant_integral<K>(const FiniteGroup&, const GroupFunction<K>&);             \
    template GroupFunction<K> star<K>(const FiniteGroup&, const GroupFunction<K>&);            \
    template GroupFunction<K> translate_left<K>(const FiniteGroup&, const GroupFunction<K>&,   \
                                                int);                                          \
    template GroupFunction<K> translate_right<K>(const FiniteGroup&, const GroupFunction<K>&,  \
                                                 int);                                         \
    template DualElement<K> fourier<K>(const FiniteGroup&, const IrrepTable<K>&,               \
                                       const GroupFunction<K>&);                               \
    template GroupFunction<K> inverse_fourier<K>(const FiniteGroup&, const IrrepTable<K>&,     \
                                                 const DualElement<K>&);                       \
    template GroupFunction<K> convolution<K>(const FiniteGroup&, const GroupFunction<K>&,      \
                                             const GroupFunction<K>&);                         \
    template DualElement<K> dual_product<K>(const DualElement<K>&, const DualElement<K>&);     \
    template K dual_trace<K>(const IrrepTable<K>&, const DualElement<K>&);                     \
    template DualElement<K> dual_star<K>(const FiniteGroup&, const IrrepTable<K>&,             \
                                         const DualElement<K>&);                               \
    template PairingReport<K> parseval_pairing<K>(const FiniteGroup&, const IrrepTable<K>&,    \
                                                  const GroupFunction<K>&,                     \
                                                  const GroupFunction<K>&);                    \
    template std::vector<std::vector<K>> peter_weyl_gram<K>(const FiniteGroup&,                \
                                                            const IrrepTable<K>&);             \
    template GroupFunction<K> character<K>(const FiniteGroup&, const IrrepTable<K>&, int);     \
    template Mat<K> isotypic_projection<K>(const FiniteGroup&, const IrrepTable<K>&,           \
                                           const std::vector<Mat<K>>&, int);                   \
    template std::vector<Mat<K>> regular_representation<K>(const FiniteGroup&);                \
    template PairingReport<K> poisson_check<K>(const FiniteGroup&, const std::vector<int>&,    \
                                               const GroupFunction<K>&, const IrrepTable<K>&);

INVINT_FG_INSTANTIATE(Rat)
INVINT_FG_INSTANTIATE(Cplx)

#undef INVINT_FG_INSTANTIATE

}  // namespace invint::fg
