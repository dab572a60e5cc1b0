#include "invint/selftest.hpp"

#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "invint/cayley.hpp"
#include "invint/finite_group.hpp"
#include "invint/json_io.hpp"
#include "invint/lie_oracle.hpp"
#include "invint/weingarten.hpp"

#ifndef INVINT_DATA_DIR
#define INVINT_DATA_DIR "./data"
#endif

namespace invint::selftest {

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome ok() { return {true, ""}; }
Outcome failed(std::string d) { return {false, std::move(d)}; }

Rat rat(long n, long d = 1) { return Rat(Int(n), Int(d)); }

Int catalan(int m) {
    return factorial(2 * m) / (factorial(m) * factorial(m + 1));
}

// ------------------------------------------------------------------ helpers

Poly random_poly(std::mt19937& rng, int n, int max_deg, int nterms) {
    std::uniform_int_distribution<int> coeff(-9, 9), deg(0, max_deg);
    Poly p(n);
    for (int t = 0; t < nterms; ++t) {
        Exps e(n * n, 0);
        int total = deg(rng);
        std::uniform_int_distribution<int> var(0, n * n - 1);
        for (int k = 0; k < total; ++k) e[var(rng)] += 1;
        p.add_term(e, Rat(coeff(rng)));
    }
    return p;
}

Poly random_homogeneous(std::mt19937& rng, int n, int d, int nterms) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> var(0, n * n - 1);
    Poly p(n);
    for (int t = 0; t < nterms; ++t) {
        Exps e(n * n, 0);
        for (int k = 0; k < d; ++k) e[var(rng)] += 1;
        p.add_term(e, Rat(coeff(rng)));
    }
    return p;
}

Tensor random_tensor(std::mt19937& rng, int dim, const std::vector<Variance>& axes) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    Tensor t(dim, axes);
    for (size_t i = 0; i < t.size(); ++i) t[i] = Rat(coeff(rng));
    return t;
}

MatQ kron(const MatQ& a, const MatQ& b) {
    MatQ r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b.at(k, l).is_zero())
                        r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

MatQ kron_power(const MatQ& s, int k) {
    MatQ r = MatQ::identity(1);
    for (int i = 0; i < k; ++i) r = kron(r, s);
    return r;
}

// All signed permutation matrices of size n, with inverses (= transposes).
std::vector<std::pair<MatQ, MatQ>> signed_permutations(int n) {
    std::vector<std::pair<MatQ, MatQ>> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            MatQ s(n, n), si(n, n);
            for (int i = 0; i < n; ++i) {
                Rat v((mask >> i) & 1 ? -1 : 1);
                s.at(p[i], i) = v;
                si.at(i, p[i]) = v;
            }
            out.emplace_back(std::move(s), std::move(si));
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Rational symplectic generators: basis transvections x -> x + w(x, e_i) e_i
// (T = I - e_i e_i^T G) and the block permutation J itself.
std::vector<std::pair<MatQ, MatQ>> symplectic_generators(int dim) {
    Metric met = metric(GroupKind::Symplectic, dim);
    MatQ G(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) G.at(i, j) = met.g.at({i, j});
    std::vector<std::pair<MatQ, MatQ>> out;
    for (int v = 0; v < dim; ++v) {
        MatQ t = MatQ::identity(dim), ti = MatQ::identity(dim);
        for (int c = 0; c < dim; ++c) {
            t.at(v, c) -= G.at(v, c);
            ti.at(v, c) += G.at(v, c);
        }
        out.emplace_back(std::move(t), std::move(ti));
    }
    MatQ j = G, ji(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) ji.at(r, c) = -G.at(r, c);
    out.emplace_back(std::move(j), std::move(ji));
    return out;
}

MatQ fg_mat_to_matq(const fg::Mat<Rat>& m) {
    MatQ r(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

LieKind to_lie(GroupKind k) {
    return k == GroupKind::Orthogonal ? LieKind::Orthogonal : LieKind::Symplectic;
}

fg::FiniteGroup load_group(const std::string& name) {
    return group_from_json(parse_file(std::string(INVINT_DATA_DIR) + "/groups/" + name + ".group.json"));
}

LoadedIrreps load_irreps(const std::string& name) {
    return irreps_from_json(parse_file(std::string(INVINT_DATA_DIR) + "/groups/" + name + ".irreps.json"));
}

template <class K>
fg::GroupFunction<K> random_fn(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    fg::GroupFunction<K> f(order);
    for (auto& v : f) v = fg::ScalarOps<K>::from_int(coeff(rng));
    return f;
}

// ------------------------------------------------------------------ criteria

Outcome crit_cayley_lemma() {
    for (int n = 1; n <= 3; ++n) {
        DiffOp d = cayley_operator(n);
        Poly det = poly_det(n);
        for (int r = 1; r <= 3; ++r) {
            Poly lhs = apply_diff_op(d, det.pow(r));
            Poly rhs = Rat(mu(r, n)) * det.pow(r - 1);
            if (!(lhs == rhs))
                return failed("n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
    }
    return ok();
}

Outcome crit_cayley_power() {
    for (int n = 1; n <= 3; ++n) {
        DiffOp d = cayley_operator(n);
        Poly det = poly_det(n);
        for (int r = 1; r <= 3; ++r) {
            Poly p = det.pow(r);
            for (int k = 0; k < r; ++k) p = apply_diff_op(d, p);
            if (p.degree() > 0) return failed("nonconstant result");
            Rat literal = p.eval_at_zero();
            Int prod = 1;
            for (int i = 1; i <= r; ++i) prod *= mu(i, n);
            if (literal != Rat(cayley_power_on_det_power(r, n)) || literal != Rat(prod))
                return failed("n=" + std::to_string(n) + " r=" + std::to_string(r) + ": got " +
                              literal.str());
        }
    }
    return ok();
}

Outcome crit_sl2_dimensions() {
    for (int m = 0; m <= 5; ++m) {
        Int got = sl_invariant_dim(2, m);
        if (got != catalan(m))
            return failed("sl_invariant_dim(2," + std::to_string(m) + ") = " + got.get_str() +
                          " != C_m = " + catalan(m).get_str());
    }
    for (int m = 1; m <= 3; ++m) {
        int oracle = lie_invariant_dim_oracle(LieKind::SpecialLinear, 2, 2 * m);
        if (Int(oracle) != sl_invariant_dim(2, m))
            return failed("oracle disagrees at m=" + std::to_string(m) + ": " +
                          std::to_string(oracle));
    }
    return ok();
}

Outcome crit_sl_ideal_vanishing() {
    for (int n = 1; n <= 3; ++n) {
        Poly det = poly_det(n);
        for (int r = 1; r <= 3; ++r) {
            Rat v = sl_integral(det.pow(r) - det.pow(r - 1), n);
            if (!v.is_zero())
                return failed("n=" + std::to_string(n) + " r=" + std::to_string(r) + ": got " +
                              v.str());
        }
    }
    return ok();
}

Outcome crit_o_m1() {
    for (int n = 2; n <= 5; ++n) {
        WeingartenTable t = weingarten_coefficients(1, n, GroupKind::Orthogonal);
        if (t.coeffs.size() != 1) return failed("wrong class count at n=" + std::to_string(n));
        Rat got = t.coeffs[0].second;
        if (got != rat(1, n))
            return failed("n=" + std::to_string(n) + ": got " + got.str() + ", expected 1/" +
                          std::to_string(n));
    }
    return ok();
}

Outcome check_m2_reference(GroupKind kind, int dim, const Rat& expect11, const Rat& expect2) {
    WeingartenTable t = weingarten_coefficients(2, dim, kind);
    std::string msg;
    Rat got11 = t.coeff(CycleType{{1, 1}});
    if (got11 != expect11)
        msg += "coeff(1,1) = " + got11.str() + ", reference " + expect11.str() + "; ";
    CycleType two{{2}};
    bool has2 = false;
    for (const auto& [ct, c] : t.coeffs) has2 = has2 || ct == two;
    if (has2) {
        Rat got2 = t.coeff(two);
        if (got2 != expect2)
            msg += "coeff(2) = " + got2.str() + ", reference " + expect2.str() + "; ";
    }
    if (!msg.empty())
        return failed(kind_name(kind) + " dim=" + std::to_string(dim) + ": " + msg);
    return ok();
}

Outcome crit_o_m2_reference() {
    std::string all;
    for (long n = 2; n <= 5; ++n) {
        long den = n * n * n * n + n * n * n + n * n - 3 * n;
        Outcome o = check_m2_reference(GroupKind::Orthogonal, static_cast<int>(n),
                                       rat(3 * n * n + 3 * n + 3, den), rat(-3 * n - 6, den));
        if (!o.pass) all += o.detail;
    }
    return all.empty() ? ok() : failed(all);
}

Outcome crit_sp_reference() {
    std::string all;
    for (int d : {2, 4, 6}) {
        WeingartenTable t = weingarten_coefficients(1, d, GroupKind::Symplectic);
        Rat got = t.coeffs[0].second;
        if (got != rat(1, d))
            all += "m=1 dim=" + std::to_string(d) + ": got " + got.str() + ", reference 1/" +
                   std::to_string(d) + "; ";
    }
    for (long d : {4L, 6L}) {
        long den = d * d * d * d - d * d * d + d * d + 3 * d;
        Outcome o = check_m2_reference(GroupKind::Symplectic, static_cast<int>(d),
                                       rat(3 * d * d - 3 * d + 3, den), rat(3 * d - 6, den));
        if (!o.pass) all += o.detail;
    }
    return all.empty() ? ok() : failed(all);
}

Outcome crit_projection() {
    struct Case { GroupKind kind; int dim; };
    const std::vector<Case> cases = {{GroupKind::Orthogonal, 2},
                                     {GroupKind::Orthogonal, 3},
                                     {GroupKind::Symplectic, 2},
                                     {GroupKind::Symplectic, 4}};
    for (const auto& c : cases) {
        auto gens = c.kind == GroupKind::Orthogonal ? signed_permutations(c.dim)
                                                    : symplectic_generators(c.dim);
        for (int m = 1; m <= 2; ++m) {
            Tensor w = integral_component(2 * m, c.dim, c.kind);
            MatQ mat = end_tensor_matrix(w);
            std::string tag = kind_name(c.kind) + " dim=" + std::to_string(c.dim) +
                              " m=" + std::to_string(m);
            if (!(mat * mat == mat)) return failed(tag + ": not idempotent");
            int r = rank(mat);
            int oracle = lie_invariant_dim_oracle(to_lie(c.kind), c.dim, 2 * m);
            if (r != oracle)
                return failed(tag + ": rank " + std::to_string(r) + " != oracle " +
                              std::to_string(oracle));
            for (const auto& [s, si] : gens) {
                MatQ sk = kron_power(s, 2 * m), ski = kron_power(si, 2 * m);
                if (!(sk * mat * ski == mat)) return failed(tag + ": not conjugation-invariant");
            }
        }
    }
    return ok();
}

Outcome crit_odd_vanishing() {
    struct Case { GroupKind kind; int dim; };
    const std::vector<Case> cases = {{GroupKind::Orthogonal, 2},
                                     {GroupKind::Orthogonal, 3},
                                     {GroupKind::Symplectic, 2},
                                     {GroupKind::Symplectic, 4}};
    std::mt19937 rng(11);
    for (const auto& c : cases) {
        for (int k : {1, 3}) {
            if (!integral_component(k, c.dim, c.kind).is_zero())
                return failed("component " + std::to_string(k) + " not zero for " +
                              kind_name(c.kind) + std::to_string(c.dim));
            Tensor v = random_tensor(rng, c.dim, std::vector<Variance>(k, Variance::Vector));
            if (!project_invariants(v, c.dim, c.kind).is_zero())
                return failed("projection of odd tensor not zero");
            if (lie_invariant_dim_oracle(to_lie(c.kind), c.dim, k) != 0)
                return failed("oracle nonzero for " + kind_name(c.kind) + std::to_string(c.dim) +
                              " k=" + std::to_string(k));
        }
    }
    return ok();
}

template <class K>
Outcome harmonic_suite(const fg::FiniteGroup& g, const fg::IrrepTable<K>& t) {
    using S = fg::ScalarOps<K>;
    t.validate(g);
    std::mt19937 rng(23);
    // Parseval on random pairs and on characters
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_fn<K>(rng, g.order), b = random_fn<K>(rng, g.order);
        auto rep = fg::parseval_pairing(g, t, a, b);
        if (!rep.equal) return failed("parseval mismatch on random pair");
    }
    for (size_t i = 0; i < t.irreps.size(); ++i)
        for (size_t j = 0; j < t.irreps.size(); ++j) {
            auto rep = fg::parseval_pairing(g, t, fg::character(g, t, static_cast<int>(i)),
                                            fg::character(g, t, static_cast<int>(j)));
            K expect = i == j ? S::one() : S::zero();
            if (!rep.equal || !S::eq(rep.lhs, expect)) return failed("character orthogonality");
        }
    // Peter-Weyl pattern (throws on violation)
    try {
        fg::peter_weyl_gram(g, t);
    } catch (const error& e) {
        return failed(e.what());
    }
    // convolution theorem on 20 random pairs
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_fn<K>(rng, g.order), b = random_fn<K>(rng, g.order);
        auto fab = fg::fourier(g, t, fg::convolution(g, a, b));
        auto prod = fg::dual_product(fg::fourier(g, t, a), fg::fourier(g, t, b));
        for (size_t i = 0; i < fab.size(); ++i)
            if (!fab[i].approx_equal(prod[i])) return failed("convolution theorem");
    }
    // inversion roundtrip on the delta basis
    for (int h = 0; h < g.order; ++h) {
        fg::GroupFunction<K> delta(g.order, S::zero());
        delta[h] = S::one();
        auto back = fg::inverse_fourier(g, t, fg::fourier(g, t, delta));
        for (int x = 0; x < g.order; ++x)
            if (!S::eq(back[x], delta[x])) return failed("inversion roundtrip");
    }
    // tr o F = evaluation at e
    for (int trial = 0; trial < 5; ++trial) {
        auto a = random_fn<K>(rng, g.order);
        K tr = fg::dual_trace(t, fg::fourier(g, t, a));
        if (!S::eq(tr, a[g.identity])) return failed("tr o F != evaluation at identity");
    }
    // F(chi_i) = 1_i / n_i
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        auto hat = fg::fourier(g, t, fg::character(g, t, static_cast<int>(i)));
        for (size_t j = 0; j < hat.size(); ++j) {
            fg::Mat<K> expect(t.irreps[j].degree);
            if (i == j)
                for (int r = 0; r < expect.n; ++r)
                    expect.at(r, r) = S::div_int(S::one(), t.irreps[i].degree);
            if (!hat[j].approx_equal(expect)) return failed("F(chi_i) != 1_i/n_i");
        }
    }
    return ok();
}

Outcome crit_harmonic() {
    auto s3 = load_group("s3");
    auto s3_irr = load_irreps("s3");
    if (!s3_irr.rational) return failed("S3 table should be rational");
    Outcome o = harmonic_suite<Rat>(s3, s3_irr.rat);
    if (!o.pass) return failed("S3: " + o.detail);

    // Poisson summation for S3 > A3 with the regular character
    fg::GroupFunction<Rat> chireg(s3.order, Rat(0));
    chireg[s3.identity] = Rat(s3.order);
    auto rep = fg::poisson_check(s3, {0, 4, 5}, chireg, s3_irr.rat);
    if (!rep.equal || rep.lhs != Rat(2))
        return failed("S3/A3 poisson: lhs=" + rep.lhs.str() + " rhs=" + rep.rhs.str());

    auto c5 = load_group("c5");
    auto c5_irr = load_irreps("c5");
    if (c5_irr.rational) return failed("C5 table should be complex");
    o = harmonic_suite<fg::Cplx>(c5, c5_irr.cplx);
    if (!o.pass) return failed("C5: " + o.detail);
    return ok();
}

Outcome crit_isotypic() {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    auto rep = fg::regular_representation<Rat>(s3);
    std::vector<int> expect = {1, 1, 4};
    fg::Mat<Rat> sum(s3.order);
    std::vector<int> ranks;
    for (int i = 0; i < 3; ++i) {
        fg::Mat<Rat> p = fg::isotypic_projection(s3, irr.rat, rep, i);
        ranks.push_back(rank(fg_mat_to_matq(p)));
        sum = sum + p;
    }
    std::sort(ranks.begin(), ranks.end());
    if (ranks != expect)
        return failed("ranks {" + std::to_string(ranks[0]) + "," + std::to_string(ranks[1]) +
                      "," + std::to_string(ranks[2]) + "} != {1,1,4}");
    if (!sum.approx_equal(fg::Mat<Rat>::identity(s3.order)))
        return failed("projections do not sum to the identity");
    return ok();
}

// ------------------------------------------------------------ invariants

Outcome inv_poly_ring_axioms() {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + trial % 3;
        Poly p = random_poly(rng, n, 3, 4), q = random_poly(rng, n, 3, 4),
             r = random_poly(rng, n, 3, 4);
        if (!((p * q) * r == p * (q * r))) return failed("associativity");
        if (!(p * q == q * p)) return failed("commutativity");
        if (!((p + q) * r == p * r + q * r)) return failed("distributivity");
        if (!(p * Poly::constant(n, Rat(1)) == p)) return failed("unit law");
    }
    return ok();
}

Outcome inv_leibniz() {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + trial % 3;
        std::uniform_int_distribution<int> pick(1, n);
        int i = pick(rng), j = pick(rng);
        DiffOp d = DiffOp::partial(n, i, j);
        Poly p = random_poly(rng, n, 3, 4), q = random_poly(rng, n, 3, 4);
        Poly lhs = apply_diff_op(d, p * q);
        Poly rhs = apply_diff_op(d, p) * q + p * apply_diff_op(d, q);
        if (!(lhs == rhs)) return failed("Leibniz rule violated");
    }
    return ok();
}

Outcome inv_det_homogeneous() {
    for (int n = 1; n <= 4; ++n) {
        Poly det = poly_det(n);
        if (det.degree() != n) return failed("degree");
        if (!(homogeneous_component(det, n) == det)) return failed("homogeneous component");
        if (static_cast<int>(det.terms().size()) != static_cast<int>(factorial(n).get_si()))
            return failed("term count");
    }
    return ok();
}

Outcome inv_gl_normalization() {
    for (int n = 1; n <= 3; ++n) {
        Poly det = poly_det(n);
        for (int s = 0; s <= 3; ++s) {
            Rat v = gl_integral({n, det.pow(s), s});
            if (v != Rat(1))
                return failed("w(det^s/det^s) = " + v.str() + " at n=" + std::to_string(n) +
                              " s=" + std::to_string(s));
        }
    }
    return ok();
}

Outcome inv_gl_off_degree() {
    std::mt19937 rng(3);
    for (int n = 2; n <= 3; ++n)
        for (int s = 1; s <= 2; ++s)
            for (int d = 0; d <= 3 * n; ++d) {
                if (d == n * s) continue;
                Poly p = random_homogeneous(rng, n, d, 3);
                if (!gl_integral({n, p, s}).is_zero()) return failed("nonzero off degree");
            }
    return ok();
}

Outcome inv_sl_gl_consistency() {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 2 + trial % 2;
        int s = 1;
        Poly p = random_homogeneous(rng, n, n * s, 4);
        Rat gl = gl_integral({n, p, s});
        Poly det = poly_det(n);
        for (int t = 0; t <= 2; ++t) {
            Rat sl = sl_integral(p * det.pow(t), n);
            if (sl != gl)
                return failed("sl(p det^" + std::to_string(t) + ") = " + sl.str() +
                              " != gl = " + gl.str());
        }
    }
    return ok();
}

Outcome inv_permute_action() {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
        int dim = 2 + trial % 2, k = 3;
        Tensor t = random_tensor(rng, dim, std::vector<Variance>(k, Variance::Vector));
        std::vector<int> s(k), u(k);
        std::iota(s.begin(), s.end(), 0);
        std::iota(u.begin(), u.end(), 0);
        std::shuffle(s.begin(), s.end(), rng);
        std::shuffle(u.begin(), u.end(), rng);
        std::vector<int> su(k);
        for (int i = 0; i < k; ++i) su[i] = s[u[i]];  // (s o u)(i) = s(u(i))
        if (!(permute_factors(t, su) == permute_factors(permute_factors(t, u), s)))
            return failed("composition law");
        std::vector<int> ident(k);
        std::iota(ident.begin(), ident.end(), 0);
        if (!(permute_factors(t, ident) == t)) return failed("identity law");
    }
    return ok();
}

Outcome inv_symmetrize() {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 5; ++trial) {
        int dim = 2 + trial % 2;
        Tensor t = random_tensor(rng, dim, std::vector<Variance>(3, Variance::Covector));
        Tensor s = symmetrize(t);
        if (!(symmetrize(s) == s)) return failed("not idempotent");
    }
    // v ox w -> (v ox w + w ox v)/2
    Tensor v = Tensor::basis_vector(2, 0), w = Tensor::basis_vector(2, 1);
    Tensor vw = tensor_product(v, w), wv = tensor_product(w, v);
    if (!(symmetrize(vw) == rat(1, 2) * (vw + wv))) return failed("pair formula");
    return ok();
}

Outcome inv_sym_end_identity() {
    for (int dim = 2; dim <= 3; ++dim) {
        Metric met = metric(GroupKind::Orthogonal, dim);
        // id ox id acting on E^{ox 2}: w[b;a] = delta_{b1 a1} delta_{b2 a2}
        std::vector<Variance> axes = {Variance::Covector, Variance::Covector, Variance::Vector,
                                      Variance::Vector};
        Tensor w(dim, axes);
        for (int b1 = 0; b1 < dim; ++b1)
            for (int b2 = 0; b2 < dim; ++b2) w.at({b1, b2, b1, b2}) = Rat(1);
        std::mt19937 rng(7);
        Tensor v = random_tensor(rng, dim, {Variance::Vector, Variance::Vector});
        if (!(sym_end_action(w, v) == v)) return failed("identity does not act as identity");
        (void)met;
    }
    return ok();
}

Outcome inv_symmetrizer_adjoint() {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 5; ++trial) {
        int dim = 2 + trial % 2;
        Tensor u = random_tensor(rng, dim, std::vector<Variance>(3, Variance::Covector));
        Tensor v = random_tensor(rng, dim, std::vector<Variance>(3, Variance::Vector));
        if (contract_full(symmetrize(u), v) != contract_full(u, symmetrize(v)))
            return failed("symmetrizer not self-adjoint");
    }
    return ok();
}

Outcome inv_cayley_zero() {
    // action on e1 ox e2 at n=2 is (1/2)(e1 ox e2 - e2 ox e1); kills e1 ox e1
    Tensor d0 = cayley_zero_tensor(2);
    Tensor e1 = Tensor::basis_vector(2, 0), e2 = Tensor::basis_vector(2, 1);
    Tensor got = sym_end_action(d0, tensor_product(e1, e2));
    Tensor expect = rat(1, 2) * (tensor_product(e1, e2) - tensor_product(e2, e1));
    if (!(got == expect)) return failed("wrong scale on e1 ox e2");
    if (!sym_end_action(d0, tensor_product(e1, e1)).is_zero()) return failed("e1 ox e1 survives");
    for (int n = 2; n <= 3; ++n) {
        MatQ m = end_tensor_matrix(cayley_zero_tensor(n));
        if (rank(m) != 1) return failed("image not one-dimensional at n=" + std::to_string(n));
    }
    return ok();
}

Outcome inv_metric() {
    for (int dim : {2, 3}) {
        Metric met = metric(GroupKind::Orthogonal, dim);
        Tensor c = contract_axes(met.g, 0, met.g_inv, 0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (c.at({i, j}) != (i == j ? Rat(1) : Rat(0))) return failed("O inverse law");
        if (contract_full(met.g, met.g_inv) != Rat(dim)) return failed("O full contraction");
    }
    for (int dim : {2, 4}) {
        Metric met = metric(GroupKind::Symplectic, dim);
        Tensor c = contract_axes(met.g, 0, met.g_inv, 0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (c.at({i, j}) != (i == j ? Rat(1) : Rat(0))) return failed("Sp inverse law");
        if (contract_full(met.g, met.g_inv) != Rat(dim)) return failed("Sp full contraction");
    }
    return ok();
}

Outcome inv_gram() {
    // m=1 gram is [1] for both kinds
    for (auto kind : {GroupKind::Orthogonal, GroupKind::Symplectic})
        for (int dim : {2, 4}) {
            MatQ g = gram_matrix(1, dim, kind);
            if (!(g.rows() == 1 && g.at(0, 0) == Rat(1)))
                return failed("m=1 gram != [1] for " + kind_name(kind) + std::to_string(dim));
        }
    // symmetry at m=2
    for (auto kind : {GroupKind::Orthogonal, GroupKind::Symplectic}) {
        int dim = kind == GroupKind::Orthogonal ? 3 : 4;
        MatQ g = gram_matrix(2, dim, kind);
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < i; ++j)
                if (g.at(i, j) != g.at(j, i)) return failed("gram not symmetric");
    }
    // representative independence: two representatives of (2,1) at m=3, dim 2
    const int dim = 2;
    std::vector<std::vector<int>> reps = {{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    std::vector<CycleType> cts = cycle_types(3, admissible_max_part(GroupKind::Orthogonal, dim));
    std::vector<Rat> first;
    for (size_t r = 0; r < reps.size(); ++r) {
        Tensor w = build_w_sigma(reps[r], dim, GroupKind::Orthogonal);
        std::vector<Rat> row;
        for (const auto& ct : cts) {
            Tensor a = build_a_sigma(ct, dim, GroupKind::Orthogonal);
            row.push_back(contract_full(w, a) /
                          Rat(Int(dim * dim) * sigma_tilde_id(ct, dim)));
        }
        if (r == 0) first = row;
        else if (row != first) return failed("gram entries depend on the representative");
    }
    return ok();
}

Outcome inv_defining_system() {
    struct Case { GroupKind kind; int dim; int m; };
    const std::vector<Case> cases = {{GroupKind::Orthogonal, 2, 1},  {GroupKind::Orthogonal, 3, 1},
                                     {GroupKind::Orthogonal, 3, 2},  {GroupKind::Symplectic, 2, 1},
                                     {GroupKind::Symplectic, 4, 2}};
    for (const auto& c : cases) {
        Tensor w = integral_component(2 * c.m, c.dim, c.kind);
        for (const auto& ct : cycle_types(c.m, admissible_max_part(c.kind, c.dim))) {
            Tensor a = build_a_sigma(ct, c.dim, c.kind);
            Rat v = contract_full(w, a) / Rat(sigma_tilde_id(ct, c.dim));
            if (v != Rat(1))
                return failed("pairing with a_" + ct.str() + " = " + v.str() + " for " +
                              kind_name(c.kind) + std::to_string(c.dim) + " m=" +
                              std::to_string(c.m));
        }
    }
    return ok();
}

Outcome inv_projection_dim4() {
    auto gens = signed_permutations(4);
    for (int m = 1; m <= 2; ++m) {
        Tensor w = integral_component(2 * m, 4, GroupKind::Orthogonal);
        MatQ mat = end_tensor_matrix(w);
        if (!(mat * mat == mat)) return failed("O dim 4 m=" + std::to_string(m) + " not idempotent");
        if (rank(mat) != lie_invariant_dim_oracle(LieKind::Orthogonal, 4, 2 * m))
            return failed("O dim 4 m=" + std::to_string(m) + " rank mismatch");
        for (const auto& [s, si] : gens) {
            MatQ sk = kron_power(s, 2 * m), ski = kron_power(si, 2 * m);
            if (!(sk * mat * ski == mat))
                return failed("O dim 4 m=" + std::to_string(m) + " not conjugation-invariant");
        }
    }
    return ok();
}

Outcome inv_basis_rank() {
    struct Case { GroupKind kind; int dim; int m; };
    const std::vector<Case> cases = {{GroupKind::Orthogonal, 2, 2},  {GroupKind::Orthogonal, 3, 1},
                                     {GroupKind::Orthogonal, 3, 2},  {GroupKind::Symplectic, 2, 2},
                                     {GroupKind::Symplectic, 4, 2}};
    for (const auto& c : cases) {
        int r = span_rank(orthosymplectic_invariant_basis(c.m, c.dim, c.kind));
        int oracle = lie_invariant_dim_oracle(to_lie(c.kind), c.dim, 2 * c.m);
        if (r != oracle)
            return failed(kind_name(c.kind) + std::to_string(c.dim) + " m=" + std::to_string(c.m) +
                          ": basis rank " + std::to_string(r) + " != oracle " +
                          std::to_string(oracle));
    }
    return ok();
}

template <class K>
Outcome equivariance_suite(const fg::FiniteGroup& g, const fg::IrrepTable<K>& t) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 3; ++trial) {
        auto a = random_fn<K>(rng, g.order);
        auto fa = fg::fourier(g, t, a);
        for (int x = 0; x < g.order; ++x) {
            auto left = fg::fourier(g, t, fg::translate_left(g, a, x));
            auto right = fg::fourier(g, t, fg::translate_right(g, a, x));
            for (size_t i = 0; i < t.irreps.size(); ++i) {
                if (!left[i].approx_equal(t.irreps[i].rho[x] * fa[i]))
                    return failed("left equivariance");
                if (!right[i].approx_equal(fa[i] * t.irreps[i].rho[x]))
                    return failed("right equivariance");
            }
        }
        // * o F = F o *
        auto s1 = fg::dual_star(g, t, fa);
        auto s2 = fg::fourier(g, t, fg::star(g, a));
        for (size_t i = 0; i < t.irreps.size(); ++i)
            if (!s1[i].approx_equal(s2[i])) return failed("star compatibility");
    }
    // w_G idempotent
    fg::GroupFunction<K> one(g.order, fg::ScalarOps<K>::one());
    auto wg = fg::fourier(g, t, one);
    auto sq = fg::dual_product(wg, wg);
    for (size_t i = 0; i < wg.size(); ++i)
        if (!sq[i].approx_equal(wg[i])) return failed("w_G not idempotent");
    return ok();
}

Outcome inv_fourier_equivariance() {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    Outcome o = equivariance_suite<Rat>(s3, irr.rat);
    if (!o.pass) return o;
    auto d4 = load_group("d4");
    auto irr4 = load_irreps("d4");
    return equivariance_suite<Rat>(d4, irr4.rat);
}

Outcome inv_harmonic_d4() {
    auto d4 = load_group("d4");
    auto irr4 = load_irreps("d4");
    return harmonic_suite<Rat>(d4, irr4.rat);
}

Outcome inv_peter_weyl_more() {
    auto d4 = load_group("d4");
    auto irr4 = load_irreps("d4");
    try {
        fg::peter_weyl_gram(d4, irr4.rat);
    } catch (const error& e) {
        return failed(std::string("D4: ") + e.what());
    }
    auto c3 = load_group("c3");
    auto irr3 = load_irreps("c3");
    try {
        fg::peter_weyl_gram(c3, irr3.cplx);
    } catch (const error& e) {
        return failed(std::string("C3: ") + e.what());
    }
    // trivial group
    auto triv = fg::FiniteGroup::from_table({{0}});
    fg::IrrepTable<Rat> tt;
    tt.irreps.push_back({1, {fg::Mat<Rat>::identity(1)}});
    auto gram = fg::peter_weyl_gram(triv, tt);
    if (!(gram.size() == 1 && gram[0][0] == Rat(1))) return failed("trivial group gram != [1]");
    return ok();
}

Outcome inv_poisson_degenerate() {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    std::mt19937 rng(10);
    for (int trial = 0; trial < 3; ++trial) {
        auto a = random_fn<Rat>(rng, s3.order);
        std::vector<int> whole(s3.order);
        std::iota(whole.begin(), whole.end(), 0);
        auto rep = fg::poisson_check(s3, whole, a, irr.rat);
        if (!rep.equal || rep.lhs != fg::invariant_integral(s3, a))
            return failed("H = G case");
        rep = fg::poisson_check(s3, {s3.identity}, a, irr.rat);
        if (!rep.equal || rep.lhs != a[s3.identity]) return failed("H = {e} case");
        auto rep2 = fg::poisson_check(s3, {0, 4, 5}, a, irr.rat);
        if (!rep2.equal) return failed("H = A3 case on random function");
    }
    return ok();
}

Outcome inv_integral_examples() {
    auto s3 = load_group("s3");
    auto irr = load_irreps("s3");
    fg::GroupFunction<Rat> one(s3.order, Rat(1));
    if (fg::invariant_integral(s3, one) != Rat(1)) return failed("w(1) != 1");
    fg::GroupFunction<Rat> chireg(s3.order, Rat(0));
    chireg[s3.identity] = Rat(6);
    if (fg::invariant_integral(s3, chireg) != Rat(1)) return failed("w(chi_reg) != 1");
    auto sign = fg::character(s3, irr.rat, 1);
    if (!fg::invariant_integral(s3, sign).is_zero()) return failed("w(sign) != 0");
    // translation invariance
    std::mt19937 rng(12);
    auto a = random_fn<Rat>(rng, s3.order);
    for (int x = 0; x < s3.order; ++x)
        if (fg::invariant_integral(s3, fg::translate_left(s3, a, x)) !=
            fg::invariant_integral(s3, a))
            return failed("translation invariance");
    return ok();
}

struct Check {
    int criterion;  // 0 for module invariants
    std::string name;
    std::function<Outcome()> fn;
};

const std::vector<Check>& criteria() {
    static const std::vector<Check> cs = {
        {1, "Cayley lemma D(det^r) = mu_r det^(r-1), n,r <= 3", crit_cayley_lemma},
        {2, "D^r(det^r) = mu_r...mu_1 vs literal differentiation, n,r <= 3", crit_cayley_power},
        {3, "Sl_2 invariant dimensions: Catalan numbers and Lie oracle", crit_sl2_dimensions},
        {4, "sl integral vanishes on det^r - det^(r-1), n,r <= 3", crit_sl_ideal_vanishing},
        {5, "O_n Weingarten m=1 coefficient 1/n, n in {2,3,4,5}", crit_o_m1},
        {6, "O_n Weingarten m=2 reference coefficients, n in {2,3,4,5}", crit_o_m2_reference},
        {7, "Sp Weingarten m=1 dims {2,4,6} and m=2 dims {4,6} reference", crit_sp_reference},
        {8, "projection idempotence, rank = oracle, group invariance", crit_projection},
        {9, "odd-degree invariants vanish (component and oracle)", crit_odd_vanishing},
        {10, "finite harmonic suite on S3 (exact) and C5 (1e-9)", crit_harmonic},
        {11, "isotypic ranks {1,1,4} for the regular rep of S3", crit_isotypic},
    };
    return cs;
}

const std::vector<Check>& invariants() {
    static const std::vector<Check> cs = {
        {0, "poly ring axioms (randomized)", inv_poly_ring_axioms},
        {0, "Leibniz rule for partials (randomized)", inv_leibniz},
        {0, "det is homogeneous with n! terms", inv_det_homogeneous},
        {0, "gl normalization w(det^s/det^s) = 1", inv_gl_normalization},
        {0, "gl integral vanishes off degree ns", inv_gl_off_degree},
        {0, "sl/gl agreement on the degree-0 overlap", inv_sl_gl_consistency},
        {0, "factor permutation is a group action", inv_permute_action},
        {0, "symmetrize is idempotent", inv_symmetrize},
        {0, "identity acts as identity through sym_end_action", inv_sym_end_identity},
        {0, "symmetrizer is self-adjoint under the pairing", inv_symmetrizer_adjoint},
        {0, "cayley zero tensor: scale and alternating image", inv_cayley_zero},
        {0, "metric inverse and contraction identities", inv_metric},
        {0, "gram: m=1 calibration, symmetry, representative independence", inv_gram},
        {0, "defining system: [w]_2m pairs to 1 against a_sigma", inv_defining_system},
        {0, "invariant basis rank equals the Lie oracle", inv_basis_rank},
        {0, "projection suite at dim 4 (idempotent, rank, invariance)", inv_projection_dim4},
        {0, "fourier equivariance, star compatibility, w_G idempotent", inv_fourier_equivariance},
        {0, "harmonic suite on D4 (exact)", inv_harmonic_d4},
        {0, "peter-weyl on D4, C3 and the trivial group", inv_peter_weyl_more},
        {0, "poisson: degenerate subgroups and A3 on random functions", inv_poisson_degenerate},
        {0, "invariant integral examples and translation invariance", inv_integral_examples},
    };
    return cs;
}

int run_checks(std::ostream& os, const std::vector<Check>& checks) {
    int failures = 0;
    for (const auto& c : checks) {
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o = failed(std::string("exception: ") + e.what());
        }
        std::string label = c.criterion ? "criterion " + std::to_string(c.criterion) : "invariant";
        os << (o.pass ? "PASS  " : "FAIL  ") << label << ": " << c.name;
        if (!o.pass) {
            os << " -- " << o.detail;
            ++failures;
        }
        os << "\n";
        os.flush();
    }
    return failures;
}

}  // namespace

int run_acceptance(std::ostream& os) { return run_checks(os, criteria()); }

int run_all(std::ostream& os) {
    int f = run_checks(os, criteria());
    f += run_checks(os, invariants());
    return f;
}

}  // namespace invint::selftest
