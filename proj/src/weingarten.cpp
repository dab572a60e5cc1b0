#include "invint/weingarten.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace invint {

int CycleType::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string CycleType::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::string kind_name(GroupKind kind) {
    return kind == GroupKind::Orthogonal ? "O" : "Sp";
}

std::vector<CycleType> cycle_types(int m, int max_part) {
    check(m >= 0 && max_part >= 1, "cycle_types: need m >= 0, max_part >= 1");
    std::vector<CycleType> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(CycleType{cur});
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(m, max_part);
    return out;
}

std::vector<int> canonical_perm(const CycleType& ct) {
    std::vector<int> perm;
    int base = 0;
    for (int p : ct.parts) {
        check(p >= 1, "canonical_perm: nonpositive part");
        for (int k = 0; k < p; ++k) perm.push_back(base + (k + 1) % p);
        base += p;
    }
    return perm;
}

Int sigma_tilde_id(const CycleType& ct, int dim) {
    Int v = 1;
    for (int i = 0; i < ct.num_parts(); ++i) v *= dim;
    return v;
}

int admissible_max_part(GroupKind kind, int dim) {
    if (kind == GroupKind::Symplectic) {
        check(dim % 2 == 0, "admissible_max_part: symplectic dim must be even");
        return dim / 2;
    }
    return dim;
}

namespace {

struct SparseEntry {
    std::vector<int> b, a;  // 2m covector indices, 2m vector indices
    int v;                  // metric entries are +-1, so products stay integral
};

void check_admissible(const CycleType& ct, int dim, GroupKind kind) {
    int cap = admissible_max_part(kind, dim);
    for (int p : ct.parts)
        check(p <= cap, "cycle type " + ct.str() + " inadmissible for " + kind_name(kind) +
                            " at dim " + std::to_string(dim));
}

// Nonzero entries of the unsymmetrized representative
// W0[b;a] = prod_i g[b_{2i}, b_{2i+1}] * prod_i g_inv[a_{2i}, a_{2 sigma(i)+1}].
std::vector<SparseEntry> w_sigma_raw_perm(const std::vector<int>& sigma, int dim,
                                          GroupKind kind) {
    check_admissible(cycle_type_of(sigma), dim, kind);
    const int m = static_cast<int>(sigma.size());
    const Metric met = metric(kind, dim);

    struct Nz { int x, y, v; };
    std::vector<Nz> gnz;
    for (int x = 0; x < dim; ++x)
        for (int y = 0; y < dim; ++y) {
            const Rat& v = met.g.at({x, y});
            if (!v.is_zero()) gnz.push_back({x, y, v == Rat(1) ? 1 : -1});
        }
    // g and g_inv carry the same entries in this basis (see header comment)

    std::vector<SparseEntry> out;
    std::vector<int> covpick(m, 0), vecpick(m, 0);
    const int K = static_cast<int>(gnz.size());
    std::function<void(int)> recv = [&](int vi) {
        if (vi == m) {
            SparseEntry e;
            e.b.assign(2 * m, 0);
            e.a.assign(2 * m, 0);
            e.v = 1;
            for (int i = 0; i < m; ++i) {
                const Nz& c = gnz[covpick[i]];
                e.b[2 * i] = c.x;
                e.b[2 * i + 1] = c.y;
                e.v *= c.v;
                const Nz& w = gnz[vecpick[i]];
                e.a[2 * i] = w.x;
                e.a[2 * sigma[i] + 1] = w.y;
                e.v *= w.v;
            }
            out.push_back(std::move(e));
            return;
        }
        for (vecpick[vi] = 0; vecpick[vi] < K; ++vecpick[vi]) recv(vi + 1);
    };
    std::function<void(int)> recc = [&](int ci) {
        if (ci == m) {
            recv(0);
            return;
        }
        for (covpick[ci] = 0; covpick[ci] < K; ++covpick[ci]) recc(ci + 1);
    };
    recc(0);
    return out;
}

std::vector<SparseEntry> w_sigma_raw(const CycleType& ct, int dim, GroupKind kind) {
    check_admissible(ct, dim, kind);
    return w_sigma_raw_perm(canonical_perm(ct), dim, kind);
}

size_t pow_sz(int base, int exp) {
    size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<size_t>(base);
    return r;
}

Tensor scatter_raw(const std::vector<SparseEntry>& raw, int dim, int m, bool flipped) {
    // dense assembly plus (2m)!-fold symmetrization; keep it at desk scale
    double work = 1;
    for (int i = 0; i < 4 * m; ++i) work *= dim;
    for (int i = 2; i <= 2 * m; ++i) work *= i;
    check(work <= 1.1e9, "w_sigma: dim " + std::to_string(dim) + ", degree " + std::to_string(m) +
                             " is above the desk-scale bound");
    std::vector<Variance> axes(4 * m, flipped ? Variance::Vector : Variance::Covector);
    for (int i = 0; i < 2 * m; ++i) axes[2 * m + i] = flipped ? Variance::Covector : Variance::Vector;
    Tensor t(dim, axes);
    const size_t N = pow_sz(dim, 2 * m);
    for (const auto& e : raw) {
        size_t bo = 0, ao = 0;
        for (int i = 0; i < 2 * m; ++i) {
            bo = bo * dim + e.b[i];
            ao = ao * dim + e.a[i];
        }
        t[bo * N + ao] += Rat(e.v);
    }
    return t;
}

}  // namespace

CycleType cycle_type_of(const std::vector<int>& sigma) {
    const int m = static_cast<int>(sigma.size());
    std::vector<bool> seen(m, false);
    CycleType ct;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            check(0 <= sigma[j] && sigma[j] < m, "cycle_type_of: not a permutation");
            j = sigma[j];
            ++len;
        }
        ct.parts.push_back(len);
    }
    std::sort(ct.parts.rbegin(), ct.parts.rend());
    return ct;
}

Tensor build_w_sigma(const CycleType& ct, int dim, GroupKind kind) {
    const int m = ct.sum();
    check(m >= 1, "build_w_sigma: empty cycle type");
    return symmetrize_end(scatter_raw(w_sigma_raw(ct, dim, kind), dim, m, false));
}

Tensor build_a_sigma(const CycleType& ct, int dim, GroupKind kind) {
    const int m = ct.sum();
    check(m >= 1, "build_a_sigma: empty cycle type");
    return symmetrize_end(scatter_raw(w_sigma_raw(ct, dim, kind), dim, m, true));
}

Tensor build_w_sigma(const std::vector<int>& sigma, int dim, GroupKind kind) {
    const int m = static_cast<int>(sigma.size());
    check(m >= 1, "build_w_sigma: empty permutation");
    return symmetrize_end(scatter_raw(w_sigma_raw_perm(sigma, dim, kind), dim, m, false));
}

Tensor build_a_sigma(const std::vector<int>& sigma, int dim, GroupKind kind) {
    const int m = static_cast<int>(sigma.size());
    check(m >= 1, "build_a_sigma: empty permutation");
    return symmetrize_end(scatter_raw(w_sigma_raw_perm(sigma, dim, kind), dim, m, true));
}

MatQ gram_matrix(int m, int dim, GroupKind kind) {
    check(m >= 1, "gram_matrix: m must be >= 1");
    const std::vector<CycleType> cts = cycle_types(m, admissible_max_part(kind, dim));
    const int nc = static_cast<int>(cts.size());
    const size_t N = pow_sz(dim, 2 * m);

    std::vector<std::vector<SparseEntry>> raws;
    raws.reserve(nc);
    for (const auto& ct : cts) raws.push_back(w_sigma_raw(ct, dim, kind));

    // unsymmetrized a-side entries keyed b*N + a; values are +-1
    std::vector<std::unordered_map<size_t, int>> aside(nc);
    for (int j = 0; j < nc; ++j)
        for (const auto& e : raws[j]) {
            size_t bo = 0, ao = 0;
            for (int i = 0; i < 2 * m; ++i) {
                bo = bo * dim + e.b[i];
                ao = ao * dim + e.a[i];
            }
            aside[j][bo * N + ao] += e.v;
        }

    Int fact = factorial(2 * m);
    MatQ gram(nc, nc);
    std::vector<int> perm(2 * m);
    for (int i = 0; i < nc; ++i) {
        for (int j = 0; j < nc; ++j) {
            long long total = 0;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                for (const auto& e : raws[i]) {
                    size_t bo = 0, ao = 0;
                    for (int k = 0; k < 2 * m; ++k) {
                        bo = bo * dim + e.b[perm[k]];
                        ao = ao * dim + e.a[perm[k]];
                    }
                    auto hit = aside[j].find(bo * N + ao);
                    if (hit != aside[j].end())
                        total += static_cast<long long>(e.v) * hit->second;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            Int norm = fact * sigma_tilde_id(cts[i], dim) * sigma_tilde_id(cts[j], dim);
            gram.at(i, j) = Rat(Int(static_cast<long>(total)), norm);
        }
    }
    return gram;
}

const Rat& WeingartenTable::coeff(const CycleType& ct) const {
    for (const auto& [c, v] : coeffs)
        if (c == ct) return v;
    throw error("WeingartenTable: no coefficient for cycle type " + ct.str());
}

WeingartenTable weingarten_coefficients(int m, int dim, GroupKind kind) {
    check(m >= 0, "weingarten_coefficients: m must be >= 0");
    WeingartenTable table{kind, dim, m, {}};
    if (m == 0) {
        table.coeffs.emplace_back(CycleType{{}}, Rat(1));
        return table;
    }
    std::vector<CycleType> cts = cycle_types(m, admissible_max_part(kind, dim));
    check(!cts.empty(), "weingarten_coefficients: no admissible cycle types");
    MatQ gram = gram_matrix(m, dim, kind);
    std::vector<Rat> ones(cts.size(), Rat(1));
    std::vector<Rat> lambda;
    try {
        lambda = solve(std::move(gram), std::move(ones));
    } catch (const error&) {
        throw error("weingarten_coefficients: singular Gram matrix for kind=" + kind_name(kind) +
                    " dim=" + std::to_string(dim) + " m=" + std::to_string(m));
    }
    for (size_t i = 0; i < cts.size(); ++i)
        table.coeffs.emplace_back(cts[i], lambda[i] / Rat(sigma_tilde_id(cts[i], dim)));
    return table;
}

Tensor integral_component(int r, int dim, GroupKind kind) {
    check(r >= 0, "integral_component: degree must be >= 0");
    if (r == 0) return Tensor::scalar(dim, Rat(1));
    std::vector<Variance> axes(2 * r, Variance::Covector);
    for (int i = 0; i < r; ++i) axes[r + i] = Variance::Vector;
    if (r % 2 == 1) return Tensor(dim, axes);  // odd components vanish
    const int m = r / 2;
    WeingartenTable table = weingarten_coefficients(m, dim, kind);
    Tensor acc(dim, axes);
    for (const auto& [ct, c] : table.coeffs) acc += c * build_w_sigma(ct, dim, kind);
    return acc;
}

Tensor project_invariants(const Tensor& v, int dim, GroupKind kind) {
    check(v.dim() == dim, "project_invariants: dim mismatch");
    for (auto ax : v.axes())
        check(ax == Variance::Vector, "project_invariants: input must live in E^{ox k}");
    const int k = v.order();
    if (k == 0) return v;
    if (k % 2 == 1) return Tensor(dim, v.axes());
    return sym_end_action(integral_component(k, dim, kind), v);
}

std::vector<Tensor> orthosymplectic_invariant_basis(int m, int dim, GroupKind kind) {
    check(m >= 1, "orthosymplectic_invariant_basis: m must be >= 1");
    const Metric met = metric(kind, dim);
    Tensor base = met.g_inv;
    for (int i = 1; i < m; ++i) base = tensor_product(base, met.g_inv);
    std::vector<Tensor> out;
    std::vector<int> perm(2 * m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Tensor t = permute_factors(base, perm);
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace invint
