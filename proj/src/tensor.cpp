#include "invint/tensor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace invint {

Variance dual(Variance v) {
    return v == Variance::Vector ? Variance::Covector : Variance::Vector;
}

namespace {

size_t pow_sz(int base, int exp) {
    size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<size_t>(base);
    return r;
}

bool next_index(std::vector<int>& idx, int dim) {
    for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
        if (++idx[i] < dim) return true;
        idx[i] = 0;
    }
    return false;
}

}  // namespace

Tensor::Tensor(int dim, std::vector<Variance> axes)
    : dim_(dim), axes_(std::move(axes)), e_(pow_sz(dim, static_cast<int>(axes_.size()))) {
    check(dim >= 1, "Tensor: dim must be >= 1");
}

Tensor Tensor::scalar(int dim, const Rat& value) {
    Tensor t(dim, {});
    t.e_[0] = value;
    return t;
}

Tensor Tensor::basis_vector(int dim, int i) {
    check(0 <= i && i < dim, "Tensor: basis index out of range");
    Tensor t(dim, {Variance::Vector});
    t.e_[i] = Rat(1);
    return t;
}

size_t Tensor::offset(const std::vector<int>& idx) const {
    check(idx.size() == axes_.size(), "Tensor: index of wrong length");
    size_t off = 0;
    for (size_t k = 0; k < idx.size(); ++k) {
        check(0 <= idx[k] && idx[k] < dim_, "Tensor: index out of range");
        off = off * dim_ + idx[k];
    }
    return off;
}

bool Tensor::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& r) { return r.is_zero(); });
}

Tensor& Tensor::operator+=(const Tensor& o) {
    check(dim_ == o.dim_ && axes_ == o.axes_, "Tensor: shape mismatch in sum");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    check(dim_ == o.dim_ && axes_ == o.axes_, "Tensor: shape mismatch in difference");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

Tensor operator*(const Rat& c, Tensor t) {
    for (auto& x : t.e_) x *= c;
    return t;
}

bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.axes_ == b.axes_ && a.e_ == b.e_;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
    check(a.dim() == b.dim(), "tensor_product: dim mismatch");
    std::vector<Variance> axes = a.axes();
    axes.insert(axes.end(), b.axes().begin(), b.axes().end());
    Tensor r(a.dim(), axes);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

Tensor permute_factors(const Tensor& t, const std::vector<int>& perm) {
    int k = t.order();
    check(static_cast<int>(perm.size()) == k, "permute_factors: length mismatch");
    std::vector<bool> seen(k, false);
    for (int i = 0; i < k; ++i) {
        check(0 <= perm[i] && perm[i] < k && !seen[perm[i]], "permute_factors: not a permutation");
        seen[perm[i]] = true;
        check(t.axes()[perm[i]] == t.axes()[i], "permute_factors: permutation mixes variances");
    }
    Tensor r(t.dim(), t.axes());
    std::vector<int> idx(k, 0), g(k, 0);
    if (k == 0) { r[0] = t[0]; return r; }
    do {
        for (int i = 0; i < k; ++i) g[i] = idx[perm[i]];
        r.at(idx) = t.at(g);
    } while (next_index(idx, t.dim()));
    return r;
}

namespace {

void for_each_perm(int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do f(p);
    while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

Tensor symmetrize(const Tensor& t) {
    int k = t.order();
    for (auto v : t.axes())
        check(v == t.axes()[0], "symmetrize: mixed variances (use symmetrize_end)");
    if (k <= 1) return t;
    Tensor acc(t.dim(), t.axes());
    std::vector<int> idx(k, 0), g(k, 0);
    long count = 0;
    for_each_perm(k, [&](const std::vector<int>& p) {
        ++count;
        std::fill(idx.begin(), idx.end(), 0);
        do {
            for (int i = 0; i < k; ++i) g[i] = idx[p[i]];
            acc.at(idx) += t.at(g);
        } while (next_index(idx, t.dim()));
    });
    return Rat(Int(1), Int(count)) * acc;
}

Tensor symmetrize_end(const Tensor& t) {
    int n2 = t.order();
    check(n2 % 2 == 0, "symmetrize_end: odd axis count");
    int k = n2 / 2;
    for (int i = 0; i < k; ++i) {
        check(t.axes()[i] == t.axes()[0], "symmetrize_end: first block not uniform");
        check(t.axes()[k + i] == dual(t.axes()[0]), "symmetrize_end: second block not dual");
    }
    if (k <= 1) return t;
    Tensor acc(t.dim(), t.axes());
    std::vector<int> idx(n2, 0), g(n2, 0);
    long count = 0;
    for_each_perm(k, [&](const std::vector<int>& p) {
        ++count;
        std::fill(idx.begin(), idx.end(), 0);
        do {
            for (int i = 0; i < k; ++i) {
                g[i] = idx[p[i]];
                g[k + i] = idx[k + p[i]];
            }
            acc.at(idx) += t.at(g);
        } while (next_index(idx, t.dim()));
    });
    return Rat(Int(1), Int(count)) * acc;
}

Rat contract_full(const Tensor& u, const Tensor& v) {
    check(u.dim() == v.dim() && u.order() == v.order(), "contract_full: shape mismatch");
    for (int i = 0; i < u.order(); ++i)
        check(u.axes()[i] == dual(v.axes()[i]), "contract_full: axes not dual in matching order");
    Rat s(0);
    for (size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
    return s;
}

Tensor contract_axes(const Tensor& u, int axis_u, const Tensor& v, int axis_v) {
    check(u.dim() == v.dim(), "contract_axes: dim mismatch");
    check(0 <= axis_u && axis_u < u.order() && 0 <= axis_v && axis_v < v.order(),
          "contract_axes: axis out of range");
    check(u.axes()[axis_u] == dual(v.axes()[axis_v]), "contract_axes: axes not dual");
    std::vector<Variance> axes;
    for (int i = 0; i < u.order(); ++i)
        if (i != axis_u) axes.push_back(u.axes()[i]);
    for (int i = 0; i < v.order(); ++i)
        if (i != axis_v) axes.push_back(v.axes()[i]);
    Tensor r(u.dim(), axes);
    int ku = u.order(), kv = v.order();
    std::vector<int> iu(ku, 0), iv(kv, 0);
    std::vector<int> idx(r.order(), 0);
    bool more = true;
    if (r.order() == 0) {
        Rat s(0);
        for (int c = 0; c < u.dim(); ++c) {
            iu[axis_u] = c;
            iv[axis_v] = c;
            s += u.at(iu) * v.at(iv);
        }
        r[0] = s;
        return r;
    }
    while (more) {
        int pos = 0;
        for (int i = 0; i < ku; ++i)
            if (i != axis_u) iu[i] = idx[pos++];
        for (int i = 0; i < kv; ++i)
            if (i != axis_v) iv[i] = idx[pos++];
        Rat s(0);
        for (int c = 0; c < u.dim(); ++c) {
            iu[axis_u] = c;
            iv[axis_v] = c;
            s += u.at(iu) * v.at(iv);
        }
        r.at(idx) = s;
        more = next_index(idx, r.dim());
    }
    return r;
}

Tensor sym_end_action(const Tensor& w, const Tensor& v) {
    int k = v.order();
    check(w.order() == 2 * k, "sym_end_action: operand shape mismatch");
    check(w.dim() == v.dim(), "sym_end_action: dim mismatch");
    for (int i = 0; i < k; ++i) {
        check(w.axes()[i] == Variance::Covector && w.axes()[k + i] == Variance::Vector,
              "sym_end_action: w must be [cov x k, vec x k]");
        check(v.axes()[i] == Variance::Vector, "sym_end_action: v must be a vector tensor");
    }
    size_t N = v.size();
    Tensor r(v.dim(), v.axes());
    for (size_t b = 0; b < N; ++b) {
        if (v[b].is_zero()) continue;
        for (size_t a = 0; a < N; ++a) {
            const Rat& wv = w[b * N + a];
            if (!wv.is_zero()) r[a] += wv * v[b];
        }
    }
    return r;
}

MatQ end_tensor_matrix(const Tensor& w) {
    int k2 = w.order();
    check(k2 % 2 == 0, "end_tensor_matrix: odd axis count");
    size_t N = pow_sz(w.dim(), k2 / 2);
    MatQ m(static_cast<int>(N), static_cast<int>(N));
    for (size_t b = 0; b < N; ++b)
        for (size_t a = 0; a < N; ++a) m.at(static_cast<int>(a), static_cast<int>(b)) = w[b * N + a];
    return m;
}

int span_rank(const std::vector<Tensor>& ts) {
    if (ts.empty()) return 0;
    MatQ m(static_cast<int>(ts.size()), static_cast<int>(ts[0].size()));
    for (size_t r = 0; r < ts.size(); ++r) {
        check(ts[r].size() == ts[0].size(), "span_rank: shape mismatch");
        for (size_t c = 0; c < ts[r].size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = ts[r][c];
    }
    return rank(std::move(m));
}

Metric metric(GroupKind kind, int dim) {
    check(dim >= 1, "metric: dim must be >= 1");
    Tensor g(dim, {Variance::Covector, Variance::Covector});
    Tensor ginv(dim, {Variance::Vector, Variance::Vector});
    if (kind == GroupKind::Orthogonal) {
        for (int i = 0; i < dim; ++i) {
            g.at({i, i}) = Rat(1);
            ginv.at({i, i}) = Rat(1);
        }
    } else {
        check(dim % 2 == 0, "metric: symplectic dim must be even");
        int h = dim / 2;
        for (int i = 0; i < h; ++i) {
            g.at({i, h + i}) = Rat(-1);
            g.at({h + i, i}) = Rat(1);
            ginv.at({i, h + i}) = Rat(-1);
            ginv.at({h + i, i}) = Rat(1);
        }
    }
    return Metric{kind, dim, std::move(g), std::move(ginv)};
}

Tensor cayley_zero_tensor(int n) {
    check(n >= 1 && n <= max_matrix_dim(), "cayley_zero_tensor: n out of bounds");
    std::vector<Variance> axes(2 * n, Variance::Covector);
    for (int i = 0; i < n; ++i) axes[n + i] = Variance::Vector;
    Tensor w(n, axes);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> idx(2 * n);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        for (int i = 0; i < n; ++i) {
            idx[i] = perm[i];  // covector (input) index of slot i
            idx[n + i] = i;    // vector (output) index of slot i
        }
        w.at(idx) += Rat(inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return symmetrize_end(w);
}

}  // namespace invint
