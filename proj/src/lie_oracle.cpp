#include "invint/lie_oracle.hpp"

#include <string>

#include "invint/common.hpp"

namespace invint {

std::vector<MatQ> lie_generators(LieKind kind, int dim) {
    check(dim >= 1, "lie_generators: dim must be >= 1");
    std::vector<MatQ> gens;
    auto unit = [&](int i, int j) {
        MatQ m(dim, dim);
        m.at(i, j) = Rat(1);
        return m;
    };
    switch (kind) {
        case LieKind::SpecialLinear: {
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    if (i != j) gens.push_back(unit(i, j));
            for (int i = 0; i + 1 < dim; ++i) {
                MatQ m(dim, dim);
                m.at(i, i) = Rat(1);
                m.at(i + 1, i + 1) = Rat(-1);
                gens.push_back(m);
            }
            break;
        }
        case LieKind::Orthogonal: {
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) {
                    MatQ m(dim, dim);
                    m.at(i, j) = Rat(1);
                    m.at(j, i) = Rat(-1);
                    gens.push_back(m);
                }
            break;
        }
        case LieKind::Symplectic: {
            check(dim % 2 == 0, "lie_generators: symplectic dim must be even");
            int h = dim / 2;
            // X = [[A, B], [C, -A^T]] with B, C symmetric
            for (int i = 0; i < h; ++i)
                for (int j = 0; j < h; ++j) {
                    MatQ m(dim, dim);
                    m.at(i, j) = Rat(1);
                    m.at(h + j, h + i) = Rat(-1);
                    gens.push_back(m);
                }
            for (int i = 0; i < h; ++i)
                for (int j = i; j < h; ++j) {
                    MatQ b(dim, dim);
                    b.at(i, h + j) = Rat(1);
                    b.at(j, h + i) = Rat(1);
                    gens.push_back(b);
                    MatQ c(dim, dim);
                    c.at(h + i, j) = Rat(1);
                    c.at(h + j, i) = Rat(1);
                    gens.push_back(c);
                }
            break;
        }
    }
    return gens;
}

namespace {

size_t pow_sz(int base, int exp) {
    size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<size_t>(base);
    return r;
}

// Leibniz action of X on E^{ox k} as an N x N matrix, N = dim^k.
MatQ leibniz_action(const MatQ& x, int dim, int k) {
    size_t n = pow_sz(dim, k);
    MatQ act(static_cast<int>(n), static_cast<int>(n));
    std::vector<int> idx(k, 0);
    for (size_t col = 0; col < n; ++col) {
        size_t rest = col;
        for (int s = k - 1; s >= 0; --s) {
            idx[s] = static_cast<int>(rest % dim);
            rest /= dim;
        }
        for (int s = 0; s < k; ++s) {
            size_t stride = pow_sz(dim, k - 1 - s);
            size_t base = col - idx[s] * stride;
            for (int i = 0; i < dim; ++i) {
                const Rat& v = x.at(i, idx[s]);
                if (!v.is_zero()) act.at(static_cast<int>(base + i * stride), static_cast<int>(col)) += v;
            }
        }
    }
    return act;
}

}  // namespace

int lie_invariant_dim_oracle(LieKind kind, int dim, int k) {
    check(k >= 0, "lie_invariant_dim_oracle: k must be >= 0");
    double sz = 1;
    for (int i = 0; i < k; ++i) sz *= dim;
    check(sz <= 4096.0, "lie_invariant_dim_oracle: dim^k = " + std::to_string(sz) +
                            " exceeds the 4096 bound");
    if (k == 0) return 1;
    size_t n = pow_sz(dim, k);
    std::vector<MatQ> gens = lie_generators(kind, dim);
    int extra_rows = kind == LieKind::Orthogonal ? static_cast<int>(n) : 0;
    MatQ stacked(static_cast<int>(gens.size() * n) + extra_rows, static_cast<int>(n));
    int row0 = 0;
    for (const auto& g : gens) {
        MatQ act = leibniz_action(g, dim, k);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) {
                const Rat& v = act.at(static_cast<int>(r), static_cast<int>(c));
                if (!v.is_zero()) stacked.at(row0 + static_cast<int>(r), static_cast<int>(c)) = v;
            }
        row0 += static_cast<int>(n);
    }
    if (kind == LieKind::Orthogonal) {
        // rows of R^{ox k} - I for the reflection R = diag(-1,1,...,1):
        // diagonal with entry (-1)^{#slots equal to 0} - 1.
        for (size_t c = 0; c < n; ++c) {
            size_t rest = c;
            int zeros = 0;
            for (int s = k - 1; s >= 0; --s) {
                if (rest % dim == 0) ++zeros;
                rest /= dim;
            }
            if (zeros % 2 == 1) stacked.at(row0 + static_cast<int>(c), static_cast<int>(c)) = Rat(-2);
        }
    }
    return static_cast<int>(nullspace(std::move(stacked)).size());
}

}  // namespace invint
