#include "invint/linalg.hpp"

#include <utility>

namespace invint {

MatQ MatQ::identity(int n) {
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
    check(a.cols_ == b.rows_, "MatQ: shape mismatch in product");
    MatQ r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rat& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

namespace {

// In-place row echelon; returns pivot columns.
std::vector<int> echelon(MatQ& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rat f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(MatQ m) { return static_cast<int>(echelon(m).size()); }

std::vector<Rat> solve(MatQ a, std::vector<Rat> b) {
    check(a.rows() == a.cols(), "solve: matrix not square");
    check(static_cast<int>(b.size()) == a.rows(), "solve: rhs of wrong length");
    int n = a.rows();
    MatQ aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    std::vector<int> piv = echelon(aug);
    if (static_cast<int>(piv.size()) != n || piv.back() == n)
        throw error("solve: singular matrix");
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = aug.at(i, n);
    return x;
}

std::vector<std::vector<Rat>> nullspace(MatQ m) {
    int n = m.cols();
    std::vector<int> piv = echelon(m);
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_piv[free]) continue;
        std::vector<Rat> v(n);
        v[free] = Rat(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace invint
