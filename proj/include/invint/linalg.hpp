#ifndef INVINT_LINALG_HPP
#define INVINT_LINALG_HPP

#include <vector>

#include "invint/rational.hpp"

namespace invint {

// Dense exact-rational matrix, row-major.
class MatQ {
  public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    static MatQ identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    friend MatQ operator*(const MatQ& a, const MatQ& b);
    friend bool operator==(const MatQ& a, const MatQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Rank by exact Gaussian elimination (destroys a working copy).
int rank(MatQ m);

// Solves A x = b for square nonsingular A; throws error if singular.
std::vector<Rat> solve(MatQ a, std::vector<Rat> b);

// Basis of the right null space, as columns.
std::vector<std::vector<Rat>> nullspace(MatQ m);

}  // namespace invint

#endif
