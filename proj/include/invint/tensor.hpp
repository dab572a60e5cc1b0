#ifndef INVINT_TENSOR_HPP
#define INVINT_TENSOR_HPP

#include <cstddef>
#include <vector>

#include "invint/linalg.hpp"
#include "invint/rational.hpp"

namespace invint {

enum class Variance { Vector, Covector };

enum class GroupKind { Orthogonal, Symplectic };

Variance dual(Variance v);

// Dense tensor over E = k^dim with variance-tagged axes.
// Entries are stored row-major, axis 0 most significant, indices 0-based.
class Tensor {
  public:
    Tensor(int dim, std::vector<Variance> axes);
    static Tensor scalar(int dim, const Rat& value);
    static Tensor basis_vector(int dim, int i);  // e_i, 0-based

    int dim() const { return dim_; }
    int order() const { return static_cast<int>(axes_.size()); }
    const std::vector<Variance>& axes() const { return axes_; }
    size_t size() const { return e_.size(); }

    Rat& operator[](size_t flat) { return e_[flat]; }
    const Rat& operator[](size_t flat) const { return e_[flat]; }
    Rat& at(const std::vector<int>& idx) { return e_[offset(idx)]; }
    const Rat& at(const std::vector<int>& idx) const { return e_[offset(idx)]; }
    size_t offset(const std::vector<int>& idx) const;

    bool is_zero() const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    friend Tensor operator+(Tensor a, const Tensor& b) { a += b; return a; }
    friend Tensor operator-(Tensor a, const Tensor& b) { a -= b; return a; }
    friend Tensor operator*(const Rat& c, Tensor t);
    friend bool operator==(const Tensor& a, const Tensor& b);

  private:
    int dim_;
    std::vector<Variance> axes_;
    std::vector<Rat> e_;
};

Tensor tensor_product(const Tensor& a, const Tensor& b);

// Left action: the factor at slot i moves to slot perm[i] (0-based).
// perm must preserve the axes list.
Tensor permute_factors(const Tensor& t, const std::vector<int>& perm);

// (1/k!) sum over all permutations; requires all axes of one variance.
Tensor symmetrize(const Tensor& t);

// For elements of End(E)^{ox k} stored as [k covector axes, k vector axes]
// (or the dual layout): averages over S_k acting on both blocks at once.
Tensor symmetrize_end(const Tensor& t);

// Full positional contraction; axes must be pairwise dual in matching order.
Rat contract_full(const Tensor& u, const Tensor& v);

// Contracts one axis pair (dual variances) into a new tensor.
Tensor contract_axes(const Tensor& u, int axis_u, const Tensor& v, int axis_v);

// Applies w in End(E)^{ox k} (layout [cov x k, vec x k]) to v in E^{ox k}.
// Callers pass symmetrized w to realize the S^k End(E) action.
Tensor sym_end_action(const Tensor& w, const Tensor& v);

// The endomorphism-valued matrix view of w in End(E)^{ox k}:
// rows = vector multi-index, cols = covector multi-index.
MatQ end_tensor_matrix(const Tensor& w);

// Rank of the span of equally-shaped tensors.
int span_rank(const std::vector<Tensor>& ts);

struct Metric {
    GroupKind kind;
    int dim;
    Tensor g;      // two covector axes
    Tensor g_inv;  // two vector axes
};

// Orthogonal: identity form. Symplectic: g = [[0,-I],[I,0]]; g_inv is its
// inverse form in the first-slot pairing convention (same numeric entries).
Metric metric(GroupKind kind, int dim);

// D_0 realized inside End(E)^{ox n}: the symmetrized signed sum over S_n of
// elementary-matrix products; its action on E^{ox n} has image Lambda^n E.
Tensor cayley_zero_tensor(int n);

}  // namespace invint

#endif
