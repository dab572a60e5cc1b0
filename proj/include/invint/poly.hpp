#ifndef INVINT_POLY_HPP
#define INVINT_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "invint/rational.hpp"

namespace invint {

// Exponent vector over the n^2 matrix entries x_{ij}, keyed (i,j) row-major.
using Exps = std::vector<int>;

int total_degree(const Exps& e);

// Graded lexicographic, leading term first.
struct GrlexGreater {
    bool operator()(const Exps& a, const Exps& b) const;
};

using TermMap = std::map<Exps, Rat, GrlexGreater>;

// Multivariate polynomial in the entries of one fixed n x n matrix,
// exact rational coefficients, no stored zero terms.
class Poly {
  public:
    explicit Poly(int n);
    static Poly constant(int n, const Rat& c);
    // 1-based (i, j).
    static Poly variable(int n, int i, int j);

    int n() const { return n_; }
    int nvars() const { return n_ * n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial

    void add_term(const Exps& e, const Rat& c);

    Rat eval_at_zero() const;  // constant term
    Poly homogeneous_component(int d) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, Poly p);
    friend Poly operator-(Poly p);
    Poly pow(int k) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    int n_;
    TermMap terms_;
};

// Constant-coefficient differential operator: a polynomial in the partials
// d/dx_{ij}, same normalization rules as Poly.
class DiffOp {
  public:
    explicit DiffOp(int n) : body_(n) {}
    static DiffOp partial(int n, int i, int j) { return DiffOp(Poly::variable(n, i, j)); }
    explicit DiffOp(Poly body) : body_(std::move(body)) {}

    int n() const { return body_.n(); }
    const TermMap& terms() const { return body_.terms(); }
    bool is_zero() const { return body_.is_zero(); }
    void add_term(const Exps& e, const Rat& c) { body_.add_term(e, c); }

    friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
        return DiffOp(a.body_ * b.body_);
    }
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.body_ == b.body_; }

    std::string str() const;

  private:
    Poly body_;
};

// det(x_{ij}) as the signed sum over S_n; n! terms.
Poly poly_det(int n);

Poly poly_mul(const Poly& p, const Poly& q);
Poly homogeneous_component(const Poly& p, int d);
Rat eval_at_zero(const Poly& p);

// Iterated partial differentiation, linear in both arguments.
Poly apply_diff_op(const DiffOp& op, const Poly& p);

}  // namespace invint

#endif
