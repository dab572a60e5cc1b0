#include "invint/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace invint {

int total_degree(const Exps& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool GrlexGreater::operator()(const Exps& a, const Exps& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

Poly::Poly(int n) : n_(n) {
    check(n >= 1, "Poly: n must be >= 1");
}

Poly Poly::constant(int n, const Rat& c) {
    Poly p(n);
    p.add_term(Exps(n * n, 0), c);
    return p;
}

Poly Poly::variable(int n, int i, int j) {
    check(1 <= i && i <= n && 1 <= j && j <= n, "Poly: variable index out of range");
    Poly p(n);
    Exps e(n * n, 0);
    e[(i - 1) * n + (j - 1)] = 1;
    p.add_term(e, Rat(1));
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);  // leading term has max degree
}

void Poly::add_term(const Exps& e, const Rat& c) {
    check(static_cast<int>(e.size()) == nvars(), "Poly: exponent vector of wrong length");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rat Poly::eval_at_zero() const {
    auto it = terms_.find(Exps(nvars(), 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly Poly::homogeneous_component(int d) const {
    Poly r(n_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check(n_ == o.n_, "Poly: mismatched n");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check(n_ == o.n_, "Poly: mismatched n");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    check(a.n_ == b.n_, "Poly: mismatched n");
    Poly r(a.n_);
    Exps e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int v = 0; v < a.nvars(); ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Rat& c, Poly p) {
    if (c.is_zero()) return Poly(p.n_);
    for (auto& [e, q] : p.terms_) q *= c;
    return p;
}

Poly operator-(Poly p) {
    for (auto& [e, q] : p.terms_) q = -q;
    return p;
}

Poly Poly::pow(int k) const {
    check(k >= 0, "Poly: negative power");
    Poly r = Poly::constant(n_, Rat(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

namespace {

// All permutations of {0..n-1} with signs.
void signed_perms(int n, const std::function<void(const std::vector<int>&, int)>& f) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        f(p, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(p.begin(), p.end()));
}

std::string term_str(int n, const Exps& e, bool diff) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = e[i * n + j];
            if (k == 0) continue;
            if (!first) os << "*";
            first = false;
            os << (diff ? "d" : "x") << (i + 1) << (j + 1);
            if (k > 1) os << "^" << k;
        }
    return os.str();
}

std::string body_str(int n, const TermMap& terms, bool diff) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono = term_str(n, e, diff);
        Rat a = c;
        if (first) {
            if (a.sgn() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sgn() < 0 ? " - " : " + ");
            if (a.sgn() < 0) a = -a;
        }
        first = false;
        if (mono.empty()) {
            os << a.str();
        } else {
            if (!(a == Rat(1))) os << a.str() << "*";
            os << mono;
        }
    }
    return os.str();
}

}  // namespace

std::string Poly::str() const { return body_str(n_, terms_, false); }
std::string DiffOp::str() const { return body_str(n(), terms(), true); }

Poly poly_det(int n) {
    Poly r(n);
    signed_perms(n, [&](const std::vector<int>& p, int sgn) {
        Exps e(n * n, 0);
        for (int i = 0; i < n; ++i) e[i * n + p[i]] = 1;
        r.add_term(e, Rat(sgn));
    });
    return r;
}

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

Poly homogeneous_component(const Poly& p, int d) { return p.homogeneous_component(d); }

Rat eval_at_zero(const Poly& p) { return p.eval_at_zero(); }

Poly apply_diff_op(const DiffOp& op, const Poly& p) {
    check(op.n() == p.n(), "apply_diff_op: mismatched n");
    int nv = p.nvars();
    Poly r(p.n());
    Exps e(nv);
    for (const auto& [a, ca] : op.terms()) {
        for (const auto& [b, cb] : p.terms()) {
            Rat coeff = ca * cb;
            bool dead = false;
            for (int v = 0; v < nv && !dead; ++v) {
                if (a[v] == 0) { e[v] = b[v]; continue; }
                if (b[v] < a[v]) { dead = true; break; }
                // falling factorial b_v (b_v - 1) ... (b_v - a_v + 1)
                for (int k = 0; k < a[v]; ++k) coeff *= Rat(b[v] - k);
                e[v] = b[v] - a[v];
            }
            if (!dead) r.add_term(e, coeff);
        }
    }
    return r;
}

}  // namespace invint
