#ifndef INVINT_RATIONAL_HPP
#define INVINT_RATIONAL_HPP

#include <iosfwd>
#include <string>

#include "invint/common.hpp"

namespace invint {

// Exact rational scalar. Always in lowest terms, denominator > 0,
// equality is structural.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    explicit Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den);

    // Parses "p", "-p" or "p/q" in decimal.
    static Rat parse(const std::string& s);

    const Int num() const { return v_.get_num(); }
    const Int den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    mpq_class v_;
};

}  // namespace invint

#endif
