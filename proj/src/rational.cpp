#include "invint/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>

namespace invint {

Int factorial(long k) {
    Int r = 1;
    for (long i = 2; i <= k; ++i) r *= i;
    return r;
}

int max_matrix_dim() {
    static const int bound = [] {
        if (const char* s = std::getenv("INVINT_MAX_DIM")) {
            int v = std::atoi(s);
            if (v >= 1 && v <= 9) return v;
        }
        return 4;
    }();
    return bound;
}

Rat::Rat(const Int& num, const Int& den) {
    check(den != 0, "Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    check(!o.is_zero(), "Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& s) {
    auto bad = [&] { throw error("Rat: cannot parse \"" + s + "\""); };
    if (s.empty()) bad();
    size_t slash = s.find('/');
    std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
    std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits_ok = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!digits_ok(ns, true) || !digits_ok(ds, false)) bad();
    if (ns[0] == '+') ns = ns.substr(1);
    Int num(ns), den(ds);
    if (den == 0) bad();
    return Rat(num, den);
}

std::string Rat::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace invint
