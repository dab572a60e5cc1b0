#ifndef INVINT_COMMON_HPP
#define INVINT_COMMON_HPP

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace invint {

// Arbitrary-precision integer.
using Int = mpz_class;

// Domain error: bad sizes, inadmissible inputs, malformed data.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal-consistency failure (an arithmetic identity that must hold broke).
struct bug : std::logic_error {
    explicit bug(const std::string& msg) : std::logic_error(msg) {}
};

inline void check(bool ok, const std::string& msg) {
    if (!ok) throw error(msg);
}

Int factorial(long k);

// Default size bound for the Cayley-operator routines; INVINT_MAX_DIM raises it.
int max_matrix_dim();

}  // namespace invint

#endif
