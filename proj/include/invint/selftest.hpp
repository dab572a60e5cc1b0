#ifndef INVINT_SELFTEST_HPP
#define INVINT_SELFTEST_HPP

#include <iosfwd>

namespace invint::selftest {

// Runs the 11-point acceptance suite, one pass/fail line per criterion.
// Returns the number of failed criteria.
int run_acceptance(std::ostream& os);

// Acceptance suite plus the per-module exact-identity checks.
int run_all(std::ostream& os);

}  // namespace invint::selftest

#endif
