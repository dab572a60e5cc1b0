// Acceptance suite: one pass/fail line per criterion.
#include <iostream>

#include "invint/selftest.hpp"

int main() {
    int failures = invint::selftest::run_acceptance(std::cout);
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
