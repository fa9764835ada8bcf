#include <iostream>

#include "echelons/acceptance.hpp"

int main() {
    int failures = echelons::run_acceptance(std::cout);
    return failures == 0 ? 0 : 1;
}
