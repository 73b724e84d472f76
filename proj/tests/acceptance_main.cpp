// Acceptance runner: executes every criterion at its pinned tolerance and
// prints one PASS/FAIL line each. Exit status 0 iff everything passed.

#include <iostream>

#include "hyperquad/acceptance.hpp"

int main() {
    return hyperquad::acceptance::run_and_print(std::cout) == 0 ? 0 : 1;
}
