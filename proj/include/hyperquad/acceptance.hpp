#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperquad::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance suite (exact checks, fixed seeds, pinned
// tolerances). Each criterion reports independently; nothing short-circuits.
std::vector<CriterionResult> run_all();

// Prints one PASS/FAIL line per criterion; returns the number of failures.
int run_and_print(std::ostream& out);

// Frozen newline-delimited JSON rows for the reference tables (p = 11 or 17),
// byte-for-byte what `tables --p P --json` must emit.
const std::vector<std::string>& expected_table_json(std::uint64_t p);

}  // namespace hyperquad::acceptance
