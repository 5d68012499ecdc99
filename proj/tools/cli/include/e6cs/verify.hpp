#pragma once

#include "e6cs/characters.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace e6cs::verify {

struct Check {
    bool ok = false;
    std::string name;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    int errata_applied = 0;

    bool passed() const;
    std::size_t failures() const;
};

/// Suite names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite. With `use_errata`, known misprints in the golden
/// files are corrected before comparing. Throws std::invalid_argument for an
/// unknown name.
Report run_suite(std::string_view name, CharacterEngine& engine, bool use_errata = true);

void print(std::ostream& out, const Report& r);

}  // namespace e6cs::verify
