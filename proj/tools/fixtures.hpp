#ifndef APOLAR_TOOLS_FIXTURES_HPP
#define APOLAR_TOOLS_FIXTURES_HPP

#include <string>
#include <vector>

#include "apolar/field.hpp"

namespace apolar::tools {

struct FixtureResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The worked examples of the theory, each compared exactly.
std::vector<FixtureResult> run_reference_fixtures(const Field& f);

}  // namespace apolar::tools

#endif
