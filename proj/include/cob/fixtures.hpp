// Reference change-of-basis matrices with the operation that reproduces each one.
#pragma once

#include "cob/matrices.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cob::fixtures {

struct Fixture {
    std::string id;
    std::string description;
    std::vector<std::vector<std::string>> expected;
    std::function<CobMatrix()> build;
};

struct FixtureResult {
    std::string id;
    bool passed = false;
    std::string detail;  // first differing entry, or the error raised while building
};

const std::vector<Fixture>& all();

FixtureResult check(const Fixture& f);
std::vector<FixtureResult> check_all();

}  // namespace cob::fixtures
