#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hm::acceptance {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;
};

// Property suites over seeded generated instances; deterministic per seed.
std::vector<SuiteResult> run_lemma_suites(std::uint64_t seed);

}  // namespace hm::acceptance
