#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wittbox {

// The three published single-congruence examples, with the values they
// report. Instance text comes from data/<name>.box at build time.
struct ReferenceExample {
    std::string name;
    std::string text;
    std::uint64_t cardinality;
    std::optional<std::int64_t> ord_p;
    // Expected general bound, or nullopt when it must be inapplicable.
    std::optional<std::uint64_t> general_bound;
    bool closeness;
};

const std::vector<ReferenceExample>& reference_examples();

}  // namespace wittbox
