#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace ulp::cli {

// Published values shown next to computed ones; nothing here feeds a computation.
struct ReferenceRow {
    int cardinality;
    double lp_d_sigma;
    double lp_d_pi;
    // Earlier constructions and bounds; absent where none was printed.
    std::optional<double> recite;
    std::optional<double> b1;
    std::optional<double> b2;
};

struct ReferenceTable {
    std::string_view id;  // "I" or "II"
    int n;
    int degree;
    std::span<const ReferenceRow> rows;
};

const ReferenceTable* find_reference_table(std::string_view id);

} // namespace ulp::cli
