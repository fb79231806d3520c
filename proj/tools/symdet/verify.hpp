#pragma once

#include <string>
#include <vector>

#include "golden.hpp"

namespace symdet::cli {

struct VerifyItem {
    std::string item;  // "(2,1)" or "(4,2)/(2)"
    bool ok = true;
    std::string expected;
    std::string got;
};

struct VerifyReport {
    std::string scope;
    std::vector<VerifyItem> items;

    std::size_t checked() const { return items.size(); }
    std::size_t mismatches() const;
    bool passed() const { return mismatches() == 0; }
};

/// Dimension (coefficient-exact) and reduced c for every golden sym row, plus
/// a coverage check over all partitions of 2..7. Printed Gram blocks are
/// compared up to permutation by the sym scope.
VerifyReport verify_sym(const GoldenTables& golden, unsigned jobs);

/// Every golden (lambda, gamma) row up to squares, multiplicities, explicit
/// c-matrices up to simultaneous permutation, and no unlisted constituents
/// for lambda of 2..6.
VerifyReport verify_refined(const GoldenTables& golden, unsigned jobs);

/// Printed Gram blocks: entry-exact under the fixed tableau order, or up to
/// simultaneous row and column permutation.
VerifyReport verify_blocks(const GoldenTables& golden, bool entry_exact);

}  // namespace symdet::cli
