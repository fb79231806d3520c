#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "symdet/combinat.hpp"
#include "symdet/exact.hpp"

namespace symdet::cli {

struct GoldenSymRow {
    Partition shape;
    std::string display;  // dimension as printed
    IntPoly dimension;
    std::map<BigInt, std::set<unsigned>> c;  // prime -> {k}, reduced
};

struct GoldenRefinedRow {
    Partition shape;
    Partition gamma;
    int multiplicity = 1;
    IntPoly c;  // determinant of c(lambda, gamma), up to squares
    std::string display;
};

struct GoldenBlock {
    Partition shape;
    Composition pattern;
    std::vector<std::vector<BigInt>> matrix;
};

struct GoldenRefinedMatrix {
    Partition shape;
    Partition gamma;
    std::vector<std::vector<IntPoly>> entries;  // scale already applied
    IntPoly determinant;
};

struct GoldenTables {
    int version = 0;
    std::vector<GoldenSymRow> sym;
    std::vector<GoldenRefinedRow> refined;
    std::vector<GoldenBlock> blocks;
    std::vector<GoldenRefinedMatrix> refined_matrices;
};

/// Throws std::runtime_error on malformed JSON or schema violations.
GoldenTables parse_golden(const std::string& text);
GoldenTables load_golden_file(const std::string& path);

/// The data file compiled into the binary.
std::string_view embedded_golden_text();
const GoldenTables& embedded_golden();

/// Composite bases with binomial index lists, e.g. 6^{C(N,3)+C(N,4)}, as
/// per-prime parity sets.
std::map<BigInt, std::set<unsigned>> pairs_from_bases(const std::vector<std::pair<BigInt, std::vector<unsigned>>>& bases);

}  // namespace symdet::cli
