#pragma once

#include <compare>
#include <string>
#include <vector>

#include "symdet/exact.hpp"

namespace symdet {

/// Non-increasing sequence of positive integers. The empty partition of 0 is
/// allowed (it indexes the trivial constituent of refined symmetrizations).
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t length() const { return parts_.size(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;

    /// Exponent notation, e.g. "(3,1^2)", "(2^2)", "()".
    std::string notation() const;
    /// Plain comma list, e.g. "3,1,1".
    std::string csv() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Parses "3,1,1" or "3,1^2". Throws std::invalid_argument on malformed
/// input (including non-positive parts and increasing sequences).
Partition parse_partition(const std::string& text);

/// Ordered sequence of positive integers. As a content pattern it lists the
/// multiplicities of the k distinct letters in increasing letter order.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t length() const { return parts_.size(); }

    /// e.g. "(1,2,1)"
    std::string notation() const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

using ContentPattern = Composition;

/// All partitions of n in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

/// All compositions of n grouped by length 1..n, each group in
/// lexicographically decreasing order.
std::vector<Composition> compositions_of(int n);

/// Row-major labeling of the boxes of a shape by tensor positions 0..n-1.
/// `rows[j]` and `columns[j]` hold the positions in row/column j.
struct TableauFrame {
    explicit TableauFrame(Partition shape);

    Partition shape;
    std::vector<std::vector<int>> labels;   // labels[r][c]
    std::vector<std::vector<int>> rows;     // horizontal groups
    std::vector<std::vector<int>> columns;  // vertical groups
};

/// Filling of a shape, stored row by row. Rows weakly increase, columns
/// strictly increase.
struct SemiStandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    /// Entries read row by row.
    std::vector<int> row_major() const;
    bool is_semistandard() const;

    auto operator<=>(const SemiStandardTableau&) const = default;
};

/// All semistandard tableaux of `shape` in which letter i (1-based) occurs
/// exactly pattern[i-1] times, sorted lexicographically by row-major reading.
std::vector<SemiStandardTableau> ssyt_with_pattern(const Partition& shape, const ContentPattern& pattern);

/// K(shape, pattern), the size of ssyt_with_pattern without materializing it.
BigInt kostka(const Partition& shape, const ContentPattern& pattern);

/// d(shape, N) = sum over patterns K(shape, pattern) * C(N, length(pattern)).
IntPoly dimension_poly(const Partition& shape);

/// Number of standard Young tableaux (hook length formula).
BigInt standard_tableau_count(const Partition& shape);

}  // namespace symdet
