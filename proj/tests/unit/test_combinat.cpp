#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "symdet/combinat.hpp"

using namespace symdet;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Every arrangement of the multiset, kept if semistandard.
std::vector<SemiStandardTableau> brute_ssyt(const Partition& shape, const Composition& pattern) {
    std::vector<int> letters;
    for (std::size_t i = 0; i < pattern.length(); ++i) letters.insert(letters.end(), pattern.parts()[i], int(i) + 1);
    std::vector<SemiStandardTableau> out;
    if (static_cast<int>(letters.size()) != shape.n()) return out;
    std::sort(letters.begin(), letters.end());
    do {
        SemiStandardTableau t{shape, {}};
        std::size_t at = 0;
        for (int len : shape.parts()) {
            t.rows.emplace_back(letters.begin() + at, letters.begin() + at + len);
            at += len;
        }
        if (t.is_semistandard()) out.push_back(t);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

// Box-by-box count of semistandard fillings with entries <= dim.
long count_ssyt(const Partition& shape, int dim) {
    std::vector<std::vector<int>> t;
    for (int len : shape.parts()) t.emplace_back(len, 0);
    std::function<long(std::size_t, std::size_t)> go = [&](std::size_t r, std::size_t c) -> long {
        if (r == t.size()) return 1;
        if (c == t[r].size()) return go(r + 1, 0);
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        long total = 0;
        for (int x = lo; x <= dim; ++x) {
            t[r][c] = x;
            total += go(r, c + 1);
        }
        return total;
    };
    return go(0, 0);
}

long count_standard(const Partition& shape) {
    std::vector<int> filled(shape.length(), 0);
    std::function<long(int)> go = [&](int left) -> long {
        if (left == 0) return 1;
        long total = 0;
        for (std::size_t r = 0; r < filled.size(); ++r)
            if (filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r])) {
                ++filled[r];
                total += go(left - 1);
                --filled[r];
            }
        return total;
    };
    return go(shape.n());
}

}  // namespace

TEST(Partitions, Three) {
    EXPECT_EQ(partitions_of(3), (std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})}));
}

TEST(Partitions, SevenHasFifteen) { EXPECT_EQ(partitions_of(7).size(), 15u); }
TEST(Partitions, One) { EXPECT_EQ(partitions_of(1), (std::vector<Partition>{P({1})})); }

TEST(Partitions, TwoThroughSevenTotal) {
    std::size_t total = 0;
    for (int n = 2; n <= 7; ++n) total += partitions_of(n).size();
    EXPECT_EQ(total, 43u);
}

TEST(Compositions, Three) {
    EXPECT_EQ(compositions_of(3), (std::vector<Composition>{Composition({3}), Composition({2, 1}), Composition({1, 2}),
                                                            Composition({1, 1, 1})}));
}

TEST(Compositions, CountIsPowerOfTwo) {
    EXPECT_EQ(compositions_of(2), (std::vector<Composition>{Composition({2}), Composition({1, 1})}));
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(compositions_of(n).size(), std::size_t{1} << (n - 1));
}

TEST(Partition, RejectsBadParts) {
    EXPECT_THROW(P({1, 2}), std::invalid_argument);
    EXPECT_THROW(P({2, 0}), std::invalid_argument);
}

TEST(Partition, ParseAndNotation) {
    EXPECT_EQ(parse_partition("3,1^2"), P({3, 1, 1}));
    EXPECT_EQ(parse_partition("3,1,1").notation(), "(3,1^2)");
    EXPECT_EQ(P({2, 2}).notation(), "(2^2)");
    EXPECT_EQ(Partition().notation(), "()");
    EXPECT_EQ(P({4, 2, 1}).conjugate(), P({3, 2, 1, 1}));
    for (const char* bad : {"", "0", "1,2", "a", "2,,1", "2^0"}) EXPECT_THROW(parse_partition(bad), std::invalid_argument) << bad;
}

TEST(Ssyt, SmallShapes) {
    EXPECT_EQ(ssyt_with_pattern(P({2, 1}), Composition({1, 1, 1})).size(), 2u);
    EXPECT_EQ(ssyt_with_pattern(P({2, 1}), Composition({2, 1})).size(), 1u);
    EXPECT_TRUE(ssyt_with_pattern(P({1, 1, 1}), Composition({2, 1})).empty());
}

TEST(Ssyt, LexOrderOfRowMajorReading) {
    const auto ts = ssyt_with_pattern(P({2, 1}), Composition({1, 1, 1}));
    EXPECT_EQ(ts[0].row_major(), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(ts[1].row_major(), (std::vector<int>{1, 3, 2}));
}

TEST(Ssyt, MatchesBruteForce) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& shape : partitions_of(n))
            for (const auto& pattern : compositions_of(n)) {
                auto brute = brute_ssyt(shape, pattern);
                std::sort(brute.begin(), brute.end(),
                          [](const auto& a, const auto& b) { return a.row_major() < b.row_major(); });
                const auto got = ssyt_with_pattern(shape, pattern);
                EXPECT_EQ(got, brute) << shape.notation() << " " << pattern.notation();
                EXPECT_EQ(kostka(shape, pattern), BigInt(got.size()));
            }
}

TEST(Kostka, SymmetricInPattern) {
    for (int n = 2; n <= 7; ++n)
        for (const auto& shape : partitions_of(n))
            for (const auto& pattern : compositions_of(n)) {
                auto sorted = pattern.parts();
                std::sort(sorted.rbegin(), sorted.rend());
                EXPECT_EQ(kostka(shape, pattern), kostka(shape, Composition(sorted)));
            }
}

TEST(Dimension, SmallShapes) {
    const IntPoly N = IntPoly::variable();
    EXPECT_EQ(dimension_poly(P({2, 1})), N * (N - 1) * (N + 1) * IntPoly(BigRat(1, 3)));
    EXPECT_EQ(dimension_poly(P({3, 1})), N * (N - 1) * (N + 1) * (N + 2) * IntPoly(BigRat(1, 8)));
    EXPECT_EQ(dimension_poly(P({1, 1})), N * (N - 1) * IntPoly(BigRat(1, 2)));
}

TEST(Dimension, MatchesTableauCount) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& shape : partitions_of(n)) {
            const IntPoly d = dimension_poly(shape);
            for (int dim = 1; dim <= 7; ++dim) EXPECT_EQ(d.eval(dim), count_ssyt(shape, dim)) << shape.notation() << " N=" << dim;
        }
}

TEST(StandardTableaux, Examples) {
    EXPECT_EQ(standard_tableau_count(P({2, 1})), 2);
    EXPECT_EQ(standard_tableau_count(P({2, 2})), 2);
    EXPECT_EQ(standard_tableau_count(P({3, 2, 1})), 16);
    EXPECT_EQ(count_standard(P({3, 2, 1})), 16);
}

TEST(StandardTableaux, HookFormulaMatchesEnumeration) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : partitions_of(n)) EXPECT_EQ(standard_tableau_count(shape), count_standard(shape));
}

TEST(StandardTableaux, SumOfSquaresIsFactorial) {
    for (int n = 1; n <= 8; ++n) {
        BigInt sum = 0;
        for (const auto& shape : partitions_of(n)) sum += standard_tableau_count(shape) * standard_tableau_count(shape);
        EXPECT_EQ(sum, factorial(n)) << n;
    }
}

TEST(Frame, RowMajorLabels) {
    const TableauFrame f(P({3, 1}));
    EXPECT_EQ(f.labels, (std::vector<std::vector<int>>{{0, 1, 2}, {3}}));
    EXPECT_EQ(f.rows, (std::vector<std::vector<int>>{{0, 1, 2}, {3}}));
    EXPECT_EQ(f.columns, (std::vector<std::vector<int>>{{0, 3}, {1}, {2}}));
}
