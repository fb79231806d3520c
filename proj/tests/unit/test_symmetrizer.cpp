#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "symdet/symmetrizer.hpp"

using namespace symdet;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// g acts by (g w)[g(i)] = w[i].
Word act(const std::vector<int>& g, const Word& w) {
    Word out = w;
    for (std::size_t i = 0; i < w.size(); ++i) out.set(static_cast<std::size_t>(g[i]), w[i]);
    return out;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {  // a after b
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
}

int sign(const std::vector<int>& g) {
    int s = 1;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g[i] > g[j]) s = -s;
    return s;
}

bool stabilizes(const std::vector<int>& g, const std::vector<std::vector<int>>& groups) {
    for (const auto& grp : groups)
        for (int i : grp)
            if (std::find(grp.begin(), grp.end(), g[static_cast<std::size_t>(i)]) == grp.end()) return false;
    return true;
}

// Sum over all of S_n filtered to the row and column stabilizers.
WordSum oracle_symmetrizer(const TableauFrame& f, const Word& w) {
    const int n = f.shape.n();
    std::vector<int> g(static_cast<std::size_t>(n));
    std::iota(g.begin(), g.end(), 0);
    std::vector<std::vector<int>> rows_grp, cols_grp;
    do {
        if (stabilizes(g, f.rows)) rows_grp.push_back(g);
        if (stabilizes(g, f.columns)) cols_grp.push_back(g);
    } while (std::next_permutation(g.begin(), g.end()));
    std::vector<WordSum::Term> terms;
    for (const auto& s : cols_grp)
        for (const auto& r : rows_grp) terms.emplace_back(act(compose(s, r), w), sign(s));
    return WordSum(std::move(terms));
}

Word random_word(std::mt19937& rng, int n, int letters) {
    std::uniform_int_distribution<int> d(1, letters);
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(d(rng));
    return w;
}

constexpr int a = 1, b = 2, c = 3;

}  // namespace

TEST(Symmetrizer, TwoOneRepeated) {
    const TableauFrame f(P({2, 1}));
    const WordSum expected(std::vector<WordSum::Term>{{Word{a, a, b}, 2}, {Word{b, a, a}, -2}});
    EXPECT_EQ(apply_symmetrizer(f, Word{a, a, b}).sum, expected);
}

TEST(Symmetrizer, TwoOneDistinct) {
    const TableauFrame f(P({2, 1}));
    const WordSum expected(std::vector<WordSum::Term>{
        {Word{a, b, c}, 1}, {Word{c, b, a}, -1}, {Word{b, a, c}, 1}, {Word{c, a, b}, -1}});
    EXPECT_EQ(apply_symmetrizer(f, Word{a, b, c}).sum, expected);
}

TEST(Symmetrizer, Antisymmetrizer) {
    const TableauFrame f(P({1, 1}));
    const WordSum expected(std::vector<WordSum::Term>{{Word{a, b}, 1}, {Word{b, a}, -1}});
    EXPECT_EQ(apply_symmetrizer(f, Word{a, b}).sum, expected);
}

TEST(Symmetrizer, MatchesGroupEnumeration) {
    std::mt19937 rng(23);
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : partitions_of(n)) {
            const TableauFrame f(shape);
            for (int trial = 0; trial < 10; ++trial) {
                const Word w = random_word(rng, n, 4);
                EXPECT_EQ(apply_symmetrizer(f, w).sum, oracle_symmetrizer(f, w)) << shape.notation();
            }
        }
}

TEST(Symmetrizer, RowsThenColumns) {
    const TableauFrame f(P({3, 2}));
    const WordSum x(Word{1, 2, 1, 3, 2});
    EXPECT_EQ(apply_symmetrizer(f, x), antisymmetrize_columns(f, symmetrize_rows(f, x)));
}

TEST(Symmetrizer, IdempotentLaw) {
    std::mt19937 rng(29);
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : partitions_of(n)) {
            const TableauFrame f(shape);
            const std::int64_t scale = BigInt(factorial(n) / standard_tableau_count(shape)).get_si();
            for (int trial = 0; trial < 8; ++trial) {
                const WordSum e = apply_symmetrizer(f, random_word(rng, n, n)).sum;
                EXPECT_EQ(apply_symmetrizer(f, e), scale * e) << shape.notation();
            }
        }
}

TEST(InnerProduct, TwoOneValues) {
    const TableauFrame f(P({2, 1}));
    const auto aab = apply_symmetrizer(f, Word{a, a, b});
    EXPECT_EQ(inner_product_reduced(aab, aab), 8);
    EXPECT_EQ(inner_product_reduced(apply_symmetrizer(f, Word{a, b, c}), apply_symmetrizer(f, Word{a, c, b})), -2);
}

TEST(InnerProduct, ContentOrthogonality) {
    std::mt19937 rng(31);
    for (int n = 2; n <= 5; ++n)
        for (const auto& shape : partitions_of(n)) {
            const TableauFrame f(shape);
            for (int trial = 0; trial < 10; ++trial) {
                const Word u = random_word(rng, n, 3), v = random_word(rng, n, 3);
                auto cu = u.to_vector(), cv = v.to_vector();
                std::sort(cu.begin(), cu.end());
                std::sort(cv.begin(), cv.end());
                if (cu == cv) continue;
                EXPECT_EQ(inner_product(apply_symmetrizer(f, u).sum, apply_symmetrizer(f, v).sum), 0);
            }
        }
}

TEST(InnerProduct, ShapeMismatch) {
    const auto u = apply_symmetrizer(TableauFrame(P({2, 1})), Word{a, a, b});
    const auto v = apply_symmetrizer(TableauFrame(P({1, 1, 1})), Word{a, b, c});
    EXPECT_THROW(inner_product_reduced(u, v), std::invalid_argument);
}

TEST(WordOfTableau, RowMajor) {
    const TableauFrame f(P({2, 1}));
    EXPECT_EQ(word_of_tableau(f, SemiStandardTableau{P({2, 1}), {{a, a}, {b}}}), (Word{1, 1, 2}));
    EXPECT_EQ(word_of_tableau(f, SemiStandardTableau{P({2, 1}), {{a, c}, {b}}}), (Word{a, c, b}));
    EXPECT_EQ(word_of_tableau(TableauFrame(P({1, 1, 1})), SemiStandardTableau{P({1, 1, 1}), {{1}, {2}, {3}}}),
              (Word{1, 2, 3}));
    EXPECT_THROW(word_of_tableau(f, SemiStandardTableau{P({3}), {{1, 1, 2}}}), std::invalid_argument);
}
