#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "symdet/combinat.hpp"
#include "symdet/exact.hpp"

namespace symdet {

inline constexpr std::size_t kMaxDegree = 16;

/// Pure tensor v_{w_1} (x) ... (x) v_{w_n}: letter w_i (1-based basis index)
/// at tensor position i.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters);
    explicit Word(const std::vector<int>& letters);

    std::size_t size() const { return size_; }
    int operator[](std::size_t i) const { return letters_[i]; }
    void set(std::size_t i, int letter) { letters_[i] = static_cast<std::uint8_t>(letter); }
    void push_back(int letter);
    std::vector<int> to_vector() const;

    std::uint64_t hash() const;

    friend bool operator==(const Word& a, const Word& b) { return a.size_ == b.size_ && a.letters_ == b.letters_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::array<std::uint8_t, kMaxDegree> letters_{};
    std::uint8_t size_ = 0;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return static_cast<std::size_t>(w.hash()); }
};

/// Sparse integer combination of words, kept sorted by word with no zero
/// coefficients. Coefficients of symmetrizer images are bounded by
/// |G||H| <= n!, so 64-bit storage is exact for every degree this library
/// supports; inner products are accumulated in 128 bits and returned as BigInt.
class WordSum {
public:
    using Term = std::pair<Word, std::int64_t>;

    WordSum() = default;
    explicit WordSum(const Word& w, std::int64_t coeff = 1);
    explicit WordSum(std::vector<Term> terms);  // accumulates duplicates

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::int64_t coeff(const Word& w) const;

    WordSum& operator+=(const WordSum& rhs);
    WordSum& operator*=(std::int64_t s);
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator*(std::int64_t s, WordSum a) { return a *= s; }
    friend bool operator==(const WordSum& a, const WordSum& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Term> terms_;
};

/// sum_w coeff_u(w) * coeff_v(w): the form (x)^n B in the orthonormal model.
BigInt inner_product(const WordSum& u, const WordSum& v);

/// e_lambda(v(t)) together with its shape.
struct SignedWordSum {
    Partition shape;
    WordSum sum;
};

/// Position i carries the entry of the box labeled i in the frame.
/// Throws std::invalid_argument on shape mismatch.
Word word_of_tableau(const TableauFrame& frame, const SemiStandardTableau& t);

/// sum over column-group sigma and row-group rho of sign(sigma) sigma rho w,
/// with (g w) carrying letter w_{g^{-1}(i)} at position i.
SignedWordSum apply_symmetrizer(const TableauFrame& frame, const Word& w);
/// Linear extension to arbitrary sums of words of length n.
WordSum apply_symmetrizer(const TableauFrame& frame, const WordSum& x);

/// Row symmetrization sum_{rho in H} rho x and column antisymmetrization
/// sum_{sigma in G} sign(sigma) sigma x, exposed separately for tests.
WordSum symmetrize_rows(const TableauFrame& frame, const WordSum& x);
WordSum antisymmetrize_columns(const TableauFrame& frame, const WordSum& x);

/// inner_product of the two images; requires equal shapes.
BigInt inner_product_reduced(const SignedWordSum& u, const SignedWordSum& v);

}  // namespace symdet
