#include "symdet/symmetrizer.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace symdet {

Word::Word(std::initializer_list<int> letters) {
    for (int l : letters) push_back(l);
}

Word::Word(const std::vector<int>& letters) {
    for (int l : letters) push_back(l);
}

void Word::push_back(int letter) {
    if (size_ == kMaxDegree) throw std::length_error("word longer than kMaxDegree");
    if (letter < 0 || letter > 255) throw std::out_of_range("letter out of range");
    letters_[size_++] = static_cast<std::uint8_t>(letter);
}

std::vector<int> Word::to_vector() const { return {letters_.begin(), letters_.begin() + size_}; }

std::uint64_t Word::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < size_; ++i) {
        h ^= letters_[i];
        h *= 1099511628211ULL;
    }
    return h ^ size_;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.begin() + a.size_,
                                                  b.letters_.begin(), b.letters_.begin() + b.size_);
}

// ---------------------------------------------------------------- WordSum

namespace {

using Accumulator = std::unordered_map<Word, std::int64_t, WordHash>;

std::vector<WordSum::Term> drain(Accumulator& acc) {
    std::vector<WordSum::Term> out;
    out.reserve(acc.size());
    for (auto& [w, c] : acc)
        if (c != 0) out.emplace_back(w, c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

WordSum::WordSum(const Word& w, std::int64_t coeff) {
    if (coeff != 0) terms_.emplace_back(w, coeff);
}

WordSum::WordSum(std::vector<Term> terms) {
    Accumulator acc;
    for (auto& [w, c] : terms) acc[w] += c;
    terms_ = drain(acc);
}

std::int64_t WordSum::coeff(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, const Word& x) { return t.first < x; });
    return (it != terms_.end() && it->first == w) ? it->second : 0;
}

WordSum& WordSum::operator+=(const WordSum& rhs) {
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.cbegin();
    auto b = rhs.terms_.cbegin();
    while (a != terms_.cend() || b != rhs.terms_.cend()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            if (const std::int64_t c = a->second + b->second; c != 0) out.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

WordSum& WordSum::operator*=(std::int64_t s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= s;
    return *this;
}

BigInt inner_product(const WordSum& u, const WordSum& v) {
    __int128 acc = 0;
    auto a = u.terms().begin(), b = v.terms().begin();
    while (a != u.terms().end() && b != v.terms().end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            acc += static_cast<__int128>(a->second) * b->second;
            ++a;
            ++b;
        }
    }
    // Split the 128-bit value into two 64-bit halves for GMP.
    const bool neg = acc < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-acc) : static_cast<unsigned __int128>(acc);
    BigInt hi = static_cast<unsigned long>(mag >> 64);
    BigInt lo = static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL);
    BigInt r = (hi << 64) + lo;
    return neg ? BigInt(-r) : r;
}

// ------------------------------------------------------------- symmetrizer

namespace {

struct SignedPermutation {
    std::vector<std::uint8_t> image;
    int sign;
};

const std::vector<SignedPermutation>& permutations_of(std::size_t r) {
    static std::array<std::once_flag, kMaxDegree + 1> flags;
    static std::array<std::vector<SignedPermutation>, kMaxDegree + 1> tables;
    if (r > kMaxDegree) throw std::length_error("group factor too large");
    std::call_once(flags[r], [r] {
        std::vector<std::uint8_t> p(r);
        for (std::size_t i = 0; i < r; ++i) p[i] = static_cast<std::uint8_t>(i);
        do {
            int inv = 0;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i + 1; j < r; ++j)
                    if (p[i] > p[j]) ++inv;
            tables[r].push_back({p, inv % 2 == 0 ? 1 : -1});
        } while (std::next_permutation(p.begin(), p.end()));
    });
    return tables[r];
}

// sum over g in Sym(positions) of sign(g)^signed * g x
WordSum act_symmetric_group(const WordSum& x, const std::vector<int>& positions, bool signed_sum) {
    if (positions.size() <= 1) return x;
    const auto& perms = permutations_of(positions.size());
    Accumulator acc;
    acc.reserve(x.size() * std::min<std::size_t>(perms.size(), 64));
    for (const auto& [w, c] : x.terms()) {
        for (const auto& p : perms) {
            Word out = w;
            for (std::size_t i = 0; i < positions.size(); ++i) out.set(positions[p.image[i]], w[positions[i]]);
            acc[out] += signed_sum ? c * p.sign : c;
        }
    }
    return WordSum(drain(acc));
}

}  // namespace

WordSum symmetrize_rows(const TableauFrame& frame, const WordSum& x) {
    WordSum cur = x;
    for (const auto& row : frame.rows) cur = act_symmetric_group(cur, row, false);
    return cur;
}

WordSum antisymmetrize_columns(const TableauFrame& frame, const WordSum& x) {
    WordSum cur = x;
    for (const auto& col : frame.columns) cur = act_symmetric_group(cur, col, true);
    return cur;
}

Word word_of_tableau(const TableauFrame& frame, const SemiStandardTableau& t) {
    if (t.shape != frame.shape) throw std::invalid_argument("tableau shape does not match frame");
    std::vector<int> letters(static_cast<std::size_t>(frame.shape.n()));
    for (std::size_t r = 0; r < frame.labels.size(); ++r)
        for (std::size_t c = 0; c < frame.labels[r].size(); ++c) letters[frame.labels[r][c]] = t.rows[r][c];
    return Word(letters);
}

WordSum apply_symmetrizer(const TableauFrame& frame, const WordSum& x) {
    for (const auto& [w, c] : x.terms())
        if (static_cast<int>(w.size()) != frame.shape.n()) throw std::invalid_argument("word length does not match shape");
    return antisymmetrize_columns(frame, symmetrize_rows(frame, x));
}

SignedWordSum apply_symmetrizer(const TableauFrame& frame, const Word& w) {
    return SignedWordSum{frame.shape, apply_symmetrizer(frame, WordSum(w))};
}

BigInt inner_product_reduced(const SignedWordSum& u, const SignedWordSum& v) {
    if (u.shape != v.shape) throw std::invalid_argument("inner product of images of different shapes");
    return inner_product(u.sum, v.sum);
}

}  // namespace symdet
