#include "symdet/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symdet {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int col = 0; col < (parts_.empty() ? 0 : parts_[0]); ++col) {
        int h = 0;
        for (int p : parts_)
            if (p > col) ++h;
        c.push_back(h);
    }
    return Partition(std::move(c));
}

std::string Partition::notation() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (i) os << ",";
        os << parts_[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    os << ")";
    return os.str();
}

std::string Partition::csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')') s += c;
    if (s.empty()) throw std::invalid_argument("empty partition");
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    auto to_int = [&](const std::string& t) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed partition: " + text);
        if (t.size() > 3) throw std::invalid_argument("partition part too large: " + text);
        return std::stoi(t);
    };
    while (std::getline(ss, item, ',')) {
        const auto caret = item.find('^');
        int value = to_int(item.substr(0, caret));
        int repeat = caret == std::string::npos ? 1 : to_int(item.substr(caret + 1));
        if (repeat <= 0) throw std::invalid_argument("malformed partition: " + text);
        for (int i = 0; i < repeat; ++i) parts.push_back(value);
    }
    if (!s.empty() && s.back() == ',') throw std::invalid_argument("malformed partition: " + text);
    return Partition(std::move(parts));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::notation() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n == 0) return {Partition()};
    rec(n, n);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    for (int k = 1; k <= n; ++k) {
        std::function<void(int, int)> rec = [&](int rest, int slots) {
            if (slots == 0) {
                if (rest == 0) out.emplace_back(cur);
                return;
            }
            for (int p = rest - (slots - 1); p >= 1; --p) {
                cur.push_back(p);
                rec(rest - p, slots - 1);
                cur.pop_back();
            }
        };
        rec(n, k);
    }
    return out;
}

TableauFrame::TableauFrame(Partition s) : shape(std::move(s)) {
    int label = 0;
    for (int r : shape.parts()) {
        labels.emplace_back();
        for (int c = 0; c < r; ++c) labels.back().push_back(label++);
    }
    rows = labels;
    for (int c = 0; c < shape[0]; ++c) {
        columns.emplace_back();
        for (const auto& row : labels)
            if (static_cast<int>(row.size()) > c) columns.back().push_back(row[c]);
    }
}

std::vector<int> SemiStandardTableau::row_major() const {
    std::vector<int> out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

bool SemiStandardTableau::is_semistandard() const {
    if (rows.size() != shape.length()) return false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != shape[r]) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
        }
    }
    return true;
}

namespace {

// Adds letters 1..k as successive horizontal strips. `visit` receives the
// rows of each completed filling.
void fill_strips(const Partition& shape, const std::vector<int>& counts,
                 const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    const std::size_t len = shape.length();
    std::vector<std::vector<int>> rows(len);
    std::function<void(std::size_t)> letter;
    std::function<void(std::size_t, std::size_t, int, const std::vector<int>&)> strip;

    // Place `left` boxes of letter (idx+1) in rows r..len-1 given the shape
    // `before` that was filled prior to this letter.
    strip = [&](std::size_t idx, std::size_t r, int left, const std::vector<int>& before) {
        if (left == 0) {
            letter(idx + 1);
            return;
        }
        if (r == len) return;
        const int cur = static_cast<int>(rows[r].size());
        const int cap_shape = shape[r] - cur;
        const int cap_strip = r == 0 ? cap_shape : before[r - 1] - cur;
        const int cap = std::min({cap_shape, cap_strip, left});
        for (int c = cap; c >= 0; --c) {
            for (int i = 0; i < c; ++i) rows[r].push_back(static_cast<int>(idx) + 1);
            strip(idx, r + 1, left - c, before);
            rows[r].resize(cur);
        }
    };
    letter = [&](std::size_t idx) {
        if (idx == counts.size()) {
            visit(rows);
            return;
        }
        std::vector<int> before(len);
        for (std::size_t r = 0; r < len; ++r) before[r] = static_cast<int>(rows[r].size());
        strip(idx, 0, counts[idx], before);
    };
    letter(0);
}

}  // namespace

std::vector<SemiStandardTableau> ssyt_with_pattern(const Partition& shape, const ContentPattern& pattern) {
    std::vector<SemiStandardTableau> out;
    if (pattern.n() != shape.n()) return out;
    fill_strips(shape, pattern.parts(), [&](const std::vector<std::vector<int>>& rows) {
        out.push_back(SemiStandardTableau{shape, rows});
    });
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.row_major() < b.row_major(); });
    return out;
}

BigInt kostka(const Partition& shape, const ContentPattern& pattern) {
    if (pattern.n() != shape.n()) return 0;
    BigInt count = 0;
    fill_strips(shape, pattern.parts(), [&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

IntPoly dimension_poly(const Partition& shape) {
    if (shape.n() == 0) return IntPoly(1L);
    std::vector<BigInt> per_length(shape.n() + 1);
    for (const auto& c : compositions_of(shape.n())) per_length[c.length()] += kostka(shape, c);
    IntPoly d;
    for (std::size_t k = 1; k < per_length.size(); ++k)
        if (per_length[k] != 0) d += IntPoly::binomial(static_cast<unsigned>(k)) * IntPoly(per_length[k]);
    return d;
}

BigInt standard_tableau_count(const Partition& shape) {
    const Partition conj = shape.conjugate();
    BigInt hooks = 1;
    for (std::size_t r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c) hooks *= (shape[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
    return factorial(static_cast<unsigned>(shape.n())) / hooks;
}

}  // namespace symdet
