#include "verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "symdet/gram.hpp"
#include "symdet/refined.hpp"

namespace symdet::cli {

std::size_t VerifyReport::mismatches() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const auto& i) { return !i.ok; }));
}

namespace {

std::string matrix_string(const std::vector<std::vector<BigInt>>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string poly_matrix_string(const PolyMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? ", " : "") << m[i][j].expanded();
        os << "]";
    }
    os << "]";
    return os.str();
}

bool equal_up_to_permutation(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool same = true;
        for (std::size_t i = 0; i < a.size() && same; ++i)
            for (std::size_t j = 0; j < a.size() && same; ++j) same = a[perm[i]][perm[j]] == b[i][j];
        if (same) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::string constituent_key(const Partition& shape, const Partition& gamma) {
    return shape.notation() + "/" + gamma.notation();
}

}  // namespace

VerifyReport verify_sym(const GoldenTables& golden, unsigned jobs) {
    VerifyReport rep{"sym", {}};
    std::set<Partition> seen;
    for (const auto& row : golden.sym) {
        seen.insert(row.shape);
        const SymDetResult r = symmetrization_determinant(row.shape, jobs);
        const auto got = r.c_formula.binomial_pairs();
        VerifyItem item{row.shape.notation(), true, {}, {}};
        if (r.dimension != row.dimension) {
            item.ok = false;
            item.expected = "d = " + factored_string(row.dimension);
            item.got = "d = " + factored_string(r.dimension);
        } else if (got != row.c) {
            item.ok = false;
            item.expected = "c = " + binomial_pairs_string(row.c);
            item.got = "c = " + binomial_pairs_string(got);
        } else {
            item.expected = item.got = "c = " + binomial_pairs_string(got);
        }
        rep.items.push_back(std::move(item));
    }
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : partitions_of(n))
            if (!seen.count(p)) rep.items.push_back({p.notation(), false, "golden row", "missing"});
    for (auto& item : verify_blocks(golden, false).items) rep.items.push_back(std::move(item));
    return rep;
}

VerifyReport verify_refined(const GoldenTables& golden, unsigned jobs) {
    VerifyReport rep{"refined", {}};
    std::map<Partition, std::vector<const GoldenRefinedRow*>> by_shape;
    for (const auto& row : golden.refined) by_shape[row.shape].push_back(&row);
    std::set<Partition> shapes;
    for (int n = 2; n <= 6; ++n)
        for (const auto& p : partitions_of(n)) shapes.insert(p);
    for (const auto& [s, rows] : by_shape) shapes.insert(s);

    for (int n = 2; n <= 7; ++n) {
        for (const auto& shape : partitions_of(n)) {
            if (!shapes.count(shape)) continue;
            const RefinedResult res = refined_decomposition(shape, jobs);
            std::set<Partition> listed;
            for (const auto* row : by_shape[shape]) {
                listed.insert(row->gamma);
                VerifyItem item{constituent_key(shape, row->gamma), true, {}, {}};
                const SquareClassFormula want = SquareClassFormula::polynomial(row->c).reduced();
                item.expected = "m=" + std::to_string(row->multiplicity) + " c ~ " + to_string(want);
                auto it = std::find_if(res.constituents.begin(), res.constituents.end(),
                                       [&](const auto& c) { return c.gamma == row->gamma; });
                if (it == res.constituents.end()) {
                    item.ok = false;
                    item.got = "absent";
                } else {
                    item.got = "m=" + std::to_string(it->multiplicity) + " c ~ " + to_string(it->c_reduced);
                    item.ok = it->multiplicity == row->multiplicity && it->c_reduced.equivalent(want);
                }
                rep.items.push_back(std::move(item));
            }
            for (const auto& c : res.constituents)
                if (!listed.count(c.gamma))
                    rep.items.push_back({constituent_key(shape, c.gamma), false, "absent", "c ~ " + to_string(c.c_reduced)});
        }
    }
    for (const auto& m : golden.refined_matrices) {
        VerifyItem item{constituent_key(m.shape, m.gamma) + " matrix", true, poly_matrix_string(m.entries), "absent"};
        if (auto c = constituent_poly(m.shape, m.gamma, jobs)) {
            item.got = poly_matrix_string(c->c_matrix);
            item.ok = equal_up_to_permutation(c->c_matrix, m.entries) && c->c_det == m.determinant;
            if (c->c_det != m.determinant) item.got += " det " + factored_string(c->c_det);
        } else {
            item.ok = false;
        }
        rep.items.push_back(std::move(item));
    }
    return rep;
}

VerifyReport verify_blocks(const GoldenTables& golden, bool entry_exact) {
    VerifyReport rep{"blocks", {}};
    for (const auto& b : golden.blocks) {
        const GramBlock got = gram_block(b.shape, b.pattern);
        bool ok = got.matrix == b.matrix;
        if (!ok && !entry_exact) {
            PolyMatrix x, y;
            for (const auto& row : got.matrix) x.emplace_back(row.begin(), row.end());
            for (const auto& row : b.matrix) y.emplace_back(row.begin(), row.end());
            ok = equal_up_to_permutation(x, y);
        }
        rep.items.push_back({b.shape.notation() + " " + b.pattern.notation(), ok, matrix_string(b.matrix),
                             matrix_string(got.matrix)});
    }
    return rep;
}

}  // namespace symdet::cli
