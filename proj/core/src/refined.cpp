#include "symdet/refined.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "symdet/gram.hpp"
#include "symdet/parallel.hpp"

namespace symdet {

// --------------------------------------------------------- ConcreteTensor

ConcreteTensor ConcreteTensor::from_words(const WordSum& s, int dim) {
    ConcreteTensor t;
    t.dim = dim;
    t.degree = s.empty() ? 0 : static_cast<int>(s.terms().front().first.size());
    for (const auto& [w, c] : s.terms()) {
        if (static_cast<int>(w.size()) != t.degree) throw std::invalid_argument("mixed word lengths");
        t.terms.emplace(w, BigRat(static_cast<long>(c)));
    }
    return t;
}

ConcreteTensor& ConcreteTensor::operator+=(const ConcreteTensor& rhs) {
    if (rhs.degree != degree || rhs.dim != dim) throw std::invalid_argument("tensor shapes differ");
    for (const auto& [w, c] : rhs.terms) {
        auto [it, fresh] = terms.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

ConcreteTensor& ConcreteTensor::operator*=(const BigRat& s) {
    if (s == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [w, c] : terms) c *= s;
    return *this;
}

BigRat tensor_form(const ConcreteTensor& a, const ConcreteTensor& b) {
    BigRat acc = 0;
    const auto& small = a.terms.size() <= b.terms.size() ? a.terms : b.terms;
    const auto& large = a.terms.size() <= b.terms.size() ? b.terms : a.terms;
    for (const auto& [w, c] : small)
        if (auto it = large.find(w); it != large.end()) acc += c * it->second;
    return acc;
}

ConcreteTensor phi_insert(const ConcreteTensor& t, int i, int j) {
    if (i < 1 || i >= j || j > t.degree + 2) throw std::out_of_range("insertion position out of range");
    ConcreteTensor out;
    out.degree = t.degree + 2;
    out.dim = t.dim;
    for (const auto& [w, c] : t.terms) {
        for (int k = 1; k <= t.dim; ++k) {
            Word x;
            std::size_t src = 0;
            for (int p = 1; p <= out.degree; ++p) x.push_back(p == i || p == j ? k : w[src++]);
            out.terms[x] += c;
        }
    }
    return out;
}

ConcreteTensor pi_contract(const ConcreteTensor& t, int i, int j) {
    if (i < 1 || i >= j || j > t.degree) throw std::out_of_range("contraction position out of range");
    ConcreteTensor out;
    out.degree = t.degree - 2;
    out.dim = t.dim;
    for (const auto& [w, c] : t.terms) {
        if (w[i - 1] != w[j - 1]) continue;
        Word x;
        for (int p = 1; p <= t.degree; ++p)
            if (p != i && p != j) x.push_back(w[p - 1]);
        BigRat& slot = out.terms[x];
        slot += c;
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// ---------------------------------------------------------------- chains

std::vector<int> EmbeddingChain::residual_positions(int degree) const {
    std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
    auto take = [&](int p) {
        if (p < 1 || p > degree || used[p]) throw std::invalid_argument("chain positions do not tile the degree");
        used[p] = true;
    };
    for (auto [a, b] : pairs) {
        if (a >= b) throw std::invalid_argument("chain pair must satisfy i < j");
        take(a);
        take(b);
    }
    if (!residual.empty()) {
        for (int p : residual) take(p);
        if (std::count(used.begin() + 1, used.end(), false) != 0)
            throw std::invalid_argument("chain positions do not tile the degree");
        return residual;
    }
    std::vector<int> out;
    for (int p = 1; p <= degree; ++p)
        if (!used[p]) out.push_back(p);
    return out;
}

WordSum apply_chain(const EmbeddingChain& chain, const WordSum& x, int degree, int dim) {
    const auto slots = chain.residual_positions(degree);
    const std::size_t j = chain.pairs.size();
    std::vector<WordSum::Term> out;
    std::vector<int> letters(j, 1);
    for (const auto& [w, c] : x.terms()) {
        if (w.size() != slots.size()) throw std::invalid_argument("argument degree does not match chain");
        Word base;
        for (int p = 0; p < degree; ++p) base.push_back(0);
        for (std::size_t s = 0; s < slots.size(); ++s) base.set(slots[s] - 1, w[s]);
        std::fill(letters.begin(), letters.end(), 1);
        while (true) {
            Word y = base;
            for (std::size_t t = 0; t < j; ++t) {
                y.set(chain.pairs[t].first - 1, letters[t]);
                y.set(chain.pairs[t].second - 1, letters[t]);
            }
            out.emplace_back(y, c);
            std::size_t t = 0;
            while (t < j && letters[t] == dim) letters[t++] = 1;
            if (t == j) break;
            ++letters[t];
        }
    }
    return WordSum(std::move(out));
}

namespace {

WordSum reference_vector(const Partition& gamma) {
    const int m = gamma.n();
    if (m == 0) return WordSum(Word{});
    std::vector<int> letters(static_cast<std::size_t>(m));
    std::iota(letters.begin(), letters.end(), 1);
    return apply_symmetrizer(TableauFrame(gamma), Word(letters)).sum;
}

std::vector<WordSum> chain_images(const Partition& shape, const WordSum& v, const std::vector<EmbeddingChain>& chains,
                                  int dim, unsigned jobs) {
    const TableauFrame frame(shape);
    std::vector<WordSum> images(chains.size());
    parallel_for(chains.size(), jobs, [&](std::size_t a) {
        images[a] = apply_symmetrizer(frame, apply_chain(chains[a], v, shape.n(), dim));
    });
    return images;
}

RatMatrix gram_of(const std::vector<WordSum>& images, const BigInt& norm) {
    const std::size_t k = images.size();
    RatMatrix g(k, std::vector<BigRat>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            BigRat x(inner_product(images[a], images[b]), norm);
            x.canonicalize();
            g[a][b] = g[b][a] = x;
        }
    return g;
}

void check_gamma(const Partition& shape, const Partition& gamma) {
    const int diff = shape.n() - gamma.n();
    if (diff < 2 || diff % 2 != 0) throw std::invalid_argument("gamma must have size n - 2j with j >= 1");
}

// ---- basis of e_lambda K[S_n] modulo a large prime

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1) r = mul_mod(r, a);
    return r;
}

using Perm = std::vector<int>;

std::size_t perm_rank(const Perm& p) {
    std::size_t r = 0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        r = r * (n - i) + smaller;
    }
    return r;
}

// Signed elements of the product G H, as permutations g o h.
std::vector<std::pair<Perm, int>> young_elements(const TableauFrame& frame) {
    const std::size_t n = static_cast<std::size_t>(frame.shape.n());
    auto subgroup = [n](const std::vector<std::vector<int>>& blocks) {
        std::vector<std::pair<Perm, int>> out;
        Perm id(n);
        std::iota(id.begin(), id.end(), 0);
        out.emplace_back(id, 1);
        for (const auto& blk : blocks) {
            std::vector<std::pair<Perm, int>> next;
            std::vector<int> img = blk;
            std::sort(img.begin(), img.end());
            do {
                int inv = 0;
                for (std::size_t a = 0; a < img.size(); ++a)
                    for (std::size_t b = a + 1; b < img.size(); ++b)
                        if (img[a] > img[b]) ++inv;
                for (const auto& [p, s] : out) {
                    Perm q = p;
                    for (std::size_t a = 0; a < blk.size(); ++a) q[blk[a]] = img[a];
                    next.emplace_back(q, inv % 2 ? -s : s);
                }
            } while (std::next_permutation(img.begin(), img.end()));
            out = std::move(next);
        }
        return out;
    };
    const auto g = subgroup(frame.columns);
    const auto h = subgroup(frame.rows);
    std::vector<std::pair<Perm, int>> out;
    out.reserve(g.size() * h.size());
    for (const auto& [gp, gs] : g)
        for (const auto& [hp, hs] : h) {
            (void)hs;
            Perm q(n);
            for (std::size_t i = 0; i < n; ++i) q[i] = gp[hp[i]];
            out.emplace_back(q, gs);
        }
    return out;
}

// Arrangements sigma whose products e_lambda sigma form a basis of the right
// ideal e_lambda K[S_n] (independence mod p implies independence over Q).
std::vector<Perm> ideal_basis_arrangements(const Partition& shape) {
    const TableauFrame frame(shape);
    const auto elems = young_elements(frame);
    const std::size_t n = static_cast<std::size_t>(shape.n());
    const std::size_t target = standard_tableau_count(shape).get_ui();
    std::size_t size = 1;
    for (std::size_t i = 2; i <= n; ++i) size *= i;

    std::vector<std::vector<std::uint64_t>> basis;  // rows in echelon form
    std::vector<std::size_t> pivots;
    std::vector<Perm> chosen;
    Perm sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<std::uint64_t> row(size, 0);
        for (const auto& [p, s] : elems) {
            Perm q(n);
            for (std::size_t i = 0; i < n; ++i) q[i] = p[sigma[i]];
            auto& x = row[perm_rank(q)];
            x = (x + (s > 0 ? 1 : kPrime - 1)) % kPrime;
        }
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::uint64_t f = row[pivots[b]];
            if (f == 0) continue;
            for (std::size_t i = 0; i < size; ++i)
                if (basis[b][i]) row[i] = (row[i] + kPrime - mul_mod(f, basis[b][i])) % kPrime;
        }
        auto nz = std::find_if(row.begin(), row.end(), [](std::uint64_t x) { return x != 0; });
        if (nz == row.end()) continue;
        const std::size_t piv = static_cast<std::size_t>(nz - row.begin());
        const std::uint64_t inv = pow_mod(row[piv], kPrime - 2);
        for (auto& x : row) x = mul_mod(x, inv);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::uint64_t f = basis[b][piv];
            if (f == 0) continue;
            for (std::size_t i = 0; i < size; ++i)
                if (row[i]) basis[b][i] = (basis[b][i] + kPrime - mul_mod(f, row[i])) % kPrime;
        }
        basis.push_back(std::move(row));
        pivots.push_back(piv);
        chosen.push_back(sigma);
    } while (chosen.size() < target && std::next_permutation(sigma.begin(), sigma.end()));
    return chosen;
}

}  // namespace

RatMatrix constituent_gram(const Partition& shape, const Partition& gamma, const std::vector<EmbeddingChain>& chains,
                           int dim, unsigned jobs) {
    check_gamma(shape, gamma);
    if (dim < shape.n()) throw std::invalid_argument("ambient too small");
    for (const auto& c : chains)
        if (2 * static_cast<int>(c.pairs.size()) != shape.n() - gamma.n())
            throw std::invalid_argument("chain length does not match gamma");
    const WordSum v = reference_vector(gamma);
    return gram_of(chain_images(shape, v, chains, dim, jobs), inner_product(v, v));
}

std::vector<EmbeddingChain> chain_pool(const Partition& shape, int pairs) {
    const int n = shape.n();
    if (pairs < 1 || 2 * pairs > n) throw std::invalid_argument("pair count out of range");
    std::vector<EmbeddingChain> pool;
    auto add = [&pool](EmbeddingChain c) {
        if (std::find(pool.begin(), pool.end(), c) == pool.end()) pool.push_back(std::move(c));
    };
    EmbeddingChain base;
    for (int t = 0; t < pairs; ++t) base.pairs.emplace_back(2 * t + 1, 2 * t + 2);
    add(base);
    // last pair shifted right, then one straddling variant
    for (int s = 1; 2 * pairs + 2 * s <= n; ++s) {
        EmbeddingChain c = base;
        c.pairs.back() = {2 * pairs - 1 + 2 * s, 2 * pairs + 2 * s};
        add(c);
    }
    if (2 * pairs + 1 <= n) {
        EmbeddingChain c = base;
        c.pairs.back() = {2 * pairs - 1, 2 * pairs + 1};
        add(c);
    }
    for (const auto& sigma : ideal_basis_arrangements(shape)) {
        EmbeddingChain c;
        for (int t = 0; t < pairs; ++t) {
            int a = sigma[2 * t] + 1, b = sigma[2 * t + 1] + 1;
            c.pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
        for (int p = 2 * pairs; p < n; ++p) c.residual.push_back(sigma[p] + 1);
        add(c);
    }
    return pool;
}

std::optional<RefinedConstituent> constituent_poly(const Partition& shape, const Partition& gamma, unsigned jobs) {
    check_gamma(shape, gamma);
    const int n = shape.n();
    const int j = (n - gamma.n()) / 2;
    const auto pool = chain_pool(shape, j);
    const WordSum v = reference_vector(gamma);
    const BigInt norm = inner_product(v, v);

    // Rank over Q(N): the larger of the ranks at the two top sample points.
    const int top = n + 2 * j + 1;
    const RatMatrix hi1 = gram_of(chain_images(shape, v, pool, top - 1, jobs), norm);
    const RatMatrix hi2 = gram_of(chain_images(shape, v, pool, top, jobs), norm);
    std::vector<std::size_t> piv1, piv2;
    const std::size_t r1 = rational_rank(hi1, &piv1);
    const std::size_t r2 = rational_rank(hi2, &piv2);
    if (r1 == 0 && r2 == 0) return std::nullopt;
    const auto& sel = r1 >= r2 ? piv1 : piv2;

    RefinedConstituent out;
    out.gamma = gamma;
    out.multiplicity = static_cast<int>(sel.size());
    for (std::size_t a : sel) out.chains.push_back(pool[a]);

    const std::size_t m = sel.size();
    std::vector<std::vector<std::vector<std::pair<BigInt, BigRat>>>> samples(
        m, std::vector<std::vector<std::pair<BigInt, BigRat>>>(m));
    for (int dim = n; dim <= top; ++dim) {
        RatMatrix g;
        if (dim == top - 1 || dim == top) {
            const RatMatrix& full = dim == top ? hi2 : hi1;
            g.assign(m, std::vector<BigRat>(m));
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) g[a][b] = full[sel[a]][sel[b]];
        } else {
            g = gram_of(chain_images(shape, v, out.chains, dim, jobs), norm);
        }
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) samples[a][b].emplace_back(BigInt(dim), g[a][b]);
    }
    out.c_matrix.assign(m, std::vector<IntPoly>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) out.c_matrix[a][b] = interpolate(samples[a][b], static_cast<unsigned>(2 * j));
    out.c_det = poly_determinant(out.c_matrix);
    if (out.c_det.is_zero()) throw std::logic_error("selected chains are dependent");
    out.c_reduced = SquareClassFormula::polynomial(out.c_det).reduced();
    return out;
}

namespace {

const RefinedResult& refined_cached(const Partition& shape, unsigned jobs, std::map<Partition, RefinedResult>& memo) {
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    RefinedResult res;
    res.shape = shape;
    const int n = shape.n();
    if (n == 0) {
        res.dimension = res.refined_dimension = IntPoly(1L);
        return memo.emplace(shape, std::move(res)).first->second;
    }
    const SymDetResult sym = symmetrization_determinant(shape, jobs);
    res.dimension = sym.dimension;
    res.refined_dimension = sym.dimension;
    SquareClassFormula det = sym.determinant();
    for (int j = 1; 2 * j <= n; ++j) {
        for (const auto& gamma : partitions_of(n - 2 * j)) {
            auto c = constituent_poly(shape, gamma, jobs);
            if (!c) continue;
            const RefinedResult& sub = refined_cached(gamma, jobs, memo);
            const IntPoly mult(static_cast<long>(c->multiplicity));
            res.refined_dimension -= mult * sub.refined_dimension;
            SquareClassFormula part = SquareClassFormula::polynomial(c->c_det, sub.refined_dimension);
            part *= sub.refined_det.pow(mult);
            det *= part.inverse();
            res.constituents.push_back(std::move(*c));
        }
    }
    res.refined_det = det.reduced();
    return memo.emplace(shape, std::move(res)).first->second;
}

}  // namespace

RefinedResult refined_decomposition(const Partition& shape, unsigned jobs) {
    if (shape.n() > 7) throw std::invalid_argument("beyond supported degree");
    std::map<Partition, RefinedResult> memo;
    return refined_cached(shape, jobs, memo);
}

}  // namespace symdet
