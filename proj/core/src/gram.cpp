#include "symdet/gram.hpp"

#include <stdexcept>

#include "symdet/parallel.hpp"
#include "symdet/symmetrizer.hpp"

namespace symdet {

GramBlock gram_block(const Partition& shape, const ContentPattern& pattern) {
    GramBlock block{shape, pattern, ssyt_with_pattern(shape, pattern), {}, 0};
    if (block.tableaux.empty()) throw std::invalid_argument("no tableaux");
    const TableauFrame frame(shape);
    std::vector<WordSum> images;
    images.reserve(block.tableaux.size());
    for (const auto& t : block.tableaux) images.push_back(apply_symmetrizer(frame, word_of_tableau(frame, t)).sum);
    const std::size_t k = images.size();
    block.matrix.assign(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) block.matrix[i][j] = block.matrix[j][i] = inner_product(images[i], images[j]);
    block.det = bareiss_determinant(block.matrix);
    return block;
}

SquareClassFormula SymDetResult::determinant() const { return c_formula * SquareClassFormula::det_b(detb_exponent); }

SymDetResult symmetrization_determinant(const Partition& shape, unsigned jobs) {
    if (shape.n() == 0) throw std::invalid_argument("symmetrization of the empty partition");
    const auto patterns = compositions_of(shape.n());
    std::vector<std::optional<GramBlock>> slots(patterns.size());
    parallel_for(patterns.size(), jobs, [&](std::size_t i) {
        if (kostka(shape, patterns[i]) > 0) slots[i] = gram_block(shape, patterns[i]);
    });

    SymDetResult res;
    res.shape = shape;
    for (auto& s : slots) {
        if (!s) continue;
        if (s->det == 0) throw std::logic_error("degenerate Gram block " + s->pattern.notation());
        res.c_unreduced *= SquareClassFormula::constant(s->det, IntPoly::binomial(static_cast<unsigned>(s->pattern.length())));
        res.blocks.push_back(std::move(*s));
    }
    res.c_formula = res.c_unreduced.reduced();
    res.dimension = dimension_poly(shape);
    res.detb_exponent = (res.dimension * IntPoly(static_cast<long>(shape.n()))).exact_div(IntPoly::variable());
    return res;
}

namespace {

bool all_equal(const std::vector<int>& v, int x, std::size_t from = 0) {
    for (std::size_t i = from; i < v.size(); ++i)
        if (v[i] != x) return false;
    return true;
}

SquareClassFormula pow_const(const BigInt& base, const IntPoly& e) { return SquareClassFormula::constant(BigRat(base), e); }

IntPoly binom_poly(long k) { return k < 0 ? IntPoly() : IntPoly::binomial(static_cast<unsigned>(k)); }

IntPoly scaled(const IntPoly& p, const BigInt& s) { return p * IntPoly(s); }

}  // namespace

std::optional<SquareClassFormula> closed_form_c(const Partition& shape) {
    const int n = shape.n();
    const auto& p = shape.parts();
    if (n < 1) return std::nullopt;

    // Exterior power: (n!)^{C(N,n)}.
    if (all_equal(p, 1)) return pow_const(factorial(n), binom_poly(n));

    // Symmetric power: prod over compositions (n!/prod x_i!)^{C(N,k)}.
    if (p.size() == 1) {
        SquareClassFormula f;
        for (const auto& c : compositions_of(n)) {
            BigInt multinomial = factorial(n);
            for (int x : c.parts()) multinomial /= factorial(x);
            f *= pow_const(multinomial, binom_poly(static_cast<long>(c.length())));
        }
        return f;
    }

    // (2,1^{n-2}): n^{C(N,n)} ((n-1)!)^{(n-1) C(N+1,n)}.
    if (p[0] == 2 && all_equal(p, 1, 1)) {
        SquareClassFormula f = pow_const(n, binom_poly(n));
        f *= pow_const(factorial(n - 1), scaled(IntPoly::binomial(n, 1), n - 1));
        return f;
    }

    // (3,1^{n-3}), one factor per family of contents:
    //   one letter thrice:        (n-2)!               per C(N,n-2), n-2 patterns
    //   two letters twice:        2 (n-2)!             per C(N,n-2), C(n-2,2) patterns
    //   one letter twice:         (n-2)!^{n-2} 2^{n-3} n  per C(N,n-1), n-1 patterns
    //   multiplicity free:        (2(n-2)!)^{C(n-1,2)} n^{n-2}  per C(N,n)
    if (p[0] == 3 && all_equal(p, 1, 1)) {
        const BigInt f2 = factorial(n - 2);
        SquareClassFormula f = pow_const(f2, scaled(binom_poly(n - 2), n - 2));
        f *= pow_const(2 * f2, scaled(binom_poly(n - 2), binomial(n - 2, 2)));
        BigInt twice = n;
        mpz_mul_2exp(twice.get_mpz_t(), twice.get_mpz_t(), static_cast<unsigned long>(n - 3));
        f *= pow_const(f2, scaled(binom_poly(n - 1), BigInt((n - 2) * (n - 1))));
        f *= pow_const(twice, scaled(binom_poly(n - 1), n - 1));
        f *= pow_const(2 * f2, scaled(binom_poly(n), binomial(n - 1, 2)));
        f *= pow_const(n, scaled(binom_poly(n), n - 2));
        return f;
    }
    return std::nullopt;
}

BigInt hook_block_det(int n, int ell) {
    if (ell < 1 || ell > n) throw std::invalid_argument("hook arm out of range");
    BigInt base = factorial(static_cast<unsigned>(ell - 1)) * factorial(static_cast<unsigned>(n - ell + 1));
    BigInt r1, r2;
    mpz_pow_ui(r1.get_mpz_t(), base.get_mpz_t(), binomial(n - 1, ell - 1).get_ui());
    const BigInt nn = n;
    mpz_pow_ui(r2.get_mpz_t(), nn.get_mpz_t(), binomial(n - 2, ell - 2).get_ui());
    return r1 * r2;
}

}  // namespace symdet
