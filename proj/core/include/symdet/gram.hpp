#pragma once

#include <optional>
#include <vector>

#include "symdet/combinat.hpp"
#include "symdet/exact.hpp"
#include "symdet/square_class.hpp"

namespace symdet {

/// X_C for one content pattern: entry (s, t) is the reduced inner product of
/// e_lambda v(s) and e_lambda v(t), tableaux in ssyt_with_pattern order.
struct GramBlock {
    Partition shape;
    ContentPattern pattern;
    std::vector<SemiStandardTableau> tableaux;
    std::vector<std::vector<BigInt>> matrix;
    BigInt det;

    std::size_t size() const { return matrix.size(); }
};

/// Throws std::invalid_argument("no tableaux") when K(shape, pattern) = 0.
GramBlock gram_block(const Partition& shape, const ContentPattern& pattern);

/// det(Sym_lambda(B)) = c(lambda, N) * det(B)^{d(lambda,N) n / N}.
struct SymDetResult {
    Partition shape;
    std::vector<GramBlock> blocks;     // patterns with K >= 1, compositions_of order
    SquareClassFormula c_unreduced;    // prod det(X_C)^{C(N,k)}
    SquareClassFormula c_formula;      // reduced: prod p^{sum C(N,k)}
    IntPoly dimension;
    IntPoly detb_exponent;

    /// c_formula * det(B)^detb_exponent.
    SquareClassFormula determinant() const;
};

/// Blocks are computed on up to `jobs` threads (0: all cores); the result does
/// not depend on the job count.
SymDetResult symmetrization_determinant(const Partition& shape, unsigned jobs = 1);

/// Closed forms for (n), (1^n), (2,1^{n-2}) and (3,1^{n-3}), unreduced.
/// Empty for every other shape.
std::optional<SquareClassFormula> closed_form_c(const Partition& shape);

/// Determinant of the multiplicity-free content block of the hook
/// (ell, 1^{n-ell}):  ((ell-1)! (n-ell+1)!)^{C(n-1,ell-1)} * n^{C(n-2,ell-2)}.
/// Requires 1 <= ell <= n.
BigInt hook_block_det(int n, int ell);

}  // namespace symdet
