#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symdet/exact.hpp"

namespace symdet {

/// A formal product  prod p^{e_p(N)} * prod f(N)^{g_f(N)} * det(B)^{h(N)}
/// with integer bases p (primes, or -1) and primitive linear or irreducible
/// polynomial bases f.
///
/// Exponents are polynomials in N. `reduced()` brings integer-base exponents
/// to the canonical binomial form sum_k eps_k C(N,k), eps_k in {0,1}; this is
/// exact modulo squares because every exponent that arises is integer-valued.
/// Polynomial-base and det(B) exponents are never reduced mod 2 symbolically.
class SquareClassFormula {
public:
    SquareClassFormula() = default;

    /// value^exponent for a nonzero rational value.
    static SquareClassFormula constant(const BigRat& value, const IntPoly& exponent = IntPoly(1L));
    /// p(N)^exponent. A residual without rational roots is kept as one base
    /// and marks the formula unreduced.
    static SquareClassFormula polynomial(const IntPoly& p, const IntPoly& exponent = IntPoly(1L));
    static SquareClassFormula det_b(const IntPoly& exponent);

    const std::map<BigInt, IntPoly>& integer_factors() const { return integer_; }
    const std::vector<std::pair<IntPoly, IntPoly>>& polynomial_factors() const { return poly_; }
    const IntPoly& detb_exponent() const { return detb_; }
    bool unreduced() const { return unreduced_; }

    SquareClassFormula& operator*=(const SquareClassFormula& rhs);
    friend SquareClassFormula operator*(SquareClassFormula a, const SquareClassFormula& b) { return a *= b; }
    /// Raises every exponent to exponent * e.
    SquareClassFormula pow(const IntPoly& e) const;
    SquareClassFormula inverse() const { return pow(IntPoly(-1L)); }

    SquareClassFormula reduced() const;

    /// For a reduced formula: prime -> set of k with C(N,k) in its exponent.
    /// Throws std::logic_error if some integer exponent is not integer-valued.
    std::map<BigInt, std::set<unsigned>> binomial_pairs() const;

    /// Same reduced numeric square class (integer part and polynomial part
    /// after reduction; det(B) exponents compared as polynomials).
    bool equivalent(const SquareClassFormula& other) const;

    struct Evaluation {
        BigInt squarefree;     // square class of the numeric part
        BigInt detb_exponent;  // exponent of det(B) at this N
    };
    /// Square class at a concrete N (all exponents evaluated exactly).
    Evaluation evaluate(long n) const;

    friend bool operator==(const SquareClassFormula& a, const SquareClassFormula& b);

private:
    void add_integer(const BigInt& p, const IntPoly& e);
    void add_polynomial(const IntPoly& f, const IntPoly& e);
    void normalize();

    std::map<BigInt, IntPoly> integer_;
    std::vector<std::pair<IntPoly, IntPoly>> poly_;
    IntPoly detb_;
    bool unreduced_ = false;
};

/// Primes sharing one exponent set multiplied into a single base, sorted by
/// base.
std::vector<std::pair<BigInt, std::set<unsigned>>> group_binomial_pairs(const std::map<BigInt, std::set<unsigned>>& pairs);

/// Integer exponents grouped into composite bases with a shared exponent,
/// e.g. {2:{3,4}, 3:{3,4}} -> "6^(C(N,3)+C(N,4))".
std::string binomial_pairs_string(const std::map<BigInt, std::set<unsigned>>& pairs);

/// Human-readable form of an integer-base exponent: binomial basis when all
/// coefficients are small integers of at most three terms, otherwise factored.
/// Polynomial-base and det(B) exponents are always printed factored.
std::string exponent_string(const IntPoly& e);

/// Full text rendering, e.g. "3^C(N,3) * 2^N * (N-1)^N * det(B)^(N^2-2)".
std::string to_string(const SquareClassFormula& f);

}  // namespace symdet
