#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace symdet {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt factorial(unsigned n);
/// Binomial coefficient C(n, k); zero when k < 0 or k > n (n >= 0).
BigInt binomial(long n, long k);

std::string to_string(const BigInt& x);
std::string to_string(const BigRat& x);

/// Prime factorization of |x| for x != 0. Small primes by trial division,
/// the remaining cofactor by Pollard rho.
std::map<BigInt, unsigned> factor_integer(const BigInt& x);

struct SquareFreePart {
    BigInt squarefree;                       // signed, squarefree
    std::map<BigInt, unsigned> factorization;  // of |num * den|
};

/// Representative of x modulo nonzero rational squares.
/// Throws std::domain_error("zero has no square class") for x == 0.
SquareFreePart squarefree_part(const BigRat& x);

/// Univariate polynomial in the formal variable N with rational coefficients,
/// ascending degree. The zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);  // NOLINT: constants convert implicitly
    IntPoly(const BigInt& c);  // NOLINT
    IntPoly(const BigRat& c);  // NOLINT
    explicit IntPoly(std::vector<BigRat> coeffs);

    /// The polynomial N.
    static IntPoly variable();
    /// a*N + b
    static IntPoly linear(const BigInt& a, const BigInt& b);
    /// C(N + shift, k) expanded, k >= 0.
    static IntPoly binomial(unsigned k, long shift = 0);

    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    BigRat coeff(std::size_t i) const;
    BigRat leading() const;

    BigRat operator()(const BigRat& x) const;
    BigRat eval(long x) const { return (*this)(BigRat(x)); }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const BigRat& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    /// Quotient and remainder of Euclidean division; divisor must be nonzero.
    std::pair<IntPoly, IntPoly> divmod(const IntPoly& divisor) const;
    /// Exact quotient; throws std::domain_error if the remainder is nonzero.
    IntPoly exact_div(const IntPoly& divisor) const;

    /// Coefficients b_k with p(N) = sum_k b_k C(N,k). Integer-valued
    /// polynomials have integer b_k.
    std::vector<BigRat> binomial_basis() const;
    static IntPoly from_binomial_basis(const std::vector<BigRat>& b);
    bool is_integer_valued() const;

    /// Expanded form, e.g. "1/3*N^3 - 1/3*N".
    std::string expanded() const;

private:
    void trim();
    std::vector<BigRat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

struct RationalFactorization {
    BigRat content;
    /// Primitive integer linear factors aN+b with a > 0 and multiplicities.
    /// Ordered N, N-1, N-2, ..., N+1, N+2, ..., then non-monic factors.
    std::vector<std::pair<IntPoly, unsigned>> linear_factors;
    /// Primitive, positive leading coefficient, no rational roots.
    IntPoly residual;

    IntPoly reassemble() const;
    bool split() const { return residual.is_constant(); }
};

/// p = content * prod factor^mult * residual. Requires p != 0.
RationalFactorization poly_factor_rational(const IntPoly& p);

/// Display order of factors: N, N-1, N-2, ..., N+1, N+2, ..., then
/// non-monic linear factors, then higher degree.
bool factor_less(const IntPoly& a, const IntPoly& b);

/// Factored string, e.g. "N^2*(N-1)*(N+1)/12". Falls back to the expanded
/// form for any residual that does not split.
std::string factored_string(const IntPoly& p);

/// Unique polynomial of degree <= degree_bound through the first
/// degree_bound+1 points, checked against every remaining point.
/// Throws std::invalid_argument for too few or repeated abscissae and
/// std::runtime_error("degree bound violated") on a failed check.
IntPoly interpolate(const std::vector<std::pair<BigInt, BigRat>>& points, unsigned degree_bound);

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

/// Rank of a rational matrix by exact elimination; `pivots` receives the
/// indices of a maximal independent row set chosen greedily in row order.
std::size_t rational_rank(const std::vector<std::vector<BigRat>>& rows, std::vector<std::size_t>* pivots = nullptr);

/// Determinant of a square matrix over Q[N] by fraction-free elimination.
IntPoly poly_determinant(std::vector<std::vector<IntPoly>> m);

}  // namespace symdet
