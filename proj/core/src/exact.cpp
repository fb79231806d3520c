#include "symdet/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symdet {

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const BigRat& x) { return x.get_str(); }

namespace {

constexpr unsigned long kTrialLimit = 10000;

BigInt pollard_rho(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto step = [&](const BigInt& v) {
            BigInt r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            BigInt diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<BigInt, unsigned> factor_integer(const BigInt& x) {
    if (x == 0) throw std::domain_error("cannot factor zero");
    std::map<BigInt, unsigned> out;
    BigInt n = abs(x);
    for (unsigned long p = 2; p <= kTrialLimit && n > 1; ++p) {
        if (p > 2 && p % 2 == 0) continue;
        if (BigInt(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            ++out[BigInt(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    factor_into(n, out);
    return out;
}

SquareFreePart squarefree_part(const BigRat& input) {
    BigRat x = input;
    x.canonicalize();  // callers may pass unreduced fractions such as 8/2
    if (x == 0) throw std::domain_error("zero has no square class");
    SquareFreePart res;
    res.factorization = factor_integer(x.get_num());
    for (const auto& [p, e] : factor_integer(x.get_den())) res.factorization[p] += e;
    res.squarefree = sgn(x);
    for (const auto& [p, e] : res.factorization)
        if (e % 2 == 1) res.squarefree *= p;
    return res;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(long c) : IntPoly(BigRat(c)) {}
IntPoly::IntPoly(const BigInt& c) : IntPoly(BigRat(c)) {}
IntPoly::IntPoly(const BigRat& c) {
    if (c != 0) coeffs_.push_back(c);
    trim();
}
IntPoly::IntPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

IntPoly IntPoly::variable() { return IntPoly(std::vector<BigRat>{0, 1}); }

IntPoly IntPoly::linear(const BigInt& a, const BigInt& b) {
    return IntPoly(std::vector<BigRat>{BigRat(b), BigRat(a)});
}

IntPoly IntPoly::binomial(unsigned k, long shift) {
    IntPoly r(1L);
    for (unsigned i = 0; i < k; ++i) r *= linear(1, shift - static_cast<long>(i));
    r *= BigRat(1, 1) / BigRat(factorial(k));
    return r;
}

void IntPoly::trim() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRat IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }

BigRat IntPoly::leading() const { return coeffs_.empty() ? BigRat(0) : coeffs_.back(); }

BigRat IntPoly::operator()(const BigRat& x) const {
    BigRat r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) { return *this += -rhs; }

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigRat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const BigRat& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    IntPoly rem = *this;
    std::vector<BigRat> quot(std::max<long>(degree() - divisor.degree() + 1, 0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const long shift = rem.degree() - divisor.degree();
        const BigRat f = rem.leading() / divisor.leading();
        quot[shift] = f;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) rem.coeffs_[i + shift] -= f * divisor.coeffs_[i];
        rem.trim();
    }
    return {IntPoly(std::move(quot)), rem};
}

IntPoly IntPoly::exact_div(const IntPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

std::vector<BigRat> IntPoly::binomial_basis() const {
    // b_k is the k-th forward difference at 0.
    const long d = degree();
    std::vector<BigRat> vals;
    for (long x = 0; x <= d; ++x) vals.push_back(eval(x));
    std::vector<BigRat> b;
    for (long k = 0; k <= d; ++k) {
        b.push_back(vals[0]);
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
        if (!vals.empty()) vals.pop_back();
    }
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

IntPoly IntPoly::from_binomial_basis(const std::vector<BigRat>& b) {
    IntPoly r;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] != 0) r += binomial(static_cast<unsigned>(k)) * IntPoly(b[k]);
    return r;
}

bool IntPoly::is_integer_valued() const {
    for (const auto& c : binomial_basis())
        if (c.get_den() != 1) return false;
    return true;
}

std::string IntPoly::expanded() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        BigRat c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (i == 0 || c != 1) {
            os << c.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << "N";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.expanded(); }

// ------------------------------------------------------- factorization

namespace {

// Primitive integer multiple of p with positive leading coefficient, and the
// rational c with p = c * q.
std::pair<BigRat, std::vector<BigInt>> primitive_part(const IntPoly& p) {
    BigInt l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& c : p.coeffs()) {
        BigRat scaled = c * l;
        ints.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (ints.back() < 0) g = -g;
    for (auto& c : ints) c /= g;
    BigRat content(g, l);
    content.canonicalize();
    return {content, ints};
}

std::vector<BigInt> divisors(const BigInt& x) {
    std::vector<BigInt> ds{1};
    for (const auto& [p, e] : factor_integer(x)) {
        const std::size_t base = ds.size();
        BigInt pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Evaluates integer polynomial q at u/v scaled by v^deg; zero iff u/v is a root.
BigInt homogeneous_eval(const std::vector<BigInt>& q, const BigInt& u, const BigInt& v) {
    BigInt r = 0, vpow = 1;
    // Horner in u with v powers accumulated from the top.
    for (std::size_t i = q.size(); i-- > 0;) {
        r = r * u + q[i] * vpow;
        vpow *= v;
    }
    return r;
}

// Divides q by (v*N - u), assuming u/v is a root.
std::vector<BigInt> divide_root(const std::vector<BigInt>& q, const BigInt& u, const BigInt& v) {
    std::vector<BigRat> cs(q.begin(), q.end());
    IntPoly quot = IntPoly(cs).exact_div(IntPoly::linear(v, -u));
    std::vector<BigInt> out;
    for (const auto& c : quot.coeffs()) {
        if (c.get_den() != 1) throw std::logic_error("non-integral quotient in root division");
        out.push_back(c.get_num());
    }
    return out;
}

}  // namespace

bool factor_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.degree() != 1) return a.coeffs() < b.coeffs();
    const bool ma = a.leading() == 1, mb = b.leading() == 1;
    if (ma != mb) return ma;
    if (!ma) {
        const BigRat ra = -a.coeff(0) / a.leading(), rb = -b.coeff(0) / b.leading();
        return ra > rb;
    }
    const BigRat sa = a.coeff(0), sb = b.coeff(0);
    auto key = [](const BigRat& s) { return s == 0 ? 0 : (s < 0 ? 1 : 2); };
    if (key(sa) != key(sb)) return key(sa) < key(sb);
    return abs(sa) < abs(sb);
}

IntPoly RationalFactorization::reassemble() const {
    IntPoly r(content);
    for (const auto& [f, m] : linear_factors)
        for (unsigned i = 0; i < m; ++i) r *= f;
    return r * residual;
}

RationalFactorization poly_factor_rational(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    auto [content, q] = primitive_part(p);
    RationalFactorization res;
    res.content = content;

    unsigned zero_mult = 0;
    while (q.size() > 1 && q.front() == 0) {
        q.erase(q.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) res.linear_factors.emplace_back(IntPoly::variable(), zero_mult);

    if (q.size() > 1) {
        const auto us = divisors(q.front());
        const auto vs = divisors(q.back());
        std::vector<std::pair<BigInt, BigInt>> roots;  // (u, v), v > 0, gcd 1
        for (const auto& v : vs) {
            for (const auto& u0 : us) {
                for (int s : {1, -1}) {
                    BigInt u = u0 * s;
                    BigInt g;
                    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
                    if (g != 1) continue;
                    unsigned mult = 0;
                    while (q.size() > 1 && homogeneous_eval(q, u, v) == 0) {
                        q = divide_root(q, u, v);
                        ++mult;
                    }
                    if (mult > 0) res.linear_factors.emplace_back(IntPoly::linear(v, -u), mult);
                }
            }
        }
    }
    std::sort(res.linear_factors.begin(), res.linear_factors.end(),
              [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });

    // q is still primitive with positive leading coefficient (it is a product of
    // the original primitive polynomial's factors with positive leads).
    std::vector<BigRat> cs(q.begin(), q.end());
    res.residual = IntPoly(cs);
    return res;
}

std::string factored_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    const auto f = poly_factor_rational(p);
    std::ostringstream os;
    BigRat c = f.content;
    if (c < 0) {
        os << "-";
        c = -c;
    }
    std::vector<std::string> parts;
    if (c.get_num() != 1 || (f.linear_factors.empty() && f.residual.is_constant())) parts.push_back(c.get_num().get_str());
    for (const auto& [lin, m] : f.linear_factors) {
        std::string s;
        if (lin == IntPoly::variable()) {
            s = "N";
        } else {
            std::ostringstream ls;
            ls << "(";
            if (lin.leading() != 1) ls << lin.leading().get_str() << "*";
            ls << "N" << (lin.coeff(0) > 0 ? "+" : "-") << BigRat(abs(lin.coeff(0))).get_str() << ")";
            s = ls.str();
        }
        if (m > 1) s += "^" + std::to_string(m);
        parts.push_back(s);
    }
    if (!f.residual.is_constant()) parts.push_back("(" + f.residual.expanded() + ")");
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    if (c.get_den() != 1) os << "/" << c.get_den().get_str();
    return os.str();
}

// ------------------------------------------------------- interpolation

IntPoly interpolate(const std::vector<std::pair<BigInt, BigRat>>& points, unsigned degree_bound) {
    if (points.size() < degree_bound + 2) throw std::invalid_argument("interpolation needs degree_bound + 2 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) throw std::invalid_argument("repeated abscissa");

    // Newton divided differences over the first degree_bound + 1 points.
    const std::size_t m = degree_bound + 1;
    std::vector<BigRat> dd;
    for (std::size_t i = 0; i < m; ++i) dd.push_back(points[i].second);
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / BigRat(points[i].first - points[i - level].first);

    IntPoly result;
    IntPoly basis(1L);
    for (std::size_t i = 0; i < m; ++i) {
        result += basis * IntPoly(dd[i]);
        basis *= IntPoly::linear(1, -points[i].first);
    }
    for (std::size_t i = m; i < points.size(); ++i)
        if (result(BigRat(points[i].first)) != points[i].second) throw std::runtime_error("degree bound violated");
    return result;
}

// ------------------------------------------------------- linear algebra

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::size_t rational_rank(const std::vector<std::vector<BigRat>>& rows, std::vector<std::size_t>* pivots) {
    std::vector<std::vector<BigRat>> basis;  // echelon rows
    std::vector<std::size_t> lead;           // leading column of each basis row
    if (pivots) pivots->clear();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<BigRat> v = rows[r];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const BigRat f = v[lead[b]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[b][j];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const BigRat& x) { return x != 0; });
        if (it == v.end()) continue;
        const std::size_t col = static_cast<std::size_t>(it - v.begin());
        const BigRat inv = 1 / v[col];
        for (auto& x : v) x *= inv;
        // Keep the basis fully reduced in the new pivot column.
        for (auto& row : basis) {
            const BigRat f = row[col];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) row[j] -= f * v[j];
        }
        basis.push_back(std::move(v));
        lead.push_back(col);
        if (pivots) pivots->push_back(r);
    }
    return basis.size();
}

IntPoly poly_determinant(std::vector<std::vector<IntPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPoly(1L);
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    IntPoly prev(1L);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return IntPoly();
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = IntPoly();
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1] * IntPoly(static_cast<long>(sign));
}

}  // namespace symdet
