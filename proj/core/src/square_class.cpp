#include "symdet/square_class.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symdet {

SquareClassFormula SquareClassFormula::constant(const BigRat& value, const IntPoly& exponent) {
    if (value == 0) throw std::domain_error("zero has no square class");
    SquareClassFormula f;
    if (value < 0) f.add_integer(-1, exponent);
    for (const auto& [p, e] : factor_integer(value.get_num())) f.add_integer(p, exponent * IntPoly(static_cast<long>(e)));
    for (const auto& [p, e] : factor_integer(value.get_den())) f.add_integer(p, -exponent * IntPoly(static_cast<long>(e)));
    f.normalize();
    return f;
}

SquareClassFormula SquareClassFormula::polynomial(const IntPoly& p, const IntPoly& exponent) {
    if (p.is_zero()) throw std::domain_error("zero has no square class");
    const auto fac = poly_factor_rational(p);
    SquareClassFormula f = constant(fac.content, exponent);
    for (const auto& [lin, m] : fac.linear_factors) f.add_polynomial(lin, exponent * IntPoly(static_cast<long>(m)));
    if (!fac.residual.is_constant()) {
        f.add_polynomial(fac.residual, exponent);
        f.unreduced_ = true;
    }
    f.normalize();
    return f;
}

SquareClassFormula SquareClassFormula::det_b(const IntPoly& exponent) {
    SquareClassFormula f;
    f.detb_ = exponent;
    return f;
}

void SquareClassFormula::add_integer(const BigInt& p, const IntPoly& e) { integer_[p] += e; }

void SquareClassFormula::add_polynomial(const IntPoly& base, const IntPoly& e) {
    for (auto& [b, x] : poly_) {
        if (b == base) {
            x += e;
            return;
        }
    }
    poly_.emplace_back(base, e);
}

void SquareClassFormula::normalize() {
    for (auto it = integer_.begin(); it != integer_.end();) {
        if (it->second.is_zero())
            it = integer_.erase(it);
        else
            ++it;
    }
    poly_.erase(std::remove_if(poly_.begin(), poly_.end(), [](const auto& x) { return x.second.is_zero(); }),
                poly_.end());
    std::sort(poly_.begin(), poly_.end(), [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
}

SquareClassFormula& SquareClassFormula::operator*=(const SquareClassFormula& rhs) {
    for (const auto& [p, e] : rhs.integer_) add_integer(p, e);
    for (const auto& [b, e] : rhs.poly_) add_polynomial(b, e);
    detb_ += rhs.detb_;
    unreduced_ = unreduced_ || rhs.unreduced_;
    normalize();
    return *this;
}

SquareClassFormula SquareClassFormula::pow(const IntPoly& e) const {
    SquareClassFormula f = *this;
    for (auto& [p, x] : f.integer_) x *= e;
    for (auto& [b, x] : f.poly_) x *= e;
    f.detb_ *= e;
    f.normalize();
    return f;
}

namespace {

IntPoly reduce_mod2(const IntPoly& e) {
    auto b = e.binomial_basis();
    for (auto& c : b) {
        if (c.get_den() != 1) return e;  // not integer-valued; leave it alone
        BigInt r = c.get_num() % 2;
        c = (r == 0) ? 0 : 1;
    }
    return IntPoly::from_binomial_basis(b);
}

}  // namespace

SquareClassFormula SquareClassFormula::reduced() const {
    SquareClassFormula f = *this;
    for (auto& [p, x] : f.integer_) x = reduce_mod2(x);
    for (auto& [b, x] : f.poly_)
        if (x.leading() < 0) x = -x;
    f.normalize();
    return f;
}

std::map<BigInt, std::set<unsigned>> SquareClassFormula::binomial_pairs() const {
    std::map<BigInt, std::set<unsigned>> out;
    for (const auto& [p, x] : integer_) {
        const auto b = x.binomial_basis();
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (b[k].get_den() != 1) throw std::logic_error("exponent is not integer-valued");
            if (b[k].get_num() % 2 != 0) out[p].insert(static_cast<unsigned>(k));
        }
    }
    return out;
}

bool SquareClassFormula::equivalent(const SquareClassFormula& other) const {
    return reduced() == other.reduced();
}

SquareClassFormula::Evaluation SquareClassFormula::evaluate(long n) const {
    Evaluation ev{1, 0};
    auto odd = [](const BigRat& e) {
        if (e.get_den() != 1) throw std::domain_error("non-integral exponent at this N");
        return e.get_num() % 2 != 0;
    };
    BigRat value = 1;
    for (const auto& [p, e] : integer_)
        if (odd(e.eval(n))) value *= p;
    for (const auto& [b, e] : poly_) {
        const BigRat v = b.eval(n);
        if (v == 0) throw std::domain_error("polynomial factor vanishes at this N");
        if (odd(e.eval(n))) value *= v;
    }
    ev.squarefree = squarefree_part(value).squarefree;
    const BigRat d = detb_.eval(n);
    if (d.get_den() != 1) throw std::domain_error("non-integral det(B) exponent at this N");
    ev.detb_exponent = d.get_num();
    return ev;
}

bool operator==(const SquareClassFormula& a, const SquareClassFormula& b) {
    return a.integer_ == b.integer_ && a.poly_ == b.poly_ && a.detb_ == b.detb_ && a.unreduced_ == b.unreduced_;
}

// ------------------------------------------------------------- rendering

namespace {

std::string strip_spaces(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

std::string binomial_sum(const std::vector<unsigned>& ks) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) os << "+";
        if (ks[i] == 0)
            os << "1";
        else if (ks[i] == 1)
            os << "N";
        else
            os << "C(N," << ks[i] << ")";
    }
    return os.str();
}

// True when s is one parenthesized group, "(...)".
bool is_wrapped(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0 && i + 1 != s.size()) return false;
    }
    return true;
}

std::string power(const std::string& base, const std::string& exp, bool compound_exp) {
    if (exp == "1") return base;
    return base + "^" + (compound_exp && !is_wrapped(exp) ? "(" + exp + ")" : exp);
}

}  // namespace

std::vector<std::pair<BigInt, std::set<unsigned>>> group_binomial_pairs(const std::map<BigInt, std::set<unsigned>>& pairs) {
    std::map<std::set<unsigned>, BigInt> grouped;
    for (const auto& [p, ks] : pairs) {
        if (ks.empty()) continue;
        auto [it, inserted] = grouped.emplace(ks, p);
        if (!inserted) it->second *= p;
    }
    std::vector<std::pair<BigInt, std::set<unsigned>>> terms;
    for (const auto& [ks, base] : grouped) terms.emplace_back(base, ks);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return terms;
}

std::string binomial_pairs_string(const std::map<BigInt, std::set<unsigned>>& pairs) {
    const auto terms = group_binomial_pairs(pairs);
    if (terms.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::vector<unsigned> ks(terms[i].second.begin(), terms[i].second.end());
        if (i) os << "*";
        std::string base = terms[i].first.get_str();
        if (terms[i].first < 0) base = "(" + base + ")";
        os << power(base, binomial_sum(ks), ks.size() > 1);
    }
    return os.str();
}

std::string exponent_string(const IntPoly& e) {
    if (e.is_constant()) return e.coeff(0).get_str();
    const auto b = e.binomial_basis();
    std::size_t terms = 0;
    bool small = true;
    for (const auto& c : b) {
        if (c == 0) continue;
        ++terms;
        small = small && c.get_den() == 1 && abs(c.get_num()) < 100;
    }
    if (!small || terms > 3) return strip_spaces(factored_string(e));
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] == 0) continue;
        const BigInt c = b[k].get_num();
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        const BigInt m = abs(c);
        const std::string unit = binomial_sum({static_cast<unsigned>(k)});
        if (k == 0)
            os << m;
        else if (m == 1)
            os << unit;
        else
            os << m << "*" << unit;
        first = false;
    }
    return os.str();
}

std::string to_string(const SquareClassFormula& f) {
    std::vector<std::string> parts;
    bool all_binomial = true;
    std::map<BigInt, std::set<unsigned>> pairs;
    try {
        for (const auto& [p, e] : f.integer_factors()) {
            const auto b = e.binomial_basis();
            for (std::size_t k = 0; k < b.size(); ++k) {
                if (b[k] == 1)
                    pairs[p].insert(static_cast<unsigned>(k));
                else if (b[k] != 0)
                    all_binomial = false;
            }
        }
    } catch (const std::exception&) {
        all_binomial = false;
    }
    if (all_binomial) {
        const std::string s = binomial_pairs_string(pairs);
        if (s != "1") parts.push_back(s);
    } else {
        for (const auto& [p, e] : f.integer_factors()) {
            std::string base = p < 0 ? "(" + p.get_str() + ")" : p.get_str();
            const std::string x = exponent_string(e);
            parts.push_back(power(base, x, x.find_first_of("+-*/") != std::string::npos));
        }
    }
    for (const auto& [b, e] : f.polynomial_factors()) {
        const std::string base = strip_spaces(factored_string(b));
        const std::string x = strip_spaces(factored_string(e));
        const bool paren_base = base.front() != '(' && base != "N";
        parts.push_back(power(paren_base ? "(" + base + ")" : base, x, x.find_first_of("+-*/") != std::string::npos));
    }
    if (!f.detb_exponent().is_zero()) {
        const std::string x = strip_spaces(factored_string(f.detb_exponent()));
        parts.push_back(power("det(B)", x, x.find_first_of("+-*/") != std::string::npos));
    }
    if (parts.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " * " : "") << parts[i];
    return os.str();
}

}  // namespace symdet
