#include "render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace symdet::cli {

using nlohmann::ordered_json;

namespace {

std::string strip_stars(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
    return s;
}

std::string binom_latex(const std::set<unsigned>& ks) {
    std::string out;
    for (unsigned k : ks) out += (out.empty() ? "" : " + ") + std::string("\\binom{N}{") + std::to_string(k) + "}";
    return out;
}

std::string matrix_text(const std::vector<std::vector<BigInt>>& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? ", " : "") << m[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string chain_text(const EmbeddingChain& c) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.pairs.size(); ++i) os << (i ? "," : "") << "(" << c.pairs[i].first << "," << c.pairs[i].second << ")";
    os << "]";
    if (!c.residual.empty()) {
        os << " residual (";
        for (std::size_t i = 0; i < c.residual.size(); ++i) os << (i ? "," : "") << c.residual[i];
        os << ")";
    }
    return os.str();
}

ordered_json parts_json(const Partition& p) { return ordered_json(p.parts()); }

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

constexpr std::size_t kTextMatrixLimit = 4;

}  // namespace

std::string compact_string(const SquareClassFormula& f) {
    const IntPoly one(1L);
    bool simple = f.detb_exponent().is_zero() && !f.unreduced();
    for (const auto& [p, e] : f.integer_factors()) simple = simple && e == one;
    for (const auto& [b, e] : f.polynomial_factors()) simple = simple && e == one;
    if (!simple) return to_string(f);
    BigInt content = 1;
    for (const auto& [p, e] : f.integer_factors()) content *= p;
    std::string out;
    if (content != 1 || f.polynomial_factors().empty()) out = content == -1 ? "-" : content.get_str();
    for (const auto& [b, e] : f.polynomial_factors()) out += strip_stars(factored_string(b));
    return out;
}

std::string latex_poly(const IntPoly& p) { return strip_stars(factored_string(p)); }

std::string latex_c(const SquareClassFormula& reduced) {
    const auto terms = group_binomial_pairs(reduced.binomial_pairs());
    if (terms.empty()) return "1";
    std::string out;
    for (const auto& [base, ks] : terms) out += base.get_str() + "^{" + binom_latex(ks) + "}";
    return out;
}

ordered_json poly_json(const IntPoly& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return {{"factored", p.is_zero() ? std::string("0") : factored_string(p)}, {"coefficients", coeffs}};
}

ordered_json square_class_json(const SquareClassFormula& f) {
    ordered_json factors = ordered_json::array();
    bool binomial = true;
    for (const auto& [p, e] : f.integer_factors()) binomial = binomial && e.is_integer_valued();
    std::map<BigInt, std::set<unsigned>> pairs;
    if (binomial) {
        try {
            pairs = f.binomial_pairs();
        } catch (const std::logic_error&) {
            binomial = false;
        }
    }
    for (const auto& [p, e] : f.integer_factors()) {
        ordered_json x{{"base", p.get_str()}};
        const auto b = e.binomial_basis();
        const bool zero_one = binomial && std::all_of(b.begin(), b.end(), [](const BigRat& c) { return c == 0 || c == 1; });
        if (zero_one && !pairs[p].empty() && b[0] == 0)
            x["exponent_binomial_k"] = std::vector<unsigned>(pairs[p].begin(), pairs[p].end());
        else
            x["exponent_poly"] = poly_json(e);
        factors.push_back(x);
    }
    for (const auto& [base, e] : f.polynomial_factors())
        factors.push_back({{"base", factored_string(base)}, {"exponent_poly", poly_json(e)}});
    ordered_json out{{"text", to_string(f)}, {"factors", factors}};
    if (!f.detb_exponent().is_zero()) out["detb_exponent"] = poly_json(f.detb_exponent());
    if (f.unreduced()) out["unreduced"] = true;
    return out;
}

ordered_json sym_json(const SymDetResult& r) {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : r.blocks) {
        ordered_json m = ordered_json::array();
        for (const auto& row : b.matrix) {
            ordered_json jr = ordered_json::array();
            for (const auto& x : row) jr.push_back(x.get_str());
            m.push_back(jr);
        }
        blocks.push_back({{"pattern", b.pattern.parts()},
                          {"binomial_k", b.pattern.length()},
                          {"size", b.size()},
                          {"det", b.det.get_str()},
                          {"matrix", m}});
    }
    return {{"shape", r.shape.notation()},
            {"parts", parts_json(r.shape)},
            {"n", r.shape.n()},
            {"dimension", factored_string(r.dimension)},
            {"dimension_poly", poly_json(r.dimension)},
            {"detb_exponent", poly_json(r.detb_exponent)},
            {"blocks", blocks},
            {"c_unreduced", square_class_json(r.c_unreduced)},
            {"c", binomial_pairs_string(r.c_formula.binomial_pairs())},
            {"c_formula", square_class_json(r.c_formula)},
            {"determinant", to_string(r.determinant())}};
}

ordered_json refined_json(const RefinedResult& r) {
    ordered_json cons = ordered_json::array();
    for (const auto& c : r.constituents) {
        ordered_json matrix = ordered_json::array();
        for (const auto& row : c.c_matrix) {
            ordered_json jr = ordered_json::array();
            for (const auto& e : row) jr.push_back(poly_json(e));
            matrix.push_back(jr);
        }
        ordered_json chains = ordered_json::array();
        for (const auto& ch : c.chains) {
            ordered_json pairs = ordered_json::array();
            for (auto [a, b] : ch.pairs) pairs.push_back({a, b});
            chains.push_back({{"pairs", pairs}, {"residual", ch.residual}});
        }
        cons.push_back({{"gamma", c.gamma.notation()},
                        {"gamma_parts", parts_json(c.gamma)},
                        {"multiplicity", c.multiplicity},
                        {"c", compact_string(c.c_reduced)},
                        {"c_reduced", square_class_json(c.c_reduced)},
                        {"c_det", poly_json(c.c_det)},
                        {"c_matrix", matrix},
                        {"chains", chains}});
    }
    return {{"shape", r.shape.notation()},
            {"parts", parts_json(r.shape)},
            {"n", r.shape.n()},
            {"dimension", poly_json(r.dimension)},
            {"constituents", cons},
            {"refined_dimension", poly_json(r.refined_dimension)},
            {"refined_det", square_class_json(r.refined_det)}};
}

ordered_json report_json(const std::vector<VerifyReport>& reports) {
    ordered_json out = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json items = ordered_json::array();
        for (const auto& i : rep.items)
            items.push_back({{"item", i.item}, {"ok", i.ok}, {"expected", i.expected}, {"got", i.got}});
        out.push_back({{"scope", rep.scope},
                       {"checked", rep.checked()},
                       {"mismatches", rep.mismatches()},
                       {"passed", rep.passed()},
                       {"items", items}});
    }
    return out;
}

std::string render_sym(const SymDetResult& r, Format f) {
    if (f == Format::json) return json_text(sym_json(r));
    std::ostringstream os;
    if (f == Format::latex) {
        os << "\\begin{tabular}{|ccc|}\n\\hline\n\\lambda & d(\\lambda) & c(\\lambda) \\\\\n\\hline\n";
        os << r.shape.notation() << " & " << latex_poly(r.dimension) << " & " << latex_c(r.c_formula) << " \\\\\n";
        os << "\\hline\n\\end{tabular}\n";
        return os.str();
    }
    os << "lambda = " << r.shape.notation() << "\n";
    os << "d = " << factored_string(r.dimension) << "\n";
    for (const auto& b : r.blocks) {
        os << "block " << b.pattern.notation() << " x C(N," << b.pattern.length() << ") size " << b.size() << " det " << b.det;
        if (b.size() <= kTextMatrixLimit) os << " " << matrix_text(b.matrix);
        os << "\n";
    }
    os << "c (unreduced) = " << to_string(r.c_unreduced) << "\n";
    os << "c = " << binomial_pairs_string(r.c_formula.binomial_pairs()) << "\n";
    os << "det(B) exponent = " << factored_string(r.detb_exponent) << "\n";
    os << "det = " << to_string(r.determinant()) << "\n";
    return os.str();
}

std::string render_table(const std::vector<SymDetResult>& rows, Format f) {
    if (f == Format::json) {
        ordered_json out = ordered_json::array();
        for (const auto& r : rows)
            out.push_back({{"n", r.shape.n()},
                           {"shape", r.shape.notation()},
                           {"dimension", factored_string(r.dimension)},
                           {"c", binomial_pairs_string(r.c_formula.binomial_pairs())}});
        return json_text(out);
    }
    std::ostringstream os;
    if (f == Format::latex) {
        os << "\\begin{tabular}{|cccc|}\n\\hline\nn & \\lambda & d(\\lambda) & c(\\lambda) \\\\\n";
        int last = -1;
        for (const auto& r : rows) {
            if (r.shape.n() != last) os << "\\hline\n";
            os << (r.shape.n() != last ? std::to_string(r.shape.n()) : std::string()) << " & " << r.shape.notation() << " & "
               << latex_poly(r.dimension) << " & " << latex_c(r.c_formula) << " \\\\\n";
            last = r.shape.n();
        }
        os << "\\hline\n\\end{tabular}\n";
        return os.str();
    }
    std::size_t w_shape = 6, w_dim = 4;
    for (const auto& r : rows) {
        w_shape = std::max(w_shape, r.shape.notation().size());
        w_dim = std::max(w_dim, factored_string(r.dimension).size());
    }
    os << std::left << std::setw(3) << "n" << "  " << std::setw(static_cast<int>(w_shape)) << "lambda" << "  "
       << std::setw(static_cast<int>(w_dim)) << "d" << "  c\n";
    for (const auto& r : rows)
        os << std::left << std::setw(3) << r.shape.n() << "  " << std::setw(static_cast<int>(w_shape)) << r.shape.notation()
           << "  " << std::setw(static_cast<int>(w_dim)) << factored_string(r.dimension) << "  "
           << binomial_pairs_string(r.c_formula.binomial_pairs()) << "\n";
    return os.str();
}

std::string render_refined(const RefinedResult& r, Format f) {
    if (f == Format::json) return json_text(refined_json(r));
    std::ostringstream os;
    if (f == Format::latex) {
        os << "\\begin{tabular}{|c|c|l|}\n\\hline\n\\lambda & \\gamma & c(\\lambda,\\gamma) \\\\\n\\hline\n";
        for (const auto& c : r.constituents) {
            os << r.shape.notation() << " & " << (c.multiplicity > 1 ? std::to_string(c.multiplicity) + "\\cdot " : "")
               << c.gamma.notation() << " & ";
            os << (c.multiplicity > 1 ? "\\det = " : "") << compact_string(c.c_reduced) << " \\\\\n";
        }
        os << "\\hline\n\\end{tabular}\n";
        return os.str();
    }
    os << "lambda = " << r.shape.notation() << "\n";
    os << "d = " << factored_string(r.dimension) << "\n";
    if (r.constituents.empty()) os << "no constituents\n";
    for (const auto& c : r.constituents) {
        os << "constituent " << c.gamma.notation() << " m=" << c.multiplicity << " c = " << compact_string(c.c_reduced)
           << "  (raw det " << factored_string(c.c_det) << ")\n";
        for (std::size_t a = 0; a < c.chains.size(); ++a) {
            os << "  chain " << chain_text(c.chains[a]) << ":";
            for (const auto& e : c.c_matrix[a]) os << "  " << e.expanded();
            os << "\n";
        }
    }
    os << "d' = " << factored_string(r.refined_dimension) << "\n";
    os << "det' = " << to_string(r.refined_det) << "\n";
    return os.str();
}

std::string render_reports(const std::vector<VerifyReport>& reports, Format f) {
    if (f == Format::json) return json_text(report_json(reports));
    std::ostringstream os;
    if (f == Format::latex) {
        os << "\\begin{tabular}{|l|l|l|}\n\\hline\nitem & status & value \\\\\n\\hline\n";
        for (const auto& rep : reports)
            for (const auto& i : rep.items)
                os << "\\verb|" << i.item << "| & " << (i.ok ? "ok" : "FAIL") << " & \\verb|" << i.got << "| \\\\\n";
        os << "\\hline\n\\end{tabular}\n";
        return os.str();
    }
    for (const auto& rep : reports) {
        for (const auto& i : rep.items) {
            if (i.ok)
                os << "ok    " << i.item << "  " << i.got << "\n";
            else
                os << "FAIL  " << i.item << "  expected " << i.expected << ", got " << i.got << "\n";
        }
        os << rep.scope << ": " << rep.checked() << " checked, " << rep.mismatches() << " mismatches\n";
    }
    return os.str();
}

}  // namespace symdet::cli
