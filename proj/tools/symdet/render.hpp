#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "symdet/gram.hpp"
#include "symdet/refined.hpp"
#include "verify.hpp"

namespace symdet::cli {

enum class Format { text, json, latex };

/// "2(N-1)" style for products of bases with exponent 1 and no det(B);
/// otherwise the general text form.
std::string compact_string(const SquareClassFormula& f);

std::string latex_poly(const IntPoly& p);
std::string latex_c(const SquareClassFormula& reduced);

nlohmann::ordered_json poly_json(const IntPoly& p);
nlohmann::ordered_json square_class_json(const SquareClassFormula& f);
nlohmann::ordered_json sym_json(const SymDetResult& r);
nlohmann::ordered_json refined_json(const RefinedResult& r);
nlohmann::ordered_json report_json(const std::vector<VerifyReport>& reports);

std::string render_sym(const SymDetResult& r, Format f);
std::string render_table(const std::vector<SymDetResult>& rows, Format f);
std::string render_refined(const RefinedResult& r, Format f);
std::string render_reports(const std::vector<VerifyReport>& reports, Format f);

}  // namespace symdet::cli
