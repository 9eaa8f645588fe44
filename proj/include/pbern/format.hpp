#ifndef PBERN_FORMAT_HPP
#define PBERN_FORMAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pbern/pbernoulli.hpp"

namespace pbern {

enum class OutputFormat { Json, Csv, Latex };

std::optional<OutputFormat> parse_output_format(std::string_view name);

// "a", "\frac{a}{b}" or "-\frac{a}{b}".
std::string latex_rational(const Rational& r);

// Table layouts share one shape: header "n,p=0,p=1,...", one row per n.
//   JSON:  {"max_n", "max_p", "route", "values": [[row n=0], ...]}
//   CSV:   header line then "n,v0,v1,..." lines
//   LaTeX: a tabular environment with the same rows
// Every rendering ends with a newline.
std::string render_table(const PBernTable& table, OutputFormat format);

// B_{0,p}..B_{k-1,p} for one p, using the table layout for CSV/LaTeX.
// JSON: {"p", "order", "coefficients": [...]}.
std::string render_coefficients(std::int64_t p, const std::vector<Rational>& coeffs, OutputFormat format);

nlohmann::ordered_json report_to_json(const VerifyReport& report);

}  // namespace pbern

#endif
