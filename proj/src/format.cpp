#include "pbern/format.hpp"

#include <sstream>

namespace pbern {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_row(const std::vector<Rational>& row)
{
    ordered_json out = ordered_json::array();
    for (const auto& v : row) {
        out.push_back(v.to_string());
    }
    return out;
}

std::string dump(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

// rows[n] holds the values for p = first_p, first_p + 1, ...
std::string render_grid(const std::vector<std::vector<Rational>>& rows, std::int64_t first_p, std::int64_t columns,
                        OutputFormat format)
{
    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "n";
        for (std::int64_t c = 0; c < columns; ++c) {
            os << ",p=" << first_p + c;
        }
        os << "\n";
        for (std::size_t n = 0; n < rows.size(); ++n) {
            os << n;
            for (const auto& v : rows[n]) {
                os << "," << v.to_string();
            }
            os << "\n";
        }
        return os.str();
    }

    os << "\\begin{tabular}{r" << std::string(static_cast<std::size_t>(columns), 'c') << "}\n";
    os << "$n$";
    for (std::int64_t c = 0; c < columns; ++c) {
        os << " & $p=" << first_p + c << "$";
    }
    os << " \\\\\n\\hline\n";
    for (std::size_t n = 0; n < rows.size(); ++n) {
        os << n;
        for (const auto& v : rows[n]) {
            os << " & $" << latex_rational(v) << "$";
        }
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name)
{
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "latex") {
        return OutputFormat::Latex;
    }
    return std::nullopt;
}

std::string latex_rational(const Rational& r)
{
    if (r.is_integer()) {
        return r.to_string();
    }
    const BigInt num = r.numerator();
    const std::string sign = num < 0 ? "-" : "";
    const BigInt mag = abs(num);
    return sign + "\\frac{" + mag.get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string render_table(const PBernTable& table, OutputFormat format)
{
    if (format == OutputFormat::Json) {
        ordered_json j;
        j["max_n"] = table.max_n;
        j["max_p"] = table.max_p;
        j["route"] = std::string(to_string(table.route));
        ordered_json values = ordered_json::array();
        for (const auto& row : table.values) {
            values.push_back(rational_row(row));
        }
        j["values"] = std::move(values);
        return dump(j);
    }
    return render_grid(table.values, 0, table.max_p + 1, format);
}

std::string render_coefficients(std::int64_t p, const std::vector<Rational>& coeffs, OutputFormat format)
{
    if (format == OutputFormat::Json) {
        ordered_json j;
        j["p"] = p;
        j["order"] = coeffs.size();
        j["coefficients"] = rational_row(coeffs);
        return dump(j);
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        rows.push_back({c});
    }
    return render_grid(rows, p, 1, format);
}

ordered_json report_to_json(const VerifyReport& report)
{
    ordered_json j;
    j["kind"] = std::string(to_string(report.kind));
    j["max_n"] = report.max_n;
    j["max_p"] = report.max_p;
    j["passed"] = report.passed();
    if (report.first_mismatch) {
        const auto& m = *report.first_mismatch;
        ordered_json mm;
        mm["n"] = m.n;
        mm["p"] = m.p;
        mm["left"] = m.left.to_string();
        mm["right"] = m.right.to_string();
        j["first_mismatch"] = std::move(mm);
    } else {
        j["first_mismatch"] = nullptr;
    }
    return j;
}

}  // namespace pbern
