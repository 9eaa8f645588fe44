#include "pbern/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "pbern/format.hpp"
#include "pbern/pbernoulli.hpp"

namespace pbern::cli {

namespace {

struct Options {
    std::int64_t max_n = 0;
    std::int64_t max_p = 0;
    std::int64_t p = 0;
    std::int64_t order = 1;
    std::string route = "recurrence";
    std::string format = "json";
    std::string out_path;
};

void add_bounds(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--max-n", opt.max_n, "Largest index n")->required()->check(CLI::NonNegativeNumber);
    cmd.add_option("--max-p", opt.max_p, "Largest parameter p")->required()->check(CLI::NonNegativeNumber);
}

void add_format(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "latex"}))
        ->capture_default_str();
}

void add_out(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--out", opt.out_path, "Write data to FILE instead of standard output");
}

// Writes `data` to --out or to `out`. Returns false if the file cannot be written.
bool emit(const std::string& data, const Options& opt, std::ostream& out, std::ostream& err)
{
    if (opt.out_path.empty()) {
        out << data;
        out.flush();
        return true;
    }
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    file << data;
    if (!file) {
        err << "pbern: cannot write " << opt.out_path << "\n";
        return false;
    }
    return true;
}

int cmd_table(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto format = *parse_output_format(opt.format);
    const PBernTable table =
        opt.route == "egf" ? closed_form_table(opt.max_n, opt.max_p) : recurrence_table(opt.max_n, opt.max_p);
    return emit(render_table(table, format), opt, out, err) ? kSuccess : kUsageError;
}

int cmd_egf(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto format = *parse_output_format(opt.format);
    const Series f = closed_form_egf(opt.p, opt.order - 1);
    std::vector<Rational> coeffs;
    for (std::int64_t n = 0; n < opt.order; ++n) {
        coeffs.push_back(f.egf_coefficient(n));
    }
    return emit(render_coefficients(opt.p, coeffs, format), opt, out, err) ? kSuccess : kUsageError;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err)
{
    std::vector<VerifyReport> reports;
    reports.push_back(verify_theorem(opt.max_n, opt.max_p));
    // With max_n = 0 there is no derivative coefficient to compare.
    if (opt.max_n >= 1) {
        for (std::int64_t p = 0; p <= opt.max_p; ++p) {
            reports.push_back(verify_ode(p, opt.max_n));
        }
    }
    for (std::int64_t p = 0; p <= opt.max_p; ++p) {
        reports.push_back(verify_pole_cancellation(p));
    }

    bool all_passed = true;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        checks.push_back(report_to_json(r));
    }
    nlohmann::ordered_json j;
    j["max_n"] = opt.max_n;
    j["max_p"] = opt.max_p;
    j["passed"] = all_passed;
    j["checks"] = std::move(checks);

    if (!emit(j.dump(2) + "\n", opt, out, err)) {
        return kUsageError;
    }
    if (!all_passed) {
        err << "pbern: verification failed\n";
        return kVerificationFailed;
    }
    return kSuccess;
}

template <typename F>
double time_ms(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err)
{
    const double recurrence_ms = time_ms([&] { (void)recurrence_table(opt.max_n, opt.max_p); });
    const double egf_ms = time_ms([&] { (void)closed_form_table(opt.max_n, opt.max_p); });

    std::ostringstream os;
    os << std::fixed << std::setprecision(3);
    os << "recurrence_ms: " << recurrence_ms << "\n";
    os << "egf_ms: " << egf_ms << "\n";
    return emit(os.str(), opt, out, err) ? kSuccess : kUsageError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact p-Bernoulli numbers by recurrence and by closed-form generating function", "pbern"};
    app.require_subcommand(1);

    Options opt;

    auto* table = app.add_subcommand("table", "Print the table B_{n,p}, n <= max-n, p <= max-p");
    add_bounds(*table, opt);
    table->add_option("--route", opt.route, "How the values are computed")
        ->check(CLI::IsMember({"recurrence", "egf"}))
        ->capture_default_str();
    add_format(*table, opt);
    add_out(*table, opt);

    auto* egf = app.add_subcommand("egf", "Print B_{0,p}..B_{order-1,p} from the closed-form generating function");
    egf->add_option("--p", opt.p, "Parameter p")->required()->check(CLI::NonNegativeNumber);
    egf->add_option("--order", opt.order, "Number of coefficients")->required()->check(CLI::PositiveNumber);
    add_format(*egf, opt);
    add_out(*egf, opt);

    auto* verify = app.add_subcommand("verify", "Check the closed form, the ODE and pole cancellation exactly");
    add_bounds(*verify, opt);
    add_out(*verify, opt);

    auto* bench = app.add_subcommand("bench", "Time both routes over the rectangle");
    add_bounds(*bench, opt);
    add_out(*bench, opt);

    // CLI11 consumes arguments in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (table->parsed()) {
            return cmd_table(opt, out, err);
        }
        if (egf->parsed()) {
            return cmd_egf(opt, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(opt, out, err);
        }
        return cmd_bench(opt, out, err);
    } catch (const PoleCancellationError& e) {
        err << "pbern: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << "pbern: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace pbern::cli
