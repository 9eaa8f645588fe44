// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.
// Every comparison is exact; the only numeric threshold is the runtime bound
// on the full verification run.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "oracles.hpp"
#include "pbern/pbernoulli.hpp"

using namespace pbern;

namespace {

constexpr std::int64_t kTheoremMaxN = 32;
constexpr std::int64_t kTheoremMaxP = 12;
constexpr double kTheoremSecondsLimit = 10.0;
constexpr std::int64_t kBaseCaseMaxN = 64;
constexpr std::int64_t kOdeOrder = 32;
constexpr std::int64_t kOdeMaxP = 12;
constexpr std::int64_t kPoleMaxP = 12;
constexpr int kPropertyInstances = 100;
constexpr std::size_t kPropertyMinOrder = 16;

struct Outcome {
    bool passed;
    std::string detail;
};

struct Process {
    int exit_code;
    std::string out;
};

Process run_cli(const std::string& args)
{
    const std::string command = std::string(PBERN_CLI_PATH) + " " + args;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, ""};
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string describe(const VerifyReport& r)
{
    if (r.passed()) {
        return "";
    }
    const auto& m = *r.first_mismatch;
    std::ostringstream os;
    os << "p=" << m.p << " n=" << m.n << ": " << m.left << " != " << m.right;
    return os.str();
}

Outcome theorem_reproduction()
{
    const auto start = std::chrono::steady_clock::now();
    const Process proc = run_cli("verify --max-n " + std::to_string(kTheoremMaxN) + " --max-p " +
                                 std::to_string(kTheoremMaxP));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (proc.exit_code != 0) {
        return {false, "verify exited with " + std::to_string(proc.exit_code)};
    }
    const auto report = nlohmann::json::parse(proc.out);
    if (report["passed"] != true || report["checks"][0]["kind"] != "theorem" ||
        report["checks"][0]["passed"] != true) {
        return {false, "report does not show the theorem check passing"};
    }
    const VerifyReport direct = verify_theorem(kTheoremMaxN, kTheoremMaxP);
    if (!direct.passed()) {
        return {false, describe(direct)};
    }
    std::ostringstream os;
    os << "exit 0 in " << seconds << " s";
    return {seconds < kTheoremSecondsLimit, os.str()};
}

Outcome base_case()
{
    const Series f0 = closed_form_egf(0, kBaseCaseMaxN);
    const auto expected = oracle::bernoulli(kBaseCaseMaxN);
    for (std::int64_t n = 0; n <= kBaseCaseMaxN; ++n) {
        const Rational got = f0.egf_coefficient(n);
        if (got != expected[static_cast<std::size_t>(n)]) {
            return {false, "B_" + std::to_string(n) + " = " + got.to_string()};
        }
        if (n >= 3 && n % 2 == 1 && !got.is_zero()) {
            return {false, "odd B_" + std::to_string(n) + " nonzero"};
        }
    }
    if (f0.egf_coefficient(1) != Rational::parse("-1/2")) {
        return {false, "B_1 != -1/2"};
    }
    if (f0.egf_coefficient(64) != Rational::parse("-106783830147866529886385444979142647942017/510")) {
        return {false, "B_64 differs from the frozen reference"};
    }
    return {true, "B_0..B_64 exact"};
}

Outcome ode_identity()
{
    for (std::int64_t p = 0; p <= kOdeMaxP; ++p) {
        const VerifyReport r = verify_ode(p, kOdeOrder);
        if (!r.passed()) {
            return {false, describe(r)};
        }
    }
    return {true, "p = 0..12, order 32"};
}

Outcome pole_cancellation()
{
    for (std::int64_t p = 0; p <= kPoleMaxP; ++p) {
        const VerifyReport r = verify_pole_cancellation(p);
        if (!r.passed()) {
            return {false, describe(r)};
        }
        const Series sum = closed_form_laurent(p, 8);
        if (sum.valuation() < 0) {
            return {false, "p=" + std::to_string(p) + " valuation " + std::to_string(sum.valuation())};
        }
        for (std::int64_t m = -(p + 1); m <= -1; ++m) {
            if (!sum.coefficient(m).is_zero()) {
                return {false, "p=" + std::to_string(p) + " t^" + std::to_string(m) + " survives"};
            }
        }
    }
    return {true, "p = 0..12"};
}

Outcome recurrence_consistency()
{
    for (const PBernTable& t : {recurrence_table(kTheoremMaxN, kTheoremMaxP), closed_form_table(kTheoremMaxN, kTheoremMaxP),
                                recurrence_table(0, 0), recurrence_table(40, 3)}) {
        const VerifyReport r = check_recurrence(t);
        if (!r.passed()) {
            return {false, std::string(to_string(t.route)) + " " + describe(r)};
        }
    }
    return {true, "forward recurrence holds on every table"};
}

Outcome series_properties()
{
    std::mt19937_64 rng(1418762);
    std::uniform_int_distribution<int> val(-2, 2);
    std::uniform_int_distribution<int> len(static_cast<int>(kPropertyMinOrder), 24);
    std::uniform_int_distribution<int> exponent(-3, 3);
    auto length = [&] { return static_cast<std::size_t>(len(rng)); };

    int commutative = 0;
    int associative = 0;
    int inverse = 0;
    int product_rule = 0;
    int exp_law = 0;
    int pow_law = 0;
    for (int i = 0; i < kPropertyInstances; ++i) {
        const Series a = oracle::random_series(rng, val(rng), length());
        const Series b = oracle::random_series(rng, val(rng), length());
        const Series c = oracle::random_series(rng, val(rng), length());
        commutative += mul(a, b) == mul(b, a) ? 1 : 0;
        associative += oracle::agree(mul(mul(a, b), c), mul(a, mul(b, c))) ? 1 : 0;
        inverse += mul(a, invert(a)) == Series::constant(Rational(1), a.precision()) ? 1 : 0;
        product_rule +=
            oracle::agree(derivative(mul(a, b)), add(mul(derivative(a), b), mul(a, derivative(b)))) ? 1 : 0;

        const Rational x = oracle::random_rational(rng, 7, 5);
        const Rational y = oracle::random_rational(rng, 7, 5);
        const auto order = static_cast<std::int64_t>(length());
        exp_law += mul(exp_linear(x, order), exp_linear(y, order)) == exp_linear(x + y, order) ? 1 : 0;

        const Series u = oracle::random_series(rng, 0, length());
        const int j = exponent(rng);
        const int k = exponent(rng);
        pow_law += oracle::agree(mul(pbern::pow(u, j), pbern::pow(u, k)), pbern::pow(u, j + k)) ? 1 : 0;
    }
    std::ostringstream os;
    os << "commutative " << commutative << ", associative " << associative << ", inverse " << inverse
       << ", product rule " << product_rule << ", exp law " << exp_law << ", pow law " << pow_law << " of "
       << kPropertyInstances;
    const bool all = commutative == kPropertyInstances && associative == kPropertyInstances &&
                     inverse == kPropertyInstances && product_rule == kPropertyInstances &&
                     exp_law == kPropertyInstances && pow_law == kPropertyInstances;
    return {all, os.str()};
}

Outcome harness_sensitivity()
{
    const PBernTable clean = recurrence_table(12, 6);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> row(0, clean.max_n);
    std::uniform_int_distribution<std::int64_t> col(0, clean.max_p);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t n = trial == 0 ? 0 : row(rng);
        const std::int64_t p = trial == 0 ? 0 : col(rng);
        PBernTable corrupted = clean;
        corrupted.at(n, p) += Rational(BigInt(1), BigInt(997));
        const VerifyReport r = verify_theorem(corrupted);
        if (r.passed() || r.first_mismatch->n != n || r.first_mismatch->p != p ||
            r.first_mismatch->left != corrupted.at(n, p) || r.first_mismatch->right != clean.at(n, p)) {
            return {false, "corruption at n=" + std::to_string(n) + " p=" + std::to_string(p) + " misreported"};
        }
    }
    return {true, "20 single-cell corruptions located exactly"};
}

Outcome determinism()
{
    const std::string args = "table --max-n 16 --max-p 8 --format json";
    const Process first = run_cli(args);
    const Process second = run_cli(args);
    if (first.exit_code != 0 || second.exit_code != 0) {
        return {false, "table exited non-zero"};
    }
    if (first.out.empty() || first.out != second.out) {
        return {false, "outputs differ"};
    }
    return {true, std::to_string(first.out.size()) + " identical bytes"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 theorem reproduction (verify --max-n 32 --max-p 12)", theorem_reproduction},
        {"2 base case p=0 reproduces B_0..B_64", base_case},
        {"3 ODE identity to order 32 for p <= 12", ode_identity},
        {"4 pole cancellation for p <= 12", pole_cancellation},
        {"5 recurrence self-consistency", recurrence_consistency},
        {"6 series algebra properties", series_properties},
        {"7 harness sensitivity", harness_sensitivity},
        {"8 determinism of table output", determinism},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome outcome{false, ""};
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (outcome.passed ? "PASS " : "FAIL ") << name << " -- " << outcome.detail << "\n";
        failures += outcome.passed ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
