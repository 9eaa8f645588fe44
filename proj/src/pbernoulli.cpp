#include "pbern/pbernoulli.hpp"

#include <future>
#include <string>

#include "pbern/combinatorics.hpp"

namespace pbern {

namespace {

void require_non_negative(std::int64_t value, const char* what)
{
    if (value < 0) {
        throw std::invalid_argument(std::string(what) + " must be non-negative");
    }
}

Rational big(std::int64_t v)
{
    return Rational(v);
}

// (p+1)^2 / (p+2), the coupling between f_p and f_{p+1}.
Rational coupling(std::int64_t p)
{
    return Rational(BigInt(std::to_string((p + 1) * (p + 1))), BigInt(std::to_string(p + 2)));
}

PBernTable empty_table(std::int64_t N, std::int64_t P, Route route)
{
    PBernTable table;
    table.max_n = N;
    table.max_p = P;
    table.route = route;
    table.values.assign(static_cast<std::size_t>(N + 1), std::vector<Rational>(static_cast<std::size_t>(P + 1)));
    return table;
}

// f_0..f_P, computed concurrently. The Laurent sums are returned unchecked so
// verifiers can report a surviving pole instead of throwing.
std::vector<Series> closed_form_sums(std::int64_t P, std::int64_t N)
{
    std::vector<std::future<Series>> jobs;
    jobs.reserve(static_cast<std::size_t>(P + 1));
    for (std::int64_t p = 0; p <= P; ++p) {
        jobs.push_back(std::async(std::launch::async, [p, N] { return closed_form_laurent(p, N); }));
    }
    std::vector<Series> out;
    out.reserve(jobs.size());
    for (auto& job : jobs) {
        out.push_back(job.get());
    }
    return out;
}

// A generating function has no negative powers of t; the lowest surviving one
// is reported against an expected 0.
std::optional<Mismatch> pole_mismatch(const Series& f, std::int64_t p)
{
    if (f.valuation() >= 0) {
        return std::nullopt;
    }
    return Mismatch{f.valuation(), p, Rational(0), f.coefficient(f.valuation())};
}

}  // namespace

std::string_view to_string(Route route)
{
    switch (route) {
    case Route::Recurrence:
        return "recurrence";
    case Route::ClosedForm:
        return "egf";
    }
    return "unknown";
}

std::string_view to_string(ReportKind kind)
{
    switch (kind) {
    case ReportKind::Theorem:
        return "theorem";
    case ReportKind::ODE:
        return "ode";
    case ReportKind::PoleCancellation:
        return "pole_cancellation";
    case ReportKind::BaseCase:
        return "base_case";
    case ReportKind::Recurrence:
        return "recurrence";
    }
    return "unknown";
}

std::vector<Rational> classical_bernoulli(std::int64_t N)
{
    require_non_negative(N, "classical_bernoulli: N");
    const Series f0 = invert(expm1(N + 2)).shifted(1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(N + 1));
    for (std::int64_t n = 0; n <= N; ++n) {
        out.push_back(f0.egf_coefficient(n));
    }
    return out;
}

PBernTable recurrence_table(std::int64_t N, std::int64_t P)
{
    require_non_negative(N, "recurrence_table: N");
    require_non_negative(P, "recurrence_table: P");

    const std::int64_t depth = N + P;
    std::vector<Rational> column = classical_bernoulli(depth);
    PBernTable table = empty_table(N, P, Route::Recurrence);

    for (std::int64_t p = 0;; ++p) {
        for (std::int64_t n = 0; n <= N; ++n) {
            table.at(n, p) = column[static_cast<std::size_t>(n)];
        }
        if (p == P) {
            break;
        }
        // Column p holds rows 0..depth-p; column p+1 gets one row fewer.
        const Rational scale = Rational(1) / coupling(p);
        std::vector<Rational> next(column.size() - 1);
        for (std::size_t n = 0; n < next.size(); ++n) {
            next[n] = scale * (big(p) * column[n] - column[n + 1]);
        }
        column = std::move(next);
    }
    return table;
}

Series closed_form_laurent(std::int64_t p, std::int64_t N)
{
    require_non_negative(p, "closed_form_laurent: p");
    require_non_negative(N, "closed_form_laurent: N");

    const std::int64_t working = N + p + 2;
    // e^t - 1 = t * unit, so (e^t - 1)^{-j} = t^{-j} * unit^{-j}.
    const Series unit = expm1(working + 1).shifted(-1);
    const Series unit_inv = invert(unit);

    std::vector<Series> unit_inv_pow{unit_inv};
    for (std::int64_t j = 2; j <= p + 1; ++j) {
        unit_inv_pow.push_back(mul(unit_inv_pow.back(), unit_inv));
    }
    auto denominator_inverse = [&](std::int64_t j) { return unit_inv_pow[static_cast<std::size_t>(j - 1)].shifted(-j); };

    const Rational h_p = harmonic(p);
    const Series t_minus_h = Series::monomial(Rational(1), 1, working) - Series::constant(h_p, working);
    Series sum = big(p + 1) * (t_minus_h * exp_linear(big(p), working) * denominator_inverse(p + 1));

    for (std::int64_t k = 1; k <= p; ++k) {
        const Rational weight = big(p + 1) * Rational(binomial(p, k)) * harmonic(k);
        sum = sum + weight * denominator_inverse(k + 1);
    }
    return sum;
}

Series closed_form_egf(std::int64_t p, std::int64_t N)
{
    Series f = closed_form_laurent(p, N);
    if (f.valuation() < 0) {
        throw PoleCancellationError("closed_form_egf: f_" + std::to_string(p) + " has a pole: " + f.to_string());
    }
    return f;
}

PBernTable closed_form_table(std::int64_t N, std::int64_t P)
{
    require_non_negative(N, "closed_form_table: N");
    require_non_negative(P, "closed_form_table: P");

    std::vector<Series> fs = closed_form_sums(P, N);
    for (std::int64_t p = 0; p <= P; ++p) {
        if (pole_mismatch(fs[static_cast<std::size_t>(p)], p)) {
            throw PoleCancellationError("closed_form_table: f_" + std::to_string(p) + " has a pole");
        }
    }
    PBernTable table = empty_table(N, P, Route::ClosedForm);
    for (std::int64_t p = 0; p <= P; ++p) {
        for (std::int64_t n = 0; n <= N; ++n) {
            table.at(n, p) = fs[static_cast<std::size_t>(p)].egf_coefficient(n);
        }
    }
    return table;
}

VerifyReport verify_theorem(const PBernTable& table)
{
    VerifyReport report{ReportKind::Theorem, table.max_n, table.max_p, std::nullopt};
    const std::vector<Series> fs = closed_form_sums(table.max_p, table.max_n);
    for (std::int64_t p = 0; p <= table.max_p; ++p) {
        if (auto pole = pole_mismatch(fs[static_cast<std::size_t>(p)], p)) {
            report.first_mismatch = std::move(pole);
            return report;
        }
        for (std::int64_t n = 0; n <= table.max_n; ++n) {
            Rational expected = fs[static_cast<std::size_t>(p)].egf_coefficient(n);
            if (table.at(n, p) != expected) {
                report.first_mismatch = Mismatch{n, p, table.at(n, p), std::move(expected)};
                return report;
            }
        }
    }
    return report;
}

VerifyReport verify_theorem(std::int64_t N, std::int64_t P)
{
    return verify_theorem(recurrence_table(N, P));
}

VerifyReport verify_ode(std::int64_t p, std::int64_t N)
{
    require_non_negative(p, "verify_ode: p");
    if (N < 1) {
        throw std::invalid_argument("verify_ode: N must be at least 1");
    }
    VerifyReport report{ReportKind::ODE, N, p, std::nullopt};

    auto fp_job = std::async(std::launch::async, [p, N] { return closed_form_laurent(p, N); });
    const Series fp1 = closed_form_laurent(p + 1, N);
    const Series fp = fp_job.get();
    if (auto pole = pole_mismatch(fp, p)) {
        report.first_mismatch = std::move(pole);
        return report;
    }
    if (auto pole = pole_mismatch(fp1, p + 1)) {
        report.first_mismatch = std::move(pole);
        return report;
    }

    const Series lhs = derivative(fp);
    const Series rhs = big(p) * fp - coupling(p) * fp1;
    for (std::int64_t m = 0; m < N; ++m) {
        Rational left = lhs.coefficient(m);
        Rational right = rhs.coefficient(m);
        if (left != right) {
            report.first_mismatch = Mismatch{m, p, std::move(left), std::move(right)};
            break;
        }
    }
    return report;
}

VerifyReport verify_pole_cancellation(std::int64_t p)
{
    require_non_negative(p, "verify_pole_cancellation: p");
    VerifyReport report{ReportKind::PoleCancellation, 0, p, std::nullopt};
    const Series f = closed_form_laurent(p, 0);
    for (std::int64_t m = -(p + 1); m <= -1; ++m) {
        Rational c = f.coefficient(m);
        if (!c.is_zero()) {
            report.first_mismatch = Mismatch{m, p, std::move(c), Rational(0)};
            return report;
        }
    }
    if (f.valuation() < 0) {
        report.first_mismatch = Mismatch{f.valuation(), p, f.coefficient(f.valuation()), Rational(0)};
    }
    return report;
}

VerifyReport verify_base_case(std::int64_t N)
{
    require_non_negative(N, "verify_base_case: N");
    VerifyReport report{ReportKind::BaseCase, N, 0, std::nullopt};
    const std::vector<Rational> classical = classical_bernoulli(N);
    const Series f0 = closed_form_laurent(0, N);
    if (auto pole = pole_mismatch(f0, 0)) {
        report.first_mismatch = std::move(pole);
        return report;
    }
    for (std::int64_t n = 0; n <= N; ++n) {
        Rational right = f0.egf_coefficient(n);
        if (classical[static_cast<std::size_t>(n)] != right) {
            report.first_mismatch = Mismatch{n, 0, classical[static_cast<std::size_t>(n)], std::move(right)};
            break;
        }
    }
    return report;
}

VerifyReport check_recurrence(const PBernTable& table)
{
    VerifyReport report{ReportKind::Recurrence, table.max_n, table.max_p, std::nullopt};
    for (std::int64_t p = 0; p < table.max_p; ++p) {
        for (std::int64_t n = 0; n < table.max_n; ++n) {
            const Rational& left = table.at(n + 1, p);
            Rational right = big(p) * table.at(n, p) - coupling(p) * table.at(n, p + 1);
            if (left != right) {
                report.first_mismatch = Mismatch{n + 1, p, left, std::move(right)};
                return report;
            }
        }
    }
    return report;
}

}  // namespace pbern
