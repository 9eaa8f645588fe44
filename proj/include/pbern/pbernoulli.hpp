#ifndef PBERN_PBERNOULLI_HPP
#define PBERN_PBERNOULLI_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pbern/rational.hpp"
#include "pbern/series.hpp"

namespace pbern {

// The closed-form generating function came out with a pole at t = 0. This
// never happens for valid input; it means the series arithmetic is broken.
class PoleCancellationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Route { Recurrence, ClosedForm };

std::string_view to_string(Route route);

// B_{n,p} for 0 <= n <= max_n, 0 <= p <= max_p.
struct PBernTable {
    std::int64_t max_n = 0;
    std::int64_t max_p = 0;
    Route route = Route::Recurrence;
    std::vector<std::vector<Rational>> values;  // values[n][p]

    const Rational& at(std::int64_t n, std::int64_t p) const
    {
        return values.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(p));
    }
    Rational& at(std::int64_t n, std::int64_t p)
    {
        return values.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(p));
    }
};

enum class ReportKind { Theorem, ODE, PoleCancellation, BaseCase, Recurrence };

std::string_view to_string(ReportKind kind);

// One disagreeing coefficient. For ODE and pole reports `n` is the exponent
// of t rather than an EGF index. A closed form that keeps a pole is reported
// by every verifier at its lowest exponent (n < 0) with left = 0.
struct Mismatch {
    std::int64_t n = 0;
    std::int64_t p = 0;
    Rational left;
    Rational right;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerifyReport {
    ReportKind kind = ReportKind::Theorem;
    std::int64_t max_n = 0;
    std::int64_t max_p = 0;
    std::optional<Mismatch> first_mismatch;

    bool passed() const { return !first_mismatch.has_value(); }
};

// B_0..B_N from the expansion of t/(e^t - 1).
std::vector<Rational> classical_bernoulli(std::int64_t N);

// Seeds column p = 0 with B_0..B_{N+P} and sweeps p upward with
//
//     B_{n,p+1} = (p+2)/(p+1)^2 * (p B_{n,p} - B_{n+1,p}),
//
// each column losing one row, so the result covers the full N x P rectangle.
PBernTable recurrence_table(std::int64_t N, std::int64_t P);

// Same rectangle, read off the closed-form generating functions f_0..f_P.
PBernTable closed_form_table(std::int64_t N, std::int64_t P);

// Laurent sum
//
//     (p+1)(t - H_p) e^{pt} / (e^t - 1)^{p+1} + (p+1) sum_{k=1}^{p} C(p,k) H_k / (e^t - 1)^{k+1}
//
// assembled term by term with no assumption that the poles cancel. Known
// through t^N at least (working order N + p + 2).
Series closed_form_laurent(std::int64_t p, std::int64_t N);

// f_p(t) = sum_n B_{n,p} t^n / n!, with at least N + 1 known coefficients.
// Throws PoleCancellationError if closed_form_laurent has negative valuation.
Series closed_form_egf(std::int64_t p, std::int64_t N);

// Recurrence vs closed form over the whole rectangle, exact equality. The
// first mismatch is the least (p, n) in lexicographic order; left is the
// table value, right the closed-form value.
VerifyReport verify_theorem(std::int64_t N, std::int64_t P);
VerifyReport verify_theorem(const PBernTable& table);

// f_p' == p f_p - (p+1)^2/(p+2) f_{p+1} on the coefficients of t^0..t^{N-1}.
VerifyReport verify_ode(std::int64_t p, std::int64_t N);

// Coefficients of t^{-(p+1)}..t^{-1} of closed_form_laurent(p, .) are all zero.
VerifyReport verify_pole_cancellation(std::int64_t p);

// Column p = 0 of the closed form agrees with classical_bernoulli(N).
VerifyReport verify_base_case(std::int64_t N);

// Re-checks B_{n+1,p} = p B_{n,p} - (p+1)^2/(p+2) B_{n,p+1} in the forward
// direction for every cell where all three entries are in range.
VerifyReport check_recurrence(const PBernTable& table);

}  // namespace pbern

#endif
