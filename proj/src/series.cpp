#include "pbern/series.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "pbern/combinatorics.hpp"

namespace pbern {

Series::Series(std::int64_t valuation, std::vector<Rational> coeffs, std::int64_t order)
    : valuation_(valuation), coeffs_(std::move(coeffs)), order_(order)
{
    normalize();
}

void Series::normalize()
{
    const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        valuation_ = order_;
        return;
    }
    valuation_ += std::distance(coeffs_.begin(), first);
    coeffs_.erase(coeffs_.begin(), first);
}

Series Series::zero(std::int64_t order)
{
    return Series(order, {}, order);
}

Series Series::constant(const Rational& c, std::int64_t order)
{
    return monomial(c, 0, order);
}

Series Series::monomial(const Rational& c, std::int64_t exponent, std::int64_t order)
{
    if (order <= exponent) {
        return zero(order);
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(order - exponent));
    coeffs.front() = c;
    return Series(exponent, std::move(coeffs), order);
}

Series Series::from_coefficients(std::int64_t valuation, std::vector<Rational> coeffs)
{
    const auto order = valuation + static_cast<std::int64_t>(coeffs.size());
    return Series(valuation, std::move(coeffs), order);
}

Rational Series::coefficient(std::int64_t m) const
{
    if (m >= order_) {
        throw TruncationError("Series: coefficient of t^" + std::to_string(m) + " requested but only known below t^" +
                              std::to_string(order_));
    }
    if (m < valuation_) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(m - valuation_)];
}

Rational Series::egf_coefficient(std::int64_t n) const
{
    if (n < 0) {
        throw std::invalid_argument("Series: EGF index must be non-negative");
    }
    return coefficient(n) * Rational(factorial(n));
}

Series Series::shifted(std::int64_t k) const
{
    Series out = *this;
    out.valuation_ += k;
    out.order_ += k;
    return out;
}

Series Series::truncated(std::int64_t order) const
{
    if (order >= order_) {
        return *this;
    }
    if (order <= valuation_) {
        return zero(order);
    }
    std::vector<Rational> coeffs(coeffs_.begin(), coeffs_.begin() + (order - valuation_));
    return Series(valuation_, std::move(coeffs), order);
}

Series Series::scaled(const Rational& c) const
{
    std::vector<Rational> coeffs = coeffs_;
    for (auto& x : coeffs) {
        x *= c;
    }
    return Series(valuation_, std::move(coeffs), order_);
}

std::string Series::to_string() const
{
    std::ostringstream os;
    os << "t^" << valuation_ << ": ";
    for (const auto& c : coeffs_) {
        os << c << ", ";
    }
    os << "O(t^" << order_ << ")";
    return os.str();
}

Series add(const Series& a, const Series& b)
{
    const auto order = std::min(a.order(), b.order());
    const auto low = std::min(a.valuation(), b.valuation());
    if (low >= order) {
        return Series::zero(order);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order - low));
    for (auto m = low; m < order; ++m) {
        coeffs.push_back(a.coefficient(m) + b.coefficient(m));
    }
    return Series::from_coefficients(low, std::move(coeffs));
}

Series negate(const Series& a)
{
    return a.scaled(Rational(-1));
}

Series sub(const Series& a, const Series& b)
{
    return add(a, negate(b));
}

Series mul(const Series& a, const Series& b)
{
    const auto valuation = a.valuation() + b.valuation();
    const auto order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
    const auto length = order - valuation;
    if (length <= 0) {
        return Series::zero(order);
    }
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    std::vector<Rational> coeffs(static_cast<std::size_t>(length));
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        for (std::size_t i = 0; i <= m; ++i) {
            const auto& x = ac[i];
            const auto& y = bc[m - i];
            if (!x.is_zero() && !y.is_zero()) {
                coeffs[m] += x * y;
            }
        }
    }
    return Series::from_coefficients(valuation, std::move(coeffs));
}

Series invert(const Series& a)
{
    if (a.is_zero()) {
        throw SeriesDivisionByZero("Series: cannot invert " + a.to_string());
    }
    // Solve (sum u_i t^i)(sum w_j t^j) = 1 for the unit part u = t^{-v} a.
    const auto& u = a.coefficients();
    const Rational inv_lead = Rational(1) / u.front();
    std::vector<Rational> w(u.size());
    w.front() = inv_lead;
    for (std::size_t n = 1; n < w.size(); ++n) {
        Rational acc;
        for (std::size_t i = 1; i <= n; ++i) {
            if (!u[i].is_zero()) {
                acc += u[i] * w[n - i];
            }
        }
        w[n] = -acc * inv_lead;
    }
    return Series::from_coefficients(-a.valuation(), std::move(w));
}

Series pow(const Series& a, std::int64_t k)
{
    if (k == 0) {
        return Series::constant(Rational(1), a.is_zero() ? a.order() : a.precision());
    }
    Series base = k < 0 ? invert(a) : a;
    auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);

    std::optional<Series> result;
    while (true) {
        if ((e & 1U) != 0) {
            result = result ? mul(*result, base) : base;
        }
        e >>= 1U;
        if (e == 0) {
            break;
        }
        base = mul(base, base);
    }
    return *result;
}

Series derivative(const Series& a)
{
    if (a.is_zero()) {
        return Series::zero(a.order() - 1);
    }
    std::vector<Rational> coeffs = a.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] *= Rational(a.valuation() + static_cast<std::int64_t>(i));
    }
    return Series::from_coefficients(a.valuation() - 1, std::move(coeffs));
}

Series exp_linear(const Rational& c, std::int64_t order)
{
    if (order < 0) {
        throw std::invalid_argument("exp_linear: order must be non-negative");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order));
    Rational power(1);
    for (std::int64_t n = 0; n < order; ++n) {
        coeffs.push_back(power / Rational(factorial(n)));
        power *= c;
    }
    return Series::from_coefficients(0, std::move(coeffs));
}

Series expm1(std::int64_t order)
{
    if (order < 1) {
        throw std::invalid_argument("expm1: order must be at least 1");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order - 1));
    for (std::int64_t n = 1; n < order; ++n) {
        coeffs.push_back(Rational(BigInt(1), factorial(n)));
    }
    if (coeffs.empty()) {
        return Series::zero(order);
    }
    return Series::from_coefficients(1, std::move(coeffs));
}

Rational coefficient(const Series& a, std::int64_t m)
{
    return a.coefficient(m);
}

Rational egf_coefficient(const Series& a, std::int64_t n)
{
    return a.egf_coefficient(n);
}

}  // namespace pbern
