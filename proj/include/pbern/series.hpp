#ifndef PBERN_SERIES_HPP
#define PBERN_SERIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbern/rational.hpp"

namespace pbern {

// Raised when a coefficient at or beyond the truncation order is requested.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Raised when inverting a series with no known nonzero coefficient.
class SeriesDivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Truncated formal Laurent series over Rational:
//
//     c_0 t^v + c_1 t^(v+1) + ... + c_{L-1} t^(v+L-1) + O(t^order),   L = order - v.
//
// Coefficients of t^m for m >= order are unknown, never zero. The value is kept
// normalized: c_0 != 0, or coeffs is empty and valuation == order (the zero
// series known up to `order`). Values are immutable once built.
class Series {
public:
    // 0 + O(t^order).
    static Series zero(std::int64_t order);
    // c + O(t^order).
    static Series constant(const Rational& c, std::int64_t order);
    // c t^exponent + O(t^order). When order <= exponent the term is lost in the
    // error bound and the zero series is returned.
    static Series monomial(const Rational& c, std::int64_t exponent, std::int64_t order);
    // sum_i coeffs[i] t^(valuation+i) + O(t^(valuation+coeffs.size())). Leading
    // zeros are stripped.
    static Series from_coefficients(std::int64_t valuation, std::vector<Rational> coeffs);

    std::int64_t valuation() const { return valuation_; }
    std::int64_t order() const { return order_; }
    // Number of known coefficients from the valuation on; 0 for the zero series.
    std::int64_t precision() const { return order_ - valuation_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Coefficient of t^m; 0 below the valuation. Throws TruncationError if m >= order.
    Rational coefficient(std::int64_t m) const;
    // n! * coefficient(n): the n-th term of the sequence this series generates
    // exponentially.
    Rational egf_coefficient(std::int64_t n) const;

    // Exact multiplication by t^k; shifts valuation and order together.
    Series shifted(std::int64_t k) const;
    // Forget every coefficient of t^m with m >= order (no-op if order is not smaller).
    Series truncated(std::int64_t order) const;
    Series scaled(const Rational& c) const;

    // "t^v: c0, c1, ..., O(t^order)". Debug rendering only.
    std::string to_string() const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    Series(std::int64_t valuation, std::vector<Rational> coeffs, std::int64_t order);
    void normalize();

    std::int64_t valuation_ = 0;
    std::vector<Rational> coeffs_;
    std::int64_t order_ = 0;
};

// Coefficientwise sum. order = min of orders.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);

// Cauchy product. valuation = a.v + b.v, order = min(a.order + b.v, b.order + a.v).
Series mul(const Series& a, const Series& b);

// Multiplicative inverse in the Laurent field: valuation -a.v, same precision as a.
// Throws SeriesDivisionByZero for the zero series.
Series invert(const Series& a);

// Repeated squaring; negative k inverts first. pow(a, 0) is 1 with a's precision
// (a's order for the zero series).
Series pow(const Series& a, std::int64_t k);

// Formal d/dt. order drops by one.
Series derivative(const Series& a);

// e^{ct} = sum_{n < order} c^n t^n / n!. Requires order >= 0.
Series exp_linear(const Rational& c, std::int64_t order);

// e^t - 1 known up to t^order: valuation 1, coefficients 1/n!. Requires order >= 1.
Series expm1(std::int64_t order);

// Free-function forms of the accessors.
Rational coefficient(const Series& a, std::int64_t m);
Rational egf_coefficient(const Series& a, std::int64_t n);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Rational& c, const Series& a) { return a.scaled(c); }

}  // namespace pbern

#endif
