#include "pbern/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pbern {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(std::int64_t value)
    : value_(BigInt(std::to_string(value)))
{
}

Rational::Rational(const BigInt& value)
    : value_(value)
{
}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);

    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') {
        num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
        throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    }
    BigInt d(std::string{den});
    if (d == 0) {
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    }
    return Rational(BigInt(std::string{num}), d);
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace pbern
