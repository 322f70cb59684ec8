#include "qid/rational.hpp"

#include <cctype>
#include <utility>

#include "qid/errors.hpp"

namespace qid {

namespace {

bool is_signed_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, 1) / mpq_class(den, 1);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_signed_integer(num_text))
        throw InvariantViolation("malformed rational literal '" + std::string(text) + "'");
    mpq_class value(parse_integer(num_text));
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_signed_integer(den_text) || den_text.front() == '-' || den_text.front() == '+')
            throw InvariantViolation("malformed rational literal '" + std::string(text) + "'");
        const mpz_class den = parse_integer(den_text);
        if (den == 0)
            throw InvariantViolation("rational literal with zero denominator");
        value /= mpq_class(den);
    }
    return Rational(std::move(value));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::pow(int exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

}  // namespace qid
