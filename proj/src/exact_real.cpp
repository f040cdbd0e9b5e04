#include "digifix/exact_real.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace digifix {

using boost::multiprecision::cpp_int;

namespace {

cpp_int smallest_prime_factor(const cpp_int& n)
{
    if (n % 2 == 0)
        return 2;
    for (cpp_int d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return d;
    return n;
}

// Splits value = A + B*sqrt(p) on some prime p dividing a radicand.
// Requires at least one radicand > 1.
void split_on_prime(const ExactReal& value, cpp_int& prime, ExactReal& rational_part, ExactReal& surd_part)
{
    const auto& terms = value.terms();
    prime = smallest_prime_factor(terms.back().first);
    rational_part = ExactReal();
    surd_part = ExactReal();
    for (const auto& [radicand, coeff] : terms) {
        if (radicand % prime == 0)
            surd_part += ExactReal::sqrt_of(radicand / prime) * ExactReal(coeff);
        else
            rational_part += ExactReal::sqrt_of(radicand) * ExactReal(coeff);
    }
}

} // namespace

ExactReal::ExactReal(const Rational& value)
{
    if (value != 0)
        terms_.emplace_back(cpp_int(1), value);
}

ExactReal ExactReal::sqrt_of(const cpp_int& radicand)
{
    if (radicand < 0)
        throw std::domain_error("sqrt of a negative integer");
    ExactReal result;
    if (radicand == 0)
        return result;
    cpp_int rest = radicand;
    cpp_int outside = 1;
    cpp_int square_free = 1;
    for (cpp_int d = 2; d * d <= rest; ++d) {
        while (rest % (d * d) == 0) {
            rest /= d * d;
            outside *= d;
        }
        if (rest % d == 0) {
            rest /= d;
            square_free *= d;
        }
    }
    square_free *= rest;
    result.terms_.emplace_back(square_free, Rational(outside));
    return result;
}

ExactReal ExactReal::ratio(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    return ExactReal(Rational(num, den));
}

void ExactReal::add_term(const cpp_int& radicand, const Rational& coeff)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                               [](const Term& t, const cpp_int& r) { return t.first < r; });
    if (it != terms_.end() && it->first == radicand) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    } else if (coeff != 0) {
        terms_.insert(it, Term(radicand, coeff));
    }
}

void ExactReal::normalize()
{
    std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

bool ExactReal::is_rational() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 1);
}

Rational ExactReal::to_rational() const
{
    if (!is_rational())
        throw std::domain_error("value is irrational: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.front().second;
}

double ExactReal::to_double() const
{
    double sum = 0.0;
    for (const auto& [radicand, coeff] : terms_)
        sum += coeff.convert_to<double>() * std::sqrt(radicand.convert_to<double>());
    return sum;
}

bool ExactReal::single_term(Rational& coeff, cpp_int& radicand) const
{
    if (terms_.empty()) {
        coeff = 0;
        radicand = 1;
        return true;
    }
    if (terms_.size() != 1)
        return false;
    radicand = terms_.front().first;
    coeff = terms_.front().second;
    return true;
}

ExactReal ExactReal::operator-() const
{
    ExactReal result = *this;
    for (auto& term : result.terms_)
        term.second = -term.second;
    return result;
}

ExactReal& ExactReal::operator+=(const ExactReal& other)
{
    for (const auto& [radicand, coeff] : other.terms_)
        add_term(radicand, coeff);
    return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& other)
{
    for (const auto& [radicand, coeff] : other.terms_)
        add_term(radicand, -coeff);
    return *this;
}

ExactReal& ExactReal::operator*=(const ExactReal& other)
{
    ExactReal product;
    for (const auto& [ra, ca] : terms_) {
        for (const auto& [rb, cb] : other.terms_) {
            // ra, rb square-free: ra*rb = g^2 * (ra/g)*(rb/g)
            cpp_int g = boost::multiprecision::gcd(ra, rb);
            product.add_term((ra / g) * (rb / g), ca * cb * Rational(g));
        }
    }
    product.normalize();
    *this = std::move(product);
    return *this;
}

ExactReal ExactReal::inverse() const
{
    if (terms_.empty())
        throw std::domain_error("division by zero");
    if (is_rational())
        return ExactReal(Rational(1) / terms_.front().second);
    cpp_int prime;
    ExactReal a, b;
    split_on_prime(*this, prime, a, b);
    // 1/(A + B sqrt p) = (A - B sqrt p) / (A^2 - p B^2); the norm is nonzero
    // because sqrt p is not in the field generated by the other radicands.
    ExactReal conjugate = a - b * sqrt_of(prime);
    ExactReal norm = a * a - ExactReal(Rational(prime)) * b * b;
    return conjugate * norm.inverse();
}

ExactReal& ExactReal::operator/=(const ExactReal& other)
{
    *this *= other.inverse();
    return *this;
}

int ExactReal::sign() const
{
    if (terms_.empty())
        return 0;
    if (is_rational())
        return terms_.front().second > 0 ? 1 : -1;
    cpp_int prime;
    ExactReal a, b;
    split_on_prime(*this, prime, a, b);
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa == 0)
        return sb;
    if (sb == 0 || sa == sb)
        return sa;
    ExactReal norm = a * a - ExactReal(Rational(prime)) * b * b;
    return sa * norm.sign();
}

std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b)
{
    if (a.terms_ == b.terms_)
        return std::strong_ordering::equal;
    const int s = (a - b).sign();
    return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string ExactReal::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [radicand, coeff] : terms_) {
        Rational c = coeff;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        if (c < 0)
            c = -c;
        first = false;
        const cpp_int num = boost::multiprecision::numerator(c);
        const cpp_int den = boost::multiprecision::denominator(c);
        if (radicand == 1) {
            os << num;
        } else {
            if (num != 1)
                os << num << "*";
            os << "sqrt(" << radicand << ")";
        }
        if (den != 1)
            os << "/" << den;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactReal& value)
{
    return os << value.to_string();
}

} // namespace digifix
