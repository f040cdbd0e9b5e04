#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace digifix {

using Rational = boost::multiprecision::cpp_rational;

/// An element of the field Q(sqrt 2, sqrt 3, sqrt 5, ...), stored as a finite
/// sum of rational multiples of square roots of distinct square-free integers.
///
/// Every distance the library produces (l1, linf, path length, l2) and every
/// ratio, sum or threshold derived from those distances lives in this field,
/// so all comparisons are exact. Ordering is decided by splitting on one prime
/// at a time: A + B*sqrt(p) has the sign of A*A - p*B*B when A and B disagree.
class ExactReal {
public:
    ExactReal() = default;
    ExactReal(int value) : ExactReal(Rational(value)) {}
    ExactReal(std::int64_t value) : ExactReal(Rational(value)) {}
    ExactReal(const Rational& value);

    /// Exact square root of a nonnegative integer.
    static ExactReal sqrt_of(const boost::multiprecision::cpp_int& radicand);
    static ExactReal ratio(std::int64_t num, std::int64_t den);

    int sign() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Throws std::domain_error if the value is irrational.
    Rational to_rational() const;
    double to_double() const;

    /// Single-term form k*sqrt(s) when the value has that shape (s == 1 for
    /// rationals, zero is (0, 1)).
    bool single_term(Rational& coeff, boost::multiprecision::cpp_int& radicand) const;

    const std::vector<std::pair<boost::multiprecision::cpp_int, Rational>>& terms() const { return terms_; }

    ExactReal operator-() const;
    ExactReal& operator+=(const ExactReal& other);
    ExactReal& operator-=(const ExactReal& other);
    ExactReal& operator*=(const ExactReal& other);
    /// Throws std::domain_error on division by zero.
    ExactReal& operator/=(const ExactReal& other);

    friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
    friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
    friend ExactReal operator*(ExactReal a, const ExactReal& b) { return a *= b; }
    friend ExactReal operator/(ExactReal a, const ExactReal& b) { return a /= b; }

    friend bool operator==(const ExactReal& a, const ExactReal& b) { return a.terms_ == b.terms_; }
    friend std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b);

    ExactReal inverse() const;

    /// Human-readable form such as "2/5", "3*sqrt(2)" or "1 + sqrt(3)/2".
    std::string to_string() const;

private:
    using Term = std::pair<boost::multiprecision::cpp_int, Rational>;

    void add_term(const boost::multiprecision::cpp_int& radicand, const Rational& coeff);
    void normalize();

    // sorted by radicand, no zero coefficients, radicands square-free
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const ExactReal& value);

inline const ExactReal& max(const ExactReal& a, const ExactReal& b) { return a < b ? b : a; }
inline const ExactReal& min(const ExactReal& a, const ExactReal& b) { return b < a ? b : a; }

} // namespace digifix
