#pragma once

// Exact arithmetic for distances and the expressions built from them.
//
// Every distance handled by the library is the k-th root of a nonnegative
// integer (k = p for l_p metrics, k = 1 for path lengths). Classifier
// expressions add, multiply and divide such roots, so values live in
// fields of the form Q(t_1^(1/N), ..., t_m^(1/N)). A `Real` stores one
// such value as a quotient of two radical sums with canonical
// (N-th-power-free) radicands. Equality is decided exactly: canonical
// radicals over distinct radicands are linearly independent over Q.
// Signs of nonzero sums are found by refining rational enclosures built
// from integer roots, so no comparison ever goes through floating point.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace digifix {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-7/2", "0.25" or "1e-3"-free decimal forms into an exact
/// rational. Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// "7/2", "-3", "0".
std::string format_rational(const Rational& value);

/// floor(value^(1/k)) for value >= 0, k >= 1.
Integer integer_root(const Integer& value, unsigned k);

Rational rational_pow(const Rational& base, unsigned k);

std::strong_ordering compare(const Integer& a, const Integer& b);
std::strong_ordering compare(const Rational& a, const Rational& b);

namespace detail {

struct RadicalTerm {
    Integer radicand;  // >= 1 and N-th-power free; 1 marks the rational part
    Rational coeff;    // never zero inside a normalized Surd

    bool operator==(const RadicalTerm&) const = default;
};

/// Sum of coeff * radicand^(1/index) over terms sorted by radicand.
class Surd {
public:
    Surd() = default;
    explicit Surd(Rational value);

    /// coeff * radicand^(1/index), radicand >= 0.
    static Surd radical(const Rational& coeff, const Rational& radicand, unsigned index);

    unsigned index() const { return index_; }
    const std::vector<RadicalTerm>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_single_term() const { return terms_.size() == 1; }
    Rational rational_value() const;  // requires is_rational()
    int sign() const;

    Surd lifted(unsigned index) const;
    Surd scaled(const Rational& factor) const;

    friend Surd operator+(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a, const Surd& b);
    friend Surd operator*(const Surd& a, const Surd& b);
    Surd operator-() const;
    bool operator==(const Surd& other) const;

    std::string to_string() const;
    double approx() const;

private:
    unsigned index_ = 1;
    std::vector<RadicalTerm> terms_;

    void add_term(const Rational& coeff, const Integer& radicand);
    void normalize_index();
};

}  // namespace detail

/// Exact real number: num / den with den > 0, both radical sums.
class Real {
public:
    Real() = default;
    Real(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Real(Rational value);      // NOLINT(google-explicit-constructor)

    /// radicand^(1/index); radicand >= 0, index >= 1.
    static Real root(const Rational& radicand, unsigned index);

    /// Principal k-th root. Supported only for nonnegative values that are
    /// a single radical term (every distance is); throws InputError for
    /// negative values or general radical sums.
    Real nth_root(unsigned k) const;
    Real sqrt() const { return nth_root(2); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.is_rational() && den_.is_rational(); }
    bool is_integer() const;
    Rational to_rational() const;  // requires is_rational()
    int sign() const { return num_.sign(); }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);  // throws std::domain_error on zero divisor
    Real operator-() const;
    Real& operator+=(const Real& other) { return *this = *this + other; }
    Real& operator-=(const Real& other) { return *this = *this - other; }
    Real& operator*=(const Real& other) { return *this = *this * other; }
    Real& operator/=(const Real& other) { return *this = *this / other; }

    friend bool operator==(const Real& a, const Real& b);
    friend std::strong_ordering operator<=>(const Real& a, const Real& b);

    /// Exact text: "7/2", "sqrt(2)", "3 + 1/2*root(5,3)", "(a)/(b)".
    /// Parses back through Expression.
    std::string to_string() const;
    double approx() const;

private:
    detail::Surd num_;
    detail::Surd den_{Rational(1)};

    Real(detail::Surd num, detail::Surd den);
};

}  // namespace digifix
