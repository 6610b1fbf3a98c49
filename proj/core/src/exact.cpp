#include "digifix/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "digifix/errors.hpp"

namespace digifix {

namespace mp = boost::multiprecision;

Rational parse_rational(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    const std::string_view original = text;
    text = trim(text);
    auto fail = [&]() -> Rational {
        throw InputError("not an exact rational: '" + std::string(original) + "'");
    };
    if (text.empty()) return fail();

    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto parse_digits = [&](std::string_view digits) -> Integer {
        if (digits.empty()) fail();
        Integer value = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
            value = value * 10 + (c - '0');
        }
        return value;
    };

    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_digits(trim(text.substr(0, slash)));
        Integer den = parse_digits(trim(text.substr(slash + 1)));
        if (den == 0) fail();
        result = Rational(num, den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) fail();
        Integer w = whole.empty() ? Integer(0) : parse_digits(whole);
        Integer f = frac.empty() ? Integer(0) : parse_digits(frac);
        Integer scale = mp::pow(Integer(10), static_cast<unsigned>(frac.size()));
        result = Rational(w * scale + f, scale);
    } else {
        result = Rational(parse_digits(text));
    }
    return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& value)
{
    const Integer num = mp::numerator(value);
    const Integer den = mp::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Integer integer_root(const Integer& value, unsigned k)
{
    if (value < 0) throw InputError("integer_root of a negative value");
    if (k == 0) throw InputError("integer_root with index 0");
    if (k == 1 || value < 2) return value;
    const unsigned bits = static_cast<unsigned>(mp::msb(value)) + 1;
    Integer x = Integer(1) << (bits / k + 1);
    while (true) {
        Integer y = ((k - 1) * x + value / mp::pow(x, k - 1)) / k;
        if (y >= x) break;
        x = y;
    }
    return x;
}

Rational rational_pow(const Rational& base, unsigned k)
{
    return Rational(Integer(mp::pow(mp::numerator(base), k)), Integer(mp::pow(mp::denominator(base), k)));
}

std::strong_ordering compare(const Integer& a, const Integer& b)
{
    const int c = a.compare(b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare(const Rational& a, const Rational& b)
{
    const int c = a.compare(b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace detail {

namespace {

// Splits a into s^n * t with t n-th-power free. Trial division only needs
// divisors d with d^n <= t.
std::pair<Integer, Integer> extract_powers(Integer a, unsigned n)
{
    Integer s = 1;
    if (a <= 1 || n == 1) return {n == 1 ? a : Integer(1), n == 1 ? Integer(1) : a};
    if (Integer r = integer_root(a, n); mp::pow(r, n) == a) return {r, Integer(1)};

    if (a <= std::numeric_limits<std::uint64_t>::max()) {
        auto t = a.convert_to<std::uint64_t>();
        std::uint64_t sf = 1;
        auto pow_fits = [n](std::uint64_t d, std::uint64_t limit, std::uint64_t& out) {
            out = 1;
            for (unsigned i = 0; i < n; ++i) {
                if (out > limit / d) return false;
                out *= d;
            }
            return true;
        };
        for (std::uint64_t d = 2;; d += (d == 2 ? 1 : 2)) {
            std::uint64_t dn = 0;
            if (!pow_fits(d, t, dn)) break;
            while (t % dn == 0) {
                t /= dn;
                sf *= d;
            }
        }
        return {Integer(sf), Integer(t)};
    }

    for (Integer d = 2;; d += (d == 2 ? 1 : 2)) {
        Integer dn = mp::pow(d, n);
        if (dn > a) break;
        while (a % dn == 0) {
            a /= dn;
            s *= d;
        }
    }
    return {s, a};
}

unsigned lcm_index(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

Surd::Surd(Rational value)
{
    if (value != 0) terms_.push_back({Integer(1), std::move(value)});
}

Surd Surd::radical(const Rational& coeff, const Rational& radicand, unsigned index)
{
    if (index == 0) throw InputError("radical index must be positive");
    if (radicand < 0) throw InputError("radical of a negative number");
    Surd out;
    if (coeff == 0 || radicand == 0) return out;
    const Integer num = mp::numerator(radicand);
    const Integer den = mp::denominator(radicand);
    // (a/b)^(1/n) = (a * b^(n-1))^(1/n) / b
    const Integer whole = num * mp::pow(den, index - 1);
    const Rational c = coeff / Rational(den);
    auto [s, t] = extract_powers(whole, index);
    out.index_ = index;
    out.add_term(c * Rational(s), t);
    out.normalize_index();
    return out;
}

bool Surd::is_rational() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().radicand == 1);
}

Rational Surd::rational_value() const
{
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::logic_error("Surd::rational_value on an irrational value");
    return terms_.front().coeff;
}

void Surd::add_term(const Rational& coeff, const Integer& radicand)
{
    if (coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                               [](const RadicalTerm& term, const Integer& r) { return term.radicand < r; });
    if (it != terms_.end() && it->radicand == radicand) {
        it->coeff += coeff;
        if (it->coeff == 0) terms_.erase(it);
    } else {
        terms_.insert(it, RadicalTerm{radicand, coeff});
    }
}

void Surd::normalize_index()
{
    if (is_rational()) index_ = 1;
}

Surd Surd::lifted(unsigned index) const
{
    if (index == index_) return *this;
    if (index % index_ != 0) throw std::logic_error("Surd::lifted to a non-multiple index");
    const unsigned e = index / index_;
    Surd out;
    out.index_ = index;
    out.terms_.reserve(terms_.size());
    for (const auto& term : terms_) {
        out.terms_.push_back({term.radicand == 1 ? Integer(1) : Integer(mp::pow(term.radicand, e)), term.coeff});
    }
    // x -> x^e is monotone on positive integers, so the order is preserved.
    return out;
}

Surd Surd::scaled(const Rational& factor) const
{
    if (factor == 0) return {};
    Surd out = *this;
    for (auto& term : out.terms_) term.coeff *= factor;
    return out;
}

Surd operator+(const Surd& a, const Surd& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const unsigned index = lcm_index(a.index_, b.index_);
    Surd out = a.lifted(index);
    const Surd rhs = b.lifted(index);
    for (const auto& term : rhs.terms_) out.add_term(term.coeff, term.radicand);
    out.normalize_index();
    return out;
}

Surd Surd::operator-() const
{
    Surd out = *this;
    for (auto& term : out.terms_) term.coeff = -term.coeff;
    return out;
}

Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

Surd operator*(const Surd& a, const Surd& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_rational()) return b.scaled(a.terms_.front().coeff);
    if (b.is_rational()) return a.scaled(b.terms_.front().coeff);
    const unsigned index = lcm_index(a.index_, b.index_);
    const Surd lhs = a.lifted(index);
    const Surd rhs = b.lifted(index);
    Surd out;
    out.index_ = index;
    for (const auto& x : lhs.terms_) {
        for (const auto& y : rhs.terms_) {
            if (x.radicand == 1 || y.radicand == 1) {
                out.add_term(x.coeff * y.coeff, x.radicand * y.radicand);
                continue;
            }
            auto [s, t] = extract_powers(x.radicand * y.radicand, index);
            out.add_term(x.coeff * y.coeff * Rational(s), t);
        }
    }
    out.normalize_index();
    return out;
}

bool Surd::operator==(const Surd& other) const
{
    if (index_ == other.index_) return terms_ == other.terms_;
    const unsigned index = lcm_index(index_, other.index_);
    return lifted(index).terms_ == other.lifted(index).terms_;
}

int Surd::sign() const
{
    if (terms_.empty()) return 0;
    if (is_rational()) return terms_.front().coeff > 0 ? 1 : -1;
    // Nonzero by linear independence; refine rational enclosures until the
    // interval excludes zero.
    for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
        Rational lo = 0;
        Rational hi = 0;
        const Integer scale = Integer(1) << bits;
        for (const auto& term : terms_) {
            if (term.radicand == 1) {
                lo += term.coeff;
                hi += term.coeff;
                continue;
            }
            const Integer r = integer_root(term.radicand << (bits * index_), index_);
            const Rational below(r, scale);
            const Rational above(r + 1, scale);
            if (term.coeff > 0) {
                lo += term.coeff * below;
                hi += term.coeff * above;
            } else {
                lo += term.coeff * above;
                hi += term.coeff * below;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw std::runtime_error("sign refinement did not converge for " + to_string());
}

std::string Surd::to_string() const
{
    if (terms_.empty()) return "0";
    auto radical_text = [this](const Integer& radicand) {
        if (index_ == 2) return "sqrt(" + radicand.str() + ")";
        return "root(" + radicand.str() + "," + std::to_string(index_) + ")";
    };
    auto term_text = [&](const RadicalTerm& term, const Rational& coeff) {
        if (term.radicand == 1) return format_rational(coeff);
        if (coeff == 1) return radical_text(term.radicand);
        if (coeff == -1) return "-" + radical_text(term.radicand);
        return format_rational(coeff) + "*" + radical_text(term.radicand);
    };
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& term = terms_[i];
        if (i == 0) {
            out += term_text(term, term.coeff);
        } else if (term.coeff < 0) {
            out += " - " + term_text(term, -term.coeff);
        } else {
            out += " + " + term_text(term, term.coeff);
        }
    }
    return out;
}

double Surd::approx() const
{
    double sum = 0.0;
    for (const auto& term : terms_) {
        const double c = term.coeff.convert_to<double>();
        if (term.radicand == 1) {
            sum += c;
        } else {
            sum += c * std::pow(term.radicand.convert_to<double>(), 1.0 / index_);
        }
    }
    return sum;
}

}  // namespace detail

using detail::Surd;

Real::Real(std::int64_t value) : num_(Rational(value)) {}

Real::Real(Rational value) : num_(std::move(value)) {}

Real::Real(Surd num, Surd den)
{
    if (den.is_zero()) throw std::domain_error("division by zero");
    if (!den.is_rational() && den.is_single_term()) {
        // c * t^(1/n): multiply through by t^((n-1)/n).
        const auto& term = den.terms().front();
        const Surd conj = Surd::radical(Rational(1), Rational(mp::pow(term.radicand, den.index() - 1)), den.index());
        num = num * conj;
        den = den * conj;
    } else if (!den.is_rational() && den.index() == 2 && den.terms().size() == 2) {
        // a*sqrt(s) + b*sqrt(t): conjugate makes the denominator rational.
        const auto& t0 = den.terms()[0];
        const auto& t1 = den.terms()[1];
        const Surd conj = Surd::radical(t0.coeff, Rational(t0.radicand), 2) -
                          Surd::radical(t1.coeff, Rational(t1.radicand), 2);
        num = num * conj;
        den = den * conj;
    }
    if (den.is_rational()) {
        num_ = num.scaled(Rational(1) / den.rational_value());
        den_ = Surd(Rational(1));
        return;
    }
    if (num.is_zero()) {
        num_ = Surd();
        den_ = Surd(Rational(1));
        return;
    }
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Real Real::root(const Rational& radicand, unsigned index)
{
    return Real(Surd::radical(Rational(1), radicand, index), Surd(Rational(1)));
}

Real Real::nth_root(unsigned k) const
{
    if (k == 0) throw InputError("root index must be positive");
    if (num_.is_zero()) return Real();
    if (sign() < 0) throw InputError("root of a negative value: " + to_string());
    if (!den_.is_rational() || !num_.is_single_term()) {
        throw InputError("root of a radical sum is not representable: " + to_string());
    }
    const auto& term = num_.terms().front();
    const unsigned n = num_.index();
    // c * t^(1/n) = (c^n * t)^(1/n)
    const Rational inner = rational_pow(term.coeff, n) * Rational(term.radicand);
    return Real::root(inner, n * k);
}

bool Real::is_integer() const
{
    return is_rational() && mp::denominator(to_rational()) == 1;
}

Rational Real::to_rational() const
{
    if (!is_rational()) throw std::logic_error("Real::to_rational on an irrational value");
    return num_.rational_value() / den_.rational_value();
}

Real operator+(const Real& a, const Real& b)
{
    if (a.den_ == b.den_) return Real(a.num_ + b.num_, a.den_);
    return Real(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Real operator-(const Real& a, const Real& b) { return a + (-b); }

Real operator*(const Real& a, const Real& b) { return Real(a.num_ * b.num_, a.den_ * b.den_); }

Real operator/(const Real& a, const Real& b)
{
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.den_ == b.den_) return Real(a.num_, b.num_);
    return Real(a.num_ * b.den_, a.den_ * b.num_);
}

Real Real::operator-() const
{
    Real out = *this;
    out.num_ = -out.num_;
    return out;
}

bool operator==(const Real& a, const Real& b)
{
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::strong_ordering operator<=>(const Real& a, const Real& b)
{
    const int s = (a.num_ * b.den_ - b.num_ * a.den_).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Real::to_string() const
{
    if (den_.is_rational()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

double Real::approx() const { return num_.approx() / den_.approx(); }

}  // namespace digifix
