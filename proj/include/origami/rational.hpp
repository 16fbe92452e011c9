#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals.
 *
 * Every exact quantity the library reports (Lyapunov sums, Siegel-Veech
 * constants, combinatorial kappa terms) is a Rational. Values are kept in
 * lowest terms with a positive denominator, so equality is structural.
 * The textual form is "p/q", with "/q" dropped when q = 1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "origami/errors.hpp"

namespace origami {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : value_(0) {}
    Rational(std::int64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw domain_error("zero denominator");
        // Boost rejects negative denominators, so move the sign first.
        value_ = d < 0 ? boost::multiprecision::cpp_rational(-n, -d) : boost::multiprecision::cpp_rational(n, d);
    }

    /// p/q in lowest terms; throws domain_error when q == 0.
    static Rational make(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

    /// Parses "p/q", "-p/q" or an integer "p". Surrounding blanks are ignored.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    double to_double() const { return value_.convert_to<double>(); }
    std::string to_string() const;

    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

    boost::multiprecision::cpp_rational value_;
};

inline Rational make_rational(std::int64_t p, std::int64_t q) { return Rational::make(p, q); }

inline std::string Rational::to_string() const {
    const BigInt n = numerator();
    const BigInt d = denominator();
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

namespace detail {

inline BigInt parse_bigint(std::string_view s, std::size_t offset) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw parse_error("expected digits", offset + i);
    BigInt v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw parse_error(std::string("unexpected character '") + s[i] + "'", offset + i);
        v = v * 10 + (s[i] - '0');
    }
    return negative ? BigInt(-v) : v;
}

inline std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\n' || s[b] == '\r')) ++b;
    std::size_t e = s.size();
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\n' || s[e - 1] == '\r')) --e;
    if (lead) *lead = b;
    return s.substr(b, e - b);
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    std::size_t lead = 0;
    std::string_view s = detail::trim(text, &lead);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_bigint(s, lead), BigInt(1));
    BigInt n = detail::parse_bigint(s.substr(0, slash), lead);
    BigInt d = detail::parse_bigint(s.substr(slash + 1), lead + slash + 1);
    if (d == 0) throw domain_error("zero denominator");
    return Rational(n, d);
}

}  // namespace origami
