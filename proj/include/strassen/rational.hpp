/**
 * @file rational.hpp
 * @brief Exact rational scalars and the small amount of vector arithmetic
 * the rest of the library needs.
 *
 * Every quantity in strassen (coordinates, probabilities, LP data, witness
 * entries) is a Rational. GMP keeps mpq_class values in lowest terms with a
 * positive denominator after every arithmetic operation, so equality and
 * comparison are exact.
 */
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strassen {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: bad shapes, invalid probabilities, unparsable text.
class InputError : public Error {
public:
    using Error::Error;
};

/// A solver-produced object failed its own exact re-check. Never expected.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

}  // namespace detail

/// n / d in lowest terms. mpq_class(n, d) alone does not canonicalize.
inline Rational make_rational(long n, long d) {
    if (d == 0) throw InputError("zero denominator");
    Rational r{mpz_class(n), mpz_class(d)};
    r.canonicalize();
    return r;
}

/// Parses "p", "-p", "p/q" or "-p/q" with decimal integers and q > 0.
inline Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : body.substr(slash + 1);
    if (!detail::is_digits(num) || !detail::is_digits(den)) {
        throw InputError("not a rational number: \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    if (text.front() == '-') n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Canonical text form: "n" for integers, "n/d" otherwise, lowest terms.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline Rational dot(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw InputError("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

inline Vector operator-(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw InputError("vector difference: dimension mismatch");
    Vector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
    return out;
}

inline Vector operator+(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw InputError("vector sum: dimension mismatch");
    Vector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
    return out;
}

inline Vector operator*(const Rational& s, const Vector& v) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

inline bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

inline std::string to_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace strassen
