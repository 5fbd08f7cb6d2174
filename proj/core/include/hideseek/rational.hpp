#ifndef HIDESEEK_RATIONAL_HPP
#define HIDESEEK_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace hideseek {

// Exact rational number. All game quantities (rates, budgets, marginals,
// probabilities, values, thresholds) are kept in this type end to end;
// floating point appears only in rendered output and simulation statistics.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Parses "num/den", a bare integer "num", or the mixed form "int+num/den".
// Whitespace is not accepted; the denominator must be positive.
Rational parse_rational(const std::string& text);

// Canonical rendering: lowest terms, "num/den", or just "num" when integral.
std::string format_rational(const Rational& q);

// Rendering with 12 significant digits, suitable for plots and logs.
std::string format_double(double x);

double to_double(const Rational& q);

bool is_integer(const Rational& q);

// Floor of an exact rational as an arbitrary-precision integer.
Integer floor_rational(const Rational& q);

} // namespace hideseek

#endif
