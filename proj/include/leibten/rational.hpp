#ifndef LEIBTEN_RATIONAL_HPP
#define LEIBTEN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace leibten {

// GMP keeps mpq_class values canonical after every arithmetic operation;
// parse_rational canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q". Throws Error(InvalidInputData) otherwise.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline int sign_of(const Rational& value) { return sgn(value); }

// (-1)^e as a small integer.
inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

Rational factorial(unsigned n);

}  // namespace leibten

#endif
