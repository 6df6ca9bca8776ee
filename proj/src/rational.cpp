#include "leibten/rational.hpp"

#include <cctype>

#include "leibten/error.hpp"

namespace leibten {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ComplexNotComposable: return "ComplexNotComposable";
    case ErrorCode::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidInputData: return "InvalidInputData";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotASection: return "NotASection";
    case ErrorCode::TruncationOverflow: return "TruncationOverflow";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::NotSquareZero: return "NotSquareZero";
    case ErrorCode::NotHomotopyET: return "NotHomotopyET";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false))) {
    throw Error(ErrorCode::InvalidInputData, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer p(n, 10);
  Integer q(1);
  if (!den.empty()) q = Integer(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorCode::InvalidInputData, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

}  // namespace leibten
