#include "zzc/rational.hpp"

#include <cctype>

#include "zzc/error.hpp"

namespace zzc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SubspaceNotContained: return "SubspaceNotContained";
    case ErrorCode::DisconnectedDiagram: return "DisconnectedDiagram";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::InvalidStratum: return "InvalidStratum";
    case ErrorCode::NonMonotoneBlocks: return "NonMonotoneBlocks";
    case ErrorCode::NonMonotoneFilter: return "NonMonotoneFilter";
    case ErrorCode::MissingFace: return "MissingFace";
    case ErrorCode::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::IncompatibleIndexFiltration: return "IncompatibleIndexFiltration";
    case ErrorCode::LineMismatch: return "LineMismatch";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::PointNotInEdge: return "PointNotInEdge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoIntervalDecomposition: return "NoIntervalDecomposition";
    case ErrorCode::NonInjectiveMap: return "NonInjectiveMap";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw Error(ErrorCode::ParseError, "signed denominator in '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

}  // namespace zzc
