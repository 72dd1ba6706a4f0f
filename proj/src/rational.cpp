#include "folbound/rational.hpp"

#include <cctype>
#include <limits>

#include "folbound/error.hpp"

namespace folbound {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::ExponentBelowN: return "ExponentBelowN";
    case ErrorCode::SmoothBranch: return "SmoothBranch";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::NonRationalCenter: return "NonRationalCenter";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InconsistentCharts: return "InconsistentCharts";
    case ErrorCode::DivisorNotInvariant: return "DivisorNotInvariant";
    case ErrorCode::DivisorInvariant: return "DivisorInvariant";
    case ErrorCode::IdenticallyZeroRestriction: return "IdenticallyZeroRestriction";
    case ErrorCode::ResidueUndefined: return "ResidueUndefined";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::DicriticalPresent: return "DicriticalPresent";
    case ErrorCode::InvalidConfiguration: return "InvalidConfiguration";
    case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DegenerateData: return "DegenerateData";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

long Rat::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw Error(ErrorCode::InvalidArgument, "rational " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad number '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_int(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(ErrorCode::ParseError, "bad denominator in '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool neg = !int_part.empty() && int_part.front() == '-';
    std::string_view mag = int_part;
    if (!mag.empty() && (mag.front() == '-' || mag.front() == '+')) mag.remove_prefix(1);
    if ((!mag.empty() && !all_digits(mag)) || !all_digits(frac_part) || (mag.empty() && frac_part.empty()))
      throw Error(ErrorCode::ParseError, "bad decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    mpz_class whole = mag.empty() ? mpz_class(0) : mpz_class(std::string(mag), 10);
    mpz_class num = whole * scale + mpz_class(std::string(frac_part), 10);
    if (neg) num = -num;
    mpq_class q(num, scale);
    q.canonicalize();
    return Rat(q);
  }

  return Rat(mpq_class(parse_int(text, text)));
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace folbound
