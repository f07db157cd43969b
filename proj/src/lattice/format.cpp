#include "kcsc/lattice/types.hpp"

#include <cctype>

namespace kcsc {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw InputError("malformed rational \"" + std::string(whole) + "\"");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw InputError("malformed rational \"" + std::string(whole) + "\"");
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw InputError("empty rational");
  const std::string_view trimmed = text.substr(first, last - first + 1);
  const auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(trimmed, trimmed));
  const Integer num = parse_integer(trimmed.substr(0, slash), trimmed);
  const Integer den = parse_integer(trimmed.substr(slash + 1), trimmed);
  if (den == 0) throw InputError("zero denominator in \"" + std::string(trimmed) + "\"");
  return Rational(num, den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace kcsc
