#include <mgo/rational.hpp>

#include <stdexcept>

namespace mgo {

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_integer = [](const std::string& s) {
    // Integer's string constructor rejects an explicit '+'.
    return s[0] == '+' ? Integer(s.substr(1)) : Integer(s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text))
      throw std::invalid_argument("parse_rational: malformed '" + text + "'");
    return Rational(to_integer(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("parse_rational: malformed '" + text + "'");
  Integer n = to_integer(num);
  Integer d = to_integer(den);
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
  if (d < 0) {  // Rational's two-argument constructor requires d > 0.
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

void normalize_integer_vector(std::vector<Rational>& v) {
  Integer lcm_den = 1;
  bool any = false;
  for (const auto& x : v) {
    if (x == 0) continue;
    any = true;
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  }
  if (!any) return;
  Integer gcd_num = 0;
  for (auto& x : v) {
    x *= lcm_den;
    gcd_num = boost::multiprecision::gcd(gcd_num, numerator(x));
  }
  int sign = 0;
  for (const auto& x : v)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  Integer scale = sign < 0 ? Integer(-gcd_num) : gcd_num;
  for (auto& x : v) x /= scale;
}

}  // namespace mgo
