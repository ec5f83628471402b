#include "pentiso/rational.hpp"

#include <cmath>

#include "pentiso/errors.hpp"

namespace pentiso {

using boost::multiprecision::cpp_int;

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const cpp_int num(text.substr(0, slash));
      const cpp_int den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      const std::string whole = text.substr(0, dot);
      const std::string frac = text.substr(dot + 1);
      const bool negative = !whole.empty() && whole[0] == '-';
      cpp_int scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const cpp_int w(whole.empty() || whole == "-" || whole == "+" ? "0" : whole);
      const cpp_int f(frac.empty() ? "0" : frac);
      Rational r(w);
      const Rational part(f, scale);
      return negative ? Rational(r - part) : Rational(r + part);
    }
    return Rational(cpp_int(text));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("not a rational number: '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_from_double(double x, long max_den) {
  if (!std::isfinite(x)) throw DomainError("non-finite value has no rational form");
  // continued-fraction best approximation
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int i = 0; i < 64; ++i) {
    const double a = std::floor(v);
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(v - a) < 1e-15) break;
    v = 1.0 / (v - a);
    if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) < 1e-15) break;
  }
  return Rational(cpp_int(p1), cpp_int(q1));
}

}  // namespace pentiso
