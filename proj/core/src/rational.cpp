#include "natbundle/rational.hpp"

#include <cctype>

#include "natbundle/errors.hpp"

namespace natbundle {

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_text(num, true) || !valid_integer_text(den, false))
    throw ParseError("not a rational of the form p/q: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(n, 10), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

long floor_to_long(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw IntegralityError("value out of machine range: " + to_string(q));
  return f.get_si();
}

long to_long(const Rational& q) {
  if (!is_integral(q)) throw IntegralityError("expected an integer, got " + to_string(q));
  if (!q.get_num().fits_slong_p())
    throw IntegralityError("value out of machine range: " + to_string(q));
  return q.get_num().get_si();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidRequest("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace natbundle
