#include "tdp/arith.hpp"
#include "tdp/error.hpp"

#include <cctype>
#include <stdexcept>

namespace tdp {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGerm: return "invalid germ";
    case ErrorKind::InvalidChain: return "invalid chain";
    case ErrorKind::NotTSingularity: return "not a T-singularity";
    case ErrorKind::NotDuVal: return "not Du Val";
    case ErrorKind::InvalidFan: return "invalid fan";
    case ErrorKind::NotNefBig: return "anticanonical class not nef and big";
    case ErrorKind::InvalidWeights: return "invalid weights";
    case ErrorKind::InvalidEquation: return "unsupported equation";
    case ErrorKind::MutationUndefined: return "mutation undefined";
    case ErrorKind::InvalidDeformation: return "invalid deformation";
    case ErrorKind::InvalidInput: return "invalid input";
  }
  return "error";
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Bezout ext_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  if (m == 1) return Integer(0);
  Bezout e = ext_gcd(mod_floor(a, m), m);
  if (e.g != 1) return std::nullopt;
  return mod_floor(e.x, m);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw Error(ErrorKind::InvalidInput, "not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw Error(ErrorKind::InvalidInput, "not an integer: '" + text + "'");
    }
  }
  Integer v(text.substr(i));
  return text[0] == '-' ? Integer(-v) : v;
}

}  // namespace tdp
