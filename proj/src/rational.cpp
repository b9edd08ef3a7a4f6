#include "pentalimit/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace pentalimit {

namespace {

bool looks_like_fraction(const std::string& s) {
  return s.find('/') != std::string::npos;
}

bool looks_like_decimal(const std::string& s) {
  return s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
         s.find('E') != std::string::npos;
}

// 10^k as mpz
mpz_class pow10z(unsigned long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
  return p;
}

}  // namespace

Rat Rat::parse(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty number");

  try {
    if (looks_like_fraction(s)) {
      mpq_class q(s, 10);
      if (q.get_den() == 0)
        throw Error(ErrorCode::InvalidInput, "zero denominator in '" + input + "'");
      q.canonicalize();
      return Rat(q);
    }
    if (looks_like_decimal(s)) {
      // "-12.34e-1" -> sign, digits, exponent
      std::string body = s;
      long exp10 = 0;
      auto epos = body.find_first_of("eE");
      if (epos != std::string::npos) {
        exp10 = std::stol(body.substr(epos + 1));
        body = body.substr(0, epos);
      }
      auto dot = body.find('.');
      if (dot != std::string::npos) {
        exp10 -= static_cast<long>(body.size() - dot - 1);
        body.erase(dot, 1);
      }
      if (body.empty() || body == "-" || body == "+")
        throw Error(ErrorCode::InvalidInput, "bad number '" + input + "'");
      mpz_class mant(body, 10);
      mpq_class q(mant);
      if (exp10 >= 0)
        q *= mpq_class(pow10z(static_cast<unsigned long>(exp10)));
      else
        q /= mpq_class(pow10z(static_cast<unsigned long>(-exp10)));
      q.canonicalize();
      return Rat(q);
    }
    return Rat(mpq_class(mpz_class(s, 10)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidInput, "bad number '" + input + "'");
  }
}

Rat Rat::from_double(double x) {
  if (!std::isfinite(x))
    throw Error(ErrorCode::InvalidInput, "non-finite value");
  mpq_class q(x);
  q.canonicalize();
  return Rat(q);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace pentalimit
