#include "polar/rational.hpp"

#include <cctype>

#include "polar/errors.hpp"

namespace polar {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num, den(1);
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) &&
                      parse_integer(text.substr(slash + 1), den);
  if (!ok) {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

int sign(const Rational& r) { return sgn(r); }

Rational abs(const Rational& r) { return Rational(::abs(r)); }

std::string to_decimal(const Rational& r, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  // round half away from zero
  Integer scaled_num = ::abs(r.get_num()) * scale * 2 + r.get_den();
  Integer q = scaled_num / (r.get_den() * 2);
  std::string s = q.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (sgn(r) < 0 && q != 0) s.insert(0, "-");
  return s;
}

long floor_log2(const Rational& r) {
  if (sgn(r) == 0) throw InvalidArgument("floor_log2 of zero");
  Integer num = ::abs(r.get_num());
  const Integer& den = r.get_den();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  // 2^e <= num/den < 2^(e+2) at this point; settle the last bit.
  Rational probe = pow2(e + 1);
  if (abs(r) >= probe) return e + 1;
  if (abs(r) >= pow2(e)) return e;
  return e - 1;
}

Rational pow2(long e) {
  Integer p(1);
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return make_rational(Integer(1), p);
}

}  // namespace polar
