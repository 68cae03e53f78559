#include "mwc/rational.hpp"

#include <cctype>

#include "mwc/errors.hpp"

namespace mwc {

BigInt big_pow2(unsigned k) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), BigInt(1).get_mpz_t(), k);
  return r;
}

BigInt factorial(unsigned k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) {
    throw ValidationError(ValidationKind::ZeroDenominator, "rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw ValidationError(ValidationKind::ZeroDenominator, "division of rational by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view s) {
  auto bad = [&] {
    return ValidationError(ValidationKind::BadNumber,
                           "not a rational: \"" + std::string(s) + "\" (expected p or p/q)");
  };
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };

  std::string_view num_part = s;
  std::string_view den_part;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num_part = s.substr(0, slash);
    den_part = s.substr(slash + 1);
    if (!is_int(den_part)) throw bad();
  }
  if (!is_int(num_part)) throw bad();
  if (num_part.front() == '+') num_part.remove_prefix(1);  // mpz_set_str dislikes '+'

  BigInt num(std::string(num_part), 10);
  BigInt den = den_part.empty() ? BigInt(1) : BigInt(std::string(den_part), 10);
  return Rational(num, den);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt num = abs(v_.get_num());
  const BigInt& den = v_.get_den();

  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), BigInt(num * scale).get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) ++q;

  BigInt whole = q / scale;
  BigInt frac = q % scale;
  std::string out;
  if (sgn(v_) < 0 && sgn(q) != 0) out += "-";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

}  // namespace mwc
