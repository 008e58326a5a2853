#include "mombin/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace mombin {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class num = numerator();
  const mpz_class den = denominator();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

mpz_class floor(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_exact(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  auto fail = [&](const char* why) {
    return ParseError(std::string("cannot parse '") + std::string(original) + "' as an exact number: " + why);
  };
  if (text.empty()) throw fail("empty");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view p = text.substr(0, slash);
    const std::string_view q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw fail("malformed fraction");
    num = mpz_class(std::string(p), 10);
    den = mpz_class(std::string(q), 10);
    if (den == 0) throw fail("zero denominator");
  } else {
    const auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail("no digits");
    if (!whole.empty() && !all_digits(whole)) throw fail("malformed decimal");
    if (!frac.empty() && !all_digits(frac)) throw fail("malformed decimal");
    std::string digits(whole);
    digits.append(frac);
    num = mpz_class(digits.empty() ? std::string("0") : digits, 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  }
  if (negative) num = -num;
  return Rational(num, den);
}

// ---------------------------------------------------------------------------
// Surd

int surd_sign(const Rational& a, const Rational& b, const Rational& r) {
  if (r.sign() < 0) throw std::domain_error("surd_sign: negative radicand");
  const int sa = a.sign();
  const int sb = r.is_zero() ? 0 : b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the term with the larger square wins.
  const auto c = a * a <=> b * b * r;
  if (c > 0) return sa;
  if (c < 0) return sb;
  return 0;
}

Surd::Surd(const Rational& a, const Rational& b, const Rational& r) : a_(a), b_(b), r_(r) {
  if (r_.sign() < 0) throw std::domain_error("Surd: negative radicand");
  normalize();
}

void Surd::normalize() {
  if (b_.is_zero() || r_.is_zero()) {
    b_ = Rational(0);
    r_ = Rational(0);
    return;
  }
  if (auto root = r_.exact_sqrt()) {
    a_ += b_ * *root;
    b_ = Rational(0);
    r_ = Rational(0);
  }
}

const Rational& Surd::as_rational() const {
  if (!is_rational()) throw std::domain_error("Surd: value " + str() + " is irrational");
  return a_;
}

int Surd::sign() const { return surd_sign(a_, b_, r_); }

double Surd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(r_.to_double());
}

std::string Surd::str() const {
  if (is_rational()) return a_.str();
  std::ostringstream os;
  if (!a_.is_zero()) os << a_.str() << (b_.sign() < 0 ? " - " : " + ");
  else if (b_.sign() < 0) os << "-";
  os << abs(b_).str() << "*sqrt(" << r_.str() << ")";
  return os.str();
}

// Coefficient of sqrt(this->r_) equivalent to o.b_*sqrt(o.r_).
const Rational& Surd::common_radicand(const Surd& o) const {
  if (r_ == o.r_) return o.b_;
  throw std::domain_error("Surd: mixed radicands " + r_.str() + " and " + o.r_.str());
}

Surd& Surd::operator+=(const Surd& o) {
  if (o.is_rational()) {
    a_ += o.a_;
    return *this;
  }
  if (is_rational()) {
    a_ += o.a_;
    b_ = o.b_;
    r_ = o.r_;
    return *this;
  }
  if (r_ == o.r_) {
    b_ += o.b_;
  } else if (auto ratio = (o.r_ / r_).exact_sqrt()) {
    b_ += o.b_ * *ratio;
  } else {
    (void)common_radicand(o);
  }
  a_ += o.a_;
  normalize();
  return *this;
}

Surd& Surd::operator-=(const Surd& o) { return *this += -o; }

Surd Surd::operator-() const {
  Surd out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

Surd& Surd::operator*=(const Surd& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    normalize();
    return *this;
  }
  if (is_rational()) {
    const Rational a = a_;
    *this = o;
    a_ *= a;
    b_ *= a;
    normalize();
    return *this;
  }
  Rational ob = o.b_;
  if (r_ != o.r_) {
    auto ratio = (o.r_ / r_).exact_sqrt();
    if (!ratio) (void)common_radicand(o);
    ob *= *ratio;
  }
  const Rational a = a_ * o.a_ + b_ * ob * r_;
  const Rational b = a_ * ob + b_ * o.a_;
  a_ = a;
  b_ = b;
  normalize();
  return *this;
}

Surd& Surd::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Surd: division by zero");
  a_ /= o;
  b_ /= o;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// RootTerm

int RootTerm::sign() const {
  if (radicand.sign() < 0) throw std::domain_error("RootTerm: negative radicand");
  return radicand.is_zero() ? 0 : coefficient.sign();
}

double RootTerm::to_double() const { return coefficient.to_double() * std::sqrt(radicand.to_double()); }

namespace {

// Square of the term, always rational.
Rational square(const RootTerm& t) { return t.coefficient * t.coefficient * t.radicand; }

int sign_of_pair(const RootTerm& x, const RootTerm& y) {
  const int sx = x.sign();
  const int sy = y.sign();
  if (sy == 0 || sx == sy) return sx;
  if (sx == 0) return sy;
  const auto c = square(x) <=> square(y);
  if (c > 0) return sx;
  if (c < 0) return sy;
  return 0;
}

}  // namespace

int sign_of_sum(std::span<const RootTerm> terms) {
  std::vector<RootTerm> live;
  for (const auto& t : terms) {
    if (t.sign() != 0) live.push_back(t);
  }
  switch (live.size()) {
    case 0:
      return 0;
    case 1:
      return live[0].sign();
    case 2:
      return sign_of_pair(live[0], live[1]);
    case 3:
      break;
    default:
      throw std::invalid_argument("sign_of_sum: at most three terms are supported");
  }
  const RootTerm& x = live[0];
  const RootTerm& y = live[1];
  const RootTerm& z = live[2];
  const int s_xy = sign_of_pair(x, y);
  const int s_z = z.sign();
  if (s_xy == 0) return s_z;
  if (s_xy == s_z) return s_xy;
  // (x + y)^2 - z^2 = x^2 + y^2 - z^2 + 2*cx*cy*sqrt(rx*ry)
  const int d = surd_sign(square(x) + square(y) - square(z),
                          Rational(2) * x.coefficient * y.coefficient, x.radicand * y.radicand);
  if (d > 0) return s_xy;
  if (d < 0) return s_z;
  return 0;
}

namespace {
std::strong_ordering to_ordering(int s) {
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}
}  // namespace

std::strong_ordering compare(const RootTerm& x, const RootTerm& y) {
  const RootTerm terms[] = {x, -y};
  return to_ordering(sign_of_sum(terms));
}

std::strong_ordering compare_distance(const RootTerm& x, const RootTerm& y, const RootTerm& ref) {
  // |x-ref|^2 - |y-ref|^2 = (x - y) * (x + y - 2 ref)
  const RootTerm diff[] = {x, -y};
  const RootTerm mid[] = {x, y, ref.scaled(Rational(-2))};
  return to_ordering(sign_of_sum(diff) * sign_of_sum(mid));
}

}  // namespace mombin
