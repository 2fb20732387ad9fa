#include "braidhom/field.hpp"

#include <charconv>

#include "braidhom/error.hpp"

namespace braidhom {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("not a prime: " + std::to_string(p));
  if (p >= (1ull << 62)) throw InvalidInput("prime too large: " + std::to_string(p));
  Field f;
  f.kind_ = Kind::prime_field;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "0") return rationals();
  if (text.starts_with("F_") || text.starts_with("f_")) text.remove_prefix(2);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidInput("bad field '" + std::string(text) + "' (expected Q or a prime)");
  }
  return prime(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

namespace {

mpz_class mod_p(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r;
}

}  // namespace

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(static_cast<long>(v));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return Scalar(static_cast<long>(r));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (is_rational()) return v;
  mpz_class num = mod_p(v.get_num(), p_);
  mpz_class den = mod_p(v.get_den(), p_);
  if (den == 0) {
    throw FieldMismatch("denominator of " + v.get_str() + " vanishes in " + name());
  }
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  return Scalar(mod_p(num * dinv, p_));
}

bool Field::contains(const Scalar& v) const {
  if (is_rational()) return true;
  if (v.get_den() != 1) return false;
  return sgn(v) >= 0 && v.get_num() < mpz_class(static_cast<unsigned long>(p_));
}

std::uint64_t Field::residue(const Scalar& a) const {
  return mpz_get_ui(a.get_num_mpz_t());
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a + b;
  std::uint64_t s = residue(a) + residue(b);
  if (s >= p_) s -= p_;
  return Scalar(static_cast<unsigned long>(s));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a - b;
  std::uint64_t x = residue(a), y = residue(b);
  return Scalar(static_cast<unsigned long>(x >= y ? x - y : x + p_ - y));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a * b;
  unsigned __int128 m = static_cast<unsigned __int128>(residue(a)) * residue(b);
  return Scalar(static_cast<unsigned long>(m % p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return -a;
  std::uint64_t x = residue(a);
  return Scalar(static_cast<unsigned long>(x == 0 ? 0 : p_ - x));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("division by zero in " + name());
  if (is_rational()) return 1 / a;
  return from_rational(mpq_class(1) / a);
}

Scalar Field::pow(const Scalar& a, long long e) const {
  Scalar base = e < 0 ? inv(a) : a;
  unsigned long long k = e < 0 ? -static_cast<unsigned long long>(e) : e;
  Scalar result = from_int(1);
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

}  // namespace braidhom
