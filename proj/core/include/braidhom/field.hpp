#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace braidhom {

// Scalars are GMP rationals. Over F_p they are kept as integer residues in
// [0, p); over Q they are in lowest terms (mpq_class canonicalizes).
using Scalar = mpq_class;

class Field {
 public:
  enum class Kind { rationals, prime_field };

  Field() = default;  // Q
  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  // "Q", "0", or a prime such as "2" / "32003" / "F_5".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  std::string name() const;

  Scalar from_int(long long v) const;
  // Throws FieldMismatch if the denominator vanishes mod p.
  Scalar from_rational(const mpq_class& v) const;
  // True if v is a canonical element of this field.
  bool contains(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  Scalar pow(const Scalar& a, long long e) const;
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

  // Residue of a canonical F_p scalar; undefined over Q.
  std::uint64_t residue(const Scalar& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Default working field: a prime larger than any group order used here.
inline constexpr std::uint64_t kDefaultPrime = 32003;

}  // namespace braidhom
