#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace trimat {

/// Base field of a computation: the rationals (characteristic 0) or F_p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws InvalidInput unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts "rational" or "fp:<p>".
  static Field parse(std::string_view text);

  constexpr bool is_rational() const { return p_ == 0; }
  constexpr std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  constexpr explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator, using machine integers while they fit and GMP otherwise.
/// Residues mod p live in [0, p).
///
/// A scalar built from an integer literal belongs to Q; arithmetic with an
/// F_p scalar reduces it into F_p first, so literals like `Scalar(1)` work in
/// either field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : num_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& value);
  Scalar(long num, long den);

  static Scalar from(Field field, long value);
  static Scalar from(Field field, const mpq_class& value);
  /// Parses "a", "-a", "a/b" into the given field.
  static Scalar parse(std::string_view text, Field field = Field::rationals());

  Scalar(const Scalar& other);
  Scalar(Scalar&& other) noexcept = default;
  Scalar& operator=(const Scalar& other);
  Scalar& operator=(Scalar&& other) noexcept = default;
  ~Scalar() = default;

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact rational value; only valid for scalars over Q.
  mpq_class to_mpq() const;
  /// True for rationals with denominator one.
  bool is_integer() const;
  std::string to_string() const;

 private:
  bool is_big() const { return big_ != nullptr; }
  void normalize_small(__int128 num, __int128 den);
  void set_big(mpq_class value);
  void demote();
  void coerce_pair(Scalar& other);
  void reduce_into(std::uint64_t p);

  // Small rational num_/den_, or big_ when set, or residue num_ when p_ > 0.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint64_t p_ = 0;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace trimat
