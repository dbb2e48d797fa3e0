#include "trimat/linalg/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "trimat/error.hpp"

namespace trimat {

namespace {

constexpr std::uint64_t kMaxPrime = (1ULL << 31);

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error(ErrorCode::InvalidInput, "division by zero in F_" + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::UnitViolation: return "UnitViolation";
    case ErrorCode::IdempotentViolation: return "IdempotentViolation";
    case ErrorCode::ActionViolation: return "ActionViolation";
    case ErrorCode::InvalidRelation: return "InvalidRelation";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::RadicalUnavailable: return "RadicalUnavailable";
    case ErrorCode::CategoryMismatch: return "CategoryMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ApproximationNotInjective: return "ApproximationNotInjective";
    case ErrorCode::NotPerfect: return "NotPerfect";
    case ErrorCode::HypothesisFailure: return "HypothesisFailure";
    case ErrorCode::GldimUnknown: return "GldimUnknown";
    case ErrorCode::IdentificationFailure: return "IdentificationFailure";
    case ErrorCode::NeitherBlockInvertible: return "NeitherBlockInvertible";
    case ErrorCode::SingularCartan: return "SingularCartan";
    case ErrorCode::NotDivisionCase: return "NotDivisionCase";
    case ErrorCode::NonBasic: return "NonBasic";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= kMaxPrime) {
    throw Error(ErrorCode::InvalidInput, "prime field characteristic out of range: " + std::to_string(p));
  }
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw Error(ErrorCode::InvalidInput, std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::InvalidInput, "bad field specification '" + std::string(text) + "'");
    }
    return prime(std::stoull(digits));
  }
  throw Error(ErrorCode::InvalidInput, "bad field specification '" + std::string(text) + "'");
}

std::string Field::to_string() const { return p_ == 0 ? "rational" : "fp:" + std::to_string(p_); }

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const mpq_class& value) { set_big(value); }

Scalar::Scalar(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  normalize_small(num, den);
}

Scalar Scalar::from(Field field, long value) {
  Scalar s(value);
  if (!field.is_rational()) s.reduce_into(field.characteristic());
  return s;
}

Scalar Scalar::from(Field field, const mpq_class& value) {
  Scalar s(value);
  if (!field.is_rational()) s.reduce_into(field.characteristic());
  return s;
}

Scalar Scalar::parse(std::string_view text, Field field) {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return t.size() > start && t.find_first_not_of("0123456789", start) == std::string::npos;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorCode::InvalidInput, "cannot parse scalar '" + s + "'");
  }
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return from(field, q);
}

Scalar::Scalar(const Scalar& other) : num_(other.num_), den_(other.den_), p_(other.p_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Scalar& Scalar::operator=(const Scalar& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  p_ = other.p_;
  if (other.big_) {
    big_ = std::make_unique<mpq_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

void Scalar::normalize_small(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den != 1) {
    __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (fits64(num) && fits64(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  auto to_mpz = [](__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64U));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  };
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  set_big(std::move(q));
}

void Scalar::set_big(mpq_class value) {
  p_ = 0;
  big_ = std::make_unique<mpq_class>(std::move(value));
  demote();
}

void Scalar::demote() {
  if (!big_) return;
  if (big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p()) {
    num_ = big_->get_num().get_si();
    den_ = big_->get_den().get_si();
    big_.reset();
  }
}

void Scalar::reduce_into(std::uint64_t p) {
  if (p_ == p) return;
  if (p_ != 0) throw Error(ErrorCode::FieldMismatch, "cannot mix F_" + std::to_string(p_) + " and F_" + std::to_string(p));
  std::uint64_t n = 0;
  std::uint64_t d = 1;
  if (big_) {
    n = reduce_mpz(big_->get_num(), p);
    d = reduce_mpz(big_->get_den(), p);
  } else {
    n = reduce_signed(num_, p);
    d = reduce_signed(den_, p);
  }
  if (d == 0) throw Error(ErrorCode::InvalidInput, "denominator divisible by characteristic " + std::to_string(p));
  big_.reset();
  num_ = static_cast<std::int64_t>(n * mod_inverse(d, p) % p);
  den_ = 1;
  p_ = p;
}

void Scalar::coerce_pair(Scalar& other) {
  if (p_ == other.p_) return;
  if (p_ == 0) {
    reduce_into(other.p_);
  } else if (other.p_ == 0) {
    other.reduce_into(p_);
  } else {
    throw Error(ErrorCode::FieldMismatch, "cannot mix F_" + std::to_string(p_) + " and F_" + std::to_string(other.p_));
  }
}

Field Scalar::field() const { return Field(p_); }

bool Scalar::is_zero() const { return !big_ && num_ == 0; }

bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

bool Scalar::is_integer() const {
  if (p_ != 0) return true;
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "inverse of zero");
  Scalar r;
  if (p_ != 0) {
    r.p_ = p_;
    r.num_ = static_cast<std::int64_t>(mod_inverse(static_cast<std::uint64_t>(num_), p_));
    return r;
  }
  if (big_) {
    mpq_class q = 1 / *big_;
    r.set_big(std::move(q));
    return r;
  }
  r.normalize_small(den_, num_);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (p_ != 0) {
    if (r.num_ != 0) r.num_ = static_cast<std::int64_t>(p_) - r.num_;
  } else if (r.big_) {
    *r.big_ = -*r.big_;
  } else if (r.num_ == std::numeric_limits<std::int64_t>::min()) {
    r.normalize_small(-static_cast<__int128>(r.num_), r.den_);
  } else {
    r.num_ = -r.num_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs_in) {
  if (rhs_in.p_ != p_) {
    Scalar rhs(rhs_in);
    coerce_pair(rhs);
    return *this += rhs;
  }
  const Scalar& rhs = rhs_in;
  if (p_ != 0) {
    num_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(rhs.num_)) % p_);
    return *this;
  }
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      __int128 s = static_cast<__int128>(num_) + rhs.num_;
      if (fits64(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    normalize_small(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                    static_cast<__int128>(den_) * rhs.den_);
    return *this;
  }
  set_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs_in) {
  if (rhs_in.p_ != p_) {
    Scalar rhs(rhs_in);
    coerce_pair(rhs);
    return *this *= rhs;
  }
  const Scalar& rhs = rhs_in;
  if (p_ != 0) {
    num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(rhs.num_) % p_);
    return *this;
  }
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    normalize_small(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
    return *this;
  }
  set_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) {
    Scalar x(a), y(b);
    x.coerce_pair(y);
    return x == y;
  }
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace trimat
