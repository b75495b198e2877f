#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hecke {

/// Exact Gaussian rational re + im*i.
///
/// Both parts are GMP rationals kept in canonical form (coprime, positive
/// denominator), so structural equality is numeric equality. The ordering is
/// lexicographic on (re, im); it is total but carries no field meaning.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class re, mpq_class im = 0);

  /// Parses "p", "p/q", "p/q+r/s i", "r/s i", "i", "i/2", "-3/2-i", ...
  static Scalar parse(std::string_view text);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar half() { return Scalar(1, 2); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const;
  /// The value as a machine integer, when it is a real integer that fits.
  std::optional<std::int64_t> to_integer() const;

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical text: "p" or "p/q", followed by "+r/si" / "-r/si" when the
  /// imaginary part is nonzero.
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hecke
