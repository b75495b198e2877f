#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "hecke/segment.hpp"

namespace hecke {

/// Element of the graded ring K(H) = (+)_m K(H_m), written in the standard
/// basis of products of Steinberg classes [D1]...[Dr]. A monomial is a
/// Multisegment; the empty multisegment is the unit (the trivial H_0-module).
/// Coefficients are checked 64-bit integers; zero coefficients are never
/// stored.
class KElement {
 public:
  using Terms = std::map<Multisegment, std::int64_t>;

  KElement() = default;

  static KElement unit() { return monomial(Multisegment{}); }
  static KElement monomial(const Multisegment& ms, std::int64_t coeff = 1);
  /// [D]; the Empty segment gives the unit.
  static KElement steinberg(const Segment& seg);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Multisegment& ms) const;

  void add_term(const Multisegment& ms, std::int64_t coeff);

  /// True iff every monomial has the same total length (vacuously for 0).
  bool is_homogeneous() const;
  /// Total length of the first monomial, or -1 for the zero element.
  long degree() const;

  KElement& operator+=(const KElement& rhs);
  KElement& operator-=(const KElement& rhs);
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator*(const KElement& a, const KElement& b);
  friend KElement operator*(std::int64_t c, const KElement& a);
  friend bool operator==(const KElement&, const KElement&) = default;

  /// "0", or a sum like "[1/2,3/2]*[1/2,1/2] + 2*1".
  std::string str() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const KElement& x);

KElement k_multiply(const KElement& x, const KElement& y);

/// The derivation with [D] -> [D minus its start] when D starts at a, else 0.
KElement jac_k(const Scalar& a, const KElement& x);

/// The derivation with [D] -> [D minus its end] when D ends at a, else 0.
KElement cojac_k(const Scalar& a, const KElement& x);

/// Replaces every segment D by -conj(D).
KElement hermitian_dual_k(const KElement& x);

}  // namespace hecke
