#include "hecke/kring.hpp"

#include <ostream>
#include <stdexcept>

namespace hecke {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("KElement coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("KElement coefficient overflow");
  return r;
}

// Leibniz rule on each monomial: sum over positions whose segment qualifies.
template <typename Qualifies, typename Shrink>
KElement derive(const KElement& x, Qualifies qualifies, Shrink shrink) {
  KElement out;
  for (const auto& [ms, c] : x.terms()) {
    const auto& segs = ms.segments();
    for (std::size_t k = 0; k < segs.size(); ++k) {
      if (qualifies(segs[k])) out.add_term(ms.replaced(k, shrink(segs[k])), c);
    }
  }
  return out;
}

}  // namespace

KElement KElement::monomial(const Multisegment& ms, std::int64_t coeff) {
  KElement out;
  out.add_term(ms, coeff);
  return out;
}

KElement KElement::steinberg(const Segment& seg) {
  return monomial(Multisegment(std::vector<Segment>{seg}));
}

std::int64_t KElement::coefficient(const Multisegment& ms) const {
  auto it = terms_.find(ms);
  return it == terms_.end() ? 0 : it->second;
}

void KElement::add_term(const Multisegment& ms, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(ms, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

bool KElement::is_homogeneous() const {
  const long d = degree();
  for (const auto& [ms, c] : terms_) {
    if (static_cast<long>(ms.total_length()) != d) return false;
  }
  return true;
}

long KElement::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.begin()->first.total_length());
}

KElement& KElement::operator+=(const KElement& rhs) {
  for (const auto& [ms, c] : rhs.terms_) add_term(ms, c);
  return *this;
}

KElement& KElement::operator-=(const KElement& rhs) {
  for (const auto& [ms, c] : rhs.terms_) add_term(ms, checked_mul(c, -1));
  return *this;
}

KElement operator*(const KElement& a, const KElement& b) {
  KElement out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma.merged(mb), checked_mul(ca, cb));
  }
  return out;
}

KElement operator*(std::int64_t c, const KElement& a) {
  KElement out;
  for (const auto& [ms, v] : a.terms_) out.add_term(ms, checked_mul(c, v));
  return out;
}

std::string KElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [ms, c] : terms_) {
    std::int64_t mag = c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag < 0) mag = -mag;
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < ms.segments().size(); ++k) {
      if (k) mono += "*";
      mono += ms.segments()[k].str();
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const KElement& x) { return os << x.str(); }

KElement k_multiply(const KElement& x, const KElement& y) { return x * y; }

KElement jac_k(const Scalar& a, const KElement& x) {
  return derive(
      x, [&](const Segment& s) { return s.start() == a; },
      [](const Segment& s) { return truncate_left(s); });
}

KElement cojac_k(const Scalar& a, const KElement& x) {
  return derive(
      x, [&](const Segment& s) { return s.end() == a; },
      [](const Segment& s) { return truncate_right(s); });
}

KElement hermitian_dual_k(const KElement& x) {
  KElement out;
  for (const auto& [ms, c] : x.terms()) {
    std::vector<Segment> segs;
    segs.reserve(ms.size());
    for (const auto& s : ms.segments()) segs.push_back(negate_conjugate(s));
    out.add_term(Multisegment(std::move(segs)), c);
  }
  return out;
}

}  // namespace hecke
