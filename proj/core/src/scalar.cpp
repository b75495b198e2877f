#include "hecke/scalar.hpp"

#include <cctype>
#include <ostream>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

namespace {

std::strong_ordering order(const mpq_class& a, const mpq_class& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_digit_text(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Unsigned "p" or "p/q".
mpq_class parse_magnitude(std::string_view s, std::string_view whole) {
  const auto slash = s.find('/');
  const auto num = s.substr(0, slash);
  if (!is_digit_text(num)) {
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  }
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(std::string(num)));
  } else {
    const auto den = s.substr(slash + 1);
    if (!is_digit_text(den)) {
      throw ParseError("malformed scalar '" + std::string(whole) + "'");
    }
    mpz_class d(std::string{den});
    if (d == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    q = mpq_class(mpz_class(std::string(num)), d);
    q.canonicalize();
  }
  return q;
}

}  // namespace

Scalar::Scalar(long num, long den) : re_(num, den) {
  if (den == 0) throw ParseError("zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty scalar");

  // Split into signed terms at '+'/'-' that are not leading.
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1;
  bool signed_term = false;
  std::string cur;
  for (char c : s) {
    if (c == '+' || c == '-') {
      if (!cur.empty()) {
        terms.emplace_back(sign, cur);
        cur.clear();
        sign = 1;
      } else if (signed_term) {
        throw ParseError("malformed scalar '" + std::string(text) + "'");
      }
      signed_term = true;
      if (c == '-') sign = -1;
    } else {
      cur.push_back(c);
      signed_term = false;
    }
  }
  if (cur.empty()) throw ParseError("malformed scalar '" + std::string(text) + "'");
  terms.emplace_back(sign, cur);
  if (terms.size() > 2) throw ParseError("malformed scalar '" + std::string(text) + "'");

  Scalar out;
  bool seen_re = false;
  bool seen_im = false;
  for (auto& [sg, term] : terms) {
    const auto ipos = term.find('i');
    if (ipos == std::string::npos) {
      if (seen_re) throw ParseError("two real parts in '" + std::string(text) + "'");
      seen_re = true;
      out.re_ = parse_magnitude(term, text) * sg;
      continue;
    }
    if (seen_im) throw ParseError("two imaginary parts in '" + std::string(text) + "'");
    seen_im = true;
    mpq_class mag;
    if (ipos + 1 == term.size()) {
      // "i", "3i", "3/2i"
      const auto coeff = std::string_view(term).substr(0, ipos);
      mag = coeff.empty() ? mpq_class(1) : parse_magnitude(coeff, text);
    } else if (term[ipos + 1] == '/' && ipos == 0) {
      // "i/2"
      mpq_class den = parse_magnitude(std::string_view(term).substr(2), text);
      if (den.get_den() != 1) throw ParseError("malformed scalar '" + std::string(text) + "'");
      mag = mpq_class(1) / den;
    } else {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    out.im_ = mag * sg;
  }
  return out;
}

bool Scalar::is_integer() const { return sgn(im_) == 0 && re_.get_den() == 1; }

std::optional<std::int64_t> Scalar::to_integer() const {
  if (!is_integer() || !re_.get_num().fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(re_.get_num().get_si());
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    return *this;
  }
  const mpq_class norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  mpq_class re = (re_ * rhs.re_ + im_ * rhs.im_) / norm;
  mpq_class im = (im_ * rhs.re_ - re_ * rhs.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = order(a.re_, b.re_); c != 0) return c;
  return order(a.im_, b.im_);
}

std::string Scalar::str() const {
  std::string out = re_.get_str();
  if (sgn(im_) != 0) {
    out += sgn(im_) > 0 ? "+" : "-";
    mpq_class mag = abs(im_);
    out += mag.get_str();
    out += "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hecke
