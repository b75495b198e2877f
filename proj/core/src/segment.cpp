#include "hecke/segment.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "hecke/error.hpp"

namespace hecke {

namespace {

std::strong_ordering order(const mpq_class& a, const mpq_class& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Segment Segment::make(const Scalar& a, const Scalar& b) {
  const Scalar diff = b - a;
  if (!diff.is_integer()) {
    throw NonIntegralDifference("segment [" + a.str() + "," + b.str() +
                                "]: end - start is not an integer");
  }
  const mpz_class& d = diff.re().get_num();
  if (d < 0) return Segment();
  if (!d.fits_ulong_p()) throw NonIntegralDifference("segment too long");
  return Segment(a, b, static_cast<std::size_t>(d.get_ui()) + 1);
}

Segment Segment::parse(std::string_view text) {
  auto s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("malformed segment '" + std::string(text) + "'");
  }
  s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) return Segment();
  const auto comma = s.find(',');
  if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("malformed segment '" + std::string(text) + "'");
  }
  return make(Scalar::parse(s.substr(0, comma)), Scalar::parse(s.substr(comma + 1)));
}

const Scalar& Segment::start() const {
  if (!nonempty_) throw EmptyInput("start of the empty segment");
  return start_;
}

const Scalar& Segment::end() const {
  if (!nonempty_) throw EmptyInput("end of the empty segment");
  return end_;
}

std::vector<Scalar> Segment::points() const {
  std::vector<Scalar> out;
  out.reserve(length_);
  Scalar x = start_;
  for (std::size_t k = 0; k < length_; ++k) {
    out.push_back(x);
    x += Scalar(1);
  }
  return out;
}

bool Segment::contains(const Scalar& x) const {
  if (!nonempty_) return false;
  const Scalar d = x - start_;
  if (!d.is_integer()) return false;
  return d.re() >= 0 && cmp(x.re(), end_.re()) <= 0;
}

bool operator==(const Segment& a, const Segment& b) {
  if (a.nonempty_ != b.nonempty_) return false;
  if (!a.nonempty_) return true;
  return a.start_ == b.start_ && a.end_ == b.end_;
}

std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
  if (!a.nonempty_ || !b.nonempty_) {
    return static_cast<int>(a.nonempty_) <=> static_cast<int>(b.nonempty_);
  }
  if (auto c = order(a.start_.re(), b.start_.re()); c != 0) return c;
  if (auto c = order(a.start_.im(), b.start_.im()); c != 0) return c;
  return order(a.end_.re(), b.end_.re());
}

std::string Segment::str() const {
  if (!nonempty_) return "[]";
  return "[" + start_.str() + "," + end_.str() + "]";
}

Segment make_segment(const Scalar& a, const Scalar& b) { return Segment::make(a, b); }

Segment truncate_left(const Segment& seg) {
  if (seg.empty()) throw EmptyInput("truncate_left of the empty segment");
  return Segment::make(seg.start() + Scalar(1), seg.end());
}

Segment truncate_right(const Segment& seg) {
  if (seg.empty()) throw EmptyInput("truncate_right of the empty segment");
  return Segment::make(seg.start(), seg.end() - Scalar(1));
}

Segment negate_conjugate(const Segment& seg) {
  if (seg.empty()) return seg;
  return Segment::make(-seg.end().conj(), -seg.start().conj());
}

std::ostream& operator<<(std::ostream& os, const Segment& seg) { return os << seg.str(); }

Multisegment::Multisegment(std::vector<Segment> segments) {
  segments_.reserve(segments.size());
  for (auto& s : segments) {
    if (!s.empty()) segments_.push_back(std::move(s));
  }
  std::sort(segments_.begin(), segments_.end());
}

Multisegment Multisegment::parse(std::string_view text) {
  auto s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw ParseError("malformed multisegment '" + std::string(text) + "'");
  }
  s = trim(s.substr(1, s.size() - 2));
  std::vector<Segment> segs;
  while (!s.empty()) {
    if (s.front() != '[') throw ParseError("malformed multisegment '" + std::string(text) + "'");
    const auto close = s.find(']');
    if (close == std::string_view::npos) {
      throw ParseError("malformed multisegment '" + std::string(text) + "'");
    }
    segs.push_back(Segment::parse(s.substr(0, close + 1)));
    s = trim(s.substr(close + 1));
    if (!s.empty()) {
      if (s.front() != ',') throw ParseError("malformed multisegment '" + std::string(text) + "'");
      s = trim(s.substr(1));
      if (s.empty()) throw ParseError("malformed multisegment '" + std::string(text) + "'");
    }
  }
  return Multisegment(std::move(segs));
}

std::size_t Multisegment::total_length() const {
  std::size_t total = 0;
  for (const auto& s : segments_) total += s.length();
  return total;
}

void Multisegment::insert(const Segment& seg) {
  if (seg.empty()) return;
  segments_.insert(std::upper_bound(segments_.begin(), segments_.end(), seg), seg);
}

Multisegment Multisegment::merged(const Multisegment& other) const {
  Multisegment out;
  out.segments_.reserve(segments_.size() + other.segments_.size());
  std::merge(segments_.begin(), segments_.end(), other.segments_.begin(), other.segments_.end(),
             std::back_inserter(out.segments_));
  return out;
}

Multisegment Multisegment::replaced(std::size_t idx, const Segment& seg) const {
  Multisegment out;
  out.segments_.reserve(segments_.size());
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    if (k != idx) out.segments_.push_back(segments_[k]);
  }
  out.insert(seg);
  return out;
}

std::string Multisegment::str() const {
  std::string out = "{";
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    if (k) out += ",";
    out += segments_[k].str();
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const Multisegment& ms) { return os << ms.str(); }

}  // namespace hecke
