#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

/// The arithmetic progression {a, a+1, ..., b}. Every [a, b] with b - a a
/// negative integer collapses to the single Empty value.
class Segment {
 public:
  /// The Empty segment.
  Segment() = default;

  /// Throws NonIntegralDifference when b - a is not an integer.
  static Segment make(const Scalar& a, const Scalar& b);
  static Segment empty_segment() { return Segment(); }
  static Segment parse(std::string_view text);

  bool empty() const { return !nonempty_; }
  /// Throws EmptyInput on Empty.
  const Scalar& start() const;
  const Scalar& end() const;
  std::size_t length() const { return length_; }

  std::vector<Scalar> points() const;
  bool contains(const Scalar& x) const;

  friend bool operator==(const Segment& a, const Segment& b);
  /// Empty sorts first; otherwise by (start.re, start.im, end.re).
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b);

  /// "[a,b]" or "[]".
  std::string str() const;

 private:
  Segment(Scalar a, Scalar b, std::size_t length)
      : start_(std::move(a)), end_(std::move(b)), length_(length), nonempty_(true) {}

  Scalar start_;
  Scalar end_;
  std::size_t length_ = 0;
  bool nonempty_ = false;
};

Segment make_segment(const Scalar& a, const Scalar& b);
/// [a, b] -> [a+1, b]. Throws EmptyInput on Empty.
Segment truncate_left(const Segment& seg);
/// [a, b] -> [a, b-1]. Throws EmptyInput on Empty.
Segment truncate_right(const Segment& seg);
/// [a, b] -> [-conj(b), -conj(a)]; Empty -> Empty.
Segment negate_conjugate(const Segment& seg);

std::ostream& operator<<(std::ostream& os, const Segment& seg);

/// A multiset of nonempty segments held in canonical sorted order.
class Multisegment {
 public:
  Multisegment() = default;
  /// Empty segments are dropped.
  Multisegment(std::vector<Segment> segments);  // NOLINT(google-explicit-constructor)
  Multisegment(std::initializer_list<Segment> segments)
      : Multisegment(std::vector<Segment>(segments)) {}

  /// Parses "{[a,b],[c,d]}" (or "{}").
  static Multisegment parse(std::string_view text);

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  std::size_t total_length() const;

  /// Adds seg (no-op for Empty).
  void insert(const Segment& seg);
  /// Multiset union.
  Multisegment merged(const Multisegment& other) const;
  /// Copy with the segment at position idx replaced (dropped if Empty).
  Multisegment replaced(std::size_t idx, const Segment& seg) const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend auto operator<=>(const Multisegment& a, const Multisegment& b) {
    return a.segments_ <=> b.segments_;
  }

  std::string str() const;

 private:
  std::vector<Segment> segments_;
};

std::ostream& operator<<(std::ostream& os, const Multisegment& ms);

}  // namespace hecke
