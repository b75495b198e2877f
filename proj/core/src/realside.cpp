#include "hecke/realside.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling keeps the draw identical across standard libraries.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::size_t factorial_capped(std::size_t k, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t j = 2; j <= k; ++j) {
    f *= j;
    if (f > cap) return cap + 1;
  }
  return f;
}

void check_index(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) {
    throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

Weight::Weight(std::vector<Scalar> left, std::vector<Scalar> right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != right_.size()) {
    throw NonIntegralWeight("lambdaL and lambdaR have different lengths");
  }
  if (left_.empty()) throw NonIntegralWeight("weight of rank 0");
  for (std::size_t k = 0; k < left_.size(); ++k) {
    if (!(left_[k] - right_[k]).to_integer()) {
      throw NonIntegralWeight("mu_" + std::to_string(k + 1) + " = " +
                              (left_[k] - right_[k]).str() + " is not an integer");
    }
  }
}

std::vector<std::int64_t> Weight::mu() const {
  std::vector<std::int64_t> out;
  out.reserve(n());
  for (std::size_t k = 0; k < n(); ++k) out.push_back(*(left_[k] - right_[k]).to_integer());
  return out;
}

std::vector<Scalar> Weight::nu() const {
  std::vector<Scalar> out;
  out.reserve(n());
  for (std::size_t k = 0; k < n(); ++k) out.push_back(left_[k] + right_[k]);
  return out;
}

std::optional<std::int64_t> Weight::m_of() const {
  const auto m = mu();
  if (std::any_of(m.begin(), m.end(), [](std::int64_t v) { return v < 0; })) return std::nullopt;
  return mu_total();
}

std::int64_t Weight::mu_total() const {
  const auto m = mu();
  return std::accumulate(m.begin(), m.end(), std::int64_t{0});
}

Segment Weight::segment(std::size_t k) const {
  return Segment::make(right_.at(k) + Scalar::half(), left_.at(k) - Scalar::half());
}

Weight Weight::permuted_left(const Permutation& perm) const {
  if (perm.size() != n()) throw IndexOutOfRange("permutation of the wrong size");
  std::vector<Scalar> l;
  l.reserve(n());
  for (std::size_t k = 0; k < n(); ++k) l.push_back(left_.at(perm[k]));
  return Weight(std::move(l), right_);
}

Weight Weight::raised_right(std::size_t k) const {
  auto r = right_;
  r.at(k) += Scalar(1);
  return Weight(left_, std::move(r));
}

Weight Weight::lowered_left(std::size_t k) const {
  auto l = left_;
  l.at(k) -= Scalar(1);
  return Weight(std::move(l), right_);
}

std::string Weight::str() const {
  std::string out = "((";
  for (std::size_t k = 0; k < n(); ++k) out += (k ? "," : "") + left_[k].str();
  out += "),(";
  for (std::size_t k = 0; k < n(); ++k) out += (k ? "," : "") + right_[k].str();
  return out + "))";
}

HCSymbol canonical_symbol(const Weight& w) {
  HCSymbol sym;
  sym.reserve(w.n());
  for (std::size_t k = 0; k < w.n(); ++k) sym.emplace_back(w.left()[k], w.right()[k]);
  std::sort(sym.begin(), sym.end());
  return sym;
}

Weight weight_of(const HCSymbol& sym) {
  std::vector<Scalar> l, r;
  for (const auto& [a, b] : sym) {
    l.push_back(a);
    r.push_back(b);
  }
  return Weight(std::move(l), std::move(r));
}

KHCElement KHCElement::principal_series(const Weight& w, std::int64_t coeff) {
  KHCElement out;
  out.add_term(canonical_symbol(w), coeff);
  return out;
}

void KHCElement::add_term(const HCSymbol& sym, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(sym, coeff);
  if (inserted) return;
  if (__builtin_add_overflow(it->second, coeff, &it->second)) {
    throw std::overflow_error("KHCElement coefficient overflow");
  }
  if (it->second == 0) terms_.erase(it);
}

std::int64_t KHCElement::coefficient(const Weight& w) const {
  auto it = terms_.find(canonical_symbol(w));
  return it == terms_.end() ? 0 : it->second;
}

KHCElement& KHCElement::operator+=(const KHCElement& rhs) {
  for (const auto& [sym, c] : rhs.terms_) add_term(sym, c);
  return *this;
}

std::string KHCElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [sym, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "X" + weight_of(sym).str();
  }
  return out;
}

std::string to_string(Direction d) {
  return d == Direction::RaiseRight ? "raise-right" : "lower-left";
}

Direction direction_from_string(const std::string& s) {
  if (s == "raise-right" || s == "raise" || s == "RaiseRight") return Direction::RaiseRight;
  if (s == "lower-left" || s == "lower" || s == "LowerLeft") return Direction::LowerLeft;
  throw ParseError("unknown direction '" + s + "'");
}

std::vector<std::vector<std::size_t>> integral_weyl_classes(const std::vector<Scalar>& values) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < values.size(); ++k) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& cls) {
      return (values[cls.front()] - values[k]).is_integer();
    });
    if (it == classes.end()) {
      classes.push_back({k});
    } else {
      it->push_back(k);
    }
  }
  return classes;
}

KElement gamma_k(const Weight& w, std::int64_t m) {
  const auto mu = w.mu();
  std::int64_t total = 0;
  for (auto v : mu) {
    if (v < 0) return {};
    total += v;
  }
  if (total != m) return {};
  std::vector<Segment> segs;
  segs.reserve(w.n());
  for (std::size_t k = 0; k < w.n(); ++k) segs.push_back(w.segment(k));
  return KElement::monomial(Multisegment(std::move(segs)));
}

KElement gamma_k(const KHCElement& x, std::int64_t m) {
  KElement out;
  for (const auto& [sym, c] : x.terms()) out += c * gamma_k(weight_of(sym), m);
  return out;
}

KHCElement translate_weight(const Weight& w, std::size_t i, Direction dir) {
  check_index(i, w.n());
  KHCElement out;
  if (dir == Direction::RaiseRight) {
    const Scalar& target = w.right()[i - 1];
    for (std::size_t k = 0; k < w.n(); ++k) {
      if (w.right()[k] == target) out.add_term(canonical_symbol(w.raised_right(k)), 1);
    }
  } else {
    const Scalar& target = w.left()[i - 1];
    for (std::size_t k = 0; k < w.n(); ++k) {
      if (w.left()[k] == target) out.add_term(canonical_symbol(w.lowered_left(k)), 1);
    }
  }
  return out;
}

KHCElement translate_k(const KHCElement& x, std::size_t i, Direction dir) {
  KHCElement out;
  for (const auto& [sym, c] : x.terms()) {
    check_index(i, sym.size());
    const auto image = translate_weight(weight_of(sym), i, dir);
    for (const auto& [s2, c2] : image.terms()) out.add_term(s2, c * c2);
  }
  return out;
}

Multisegment multisegment_of(const Permutation& perm, const Weight& w) {
  if (perm.size() != w.n()) throw IndexOutOfRange("permutation of the wrong size");
  std::vector<Segment> segs;
  segs.reserve(w.n());
  for (std::size_t k = 0; k < w.n(); ++k) {
    segs.push_back(Segment::make(w.right()[k] + Scalar::half(),
                                 w.left().at(perm[k]) - Scalar::half()));
  }
  return Multisegment(std::move(segs));
}

std::vector<Permutation> integral_weyl_group(const std::vector<Scalar>& values, std::size_t limit,
                                             std::uint64_t seed) {
  const auto classes = integral_weyl_classes(values);
  const std::size_t n = values.size();
  std::size_t order = 1;
  for (const auto& cls : classes) {
    order *= factorial_capped(cls.size(), limit);
    if (order > limit) break;
  }

  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), std::size_t{0});

  std::vector<Permutation> out;
  if (order <= limit) {
    // Odometer over the per-class permutations.
    std::vector<std::vector<std::size_t>> state = classes;
    while (true) {
      Permutation p(n);
      for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t j = 0; j < classes[c].size(); ++j) p[classes[c][j]] = state[c][j];
      }
      out.push_back(std::move(p));
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        if (std::next_permutation(state[c].begin(), state[c].end())) break;
      }
      if (c == classes.size()) break;
    }
    return out;
  }

  std::mt19937_64 rng(seed);
  std::set<Permutation> seen{identity};
  out.push_back(identity);
  while (out.size() < limit) {
    Permutation p(n);
    for (const auto& cls : classes) {
      auto vals = cls;
      for (std::size_t j = vals.size(); j > 1; --j) std::swap(vals[j - 1], vals[bounded(rng, j)]);
      for (std::size_t j = 0; j < cls.size(); ++j) p[cls[j]] = vals[j];
    }
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

bool KCommutativityReport::all_equal() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.equal; });
}

KCommutativityReport verify_kgroup_commutativity(const Weight& w, std::size_t i, Direction dir,
                                                 const std::vector<Permutation>& perms) {
  check_index(i, w.n());
  KCommutativityReport report{w, i, dir, {}};
  const auto group = perms.empty() ? integral_weyl_group(w.left()) : perms;
  const std::int64_t m = w.mu_total();
  const Scalar jac_point = dir == Direction::RaiseRight ? w.right()[i - 1] + Scalar::half()
                                                        : w.left()[i - 1] - Scalar::half();
  std::set<HCSymbol> seen;
  for (const auto& perm : group) {
    const Weight basis = w.permuted_left(perm);
    auto sym = canonical_symbol(basis);
    if (!seen.insert(sym).second) continue;

    const KElement image = gamma_k(basis, m);
    KElement path_a = dir == Direction::RaiseRight ? jac_k(jac_point, image)
                                                   : cojac_k(jac_point, image);

    // The translation target is fixed by the block of w, so the coordinate
    // compared against is the value at i of the unpermuted side.
    KHCElement translated;
    if (dir == Direction::RaiseRight) {
      const Scalar& target = w.right()[i - 1];
      for (std::size_t k = 0; k < w.n(); ++k) {
        if (basis.right()[k] == target) translated.add_term(canonical_symbol(basis.raised_right(k)), 1);
      }
    } else {
      const Scalar& target = w.left()[i - 1];
      for (std::size_t k = 0; k < w.n(); ++k) {
        if (basis.left()[k] == target) translated.add_term(canonical_symbol(basis.lowered_left(k)), 1);
      }
    }
    KElement path_b = gamma_k(translated, m - 1);
    const bool equal = path_a == path_b;
    report.cases.push_back({perm, std::move(sym), std::move(path_a), std::move(path_b), equal});
  }
  return report;
}

}  // namespace hecke
