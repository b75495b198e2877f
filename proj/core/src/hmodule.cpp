#include "hecke/hmodule.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>

#include "hecke/error.hpp"

namespace hecke {

std::size_t default_dim_cap() {
  if (const char* env = std::getenv("HECKE_DIM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultDimCap;
}

HModule::HModule(std::size_t m, std::size_t dim, std::vector<SparseMatrix> s,
                 std::vector<SparseMatrix> y, std::vector<std::string> labels,
                 std::vector<Scalar> eigen_candidates)
    : m_(m),
      dim_(dim),
      s_(std::move(s)),
      y_(std::move(y)),
      labels_(std::move(labels)),
      candidates_(std::move(eigen_candidates)) {
  if (y_.size() != m_ || s_.size() != (m_ == 0 ? 0 : m_ - 1)) {
    throw std::invalid_argument("HModule: wrong number of generator matrices for m = " +
                                std::to_string(m_));
  }
  auto square = [&](const SparseMatrix& a) { return a.rows() == dim_ && a.cols() == dim_; };
  if (!std::all_of(s_.begin(), s_.end(), square) || !std::all_of(y_.begin(), y_.end(), square)) {
    throw std::invalid_argument("HModule: generator matrix is not " + std::to_string(dim_) +
                                " x " + std::to_string(dim_));
  }
  if (labels_.empty() && dim_ > 0) {
    for (std::size_t k = 0; k < dim_; ++k) labels_.push_back("e" + std::to_string(k));
  }
  if (labels_.size() != dim_) throw std::invalid_argument("HModule: label count != dim");
  std::sort(candidates_.begin(), candidates_.end());
  candidates_.erase(std::unique(candidates_.begin(), candidates_.end()), candidates_.end());
}

HModule HModule::trivial() { return HModule(0, 1, {}, {}, {"1"}, {}); }

HModule steinberg(const Segment& seg) {
  if (seg.empty()) return HModule::trivial();
  const std::size_t m = seg.length();
  std::vector<SparseMatrix> s(m - 1, SparseMatrix::scalar(1, Scalar(-1)));
  std::vector<SparseMatrix> y;
  const auto pts = seg.points();
  for (const auto& p : pts) y.push_back(SparseMatrix::scalar(1, p));
  return HModule(m, 1, std::move(s), std::move(y), {"St" + seg.str()}, pts);
}

HModule evaluation(const Scalar& c) {
  return HModule(1, 1, {}, {SparseMatrix::scalar(1, c)}, {"ev(" + c.str() + ")"}, {c});
}

HModule steinberg_product(const std::vector<Segment>& segments, std::size_t dim_cap) {
  std::optional<HModule> acc;
  for (const auto& seg : segments) {
    if (seg.empty()) continue;
    if (!acc) {
      acc = steinberg(seg);
    } else {
      acc = induce(*acc, steinberg(seg), dim_cap);
    }
  }
  return acc ? std::move(*acc) : HModule::trivial();
}

std::size_t gamma_dimension(const Weight& w) {
  const auto mu = w.mu();
  if (std::any_of(mu.begin(), mu.end(), [](std::int64_t v) { return v < 0; })) return 0;
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(w.mu_total()));
  for (auto v : mu) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
    num /= f;
  }
  if (!num.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(num.get_ui());
}

HModule gamma_module(const Weight& w, std::size_t dim_cap) {
  const auto mu = w.mu();
  for (std::size_t k = 0; k < mu.size(); ++k) {
    if (mu[k] < 0) {
      throw NegativeMu("mu_" + std::to_string(k + 1) + " = " + std::to_string(mu[k]) + " < 0");
    }
  }
  const std::size_t dim = gamma_dimension(w);
  if (dim > dim_cap) {
    throw DimensionCap("gamma module of " + w.str() + " has dimension " + std::to_string(dim) +
                       " > cap " + std::to_string(dim_cap));
  }
  std::vector<Segment> segs;
  for (std::size_t k = 0; k < w.n(); ++k) segs.push_back(w.segment(k));
  return steinberg_product(segs, dim_cap);
}

Report check_relations(const HModule& mod) {
  Report rep;
  rep.case_id = "relations";
  rep.inputs = {{"m", mod.m()}, {"dim", mod.dim()}};
  const std::size_t m = mod.m();
  const SparseMatrix id = SparseMatrix::identity(mod.dim());
  auto s = [&](std::size_t i) -> const SparseMatrix& { return mod.s(i); };
  auto y = [&](std::size_t j) -> const SparseMatrix& { return mod.y(j); };
  auto idx = [](std::size_t k) { return std::to_string(k); };

  auto record = [&](const std::string& name, bool ok) {
    rep.add(name, "holds", ok ? "holds" : "fails", ok);
    return ok;
  };

  for (std::size_t i = 1; i < m; ++i) {
    if (!record("s" + idx(i) + "^2=1", s(i) * s(i) == id)) return rep;
  }
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const bool ok = s(i) * s(i + 1) * s(i) == s(i + 1) * s(i) * s(i + 1);
    if (!record("s" + idx(i) + "s" + idx(i + 1) + "s" + idx(i) + "=s" + idx(i + 1) + "s" + idx(i) +
                    "s" + idx(i + 1),
                ok)) {
      return rep;
    }
  }
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = i + 2; j < m; ++j) {
      if (!record("s" + idx(i) + "s" + idx(j) + "=s" + idx(j) + "s" + idx(i),
                  s(i) * s(j) == s(j) * s(i))) {
        return rep;
      }
    }
  }
  for (std::size_t i = 1; i < m; ++i) {
    const bool ok = s(i) * y(i) - y(i + 1) * s(i) == id;
    if (!record("s" + idx(i) + "y" + idx(i) + "-y" + idx(i + 1) + "s" + idx(i) + "=1", ok)) {
      return rep;
    }
  }
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (j == i || j == i + 1) continue;
      if (!record("s" + idx(i) + "y" + idx(j) + "=y" + idx(j) + "s" + idx(i),
                  s(i) * y(j) == y(j) * s(i))) {
        return rep;
      }
    }
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      if (!record("y" + idx(i) + "y" + idx(j) + "=y" + idx(j) + "y" + idx(i),
                  y(i) * y(j) == y(j) * y(i))) {
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace hecke
