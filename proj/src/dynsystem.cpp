#include "dynsystem.hpp"

#include <numeric>
#include <sstream>

namespace zcross {

std::shared_ptr<const DynSystem> DynSystem::finite(std::vector<size_t> sigma,
                                                   std::vector<std::string> labels) {
  auto sys = std::shared_ptr<DynSystem>(new DynSystem());
  sys->kind_ = Kind::Finite;
  size_t n = sigma.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "finite system needs at least one point");
  std::vector<bool> seen(n, false);
  sys->sigma_inv_.assign(n, 0);
  for (size_t x = 0; x < n; ++x) {
    if (sigma[x] >= n || seen[sigma[x]])
      throw Error(ErrorCode::InvalidArgument, "sigma is not a bijection on the point set");
    seen[sigma[x]] = true;
    sys->sigma_inv_[sigma[x]] = x;
  }
  sys->sigma_ = std::move(sigma);
  if (labels.empty()) {
    labels.reserve(n);
    for (size_t x = 0; x < n; ++x) labels.push_back(std::to_string(x));
  } else if (labels.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "label count must match point count");
  }
  sys->labels_ = std::move(labels);
  return sys;
}

std::shared_ptr<const DynSystem> DynSystem::rotation(GaussianRational zeta, int window) {
  if (!zeta.is_unimodular())
    throw Error(ErrorCode::InvalidArgument,
                "rotation multiplier must be unimodular, got |zeta|^2 = " +
                    rational_str(zeta.norm_sq()));
  if (window < 1)
    throw Error(ErrorCode::InvalidArgument, "rotation degree window must be positive");
  auto sys = std::shared_ptr<DynSystem>(new DynSystem());
  sys->kind_ = Kind::Rotation;
  sys->zeta_ = std::move(zeta);
  sys->window_ = window;
  return sys;
}

void DynSystem::require(Kind k) const {
  if (kind_ != k)
    throw Error(ErrorCode::WrongVariant,
                kind_ == Kind::Finite ? "operation requires a rotation system"
                                      : "operation requires a finite system");
}

size_t DynSystem::dim() const {
  return kind_ == Kind::Finite ? sigma_.size() : static_cast<size_t>(2 * window_ + 1);
}

size_t DynSystem::size() const {
  require(Kind::Finite);
  return sigma_.size();
}

const std::vector<size_t>& DynSystem::sigma() const {
  require(Kind::Finite);
  return sigma_;
}

const std::vector<std::string>& DynSystem::labels() const {
  require(Kind::Finite);
  return labels_;
}

std::vector<size_t> DynSystem::sigma_power(long long n) const {
  require(Kind::Finite);
  unsigned long long order = sigma_order();
  unsigned long long steps =
      n >= 0 ? static_cast<unsigned long long>(n) % order
             : (order - static_cast<unsigned long long>(-n) % order) % order;
  std::vector<size_t> p(sigma_.size());
  std::iota(p.begin(), p.end(), size_t{0});
  for (unsigned long long s = 0; s < steps; ++s)
    for (size_t x = 0; x < p.size(); ++x) p[x] = sigma_[p[x]];
  return p;
}

unsigned long long DynSystem::sigma_order() const {
  require(Kind::Finite);
  std::vector<bool> seen(sigma_.size(), false);
  unsigned long long order = 1;
  for (size_t x = 0; x < sigma_.size(); ++x) {
    if (seen[x]) continue;
    unsigned long long len = 0;
    size_t y = x;
    do {
      seen[y] = true;
      y = sigma_[y];
      ++len;
    } while (y != x);
    order = std::lcm(order, len);
  }
  return order;
}

const GaussianRational& DynSystem::zeta() const {
  require(Kind::Rotation);
  return zeta_;
}

int DynSystem::window() const {
  require(Kind::Rotation);
  return window_;
}

long long DynSystem::degree_of_index(size_t idx) const {
  require(Kind::Rotation);
  return static_cast<long long>(idx) - window_;
}

size_t DynSystem::index_of_degree(long long deg) const {
  require(Kind::Rotation);
  return static_cast<size_t>(deg + window_);
}

std::optional<unsigned> DynSystem::zeta_order(unsigned bound) const {
  require(Kind::Rotation);
  GaussianRational p(1);
  for (unsigned k = 1; k <= bound; ++k) {
    p *= zeta_;
    if (p.is_one()) return k;
  }
  return std::nullopt;
}

QVec DynSystem::multiply(const QVec& f, const QVec& g) const {
  if (f.size() != dim() || g.size() != dim())
    throw Error(ErrorCode::DimensionMismatch, "function vector has wrong dimension");
  if (kind_ == Kind::Finite) {
    QVec out(f.size(), GaussianRational{});
    for (size_t x = 0; x < f.size(); ++x) out[x] = f[x] * g[x];
    return out;
  }
  QVec conv = full_product(f, g);
  int d = window_;
  QVec out(static_cast<size_t>(2 * d + 1), GaussianRational{});
  for (long long k = -2 * d; k <= 2 * d; ++k) {
    const GaussianRational& c = conv[static_cast<size_t>(k + 2 * d)];
    if (k < -d || k > d) {
      if (!c.is_zero())
        throw Error(ErrorCode::ClosureExceedsWindow,
                    "product has degree " + std::to_string(k) + " outside window " +
                        std::to_string(d));
    } else {
      out[static_cast<size_t>(k + d)] = c;
    }
  }
  return out;
}

QVec DynSystem::full_product(const QVec& f, const QVec& g) const {
  if (f.size() != dim() || g.size() != dim())
    throw Error(ErrorCode::DimensionMismatch, "function vector has wrong dimension");
  if (kind_ == Kind::Finite) {
    QVec out(f.size(), GaussianRational{});
    for (size_t x = 0; x < f.size(); ++x) out[x] = f[x] * g[x];
    return out;
  }
  size_t n = f.size();
  QVec conv(2 * n - 1, GaussianRational{});
  for (size_t i = 0; i < n; ++i) {
    if (f[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j)
      if (!g[j].is_zero()) conv[i + j] += f[i] * g[j];
  }
  return conv;
}

QVec DynSystem::sigma_tilde(const QVec& f, long long n) const {
  if (f.size() != dim())
    throw Error(ErrorCode::DimensionMismatch, "function vector has wrong dimension");
  if (kind_ == Kind::Finite) {
    // (sigma_tilde^n f)(x) = f(sigma^{-n}(x))
    std::vector<size_t> inv = sigma_power(-n);
    QVec out(f.size(), GaussianRational{});
    for (size_t x = 0; x < f.size(); ++x) out[x] = f[inv[x]];
    return out;
  }
  QVec out(f.size(), GaussianRational{});
  for (size_t idx = 0; idx < f.size(); ++idx) {
    if (f[idx].is_zero()) continue;
    long long k = degree_of_index(idx);
    out[idx] = f[idx] * zeta_.pow(-n * k);
  }
  return out;
}

QVec DynSystem::constant_one() const {
  QVec out(dim(), GaussianRational{});
  if (kind_ == Kind::Finite) {
    for (auto& c : out) c = GaussianRational(1);
  } else {
    out[index_of_degree(0)] = GaussianRational(1);
  }
  return out;
}

QVec DynSystem::delta(size_t idx) const {
  if (idx >= dim()) throw Error(ErrorCode::DimensionMismatch, "point index out of range");
  QVec out(dim(), GaussianRational{});
  out[idx] = GaussianRational(1);
  return out;
}

std::string DynSystem::describe() const {
  std::ostringstream oss;
  if (kind_ == Kind::Finite) {
    oss << "finite system, |X| = " << sigma_.size();
  } else {
    oss << "rotation system, zeta = " << zeta_.str() << ", window = " << window_;
  }
  return oss.str();
}

}  // namespace zcross
