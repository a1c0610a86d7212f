#include "dynamics.hpp"

#include <algorithm>
#include <numeric>

namespace zcross {

namespace {

// Laurent coefficient vector -> ordinary polynomial with nonzero constant
// term (monomial factors have no roots on the circle, so they are dropped).
GPoly strip_monomial(const QVec& laurent) {
  size_t lo = 0;
  while (lo < laurent.size() && laurent[lo].is_zero()) ++lo;
  GPoly p;
  for (size_t k = lo; k < laurent.size(); ++k) p.push_back(laurent[k]);
  poly::trim(p);
  return p;
}

}  // namespace

SepPer sep_sets(const SubAlgebra& a, long long n) {
  if (n == 0) throw Error(ErrorCode::ZeroIndex, "Sep/Per sets are defined for nonzero n");
  const DynSystem& sys = a.system();

  if (sys.is_finite()) {
    std::vector<size_t> back = sys.sigma_power(-n);
    std::vector<bool> sep(sys.size(), false);
    for (size_t x = 0; x < sys.size(); ++x) {
      for (size_t j = 0; j < a.dim(); ++j) {
        if (a.basis().at(j, x) != a.basis().at(j, back[x])) {
          sep[x] = true;
          break;
        }
      }
    }
    PointSet s = PointSet::finite_mask(std::move(sep));
    return {s, s.complement()};
  }

  // Rotation: Sep_A^n is the union over basis functions h of the support of
  // h - sigma_tilde^n(h), i.e. the circle minus the common circle roots of
  // those differences.
  GPoly common;
  bool any_nonzero = false;
  for (size_t j = 0; j < a.dim(); ++j) {
    QVec h = a.basis_row(j);
    QVec diff = vec_add(h, vec_scale(sys.sigma_tilde(h, n), GaussianRational(-1)));
    if (vec_is_zero(diff)) continue;
    any_nonzero = true;
    GPoly p = strip_monomial(diff);
    common = common.empty() ? p : poly::gcd(common, p);
    if (poly::degree(common) <= 0) break;  // no common roots at all
  }
  if (!any_nonzero) return {PointSet::empty(), PointSet::all()};
  if (poly::degree(common) <= 0) return {PointSet::all(), PointSet::empty()};
  GPoly rad = poly::radical(common);
  PointSet sep = PointSet::all_but_roots(rad);
  return {sep, sep.complement()};
}

SepPer sep_sets_points(const DynSystem& system, long long n) {
  if (n == 0) throw Error(ErrorCode::ZeroIndex, "Sep/Per sets are defined for nonzero n");
  if (!system.is_finite())
    throw Error(ErrorCode::WrongVariant, "point-level Sep/Per needs a finite system");
  std::vector<size_t> fwd = system.sigma_power(n);
  std::vector<bool> sep(system.size(), false);
  for (size_t x = 0; x < system.size(); ++x) sep[x] = fwd[x] != x;
  PointSet s = PointSet::finite_mask(std::move(sep));
  return {s, s.complement()};
}

PointSet per_infinity(const SubAlgebra& a, unsigned root_bound) {
  const DynSystem& sys = a.system();
  unsigned long long range;
  if (sys.is_finite()) {
    range = sys.sigma_order();
  } else {
    std::optional<unsigned> q = sys.zeta_order(root_bound);
    range = q ? *q : root_bound;
  }
  PointSet acc = sys.is_finite()
                     ? PointSet::finite_mask(std::vector<bool>(sys.size(), true))
                     : PointSet::all();
  for (unsigned long long n = 1; n <= range; ++n) {
    acc = PointSet::intersect(acc, sep_sets(a, static_cast<long long>(n)).sep);
    if (acc.is_empty_set()) break;
  }
  return acc;
}

bool is_domain_of_uniqueness(const SubAlgebra& a, const PointSet& s) {
  if (a.dim() == 0) return false;
  switch (s.kind()) {
    case PointSet::Kind::Empty:
      return false;  // a domain of uniqueness must be non-empty
    case PointSet::Kind::All:
      return true;
    case PointSet::Kind::AllButRoots:
      // A cofinite subset of the circle is infinite, and a nonzero Laurent
      // polynomial has only finitely many roots, so nothing nonzero in A can
      // vanish on it.
      return true;
    case PointSet::Kind::RootsOnly: {
      // Finitely many points given as the roots of a polynomial: f vanishes
      // on all of them iff the radical of that polynomial divides f (with
      // monomial factors stripped). Exact when the polynomial's roots all lie
      // on the circle, which holds for point-list constructions. Kernel of
      // the reduction map within A.
      if (!a.system().is_finite() && a.dim() > 0) {
        GPoly rad = poly::radical(s.poly());
        QMatrix rows(0, a.dim(), GaussianRational{});
        size_t rem_width = static_cast<size_t>(poly::degree(rad));
        // one condition row per remainder coefficient
        std::vector<GPoly> rems;
        rems.reserve(a.dim());
        for (size_t j = 0; j < a.dim(); ++j) {
          GPoly p;
          for (size_t k = 0; k < a.ambient_dim(); ++k) p.push_back(a.basis().at(j, k));
          poly::trim(p);
          rems.push_back(poly::mod(p, rad));
        }
        for (size_t t = 0; t < rem_width; ++t) {
          QVec row(a.dim(), GaussianRational{});
          for (size_t j = 0; j < a.dim(); ++j)
            row[j] = t < rems[j].size() ? rems[j][t] : GaussianRational{};
          rows.append_row(row);
        }
        return kernel(rows, GaussianRational{}).empty();
      }
      throw Error(ErrorCode::WrongVariant, "root sets apply to rotation systems");
    }
    case PointSet::Kind::FiniteMask: {
      const std::vector<bool>& mask = s.mask();
      if (mask.size() != a.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "mask size does not match the system");
      if (s.mask_count() == 0) return false;
      // kernel of the evaluation-on-s map within A's coordinates
      QMatrix rows(0, a.dim(), GaussianRational{});
      for (size_t x = 0; x < mask.size(); ++x) {
        if (!mask[x]) continue;
        QVec row(a.dim(), GaussianRational{});
        for (size_t j = 0; j < a.dim(); ++j) row[j] = a.basis().at(j, x);
        rows.append_row(row);
      }
      return kernel(rows, GaussianRational{}).empty();
    }
  }
  throw Error(ErrorCode::InternalInvariantViolation, "unreachable point-set kind");
}

CycleDecomposition cycle_decomposition(const DynSystem& system) {
  if (!system.is_finite())
    throw Error(ErrorCode::WrongVariant, "cycle decomposition needs a finite system");
  CycleDecomposition out;
  out.order = 1;
  std::vector<bool> seen(system.size(), false);
  const std::vector<size_t>& sigma = system.sigma();
  for (size_t x = 0; x < system.size(); ++x) {
    if (seen[x]) continue;
    std::vector<size_t> cycle;
    size_t y = x;
    do {
      seen[y] = true;
      cycle.push_back(y);
      y = sigma[y];
    } while (y != x);
    out.order = std::lcm(out.order, static_cast<unsigned long long>(cycle.size()));
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

}  // namespace zcross
