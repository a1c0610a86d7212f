#ifndef ZCROSS_POINTSET_HPP
#define ZCROSS_POINTSET_HPP

#include <string>
#include <vector>

#include "polynomial.hpp"
#include "scalar.hpp"

namespace zcross {

using GPoly = poly::Poly<GaussianRational>;

// Subsets of the base space of a dynamical system. Finite systems use a
// bitmask. Rotation systems use symbolic sets: the whole circle, the empty
// set, or a cofinite set described by the polynomial whose circle roots are
// excluded (and its complement, the finite circle root set itself). The
// polynomial description is exact: the set always means "roots of p lying on
// the unit circle", so factors of p with no unimodular roots are harmless.
class PointSet {
 public:
  enum class Kind { FiniteMask, All, Empty, AllButRoots, RootsOnly };

  static PointSet finite_mask(std::vector<bool> mask);
  static PointSet all() { return PointSet(Kind::All); }
  static PointSet empty() { return PointSet(Kind::Empty); }
  // Normalized: a constant polynomial has no roots, so AllButRoots degrades
  // to All and RootsOnly to Empty.
  static PointSet all_but_roots(GPoly excluded);
  static PointSet roots_only(GPoly roots);

  Kind kind() const { return kind_; }
  const std::vector<bool>& mask() const;
  const GPoly& poly() const;  // AllButRoots / RootsOnly only

  bool is_finite_mask() const { return kind_ == Kind::FiniteMask; }
  // Empty in the set-theoretic sense (Empty kind, or an all-false mask).
  bool is_empty_set() const;
  // Number of marked points; finite masks only.
  size_t mask_count() const;

  PointSet complement() const;

  // Intersection of Sep-style sets (mask/All/Empty/AllButRoots).
  static PointSet intersect(const PointSet& a, const PointSet& b);

  friend bool operator==(const PointSet& a, const PointSet& b) = default;

  std::string describe(const std::vector<std::string>* labels = nullptr) const;

 private:
  explicit PointSet(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<bool> mask_;
  GPoly poly_;
};

}  // namespace zcross

#endif
