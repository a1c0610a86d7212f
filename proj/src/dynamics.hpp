#ifndef ZCROSS_DYNAMICS_HPP
#define ZCROSS_DYNAMICS_HPP

#include <vector>

#include "pointset.hpp"
#include "subalgebra.hpp"

// Separation and periodicity structure of a dynamical system relative to an
// invariant function algebra: the sets Sep_A^n / Per_A^n, their infinite
// intersection, domains of uniqueness, and cycle decompositions.

namespace zcross {

struct SepPer {
  PointSet sep;
  PointSet per;
};

// Sep_A^n = points separated from their sigma^{-n} image by some h in A,
// Per_A^n its complement. n must be nonzero.
SepPer sep_sets(const SubAlgebra& a, long long n);

// Point-level Sep^n / Per^n, ignoring the algebra (finite systems).
SepPer sep_sets_points(const DynSystem& system, long long n);

// Per_A^infty = intersection of Sep_A^n over nonzero n. The quantifier is
// reduced exactly: finite systems need only n = 1..order(sigma); rotation
// systems classify zeta as a root of unity of order q (reduce to n = 1..q) or
// certify zeta^n != 1 for n up to `root_bound` and use that range.
PointSet per_infinity(const SubAlgebra& a, unsigned root_bound = 64);

// True iff s is non-empty and the only function in A vanishing on all of s is
// the zero function.
bool is_domain_of_uniqueness(const SubAlgebra& a, const PointSet& s);

struct CycleDecomposition {
  std::vector<std::vector<size_t>> cycles;  // disjoint, covering, each rotated to start at its minimum
  unsigned long long order;                 // lcm of cycle lengths
};

CycleDecomposition cycle_decomposition(const DynSystem& system);

// Convenience wrappers matching the operation vocabulary.
inline SubAlgebra multiplicative_closure(std::shared_ptr<const DynSystem> system,
                                         const std::vector<QVec>& generators) {
  return SubAlgebra::closure(std::move(system), generators);
}

inline bool check_invariance(const SubAlgebra& a) { return a.invariant(); }

}  // namespace zcross

#endif
