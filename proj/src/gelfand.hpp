#ifndef ZCROSS_GELFAND_HPP
#define ZCROSS_GELFAND_HPP

#include <vector>

#include "crossed.hpp"

namespace zcross {

// The character space Delta(A) of a finite-dimensional invariant function
// algebra: all nonzero multiplicative linear functionals, realized as
// evaluations at the point classes that A distinguishes, together with the
// induced permutation chi -> chi o sigma_tilde^{-1}.
struct CharacterSpace {
  // rows.at(i, j) = chi_i(h_j) for the canonical basis h_j of A.
  QMatrix rows;
  // one ambient point realizing each character by evaluation
  std::vector<size_t> representatives;
  // index permutation: chi_i o sigma_tilde^{-1} = chi_{induced_sigma[i]}
  std::vector<size_t> induced_sigma;

  size_t count() const { return rows.rows(); }
};

// Enumerates Delta(A). A must live on a finite system. Characters are the
// evaluations at classes of points on which all of A agrees, classes where A
// vanishes dropped; for a reduced finite-dimensional algebra these exhaust
// Delta(A) and their number equals dim A. Both facts are rechecked at
// runtime and a mismatch aborts (CharacterCountMismatch) rather than guessing.
CharacterSpace character_space(const SubAlgebra& a);

// The permutation chi -> chi o automorphism^{-1} of the character list, for
// the automorphism sigma_tilde^power of the underlying system.
std::vector<size_t> induced_permutation(const CharacterSpace& cs, const SubAlgebra& a,
                                        long long power);

// Same, for an arbitrary algebra automorphism given by the matrix whose row j
// holds the A-coordinates of the image of basis function h_j. Throws
// NotAnAutomorphism when the matrix is singular or some transformed character
// is not in the list.
std::vector<size_t> induced_permutation(const CharacterSpace& cs, const SubAlgebra& a,
                                        const QMatrix& automorphism_on_basis);

// Gelfand transform: the function chi -> chi(fn) on Delta(A).
// fn must lie in A.
QVec gelfand_transform(const CharacterSpace& cs, const SubAlgebra& a, const QVec& fn);

// The isomorphism Phi of crossed products sum a_n delta^n -> sum
// hat(a_n) delta^n onto the crossed product of hat(A) over the dynamical
// system (Delta(A), induced sigma).
class GelfandIsomorphism {
 public:
  explicit GelfandIsomorphism(const CrossedContext& source);

  const CharacterSpace& characters() const { return cs_; }
  const SubAlgebra& source_algebra() const { return source_; }
  const CrossedContext& image_context() const { return image_; }

  QVec transform(const QVec& fn) const { return gelfand_transform(cs_, source_, fn); }
  CrossedElement map(const CrossedElement& f) const;

 private:
  SubAlgebra source_;
  CharacterSpace cs_;
  CrossedContext image_;
};

}  // namespace zcross

#endif
