#ifndef ZCROSS_SUBALGEBRA_HPP
#define ZCROSS_SUBALGEBRA_HPP

#include <memory>
#include <optional>
#include <vector>

#include "dynsystem.hpp"

namespace zcross {

// A multiplicatively closed, sigma-invariant linear subspace of the function
// space of a dynamical system, held as the canonical (RREF) basis matrix with
// one basis function per row.
//
// Rotation caveat: the degree window truncates an infinite Laurent algebra,
// so closure under products is checked only for pairs whose product stays
// representable; pairs that overflow the window are the window's problem, not
// the algebra's.
class SubAlgebra {
 public:
  // Smallest invariant subalgebra containing the generators. Iterates
  // pairwise products and sigma_tilde images until the span stabilizes, or
  // until the span saturates the rotation window. Products computed along the
  // way that leave the window throw ClosureExceedsWindow.
  static SubAlgebra closure(std::shared_ptr<const DynSystem> system,
                            const std::vector<QVec>& generators);

  // Wrap an already closed invariant basis; validates unless told not to.
  static SubAlgebra from_basis(std::shared_ptr<const DynSystem> system,
                               const std::vector<QVec>& rows, bool validate = true);

  const DynSystem& system() const { return *system_; }
  std::shared_ptr<const DynSystem> system_ptr() const { return system_; }

  const QMatrix& basis() const { return basis_; }
  size_t dim() const { return basis_.rows(); }
  size_t ambient_dim() const { return basis_.cols(); }
  QVec basis_row(size_t j) const { return basis_.row(j); }

  // Exact coordinates of an ambient function in this basis, if it belongs.
  std::optional<QVec> coordinates(const QVec& ambient) const;
  bool contains(const QVec& ambient) const { return coordinates(ambient).has_value(); }
  QVec from_coordinates(const QVec& coords) const;

  // True iff sigma_tilde(basis) and sigma_tilde^{-1}(basis) lie in the span.
  bool invariant() const;
  bool multiplicatively_closed() const;

  // The algebra's own multiplicative unit, if it has one (the constant one
  // function need not belong; e.g. functions vanishing at a fixed point have
  // the indicator of the remaining points as their unit).
  std::optional<QVec> unit() const;

 private:
  SubAlgebra(std::shared_ptr<const DynSystem> system, QMatrix basis)
      : system_(std::move(system)), basis_(std::move(basis)) {}

  std::shared_ptr<const DynSystem> system_;
  QMatrix basis_;
};

}  // namespace zcross

#endif
