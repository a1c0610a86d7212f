#include "subalgebra.hpp"

namespace zcross {

SubAlgebra SubAlgebra::closure(std::shared_ptr<const DynSystem> system,
                               const std::vector<QVec>& generators) {
  if (generators.empty())
    throw Error(ErrorCode::InvalidArgument, "closure needs at least one generator");
  QMatrix span(0, system->dim(), GaussianRational{});
  for (const QVec& g : generators) {
    if (g.size() != system->dim())
      throw Error(ErrorCode::DimensionMismatch, "generator has wrong dimension");
    if (vec_is_zero(g))
      throw Error(ErrorCode::InvalidArgument, "generators must be nonzero");
    span.append_row(g);
  }
  span = row_space_basis(span);

  for (;;) {
    // A span saturating the whole window is the designated model algebra.
    if (span.rows() == system->dim()) break;

    // Grow by in-window products and sigma_tilde images. Products running off
    // the window are skipped while the span still grows; once it stalls they
    // mean the closure genuinely does not fit the window.
    bool overflow_seen = false;
    QMatrix extended = span;
    for (size_t i = 0; i < span.rows(); ++i) {
      for (size_t j = i; j < span.rows(); ++j) {
        try {
          extended.append_row(system->multiply(span.row(i), span.row(j)));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::ClosureExceedsWindow) throw;
          overflow_seen = true;
        }
      }
      extended.append_row(system->sigma_tilde(span.row(i), 1));
      extended.append_row(system->sigma_tilde(span.row(i), -1));
    }
    QMatrix next = row_space_basis(extended);
    if (next.rows() == span.rows()) {
      if (overflow_seen)
        throw Error(ErrorCode::ClosureExceedsWindow,
                    "multiplicative closure leaves the degree window; widen the window");
      break;
    }
    span = std::move(next);
  }
  return SubAlgebra(std::move(system), std::move(span));
}

SubAlgebra SubAlgebra::from_basis(std::shared_ptr<const DynSystem> system,
                                  const std::vector<QVec>& rows, bool validate) {
  QMatrix m(0, system->dim(), GaussianRational{});
  for (const QVec& r : rows) m.append_row(r);
  QMatrix canonical = row_space_basis(m);
  if (validate && canonical.rows() != rows.size())
    throw Error(ErrorCode::InvalidArgument, "basis rows are linearly dependent");
  SubAlgebra a(std::move(system), std::move(canonical));
  if (validate) {
    if (!a.invariant())
      throw Error(ErrorCode::InvalidArgument, "basis span is not sigma-invariant");
    if (!a.multiplicatively_closed())
      throw Error(ErrorCode::InvalidArgument, "basis span is not closed under products");
  }
  return a;
}

std::optional<QVec> SubAlgebra::coordinates(const QVec& ambient) const {
  return span_coordinates(basis_, ambient);
}

QVec SubAlgebra::from_coordinates(const QVec& coords) const {
  if (coords.size() != dim())
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector has wrong length");
  QVec out(ambient_dim(), GaussianRational{});
  for (size_t j = 0; j < dim(); ++j) {
    if (coords[j].is_zero()) continue;
    for (size_t c = 0; c < ambient_dim(); ++c) out[c] += coords[j] * basis_.at(j, c);
  }
  return out;
}

bool SubAlgebra::invariant() const {
  for (size_t j = 0; j < dim(); ++j) {
    if (!contains(system_->sigma_tilde(basis_row(j), 1))) return false;
    if (!contains(system_->sigma_tilde(basis_row(j), -1))) return false;
  }
  return true;
}

bool SubAlgebra::multiplicatively_closed() const {
  for (size_t i = 0; i < dim(); ++i) {
    for (size_t j = i; j < dim(); ++j) {
      QVec product;
      try {
        product = system_->multiply(basis_row(i), basis_row(j));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ClosureExceedsWindow) continue;  // see header note
        throw;
      }
      if (!contains(product)) return false;
    }
  }
  return true;
}

std::optional<QVec> SubAlgebra::unit() const {
  if (dim() == 0) return std::nullopt;
  QVec candidate(ambient_dim(), GaussianRational{});
  if (system_->is_finite()) {
    // The unit must be 1 wherever some basis function is nonzero and 0 where
    // all of them vanish, so there is exactly one candidate.
    for (size_t x = 0; x < ambient_dim(); ++x) {
      bool somewhere_nonzero = false;
      for (size_t j = 0; j < dim(); ++j)
        if (!basis_.at(j, x).is_zero()) {
          somewhere_nonzero = true;
          break;
        }
      if (somewhere_nonzero) candidate[x] = GaussianRational(1);
    }
  } else {
    // Laurent polynomials form an integral domain; only z^0 can be a unit.
    candidate = system_->constant_one();
  }
  if (!contains(candidate)) return std::nullopt;
  for (size_t j = 0; j < dim(); ++j) {
    QVec product = system_->multiply(candidate, basis_row(j));
    if (product != basis_row(j)) return std::nullopt;
  }
  return candidate;
}

}  // namespace zcross
