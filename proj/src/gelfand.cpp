#include "gelfand.hpp"

namespace zcross {

namespace {

// Column of basis values at one ambient point.
QVec column_at(const SubAlgebra& a, size_t x) {
  QVec col(a.dim(), GaussianRational{});
  for (size_t j = 0; j < a.dim(); ++j) col[j] = a.basis().at(j, x);
  return col;
}

size_t find_character(const CharacterSpace& cs, const QVec& functional) {
  for (size_t i = 0; i < cs.count(); ++i)
    if (cs.rows.row(i) == functional) return i;
  throw Error(ErrorCode::NotAnAutomorphism,
              "transformed character is not in the character list");
}

}  // namespace

CharacterSpace character_space(const SubAlgebra& a) {
  if (!a.system().is_finite())
    throw Error(ErrorCode::NotFiniteDimensional,
                "character spaces are computed for algebras over finite systems");
  CharacterSpace cs;
  cs.rows = QMatrix(0, a.dim(), GaussianRational{});

  // Classes of points on which every basis function agrees; evaluation is the
  // same functional on each class, and classes where A vanishes give the zero
  // functional, which is not a character.
  std::vector<QVec> seen;
  for (size_t x = 0; x < a.ambient_dim(); ++x) {
    QVec col = column_at(a, x);
    if (vec_is_zero(col)) continue;
    bool duplicate = false;
    for (const QVec& c : seen)
      if (c == col) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;
    seen.push_back(col);
    cs.representatives.push_back(x);
    cs.rows.append_row(col);
  }

  if (cs.count() != a.dim())
    throw Error(ErrorCode::CharacterCountMismatch,
                "found " + std::to_string(cs.count()) + " characters for an algebra of dimension " +
                    std::to_string(a.dim()) +
                    "; the semi-simplicity reasoning does not apply, aborting");

  cs.induced_sigma = induced_permutation(cs, a, 1);
  return cs;
}

std::vector<size_t> induced_permutation(const CharacterSpace& cs, const SubAlgebra& a,
                                        long long power) {
  // chi o sigma_tilde^{-power} applied to h_j is chi(sigma_tilde^{-power} h_j).
  std::vector<size_t> perm(cs.count());
  std::vector<QVec> preimages;
  preimages.reserve(a.dim());
  for (size_t j = 0; j < a.dim(); ++j)
    preimages.push_back(a.system().sigma_tilde(a.basis_row(j), -power));
  for (size_t i = 0; i < cs.count(); ++i) {
    QVec functional(a.dim(), GaussianRational{});
    for (size_t j = 0; j < a.dim(); ++j)
      functional[j] = preimages[j][cs.representatives[i]];
    perm[i] = find_character(cs, functional);
  }
  return perm;
}

std::vector<size_t> induced_permutation(const CharacterSpace& cs, const SubAlgebra& a,
                                        const QMatrix& automorphism_on_basis) {
  if (automorphism_on_basis.rows() != a.dim() || automorphism_on_basis.cols() != a.dim())
    throw Error(ErrorCode::DimensionMismatch, "automorphism matrix must be dim(A) x dim(A)");
  std::optional<QMatrix> inv = inverse(automorphism_on_basis);
  if (!inv) throw Error(ErrorCode::NotAnAutomorphism, "automorphism matrix is singular");
  std::vector<size_t> perm(cs.count());
  for (size_t i = 0; i < cs.count(); ++i) {
    // chi_i(sigma_tilde^{-1} h_j) = sum_k inv[j][k] chi_i(h_k)
    QVec functional(a.dim(), GaussianRational{});
    for (size_t j = 0; j < a.dim(); ++j) {
      GaussianRational acc;
      for (size_t k = 0; k < a.dim(); ++k) acc += inv->at(j, k) * cs.rows.at(i, k);
      functional[j] = acc;
    }
    perm[i] = find_character(cs, functional);
  }
  return perm;
}

QVec gelfand_transform(const CharacterSpace& cs, const SubAlgebra& a, const QVec& fn) {
  std::optional<QVec> coords = a.coordinates(fn);
  if (!coords) throw Error(ErrorCode::NotInAlgebra, "function is not a member of A");
  QVec out(cs.count(), GaussianRational{});
  for (size_t i = 0; i < cs.count(); ++i) {
    GaussianRational acc;
    for (size_t j = 0; j < a.dim(); ++j)
      if (!(*coords)[j].is_zero()) acc += (*coords)[j] * cs.rows.at(i, j);
    out[i] = acc;
  }
  return out;
}

namespace {

CrossedContext build_image_context(const SubAlgebra& source, const CharacterSpace& cs,
                                   unsigned root_bound) {
  std::vector<std::string> labels;
  labels.reserve(cs.count());
  const std::vector<std::string>& src_labels = source.system().labels();
  for (size_t rep : cs.representatives) labels.push_back(src_labels[rep]);
  auto dual = DynSystem::finite(cs.induced_sigma, std::move(labels));

  std::vector<QVec> hat_basis;
  hat_basis.reserve(source.dim());
  for (size_t j = 0; j < source.dim(); ++j)
    hat_basis.push_back(gelfand_transform(cs, source, source.basis_row(j)));
  try {
    SubAlgebra hat = SubAlgebra::from_basis(std::move(dual), hat_basis, /*validate=*/true);
    return CrossedContext(std::move(hat), root_bound);
  } catch (const Error& e) {
    // hat(A) failing to be a closed invariant algebra would falsify the
    // isomorphism construction itself.
    throw Error(ErrorCode::InternalInvariantViolation,
                std::string("Gelfand image is not a valid coefficient algebra: ") + e.what());
  }
}

}  // namespace

GelfandIsomorphism::GelfandIsomorphism(const CrossedContext& source)
    : source_(source.algebra()),
      cs_(character_space(source_)),
      image_(build_image_context(source_, cs_, source.root_bound())) {}

CrossedElement GelfandIsomorphism::map(const CrossedElement& f) const {
  std::map<long long, QVec> terms;
  for (const auto& [n, coeff] : f.terms()) terms.emplace(n, transform(coeff));
  return image_.element(std::move(terms));
}

}  // namespace zcross
