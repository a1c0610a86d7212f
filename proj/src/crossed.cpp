#include "crossed.hpp"

#include <algorithm>
#include <sstream>

namespace zcross {

CrossedElement CrossedElement::from_terms(std::map<long long, QVec> terms) {
  CrossedElement e;
  for (auto& [n, coeff] : terms)
    if (!vec_is_zero(coeff)) e.terms_.emplace(n, std::move(coeff));
  return e;
}

std::vector<long long> CrossedElement::support() const {
  std::vector<long long> s;
  s.reserve(terms_.size());
  for (const auto& [n, coeff] : terms_) s.push_back(n);
  return s;
}

const QVec* CrossedElement::coefficient(long long degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? nullptr : &it->second;
}

CrossedContext::CrossedContext(SubAlgebra algebra, unsigned root_bound)
    : a_(std::move(algebra)), root_bound_(root_bound) {
  if (a_.dim() == 0)
    throw Error(ErrorCode::InvalidArgument, "crossed product needs a nonzero algebra");
  if (!a_.invariant())
    throw Error(ErrorCode::InvalidArgument,
                "coefficient algebra is not invariant under sigma_tilde and its inverse");
  unit_ = a_.unit();
}

const QVec& CrossedContext::unit() const {
  if (!unit_) throw Error(ErrorCode::NotUnital, "coefficient algebra has no unit");
  return *unit_;
}

CrossedElement CrossedContext::element(std::map<long long, QVec> terms) const {
  for (const auto& [n, coeff] : terms) {
    if (coeff.size() != a_.ambient_dim())
      throw Error(ErrorCode::DimensionMismatch, "coefficient vector has wrong dimension");
    if (!vec_is_zero(coeff) && !a_.contains(coeff))
      throw Error(ErrorCode::NotInAlgebra,
                  "coefficient of delta^" + std::to_string(n) + " lies outside A");
  }
  return CrossedElement::from_terms(std::move(terms));
}

CrossedElement CrossedContext::monomial(long long degree, QVec coefficient) const {
  std::map<long long, QVec> t;
  t.emplace(degree, std::move(coefficient));
  return element(std::move(t));
}

CrossedElement CrossedContext::multiply(const CrossedElement& f, const CrossedElement& g) const {
  const DynSystem& sys = system();
  std::map<long long, QVec> acc;
  for (const auto& [n, fn] : f.terms()) {
    for (const auto& [m, gm] : g.terms()) {
      QVec term = sys.multiply(fn, sys.sigma_tilde(gm, n));
      auto it = acc.find(n + m);
      if (it == acc.end()) acc.emplace(n + m, std::move(term));
      else it->second = vec_add(it->second, term);
    }
  }
  return CrossedElement::from_terms(std::move(acc));
}

CrossedElement CrossedContext::add_scale(const CrossedElement& f, const CrossedElement& g,
                                         const GaussianRational& alpha) {
  std::map<long long, QVec> acc = f.terms();
  for (const auto& [m, gm] : g.terms()) {
    QVec scaled = vec_scale(gm, alpha);
    auto it = acc.find(m);
    if (it == acc.end()) acc.emplace(m, std::move(scaled));
    else it->second = vec_add(it->second, scaled);
  }
  return CrossedElement::from_terms(std::move(acc));
}

bool CrossedContext::commutes(const CrossedElement& f, const CrossedElement& g) const {
  bool via_multiply = multiply(f, g) == multiply(g, f);

  // Same question through the commutation equations: for every total degree
  // r, sum_n f_n Psi^n(g_{r-n}) must equal sum_m g_m Psi^m(f_{r-m}).
  const DynSystem& sys = system();
  bool via_equations = true;
  if (!f.is_zero() && !g.is_zero()) {
    long long lo = f.terms().begin()->first + g.terms().begin()->first;
    long long hi = f.terms().rbegin()->first + g.terms().rbegin()->first;
    for (long long r = lo; r <= hi && via_equations; ++r) {
      QVec lhs(sys.dim(), GaussianRational{});
      QVec rhs(sys.dim(), GaussianRational{});
      for (const auto& [n, fn] : f.terms()) {
        if (const QVec* grn = g.coefficient(r - n))
          lhs = vec_add(lhs, sys.multiply(fn, sys.sigma_tilde(*grn, n)));
      }
      for (const auto& [m, gm] : g.terms()) {
        if (const QVec* frm = f.coefficient(r - m))
          rhs = vec_add(rhs, sys.multiply(gm, sys.sigma_tilde(*frm, m)));
      }
      via_equations = lhs == rhs;
    }
  }

  if (via_multiply != via_equations)
    throw Error(ErrorCode::InternalInvariantViolation,
                "twisted convolution and the commutation equations disagree");
  return via_multiply;
}

std::vector<QVec> CrossedContext::coords_kernel(const QMatrix& constraints) const {
  std::vector<QVec> coords = kernel(constraints, GaussianRational{});
  QMatrix ambient(0, a_.ambient_dim(), GaussianRational{});
  for (const QVec& c : coords) ambient.append_row(a_.from_coordinates(c));
  QMatrix canonical = row_space_basis(ambient);
  std::vector<QVec> rows;
  rows.reserve(canonical.rows());
  for (size_t r = 0; r < canonical.rows(); ++r) rows.push_back(canonical.row(r));
  return rows;
}

std::vector<QVec> CrossedContext::full_algebra_rows() const {
  std::vector<QVec> rows;
  rows.reserve(a_.dim());
  for (size_t j = 0; j < a_.dim(); ++j) rows.push_back(a_.basis_row(j));
  return rows;
}

std::vector<QVec> CrossedContext::commutant_coefficients(long long degree) const {
  if (degree == 0) return full_algebra_rows();
  PointSet sep = sep_sets(a_, degree).sep;
  switch (sep.kind()) {
    case PointSet::Kind::Empty:
      return full_algebra_rows();
    case PointSet::Kind::All:
    case PointSet::Kind::AllButRoots:
      // A function vanishing on a cofinite subset of the circle vanishes
      // identically, so the coefficient space is trivial.
      return {};
    case PointSet::Kind::FiniteMask: {
      const std::vector<bool>& mask = sep.mask();
      if (sep.mask_count() == 0) return full_algebra_rows();
      QMatrix rows(0, a_.dim(), GaussianRational{});
      for (size_t x = 0; x < mask.size(); ++x) {
        if (!mask[x]) continue;
        QVec row(a_.dim(), GaussianRational{});
        for (size_t j = 0; j < a_.dim(); ++j) row[j] = a_.basis().at(j, x);
        rows.append_row(row);
      }
      return coords_kernel(rows);
    }
    case PointSet::Kind::RootsOnly:
      break;
  }
  throw Error(ErrorCode::InternalInvariantViolation, "unexpected Sep set kind");
}

std::vector<QVec> CrossedContext::commutant_coefficients_oracle(long long degree) const {
  const DynSystem& sys = system();
  // f delta^degree commutes with A iff f * (sigma_tilde^degree(h) - h) = 0
  // for every h in the basis; each product is taken untruncated.
  QMatrix constraints(0, a_.dim(), GaussianRational{});
  for (size_t j = 0; j < a_.dim(); ++j) {
    QVec h = a_.basis_row(j);
    QVec d = vec_add(sys.sigma_tilde(h, degree), vec_scale(h, GaussianRational(-1)));
    if (vec_is_zero(d)) continue;
    std::vector<QVec> products;
    products.reserve(a_.dim());
    for (size_t jp = 0; jp < a_.dim(); ++jp)
      products.push_back(sys.full_product(a_.basis_row(jp), d));
    size_t slots = products[0].size();
    for (size_t t = 0; t < slots; ++t) {
      QVec row(a_.dim(), GaussianRational{});
      for (size_t jp = 0; jp < a_.dim(); ++jp) row[jp] = products[jp][t];
      constraints.append_row(row);
    }
  }
  return coords_kernel(constraints);
}

DegreeBasis CrossedContext::commutant_basis(long long window) const {
  DegreeBasis out;
  for (long long n = -window; n <= window; ++n) out[n] = commutant_coefficients(n);
  return out;
}

DegreeBasis CrossedContext::commutant_basis_oracle(long long window) const {
  DegreeBasis out;
  for (long long n = -window; n <= window; ++n) out[n] = commutant_coefficients_oracle(n);
  return out;
}

std::vector<QVec> CrossedContext::center_coefficients(long long degree) const {
  const DynSystem& sys = system();
  QMatrix constraints(0, a_.dim(), GaussianRational{});
  // (i) Z-invariance: sigma_tilde(f) = f, one row per ambient slot.
  {
    std::vector<QVec> shifted;
    shifted.reserve(a_.dim());
    for (size_t j = 0; j < a_.dim(); ++j) {
      QVec h = a_.basis_row(j);
      shifted.push_back(vec_add(sys.sigma_tilde(h, 1), vec_scale(h, GaussianRational(-1))));
    }
    for (size_t x = 0; x < a_.ambient_dim(); ++x) {
      QVec row(a_.dim(), GaussianRational{});
      for (size_t j = 0; j < a_.dim(); ++j) row[j] = shifted[j][x];
      constraints.append_row(row);
    }
  }
  // (ii) vanishing on Sep_A^degree (Sep_A^0 reads as the empty set).
  if (degree != 0) {
    PointSet sep = sep_sets(a_, degree).sep;
    switch (sep.kind()) {
      case PointSet::Kind::Empty:
        break;
      case PointSet::Kind::All:
      case PointSet::Kind::AllButRoots:
        return {};
      case PointSet::Kind::FiniteMask: {
        const std::vector<bool>& mask = sep.mask();
        for (size_t x = 0; x < mask.size(); ++x) {
          if (!mask[x]) continue;
          QVec row(a_.dim(), GaussianRational{});
          for (size_t j = 0; j < a_.dim(); ++j) row[j] = a_.basis().at(j, x);
          constraints.append_row(row);
        }
        break;
      }
      case PointSet::Kind::RootsOnly:
        throw Error(ErrorCode::InternalInvariantViolation, "unexpected Sep set kind");
    }
  }
  return coords_kernel(constraints);
}

std::vector<QVec> CrossedContext::center_coefficients_oracle(long long degree) const {
  const DynSystem& sys = system();
  // g delta^degree is central iff it commutes with every h delta^k; k in
  // {0, 1, -1} suffices and the conditions are linear in g:
  //   g * sigma_tilde^degree(h) = h * sigma_tilde^k(g).
  QMatrix constraints(0, a_.dim(), GaussianRational{});
  for (size_t j = 0; j < a_.dim(); ++j) {
    QVec h = a_.basis_row(j);
    QVec h_shift = sys.sigma_tilde(h, degree);
    for (long long k : {0LL, 1LL, -1LL}) {
      std::vector<QVec> lhs, rhs;
      lhs.reserve(a_.dim());
      rhs.reserve(a_.dim());
      for (size_t jp = 0; jp < a_.dim(); ++jp) {
        lhs.push_back(sys.full_product(a_.basis_row(jp), h_shift));
        rhs.push_back(sys.full_product(h, sys.sigma_tilde(a_.basis_row(jp), k)));
      }
      size_t slots = lhs[0].size();
      for (size_t t = 0; t < slots; ++t) {
        QVec row(a_.dim(), GaussianRational{});
        bool nonzero = false;
        for (size_t jp = 0; jp < a_.dim(); ++jp) {
          row[jp] = lhs[jp][t] - rhs[jp][t];
          nonzero = nonzero || !row[jp].is_zero();
        }
        if (nonzero) constraints.append_row(row);
      }
    }
  }
  return coords_kernel(constraints);
}

DegreeBasis CrossedContext::center_basis(long long window) const {
  DegreeBasis out;
  for (long long n = -window; n <= window; ++n) out[n] = center_coefficients(n);
  return out;
}

DegreeBasis CrossedContext::center_basis_oracle(long long window) const {
  DegreeBasis out;
  for (long long n = -window; n <= window; ++n) out[n] = center_coefficients_oracle(n);
  return out;
}

MaximalityResult CrossedContext::is_maximal_abelian() const {
  const DynSystem& sys = system();
  MaximalityResult result;

  unsigned long long range;
  if (sys.is_finite()) {
    range = sys.sigma_order();
    result.notes.push_back("finite system: checked n = 1.." + std::to_string(range) +
                           " (order of sigma); sigma^order = id forces failure at the order");
  } else {
    std::optional<unsigned> q = sys.zeta_order(root_bound_);
    if (q) {
      range = *q;
      result.notes.push_back("zeta is a root of unity of order " + std::to_string(*q) +
                             "; checked n = 1.." + std::to_string(*q));
    } else {
      range = root_bound_;
      result.notes.push_back("zeta^n != 1 verified exactly for 1 <= n <= " +
                             std::to_string(root_bound_) +
                             "; maximality asserted under that certificate");
    }
  }

  for (unsigned long long n = 1; n <= range; ++n) {
    PointSet sep = sep_sets(a_, static_cast<long long>(n)).sep;
    if (is_domain_of_uniqueness(a_, sep)) continue;

    result.decision = false;
    result.failing_degree = static_cast<long long>(n);
    if (sep.kind() == PointSet::Kind::Empty ||
        (sep.kind() == PointSet::Kind::FiniteMask && sep.mask_count() == 0)) {
      // Everything in A vanishes on the empty set; any nonzero element works.
      result.witness = a_.basis_row(0);
    } else if (sep.kind() == PointSet::Kind::FiniteMask) {
      QMatrix rows(0, a_.dim(), GaussianRational{});
      const std::vector<bool>& mask = sep.mask();
      for (size_t x = 0; x < mask.size(); ++x) {
        if (!mask[x]) continue;
        QVec row(a_.dim(), GaussianRational{});
        for (size_t j = 0; j < a_.dim(); ++j) row[j] = a_.basis().at(j, x);
        rows.append_row(row);
      }
      std::vector<QVec> ker = kernel(rows, GaussianRational{});
      if (ker.empty())
        throw Error(ErrorCode::InternalInvariantViolation,
                    "failed domain of uniqueness without a witness");
      result.witness = a_.from_coordinates(ker.front());
    }
    return result;
  }

  result.decision = true;
  result.checked_max = static_cast<long long>(range);
  return result;
}

unsigned long long CrossedContext::automorphism_order() const {
  if (!system().is_finite())
    throw Error(ErrorCode::NotFiniteDimensional,
                "automorphism order is computed for finite systems only");
  // Matrix of sigma_tilde on A in its own basis.
  QMatrix step(0, a_.dim(), GaussianRational{});
  for (size_t j = 0; j < a_.dim(); ++j) {
    auto coords = a_.coordinates(system().sigma_tilde(a_.basis_row(j), 1));
    if (!coords)
      throw Error(ErrorCode::InternalInvariantViolation, "sigma_tilde image escaped A");
    step.append_row(*coords);
  }
  QMatrix id = QMatrix::identity(a_.dim(), GaussianRational{});
  QMatrix acc = step;
  unsigned long long bound = system().sigma_order();
  for (unsigned long long n = 1; n <= bound; ++n) {
    if (acc == id) return n;
    acc = mat_mul(acc, step);
  }
  throw Error(ErrorCode::InternalInvariantViolation,
              "sigma_tilde order does not divide the order of sigma");
}

std::vector<CrossedElement> CrossedContext::extract_commutant_generators() const {
  if (!system().is_finite())
    throw Error(ErrorCode::NotFiniteDimensional,
                "generator extraction applies to finite systems; the rotation window "
                "truncates an infinite-dimensional algebra");
  const QVec& e = unit();  // throws NotUnital
  unsigned long long n0 = automorphism_order();

  std::vector<CrossedElement> gens;
  for (unsigned long long l = 1; l <= n0; ++l)
    for (QVec& v : commutant_coefficients(static_cast<long long>(l)))
      gens.push_back(monomial(static_cast<long long>(l), std::move(v)));
  for (size_t j = 0; j < a_.dim(); ++j) gens.push_back(monomial(0, a_.basis_row(j)));
  gens.push_back(monomial(-static_cast<long long>(n0), e));
  return gens;
}

DegreeBasis CrossedContext::generated_span(const std::vector<CrossedElement>& generators,
                                           long long window) const {
  const DynSystem& sys = system();
  long long max_gen_degree = 0;
  std::map<long long, QMatrix> spans;
  // (degree, vector) items whose products have not been formed yet
  std::vector<std::pair<long long, QVec>> worklist;

  auto absorb = [&](long long d, const QVec& v) {
    if (vec_is_zero(v)) return;
    auto [it, inserted] = spans.try_emplace(d, 0, sys.dim(), GaussianRational{});
    if (span_coordinates(it->second, v)) return;
    it->second.append_row(v);
    it->second = row_space_basis(it->second);
    worklist.emplace_back(d, v);
  };

  for (const CrossedElement& g : generators) {
    if (g.is_zero()) continue;
    if (g.terms().size() != 1)
      throw Error(ErrorCode::InvalidArgument, "generated_span expects single-term generators");
    const auto& [d, coeff] = *g.terms().begin();
    max_gen_degree = std::max(max_gen_degree, std::llabs(d));
    absorb(d, coeff);
  }

  const long long bound = window + max_gen_degree;
  while (!worklist.empty()) {
    auto [d1, v1] = std::move(worklist.back());
    worklist.pop_back();
    // products with everything currently in the span, both orders
    std::vector<std::pair<long long, QMatrix>> snapshot(spans.begin(), spans.end());
    for (const auto& [d2, m2] : snapshot) {
      for (size_t r = 0; r < m2.rows(); ++r) {
        QVec v2 = m2.row(r);
        if (std::llabs(d1 + d2) > bound) continue;
        absorb(d1 + d2, sys.multiply(v1, sys.sigma_tilde(v2, d1)));
        absorb(d1 + d2, sys.multiply(v2, sys.sigma_tilde(v1, d2)));
      }
    }
  }

  DegreeBasis out;
  for (long long n = -window; n <= window; ++n) {
    std::vector<QVec> rows;
    auto it = spans.find(n);
    if (it != spans.end())
      for (size_t r = 0; r < it->second.rows(); ++r) rows.push_back(it->second.row(r));
    out[n] = std::move(rows);
  }
  return out;
}

}  // namespace zcross
