#ifndef ZCROSS_CROSSED_HPP
#define ZCROSS_CROSSED_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "subalgebra.hpp"

namespace zcross {

// Element sum_n f_n delta^n of the crossed product A x Z: a finitely
// supported map from degree to an ambient coefficient vector, zero
// coefficients never stored.
class CrossedElement {
 public:
  CrossedElement() = default;  // zero

  static CrossedElement from_terms(std::map<long long, QVec> terms);

  const std::map<long long, QVec>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<long long> support() const;
  const QVec* coefficient(long long degree) const;

  friend bool operator==(const CrossedElement& a, const CrossedElement& b) = default;

 private:
  std::map<long long, QVec> terms_;
};

// Per-degree bases of coefficient spaces (commutants, centers, generated
// spans), each list canonical via RREF so span comparisons are literal.
using DegreeBasis = std::map<long long, std::vector<QVec>>;

struct MaximalityResult {
  bool decision = false;
  // On failure: a degree n and a nonzero witness f in A vanishing on
  // Sep_A^n, i.e. a coefficient making f delta^n a commutant element outside A.
  std::optional<long long> failing_degree;
  std::optional<QVec> witness;
  // On success: the degree range 1..checked_max that was verified.
  long long checked_max = 0;
  std::vector<std::string> notes;
};

// The crossed product A x Z for an invariant subalgebra A, with the action
// Psi = sigma_tilde, f |-> f o sigma^{-1}. Multiplication is twisted
// convolution (f*g)(n) = sum_k f(k) Psi^k(g(n-k)).
//
// Every theorem-derived computation here (commutant, center, maximality) has
// an independent brute-force twin that solves the defining commutation
// equations as plain linear systems; callers compare spans.
class CrossedContext {
 public:
  explicit CrossedContext(SubAlgebra algebra, unsigned root_bound = 64);

  const SubAlgebra& algebra() const { return a_; }
  const DynSystem& system() const { return a_.system(); }
  unsigned root_bound() const { return root_bound_; }
  bool unital() const { return unit_.has_value(); }
  const QVec& unit() const;

  // Builds an element, checking every coefficient for membership in A.
  CrossedElement element(std::map<long long, QVec> terms) const;
  CrossedElement monomial(long long degree, QVec coefficient) const;

  CrossedElement multiply(const CrossedElement& f, const CrossedElement& g) const;
  static CrossedElement add_scale(const CrossedElement& f, const CrossedElement& g,
                                  const GaussianRational& alpha);

  // f*g == g*f, evaluated both through multiply() and through the degreewise
  // commutation equations directly; a disagreement between the two routes is
  // an internal invariant violation.
  bool commutes(const CrossedElement& f, const CrossedElement& g) const;

  // Commutant coefficient space at one degree: functions in A vanishing on
  // Sep_A^n (all of A at degree zero).
  std::vector<QVec> commutant_coefficients(long long degree) const;
  // Brute force: solves f * (sigma_tilde^n(h) - h) = 0 for every basis h.
  std::vector<QVec> commutant_coefficients_oracle(long long degree) const;
  DegreeBasis commutant_basis(long long window) const;
  DegreeBasis commutant_basis_oracle(long long window) const;

  // Center coefficient space at one degree: sigma_tilde-fixed functions in A
  // vanishing on Sep_A^m.
  std::vector<QVec> center_coefficients(long long degree) const;
  // Brute force: commutation with every h delta^k for h in the basis and
  // k in {0, 1, -1} (which subsumes delta^{+-1} themselves when 1 lies in A).
  std::vector<QVec> center_coefficients_oracle(long long degree) const;
  DegreeBasis center_basis(long long window) const;
  DegreeBasis center_basis_oracle(long long window) const;

  // A is maximal abelian iff Sep_A^n is a domain of uniqueness for every
  // n != 0. Finite systems check n = 1..order(sigma) and always fail at the
  // order; rotation systems reduce via the multiplicative order of zeta, or
  // certify zeta as a non-root of unity up to root_bound.
  MaximalityResult is_maximal_abelian() const;

  // Smallest n >= 1 with sigma_tilde^n = id on A. Finite systems only.
  unsigned long long automorphism_order() const;

  // Generating set for the commutant as an algebra: one basis of the
  // commutant coefficient space K_l per degree l = 1..n0, the basis of A at
  // degree zero, and unit*delta^{-n0}. Finite unital systems only.
  std::vector<CrossedElement> extract_commutant_generators() const;

  // Per-degree span of the algebra generated by single-term elements,
  // restricted to |degree| <= window.
  DegreeBasis generated_span(const std::vector<CrossedElement>& generators,
                             long long window) const;

 private:
  std::vector<QVec> coords_kernel(const QMatrix& constraints) const;
  std::vector<QVec> full_algebra_rows() const;

  SubAlgebra a_;
  std::optional<QVec> unit_;
  unsigned root_bound_;
};

}  // namespace zcross

#endif
