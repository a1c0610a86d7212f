#ifndef ZCROSS_DYNSYSTEM_HPP
#define ZCROSS_DYNSYSTEM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"

namespace zcross {

// A discrete dynamical system carrying the function-space structure that
// subalgebras live in. Two variants:
//
//  Finite   - a finite set X with a bijection sigma, functions are value
//             vectors indexed by the points of X;
//  Rotation - the exact model of a circle rotation z -> zeta*z with
//             unimodular zeta in Q(i); functions are Laurent polynomials
//             sum_k c_k z^k restricted to the degree window |k| <= D,
//             stored as coefficient vectors of length 2D+1 (index k+D).
//
// In both variants the induced automorphism is sigma_tilde(f) = f o sigma^{-1};
// on Laurent monomials this reads sigma_tilde(z^k) = zeta^{-k} z^k.
class DynSystem {
 public:
  enum class Kind { Finite, Rotation };

  static std::shared_ptr<const DynSystem> finite(std::vector<size_t> sigma,
                                                 std::vector<std::string> labels = {});
  static std::shared_ptr<const DynSystem> rotation(GaussianRational zeta, int window);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  // Dimension of the function coordinate space: |X| or 2D+1.
  size_t dim() const;

  // Finite accessors; throw WrongVariant on a rotation system.
  size_t size() const;
  const std::vector<size_t>& sigma() const;
  const std::vector<std::string>& labels() const;
  std::vector<size_t> sigma_power(long long n) const;
  unsigned long long sigma_order() const;

  // Rotation accessors; throw WrongVariant on a finite system.
  const GaussianRational& zeta() const;
  int window() const;
  long long degree_of_index(size_t idx) const;   // idx - D
  size_t index_of_degree(long long deg) const;   // deg + D
  // Multiplicative order of zeta if it is a root of unity of order <= bound.
  std::optional<unsigned> zeta_order(unsigned bound) const;

  // Pointwise (finite) or polynomial (rotation) product of two functions.
  // Rotation products whose support leaves the window throw
  // ClosureExceedsWindow rather than truncating.
  QVec multiply(const QVec& f, const QVec& g) const;

  // Untruncated product, for oracle-side linear algebra: identical to
  // multiply() on finite systems; the full convolution of length 4D+1 on
  // rotation systems (never throws on overflow).
  QVec full_product(const QVec& f, const QVec& g) const;

  // Coefficients of sigma_tilde^n(f).
  QVec sigma_tilde(const QVec& f, long long n = 1) const;

  QVec constant_one() const;
  QVec delta(size_t idx) const;  // indicator of a point / monomial z^{idx-D}

  std::string describe() const;

 private:
  DynSystem() = default;

  void require(Kind k) const;

  Kind kind_;
  // finite
  std::vector<size_t> sigma_;
  std::vector<size_t> sigma_inv_;
  std::vector<std::string> labels_;
  // rotation
  GaussianRational zeta_;
  int window_ = 0;
};

}  // namespace zcross

#endif
