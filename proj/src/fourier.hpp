#ifndef ZCROSS_FOURIER_HPP
#define ZCROSS_FOURIER_HPP

#include <utility>
#include <vector>

#include "crossed.hpp"
#include "cyclotomic.hpp"

namespace zcross {

// The group algebra of Z_N under circular convolution, with an exact
// primitive N-th root of unity in the scalar field. The general instantiation
// uses Q[x]/(Phi_N); for N in {1,2,4} the roots of unity already live in Q(i)
// and a GaussianRational instantiation is available (outputs agree under the
// embedding of Q(i) into the cyclotomic field, which the tests pin down).
template <FieldScalar S>
struct GroupAlgebra {
  unsigned modulus;
  S omega;

  Vec<S> convolve(const Vec<S>& f, const Vec<S>& g) const {
    check(f);
    if (f.size() != g.size())
      throw Error(ErrorCode::ModulusMismatch, "convolution operands have different moduli");
    Vec<S> out(modulus, S::zero_like(omega));
    for (unsigned x = 0; x < modulus; ++x)
      for (unsigned y = 0; y < modulus; ++y) {
        if (f[y].is_zero() || g[(x + modulus - y) % modulus].is_zero()) continue;
        out[x] = out[x] + f[y] * g[(x + modulus - y) % modulus];
      }
    return out;
  }

  // hat f(gamma) = sum_x f(x) omega^{-gamma x}
  Vec<S> fourier(const Vec<S>& f) const {
    check(f);
    std::vector<S> pw = powers();
    Vec<S> out(modulus, S::zero_like(omega));
    for (unsigned g = 0; g < modulus; ++g)
      for (unsigned x = 0; x < modulus; ++x) {
        if (f[x].is_zero()) continue;
        unsigned e = (modulus - (g * x) % modulus) % modulus;
        out[g] = out[g] + f[x] * pw[e];
      }
    return out;
  }

  // f(x) = (1/N) sum_gamma hat f(gamma) omega^{x gamma}
  Vec<S> inverse_fourier(const Vec<S>& hat) const {
    check(hat);
    std::vector<S> pw = powers();
    S n_inv = S::from_int_like(omega, static_cast<long long>(modulus)).inverse();
    Vec<S> out(modulus, S::zero_like(omega));
    for (unsigned x = 0; x < modulus; ++x) {
      for (unsigned g = 0; g < modulus; ++g) {
        if (hat[g].is_zero()) continue;
        out[x] = out[x] + hat[g] * pw[(x * g) % modulus];
      }
      out[x] = out[x] * n_inv;
    }
    return out;
  }

  // The algebra automorphism induced by a permutation m of the dual group,
  // normalized so that (sigma_tilde f)^ = hat f o m^{-1}; with this
  // convention the homeomorphism that the Gelfand machinery later induces on
  // the character space is m itself. Returned as the matrix acting on
  // coefficient vectors in the delta basis.
  Matrix<S> dual_induced_automorphism(const std::vector<size_t>& dual_map) const {
    std::vector<size_t> inv = inverse_permutation(dual_map, modulus);
    Matrix<S> out(modulus, modulus, S::zero_like(omega));
    for (unsigned x = 0; x < modulus; ++x) {
      Vec<S> delta(modulus, S::zero_like(omega));
      delta[x] = S::one_like(omega);
      Vec<S> hat = fourier(delta);
      Vec<S> permuted(modulus, S::zero_like(omega));
      for (unsigned g = 0; g < modulus; ++g) permuted[g] = hat[inv[g]];
      Vec<S> image = inverse_fourier(permuted);
      for (unsigned y = 0; y < modulus; ++y) out.at(y, x) = image[y];
    }
    return out;
  }

  // Exhaustive check that a linear map respects convolution on all pairs of
  // delta functions (which spans all pairs by bilinearity).
  bool is_convolution_automorphism(const Matrix<S>& m) const {
    std::vector<Vec<S>> images(modulus);
    for (unsigned x = 0; x < modulus; ++x) {
      Vec<S> delta(modulus, S::zero_like(omega));
      delta[x] = S::one_like(omega);
      images[x] = mat_vec(m, delta);
    }
    for (unsigned x = 0; x < modulus; ++x)
      for (unsigned y = 0; y < modulus; ++y) {
        Vec<S> delta(modulus, S::zero_like(omega));
        delta[(x + y) % modulus] = S::one_like(omega);
        if (mat_vec(m, delta) != convolve(images[x], images[y])) return false;
      }
    return true;
  }

  static std::vector<size_t> inverse_permutation(const std::vector<size_t>& p, unsigned n) {
    if (p.size() != n)
      throw Error(ErrorCode::NotBijective, "dual map has the wrong number of entries");
    std::vector<size_t> inv(n, n);
    for (size_t g = 0; g < n; ++g) {
      if (p[g] >= n || inv[p[g]] != n)
        throw Error(ErrorCode::NotBijective, "dual map is not a bijection");
      inv[p[g]] = g;
    }
    return inv;
  }

 private:
  void check(const Vec<S>& f) const {
    if (f.size() != modulus)
      throw Error(ErrorCode::DimensionMismatch, "group algebra element has wrong length");
  }
  std::vector<S> powers() const {
    std::vector<S> pw;
    pw.reserve(modulus);
    S acc = S::one_like(omega);
    for (unsigned k = 0; k < modulus; ++k) {
      pw.push_back(acc);
      acc = acc * omega;
    }
    return pw;
  }
};

GroupAlgebra<CyclotomicScalar> cyclotomic_group_algebra(unsigned modulus);
// Only N in {1, 2, 4}, where Q(i) already contains the roots of unity.
GroupAlgebra<GaussianRational> gaussian_group_algebra(unsigned modulus);

// gamma -> shift + unit * gamma on Z_N; requires gcd(unit, N) = 1.
struct AffineDualMap {
  unsigned shift = 0;
  unsigned unit = 1;
};

std::vector<size_t> affine_permutation(unsigned modulus, const AffineDualMap& map);

// Piecewise affine map: disjoint pieces covering Z_N, one affine map each.
std::vector<size_t> piecewise_permutation(
    unsigned modulus,
    const std::vector<std::pair<std::vector<size_t>, AffineDualMap>>& pieces);

// The fix-evens / shift-odds-by-two dual map on Z_N (N even).
std::vector<size_t> disco_dual_map(unsigned modulus);

struct DualSupportRow {
  long long degree = 0;
  bool periodic = false;      // dual_map^degree is the identity
  size_t dimension = 0;       // commutant coefficient space dimension
  bool support_in_per = true; // every oracle basis vector vanishes off Per^degree
  bool even_support = true;   // every oracle basis vector vanishes on odd characters
};

// Analysis of the crossed product of the Z_N group algebra by the
// automorphism a dual permutation induces, transported to the function
// algebra on the dual and run through the crossed/commutant machinery there.
struct DualSystemReport {
  unsigned modulus = 0;
  long long window = 0;
  std::vector<size_t> dual_map;
  unsigned long long dual_map_order = 0;
  bool automorphism_verified = false;  // convolution automorphism, all delta pairs
  bool transport_verified = false;     // FT . sigma_tilde . IFT is the dual permutation
  bool roundtrip_is_dual_map = false;  // character-space route recovers the dual map
  DegreeBasis commutant;               // dual side, theorem route
  DegreeBasis commutant_oracle;
  // the same spaces back on the convolution side: inverse transforms of the
  // dual-side bases, with coefficients in Q[x]/(Phi_N)
  std::map<long long, std::vector<Vec<CyclotomicScalar>>> commutant_group_side;
  bool oracle_agrees = false;
  MaximalityResult maximality;
  std::vector<DualSupportRow> support;
  bool support_condition_holds = false;  // supp within Per^n at every n != 0
  std::vector<std::string> notes;
};

DualSystemReport dual_system_analysis(unsigned modulus, const std::vector<size_t>& dual_map,
                                      long long window, unsigned root_bound = 64);

// Example analysis for the disconnected dual: builds the disco dual map and
// additionally reports the even-character support structure.
DualSystemReport disco_analog(unsigned modulus, long long window, unsigned root_bound = 64);

}  // namespace zcross

#endif
