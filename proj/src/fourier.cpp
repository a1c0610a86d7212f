#include "fourier.hpp"

#include <numeric>

#include "gelfand.hpp"

namespace zcross {

GroupAlgebra<CyclotomicScalar> cyclotomic_group_algebra(unsigned modulus) {
  if (modulus == 0) throw Error(ErrorCode::InvalidArgument, "group modulus must be positive");
  return {modulus, CyclotomicScalar::root_of_unity(modulus)};
}

GroupAlgebra<GaussianRational> gaussian_group_algebra(unsigned modulus) {
  switch (modulus) {
    case 1: return {1, GaussianRational(1)};
    case 2: return {2, GaussianRational(-1)};
    case 4: return {4, GaussianRational::i()};
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "Q(i) only contains roots of unity for N in {1, 2, 4}");
  }
}

std::vector<size_t> affine_permutation(unsigned modulus, const AffineDualMap& map) {
  if (std::gcd(map.unit % modulus, modulus) != 1)
    throw Error(ErrorCode::NotBijective,
                "multiplier " + std::to_string(map.unit) + " is not a unit mod " +
                    std::to_string(modulus));
  std::vector<size_t> p(modulus);
  for (unsigned g = 0; g < modulus; ++g)
    p[g] = (map.shift + static_cast<unsigned long long>(map.unit) * g) % modulus;
  return p;
}

std::vector<size_t> piecewise_permutation(
    unsigned modulus,
    const std::vector<std::pair<std::vector<size_t>, AffineDualMap>>& pieces) {
  std::vector<size_t> p(modulus, modulus);
  std::vector<bool> covered(modulus, false);
  for (const auto& [set, map] : pieces) {
    for (size_t g : set) {
      if (g >= modulus || covered[g])
        throw Error(ErrorCode::NotBijective, "piecewise pieces must be disjoint subsets of Z_N");
      covered[g] = true;
      p[g] = (map.shift + static_cast<unsigned long long>(map.unit) * g) % modulus;
    }
  }
  for (unsigned g = 0; g < modulus; ++g)
    if (!covered[g])
      throw Error(ErrorCode::NotBijective, "piecewise pieces must cover Z_N");
  // bijectivity of the assembled map
  GroupAlgebra<GaussianRational>::inverse_permutation(p, modulus);
  return p;
}

std::vector<size_t> disco_dual_map(unsigned modulus) {
  if (modulus == 0 || modulus % 2 != 0)
    throw Error(ErrorCode::NIsOdd, "the disconnected-dual analog needs an even modulus");
  std::vector<size_t> p(modulus);
  for (unsigned g = 0; g < modulus; ++g) p[g] = g % 2 == 0 ? g : (g + 2) % modulus;
  return p;
}

namespace {

unsigned long long permutation_order(const std::vector<size_t>& p) {
  unsigned long long order = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    unsigned long long len = 0;
    size_t y = x;
    do {
      seen[y] = true;
      y = p[y];
      ++len;
    } while (y != x);
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<size_t> permutation_power(const std::vector<size_t>& p, unsigned long long k) {
  std::vector<size_t> out(p.size());
  std::iota(out.begin(), out.end(), size_t{0});
  for (unsigned long long s = 0; s < k; ++s)
    for (size_t x = 0; x < out.size(); ++x) out[x] = p[out[x]];
  return out;
}

bool is_identity(const std::vector<size_t>& p) {
  for (size_t x = 0; x < p.size(); ++x)
    if (p[x] != x) return false;
  return true;
}

}  // namespace

DualSystemReport dual_system_analysis(unsigned modulus, const std::vector<size_t>& dual_map,
                                      long long window, unsigned root_bound) {
  DualSystemReport report;
  report.modulus = modulus;
  report.window = window;
  report.dual_map = dual_map;
  report.dual_map_order = permutation_order(dual_map);

  GroupAlgebra<CyclotomicScalar> ga = cyclotomic_group_algebra(modulus);
  Matrix<CyclotomicScalar> st = ga.dual_induced_automorphism(dual_map);
  report.automorphism_verified = ga.is_convolution_automorphism(st);

  // Transport to the function algebra on the dual: FT . sigma_tilde . IFT
  // must be precomposition with the inverse dual map, an exact 0/1 matrix.
  std::vector<size_t> inv = GroupAlgebra<CyclotomicScalar>::inverse_permutation(dual_map, modulus);
  report.transport_verified = true;
  QMatrix transported(modulus, modulus, GaussianRational{});
  for (unsigned g = 0; g < modulus; ++g) {
    Vec<CyclotomicScalar> delta(modulus, CyclotomicScalar::zero_like(ga.omega));
    delta[g] = CyclotomicScalar::one_like(ga.omega);
    Vec<CyclotomicScalar> image = ga.fourier(mat_vec(st, ga.inverse_fourier(delta)));
    for (unsigned y = 0; y < modulus; ++y) {
      const CyclotomicScalar& v = image[y];
      bool expected_one = inv[y] == g;
      if (!v.is_rational() || v.rational_value() != (expected_one ? 1 : 0)) {
        report.transport_verified = false;
      } else {
        transported.at(y, g) = GaussianRational(expected_one ? 1 : 0);
      }
    }
  }
  if (!report.transport_verified)
    throw Error(ErrorCode::InternalInvariantViolation,
                "transported automorphism is not the expected dual permutation");

  // Dual-side crossed product: the full function algebra on the dual points
  // with the dual map as the point dynamics.
  auto dual_system = DynSystem::finite(dual_map);
  std::vector<QVec> indicators;
  indicators.reserve(modulus);
  for (unsigned g = 0; g < modulus; ++g) indicators.push_back(dual_system->delta(g));
  CrossedContext ctx(SubAlgebra::from_basis(dual_system, indicators), root_bound);

  report.commutant = ctx.commutant_basis(window);
  report.commutant_oracle = ctx.commutant_basis_oracle(window);
  report.oracle_agrees = report.commutant == report.commutant_oracle;
  if (!report.oracle_agrees)
    throw Error(ErrorCode::InternalInvariantViolation,
                "dual-side commutant disagrees with its oracle");
  report.maximality = ctx.is_maximal_abelian();

  // Pull each dual-side basis back to the convolution side. The inverse
  // transform of a rational function on the dual has cyclotomic coefficients.
  for (const auto& [n, rows] : report.commutant) {
    std::vector<Vec<CyclotomicScalar>> group_rows;
    group_rows.reserve(rows.size());
    for (const QVec& row : rows) {
      Vec<CyclotomicScalar> hat;
      hat.reserve(modulus);
      for (const GaussianRational& v : row) {
        if (!v.is_real())
          throw Error(ErrorCode::InternalInvariantViolation,
                      "dual-side basis left the rational span");
        hat.push_back(CyclotomicScalar::from_rational(modulus, v.re()));
      }
      group_rows.push_back(ga.inverse_fourier(hat));
    }
    report.commutant_group_side.emplace(n, std::move(group_rows));
  }

  // Round trip through the character space: the transported automorphism,
  // fed to the Gelfand machinery as a plain algebra automorphism, must induce
  // the dual map itself on Delta(hat A).
  {
    CharacterSpace cs = character_space(ctx.algebra());
    // rows of the automorphism on the (indicator) basis
    QMatrix on_basis(0, modulus, GaussianRational{});
    for (unsigned j = 0; j < modulus; ++j) {
      QVec image(modulus, GaussianRational{});
      for (unsigned y = 0; y < modulus; ++y) image[y] = transported.at(y, j);
      auto coords = ctx.algebra().coordinates(image);
      if (!coords)
        throw Error(ErrorCode::InternalInvariantViolation, "transported image escaped hat A");
      on_basis.append_row(*coords);
    }
    std::vector<size_t> induced = induced_permutation(cs, ctx.algebra(), on_basis);
    // characters of the full algebra are the point evaluations in point order
    std::vector<size_t> induced_on_points(modulus, 0);
    for (unsigned i = 0; i < modulus; ++i)
      induced_on_points[cs.representatives[i]] = cs.representatives[induced[i]];
    report.roundtrip_is_dual_map = induced_on_points == dual_map;
  }

  // Support structure per degree: oracle coefficients must vanish off
  // Per^n(dual map); on top of that, record whether they live on the even
  // characters (the disconnected-dual reading).
  report.support_condition_holds = true;
  for (long long n = -window; n <= window; ++n) {
    if (n == 0) continue;
    DualSupportRow row;
    row.degree = n;
    unsigned long long reduced = static_cast<unsigned long long>(n < 0 ? -n : n) %
                                 report.dual_map_order;
    row.periodic = is_identity(permutation_power(dual_map, reduced));
    const std::vector<QVec>& basis = report.commutant_oracle[n];
    row.dimension = basis.size();
    std::vector<size_t> pn = permutation_power(dual_map, reduced);
    for (const QVec& v : basis) {
      for (unsigned g = 0; g < modulus; ++g) {
        if (pn[g] != g && !v[g].is_zero()) row.support_in_per = false;
        if (g % 2 == 1 && !v[g].is_zero()) row.even_support = false;
      }
    }
    report.support_condition_holds = report.support_condition_holds && row.support_in_per;
    report.support.push_back(row);
  }

  report.notes.push_back(
      "composition convention: (sigma_tilde f)^ = hat f o m^{-1}, under which the induced "
      "homeomorphism of the character space recovers m itself");
  if (report.dual_map_order <= static_cast<unsigned long long>(window))
    report.notes.push_back(
        "the dual map has finite order " + std::to_string(report.dual_map_order) +
        "; degrees divisible by it carry the full coefficient space, a finite-order artifact "
        "with no counterpart on an infinite dual");
  return report;
}

DualSystemReport disco_analog(unsigned modulus, long long window, unsigned root_bound) {
  std::vector<size_t> m = disco_dual_map(modulus);
  DualSystemReport report = dual_system_analysis(modulus, m, window, root_bound);
  report.notes.push_back(
      "dual map fixes even characters and shifts odd characters by two; away from the "
      "periodic degrees every commutant coefficient is supported on the even characters, "
      "the exact analog of the infinite disconnected-dual picture where that holds at "
      "every nonzero degree");
  return report;
}

}  // namespace zcross
