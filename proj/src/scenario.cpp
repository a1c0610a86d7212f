#include "scenario.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gelfand.hpp"

namespace zcross {

namespace {

// ---------------------------------------------------------------- JSON bits

Json vec_to_json(const QVec& v) {
  Json arr = Json::array();
  for (const GaussianRational& c : v) arr.push_back(c.str());
  return arr;
}

Json rows_to_json(const std::vector<QVec>& rows) {
  Json arr = Json::array();
  for (const QVec& r : rows) arr.push_back(vec_to_json(r));
  return arr;
}

Json pointset_to_json(const PointSet& s) {
  Json out;
  switch (s.kind()) {
    case PointSet::Kind::All:
      out["kind"] = "all";
      break;
    case PointSet::Kind::Empty:
      out["kind"] = "empty";
      break;
    case PointSet::Kind::FiniteMask: {
      out["kind"] = "points";
      Json pts = Json::array();
      for (size_t x = 0; x < s.mask().size(); ++x)
        if (s.mask()[x]) pts.push_back(x);
      out["points"] = std::move(pts);
      break;
    }
    case PointSet::Kind::AllButRoots: {
      out["kind"] = "all_but_circle_roots";
      Json p = Json::array();
      for (const GaussianRational& c : s.poly()) p.push_back(c.str());
      out["excluded_poly"] = std::move(p);
      break;
    }
    case PointSet::Kind::RootsOnly: {
      out["kind"] = "circle_roots";
      Json p = Json::array();
      for (const GaussianRational& c : s.poly()) p.push_back(c.str());
      out["poly"] = std::move(p);
      break;
    }
  }
  return out;
}

Json degree_basis_to_json(const DegreeBasis& basis) {
  Json out = Json::object();
  for (const auto& [n, rows] : basis) out[std::to_string(n)] = rows_to_json(rows);
  return out;
}

Json degree_dims_to_json(const DegreeBasis& basis) {
  Json out = Json::object();
  for (const auto& [n, rows] : basis) out[std::to_string(n)] = rows.size();
  return out;
}

Json maximality_to_json(const MaximalityResult& m) {
  Json out;
  out["decision"] = m.decision;
  if (m.failing_degree) out["failing_degree"] = *m.failing_degree;
  if (m.witness) out["witness"] = vec_to_json(*m.witness);
  if (m.decision) out["verified_degrees"] = Json::array({1, m.checked_max});
  out["notes"] = m.notes;
  return out;
}

// ---------------------------------------------------------------- parsing

[[noreturn]] void schema_fail(const std::string& what) {
  throw Error(ErrorCode::SchemaError, what);
}

// re-tag validation failures from lower layers as schema errors, without
// stacking code prefixes
[[noreturn]] void schema_wrap(const Error& e) {
  std::string msg = e.what();
  size_t colon = msg.find(": ");
  schema_fail(colon == std::string::npos ? msg : msg.substr(colon + 2));
}

GaussianRational parse_scalar_json(const Json& v) {
  if (v.is_number_integer()) return GaussianRational(v.get<long long>());
  if (v.is_string()) return parse_gaussian(v.get<std::string>());
  schema_fail("scalars must be integers or strings like \"3/5+4/5*i\"");
}

QVec parse_vector_json(const Json& v, size_t expected_dim) {
  if (!v.is_array()) schema_fail("expected an array for a coefficient vector");
  QVec out;
  out.reserve(v.size());
  for (const Json& c : v) out.push_back(parse_scalar_json(c));
  if (out.size() != expected_dim)
    schema_fail("vector has length " + std::to_string(out.size()) + ", expected " +
                std::to_string(expected_dim));
  return out;
}

std::shared_ptr<const DynSystem> parse_system(const Json& doc) {
  if (!doc.is_object() || !doc.contains("type")) schema_fail("system needs a \"type\"");
  std::string type = doc.at("type").get<std::string>();
  if (type == "finite") {
    if (!doc.contains("sigma") || !doc.at("sigma").is_array())
      schema_fail("finite system needs a \"sigma\" permutation array");
    std::vector<size_t> sigma;
    for (const Json& v : doc.at("sigma")) {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        schema_fail("sigma entries must be non-negative point indices");
      sigma.push_back(v.get<size_t>());
    }
    if (doc.contains("size") && doc.at("size").get<size_t>() != sigma.size())
      schema_fail("\"size\" disagrees with the length of \"sigma\"");
    std::vector<std::string> labels;
    if (doc.contains("labels"))
      for (const Json& l : doc.at("labels")) labels.push_back(l.get<std::string>());
    try {
      return DynSystem::finite(std::move(sigma), std::move(labels));
    } catch (const Error& e) {
      schema_wrap(e);
    }
  }
  if (type == "rotation") {
    if (!doc.contains("zeta") || !doc.contains("window"))
      schema_fail("rotation system needs \"zeta\" and \"window\"");
    GaussianRational zeta = parse_scalar_json(doc.at("zeta"));
    long long window = doc.at("window").get<long long>();
    try {
      return DynSystem::rotation(std::move(zeta), static_cast<int>(window));
    } catch (const Error& e) {
      schema_wrap(e);
    }
  }
  schema_fail("unknown system type \"" + type + "\"");
}

std::vector<QVec> parse_generators(const Json& doc, const DynSystem& system) {
  std::vector<QVec> gens;
  if (doc.is_string()) {
    std::string named = doc.get<std::string>();
    if (named == "full") {
      if (system.is_finite()) {
        for (size_t x = 0; x < system.size(); ++x) gens.push_back(system.delta(x));
      } else {
        gens.push_back(system.constant_one());
        gens.push_back(system.delta(system.index_of_degree(1)));
        gens.push_back(system.delta(system.index_of_degree(-1)));
      }
      return gens;
    }
    if (named == "constants") {
      gens.push_back(system.constant_one());
      return gens;
    }
    schema_fail("named generator families are \"full\" and \"constants\"");
  }
  if (!doc.is_array() || doc.empty()) schema_fail("\"generators\" must be a non-empty array");
  for (const Json& g : doc) gens.push_back(parse_vector_json(g, system.dim()));
  return gens;
}

std::vector<size_t> parse_dual_map(const Json& doc, unsigned modulus) {
  if (!doc.is_object()) schema_fail("\"dual_map\" must be an object");
  try {
    if (doc.contains("affine")) {
      const Json& a = doc.at("affine");
      return affine_permutation(modulus, {a.value("a", 0u), a.value("u", 1u)});
    }
    if (doc.contains("piecewise")) {
      std::vector<std::pair<std::vector<size_t>, AffineDualMap>> pieces;
      for (const Json& piece : doc.at("piecewise")) {
        if (!piece.is_array() || piece.size() != 2)
          schema_fail("each piecewise piece is a [set, affine] pair");
        std::vector<size_t> set;
        for (const Json& v : piece.at(0)) set.push_back(v.get<size_t>());
        const Json& a = piece.at(1);
        pieces.emplace_back(std::move(set), AffineDualMap{a.value("a", 0u), a.value("u", 1u)});
      }
      return piecewise_permutation(modulus, pieces);
    }
    if (doc.contains("permutation")) {
      std::vector<size_t> p;
      for (const Json& v : doc.at("permutation")) p.push_back(v.get<size_t>());
      GroupAlgebra<GaussianRational>::inverse_permutation(p, modulus);
      return p;
    }
  } catch (const Error& e) {
    schema_wrap(e);
  }
  schema_fail("\"dual_map\" needs \"affine\", \"piecewise\" or \"permutation\"");
}

const std::vector<std::string> kAnalysisNames = {
    "cycles",  "sep_per",    "per_infinity", "commutant", "center",
    "maximal", "pairs",      "generators",   "gelfand",   "fourier"};

}  // namespace

Scenario parse_scenario(const Json& doc) {
  if (!doc.is_object()) schema_fail("scenario must be a JSON object");
  Scenario sc;
  sc.name = doc.value("name", std::string("scenario"));

  bool has_system = doc.contains("system");
  bool has_group = doc.contains("group");
  if (has_system == has_group)
    schema_fail("scenario needs exactly one of \"system\" (+\"generators\") or \"group\" (+\"dual_map\")");

  if (has_system) {
    sc.kind = Scenario::Kind::Dynamical;
    sc.system = parse_system(doc.at("system"));
    if (!doc.contains("generators")) schema_fail("dynamical scenario needs \"generators\"");
    sc.generators = parse_generators(doc.at("generators"), *sc.system);
  } else {
    sc.kind = Scenario::Kind::DualGroup;
    const Json& g = doc.at("group");
    if (!g.is_object() || !g.contains("cyclic"))
      schema_fail("\"group\" must be {\"cyclic\": N}");
    long long n = g.at("cyclic").get<long long>();
    if (n < 1) schema_fail("group modulus must be positive");
    sc.group_modulus = static_cast<unsigned>(n);
    if (!doc.contains("dual_map")) schema_fail("group scenario needs \"dual_map\"");
    sc.dual_map = parse_dual_map(doc.at("dual_map"), sc.group_modulus);
  }

  if (doc.contains("window")) {
    long long w = doc.at("window").get<long long>();
    if (w < 0) schema_fail("window must be non-negative");
    sc.window = w;
  }
  if (doc.contains("analysis")) {
    for (const Json& a : doc.at("analysis")) {
      std::string name = a.get<std::string>();
      if (std::find(kAnalysisNames.begin(), kAnalysisNames.end(), name) == kAnalysisNames.end())
        schema_fail("unknown analysis \"" + name + "\"");
      sc.analysis.push_back(std::move(name));
    }
  }
  return sc;
}

Scenario parse_scenario_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) schema_fail("scenario is not valid JSON");
  return parse_scenario(doc);
}

RunOptions parse_options_text(const std::string& text) {
  RunOptions opts;
  if (text.empty()) return opts;
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) schema_fail("options are not a JSON object");
  if (doc.contains("window")) opts.window = doc.at("window").get<long long>();
  if (doc.contains("oracle_only")) opts.oracle_only = doc.at("oracle_only").get<bool>();
  if (doc.contains("seed")) opts.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("root_bound")) opts.root_bound = doc.at("root_bound").get<unsigned>();
  if (doc.contains("sample_pairs")) opts.sample_pairs = doc.at("sample_pairs").get<unsigned>();
  return opts;
}

// ---------------------------------------------------------------- demos

namespace {

struct Demo {
  const char* name;
  const char* description;
  const char* json;
};

const Demo kDemos[] = {
    {"irrot-qtorus",
     "rotation by the non-root-of-unity (3+4i)/5 on the full Laurent window: the exact "
     "quantum-torus picture, maximal abelian",
     R"({"name":"irrot-qtorus","system":{"type":"rotation","zeta":"3/5+4/5*i","window":8},"generators":"full"})"},
    {"ratrot",
     "shift on Z_5 with the full function algebra: commutant lives on degrees divisible "
     "by 5, not maximal abelian",
     R"({"name":"ratrot","system":{"type":"finite","size":5,"sigma":[1,2,3,4,0]},"generators":"full"})"},
    {"smallalg",
     "constants over an aperiodic rotation: the crossed product is commutative and C is "
     "not maximal abelian in it",
     R"({"name":"smallalg","system":{"type":"rotation","zeta":"3/5+4/5*i","window":8},"generators":"constants"})"},
    {"addpt",
     "5-cycle plus a fixed point, functions vanishing at the fixed point",
     R"({"name":"addpt","system":{"type":"finite","size":6,"sigma":[1,2,3,4,0,5],"labels":["0","1","2","3","4","*"]},"generators":[["1","0","0","0","0","0"]]})"},
    {"dualc",
     "character space of the constants: a single character, no non-periodic points",
     R"({"name":"dualc","system":{"type":"finite","size":3,"sigma":[1,2,0]},"generators":"constants","analysis":["gelfand"]})"},
    {"dualaddpt",
     "character space of the addpt algebra: five characters carrying a 5-cycle",
     R"({"name":"dualaddpt","system":{"type":"finite","size":6,"sigma":[1,2,3,4,0,5],"labels":["0","1","2","3","4","*"]},"generators":[["1","0","0","0","0","0"]],"analysis":["gelfand"]})"},
    {"disco",
     "group algebra of Z_8 twisted by the fix-evens/shift-odds dual map: disconnected "
     "dual, not maximal abelian, commutant supported on even characters away from the "
     "periodic degrees",
     R"({"name":"disco","group":{"cyclic":8},"dual_map":{"piecewise":[[[0,2,4,6],{"a":0,"u":1}],[[1,3,5,7],{"a":2,"u":1}]]},"window":4})"},
    {"threecycle",
     "3-cycle with the full function algebra",
     R"({"name":"threecycle","system":{"type":"finite","size":3,"sigma":[1,2,0]},"generators":"full"})"},
    {"singleton",
     "one fixed point with A = C: the crossed product is the Laurent polynomial ring; this "
     "is also the only configuration where a separating algebra makes every non-empty "
     "subset both dense and a domain of uniqueness",
     R"({"name":"singleton","system":{"type":"finite","size":1,"sigma":[0]},"generators":"constants"})"},
};

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const Demo& d : kDemos) n.push_back(d.name);
    return n;
  }();
  return names;
}

Json demo_scenario(const std::string& name) {
  for (const Demo& d : kDemos)
    if (name == d.name) {
      Json doc = Json::parse(d.json);
      doc["description"] = d.description;
      return doc;
    }
  schema_fail("unknown demo \"" + name + "\"; try `demos` for the list");
}

// ---------------------------------------------------------------- running

namespace {

bool wants(const Scenario& sc, const std::string& section) {
  if (sc.analysis.empty()) return true;
  return std::find(sc.analysis.begin(), sc.analysis.end(), section) != sc.analysis.end();
}

long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

GaussianRational random_scalar(std::mt19937_64& rng) {
  Rational re(rand_range(rng, -3, 3), rand_range(rng, 1, 2));
  Rational im(rand_range(rng, -2, 2), rand_range(rng, 1, 2));
  return {re, im};
}

// Rotation products must stay inside the degree window; restricting sampled
// coefficients to the half window keeps every pairwise product representable.
DegreeBasis sampleable_basis(const CrossedContext& ctx, const DegreeBasis& basis) {
  const DynSystem& sys = ctx.system();
  if (sys.is_finite()) return basis;
  int half = sys.window() / 2;
  DegreeBasis out;
  for (const auto& [n, rows] : basis) {
    std::vector<QVec> kept;
    for (const QVec& row : rows) {
      bool inside = true;
      for (size_t idx = 0; idx < row.size(); ++idx)
        if (!row[idx].is_zero() && std::llabs(sys.degree_of_index(idx)) > half) inside = false;
      if (inside) kept.push_back(row);
    }
    out[n] = std::move(kept);
  }
  return out;
}

// Random element of the span described by a DegreeBasis, at most three terms.
CrossedElement random_span_element(std::mt19937_64& rng, const CrossedContext& ctx,
                                   const DegreeBasis& basis) {
  std::vector<long long> degrees;
  for (const auto& [n, rows] : basis)
    if (!rows.empty()) degrees.push_back(n);
  std::map<long long, QVec> terms;
  if (degrees.empty()) return {};
  long long n_terms = rand_range(rng, 1, 3);
  for (long long t = 0; t < n_terms; ++t) {
    long long deg = degrees[static_cast<size_t>(rand_range(rng, 0, degrees.size() - 1))];
    const std::vector<QVec>& rows = basis.at(deg);
    QVec coeff(ctx.algebra().ambient_dim(), GaussianRational{});
    for (const QVec& row : rows) coeff = vec_add(coeff, vec_scale(row, random_scalar(rng)));
    auto it = terms.find(deg);
    if (it == terms.end()) terms.emplace(deg, std::move(coeff));
    else it->second = vec_add(it->second, coeff);
  }
  return ctx.element(std::move(terms));
}

Json mismatch_dump(long long degree, const std::vector<QVec>& theorem,
                   const std::vector<QVec>& oracle) {
  Json dump;
  dump["degree"] = degree;
  dump["theorem"] = rows_to_json(theorem);
  dump["oracle"] = rows_to_json(oracle);
  return dump;
}

void require_equal_bases(const std::string& what, const DegreeBasis& theorem,
                         const DegreeBasis& oracle) {
  for (const auto& [n, rows] : theorem) {
    const std::vector<QVec>& other = oracle.at(n);
    if (rows != other)
      throw Error(ErrorCode::InternalInvariantViolation,
                  what + " disagrees with its oracle at degree " + std::to_string(n),
                  mismatch_dump(n, rows, other).dump());
  }
}

Json system_to_json(const DynSystem& sys) {
  Json out;
  if (sys.is_finite()) {
    out["type"] = "finite";
    out["size"] = sys.size();
    out["sigma"] = sys.sigma();
    out["labels"] = sys.labels();
  } else {
    out["type"] = "rotation";
    out["zeta"] = sys.zeta().str();
    out["window"] = sys.window();
  }
  return out;
}

Json run_dynamical(const Scenario& sc, const RunOptions& opts, Json& report) {
  const DynSystem& sys = *sc.system;
  SubAlgebra algebra = SubAlgebra::closure(sc.system, sc.generators);
  CrossedContext ctx(algebra, opts.root_bound);

  long long window;
  if (sys.is_finite()) {
    long long order = static_cast<long long>(sys.sigma_order());
    window = opts.window ? *opts.window : (sc.window ? *sc.window : order + 2);
    if (window < order)
      schema_fail("window " + std::to_string(window) + " is below order(sigma) = " +
                  std::to_string(order));
  } else {
    window = opts.window ? *opts.window : (sc.window ? *sc.window : sys.window());
    if (window > sys.window())
      schema_fail("window " + std::to_string(window) + " exceeds the rotation degree window " +
                  std::to_string(sys.window()));
  }

  Json alg;
  alg["dim"] = algebra.dim();
  alg["ambient_dim"] = algebra.ambient_dim();
  Json basis_rows = Json::array();
  for (size_t j = 0; j < algebra.dim(); ++j) basis_rows.push_back(vec_to_json(algebra.basis_row(j)));
  alg["basis"] = std::move(basis_rows);
  alg["invariant"] = true;  // closure output is invariant by construction
  std::optional<QVec> unit = algebra.unit();
  alg["unital"] = unit.has_value();
  if (unit) alg["unit"] = vec_to_json(*unit);
  report["algebra"] = std::move(alg);

  Json assumptions = Json::array();
  if (!sys.is_finite()) {
    std::optional<unsigned> q = sys.zeta_order(opts.root_bound);
    if (q)
      assumptions.push_back("zeta is a root of unity of order " + std::to_string(*q));
    else
      assumptions.push_back("zeta^n != 1 verified exactly for 1 <= n <= " +
                            std::to_string(opts.root_bound));
  }
  report["assumptions"] = std::move(assumptions);

  if (sys.is_finite() && wants(sc, "cycles")) {
    CycleDecomposition cd = cycle_decomposition(sys);
    Json cycles = Json::array();
    for (const auto& c : cd.cycles) cycles.push_back(c);
    report["cycles"] = Json{{"cycles", std::move(cycles)}, {"order", cd.order}};
  }

  if (wants(sc, "sep_per")) {
    long long display = sys.is_finite() ? static_cast<long long>(sys.sigma_order()) : window;
    Json rows = Json::array();
    for (long long n = 1; n <= display; ++n) {
      SepPer sp = sep_sets(algebra, n);
      Json row;
      row["n"] = n;
      row["sep"] = pointset_to_json(sp.sep);
      row["per"] = pointset_to_json(sp.per);
      rows.push_back(std::move(row));
    }
    report["sep_per"] = std::move(rows);
  }

  if (wants(sc, "per_infinity"))
    report["per_infinity"] = pointset_to_json(per_infinity(algebra, opts.root_bound));

  DegreeBasis commutant_oracle = ctx.commutant_basis_oracle(window);
  std::optional<DegreeBasis> commutant;
  if (wants(sc, "commutant")) {
    Json section;
    section["window"] = window;
    if (!opts.oracle_only) {
      commutant = ctx.commutant_basis(window);
      require_equal_bases("commutant", *commutant, commutant_oracle);
      section["theorem"] = degree_basis_to_json(*commutant);
    }
    section["oracle"] = degree_basis_to_json(commutant_oracle);
    section["dims"] = degree_dims_to_json(commutant_oracle);
    if (!opts.oracle_only) section["equal"] = true;
    report["commutant"] = std::move(section);
  }

  if (wants(sc, "center")) {
    DegreeBasis center_oracle = ctx.center_basis_oracle(window);
    Json section;
    section["window"] = window;
    if (!opts.oracle_only) {
      DegreeBasis center = ctx.center_basis(window);
      require_equal_bases("center", center, center_oracle);
      section["theorem"] = degree_basis_to_json(center);
    }
    section["oracle"] = degree_basis_to_json(center_oracle);
    section["dims"] = degree_dims_to_json(center_oracle);
    if (!opts.oracle_only) section["equal"] = true;
    report["center"] = std::move(section);
  }

  if (wants(sc, "maximal")) {
    MaximalityResult mx = ctx.is_maximal_abelian();
    // Cross-check against the commutant picture within the window: a maximal
    // A leaves nothing outside degree zero, and a failing degree inside the
    // window must show up as a nonzero coefficient space.
    if (mx.decision) {
      for (const auto& [n, rows] : commutant_oracle)
        if (n != 0 && !rows.empty())
          throw Error(ErrorCode::InternalInvariantViolation,
                      "maximal verdict but the commutant is nonzero at degree " +
                          std::to_string(n));
    } else if (*mx.failing_degree <= window) {
      if (commutant_oracle.at(*mx.failing_degree).empty())
        throw Error(ErrorCode::InternalInvariantViolation,
                    "witness degree has an empty commutant coefficient space");
    }
    report["maximal"] = maximality_to_json(mx);
  }

  if (wants(sc, "pairs")) {
    std::mt19937_64 rng(opts.seed);
    DegreeBasis pool = sampleable_basis(ctx, commutant_oracle);
    unsigned count = opts.sample_pairs;
    for (unsigned t = 0; t < count; ++t) {
      CrossedElement f = random_span_element(rng, ctx, pool);
      CrossedElement g = random_span_element(rng, ctx, pool);
      if (!ctx.commutes(f, g))
        throw Error(ErrorCode::InternalInvariantViolation,
                    "two commutant elements fail to commute; the commutant must be abelian",
                    Json{{"seed", opts.seed}, {"pair", t}}.dump());
    }
    report["commuting_pairs"] = Json{{"sampled", count}, {"all_commute", true}};
  }

  if (sys.is_finite() && wants(sc, "generators") && algebra.unit()) {
    unsigned long long n0 = ctx.automorphism_order();
    std::vector<CrossedElement> gens = ctx.extract_commutant_generators();
    long long gen_window = static_cast<long long>(2 * sys.sigma_order());
    DegreeBasis closure = ctx.generated_span(gens, gen_window);
    DegreeBasis expected = ctx.commutant_basis(gen_window);
    Json section;
    section["n0"] = n0;
    section["count"] = gens.size();
    Json elements = Json::array();
    for (const CrossedElement& g : gens) {
      Json terms = Json::object();
      for (const auto& [deg, coeff] : g.terms()) terms[std::to_string(deg)] = vec_to_json(coeff);
      elements.push_back(Json{{"terms", std::move(terms)}});
    }
    section["elements"] = std::move(elements);
    section["closure_window"] = gen_window;
    bool matches = closure == expected;
    if (!matches)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "generated span does not reproduce the commutant");
    section["closure_matches_commutant"] = true;
    report["generators"] = std::move(section);
  }

  if (sys.is_finite() && wants(sc, "gelfand")) {
    GelfandIsomorphism phi(ctx);
    const CharacterSpace& cs = phi.characters();
    Json section;
    section["characters"] = cs.count();
    Json reps = Json::array();
    for (size_t rep : cs.representatives) reps.push_back(sys.labels()[rep]);
    section["representatives"] = std::move(reps);
    {
      Json rows = Json::array();
      for (size_t i = 0; i < cs.count(); ++i) rows.push_back(vec_to_json(cs.rows.row(i)));
      section["character_vectors"] = std::move(rows);
    }
    section["induced_sigma"] = cs.induced_sigma;

    unsigned long long induced_order = 1;
    {
      std::vector<size_t> p = cs.induced_sigma;
      std::vector<size_t> acc = p;
      auto is_id = [](const std::vector<size_t>& q) {
        for (size_t i = 0; i < q.size(); ++i)
          if (q[i] != i) return false;
        return true;
      };
      while (!is_id(acc)) {
        for (size_t i = 0; i < acc.size(); ++i) acc[i] = p[acc[i]];
        ++induced_order;
      }
    }
    section["induced_order"] = induced_order;
    if (induced_order != ctx.automorphism_order())
      throw Error(ErrorCode::InternalInvariantViolation,
                  "induced permutation order differs from the automorphism order");

    std::mt19937_64 rng(opts.seed + 1);
    bool preserved = true;
    // random elements of the crossed product itself: any A coefficient on
    // degrees -2..2
    DegreeBasis everything;
    for (long long n = -2; n <= 2; ++n) everything[n] = ctx.commutant_coefficients(0);
    for (unsigned t = 0; t < opts.sample_pairs; ++t) {
      CrossedElement f = random_span_element(rng, ctx, everything);
      CrossedElement g = random_span_element(rng, ctx, everything);
      if (phi.map(ctx.multiply(f, g)) !=
          phi.image_context().multiply(phi.map(f), phi.map(g))) {
        preserved = false;
        break;
      }
    }
    if (!preserved)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "Gelfand isomorphism failed to preserve a product");
    section["product_pairs"] = opts.sample_pairs;
    section["products_preserved"] = true;

    DegreeBasis image_commutant = phi.image_context().commutant_basis(window);
    Json dims_src = degree_dims_to_json(commutant ? *commutant : ctx.commutant_basis(window));
    Json dims_img = degree_dims_to_json(image_commutant);
    bool dims_equal = dims_src == dims_img;
    if (!dims_equal)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "commutant dimensions differ across the Gelfand isomorphism");
    section["commutant_dims_source"] = std::move(dims_src);
    section["commutant_dims_image"] = std::move(dims_img);
    section["commutant_dims_equal"] = true;

    MaximalityResult mx_src = ctx.is_maximal_abelian();
    MaximalityResult mx_img = phi.image_context().is_maximal_abelian();
    section["maximal_source"] = mx_src.decision;
    section["maximal_image"] = mx_img.decision;
    if (mx_src.decision != mx_img.decision)
      throw Error(ErrorCode::InternalInvariantViolation,
                  "maximality verdict changed across the Gelfand isomorphism");
    section["maximal_agree"] = true;
    report["gelfand"] = std::move(section);
  }

  return report;
}

Json run_dual_group(const Scenario& sc, const RunOptions& opts, Json& report) {
  long long window = opts.window ? *opts.window : (sc.window ? *sc.window : 4);
  DualSystemReport r = dual_system_analysis(sc.group_modulus, sc.dual_map, window,
                                            opts.root_bound);
  Json section;
  section["modulus"] = r.modulus;
  section["window"] = r.window;
  section["dual_map"] = r.dual_map;
  section["dual_map_order"] = r.dual_map_order;
  section["automorphism_verified"] = r.automorphism_verified;
  section["transport_verified"] = r.transport_verified;
  section["roundtrip_is_dual_map"] = r.roundtrip_is_dual_map;
  if (!r.roundtrip_is_dual_map)
    throw Error(ErrorCode::InternalInvariantViolation,
                "character-space round trip does not recover the dual map");
  if (!opts.oracle_only) section["commutant"] = degree_basis_to_json(r.commutant);
  section["commutant_oracle"] = degree_basis_to_json(r.commutant_oracle);
  {
    // group-algebra side of the same spaces, with cyclotomic coefficients
    Json group_side = Json::object();
    for (const auto& [n, rows] : r.commutant_group_side) {
      Json list = Json::array();
      for (const auto& row : rows) {
        Json element = Json::array();
        for (const CyclotomicScalar& c : row) {
          Json coeffs = Json::array();
          for (const Rational& q : c.coeffs()) coeffs.push_back(rational_str(q));
          element.push_back(Json{{"modulus", c.modulus()}, {"coeffs", std::move(coeffs)}});
        }
        list.push_back(std::move(element));
      }
      group_side[std::to_string(n)] = std::move(list);
    }
    section["commutant_group_side"] = std::move(group_side);
  }
  section["dims"] = degree_dims_to_json(r.commutant_oracle);
  section["oracle_equal"] = r.oracle_agrees;
  section["maximal"] = maximality_to_json(r.maximality);
  Json support = Json::array();
  for (const DualSupportRow& row : r.support) {
    support.push_back(Json{{"degree", row.degree},
                           {"periodic", row.periodic},
                           {"dimension", row.dimension},
                           {"support_in_per", row.support_in_per},
                           {"even_support", row.even_support}});
  }
  section["support"] = std::move(support);
  section["support_condition_holds"] = r.support_condition_holds;
  if (!r.support_condition_holds)
    throw Error(ErrorCode::InternalInvariantViolation,
                "a commutant coefficient has support outside its Per set");
  section["notes"] = r.notes;
  report["fourier"] = std::move(section);
  return report;
}

}  // namespace

Json run_scenario(const Scenario& sc, const RunOptions& opts) {
  Json report;
  report["version"] = 1;
  report["name"] = sc.name;
  report["options"] = Json{{"oracle_only", opts.oracle_only},
                           {"seed", opts.seed},
                           {"root_bound", opts.root_bound}};
  if (sc.kind == Scenario::Kind::Dynamical) {
    report["system"] = system_to_json(*sc.system);
    run_dynamical(sc, opts, report);
  } else {
    report["system"] = Json{{"type", "cyclic_group"}, {"modulus", sc.group_modulus}};
    run_dual_group(sc, opts, report);
  }
  report["status"] = "ok";
  return report;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string join_row(const Json& arr) {
  std::ostringstream oss;
  oss << "[";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) oss << ", ";
    oss << arr[i].get<std::string>();
  }
  oss << "]";
  return oss.str();
}

std::string pointset_text(const Json& ps) {
  std::string kind = ps.at("kind").get<std::string>();
  if (kind == "all") return "all";
  if (kind == "empty") return "empty";
  if (kind == "points") {
    std::ostringstream oss;
    oss << "{";
    const Json& pts = ps.at("points");
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) oss << ",";
      oss << pts[i].get<long long>();
    }
    oss << "}";
    return oss.str();
  }
  if (kind == "all_but_circle_roots")
    return "all but circle roots of " + join_row(ps.at("excluded_poly"));
  return "circle roots of " + join_row(ps.at("poly"));
}

void render_degree_table(std::ostringstream& out, const Json& section, bool has_theorem) {
  out << "  degree  dim";
  if (has_theorem) out << "  theorem==oracle";
  out << "\n";
  for (const auto& [key, dim] : section.at("dims").items()) {
    out << "  " << key;
    for (size_t pad = key.size(); pad < 6; ++pad) out << ' ';
    out << "  " << dim.get<size_t>();
    if (has_theorem) out << "    yes";
    out << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  out << "scenario: " << report.at("name").get<std::string>() << "\n";

  const Json& sys = report.at("system");
  std::string type = sys.at("type").get<std::string>();
  if (type == "finite") {
    out << "system: finite, |X| = " << sys.at("size").get<size_t>() << "\n";
  } else if (type == "rotation") {
    out << "system: rotation, zeta = " << sys.at("zeta").get<std::string>()
        << ", window = " << sys.at("window").get<long long>() << "\n";
  } else {
    out << "system: cyclic group Z_" << sys.at("modulus").get<unsigned>() << "\n";
  }

  if (report.contains("algebra")) {
    const Json& alg = report.at("algebra");
    out << "algebra: dim " << alg.at("dim").get<size_t>() << " inside dimension "
        << alg.at("ambient_dim").get<size_t>() << ", "
        << (alg.at("unital").get<bool>() ? "unital" : "not unital") << "\n";
  }
  if (report.contains("assumptions"))
    for (const Json& a : report.at("assumptions"))
      out << "assumption: " << a.get<std::string>() << "\n";

  if (report.contains("cycles")) {
    const Json& c = report.at("cycles");
    out << "cycles:";
    for (const Json& cyc : c.at("cycles")) {
      out << " (";
      for (size_t i = 0; i < cyc.size(); ++i) {
        if (i) out << " ";
        out << cyc[i].get<size_t>();
      }
      out << ")";
    }
    out << ", order = " << c.at("order").get<unsigned long long>() << "\n";
  }

  if (report.contains("sep_per")) {
    out << "Sep/Per:\n";
    for (const Json& row : report.at("sep_per"))
      out << "  n=" << row.at("n").get<long long>() << "  sep=" << pointset_text(row.at("sep"))
          << "  per=" << pointset_text(row.at("per")) << "\n";
  }
  if (report.contains("per_infinity"))
    out << "per_infinity (aperiodic points): " << pointset_text(report.at("per_infinity"))
        << "\n";

  if (report.contains("commutant")) {
    const Json& c = report.at("commutant");
    out << "commutant (window " << c.at("window").get<long long>() << ")"
        << (c.contains("equal") ? ", theorem == oracle" : ", oracle only") << ":\n";
    render_degree_table(out, c, c.contains("equal"));
  }
  if (report.contains("center")) {
    const Json& c = report.at("center");
    out << "center (window " << c.at("window").get<long long>() << ")"
        << (c.contains("equal") ? ", theorem == oracle" : ", oracle only") << ":\n";
    render_degree_table(out, c, c.contains("equal"));
  }

  if (report.contains("maximal")) {
    const Json& m = report.at("maximal");
    if (m.at("decision").get<bool>()) {
      out << "maximal abelian: YES, degrees verified 1.."
          << m.at("verified_degrees")[1].get<long long>() << "\n";
    } else {
      out << "maximal abelian: NO, witness degree "
          << m.at("failing_degree").get<long long>();
      if (m.contains("witness")) out << ", witness coefficient " << join_row(m.at("witness"));
      out << "\n";
    }
    for (const Json& n : m.at("notes")) out << "  note: " << n.get<std::string>() << "\n";
  }

  if (report.contains("commuting_pairs"))
    out << "commutant pair check: " << report.at("commuting_pairs").at("sampled").get<unsigned>()
        << " random pairs, all commute\n";

  if (report.contains("generators")) {
    const Json& g = report.at("generators");
    out << "commutant generators: n0 = " << g.at("n0").get<unsigned long long>() << ", "
        << g.at("count").get<size_t>() << " generators; closure within window "
        << g.at("closure_window").get<long long>() << " matches the commutant\n";
  }

  if (report.contains("gelfand")) {
    const Json& g = report.at("gelfand");
    out << "gelfand: |Delta(A)| = " << g.at("characters").get<size_t>() << ", induced order "
        << g.at("induced_order").get<unsigned long long>() << "\n";
    out << "  products preserved on " << g.at("product_pairs").get<unsigned>()
        << " random pairs; commutant dimensions equal across Phi; maximality "
        << (g.at("maximal_source").get<bool>() ? "YES" : "NO") << " on both sides\n";
  }

  if (report.contains("fourier")) {
    const Json& f = report.at("fourier");
    out << "dual group analysis: Z_" << f.at("modulus").get<unsigned>() << ", dual map order "
        << f.at("dual_map_order").get<unsigned long long>() << ", window "
        << f.at("window").get<long long>() << "\n";
    out << "  convolution automorphism verified: "
        << (f.at("automorphism_verified").get<bool>() ? "yes" : "NO")
        << "; transport exact: " << (f.at("transport_verified").get<bool>() ? "yes" : "NO")
        << "; character round trip recovers dual map: "
        << (f.at("roundtrip_is_dual_map").get<bool>() ? "yes" : "NO") << "\n";
    const Json& m = f.at("maximal");
    out << "  maximal abelian: " << (m.at("decision").get<bool>() ? "YES" : "NO");
    if (m.contains("failing_degree"))
      out << " (witness degree " << m.at("failing_degree").get<long long>() << ")";
    out << "\n";
    out << "  degree  periodic  dim  support(in Per / even)\n";
    for (const Json& row : f.at("support")) {
      std::string deg = std::to_string(row.at("degree").get<long long>());
      out << "  " << deg;
      for (size_t pad = deg.size(); pad < 6; ++pad) out << ' ';
      out << "  " << (row.at("periodic").get<bool>() ? "yes" : "no ") << "      "
          << row.at("dimension").get<size_t>() << "    "
          << (row.at("support_in_per").get<bool>() ? "yes" : "NO") << " / "
          << (row.at("even_support").get<bool>() ? "yes" : "no") << "\n";
    }
    for (const Json& n : f.at("notes")) out << "  note: " << n.get<std::string>() << "\n";
  }

  out << "status: " << report.at("status").get<std::string>() << "\n";
  return out.str();
}

}  // namespace zcross
