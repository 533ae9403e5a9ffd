#include "implode/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "implode/numgeom.hpp"

namespace implode {

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json face_to_json(const Face& f) {
  Json j = Json::array();
  for (int i : f.vanishing) j.push_back(i);
  return j;
}

Json weight_to_json(const Weight& w) {
  Json j = Json::array();
  for (Int c : w.fund) j.push_back(c);
  return j;
}

Weight weight_from_json(const Json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw std::invalid_argument("weight: expected an array of rank integers");
  Weight w;
  for (const auto& c : j) w.fund.push_back(c.get<Int>());
  return w;
}

Json smoothness_to_json(const Smoothness& s) {
  Json j;
  switch (s.cls) {
    case SmoothClass::Smooth:
      j["class"] = "smooth";
      j["k"] = s.k;
      break;
    case SmoothClass::OrbifoldOnly:
      j["class"] = "orbifold";
      j["k"] = s.k;
      j["order"] = s.order;
      break;
    case SmoothClass::Singular:
      j["class"] = "singular";
      break;
  }
  return j;
}

Json strata_report(const RootDatum& d) {
  Json j;
  j["schema_version"] = 1;
  j["group"] = d.name();
  Json arr = Json::array();
  for (const Stratum& s : universal_strata(d)) {
    Json e;
    e["face"] = face_to_json(s.face);
    e["real_dim"] = s.real_dim;
    e["orbit_type"] = s.orbit_type;
    e["stabilizer_complex_dim"] = s.stabilizer_complex_dim;
    e["smoothness"] = smoothness_to_json(s.smoothness);
    Json preds = Json::array();
    for (const Face& f : s.closure_preds) preds.push_back(face_to_json(f));
    e["closure_preds"] = preds;
    arr.push_back(e);
  }
  j["strata"] = arr;
  return j;
}

Json smooth_locus_report(const RootDatum& d) {
  Json j;
  j["schema_version"] = 1;
  j["group"] = d.name();
  Json arr = Json::array();
  for (const Face& f : enumerate_faces(d)) {
    Json e;
    e["face"] = face_to_json(f);
    e["smoothness"] = smoothness_to_json(classify_smoothness(d, f));
    e["levi_fundamental_group_order"] =
        d.levi_fundamental_group_order(f.vanishing);
    arr.push_back(e);
  }
  j["faces"] = arr;
  return j;
}

Json faces_report(const RootDatum& d) {
  Json j;
  j["schema_version"] = 1;
  j["group"] = d.name();
  Json arr = Json::array();
  for (const Face& f : enumerate_faces(d)) {
    Json e;
    e["face"] = face_to_json(f);
    e["dim"] = face_dim(d, f);
    Json st = Json::array();
    for (const Face& t : star(d, f)) st.push_back(face_to_json(t));
    e["star"] = st;
    arr.push_back(e);
  }
  j["faces"] = arr;
  return j;
}

Json describe_group_report(const RootDatum& d) {
  Json j;
  j["schema_version"] = 1;
  j["name"] = d.name();
  j["rank_ss"] = d.rank_ss();
  j["central_rank"] = d.central_rank();
  Json cartan = Json::array();
  for (int i = 0; i < d.rank_ss(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < d.rank_ss(); ++k) row.push_back(d.cartan()(i, k));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  j["positive_roots"] = d.positive_roots().size();
  j["dim_group"] =
      2 * d.positive_roots().size() + d.rank_ss() + d.central_rank();
  j["simply_connected_semisimple"] = d.is_simply_connected_semisimple();
  if (d.rank_ss() > 0) {
    Json dims = Json::array();
    for (int p = 0; p < d.rank_ss(); ++p) {
      Weight w;
      w.fund.assign(d.rank_ss(), 0);
      w.fund[p] = 1;
      dims.push_back(d.weyl_dimension(w));
    }
    j["fundamental_dims"] = dims;
  }
  return j;
}

Json character_to_json(const TCharacter& t) {
  Json arr = Json::array();
  for (const auto& [w, m] : t) {
    Json e;
    e["weight"] = weight_to_json(w);
    e["mult"] = m;
    arr.push_back(e);
  }
  return arr;
}

Json embedded_point_to_json(const EmbeddedPoint& v) {
  Json comps = Json::array();
  for (const auto& comp : v.components) {
    Json c = Json::array();
    for (Eigen::Index i = 0; i < comp.size(); ++i) {
      Json pair = Json::array();
      pair.push_back(round12(comp(i).real()));
      pair.push_back(round12(comp(i).imag()));
      c.push_back(pair);
    }
    comps.push_back(c);
  }
  return comps;
}

Json check_to_json(const CheckLine& c) {
  Json j;
  j["check_name"] = c.name;
  j["seed"] = c.seed;
  j["count"] = c.count;
  j["max_residual"] = round12(c.max_residual);
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  if (!std::isnan(c.min_value)) j["min_value"] = round12(c.min_value);
  return j;
}

namespace {

CheckLine residual_check(std::string name, std::uint64_t seed, int count,
                         double residual, double tol) {
  CheckLine c;
  c.name = std::move(name);
  c.seed = seed;
  c.count = count;
  c.max_residual = residual;
  c.tolerance = tol;
  c.pass = residual <= tol;
  return c;
}

CheckLine floor_check(std::string name, std::uint64_t seed, int count,
                      double value, double floor) {
  CheckLine c;
  c.name = std::move(name);
  c.seed = seed;
  c.count = count;
  c.min_value = value;
  c.max_residual = std::max(0.0, floor - value);
  c.tolerance = floor;
  c.pass = value > floor;
  return c;
}

double pick(double override_tol, double default_tol) {
  return override_tol > 0.0 ? override_tol : default_tol;
}

std::vector<CheckLine> suite_geometry(int n, std::uint64_t seed, int count,
                                      double tol) {
  std::vector<CheckLine> checks;
  checks.push_back(residual_check(
      "pullback_one_form", seed, count,
      check_pullback_one_form(n, seed, count), pick(tol, 1e-9)));
  checks.push_back(residual_check(
      "moment_compatibility", seed, count,
      check_moment_compatibility(n, seed, count), pick(tol, 1e-9)));
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(n - 1);
  checks.push_back(residual_check(
      "omega_product_form_base", seed, count,
      check_omega_product_form(n, seed, count, zero), pick(tol, 1e-8)));
  Eigen::VectorXd rho = Eigen::VectorXd::Ones(n - 1);
  checks.push_back(residual_check(
      "omega_product_form_rho", seed, count,
      check_omega_product_form(n, seed, count, rho), pick(tol, 1e-8)));
  return checks;
}

std::vector<CheckLine> suite_contact(std::uint64_t seed, int count,
                                     double tol) {
  std::vector<CheckLine> checks;
  auto c1 = contact_reeb_check_cn(1, -0.5, seed, count);
  checks.push_back(residual_check("contact_c1_dnu", seed, count, c1.dnu,
                                  pick(tol, 1e-10)));
  checks.push_back(
      residual_check("contact_c1_nu", seed, count, c1.nu, pick(tol, 1e-10)));
  auto c2 = contact_reeb_check_cn(2, -1.0, seed, count);
  checks.push_back(residual_check("contact_c2_dnu", seed, count, c2.dnu,
                                  pick(tol, 1e-10)));
  checks.push_back(
      residual_check("contact_c2_nu", seed, count, c2.nu, pick(tol, 1e-10)));
  checks.push_back(residual_check("contact_c2_reeb_hopf", seed, count, c2.reeb,
                                  pick(tol, 1e-10)));
  auto ct = contact_reeb_check_tsu2(-1.0, seed, count);
  checks.push_back(residual_check("contact_tsu2_dnu", seed, count, ct.dnu,
                                  pick(tol, 1e-9)));
  checks.push_back(
      residual_check("contact_tsu2_nu", seed, count, ct.nu, pick(tol, 1e-9)));
  return checks;
}

std::vector<CheckLine> suite_embedding(const RootDatum& d, int n,
                                       std::uint64_t seed, int count,
                                       double tol) {
  std::vector<CheckLine> checks;
  auto rng = seeded_rng(seed, "embedding_suite");

  double norm_res = 0.0;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd lambda = random_dominant_pairings(n - 1, rng);
    EmbeddedPoint v = embed_su_n(Eigen::MatrixXcd::Identity(n, n), lambda);
    norm_res = std::max(
        norm_res,
        std::abs(v.squared_norm() - lambda.sum() / std::numbers::pi));
  }
  checks.push_back(residual_check("section_norm_identity", seed, count,
                                  norm_res, pick(tol, 1e-12)));

  double equiv_res = 0.0;
  for (int i = 0; i < count; ++i) {
    Eigen::MatrixXcd k1 = sun::random_special_unitary(n, rng);
    Eigen::MatrixXcd k2 = sun::random_special_unitary(n, rng);
    Eigen::VectorXd lambda = random_dominant_pairings(n - 1, rng);
    EmbeddedPoint lhs = embed_su_n(k1 * k2, lambda);
    EmbeddedPoint rhs = exterior_action(k1, embed_su_n(k2, lambda));
    double res = 0.0;
    for (std::size_t p = 0; p < lhs.components.size(); ++p)
      res = std::max(res,
                     (lhs.components[p] - rhs.components[p]).norm());
    equiv_res = std::max(equiv_res, res);
  }
  checks.push_back(residual_check("embedding_equivariance", seed, count,
                                  equiv_res, pick(tol, 1e-10)));

  double tmom_res = 0.0;
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd lambda = random_dominant_pairings(n - 1, rng);
    EmbeddedPoint v = embed_su_n(Eigen::MatrixXcd::Identity(n, n), lambda);
    AmbientMoments m = ambient_moments(v, sun::su_basis(n)[0]);
    tmom_res = std::max(tmom_res, (m.t_moment + lambda).cwiseAbs().maxCoeff());
  }
  checks.push_back(residual_check("section_t_moment", seed, count, tmom_res,
                                  pick(tol, 1e-12)));

  // Points known inequivalent must stay separated in E.
  double min_gap = std::numeric_limits<double>::infinity();
  RootDatum sc = RootDatum::simple('A', n - 1, Isogeny::SimplyConnected);
  std::uniform_int_distribution<Int> coeff(0, 3);
  int tried = 0;
  while (tried < count) {
    Weight lambda;
    for (int p = 0; p + 1 < n; ++p) lambda.fund.push_back(coeff(rng));
    GroupPointSUn m1{sun::random_special_unitary(n, rng), lambda};
    GroupPointSUn m2{sun::random_special_unitary(n, rng), lambda};
    if (implode_equivalent_su_n(m1, m2)) continue;
    ++tried;
    EmbeddedPoint p1 = embed_su_n(m1.k, sc, lambda);
    EmbeddedPoint p2 = embed_su_n(m2.k, sc, lambda);
    double gap = 0.0;
    for (std::size_t p = 0; p < p1.components.size(); ++p)
      gap += (p1.components[p] - p2.components[p]).squaredNorm();
    min_gap = std::min(min_gap, std::sqrt(gap));
  }
  checks.push_back(
      floor_check("stratum_injectivity_gap", seed, count, min_gap, 1e-6));

  checks.push_back(floor_check("s1_action_min_speed", seed, count,
                               s1_locally_free_check(n, seed, count), 1e-6));

  Int stab_res = 0;
  for (const Face& f : enumerate_faces(d)) {
    StabilizerDims sd = v_sigma_stabilizer_dim(d, f, n);
    stab_res = std::max(stab_res, std::llabs(sd.computed - sd.expected));
  }
  checks.push_back(residual_check("stabilizer_dims", seed,
                                  1 << d.rank_ss(),
                                  static_cast<double>(stab_res), 0.0));

  checks.push_back(residual_check(
      "liouville_homogeneity", seed, count,
      liouville_homogeneity_residual(n, seed, count), pick(tol, 1e-12)));
  return checks;
}

std::vector<CheckLine> suite_quadric(std::uint64_t seed, int count,
                                     double tol) {
  auto rng = seeded_rng(seed, "quadric_suite");
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    Eigen::MatrixXcd k = sun::random_special_unitary(3, rng);
    Eigen::VectorXd lambda = random_dominant_pairings(2, rng);
    worst = std::max(worst, su3_quadric_residual(embed_su_n(k, lambda)));
  }
  std::vector<CheckLine> checks;
  checks.push_back(residual_check("su3_quadric", seed, count, worst,
                                  pick(tol, 1e-12)));
  return checks;
}

std::vector<CheckLine> suite_hilbert(std::uint64_t seed, double tol) {
  Int worst = 0;
  int cases = 0;
  for (Int a = 0; a <= 12; ++a)
    for (Int b = 0; b <= 12; ++b) {
      HilbertCheck h = hilbert_vs_weyl(a, b);
      worst = std::max(worst, std::llabs(h.hilbert - h.weyl));
      ++cases;
    }
  std::vector<CheckLine> checks;
  checks.push_back(residual_check("hilbert_vs_weyl", seed, cases,
                                  static_cast<double>(worst), pick(tol, 0.0)));
  return checks;
}

}  // namespace

SuiteResult run_verify_suite(const std::string& suite, const RootDatum& d,
                             std::uint64_t seed, int count,
                             double tolerance_override) {
  int n = su_realization_rank(d);
  std::vector<CheckLine> checks;
  if (suite == "geometry") {
    if (n < 2 || n > 3)
      throw std::invalid_argument(
          "geometry suite needs an SU(2) or SU(3) realization (groups A1, A2)");
    checks = suite_geometry(n, seed, count, tolerance_override);
  } else if (suite == "contact") {
    checks = suite_contact(seed, count, tolerance_override);
  } else if (suite == "embedding") {
    if (n < 2 || n > 3)
      throw std::invalid_argument(
          "embedding suite needs an SU(2) or SU(3) realization");
    checks = suite_embedding(d, n, seed, count, tolerance_override);
  } else if (suite == "quadric") {
    checks = suite_quadric(seed, count, tolerance_override);
  } else if (suite == "hilbert") {
    checks = suite_hilbert(seed, tolerance_override);
  } else {
    throw std::invalid_argument("unknown verify suite: " + suite);
  }

  SuiteResult out;
  out.report["schema_version"] = 1;
  out.report["suite"] = suite;
  out.report["group"] = d.name();
  out.report["seed"] = seed;
  out.report["count"] = count;
  Json arr = Json::array();
  for (const CheckLine& c : checks) {
    out.pass = out.pass && c.pass;
    arr.push_back(check_to_json(c));
  }
  out.report["checks"] = arr;
  out.report["pass"] = out.pass;
  return out;
}

int su_realization_rank(const RootDatum& d) {
  if (!d.is_simply_connected_semisimple()) return 0;
  const int r = d.rank_ss();
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    a(i, i) = 2;
    if (i + 1 < r) {
      a(i, i + 1) = -1;
      a(i + 1, i) = -1;
    }
  }
  return d.cartan() == a ? r + 1 : 0;
}

RootDatum parse_group_spec(const std::string& spec) {
  auto strip = [](std::string s) {
    std::string t;
    for (char ch : s)
      if (ch != ' ' && ch != '(' && ch != ')') t += ch;
    return t;
  };
  std::string s = strip(spec);
  if (s.empty()) throw std::invalid_argument("empty group spec");
  if (s == "SO3") return RootDatum::simple('A', 1, Isogeny::Adjoint, "SO(3)");
  if (s.rfind("SU", 0) == 0) {
    int n = std::stoi(s.substr(2));
    if (n < 2) throw std::invalid_argument("SU(n) needs n >= 2");
    return RootDatum::simple('A', n - 1, Isogeny::SimplyConnected,
                             "SU(" + std::to_string(n) + ")");
  }
  if (s == "U2") {
    Eigen::MatrixXi cartan(1, 1);
    cartan << 2;
    Eigen::MatrixXi coroot(1, 2);
    coroot << 1, -1;
    return RootDatum::custom("U(2)", cartan, coroot,
                             Eigen::MatrixXi::Identity(1, 1), 1);
  }
  if (s[0] == 'T') return RootDatum::torus(std::stoi(s.substr(1)));
  bool adjoint = false;
  std::string base = s;
  const std::string suffix = "-adjoint";
  if (base.size() > suffix.size() &&
      base.compare(base.size() - suffix.size(), suffix.size(), suffix) == 0) {
    adjoint = true;
    base = base.substr(0, base.size() - suffix.size());
  }
  char series = base[0];
  int rank = std::stoi(base.substr(1));
  return RootDatum::simple(series, rank,
                           adjoint ? Isogeny::Adjoint : Isogeny::SimplyConnected);
}

RootDatum datum_from_json(const Json& j) {
  std::string name = j.value("name", std::string("custom"));
  if (j.contains("series")) {
    std::string series = j.at("series").get<std::string>();
    int rank = j.at("rank").get<int>();
    std::string isogeny = j.value("isogeny", std::string("simply-connected"));
    if (series == "T") return RootDatum::torus(rank, name);
    if (series.size() != 1)
      throw std::invalid_argument("series must be a single letter or T");
    Isogeny iso;
    if (isogeny == "simply-connected")
      iso = Isogeny::SimplyConnected;
    else if (isogeny == "adjoint")
      iso = Isogeny::Adjoint;
    else
      throw std::invalid_argument("isogeny must be simply-connected or adjoint");
    return RootDatum::simple(series[0], rank, iso, name);
  }
  auto mat = [](const Json& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m.at(0).size());
    Eigen::MatrixXi out(rows, cols);
    for (int i = 0; i < rows; ++i) {
      if (static_cast<int>(m.at(i).size()) != cols)
        throw std::invalid_argument("ragged integer matrix");
      for (int k = 0; k < cols; ++k) out(i, k) = m.at(i).at(k).get<int>();
    }
    return out;
  };
  return RootDatum::custom(name, mat(j.at("cartan")), mat(j.at("coroot_coords")),
                           mat(j.at("weight_coords")),
                           j.at("central_rank").get<int>());
}

}  // namespace implode
