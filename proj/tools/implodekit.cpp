// implodekit: stratification, embedding, and quantization reports for
// imploded cross-sections of compact groups, from root-datum input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "implode/numgeom.hpp"
#include "implode/report.hpp"

namespace {

using implode::Json;

struct Output {
  std::string path;  // empty or "-" means stdout
  std::string format = "json";

  int emit(const Json& report, bool pass) const {
    std::string text;
    if (format == "json") {
      text = report.dump(2);
      text += "\n";
    } else {
      std::ostringstream os;
      render_text(report, os, 0);
      text = os.str();
    }
    if (path.empty() || path == "-") {
      std::cout << text;
    } else {
      std::ofstream f(path);
      if (!f) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return 2;
      }
      f << text;
    }
    return pass ? 0 : 1;
  }

  static void render_text(const Json& j, std::ostringstream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) {
        if (v.is_primitive() || v.empty()) {
          os << pad << k << ": " << v.dump() << "\n";
        } else {
          os << pad << k << ":\n";
          render_text(v, os, indent + 2);
        }
      }
    } else if (j.is_array()) {
      for (const auto& v : j) {
        if (v.is_primitive() || v.empty()) {
          os << pad << "- " << v.dump() << "\n";
        } else {
          os << pad << "-\n";
          render_text(v, os, indent + 2);
        }
      }
    } else {
      os << pad << j.dump() << "\n";
    }
  }
};

implode::RootDatum load_group(const std::string& spec) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream f(spec);
    if (!f) throw std::invalid_argument("cannot read group file " + spec);
    Json j = Json::parse(f);
    return implode::datum_from_json(j);
  }
  return implode::parse_group_spec(spec);
}

implode::Weight parse_weight(const std::string& text, int rank) {
  std::vector<implode::Int> coords;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) coords.push_back(std::stoll(tok));
  if (static_cast<int>(coords.size()) != rank)
    throw std::invalid_argument("weight needs " + std::to_string(rank) +
                                " comma-separated integers");
  return implode::Weight(std::move(coords));
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("IMPLODEKIT_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 12345;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"imploded cross-section toolkit"};
  app.require_subcommand(1);

  std::string group = "A2";
  std::uint64_t seed = default_seed();
  int count = 200;
  double tolerance = 0.0;
  Output out;

  auto add_common = [&](CLI::App* cmd, bool with_sampling) {
    cmd->add_option("--group", group, "group spec (A2, SU(3), SO(3), U(2), T1, B2, file.json)");
    cmd->add_option("--output", out.path, "output path, - for stdout");
    cmd->add_option("--format", out.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_sampling) {
      cmd->add_option("--seed", seed, "RNG seed (default env IMPLODEKIT_SEED)");
      cmd->add_option("--count", count, "sample count")->check(CLI::PositiveNumber);
      cmd->add_option("--tolerance", tolerance, "tolerance override for all checks")
          ->check(CLI::PositiveNumber);
    }
  };

  auto* describe = app.add_subcommand("describe-group", "root datum summary");
  add_common(describe, false);

  auto* faces = app.add_subcommand("faces", "Weyl chamber face lattice");
  add_common(faces, false);

  auto* strata = app.add_subcommand("strata", "universal imploded cross-section strata");
  add_common(strata, false);

  auto* smooth = app.add_subcommand("smooth-locus", "smoothness class per face");
  add_common(smooth, false);

  auto* embed = app.add_subcommand("embed", "embed a point of T*SU(n)");
  std::string weight_text = "1,1";
  bool random_unitary = false;
  embed->add_option("--weight", weight_text, "dominant weight, comma separated");
  embed->add_flag("--random-unitary", random_unitary,
                  "act by a seeded random special unitary instead of identity");
  add_common(embed, true);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "geometry";
  verify->add_option("--suite", suite, "geometry|contact|embedding|quadric|hilbert")
      ->check(CLI::IsMember({"geometry", "contact", "embedding", "quadric", "hilbert"}));
  add_common(verify, true);

  auto* quantize = app.add_subcommand("quantize", "tensor product decomposition");
  std::string tensor_text = "1,0 x 0,1";
  quantize->add_option("--tensor", tensor_text, "e.g. \"1,0 x 0,1\"");
  add_common(quantize, false);

  auto* implode_q = app.add_subcommand(
      "implode-quantize", "T-character of the imploded quantization of a product of coadjoint orbits");
  std::string orbits_text = "1,0;0,1";
  implode_q->add_option("--orbits", orbits_text, "orbit labels, e.g. \"1,0;0,1\"");
  add_common(implode_q, false);

  auto* cut = app.add_subcommand("cut-polytope", "filter weights by a translated chamber cone");
  std::string points_text;
  std::string base_text;
  std::string face_text;
  cut->add_option("--points", points_text, "semicolon separated weights")->required();
  cut->add_option("--base", base_text, "base point lambda0")->required();
  cut->add_option("--face", face_text, "face indices, e.g. \"0,1\" (default: face of lambda0)");
  add_common(cut, false);

  auto* equiv = app.add_subcommand("equivalent", "implosion equivalence of two points of T*SU(n)");
  std::string lambda_text;
  std::string k1_text, k2_text;
  equiv->add_option("--lambda", lambda_text, "dominant weight")->required();
  equiv->add_option("--k1", k1_text, "unitary as JSON [[re,im],...] rows (default identity)");
  equiv->add_option("--k2", k2_text, "unitary as JSON rows (default identity)");
  add_common(equiv, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    implode::RootDatum datum = load_group(group);
    if (describe->parsed()) {
      return out.emit(implode::describe_group_report(datum), true);
    }
    if (faces->parsed()) {
      return out.emit(implode::faces_report(datum), true);
    }
    if (strata->parsed()) {
      return out.emit(implode::strata_report(datum), true);
    }
    if (smooth->parsed()) {
      return out.emit(implode::smooth_locus_report(datum), true);
    }
    if (embed->parsed()) {
      int n = implode::su_realization_rank(datum);
      if (n == 0)
        throw std::invalid_argument("embed needs a group of type SU(n)");
      implode::Weight lambda = parse_weight(weight_text, n - 1);
      Eigen::MatrixXcd k = Eigen::MatrixXcd::Identity(n, n);
      if (random_unitary) {
        auto rng = implode::seeded_rng(seed, "cli_embed");
        k = implode::sun::random_special_unitary(n, rng);
      }
      implode::EmbeddedPoint v = implode::embed_su_n(k, datum, lambda);
      Json j;
      j["schema_version"] = 1;
      j["group"] = datum.name();
      j["weight"] = implode::weight_to_json(lambda);
      j["components"] = implode::embedded_point_to_json(v);
      j["squared_norm"] = implode::round12(v.squared_norm());
      if (n == 3)
        j["quadric_residual"] = implode::round12(implode::su3_quadric_residual(v));
      return out.emit(j, true);
    }
    if (verify->parsed()) {
      implode::SuiteResult res =
          implode::run_verify_suite(suite, datum, seed, count, tolerance);
      return out.emit(res.report, res.pass);
    }
    if (quantize->parsed()) {
      auto xpos = tensor_text.find('x');
      if (xpos == std::string::npos)
        throw std::invalid_argument("tensor spec must look like \"1,0 x 0,1\"");
      auto trim = [](std::string s) {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
      };
      implode::Weight a = parse_weight(trim(tensor_text.substr(0, xpos)), datum.rank_ss());
      implode::Weight b = parse_weight(trim(tensor_text.substr(xpos + 1)), datum.rank_ss());
      implode::VirtualRep rep = implode::tensor_decompose(datum, a, b);
      Json j;
      j["schema_version"] = 1;
      j["group"] = datum.name();
      j["tensor"] = Json::array({implode::weight_to_json(a), implode::weight_to_json(b)});
      j["decomposition"] = implode::character_to_json(rep);
      return out.emit(j, true);
    }
    if (implode_q->parsed()) {
      std::vector<implode::Weight> labels;
      std::stringstream ss(orbits_text);
      std::string tok;
      while (std::getline(ss, tok, ';'))
        if (!tok.empty()) labels.push_back(parse_weight(tok, datum.rank_ss()));
      implode::TCharacter t = implode::rr_implosion(datum, labels);
      Json j;
      j["schema_version"] = 1;
      j["group"] = datum.name();
      Json orb = Json::array();
      for (const auto& w : labels) orb.push_back(implode::weight_to_json(w));
      j["orbits"] = orb;
      j["character"] = implode::character_to_json(t);
      return out.emit(j, true);
    }
    if (cut->parsed()) {
      std::vector<implode::Weight> points;
      std::stringstream ss(points_text);
      std::string tok;
      while (std::getline(ss, tok, ';'))
        if (!tok.empty()) points.push_back(parse_weight(tok, datum.rank_ss()));
      implode::Weight base = parse_weight(base_text, datum.rank_ss());
      implode::Face tau = face_text.empty()
                              ? implode::face_of(datum, base)
                              : [&] {
                                  std::vector<int> idx;
                                  std::stringstream fs(face_text);
                                  std::string t;
                                  while (std::getline(fs, t, ','))
                                    if (!t.empty()) idx.push_back(std::stoi(t));
                                  return implode::Face(std::move(idx));
                                }();
      auto kept = implode::cut_polytope(datum, points, base, tau);
      Json j;
      j["schema_version"] = 1;
      j["group"] = datum.name();
      j["base"] = implode::weight_to_json(base);
      j["face"] = implode::face_to_json(tau);
      Json arr = Json::array();
      for (const auto& w : kept) arr.push_back(implode::weight_to_json(w));
      j["kept"] = arr;
      return out.emit(j, true);
    }
    if (equiv->parsed()) {
      int n = implode::su_realization_rank(datum);
      if (n == 0)
        throw std::invalid_argument("equivalent needs a group of type SU(n)");
      implode::Weight lambda = parse_weight(lambda_text, n - 1);
      auto parse_unitary = [&](const std::string& text) {
        if (text.empty())
          return Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(n, n));
        Json rows = Json::parse(text);
        Eigen::MatrixXcd k(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            k(i, j) = std::complex<double>(rows.at(i).at(j).at(0).get<double>(),
                                           rows.at(i).at(j).at(1).get<double>());
        return k;
      };
      implode::GroupPointSUn m1{parse_unitary(k1_text), lambda};
      implode::GroupPointSUn m2{parse_unitary(k2_text), lambda};
      bool eq = implode::implode_equivalent_su_n(m1, m2);
      Json j;
      j["schema_version"] = 1;
      j["group"] = datum.name();
      j["weight"] = implode::weight_to_json(lambda);
      j["equivalent"] = eq;
      return out.emit(j, true);
    }
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
