#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "chainface/face.hpp"
#include "chainface/io.hpp"
#include "chainface/linalg.hpp"
#include "chainface/oracle.hpp"
#include "chainface/scheduler.hpp"

namespace cf = chainface;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct FamilyInput {
  std::string inline_text;
  std::string file;

  cf::ChainFamily load(const cf::Poset& P) const {
    if (!inline_text.empty()) return cf::parse_family(P, inline_text);
    if (!file.empty()) return cf::read_family_file(P, file);
    throw cf::ParseError("a chain family is required (--family or --family-file)");
  }
};

bool parse_grid_size(const std::string& s, int& m, int& n) {
  auto x = s.find('x');
  if (x == std::string::npos) return false;
  try {
    m = std::stoi(s.substr(0, x));
    n = std::stoi(s.substr(x + 1));
  } catch (const std::exception&) {
    return false;
  }
  return m >= 1 && n >= 1;
}

void emit(const json& j, bool as_json, const std::string& plain) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << plain;
}

// Combinatorial verdict vs. the exact-geometry oracle; true on agreement.
bool oracle_agree(const cf::Poset& P, const cf::ChainFamily& F, json& detail) {
  cf::FaceClass fc = cf::face_class(P, F);
  auto weights = cf::face_oracle(P, F);
  std::vector<cf::RatVec> pts;
  for (const auto& c : F) pts.push_back(cf::incidence(P, c));
  int rank = cf::affine_rank(pts);
  int simplex_rank = static_cast<int>(F.size()) - 1;

  bool ok = true;
  if (fc.tag == cf::FaceTag::NotFace)
    ok = !weights.has_value();
  else if (fc.tag == cf::FaceTag::SimplexFace)
    ok = weights.has_value() && rank == simplex_rank;
  else
    ok = weights.has_value() && rank < simplex_rank;

  detail["tag"] = cf::face_tag_name(fc.tag);
  detail["lp_feasible"] = weights.has_value();
  detail["affine_rank"] = rank;
  return ok;
}

int run(int argc, char** argv) {
  CLI::App app{"faces of maximal chain polytopes: crown structures, closures, "
               "face lattices, exact LP oracles, and PERT/CPM criticality"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string poset_path;
  FamilyInput fam;

  auto add_poset = [&](CLI::App* cmd) {
    cmd->add_option("--poset", poset_path, "poset file")->required();
  };
  auto add_family = [&](CLI::App* cmd, bool required) {
    auto* a = cmd->add_option("--family", fam.inline_text,
                              "';'-separated chains, e.g. \"125;1368;478\"");
    auto* b = cmd->add_option("--family-file", fam.file, "chain family file");
    if (required) {
      a->excludes(b);
    }
  };

  auto* cmd_chains = app.add_subcommand("chains", "list all maximal chains");
  add_poset(cmd_chains);

  auto* cmd_structure =
      app.add_subcommand("structure", "crowns, stars, and the completeness verdict");
  add_poset(cmd_structure);
  add_family(cmd_structure, true);
  int max_rho = 0;
  cmd_structure->add_option("--max-rho", max_rho, "cap on crown length");

  auto* cmd_face = app.add_subcommand("face", "face trichotomy of a chain family");
  add_poset(cmd_face);
  add_family(cmd_face, true);

  auto* cmd_closure =
      app.add_subcommand("closure", "minimal closed family containing the input");
  add_poset(cmd_closure);
  add_family(cmd_closure, true);
  bool trace = false;
  cmd_closure->add_flag("--trace", trace, "print every closure step");

  auto* cmd_lattice = app.add_subcommand("lattice", "the whole face lattice");
  add_poset(cmd_lattice);
  int max_chains = 20;
  cmd_lattice->add_option("--max-chains", max_chains,
                          "enumeration cap on the maximal chain count");
  bool dot = false;
  cmd_lattice->add_flag("--dot", dot, "emit a DOT Hasse diagram");

  auto* cmd_dim = app.add_subcommand("dim", "polytope dimension");
  std::string grid_size;
  cmd_dim->add_option("--poset", poset_path, "poset file");
  cmd_dim->add_option("--grid", grid_size, "grid size MxN, e.g. 3x3");
  bool with_f_vector = false;
  cmd_dim->add_flag("--f-vector", with_f_vector, "also count faces by dimension");
  int dim_cap = 20;
  cmd_dim->add_option("--max-chains", dim_cap, "cap for the f-vector enumeration");

  auto* cmd_grid = app.add_subcommand("grid", "grid poset generator and flag");
  cmd_grid->add_option("--size", grid_size, "grid size MxN")->required();
  bool flag = false;
  cmd_grid->add_flag("--flag", flag,
                     "build and verify the staged covering flag");

  auto* cmd_schedule = app.add_subcommand("schedule", "EFT and critical chains");
  add_poset(cmd_schedule);
  std::string weights_path, multi;
  cmd_schedule->add_option("--weights", weights_path, "activity weights file");
  cmd_schedule->add_option("--multicritical", multi,
                           "find weights making exactly this family critical");

  auto* cmd_oracle = app.add_subcommand(
      "oracle-check", "combinatorial verdict vs. the exact LP oracle");
  add_poset(cmd_oracle);
  add_family(cmd_oracle, false);
  bool all_subsets = false;
  cmd_oracle->add_flag("--all-subsets", all_subsets,
                       "check every nonempty subset of maximal chains");
  int oracle_cap = 12;
  cmd_oracle->add_option("--max-chains", oracle_cap,
                         "cap on the chain count for --all-subsets");

  for (CLI::App* cmd : {cmd_chains, cmd_structure, cmd_face, cmd_closure,
                        cmd_lattice, cmd_dim, cmd_grid, cmd_schedule,
                        cmd_oracle})
    cmd->add_flag("--json", as_json, "emit JSON instead of plain text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  try {
    if (cmd_chains->parsed()) {
      cf::Poset P = cf::read_poset_file(poset_path);
      auto F = cf::maximal_chains(P);
      json j;
      j["chains"] = cf::family_strs(P, F);
      std::string plain;
      for (const auto& s : cf::family_strs(P, F)) plain += s + "\n";
      emit(j, as_json, plain);
    } else if (cmd_structure->parsed()) {
      cf::Poset P = cf::read_poset_file(poset_path);
      auto F = fam.load(P);
      std::optional<int> rho_cap;
      if (max_rho > 0) rho_cap = max_rho;
      auto r = cf::classify_structure(P, F, rho_cap);
      json j = cf::report_json(P, r);
      std::string plain = std::string(cf::verdict_name(r.verdict)) + "\n";
      for (const auto& fc : r.crowns) {
        plain += "crown";
        for (int i = 0; i < fc.crown.rho; ++i)
          plain += " " + std::to_string(fc.crown.alphas[i]) + "<" +
                   std::to_string(fc.crown.betas[i]);
        plain += fc.complete ? " complete\n" : " incomplete\n";
      }
      for (const auto& fs : r.stars) {
        plain += "star (" + std::to_string(fs.star.a1) + "," +
                 std::to_string(fs.star.b1) + "," + std::to_string(fs.star.a2) +
                 "," + std::to_string(fs.star.b2) + ")";
        plain += fs.complete ? " complete\n" : " incomplete\n";
      }
      emit(j, as_json, plain);
    } else if (cmd_face->parsed()) {
      cf::Poset P = cf::read_poset_file(poset_path);
      auto F = fam.load(P);
      auto fc = cf::face_class(P, F);
      json j = cf::face_class_json(fc);
      std::string plain(cf::face_tag_name(fc.tag));
      if (fc.dim) plain += " dim " + std::to_string(*fc.dim);
      emit(j, as_json, plain + "\n");
    } else if (cmd_closure->parsed()) {
      cf::Poset P = cf::read_poset_file(poset_path);
      auto F = fam.load(P);
      auto steps = cf::closure_trace(P, F);
      json j = trace ? cf::trace_json(P, steps)
                     : json{{"closure", cf::family_strs(P, steps.back())}};
      std::string plain;
      if (trace) {
        for (std::size_t i = 0; i < steps.size(); ++i) {
          plain += "step " + std::to_string(i) + ":";
          for (const auto& s : cf::family_strs(P, steps[i])) plain += " " + s;
          plain += "\n";
        }
      } else {
        for (const auto& s : cf::family_strs(P, steps.back())) plain += s + "\n";
      }
      emit(j, as_json, plain);
    } else if (cmd_lattice->parsed()) {
      cf::Poset P = cf::read_poset_file(poset_path);
      auto L = cf::face_lattice(P, max_chains);
      if (dot) {
        std::cout << cf::lattice_dot(P, L);
      } else {
        json j = cf::lattice_json(P, L);
        std::string plain;
        for (std::size_t i = 0; i < L.faces.size(); ++i) {
          plain += "dim " + std::to_string(L.dims[i]) + ":";
          for (const auto& s : cf::family_strs(P, L.faces[i])) plain += " " + s;
          plain += "\n";
        }
        emit(j, as_json, plain);
      }
    } else if (cmd_dim->parsed()) {
      cf::Poset P;
      if (!grid_size.empty()) {
        int m, n;
        if (!parse_grid_size(grid_size, m, n))
          throw cf::ParseError("bad grid size: " + grid_size);
        P = cf::grid_poset(m, n);
      } else if (!poset_path.empty()) {
        P = cf::read_poset_file(poset_path);
      } else {
        throw cf::ParseError("dim needs --poset or --grid");
      }
      int d = cf::polytope_dim(P);
      json j;
      j["dim"] = d;
      std::string plain = std::to_string(d) + "\n";
      if (with_f_vector) {
        auto f = cf::f_vector(P, dim_cap);
        j["f_vector"] = f;
        plain += "f_vector:";
        for (auto c : f) plain += " " + std::to_string(c);
        plain += "\n";
      }
      emit(j, as_json, plain);
    } else if (cmd_grid->parsed()) {
      int m, n;
      if (!parse_grid_size(grid_size, m, n))
        throw cf::ParseError("bad grid size: " + grid_size);
      if (flag) {
        auto g = cf::grid_flag(m, n);
        cf::Poset P = cf::grid_poset(m, n);
        json j = cf::grid_flag_json(P, g);
        std::string plain = "stages " + std::to_string(g.stages.size()) +
                            " dim " + std::to_string(g.dim) + "\n";
        emit(j, as_json, plain);
      } else {
        std::cout << cf::write_poset(cf::grid_poset(m, n));
      }
    } else if (cmd_schedule->parsed()) {
      cf::Poset P = cf::read_poset_file(poset_path);
      if (!multi.empty()) {
        auto F = cf::parse_family(P, multi);
        auto w = cf::multicritical(P, F);
        if (!w) {
          emit(json{{"weights", nullptr}}, as_json, "no multicritical point\n");
        } else {
          json j;
          for (int x = 1; x <= P.size(); ++x)
            j["weights"][std::to_string(x)] = cf::rat_str(w->at(x));
          emit(j, as_json, cf::write_weights(P, *w));
        }
      } else if (!weights_path.empty()) {
        auto w = cf::read_weights_file(P, weights_path);
        auto rep = cf::critical_chains(P, w);
        json j = cf::schedule_json(P, rep);
        std::string plain = "eft " + cf::rat_str(rep.eft) + "\n";
        for (const auto& s : cf::family_strs(P, rep.critical))
          plain += "critical " + s + "\n";
        emit(j, as_json, plain);
      } else {
        throw cf::ParseError("schedule needs --weights or --multicritical");
      }
    } else if (cmd_oracle->parsed()) {
      cf::Poset P = cf::read_poset_file(poset_path);
      long long checked = 0, disagreements = 0;
      json bad = json::array();
      auto check_one = [&](const cf::ChainFamily& F) {
        json detail;
        ++checked;
        if (!oracle_agree(P, F, detail)) {
          ++disagreements;
          detail["family"] = cf::family_strs(P, F);
          bad.push_back(detail);
        }
      };
      if (all_subsets) {
        auto all = cf::maximal_chains(P);
        int n = static_cast<int>(all.size());
        if (n > oracle_cap)
          throw cf::CapExceededError(
              "chain count " + std::to_string(n) + " exceeds cap", n);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
          std::vector<cf::Chain> cs;
          for (int i = 0; i < n; ++i)
            if (mask >> i & 1) cs.push_back(all.chains[i]);
          check_one(cf::ChainFamily(std::move(cs)));
        }
      } else {
        check_one(fam.load(P));
      }
      json j;
      j["checked"] = checked;
      j["disagreements"] = disagreements;
      if (!bad.empty()) j["failures"] = bad;
      emit(j, as_json,
           "checked " + std::to_string(checked) + ", disagreements " +
               std::to_string(disagreements) + "\n");
      if (disagreements > 0) return kExitDisagreement;
    }
  } catch (const cf::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
