// Command-line front end over the ahcert C API: maps subcommand flags onto
// the experiment config JSON, prints the summary, and writes the certificate.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ahcert/ahcert.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::uint64_t seed = 1;
  std::string out;
  int jobs = 1;  // cap on internal parallelism (current runner is sequential)
};

int run(const std::string& command, json config, const Common& common) {
  config["seed"] = common.seed;
  (void)common.jobs;
  ahc_result* result = nullptr;
  ahc_run(command.c_str(), config.dump().c_str(), &result);
  int status = ahc_result_status(result);
  std::cout << ahc_result_summary(result) << "\n";
  std::string cert = ahc_result_certificate(result);
  if (common.out.empty()) {
    std::cout << cert;
  } else {
    std::ofstream file(common.out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << common.out << "\n";
      ahc_result_free(result);
      return 1;
    }
    file << cert;
    std::cout << "certificate written to " << common.out << "\n";
  }
  ahc_result_free(result);
  return status;
}

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed, "RNG seed for corpus generation");
  cmd->add_option("--out,-o", common.out, "write the JSON certificate to this file");
  cmd->add_option("--jobs", common.jobs, "upper bound on worker parallelism")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for threshold inductive-limit algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ahc_version());

  Common common;
  json cfg = json::object();

  auto* ideal = app.add_subcommand("ideal-cert", "certify that zero-set towers collapse to a single cut point");
  std::string space = "interval";
  int count = 25, depth = 2100, mesh_level = 10;
  ideal->add_option("--space", space, "interval or cantor");
  ideal->add_option("--count", count, "number of random zero-set seeds");
  ideal->add_option("--depth", depth, "recursion depth (stages walked down)");
  ideal->add_option("--mesh-level", mesh_level, "evidence mesh 2^-level");
  add_common(ideal, common);
  ideal->callback([&] {
    cfg = {{"space", space}, {"count", count}, {"depth", depth}, {"mesh_level", mesh_level}};
    std::exit(run("ideal-cert", cfg, common));
  });

  auto* stab = app.add_subcommand("stability", "orthogonal-equivalent witness for connecting-map images");
  int sn = 1, sm = 4, scount = 20;
  std::string sspace = "interval";
  stab->add_option("--space", sspace, "interval or cantor");
  stab->add_option("--n", sn, "source stage");
  stab->add_option("--m", sm, "target stage");
  stab->add_option("--count", scount, "random positive functions to certify");
  add_common(stab, common);
  stab->callback([&] {
    cfg = {{"space", sspace}, {"n", sn}, {"m", sm}, {"count", scount}};
    std::exit(run("stability", cfg, common));
  });

  auto* tr = app.add_subcommand("traceless", "exponential decay certificate for interval masses");
  std::string ts = "1/4", trr = "1/2", teps = "1/1024";
  int tn = 1, towers = 5;
  std::uint64_t thorizon = 1 << 16;
  tr->add_option("--s", ts, "lower cut (rational or point syntax)");
  tr->add_option("--r", trr, "upper cut");
  tr->add_option("--epsilon", teps, "target bound, exact rational p/q");
  tr->add_option("--n", tn, "stage index");
  tr->add_option("--horizon", thorizon, "sequence search horizon");
  tr->add_option("--towers", towers, "sampled towers for the scaling identity");
  add_common(tr, common);
  tr->callback([&] {
    cfg = {{"s", ts}, {"r", trr}, {"epsilon", teps}, {"n", tn},
           {"horizon", thorizon}, {"towers", towers}};
    std::exit(run("traceless", cfg, common));
  });

  auto* good = app.add_subcommand("goodearl", "bounded-trace dichotomy ratio through a multiplicity tower");
  std::string rule = "squares", gs = "1/4", gr = "1/2", mults;
  std::uint64_t gdepth = 10000;
  good->add_option("--rule", rule, "squares (l_j = j^2+2j), ones, or list");
  good->add_option("--depth", gdepth, "tower depth N");
  good->add_option("--s", gs, "lower cut");
  good->add_option("--r", gr, "upper cut");
  good->add_option("--multiplicities", mults, "comma-separated l_j for --rule list");
  add_common(good, common);
  good->callback([&] {
    cfg = {{"rule", rule}, {"depth", gdepth}, {"s", gs}, {"r", gr}};
    if (!mults.empty()) {
      json arr = json::array();
      std::size_t pos = 0;
      while (pos < mults.size()) {
        auto comma = mults.find(',', pos);
        arr.push_back(std::stoll(mults.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      cfg["multiplicities"] = arr;
    }
    std::exit(run("goodearl", cfg, common));
  });

  auto* adiv = app.add_subcommand("approx-div", "approximately central unital M_2 copy with exact commutator bounds");
  std::string aeps = "1/10";
  int an = 1, contractions = 100;
  std::uint64_t ahorizon = 1 << 16;
  adiv->add_option("--epsilon", aeps, "commutator bound, exact rational");
  adiv->add_option("--n", an, "stage index");
  adiv->add_option("--contractions", contractions, "random contractions to test");
  adiv->add_option("--horizon", ahorizon, "sequence search horizon");
  add_common(adiv, common);
  adiv->callback([&] {
    cfg = {{"epsilon", aeps}, {"n", an}, {"contractions", contractions},
           {"horizon", ahorizon}};
    std::exit(run("approx-div", cfg, common));
  });

  auto* k0 = app.add_subcommand("k0-verify", "dyadic embedding tables, intertwining residuals, solves");
  int kdepth = 8, kelems = 100, ksolve = 8, kcomp = 12, kemit = 4;
  k0->add_option("--depth", kdepth, "levels to verify");
  k0->add_option("--elements", kelems, "random elements per level");
  k0->add_option("--solve-depth", ksolve, "levels with full generator solves");
  k0->add_option("--composite-depth", kcomp, "brute-force oracle depth");
  k0->add_option("--emit-tables", kemit, "levels whose delta tables go in the certificate");
  add_common(k0, common);
  k0->callback([&] {
    cfg = {{"depth", kdepth}, {"elements", kelems}, {"solve_depth", ksolve},
           {"composite_depth", kcomp}, {"emit_tables", kemit}};
    std::exit(run("k0-verify", cfg, common));
  });

  auto* tord = app.add_subcommand("total-order", "decide signs in the ordered K0 with termination bounds");
  int tcount = 100, tlevel = 5, tnz = 10, tmag = 7;
  std::uint64_t tohorizon = 1 << 20;
  tord->add_option("--count", tcount, "random nonzero elements");
  tord->add_option("--tower-level", tlevel, "partition level for the corpus");
  tord->add_option("--nonzeros", tnz, "nonzero coefficients per element");
  tord->add_option("--mag", tmag, "coefficient magnitude bound");
  tord->add_option("--horizon", tohorizon, "sequence search horizon");
  add_common(tord, common);
  tord->callback([&] {
    cfg = {{"count", tcount}, {"tower_level", tlevel}, {"nonzeros", tnz},
           {"mag", tmag}, {"horizon", tohorizon}};
    std::exit(run("total-order", cfg, common));
  });

  auto* embed = app.add_subcommand("embed-check", "Cantor-to-interval surjection: monotone, section, commuting squares");
  int epoints = 1000, efn = 8, estage = 6, esection = 12;
  embed->add_option("--points", epoints, "ternary corpus size");
  embed->add_option("--functions-per-stage", efn, "functions per stage");
  embed->add_option("--max-stage", estage, "largest stage for the squares");
  embed->add_option("--section-level", esection, "full dyadic mesh level for the section check");
  add_common(embed, common);
  embed->callback([&] {
    cfg = {{"points", epoints}, {"functions_per_stage", efn}, {"max_stage", estage},
           {"section_level", esection}};
    std::exit(run("embed-check", cfg, common));
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
