#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gpath/harness.hpp"
#include "gpath/io.hpp"
#include "gpath/publish.hpp"
#include "gpath/recover.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationError = 2;
constexpr int kIoError = 3;

std::pair<gpath::Network, gpath::PathSeq> load_map(const std::string& path) {
  std::istringstream in(gpath::slurp_file(path));
  return gpath::read_map(in);
}

gpath::Edge parse_edge_arg(const std::string& s) {
  const auto dash = s.find('-');
  if (dash == std::string::npos)
    throw gpath::ParseError("edge must look like U-V: '" + s + "'");
  return gpath::make_edge(gpath::parse_vertex(s.substr(0, dash)),
                          gpath::parse_vertex(s.substr(dash + 1)));
}

void require_valid(const gpath::Network& n, const gpath::PathSeq& p) {
  const auto violations = gpath::validate(n, p);
  if (violations.empty()) return;
  std::string msg = "invalid map:";
  for (const auto& v : violations) msg += " " + v.detail + ";";
  throw gpath::InvalidInput(msg);
}

int run(int argc, char** argv) {
  CLI::App app{"Differentially private path publishing"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate-map", "Generate a synthetic map");
  int gen_v = 0;
  std::int64_t gen_e = 0;
  std::uint64_t gen_seed = 0;
  int gen_cyclic = 0;
  std::string gen_out;
  gen->add_option("--vertices", gen_v)->required();
  gen->add_option("--edges", gen_e)->required();
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--cyclic", gen_cyclic);
  gen->add_option("-o,--output", gen_out)->required();

  auto* pub = app.add_subcommand("publish", "Publish a graph-based path");
  std::string pub_map, pub_out;
  double pub_eps_v = 0, pub_eps_e = 0;
  std::uint64_t pub_seed = 0;
  bool pub_no_split = false, pub_dump_matrix = false;
  pub->add_option("--map", pub_map)->required();
  pub->add_option("--eps-v", pub_eps_v)->required();
  pub->add_option("--eps-e", pub_eps_e)->required();
  pub->add_option("--seed", pub_seed)->required();
  pub->add_flag("--no-split", pub_no_split);
  pub->add_flag("--dump-matrix", pub_dump_matrix);
  pub->add_option("-o,--output", pub_out)->required();

  auto* rec = app.add_subcommand("reconstruct", "Recover the path");
  std::string rec_map, rec_pub, rec_out;
  rec->add_option("--map", rec_map)->required();
  rec->add_option("--published", rec_pub)->required();
  rec->add_option("-o,--output", rec_out)->required();

  auto* att = app.add_subcommand("attack", "Missing-edge adversary");
  std::string att_map, att_pub, att_withhold;
  att->add_option("--map", att_map)->required();
  att->add_option("--published", att_pub)->required();
  att->add_option("--withhold", att_withhold)->required();

  auto* exp = app.add_subcommand("experiment", "Run the experiment grid");
  std::string exp_cfg, exp_out;
  exp->add_option("--config", exp_cfg)->required();
  exp->add_option("-o,--output", exp_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidationError;
  }

  if (gen->parsed()) {
    gpath::Rng rng(gen_seed);
    const auto [net, path] =
        gpath::generate_map(gen_v, gen_e, rng, gen_cyclic);
    std::ostringstream out;
    gpath::write_map(out, net, path);
    gpath::spit_file(gen_out, out.str());
    return kOk;
  }

  if (pub->parsed()) {
    const auto [net, path] = load_map(pub_map);
    require_valid(net, path);
    gpath::PublishOptions opt;
    opt.eps_v = pub_eps_v;
    opt.eps_e = pub_eps_e;
    opt.splitting = !pub_no_split;
    gpath::Rng rng(pub_seed);
    const gpath::PublishResult res = gpath::publish(net, path, opt, rng);
    if (pub_dump_matrix) {
      std::ostringstream m;
      gpath::write_matrix(m, res.relations);
      gpath::spit_file(pub_out + ".matrix", m.str());
    }
    if (!res.success)
      throw gpath::InvalidInput("map not usable without splitting");
    std::ostringstream out;
    gpath::write_published(out, res.graph);
    gpath::spit_file(pub_out, out.str());
    return kOk;
  }

  if (rec->parsed()) {
    const auto [net, path] = load_map(rec_map);
    std::istringstream gin(gpath::slurp_file(rec_pub));
    const gpath::LayeredGraph g = gpath::read_published(gin);
    const gpath::Reconstruction r =
        gpath::reconstruct_path(g, net, g.lineage);
    std::ostringstream out;
    gpath::write_report(out, r);
    gpath::spit_file(rec_out, out.str());
    return kOk;
  }

  if (att->parsed()) {
    const auto [net, path] = load_map(att_map);
    std::istringstream gin(gpath::slurp_file(att_pub));
    const gpath::LayeredGraph g = gpath::read_published(gin);
    const gpath::Edge withheld = parse_edge_arg(att_withhold);
    if (!net.has_edge(withheld.first, withheld.second))
      throw gpath::UnknownEdge("withheld edge is not in the map");
    gpath::AdversaryView view;
    view.network_minus_edge = net;
    view.network_minus_edge.edges.erase(withheld);
    view.path_vertices = net.vertices;
    view.published = g;
    view.lineage = g.lineage;
    const auto weights = gpath::adversary_infer(view);
    std::cout << "CANDIDATES " << weights.size() << "\n";
    for (const auto& [e, w] : weights) {
      std::cout << "CAND " << gpath::to_string(e.first) << "-"
                << gpath::to_string(e.second) << " " << std::fixed
                << std::setprecision(6) << w << "\n";
    }
    std::cout << "WITHHELD " << gpath::to_string(withheld.first) << "-"
              << gpath::to_string(withheld.second) << " "
              << (weights.count(withheld) ? "present" : "absent") << "\n";
    return kOk;
  }

  if (exp->parsed()) {
    std::istringstream cin_(gpath::slurp_file(exp_cfg));
    const gpath::ExperimentConfig cfg = gpath::read_config(cin_);
    const auto rows = gpath::run_experiment(cfg);
    std::ostringstream out;
    gpath::write_csv(out, rows);
    gpath::spit_file(exp_out, out.str());
    return kOk;
  }

  return kValidationError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gpath::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIoError;
  } catch (const gpath::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  }
}
