// Command-line front end: gen, verify, discover, iso, params, catalog.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ddg/catalog.hpp"
#include "ddg/construct.hpp"
#include "ddg/descriptor.hpp"
#include "ddg/error.hpp"
#include "ddg/graph6.hpp"
#include "ddg/symplectic.hpp"
#include "ddg/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ddg::Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ddg::Graph read_graph(const std::string& path) {
  std::istringstream lines(slurp(path));
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line != "\r") return ddg::graph6_decode(line);
  }
  throw ddg::Error(path + " holds no graph6 line");
}

ddg::Partition read_partition(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<int> labels;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      labels.push_back(x);
    } catch (const std::logic_error&) {
      throw ddg::Error(path + ": partition labels must be integers, got \"" + token + "\"");
    }
  }
  return ddg::Partition(std::move(labels));
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    ddg::write_file_atomic(path, text);
  }
}

void print_report(const ddg::DdgReport& r) {
  if (r.ok) {
    std::cout << "DDG " << r.params.str() << (r.params.proper() ? " proper" : " improper") << "\n";
    std::cout << "counting identity: " << ddg::identity_check(r.params).str() << "\n";
  } else {
    std::cout << "not a DDG (" << ddg::to_string(r.failure) << "): " << r.message << "\n";
  }
}

void print_identity(const ddg::DdgParams& p, const ddg::IdentityReport& id) {
  std::cout << p.str() << (p.proper() ? "" : " improper") << "\n";
  std::cout << "counting identity: " << id.str() << (id.pass ? " (pass)" : " (fail)") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisible design graph toolkit"};
  app.require_subcommand(1);

  std::int64_t bound = 0;
  app.add_option("--bound", bound, "Vertex bound for discovery and isomorphism (default: built-in)")
      ->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "Build a graph from a descriptor file and print its graph6 line");
  std::string gen_descriptor, gen_out, gen_partition_out;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("descriptor", gen_descriptor, "Descriptor file ('-' for stdin)")->required();
  gen->add_option("-o,--output", gen_out, "graph6 output file (default stdout)");
  gen->add_option("--partition-out", gen_partition_out, "Write the vertex partition labels here");
  gen->add_option("--seed", gen_seed, "Override the seed of seeded labeling and sigma strategies");
  bool gen_canonical = false;
  gen->add_flag("--canonical", gen_canonical, "Print the canonical descriptor text instead of building");

  // verify
  auto* ver = app.add_subcommand("verify", "Verify a graph as a DDG, against a partition or a discovered one");
  std::string ver_graph, ver_partition;
  ver->add_option("graph", ver_graph, "graph6 file ('-' for stdin)")->required();
  ver->add_option("-p,--partition", ver_partition, "File of whitespace-separated class labels, one per vertex");

  // discover
  auto* dis = app.add_subcommand("discover", "List every partition that makes the graph a DDG");
  std::string dis_graph;
  dis->add_option("graph", dis_graph, "graph6 file ('-' for stdin)")->required();

  // iso
  auto* iso = app.add_subcommand("iso", "Decide whether two graphs are isomorphic");
  std::string iso_a, iso_b;
  double iso_budget = 600;
  iso->add_option("first", iso_a, "graph6 file")->required();
  iso->add_option("second", iso_b, "graph6 file")->required();
  iso->add_option("--budget-seconds", iso_budget, "Search time limit")->check(CLI::NonNegativeNumber);

  // params
  auto* par = app.add_subcommand("params", "Closed-form parameter calculators");
  par->require_subcommand(1);
  std::int64_t pq = 0, pm = 0, plambda = 0;
  int pd = 0, pe = 0;
  std::string pvariant = "corrected", pgraph;
  auto* t1 = par->add_subcommand("theorem1", "Construction 1 parameters");
  auto* t2 = par->add_subcommand("theorem2", "Partial complement parameters");
  auto* bg = par->add_subcommand("bg", "Symplectic graph parameters as published");
  for (auto* sub : {t1, t2}) {
    sub->add_option("--q", pq, "Prime power q")->required();
    sub->add_option("--d", pd, "Affine dimension d")->required();
    sub->add_option("--m", pm, "Symmetric design order m")->required();
    sub->add_option("--lambda", plambda, "Symmetric design lambda")->required();
  }
  t2->add_option("--variant", pvariant, "printed or corrected")
      ->check(CLI::IsMember({"printed", "corrected"}));
  bg->add_option("--q", pq, "Residue field order q")->required();
  bg->add_option("--e", pe, "Half dimension e")->required();
  bg->add_option("--graph", pgraph, "X or Y")->required()->check(CLI::IsMember({"X", "Y"}));

  // catalog
  auto* cat = app.add_subcommand("catalog", "Build, verify, deduplicate and store a batch of descriptors");
  std::vector<std::string> cat_inputs;
  std::string cat_out;
  double cat_budget = 120;
  cat->add_option("descriptors", cat_inputs,
                  "Descriptor files; a .jsonl file holds one descriptor per line")
      ->required();
  cat->add_option("-o,--out", cat_out, "Output directory")->required();
  cat->add_option("--budget-seconds", cat_budget, "Isomorphism time limit per comparison")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  ddg::Limits limits;
  if (bound > 0) {
    limits.max_discover_vertices = bound;
    limits.max_iso_vertices = bound;
  }
  const auto seconds = [](double s) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::duration<double>(s));
  };

  try {
    if (*gen) {
      auto d = ddg::descriptor_parse(slurp(gen_descriptor));
      if (gen_seed) {
        if (d.labeling == ddg::DescriptorLabeling::Seeded) d.labeling_seed = *gen_seed;
        if (d.sigma == ddg::SigmaStrategy::Seeded) d.sigma_seed = *gen_seed;
      }
      if (gen_canonical) {
        write_output(gen_out, ddg::descriptor_emit(d));
        return kOk;
      }
      ddg::BuildOptions options;
      options.limits = limits;
      if (gen_descriptor != "-") options.base_dir = std::filesystem::path(gen_descriptor).parent_path();
      const auto inst = ddg::descriptor_build(d, options);
      write_output(gen_out, ddg::graph6_encode(inst.graph) + "\n");
      if (!gen_partition_out.empty()) {
        std::string labels;
        for (int c : inst.partition.labels()) labels += std::to_string(c) + "\n";
        write_output(gen_partition_out, labels);
      }
      std::cerr << "vertices " << inst.graph.order() << ", edges " << inst.graph.edge_count();
      if (inst.params) std::cerr << ", params " << inst.params->str() << " (" << ddg::to_string(inst.source) << ")";
      std::cerr << "\n";
      return kOk;
    }

    if (*ver) {
      const auto g = read_graph(ver_graph);
      if (!ver_partition.empty()) {
        const auto r = ddg::ddg_verify(g, read_partition(ver_partition));
        print_report(r);
        return r.ok ? kOk : kFailed;
      }
      if (!g.is_simple()) {
        std::cout << "not a DDG (not simple)\n";
        return kFailed;
      }
      const auto found = ddg::partitions_discover(g, limits);
      if (found.partitions.empty()) {
        std::cout << "no partition makes this graph a DDG\n";
        return kFailed;
      }
      const auto proper = found.proper();
      const auto& best = proper.empty() ? found.partitions.front() : *proper.front();
      print_report(ddg::ddg_verify(g, best.partition));
      return kOk;
    }

    if (*dis) {
      const auto g = read_graph(dis_graph);
      const auto found = ddg::partitions_discover(g, limits);
      std::cout << "common-neighbour counts:";
      for (int c : found.count_values) std::cout << " " << c;
      std::cout << "\n";
      if (found.srg) {
        std::cout << "strongly regular (" << found.srg->v << "," << found.srg->k << "," << found.srg->lambda << ","
                  << found.srg->mu << ")\n";
      }
      for (const auto& p : found.partitions) {
        std::cout << p.params.str() << (p.params.proper() ? " proper" : " improper") << ":";
        for (int c : p.partition.labels()) std::cout << " " << c;
        std::cout << "\n";
      }
      return found.partitions.empty() ? kFailed : kOk;
    }

    if (*iso) {
      ddg::IsoOptions options;
      options.budget = seconds(iso_budget);
      options.limits = limits;
      const auto r = ddg::iso_check(read_graph(iso_a), read_graph(iso_b), options);
      std::cout << ddg::to_string(r.status);
      if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
      std::cout << "\n";
      if (r.status == ddg::IsoStatus::Isomorphic) {
        std::cout << "mapping:";
        for (int y : r.mapping) std::cout << " " << y;
        std::cout << "\n";
        return kOk;
      }
      return kFailed;
    }

    if (*t1) {
      const auto p = ddg::params_theorem1(pq, pd, pm, plambda);
      const auto id = ddg::identity_check(p);
      print_identity(p, id);
      return id.pass ? kOk : kFailed;
    }
    if (*t2) {
      const auto kappa = (ddg::ipow(pq, pd) - 1) / (pq - 1);
      const auto variant = pvariant == "printed" ? ddg::Theorem2Variant::AsPrinted
                                                 : ddg::Theorem2Variant::MiddleTermCorrected;
      const auto r = ddg::params_theorem2(pq, pd, pm, kappa, plambda, variant);
      print_identity(r.params, r.identity);
      return r.identity.pass ? kOk : kFailed;
    }
    if (*bg) {
      const auto r = ddg::params_bg(pgraph == "X" ? ddg::SymplecticVariant::X : ddg::SymplecticVariant::Y, pq, pe);
      print_identity(r.params, r.identity);
      return r.identity.pass ? kOk : kFailed;
    }

    if (*cat) {
      std::vector<std::string> texts;
      std::filesystem::path base;
      for (const auto& input : cat_inputs) {
        const auto text = slurp(input);
        if (base.empty() && input != "-") base = std::filesystem::path(input).parent_path();
        if (std::filesystem::path(input).extension() == ".jsonl") {
          std::istringstream lines(text);
          std::string line;
          while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) texts.push_back(line);
          }
        } else {
          texts.push_back(text);
        }
      }
      ddg::CatalogOptions options;
      options.limits = limits;
      options.iso_budget = seconds(cat_budget);
      options.base_dir = base;
      const auto index = ddg::run_catalog(texts, cat_out, options);
      std::cout << index.entries.size() << " entries, " << index.merged << " merged, " << index.failures.size()
                << " failures\n";
      for (const auto& e : index.entries) {
        std::cout << e.graph_file << " " << (e.params ? e.params->str() : "?") << "\n";
      }
      for (const auto& f : index.failures) std::cout << "descriptor " << f.source << ": " << f.message << "\n";
      return index.failures.empty() ? kOk : kFailed;
    }
  } catch (const ddg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
