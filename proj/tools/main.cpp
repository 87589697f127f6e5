#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bergman/fan.hpp"
#include "bergman/io.hpp"
#include "bergman/phylo.hpp"
#include "bergman/subdominant.hpp"
#include "bergman/tropical.hpp"

namespace {

using namespace bergman;

constexpr int kExitNotMember = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitLoop = 4;

struct CommonArgs {
  std::string matroid_path;
  std::string weights_path;
  std::string method = "all";
  std::string output_path;
  bool witness = false;
};

void write_result(const CommonArgs& args, const Matroid& m,
                  const WeightVector& w) {
  if (args.output_path.empty()) {
    write_weights_csv(std::cout, m, w);
    return;
  }
  std::ofstream out(args.output_path);
  if (!out)
    throw ParseError("cannot write file '" + args.output_path + "'");
  write_weights_csv(out, m, w);
}

void print_witnesses(const Matroid& m, const WeightVector& w,
                     const WeightVector& result, bool red) {
  std::cout << "\nwitnesses:\n";
  for (int e = 0; e < m.size(); ++e) {
    if (result[e] == w[e]) continue;
    Subset witness;
    if (red)
      red_rule_value_witness(m, w, e, &witness);
    else
      blue_rule_value_witness(m, w, e, &witness);
    std::cout << m.ground().label(e) << ": " << format_rat(w[e]) << " -> "
              << format_rat(result[e]) << " via "
              << (red ? "circuit " : "cocircuit ") << m.ground().format(witness)
              << "\n";
  }
}

int run_subdominant(const CommonArgs& args) {
  Matroid m = load_matroid_file(args.matroid_path);
  WeightVector w = load_weights_file(args.weights_path, m);

  WeightVector result;
  if (args.method == "blue") {
    result = subdominant(m, w);
  } else if (args.method == "red") {
    result = subdominant_red(m, w);
  } else if (args.method == "basis") {
    result = subdominant_via_basis(m, w);
  } else if (args.method == "tropical") {
    result = project_bergman(m, w);
  } else {
    result = subdominant(m, w);
    WeightVector red = subdominant_red(m, w);
    WeightVector basis = subdominant_via_basis(m, w);
    WeightVector tropical = project_bergman(m, w);
    if (red != result || basis != result || tropical != result) {
      std::cerr << "error: the four methods disagree\n";
      for (int e = 0; e < m.size(); ++e)
        std::cerr << m.ground().label(e) << ": blue " << format_rat(result[e])
                  << ", red " << format_rat(red[e]) << ", basis "
                  << format_rat(basis[e]) << ", tropical "
                  << format_rat(tropical[e]) << "\n";
      return kExitNotMember;
    }
    std::cerr << "note: methods agree (4/4)\n";
  }

  write_result(args, m, result);
  if (args.witness) print_witnesses(m, w, result, args.method == "red");
  return 0;
}

int run_check(const CommonArgs& args) {
  Matroid m = load_matroid_file(args.matroid_path);
  WeightVector w = load_weights_file(args.weights_path, m);

  auto uncovered = find_uncovered_element(m, w);
  auto circuit = find_unique_max_circuit(m, w);
  auto nowhere_min = find_nowhere_min_element(m, w);
  auto non_flat = find_non_flat_part(m, w);
  bool member = !uncovered.has_value();
  if (member != !circuit.has_value() || member != !nowhere_min.has_value() ||
      member != !non_flat.has_value()) {
    std::cerr << "error: membership characterizations disagree\n";
    return kExitNotMember;
  }

  std::cout << "member: " << (member ? "yes" : "no") << "\n";
  if (!member && args.witness) {
    std::cout << "uncovered element: " << m.ground().label(*uncovered) << "\n";
    std::cout << "unique-max circuit: " << m.ground().format(circuit->circuit)
              << " (max at " << m.ground().label(circuit->unique_max) << ")\n";
    std::cout << "nowhere-min element: " << m.ground().label(*nowhere_min)
              << "\n";
    std::cout << "non-flat part: " << m.ground().format(*non_flat) << "\n";
  }
  return member ? 0 : kExitNotMember;
}

int run_fit_tree(const std::string& distances_path,
                 const std::string& output_path,
                 const std::string& newick_path,
                 const std::string& json_path) {
  DissimilarityMap d = load_distance_file(distances_path);
  LinfFit fit = linf_fit(d);
  EquidistantTree tree = tree_from_ultrametric(fit.fitted);
  std::string newick = newick_export(tree);

  std::cout << "epsilon: " << format_rat(fit.epsilon) << "\n";
  std::cout << "tree: " << newick << "\n";

  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) throw ParseError("cannot write file '" + output_path + "'");
    write_distance_csv(out, fit.fitted);
  }
  if (!newick_path.empty()) {
    std::ofstream out(newick_path);
    if (!out) throw ParseError("cannot write file '" + newick_path + "'");
    out << newick << "\n";
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw ParseError("cannot write file '" + json_path + "'");
    out << tree_to_json(tree) << "\n";
  }
  return 0;
}

int run_info(const std::string& matroid_path, bool list) {
  Matroid m = load_matroid_file(matroid_path);
  std::cout << "elements:";
  for (const auto& l : m.ground().labels()) std::cout << " " << l;
  std::cout << "\nrank: " << m.rank() << "\n";
  std::cout << "bases: " << m.bases().size() << "\n";
  std::cout << "circuits: " << m.circuits().size() << "\n";
  std::cout << "cocircuits: " << m.cocircuits().size() << "\n";
  std::cout << "flats: " << m.flats().size() << "\n";
  std::cout << "hyperplanes: " << m.hyperplanes().size() << "\n";
  if (list) {
    for (const auto& b : m.bases())
      std::cout << "basis: " << m.ground().format(b) << "\n";
    for (const auto& c : m.circuits())
      std::cout << "circuit: " << m.ground().format(c) << "\n";
    for (const auto& c : m.cocircuits())
      std::cout << "cocircuit: " << m.ground().format(c) << "\n";
    for (const auto& f : m.flats())
      std::cout << "flat: " << m.ground().format(f) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Subdominant ultrametrics on matroids: rule-based repair, tropical "
      "projection, and equidistant tree fitting"};
  app.require_subcommand(1);

  CommonArgs sub_args;
  auto* sub = app.add_subcommand(
      "subdominant", "Largest matroid ultrametric below a weight vector");
  sub->add_option("-m,--matroid", sub_args.matroid_path, "Matroid JSON file")
      ->required();
  sub->add_option("-w,--weights", sub_args.weights_path, "Weight CSV file")
      ->required();
  sub->add_option("--method", sub_args.method,
                  "blue, red, basis, tropical, or all (default)")
      ->check(CLI::IsMember({"blue", "red", "basis", "tropical", "all"}));
  sub->add_option("-o,--output", sub_args.output_path,
                  "Write the result CSV here instead of stdout");
  sub->add_flag("--witness", sub_args.witness,
                "Also print the rule witness for each lowered weight");

  CommonArgs proj_args;
  proj_args.method = "tropical";
  auto* proj = app.add_subcommand(
      "project", "Nearest-point projection onto the matroid's tropical fan");
  proj->add_option("-m,--matroid", proj_args.matroid_path, "Matroid JSON file")
      ->required();
  proj->add_option("-w,--weights", proj_args.weights_path, "Weight CSV file")
      ->required();
  proj->add_option("-o,--output", proj_args.output_path,
                   "Write the result CSV here instead of stdout");

  CommonArgs check_args;
  auto* check = app.add_subcommand(
      "check", "Decide whether weights already form a matroid ultrametric");
  check->add_option("-m,--matroid", check_args.matroid_path,
                    "Matroid JSON file")
      ->required();
  check->add_option("-w,--weights", check_args.weights_path, "Weight CSV file")
      ->required();
  check->add_flag("--witness", check_args.witness,
                  "Print a violation witness for each failed test");

  std::string distances_path, fitted_path, newick_path, json_path;
  auto* fit = app.add_subcommand(
      "fit-tree", "Closest equidistant tree under the max-norm");
  fit->add_option("-d,--distances", distances_path, "Distance matrix CSV")
      ->required();
  fit->add_option("-o,--output", fitted_path, "Write the fitted matrix here");
  fit->add_option("--newick", newick_path, "Write the tree in Newick format");
  fit->add_option("--json", json_path, "Write the tree as JSON");

  std::string info_path;
  bool info_list = false;
  auto* info = app.add_subcommand("info", "Print matroid structure counts");
  info->add_option("-m,--matroid", info_path, "Matroid JSON file")->required();
  info->add_flag("--list", info_list,
                 "Also list bases, circuits, cocircuits, and flats");

  try {
    app.parse(argc, argv);
    if (sub->parsed()) return run_subdominant(sub_args);
    if (proj->parsed()) return run_subdominant(proj_args);
    if (check->parsed()) return run_check(check_args);
    if (fit->parsed())
      return run_fit_tree(distances_path, fitted_path, newick_path, json_path);
    if (info->parsed()) return run_info(info_path, info_list);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  } catch (const bergman::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const bergman::LoopError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLoop;
  } catch (const bergman::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotMember;
  }
}
