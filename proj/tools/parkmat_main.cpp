#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "parkmat/json_io.hpp"
#include "parkmat/matroid.hpp"
#include "parkmat/polymatroid.hpp"
#include "parkmat/representation.hpp"
#include "parkmat/set_system.hpp"
#include "parkmat/tutte.hpp"
#include "parkmat/verify.hpp"

namespace {

using namespace parkmat;
using nlohmann::json;

struct Options {
  std::string input;
  std::string mode = "powers";
  std::uint64_t seed = 0;
  std::string format = "text";
  int max_n = 24;
  int max_degree = -1;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

ReprMode parse_mode(const std::string& mode) {
  if (mode == "powers") return ReprMode::powers;
  if (mode == "random") return ReprMode::random;
  throw InputError("unknown representation mode: " + mode);
}

void add_common(CLI::App* cmd, Options& opt, bool needs_input = true) {
  if (needs_input)
    cmd->add_option("input", opt.input, "set system JSON file (- for stdin)")->required();
  cmd->add_option("--mode", opt.mode, "representation mode: powers|random");
  cmd->add_option("--seed", opt.seed, "seed for random mode");
  cmd->add_option("--format", opt.format, "output format: text|json");
  cmd->add_option("--max-n", opt.max_n, "2^n subset sweep budget");
  cmd->add_option("--max-degree", opt.max_degree, "cap on graded-dimension degrees");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

TransversalMatroid load_matroid(const Options& opt, SetSystem* raw = nullptr) {
  SetSystem sys = parse_set_system(read_input(opt.input));
  if (raw) *raw = sys;
  return TransversalMatroid(normalize_presentation(sys));
}

int cmd_info(const Options& opt) {
  SetSystem raw;
  TransversalMatroid m = load_matroid(opt, &raw);
  TuttePoly t = tutte(m, {opt.max_n, true});
  if (opt.format == "json") {
    emit(json{{"n", m.n()},
              {"blocks", raw.d()},
              {"rank", m.rank_of_matroid()},
              {"bases", t.eval11()}});
  } else {
    std::cout << "n      = " << m.n() << "\n"
              << "blocks = " << raw.d() << "\n"
              << "rank   = " << m.rank_of_matroid() << "\n"
              << "bases  = " << t.eval11() << "\n";
  }
  return 0;
}

int cmd_tutte(const Options& opt) {
  TransversalMatroid m = load_matroid(opt);
  TuttePoly t = tutte(m, {opt.max_n, true});
  if (opt.format == "json")
    emit(tutte_json(t));
  else
    std::cout << t.text() << "\n";
  return 0;
}

int cmd_hvector(const Options& opt) {
  TransversalMatroid m = load_matroid(opt);
  HVector h = h_vector_from_tutte(m, {opt.max_n, true});
  if (opt.format == "json") {
    emit(hvector_json(h));
  } else {
    std::cout << vec_str(h) << "\n";
  }
  return 0;
}

int cmd_polytope(const Options& opt) {
  TransversalMatroid m = load_matroid(opt);
  Polymatroid p(parking_submodular(m));
  if (opt.format == "json") {
    emit(polytope_json(p));
    return 0;
  }
  std::cout << "facets:\n";
  for (const auto& line : facet_lines(p.table())) std::cout << "  " << line << "\n";
  const auto& graded = p.lattice_points();
  std::cout << "lattice points by degree:\n";
  for (std::size_t k = 0; k < graded.size(); ++k) {
    std::cout << "  degree " << k << " (" << graded[k].size() << "):";
    for (const auto& q : graded[k]) std::cout << " " << exponent_str(q);
    std::cout << "\n";
  }
  std::cout << "minimal nonparking generators:\n";
  for (const auto& q : p.minimal_nonmembers())
    std::cout << "  " << monomial_text(q) << " " << exponent_str(q) << "\n";
  return 0;
}

int cmd_parking(const Options& opt, int degree, bool all) {
  TransversalMatroid m = load_matroid(opt);
  Polymatroid p(parking_submodular(m));
  const auto& graded = p.lattice_points();
  json layers = json::array();
  std::size_t lo = 0, hi = graded.size();
  if (!all) {
    if (degree < 0) throw InputError("parking: give --degree k or --all");
    lo = static_cast<std::size_t>(degree);
    hi = std::min(graded.size(), lo + 1);
  }
  for (std::size_t k = lo; k < hi; ++k) {
    json layer = json::array();
    for (const auto& q : graded[k]) layer.push_back(q);
    layers.push_back(std::move(layer));
  }
  if (opt.format == "json") {
    emit(json{{"from_degree", lo}, {"points_by_degree", layers}});
    return 0;
  }
  for (std::size_t k = lo; k < hi; ++k) {
    std::cout << "degree " << k << " (" << graded[k].size() << "):";
    for (const auto& q : graded[k]) std::cout << " " << exponent_str(q);
    std::cout << "\n";
  }
  if (!all && lo >= graded.size())
    std::cout << "degree " << degree << " (0):\n";
  return 0;
}

int cmd_powerideal(const Options& opt) {
  SetSystem raw;
  TransversalMatroid m = load_matroid(opt, &raw);
  Representation v = build_representation(m.system(), parse_mode(opt.mode), opt.seed);
  std::vector<Hyperplane> hs = hyperplanes_with_forms(v);
  if (opt.format == "json") {
    emit(hyperplanes_json(v, hs));
    return 0;
  }
  std::cout << hs.size() << " hyperplanes (mode=" << mode_name(v.mode) << "):\n";
  for (const auto& h : hs)
    std::cout << "  (" << form_text(h.form) << ")^" << h.rho
              << "   H = " << m.system().label_set(h.flat) << "\n";
  return 0;
}

VerifyOptions verify_options(const Options& opt) {
  VerifyOptions vo;
  vo.mode = parse_mode(opt.mode);
  vo.seed = opt.seed;
  vo.max_n = opt.max_n;
  vo.max_degree = opt.max_degree;
  return vo;
}

int cmd_verify(const Options& opt) {
  SetSystem sys = parse_set_system(read_input(opt.input));
  VerificationReport rep = run_verification(sys, verify_options(opt));
  if (opt.format == "json") {
    emit(verification_json(rep));
  } else {
    if (rep.renormalized)
      std::cout << "presentation reduced from " << rep.input_d << " to " << rep.d
                << " blocks\n";
    for (const auto& s : rep.stages) {
      std::cout << (s.pass ? "PASS " : "FAIL ") << s.name << ": " << s.detail << " ("
                << s.ms << " ms)\n";
    }
    std::cout << (rep.pass ? "VERIFIED" : "FAILED") << "\n";
  }
  return rep.pass ? 0 : 1;
}

int cmd_report(const Options& opt) {
  SetSystem sys = parse_set_system(read_input(opt.input));
  SetSystem norm = normalize_presentation(sys);
  TransversalMatroid m(norm);
  TuttePoly t = tutte(m, {opt.max_n, true});
  Polymatroid p(parking_submodular(m));
  VerificationReport rep = run_verification(sys, verify_options(opt));

  json j;
  j["system"] = set_system_json(sys);
  j["presentation"] = set_system_json(norm);
  json matroid;
  matroid["n"] = m.n();
  matroid["rank"] = m.rank_of_matroid();
  matroid["bases"] = t.eval11();
  matroid["tutte"] = tutte_json(t);
  matroid["h_vector"] = hvector_json(h_vector_from_tutte(t, m.n(), m.rank_of_matroid()));
  json cocircs = json::array();
  for (Mask c : m.cocircuits()) {
    json labels = json::array();
    for (int s = 0; s < m.n(); ++s)
      if (has_bit(c, s)) labels.push_back(norm.ground.labels[s]);
    cocircs.push_back(std::move(labels));
  }
  matroid["cocircuits"] = std::move(cocircs);
  j["matroid"] = std::move(matroid);
  j["polymatroid"] = polytope_json(p);
  try {
    Representation v = build_representation(norm, parse_mode(opt.mode), opt.seed);
    j["power_ideal"] = hyperplanes_json(v, hyperplanes_with_forms(v));
  } catch (const NotGenericError& e) {
    j["power_ideal"] = json{{"error", e.what()}};
  }
  j["verification"] = verification_json(rep);
  emit(j);
  return rep.pass ? 0 : 1;
}

int cmd_gen(int n, int d, std::uint64_t seed) {
  emit(set_system_json(random_system(n, d, seed)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transversal matroid invariants, parking polymatroids and power ideals"};
  app.require_subcommand(1);

  Options opt;
  int degree = -1;
  bool all = false;
  int gen_n = 6, gen_d = 3;
  std::uint64_t gen_seed = 0;

  auto* info = app.add_subcommand("info", "ground size, rank, number of bases");
  add_common(info, opt);
  auto* tut = app.add_subcommand("tutte", "Tutte polynomial");
  add_common(tut, opt);
  auto* hv = app.add_subcommand("hvector", "h-vector (Tutte specialization)");
  add_common(hv, opt);
  auto* poly = app.add_subcommand("polytope", "parking polymatroid: facets, points, generators");
  add_common(poly, opt);
  auto* park = app.add_subcommand("parking", "parking functions by degree");
  add_common(park, opt);
  park->add_option("--degree", degree, "single degree to list");
  park->add_flag("--all", all, "list every degree");
  auto* pid = app.add_subcommand("powerideal", "hyperplanes, linear forms and exponents");
  add_common(pid, opt);
  auto* ver = app.add_subcommand("verify", "full verification pipeline");
  add_common(ver, opt);
  auto* repc = app.add_subcommand("report", "everything, as canonical JSON");
  add_common(repc, opt);
  auto* gen = app.add_subcommand("gen", "emit a reproducible random set system");
  gen->add_option("--n", gen_n, "ground set size")->required();
  gen->add_option("--d", gen_d, "number of blocks")->required();
  gen->add_option("--seed", gen_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(opt);
    if (tut->parsed()) return cmd_tutte(opt);
    if (hv->parsed()) return cmd_hvector(opt);
    if (poly->parsed()) return cmd_polytope(opt);
    if (park->parsed()) return cmd_parking(opt, degree, all);
    if (pid->parsed()) return cmd_powerideal(opt);
    if (ver->parsed()) return cmd_verify(opt);
    if (repc->parsed()) return cmd_report(opt);
    if (gen->parsed()) return cmd_gen(gen_n, gen_d, gen_seed);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const NotGenericError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
