// Command-line front end: info / classify / spectrum / gen / verify.
//
// Exit codes: 0 success; 1 verification counterexample or engine failure;
// 2 usage or parse error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sgt/families.hpp"
#include "sgt/inertia.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/structure.hpp"
#include "sgt/verify.hpp"

namespace {

sgt::SignedGraph load_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return sgt::parse_sgf(buf.str());
  }
  if (!std::filesystem::exists(path))
    throw std::invalid_argument("cannot open '" + path + "'");
  return sgt::read_sgf_file(path);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text;
}

// Eigenvalues at 6 significant digits; values inside the zero tolerance are
// shown as 0.
std::string spectrum_line(const sgt::Spectrum& spectrum) {
  std::ostringstream out;
  out << "spectrum:" << std::setprecision(6);
  for (double x : spectrum.values()) {
    double shown = std::abs(x) < spectrum.zero_tolerance() ? 0.0 : x;
    out << ' ' << shown;
  }
  out << '\n';
  return out.str();
}

int cmd_info(const std::string& input) {
  sgt::SignedGraph g = load_input(input);
  if (g.order() == 0) {
    std::cout << "n=0 m=0 connected=false girth=undefined balanced=true inertia=(0,0,0)\n"
              << "spectrum:\n";
    return 0;
  }
  bool connected = sgt::is_connected(g);
  std::optional<int> gr = sgt::girth(g);
  std::cout << "n=" << g.order() << " m=" << g.size()
            << " connected=" << (connected ? "true" : "false") << " girth=";
  if (gr)
    std::cout << *gr;
  else
    std::cout << "undefined";
  std::cout << " balanced=" << (sgt::is_balanced(g) ? "true" : "false")
            << " inertia=" << sgt::to_string(sgt::exact_inertia(g)) << '\n'
            << spectrum_line(sgt::float_spectrum(g));
  return 0;
}

int cmd_classify(const std::string& input) {
  sgt::SignedGraph g = load_input(input);
  sgt::VerificationRecord rec = sgt::check_bound(g);
  sgt::check_equality_families(rec);
  std::cout << sgt::to_string(rec.family) << " status=" << sgt::to_string(rec.status) << '\n';
  std::cout << "girth=" << rec.girth << " floor=" << rec.bound_floor
            << " p_plus=" << rec.inertia.p_plus
            << " balanced=" << (rec.balanced ? "true" : "false") << '\n';
  for (const sgt::Discrepancy& d : rec.discrepancies)
    std::cout << "note " << d.name << ": " << d.detail << '\n';
  return 0;
}

int cmd_spectrum(const std::string& input, bool exact_only, bool float_only) {
  sgt::SignedGraph g = load_input(input);
  if (!exact_only) std::cout << spectrum_line(sgt::float_spectrum(g));
  if (!float_only) std::cout << "inertia=" << sgt::to_string(sgt::exact_inertia(g)) << '\n';
  return 0;
}

sgt::PendantStarSpec parse_star_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("star spec must look like pos:leaves, got '" + text + "'");
  sgt::PendantStarSpec spec;
  try {
    spec.position = std::stoi(text.substr(0, colon));
    spec.leaves = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("star spec must look like pos:leaves, got '" + text + "'");
  }
  return spec;
}

void dump_witnesses(const sgt::VerificationReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write_one = [&](const std::string& stem, int index, const std::string& sgf) {
    std::ostringstream name;
    name << stem << '-' << std::setw(3) << std::setfill('0') << index << ".sgf";
    std::ofstream out(fs::path(dir) / name.str(), std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write into '" + dir + "'");
    out << sgf;
  };
  int i = 0;
  for (const std::string& sgf : report.bound_counterexamples) write_one("counterexample", i++, sgf);
  for (const auto& [name, tally] : report.discrepancies) {
    int j = 0;
    for (const std::string& sgf : tally.examples) write_one(name, j++, sgf);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signed graph toolkit: spectra, extremal families, bound verification"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;

  CLI::App* info = app.add_subcommand("info", "order, size, girth, balance, inertia, spectrum");
  info->add_option("input", input, "SGF file, or - for standard input")->required();

  CLI::App* classify =
      app.add_subcommand("classify", "family label and bound status of a connected cyclic graph");
  classify->add_option("input", input, "SGF file, or - for standard input")->required();

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues and exact inertia");
  spectrum->add_option("input", input, "SGF file, or - for standard input")->required();
  bool exact_only = false;
  bool float_only = false;
  CLI::Option* sx = spectrum->add_flag("--exact-only", exact_only, "print only the exact inertia");
  CLI::Option* sf =
      spectrum->add_flag("--float-only", float_only, "print only the floating eigenvalues");
  sx->excludes(sf);

  CLI::App* gen = app.add_subcommand("gen", "construct a named family member as SGF");
  gen->require_subcommand(1);
  gen->add_option("--out", out_path, "output file (default: standard output)");
  // Let `gen <family> ... --out FILE` resolve --out on the parent (children
  // inherit fallthrough at creation).
  gen->fallthrough();

  int gen_n = 0;
  std::string gen_sign = "balanced";
  CLI::App* gen_cycle = gen->add_subcommand("cycle", "cycle on n vertices");
  gen_cycle->add_option("n", gen_n, "number of vertices")->required()->check(CLI::Range(3, 1000000));
  gen_cycle->add_option("sign", gen_sign, "balanced | unbalanced")
      ->check(CLI::IsMember({"balanced", "unbalanced"}));

  int path_n = 0;
  CLI::App* gen_path = gen->add_subcommand("path", "path on n vertices");
  gen_path->add_option("n", path_n, "number of vertices")->required()->check(CLI::Range(1, 1000000));

  int star_leaves = 0;
  CLI::App* gen_star = gen->add_subcommand("star", "star with the given number of leaves");
  gen_star->add_option("leaves", star_leaves, "number of leaves")
      ->required()
      ->check(CLI::Range(1, 1000000));

  std::vector<int> mp_parts;
  CLI::App* gen_mp =
      gen->add_subcommand("multipartite", "all-positive complete multipartite graph");
  gen_mp->add_option("parts", mp_parts, "part sizes (two or more)")->required()->expected(2, -1);

  int uni_girth = 0;
  std::vector<std::string> uni_stars;
  bool uni_unbalanced = false;
  CLI::App* gen_uni = gen->add_subcommand("unicyclic", "cycle with pendant stars at given positions");
  gen_uni->add_option("girth", uni_girth, "cycle length")->required()->check(CLI::Range(3, 1000000));
  gen_uni->add_option("--star", uni_stars, "pendant star as pos:leaves (repeatable)");
  gen_uni->add_flag("--unbalanced", uni_unbalanced, "negate one cycle edge");

  int ps_girth = 0;
  int ps_leaves = 0;
  std::string ps_sign = "balanced";
  CLI::App* gen_ps =
      gen->add_subcommand("pendant-star", "cycle plus one cut vertex carrying pendant leaves");
  gen_ps->add_option("girth", ps_girth, "cycle length")->required()->check(CLI::Range(3, 1000000));
  gen_ps->add_option("leaves", ps_leaves, "number of pendant leaves")
      ->required()
      ->check(CLI::Range(1, 1000000));
  gen_ps->add_option("sign", ps_sign, "balanced | unbalanced")
      ->check(CLI::IsMember({"balanced", "unbalanced"}));

  std::vector<int> theta_orders;
  bool theta_neg_kl = false;
  bool theta_neg_lm = false;
  CLI::App* gen_theta = gen->add_subcommand("theta", "two hubs joined by three disjoint paths");
  gen_theta->add_option("orders", theta_orders, "path orders k l m (each >= 2)")
      ->required()
      ->expected(3);
  gen_theta->add_flag("--negate-kl", theta_neg_kl, "make the circuit through paths k,l negative");
  gen_theta->add_flag("--negate-lm", theta_neg_lm, "make the circuit through paths l,m negative");

  CLI::App* verify = app.add_subcommand("verify", "exhaustive bound and family audit");
  int max_n = 7;
  int jobs = 1;
  std::uint64_t seed = sgt::kDefaultSweepSeed;
  bool lemma_checks = false;
  bool no_footer = false;
  bool verify_exact_only = false;
  std::string dump_dir;
  verify->add_option("--max-n", max_n, "largest order to sweep (3..8)")->check(CLI::Range(3, 8));
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--seed", seed, "seed for randomized probes");
  verify->add_flag("--lemma-checks", lemma_checks, "evaluate the supporting facts per record");
  verify->add_option("--out", out_path, "write the JSON report here instead of standard output");
  verify->add_option("--dump-dir", dump_dir, "write witness SGF files into this directory");
  verify->add_flag("--no-footer", no_footer, "omit the runtime-statistics footer");
  verify->add_flag("--exact-only", verify_exact_only, "skip the floating-point cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(input);
    if (classify->parsed()) return cmd_classify(input);
    if (spectrum->parsed()) return cmd_spectrum(input, exact_only, float_only);

    if (gen->parsed()) {
      sgt::SignedGraph g = [&]() {
        if (gen_cycle->parsed()) return sgt::make_cycle(gen_n, gen_sign == "balanced");
        if (gen_path->parsed()) return sgt::make_path(path_n);
        if (gen_star->parsed()) return sgt::make_star(star_leaves);
        if (gen_mp->parsed()) return sgt::make_complete_multipartite(mp_parts);
        if (gen_uni->parsed()) {
          std::vector<sgt::PendantStarSpec> stars;
          for (const std::string& s : uni_stars) stars.push_back(parse_star_spec(s));
          return sgt::make_canonical_unicyclic(uni_girth, stars, !uni_unbalanced);
        }
        if (gen_ps->parsed())
          return sgt::make_cycle_with_pendant_star(ps_girth, ps_sign == "balanced", ps_leaves);
        if (gen_theta->parsed())
          return sgt::make_theta(theta_orders[0], theta_orders[1], theta_orders[2],
                                 theta_neg_kl ? -1 : +1, theta_neg_lm ? -1 : +1);
        throw std::invalid_argument("unknown family");
      }();
      write_output(out_path, sgt::write_sgf(g));
      return 0;
    }

    if (verify->parsed()) {
      sgt::SweepOptions options;
      options.max_n = max_n;
      options.jobs = jobs;
      options.seed = seed;
      options.lemma_checks = lemma_checks;
      options.cross_check = !verify_exact_only;
      sgt::VerificationReport report = sgt::sweep(options);
      bool footer = !no_footer;
      if (!out_path.empty() && out_path != "-") {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        sgt::write_report(out, report, footer);
        std::cout << sgt::summary_table(report);
      } else {
        sgt::write_report(std::cout, report, footer);
        std::cerr << sgt::summary_table(report);
      }
      if (!dump_dir.empty()) dump_witnesses(report, dump_dir);
      return report.bound_counterexamples.empty() ? 0 : 1;
    }

    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const sgt::EngineMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const sgt::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
