#include "sgt/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "sgt/enumerate.hpp"
#include "sgt/structure.hpp"

namespace sgt {

using nlohmann::json;

namespace {
constexpr int kExampleCap = 5;
constexpr int kCounterexampleCap = 100;
}  // namespace

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::strict: return "strict";
    case BoundStatus::equality: return "equality";
    case BoundStatus::plus_one: return "plus-one";
    case BoundStatus::higher: return "higher";
  }
  return "?";
}

EngineMismatchError::EngineMismatchError(std::string sgf, const std::string& message)
    : std::runtime_error("engine mismatch: " + message), sgf_(std::move(sgf)) {}

bool stated_cycle_floor(bool balanced, int n) {
  int r = n % 4;
  return balanced ? (r == 0 || r == 1) : (r == 2 || r == 3);
}

bool empirical_cycle_floor(bool balanced, int n) {
  int r = n % 4;
  return balanced ? (r == 0 || r == 3) : (r == 1 || r == 2);
}

VerificationRecord check_bound(const SignedGraph& g) {
  if (g.order() == 0 || !is_connected(g))
    throw std::invalid_argument("check_bound: input must be a connected nonempty graph");
  auto gr = girth(g);
  if (!gr) throw std::invalid_argument("check_bound: girth undefined (acyclic input)");

  VerificationRecord rec;
  rec.sgf = write_sgf(g);
  rec.n = g.order();
  rec.m = g.size();
  rec.girth = *gr;
  rec.balanced = is_balanced(g);
  rec.inertia = exact_inertia(g);
  rec.bound_floor = (*gr + 1) / 2 - 1;
  int diff = rec.inertia.p_plus - rec.bound_floor;
  rec.status = diff < 0   ? BoundStatus::strict
               : diff == 0 ? BoundStatus::equality
               : diff == 1 ? BoundStatus::plus_one
                           : BoundStatus::higher;
  return rec;
}

namespace {

// Text reading of the unicyclic plus-one conditions: girth parity paired
// with "all gaps odd" for odd girth, "exactly one even gap" for even girth.
bool unicyclic_plus_one_text(int girth, const StarDecomposition& sd) {
  ParityCondition pc = parity_condition(sd);
  if (pc == ParityCondition::single_star) return true;
  if (girth % 2 == 1) return pc == ParityCondition::all_gaps_odd;
  return pc == ParityCondition::one_even_gap;
}

// Pairing forced by the rank computation (and confirmed by the sweep): even
// girth wants all gaps odd, odd girth wants exactly one even gap.
bool unicyclic_plus_one_empirical(int girth, const StarDecomposition& sd) {
  ParityCondition pc = parity_condition(sd);
  if (pc == ParityCondition::single_star) return true;
  if (girth % 2 == 0) return pc == ParityCondition::all_gaps_odd;
  return pc == ParityCondition::one_even_gap;
}

// The three explicitly listed plus-one theta graphs: orders (4,5,5) and
// (5,5,5) with every circuit positive, and (3,5,5) with the two short
// circuits negative.
bool theta_listed(const ThetaFamily& f) {
  auto all_positive = [&]() {
    return f.cycles[0].sign > 0 && f.cycles[1].sign > 0 && f.cycles[2].sign > 0;
  };
  if (f.orders == std::array<int, 3>{4, 5, 5} && all_positive()) return true;
  if (f.orders == std::array<int, 3>{5, 5, 5} && all_positive()) return true;
  if (f.orders == std::array<int, 3>{3, 5, 5} &&
      f.cycles == std::array<ThetaCycle, 3>{ThetaCycle{6, -1}, ThetaCycle{6, -1},
                                            ThetaCycle{8, +1}})
    return true;
  return false;
}

}  // namespace

VerificationRecord& check_equality_families(VerificationRecord& rec) {
  SignedGraph g = parse_sgf(rec.sgf);
  rec.family = recognize(g);
  rec.is_cycle_graph = std::holds_alternative<CycleFamily>(rec.family);
  rec.is_balanced_multipartite = is_balanced_complete_multipartite(g);

  auto add = [&](std::string name, std::string detail) {
    rec.discrepancies.push_back(Discrepancy{std::move(name), std::move(detail)});
  };
  const bool eq = rec.status == BoundStatus::equality;
  const bool p1 = rec.status == BoundStatus::plus_one;

  if (const auto* c = std::get_if<CycleFamily>(&rec.family)) {
    bool stated_eq = stated_cycle_floor(c->balanced, c->n);
    if (!eq && !p1) {
      std::ostringstream d;
      d << "cycle with status " << to_string(rec.status)
        << "; cycles should sit at the floor or one above it";
      add("cycle-status-unexpected", d.str());
    } else if (eq != stated_eq) {
      std::ostringstream d;
      d << (c->balanced ? "balanced" : "unbalanced") << " cycle n=" << c->n << " (n mod 4 = "
        << c->n % 4 << ") has status " << to_string(rec.status)
        << " but the stated congruence classes predict " << (stated_eq ? "equality" : "plus-one");
      add("cycle-class", d.str());
    }
  } else if (const auto* mp = std::get_if<CompleteMultipartiteFamily>(&rec.family)) {
    if (eq) {
      if (!mp->parts.empty() && mp->parts.front() == 1) {
        std::ostringstream d;
        d << "balanced complete multipartite " << to_string(rec.family)
          << " achieves equality although the stated condition requires every part size >= 2";
        add("multipartite-part-size", d.str());
      }
    } else {
      std::ostringstream d;
      d << "balanced complete multipartite with status " << to_string(rec.status)
        << "; expected equality (p+ = 1, girth 3 or 4)";
      add("multipartite-not-equality", d.str());
    }
  } else if (const auto* u = std::get_if<CanonicalUnicyclicFamily>(&rec.family)) {
    bool text = unicyclic_plus_one_text(u->girth, u->stars);
    bool emp = unicyclic_plus_one_empirical(u->girth, u->stars);
    if (p1 != emp) {
      std::ostringstream d;
      d << to_string(rec.family) << " status " << to_string(rec.status)
        << " contradicts the parity rule (girth parity vs gap parity) even after interchange";
      add("unicyclic-parity-empirical", d.str());
    }
    if (p1 != text) {
      std::ostringstream d;
      d << to_string(rec.family) << " (girth mod 4 = " << u->girth % 4 << ", "
        << to_string(parity_condition(u->stars)) << ") has status " << to_string(rec.status)
        << " but the stated parity conditions predict " << (text ? "plus-one" : "a different status");
      add("unicyclic-parity-stated", d.str());
    }
  } else if (const auto* ps = std::get_if<PendantStarCycleFamily>(&rec.family)) {
    bool stated = stated_cycle_floor(ps->balanced, ps->girth);
    bool emp = empirical_cycle_floor(ps->balanced, ps->girth);
    if (p1 != emp) {
      std::ostringstream d;
      d << to_string(rec.family) << " status " << to_string(rec.status)
        << " contradicts the corrected cycle classes";
      add("pendant-star-cycle-empirical", d.str());
    }
    if (p1 != stated) {
      std::ostringstream d;
      d << to_string(rec.family) << " (girth mod 4 = " << ps->girth % 4 << ") has status "
        << to_string(rec.status) << " but the stated classes predict "
        << (stated ? "plus-one" : "a different status");
      add("pendant-star-cycle-class", d.str());
    }
  } else if (const auto* th = std::get_if<ThetaFamily>(&rec.family)) {
    if (p1 && !theta_listed(*th)) {
      std::ostringstream d;
      d << to_string(rec.family) << " is at plus-one but is not among the listed theta graphs";
      add("plus-one-unlisted-family", d.str());
    }
    if (!p1 && theta_listed(*th)) {
      std::ostringstream d;
      d << to_string(rec.family) << " is listed as plus-one but has status "
        << to_string(rec.status);
      add("theta-fixture-status", d.str());
    }
  } else {
    if (p1) {
      std::ostringstream d;
      d << to_string(rec.family) << " graph at plus-one, outside every listed family";
      add("plus-one-unlisted-family", d.str());
    }
  }

  if (eq && !rec.is_cycle_graph && !rec.is_balanced_multipartite) {
    std::ostringstream d;
    d << to_string(rec.family)
      << " achieves the floor but is neither a cycle nor a balanced complete multipartite graph";
    add("equality-unlisted-family", d.str());
  }
  return rec;
}

std::vector<std::pair<std::string, bool>> lemma_checks(const SignedGraph& g,
                                                       const VerificationRecord& rec,
                                                       std::uint64_t seed) {
  (void)rec;
  std::vector<std::pair<std::string, bool>> out;
  const int n = g.order();
  const InertiaTriple whole = exact_inertia(g);

  // Removing a pendant vertex together with its neighbor costs exactly one
  // positive eigenvalue.
  VertexSet pend = pendant_vertices(g);
  if (!pend.empty()) {
    int x = pend.members().front();
    int y = -1;
    for (const Edge& e : g.edges()) {
      if (e.u == x) y = e.v;
      if (e.v == x) y = e.u;
      if (y >= 0) break;
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (v != x && v != y) keep.push_back(v);
    InertiaTriple sub = exact_inertia(induced_subgraph(g, VertexSet(std::move(keep))));
    out.emplace_back("pendant-identity", whole.p_plus == sub.p_plus + 1);
  }

  // Interlacing: induced subgraphs cannot gain positive or negative
  // eigenvalues. One random proper nonempty subset per call.
  if (n >= 2) {
    std::mt19937_64 rng(seed);
    std::vector<int> members;
    for (int attempt = 0; attempt < 100; ++attempt) {
      members.clear();
      for (int v = 0; v < n; ++v)
        if (rng() & 1) members.push_back(v);
      if (!members.empty() && static_cast<int>(members.size()) < n) break;
    }
    if (members.empty() || static_cast<int>(members.size()) == n) members = {0};
    InertiaTriple sub = exact_inertia(induced_subgraph(g, VertexSet(std::move(members))));
    out.emplace_back("interlacing-probe",
                     sub.p_plus <= whole.p_plus && sub.n_minus <= whole.n_minus);
  }

  out.emplace_back("p-plus-one-multipartite",
                   (whole.p_plus == 1) == is_balanced_complete_multipartite(g));

  auto deg = g.degrees();
  bool is_cycle_graph = n >= 3 && g.size() == n &&
                        std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }) &&
                        is_connected(g);
  if (is_cycle_graph && !is_balanced(g))
    out.emplace_back("unbalanced-cycle-floor", whole.p_plus >= 2);

  if (auto cyc = shortest_cycle(g)) {
    const int gr = cyc->length();
    const int ceil_half = (gr + 1) / 2;
    bool ok = true;
    for (const ExternalPath& p : external_paths(g, *cyc)) ok = ok && p.length >= ceil_half;
    out.emplace_back("external-path-length", ok);

    // If the shortest cycle already carries all of p+, nothing may live at
    // distance two or more from it.
    int cycle_p = cycle_inertia(gr, cyc->sign > 0).p_plus;
    bool pass = true;
    if (cycle_p == whole.p_plus) {
      LayerPartition layers = neighborhood_layers(g, VertexSet(cyc->vertices));
      pass = layers.layers.size() <= 1;
    }
    out.emplace_back("distant-neighborhood", pass);
  }
  return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = seed ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xBF58476D1CE4E5B9ULL);
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

VerificationRecord process_one(const SignedGraph& h, const SweepOptions& opt,
                               std::uint64_t record_seed) {
  VerificationRecord rec = check_bound(h);
  if (opt.cross_check) {
    InertiaTriple floating = float_spectrum(h).sign_counts();
    if (!(floating == rec.inertia))
      throw EngineMismatchError(rec.sgf, "exact " + to_string(rec.inertia) + " vs floating " +
                                             to_string(floating) + " on\n" + rec.sgf);
  }
  check_equality_families(rec);
  if (opt.lemma_checks) rec.lemmas = lemma_checks(h, rec, record_seed);
  return rec;
}

void aggregate(VerificationReport& report) {
  for (const VerificationRecord& rec : report.records) {
    ++report.counts[{rec.n, rec.girth, rec.status}];
    if (rec.status == BoundStatus::strict &&
        static_cast<int>(report.bound_counterexamples.size()) < kCounterexampleCap)
      report.bound_counterexamples.push_back(rec.sgf);
    for (const Discrepancy& d : rec.discrepancies) {
      DiscrepancyTally& tally = report.discrepancies[d.name];
      ++tally.count;
      if (static_cast<int>(tally.examples.size()) < kExampleCap)
        tally.examples.push_back(rec.sgf);
    }
    for (const auto& [name, pass] : rec.lemmas) {
      LemmaTally& tally = report.lemmas[name];
      ++(pass ? tally.pass : tally.fail);
    }
    if ((rec.inertia.p_plus == 1) != rec.is_balanced_multipartite) ++report.p_plus_one_mismatches;

    const int ceil_half = rec.bound_floor + 1;
    bool stated_excluded =
        (rec.is_cycle_graph && stated_cycle_floor(rec.balanced, rec.n)) ||
        rec.is_balanced_multipartite;
    if (!stated_excluded && rec.inertia.p_plus < ceil_half) {
      ++report.strict_bound.stated_violations;
      if (static_cast<int>(report.strict_bound.stated_examples.size()) < kExampleCap)
        report.strict_bound.stated_examples.push_back(rec.sgf);
    }
    bool empirical_excluded =
        (rec.is_cycle_graph && empirical_cycle_floor(rec.balanced, rec.n)) ||
        rec.is_balanced_multipartite;
    if (!empirical_excluded && rec.inertia.p_plus < ceil_half) {
      ++report.strict_bound.empirical_violations;
      if (static_cast<int>(report.strict_bound.empirical_examples.size()) < kExampleCap)
        report.strict_bound.empirical_examples.push_back(rec.sgf);
    }
  }
}

}  // namespace

CycleClassAudit audit_cycle_classes(int max_cycle_n) {
  if (max_cycle_n < 3) throw std::invalid_argument("cycle audit: max must be >= 3");
  CycleClassAudit audit;
  audit.max_n = max_cycle_n;
  std::map<std::pair<bool, int>, std::set<bool>> outcomes;
  for (int n = 3; n <= max_cycle_n; ++n) {
    for (bool balanced : {true, false}) {
      CycleClassRow row;
      row.n = n;
      row.balanced = balanced;
      InertiaTriple symbolic = cycle_inertia(n, balanced);
      InertiaTriple exact = exact_inertia(make_cycle(n, balanced));
      InertiaTriple floating = cycle_spectrum_closed_form(n, balanced).sign_counts();
      row.p_plus = symbolic.p_plus;
      row.engines_agree = symbolic == exact && symbolic == floating;
      row.floor_value = (n + 1) / 2 - 1;
      row.floor_achieved = symbolic.p_plus == row.floor_value;
      row.stated_floor = stated_cycle_floor(balanced, n);
      row.mismatch = row.floor_achieved != row.stated_floor;
      audit.all_engines_agree = audit.all_engines_agree && row.engines_agree;
      if (row.mismatch) ++audit.mismatch_count;
      outcomes[{balanced, n % 4}].insert(row.floor_achieved);
      audit.rows.push_back(row);
    }
  }
  for (int r = 0; r < 4; ++r) {
    for (bool balanced : {true, false}) {
      auto it = outcomes.find({balanced, r});
      if (it == outcomes.end()) continue;
      if (it->second.size() > 1) {
        audit.residues_consistent = false;
        continue;
      }
      if (*it->second.begin()) {
        (balanced ? audit.balanced_floor_residues : audit.unbalanced_floor_residues).push_back(r);
      }
    }
  }
  return audit;
}

VerificationReport sweep(const SweepOptions& options) {
  if (options.max_n < 3 || options.max_n > 8)
    throw std::invalid_argument("sweep: max_n must be in 3..8");
  if (options.jobs < 1) throw std::invalid_argument("sweep: jobs must be >= 1");
  auto start = std::chrono::steady_clock::now();

  std::vector<SignedGraph> tasks;
  for (int n = 3; n <= options.max_n; ++n)
    for (SignedGraph& g : enumerate_connected_graphs(n))
      if (g.size() >= g.order()) tasks.push_back(std::move(g));  // connected + cyclic

  std::vector<std::vector<VerificationRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (error) return;
      }
      try {
        const SignedGraph& base = tasks[i];
        SwitchingBasis basis = switching_basis(base);
        const int d = static_cast<int>(basis.free_edges.size());
        std::vector<Edge> edges = base.edges();
        std::vector<std::size_t> free_index(d);
        for (int b = 0; b < d; ++b) {
          for (std::size_t e = 0; e < edges.size(); ++e)
            if (std::pair(edges[e].u, edges[e].v) == basis.free_edges[b]) free_index[b] = e;
        }
        std::vector<VerificationRecord> recs;
        recs.reserve(std::size_t(1) << d);
        for (std::uint32_t pattern = 0; pattern < (1u << d); ++pattern) {
          for (int b = 0; b < d; ++b)
            edges[free_index[b]].sign = (pattern >> b & 1) ? -1 : +1;
          recs.push_back(
              process_one(SignedGraph(base.order(), edges), options, mix_seed(options.seed, i, pattern)));
        }
        results[i] = std::move(recs);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < options.jobs; ++t) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  VerificationReport report;
  report.max_n = options.max_n;
  report.seed = options.seed;
  report.lemma_checks_enabled = options.lemma_checks;
  report.jobs = options.jobs;
  std::size_t total = 0;
  for (const auto& recs : results) total += recs.size();
  report.records.reserve(total);
  for (auto& recs : results)
    for (VerificationRecord& rec : recs) report.records.push_back(std::move(rec));
  aggregate(report);
  report.cycle_audit = audit_cycle_classes(32);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// -- Serialization ------------------------------------------------------------

namespace {

json family_json(const FamilyLabel& label) {
  json j;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, CycleFamily>) {
          j["kind"] = "cycle";
          j["n"] = f.n;
          j["balanced"] = f.balanced;
        } else if constexpr (std::is_same_v<T, PathFamily>) {
          j["kind"] = "path";
          j["n"] = f.n;
        } else if constexpr (std::is_same_v<T, StarFamily>) {
          j["kind"] = "star";
          j["leaves"] = f.leaves;
        } else if constexpr (std::is_same_v<T, CompleteMultipartiteFamily>) {
          j["kind"] = "complete-multipartite";
          j["parts"] = f.parts;
        } else if constexpr (std::is_same_v<T, CanonicalUnicyclicFamily>) {
          j["kind"] = "canonical-unicyclic";
          j["girth"] = f.girth;
          j["balanced"] = f.balanced;
          j["t"] = f.stars.t;
          j["gaps"] = f.stars.gaps;
          j["leaves"] = f.stars.leaves;
        } else if constexpr (std::is_same_v<T, PendantStarCycleFamily>) {
          j["kind"] = "cycle-with-pendant-star";
          j["girth"] = f.girth;
          j["balanced"] = f.balanced;
          j["t"] = f.leaves;
        } else if constexpr (std::is_same_v<T, ThetaFamily>) {
          j["kind"] = "theta";
          j["orders"] = f.orders;
          json cycles = json::array();
          for (const ThetaCycle& c : f.cycles)
            cycles.push_back(json{{"length", c.length}, {"sign", c.sign}});
          j["cycles"] = cycles;
        } else {
          j["kind"] = "other";
        }
      },
      label);
  return j;
}

json record_json(const VerificationRecord& rec, bool with_lemmas) {
  json j;
  j["sgf"] = rec.sgf;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["girth"] = rec.girth;
  j["balanced"] = rec.balanced;
  j["p_plus"] = rec.inertia.p_plus;
  j["n_minus"] = rec.inertia.n_minus;
  j["eta"] = rec.inertia.eta;
  j["bound_floor"] = rec.bound_floor;
  j["status"] = to_string(rec.status);
  j["family"] = family_json(rec.family);
  json ds = json::array();
  for (const Discrepancy& d : rec.discrepancies)
    ds.push_back(json{{"name", d.name}, {"detail", d.detail}});
  j["discrepancies"] = ds;
  if (with_lemmas) {
    json lm;
    for (const auto& [name, pass] : rec.lemmas) lm[name] = pass;
    j["lemmas"] = lm.is_null() ? json::object() : lm;
  }
  return j;
}

json audit_json(const CycleClassAudit& audit) {
  json j;
  j["max_n"] = audit.max_n;
  j["all_engines_agree"] = audit.all_engines_agree;
  j["mismatch_count"] = audit.mismatch_count;
  j["balanced_floor_residues"] = audit.balanced_floor_residues;
  j["unbalanced_floor_residues"] = audit.unbalanced_floor_residues;
  j["residues_consistent"] = audit.residues_consistent;
  json rows = json::array();
  for (const CycleClassRow& r : audit.rows) {
    rows.push_back(json{{"n", r.n},
                        {"balanced", r.balanced},
                        {"p_plus", r.p_plus},
                        {"floor", r.floor_value},
                        {"floor_achieved", r.floor_achieved},
                        {"stated_floor", r.stated_floor},
                        {"mismatch", r.mismatch},
                        {"engines_agree", r.engines_agree}});
  }
  j["rows"] = rows;
  return j;
}

json summary_json(const VerificationReport& report) {
  json j;
  j["version"] = 1;
  j["max_n"] = report.max_n;
  j["seed"] = report.seed;
  j["lemma_checks"] = report.lemma_checks_enabled;
  j["records"] = report.records.size();

  json counts = json::array();
  for (const auto& [key, count] : report.counts) {
    counts.push_back(json{{"n", std::get<0>(key)},
                          {"girth", std::get<1>(key)},
                          {"status", to_string(std::get<2>(key))},
                          {"count", count}});
  }
  j["counts"] = counts;
  j["bound_counterexamples"] = report.bound_counterexamples;

  json ds;
  for (const auto& [name, tally] : report.discrepancies)
    ds[name] = json{{"count", tally.count}, {"examples", tally.examples}};
  j["discrepancies"] = ds.is_null() ? json::object() : ds;

  if (report.lemma_checks_enabled) {
    json lm;
    for (const auto& [name, tally] : report.lemmas)
      lm[name] = json{{"pass", tally.pass}, {"fail", tally.fail}};
    j["lemmas"] = lm.is_null() ? json::object() : lm;
  }

  j["p_plus_one_mismatches"] = report.p_plus_one_mismatches;
  j["strict_bound"] = json{{"stated_violations", report.strict_bound.stated_violations},
                           {"stated_examples", report.strict_bound.stated_examples},
                           {"empirical_violations", report.strict_bound.empirical_violations},
                           {"empirical_examples", report.strict_bound.empirical_examples}};
  j["cycle_class_audit"] = audit_json(report.cycle_audit);
  return j;
}

}  // namespace

void write_report(std::ostream& out, const VerificationReport& report, bool include_footer) {
  out << summary_json(report).dump() << '\n';
  for (const VerificationRecord& rec : report.records)
    out << record_json(rec, report.lemma_checks_enabled).dump() << '\n';
  if (include_footer) {
    json footer{{"footer", json{{"elapsed_seconds", report.elapsed_seconds},
                                {"jobs", report.jobs}}}};
    out << footer.dump() << '\n';
  }
}

std::string serialize_report(const VerificationReport& report, bool include_footer) {
  std::ostringstream out;
  write_report(out, report, include_footer);
  return out.str();
}

std::string summary_table(const VerificationReport& report) {
  std::ostringstream out;
  out << "sweep: max_n=" << report.max_n << " records=" << report.records.size()
      << " seed=" << report.seed << " lemma_checks=" << (report.lemma_checks_enabled ? "on" : "off")
      << '\n';

  std::map<BoundStatus, long> totals;
  std::map<int, long> by_n;
  for (const auto& [key, count] : report.counts) {
    totals[std::get<2>(key)] += count;
    by_n[std::get<0>(key)] += count;
  }
  out << "status totals:";
  for (BoundStatus s : {BoundStatus::strict, BoundStatus::equality, BoundStatus::plus_one,
                        BoundStatus::higher})
    out << ' ' << to_string(s) << '=' << totals[s];
  out << '\n';
  for (const auto& [n, count] : by_n) out << "  n=" << n << ": records=" << count << '\n';

  out << "bound counterexamples: " << report.bound_counterexamples.size() << '\n';
  out << "p+=1 <=> balanced complete multipartite mismatches: " << report.p_plus_one_mismatches
      << '\n';
  out << "strict-bound audit: stated_violations=" << report.strict_bound.stated_violations
      << " empirical_violations=" << report.strict_bound.empirical_violations << '\n';

  if (report.discrepancies.empty()) {
    out << "discrepancies: none\n";
  } else {
    out << "discrepancies:\n";
    for (const auto& [name, tally] : report.discrepancies)
      out << "  " << name << ": " << tally.count << '\n';
  }

  if (report.lemma_checks_enabled) {
    out << "lemma checks:\n";
    for (const auto& [name, tally] : report.lemmas)
      out << "  " << name << ": pass=" << tally.pass << " fail=" << tally.fail << '\n';
  }

  const CycleClassAudit& audit = report.cycle_audit;
  out << "cycle-class audit (n<=" << audit.max_n
      << "): engines_agree=" << (audit.all_engines_agree ? "yes" : "no")
      << " stated_mismatches=" << audit.mismatch_count << '\n';
  auto residues = [](const std::vector<int>& rs) {
    std::string s = "{";
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(rs[i]);
    }
    return s + "}";
  };
  out << "floor classes (mod 4): balanced=" << residues(audit.balanced_floor_residues)
      << " unbalanced=" << residues(audit.unbalanced_floor_residues)
      << " consistent=" << (audit.residues_consistent ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace sgt
