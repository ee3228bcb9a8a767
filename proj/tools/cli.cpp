#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "linkirr/arc_list.hpp"
#include "linkirr/constructions.hpp"
#include "linkirr/enumeration.hpp"
#include "linkirr/labeling.hpp"

namespace linkirr::cli {

namespace fs = std::filesystem;

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

Json arcs_json(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const auto& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

Json pair_json(std::optional<std::pair<Vertex, Vertex>> p) {
  if (!p) return nullptr;
  return Json::array({p->first, p->second});
}

}  // namespace

Json to_json(const SearchReport& r) {
  Json j;
  j["n"] = r.n;
  j["outcome"] = to_string(r.outcome);
  j["strategy"] = to_string(r.strategy);
  j["rng_seed"] = r.rng_seed;
  j["arcs"] = arcs_json(r.arcs);
  j["attempts_used"] = r.attempts_used;
  j["flips_used"] = r.flips_used;
  j["best_conflicts"] = r.best_conflicts;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["verdict"] = c.verdict == Verdict::kIrregular ? "link-irregular" : "not-link-irregular";
  if (c.witness) {
    j["witness"] = {{"u", c.witness->u}, {"v", c.witness->v}, {"mapping", c.witness->iso.mapping}};
  } else {
    j["witness"] = nullptr;
  }
  Json links = Json::array();
  for (std::size_t v = 0; v < c.profile.size(); ++v)
    links.push_back({{"vertex", v}, {"order", c.profile[v].order}, {"size", c.profile[v].size}});
  j["links"] = std::move(links);
  j["underlying_edges"] = c.underlying_edges;
  if (c.planar_edge_limit)
    j["planar_edge_limit"] = *c.planar_edge_limit;
  else
    j["planar_edge_limit"] = nullptr;
  return j;
}

Json to_json(const BoundReport& b) {
  Json j;
  j["n"] = b.n;
  j["h"] = b.h;
  j["numerator"] = b.numerator;
  j["degree_bound"] = b.degree_bound;
  j["outdegree_bound"] = b.outdegree_bound;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  std::string text;
};

Input read_input(const std::string& path) { return {path, read_text_file(path)}; }

struct Session {
  std::string command;
  std::ostream& out;
  std::ostream& err;
  std::string log_path;
  unsigned jobs = 1;
  Clock::time_point start = Clock::now();

  void emit(const std::optional<std::string>& digest, std::optional<std::uint64_t> seed,
            std::string_view outcome, Json payload) const {
    Json rec;
    rec["tool"] = kToolName;
    rec["version"] = kVersion;
    rec["command"] = command;
    if (digest)
      rec["input_digest"] = *digest;
    else
      rec["input_digest"] = nullptr;
    if (seed)
      rec["rng_seed"] = *seed;
    else
      rec["rng_seed"] = nullptr;
    rec["outcome"] = outcome;
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
    rec["wall_ms"] = static_cast<double>(us) / 1000.0;
    rec["payload"] = std::move(payload);
    const std::string line = rec.dump() + "\n";
    out << line;
    if (!log_path.empty()) {
      std::ofstream log(log_path, std::ios::app | std::ios::binary);
      if (!log) throw std::runtime_error("cannot append to log " + log_path);
      log << line;
    }
  }
};

template <class Parse>
auto parse_input(const Input& in, Parse parse) {
  try {
    return parse(in.text);
  } catch (const ParseError& e) {
    throw std::runtime_error(in.path + ": " + e.what());
  }
}

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

WitnessLibrary choose_library(const std::string& flag) {
  std::string dir = flag;
  if (dir.empty())
    if (const char* env = std::getenv(kLibraryEnv)) dir = env;
  if (dir.empty()) return WitnessLibrary::builtin();
  if (!fs::is_directory(dir)) throw UsageError("library directory not found: " + dir);
  return WitnessLibrary::load_directory(dir);
}

// ---- subcommands ----

int cmd_verify(const Session& s, const std::string& path) {
  const Input in = read_input(path);
  const Digraph d = parse_input(in, parse_digraph);
  const Certificate cert = is_link_irregular(d);
  Json payload = to_json(cert);
  const bool ok = cert.verdict == Verdict::kIrregular;
  if (ok) payload["bounds_ok"] = check_bounds(d);
  s.emit(fnv1a_hex(in.text), std::nullopt, payload["verdict"].get<std::string>(), payload);
  if (!ok && cert.witness)
    s.err << "vertices " << cert.witness->u << " and " << cert.witness->v
          << " have isomorphic links\n";
  return ok ? kExitOk : kExitNegative;
}

struct SearchArgs {
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  SearchBudget budget;
  std::string library;
  std::string out;
};

int cmd_search(const Session& s, SearchArgs a) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  if (a.n > kMaxOrder) throw UsageError("--n exceeds " + std::to_string(kMaxOrder));
  a.budget.jobs = s.jobs;
  try {
    a.budget.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const WitnessLibrary library = choose_library(a.library);
  const std::uint64_t seed = a.seed ? *a.seed : entropy_seed();
  const SearchReport r = search(a.n, a.budget, seed, library);
  const bool found = r.outcome == Outcome::kFound;
  Json payload = to_json(r);
  if (found) {
    payload["verified"] = reverify(r);
    if (!a.out.empty()) {
      const Digraph t = Digraph::from_arcs(r.n, r.arcs);
      write_text_file(a.out, format_digraph(t, {"search n=" + std::to_string(r.n) +
                                                    " seed=" + std::to_string(seed) +
                                                    " strategy=" + std::string(to_string(r.strategy))}));
    }
  }
  s.emit(std::nullopt, seed, to_string(r.outcome), payload);
  return found ? kExitOk : kExitNegative;
}

struct EnumerateArgs {
  std::size_t n = 0;
  std::string universe = "tournaments";
  std::string predicate = "link-irregular";
  std::string base;
};

int cmd_enumerate(const Session& s, const EnumerateArgs& a) {
  const auto universe = parse_universe(a.universe);
  const auto predicate = parse_predicate(a.predicate);
  if (!universe) throw UsageError("unknown universe: " + a.universe);
  if (!predicate) throw UsageError("unknown predicate: " + a.predicate);
  EnumSpec spec{a.n, *universe, *predicate, std::nullopt};
  std::optional<std::string> digest;
  if (*universe == Universe::kOrientationsOf) {
    if (a.base.empty()) throw UsageError("--base is required for orientations-of");
    const Input in = read_input(a.base);
    spec.base = parse_input(in, parse_undirected);
    spec.n = spec.base->order();
    digest = fnv1a_hex(in.text);
  } else if (!a.base.empty()) {
    throw UsageError("--base only applies to orientations-of");
  }
  EnumStats stats;
  try {
    stats = enumerate_counts(spec, s.jobs);
  } catch (const EnumerationError& e) {
    throw UsageError(e.what());
  }
  Json payload;
  payload["n"] = spec.n;
  payload["universe"] = to_string(spec.universe);
  payload["predicate"] = to_string(spec.predicate);
  payload["total"] = stats.total;
  payload["hits"] = stats.hits;
  s.emit(digest, std::nullopt, "counted", payload);
  return kExitOk;
}

struct ConstructArgs {
  std::string name;
  std::string out;
  std::string dir;
  bool all = false;
  bool list = false;
};

int cmd_construct(const Session& s, const ConstructArgs& a) {
  if (a.list) {
    for (const auto& c : corpus()) s.out << c.file_name() << "\n";
    return kExitOk;
  }
  std::vector<NamedConstruction> chosen;
  if (a.all) {
    if (!a.name.empty()) throw UsageError("give a name or --all, not both");
    if (a.dir.empty()) throw UsageError("--all needs --dir");
    chosen = corpus();
  } else {
    if (a.name.empty()) throw UsageError("construct needs a name, --all or --list");
    auto c = find_construction(a.name);
    if (!c) throw UsageError("unknown construction: " + a.name);
    chosen.push_back(std::move(*c));
  }

  if (!a.all && a.out.empty() && a.dir.empty()) {
    const auto& c = chosen.front();
    s.out << c.render();
    const auto failed = failed_properties(c);
    for (const auto& p : failed) s.err << c.name << ": property fails: " << p << "\n";
    return failed.empty() ? kExitOk : kExitNegative;
  }

  if (!a.dir.empty()) fs::create_directories(a.dir);
  Json files = Json::array();
  bool all_ok = true;
  for (const auto& c : chosen) {
    const fs::path target =
        !a.out.empty() && !a.all ? fs::path(a.out) : fs::path(a.dir) / c.file_name();
    const std::string text = c.render();
    write_text_file(target, text);
    const auto failed = failed_properties(c);
    all_ok = all_ok && failed.empty();
    files.push_back({{"file", target.filename().string()},
                     {"digest", fnv1a_hex(text)},
                     {"properties", c.expected_properties},
                     {"failed", failed}});
  }
  if (a.all) write_text_file(fs::path(a.dir) / "MANIFEST", render_manifest());
  Json payload;
  payload["files"] = std::move(files);
  s.emit(std::nullopt, std::nullopt, all_ok ? "written" : "property-failure", payload);
  return all_ok ? kExitOk : kExitNegative;
}

int cmd_bounds(const Session& s, std::size_t n, const std::string& check) {
  if (n == 0 || n > kBoundMaxOrder) throw UsageError("--n must be in [1, 2^53]");
  Json payload = to_json(bound_report(n));
  std::optional<std::string> digest;
  bool ok = true;
  if (!check.empty()) {
    const Input in = read_input(check);
    const Digraph d = parse_input(in, parse_digraph);
    if (d.order() != n) throw UsageError("--check graph has order " + std::to_string(d.order()));
    ok = check_bounds(d);
    payload["check_bounds"] = ok;
    digest = fnv1a_hex(in.text);
  }
  s.emit(digest, std::nullopt, ok ? "ok" : "bound-violated", payload);
  return ok ? kExitOk : kExitNegative;
}

int cmd_label_check(const Session& s, const std::string& path) {
  const Input in = read_input(path);
  const LabeledGraph g = parse_input(in, parse_labeled);
  const PairCheck r = verify_labeling(g);
  Json payload;
  payload["labeling_verifies"] = r.holds;
  payload["violation"] = pair_json(r.violation);
  s.emit(fnv1a_hex(in.text), std::nullopt, r.holds ? "link-irregular" : "not-link-irregular",
         payload);
  return r.holds ? kExitOk : kExitNegative;
}

int cmd_label_admits(const Session& s, const std::string& path) {
  const Input in = read_input(path);
  const UndirectedGraph g = parse_input(in, parse_undirected);
  const PairCheck r = admits_link_irregular_labeling(g);
  Json payload;
  payload["labelable"] = r.holds;
  payload["violation"] = pair_json(r.violation);
  s.emit(fnv1a_hex(in.text), std::nullopt, r.holds ? "labelable" : "not-labelable", payload);
  return r.holds ? kExitOk : kExitNegative;
}

int cmd_label_orientable(const Session& s, const std::string& path, const std::string& out) {
  const Input in = read_input(path);
  const UndirectedGraph g = parse_input(in, parse_undirected);
  Orientability r;
  try {
    r = is_link_irregular_orientable(g, s.jobs);
  } catch (const EnumerationError& e) {
    throw UsageError(e.what());
  }
  Json payload;
  payload["orientable"] = r.orientable;
  payload["orientations_checked"] = r.orientations_checked;
  payload["witness"] = r.witness ? arcs_json(r.witness->arcs()) : Json(nullptr);
  if (r.witness && !out.empty())
    write_text_file(out, format_digraph(*r.witness, {"link-irregular orientation of " + path}));
  s.emit(fnv1a_hex(in.text), std::nullopt, r.orientable ? "orientable" : "not-orientable",
         payload);
  return r.orientable ? kExitOk : kExitNegative;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide, search for and construct link-irregular digraphs.", std::string(kToolName)};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  std::string log_path;
  unsigned jobs = 1;
  app.add_option("--log", log_path, "Append every record to this file");
  app.add_option("--jobs", jobs, "Worker threads for search and enumeration")
      ->check(CLI::Range(1U, 256U));

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Decide link-irregularity of an arc-list file");
  verify->add_option("path", verify_path, "Digraph file (.dg)")->required();

  SearchArgs sa;
  std::uint64_t seed_value = 0;
  auto* search_cmd = app.add_subcommand("search", "Search for a link-irregular tournament");
  search_cmd->add_option("--n", sa.n, "Order")->required();
  auto* seed_opt = search_cmd->add_option("--seed", seed_value, "RNG seed (entropy when omitted)");
  search_cmd->add_option("--random-attempts", sa.budget.random_attempts);
  search_cmd->add_option("--hc-steps", sa.budget.hc_steps);
  search_cmd->add_option("--hc-restarts", sa.budget.hc_restarts);
  search_cmd->add_option("--seeded-attempts", sa.budget.seeded_attempts);
  search_cmd->add_option("--polish-steps", sa.budget.polish_steps);
  search_cmd->add_option("--library", sa.library,
                         std::string("Witness directory (default: $") + kLibraryEnv + " or built-in)");
  search_cmd->add_option("--out", sa.out, "Write the found tournament here");

  EnumerateArgs ea;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive counts over a universe");
  enumerate_cmd->add_option("--n", ea.n, "Order");
  enumerate_cmd->add_option("--universe", ea.universe,
                            "tournaments | oriented | general | orientations-of");
  enumerate_cmd->add_option("--predicate", ea.predicate, "all | link-irregular");
  enumerate_cmd->add_option("--base", ea.base, "Undirected graph file for orientations-of");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Emit a named construction");
  construct->add_option("name", ca.name);
  construct->add_option("--out", ca.out, "Write to this file");
  construct->add_option("--dir", ca.dir, "Write into this directory");
  construct->add_flag("--all", ca.all, "Write the whole corpus and its MANIFEST");
  construct->add_flag("--list", ca.list, "List corpus file names");

  std::size_t bounds_n = 0;
  std::string bounds_check;
  auto* bounds = app.add_subcommand("bounds", "Degree lower bounds for order n");
  bounds->add_option("--n", bounds_n, "Order")->required();
  bounds->add_option("--check", bounds_check, "Also test a digraph file against the bounds");

  auto* label = app.add_subcommand("label", "Labeling and orientability checks");
  label->require_subcommand(1);
  std::string label_path;
  std::string orient_out;
  auto* label_check = label->add_subcommand("check", "Verify a labeled graph file (.lg)");
  label_check->add_option("path", label_path)->required();
  auto* label_orient =
      label->add_subcommand("orientable", "Search all orientations of a graph file (.ug)");
  label_orient->add_option("path", label_path)->required();
  label_orient->add_option("--out", orient_out, "Write the witness orientation here");
  auto* label_admits =
      label->add_subcommand("admits", "Test whether a graph file (.ug) admits a labeling");
  label_admits->add_option("path", label_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Session s{join(args), out, err, log_path, jobs};
  try {
    if (*verify) return cmd_verify(s, verify_path);
    if (*search_cmd) {
      if (seed_opt->count() > 0) sa.seed = seed_value;
      return cmd_search(s, sa);
    }
    if (*enumerate_cmd) return cmd_enumerate(s, ea);
    if (*construct) return cmd_construct(s, ca);
    if (*bounds) return cmd_bounds(s, bounds_n, bounds_check);
    if (*label_check) return cmd_label_check(s, label_path);
    if (*label_orient) return cmd_label_orientable(s, label_path, orient_out);
    if (*label_admits) return cmd_label_admits(s, label_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace linkirr::cli
