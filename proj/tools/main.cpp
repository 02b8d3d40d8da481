// treechild: command-line front end. Every command prints one JSON report
// on stdout and a short summary on stderr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "treechild/classify.hpp"
#include "treechild/generate.hpp"
#include "treechild/io.hpp"
#include "treechild/isomorphism.hpp"

namespace tc = treechild;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "treechild.report/1";

enum Exit : int {
  kDecided = 0,
  kInputError = 2,
  kBudget = 3,
  kReplayFailure = 4,
  kInfeasible = 5,
};

// Input problems that end the command with exit code 2.
struct InputError {
  std::string file;
  std::string message;
  Json position;
};

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

class Report {
 public:
  Report(std::string command, Json args) {
    doc_["schema"] = kSchema;
    doc_["command"] = {{"name", std::move(command)}, {"args", std::move(args)}};
  }

  // Digest over every input in order; each is length-prefixed so that
  // splitting text differently between files changes the digest.
  void add_input(const std::string& text) {
    digest_input_ += std::to_string(text.size());
    digest_input_ += ':';
    digest_input_ += text;
  }

  Json& result() { return doc_["result"]; }

  int finish(int code, const std::string& summary) {
    doc_["input_digest"] = fnv1a(digest_input_);
    doc_["exit_code"] = code;
    std::cout << doc_.dump(2) << '\n';
    std::cerr << summary << '\n';
    return code;
  }

  int fail(const InputError& e) {
    doc_.erase("result");
    doc_["error"] = {{"kind", "input"}, {"file", e.file}, {"message", e.message}};
    if (!e.position.is_null()) doc_["error"]["position"] = e.position;
    return finish(kInputError, "error: " + e.file + ": " + e.message);
  }

 private:
  Json doc_;
  std::string digest_input_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path, "cannot open file", nullptr};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// An edge-list document starts with the "unrooted" header.
bool looks_unrooted(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  in >> first;
  return first == "unrooted";
}

template <class F>
auto parsing(const std::string& path, F&& parse) {
  try {
    return parse();
  } catch (const tc::ParseError& e) {
    throw InputError{path, e.message(),
                     Json{{"line", e.line()}, {"column", e.column()}, {"offset", e.offset()}}};
  } catch (const tc::SemanticError& e) {
    Json position;
    if (const auto& at = e.position()) position = {{"line", at->line}, {"column", at->column}, {"offset", at->offset}};
    throw InputError{path, e.message(), position};
  } catch (const tc::InvalidNetwork& e) {
    throw InputError{path, e.what(), nullptr};
  }
}

tc::AnyNetwork load_network(Report& report, const std::string& path, const std::string& kind) {
  const std::string text = read_file(path);
  report.add_input(text);
  const bool unrooted = kind == "unrooted" || (kind == "auto" && looks_unrooted(text));
  return parsing(path, [&]() -> tc::AnyNetwork {
    if (unrooted) return tc::parse_unrooted(text);
    return tc::parse_rooted(text);
  });
}

tc::CherryPickingSequence load_sequence(Report& report, const std::string& path) {
  const std::string text = read_file(path);
  report.add_input(text);
  return parsing(path, [&] { return tc::parse_sequence(text); });
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TREECHILD_BUDGET")) {
    try {
      std::size_t used = 0;
      std::uint64_t value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed TREECHILD_BUDGET=" << env << '\n';
  }
  return tc::kDefaultBudget;
}

// Indices are reported 1-based, as positions in the sequence.
Json successor_json(const tc::Successor& s) { return s ? Json(*s + 1) : Json(nullptr); }

Json verdict_json(const tc::CherryPickingSequence& seq) {
  const tc::SequenceVerdict v = tc::check_tree_child(seq);
  Json out;
  out["tree_child"] = v.tree_child;
  out["p1_violations"] = Json::array();
  for (auto i : v.p1_violations) out["p1_violations"].push_back(i + 1);
  out["p2_violations"] = Json::array();
  for (auto [i, j] : v.p2_violations) out["p2_violations"].push_back({i + 1, j + 1});
  out["successors"] = Json::array();
  for (const auto& s : v.successors) out["successors"].push_back(successor_json(s));
  out["p3"] = tc::check_p3(seq);
  out["p"] = v.satisfies_p ? Json(*v.satisfies_p) : Json(nullptr);
  return out;
}

Json stats_json(const tc::SearchStats& s) {
  // Wall-clock time stays out of the report so that output is reproducible.
  return {{"nodes_expanded", s.nodes_expanded}, {"memo_hits", s.memo_hits}};
}

std::string network_text(const tc::AnyNetwork& net) {
  return std::visit(
      [](const auto& n) {
        if constexpr (std::is_same_v<std::decay_t<decltype(n)>, tc::RootedNetwork>)
          return tc::serialize_rooted(n);
        else
          return tc::serialize_unrooted(n);
      },
      net);
}

// ------------------------------------------------------------ commands

struct Options {
  std::string network;
  std::string sequence;
  std::string kind = "auto";
  std::optional<std::uint64_t> budget;
  std::string out;
  std::string trace_out;
  std::size_t leaves = 0;
  std::size_t reticulations = 0;
  std::uint64_t seed = 0;
  bool unrooted = false;
};

int classify_unrooted(Report& report, const tc::UnrootedNetwork& net, std::uint64_t budget,
                      const std::string& out_path) {
  const tc::OrientationResult res = tc::find_tree_child_orientation(net, budget);
  Json& r = report.result();
  r["kind"] = "unrooted";
  r["leaves"] = net.leaf_count();
  r["reticulations"] = tc::reticulation_number(net);
  r["budget"] = budget;
  r["status"] = tc::to_string(res.status);
  r["tree_child"] = res.status == tc::SearchStatus::Found  ? Json(true)
                    : res.status == tc::SearchStatus::None ? Json(false)
                                                           : Json(nullptr);
  if (res.orientation) {
    r["orientation"] = tc::serialize_rooted(*res.orientation);
    r["sequence"] = tc::to_string(*res.sequence);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw InputError{out_path, "cannot write file", nullptr};
      out << r["orientation"].get<std::string>() << '\n';
    }
  }
  r["stats"] = stats_json(res.stats);
  std::cerr << res.stats.nodes_expanded << " nodes expanded in "
            << std::chrono::duration<double, std::milli>(res.stats.elapsed).count() << " ms\n";
  if (res.status == tc::SearchStatus::BudgetExceeded)
    return report.finish(kBudget, "budget of " + std::to_string(budget) + " node expansions exceeded");
  return report.finish(kDecided, res.status == tc::SearchStatus::Found
                                     ? "tree-child orientation found: " + r["orientation"].get<std::string>()
                                     : "no tree-child orientation");
}

int cmd_classify(Report& report, const Options& o) {
  tc::AnyNetwork net = load_network(report, o.network, o.kind);
  if (auto* u = std::get_if<tc::UnrootedNetwork>(&net)) return classify_unrooted(report, *u, resolve_budget(o.budget), "");

  const auto& rooted = std::get<tc::RootedNetwork>(net);
  const tc::RootedClassification c = tc::classify_rooted(rooted);
  Json& r = report.result();
  r["kind"] = "rooted";
  r["leaves"] = rooted.leaf_count();
  r["reticulations"] = c.reticulations;
  r["orchard"] = c.orchard;
  r["tree_child"] = c.tree_child_structural;
  r["tree_child_by_sequence"] = c.tree_child_by_sequence;
  r["stack_free"] = c.stack_free;
  r["sibling_reticulations"] = c.sibling_reticulations;
  r["sequence"] = tc::to_string(c.sequence);
  r["sequence_complete"] = c.trace.complete;
  r["verdict"] = verdict_json(c.sequence);
  std::string summary = std::string(c.tree_child_structural ? "tree-child" : "not tree-child") + ", " +
                        (c.orchard ? "orchard" : "not orchard") + ", r=" + std::to_string(c.reticulations);
  return report.finish(kDecided, summary);
}

int cmd_orient(Report& report, const Options& o) {
  tc::AnyNetwork net = load_network(report, o.network, "unrooted");
  return classify_unrooted(report, std::get<tc::UnrootedNetwork>(net), resolve_budget(o.budget), o.out);
}

template <class Network>
Json trace_json(const tc::ReductionTrace<Network>& trace) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    steps.push_back({{"index", i + 1},
                     {"reduction", tc::to_string(trace.steps[i].reduction)},
                     {"network", network_text(trace.networks[i + 1])}});
  return steps;
}

int cmd_check_seq(Report& report, const Options& o) {
  tc::AnyNetwork net = load_network(report, o.network, o.kind);
  tc::CherryPickingSequence seq = load_sequence(report, o.sequence);
  Json& r = report.result();
  r["sequence"] = tc::to_string(seq);
  r["length"] = seq.size();
  std::string outcome;
  std::visit(
      [&](const auto& n) {
        r["expected_complete_length"] = n.leaf_count() + tc::reticulation_number(n) - 1;
        try {
          auto trace = tc::apply_sequence(n, seq);
          r["applied"] = true;
          r["maximal"] = trace.maximal;
          r["complete"] = trace.complete;
          r["failed_at"] = nullptr;
          outcome = trace.complete ? "complete" : trace.maximal ? "maximal, not complete" : "not maximal";
        } catch (const tc::StepInapplicable& e) {
          r["applied"] = false;
          r["maximal"] = false;
          r["complete"] = false;
          r["failed_at"] = e.index() + 1;
          r["failure"] = e.what();
          outcome = "step " + std::to_string(e.index() + 1) + " not applicable";
        }
      },
      net);
  r["verdict"] = verdict_json(seq);
  return report.finish(kDecided, outcome + "; " + (r["verdict"]["tree_child"].get<bool>() ? "tree-child" : "not tree-child"));
}

int cmd_reduce(Report& report, const Options& o) {
  tc::AnyNetwork net = load_network(report, o.network, o.kind);
  tc::CherryPickingSequence seq = load_sequence(report, o.sequence);
  Json& r = report.result();
  r["sequence"] = tc::to_string(seq);
  return std::visit(
      [&](const auto& n) {
        Json trace;
        try {
          auto t = tc::apply_sequence(n, seq);
          trace = trace_json(t);
          r["maximal"] = t.maximal;
          r["complete"] = t.complete;
          r["final"] = network_text(t.final_network());
        } catch (const tc::StepInapplicable& e) {
          r["failed_at"] = e.index() + 1;
          r["failure"] = e.what();
          return report.finish(kReplayFailure, std::string("replay failed: ") + e.what());
        }
        r["trace"] = trace;
        if (!o.trace_out.empty()) {
          std::ofstream out(o.trace_out);
          if (!out) throw InputError{o.trace_out, "cannot write file", nullptr};
          // Rooted: one eNewick line per network. Unrooted: edge lists separated by blank lines.
          const bool rooted = std::is_same_v<std::decay_t<decltype(n)>, tc::RootedNetwork>;
          out << network_text(n) << (rooted ? "\n" : "");
          for (const auto& step : trace) out << (rooted ? "" : "\n") << step["network"].template get<std::string>() << (rooted ? "\n" : "");
        }
        return report.finish(kDecided, std::to_string(seq.size()) + " steps applied" +
                                           (r["complete"].template get<bool>() ? ", complete" : ""));
      },
      net);
}

int cmd_generate(Report& report, const Options& o) {
  report.add_input(std::to_string(o.leaves) + " " + std::to_string(o.reticulations) + " " + std::to_string(o.seed) +
                   (o.unrooted ? " unrooted" : ""));
  tc::GeneratedNetwork g;
  try {
    g = o.unrooted ? tc::generate_unrootable_tree_child(o.leaves, o.reticulations, o.seed)
                   : tc::generate_tree_child(o.leaves, o.reticulations, o.seed);
  } catch (const tc::InfeasibleParameters& e) {
    report.result() = {{"infeasible", e.what()}};
    return report.finish(kInfeasible, std::string("infeasible: ") + e.what());
  }
  Json& r = report.result();
  r["leaves"] = g.network.leaf_count();
  r["reticulations"] = tc::reticulation_number(g.network);
  r["sequence"] = tc::to_string(g.sequence);
  r["rooted"] = tc::serialize_rooted(g.network);
  if (o.unrooted) r["unrooted"] = tc::serialize_unrooted(tc::unroot(g.network));
  return report.finish(kDecided, r[o.unrooted ? "unrooted" : "rooted"].get<std::string>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-child phylogenetic networks: classification, orientation and cherry picking"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "classify a rooted network or search an unrooted one");
  classify->add_option("network", o.network, "network file (eNewick or edge list)")->required();
  classify->add_option("--kind", o.kind, "rooted, unrooted or auto")->check(CLI::IsMember({"rooted", "unrooted", "auto"}));
  classify->add_option("--budget", o.budget, "node expansion budget for unrooted search");

  auto* orient = app.add_subcommand("orient", "find a tree-child orientation of an unrooted network");
  orient->add_option("network", o.network, "edge-list file")->required();
  orient->add_option("--budget", o.budget, "node expansion budget");
  orient->add_option("--out", o.out, "write the orientation in eNewick here");

  auto* check = app.add_subcommand("check-seq", "replay a sequence and check its predicates");
  check->add_option("network", o.network, "network file")->required();
  check->add_option("sequence", o.sequence, "sequence file")->required();
  check->add_option("--kind", o.kind, "rooted, unrooted or auto")->check(CLI::IsMember({"rooted", "unrooted", "auto"}));

  auto* reduce = app.add_subcommand("reduce", "apply a sequence and emit every intermediate network");
  reduce->add_option("network", o.network, "network file")->required();
  reduce->add_option("sequence", o.sequence, "sequence file")->required();
  reduce->add_option("--kind", o.kind, "rooted, unrooted or auto")->check(CLI::IsMember({"rooted", "unrooted", "auto"}));
  reduce->add_option("--trace-out", o.trace_out, "write the networks of the trace here");

  auto* generate = app.add_subcommand("generate", "generate a random tree-child network");
  generate->add_option("--leaves", o.leaves, "number of leaves")->required();
  generate->add_option("--reticulations", o.reticulations, "number of reticulations")->required();
  generate->add_option("--seed", o.seed, "random seed");
  generate->add_flag("--unrooted", o.unrooted, "also emit the unrooted edge list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  Json args = Json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  CLI::App* sub = app.get_subcommands().front();
  Report report(sub->get_name(), args);
  try {
    if (sub == classify) return cmd_classify(report, o);
    if (sub == orient) return cmd_orient(report, o);
    if (sub == check) return cmd_check_seq(report, o);
    if (sub == reduce) return cmd_reduce(report, o);
    return cmd_generate(report, o);
  } catch (const InputError& e) {
    return report.fail(e);
  }
}
