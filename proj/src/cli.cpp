#include "hypersched/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersched/feasibility.hpp"
#include "hypersched/greedy.hpp"
#include "hypersched/hypergraph.hpp"
#include "hypersched/metrics.hpp"
#include "hypersched/text_format.hpp"

namespace hypersched::cli {
namespace {

using nlohmann::json;

// Input failure attributed to a particular file.
struct FileError {
  std::string path;
  ParseError error;
};

struct Options {
  std::string hypergraph_path;
  std::string demand_path;
  std::string weight_path;
  std::string order;
  std::string rule;
  bool minimalize = false;
  bool maximal = false;
  bool as_json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError{path, ParseError(0, "cannot open file")};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename F>
auto within_file(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw FileError{path, e};
  }
}

json rational_json(const Rational& r) { return r.to_string(); }

json rationals_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

json set_json(LinkSet s) {
  json out = json::array();
  for (LinkId i : s) out.push_back(i + 1);
  return out;
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : " ") + v.to_string();
  return out;
}

std::string braced(LinkSet s) { return "{" + format_one_based(s) + "}"; }

class Runner {
 public:
  Runner(const Options& options, std::ostream& out) : opt_(options), out_(out) {}

  Hypergraph hypergraph() const {
    const std::string text = read_file(opt_.hypergraph_path);
    return within_file(opt_.hypergraph_path,
                       [&] { return build_hypergraph(parse_hypergraph_text(text), opt_.minimalize); });
  }

  DemandVector demand(const Hypergraph& h) const {
    const std::string text = read_file(opt_.demand_path);
    return within_file(opt_.demand_path, [&] { return parse_demand_text(text, h.num_links()); });
  }

  WeightMatrix weights(const Hypergraph& h) const {
    if (opt_.weight_path.empty()) return delta_matrix(h);
    const std::string text = read_file(opt_.weight_path);
    WeightMatrix w = within_file(opt_.weight_path, [&] { return parse_weight_text(text, h.num_links()); });
    if (auto error = validate_w(h, w)) throw FileError{opt_.weight_path, ParseError(0, error->message())};
    return w;
  }

  int validate() {
    const Hypergraph h = hypergraph();
    if (opt_.as_json) {
      json edges = json::array();
      for (LinkSet e : h.edges()) edges.push_back(set_json(e));
      emit(json{{"valid", true}, {"links", h.num_links()}, {"edges", edges}});
    } else if (opt_.minimalize) {
      out_ << format_hypergraph(h);
    } else {
      out_ << "VALID: " << h.num_links() << " links, " << h.edges().size() << " edges\n";
    }
    return kOk;
  }

  int indep_sets() {
    const Hypergraph h = hypergraph();
    const SizeLimits limits = SizeLimits::from_environment();
    const auto sets = opt_.maximal ? enumerate_maximal_independent_sets(h, limits) : enumerate_independent_sets(h, limits);
    if (opt_.as_json) {
      json list = json::array();
      for (LinkSet s : sets) list.push_back(set_json(s));
      emit(json{{"maximal", opt_.maximal}, {"sets", list}});
    } else {
      for (LinkSet s : sets) out_ << (s.empty() ? "{}" : format_one_based(s)) << '\n';
    }
    return kOk;
  }

  int chi_f() {
    const Hypergraph h = hypergraph();
    const FractionalChromatic result = fractional_chromatic_number(h, demand(h), SizeLimits::from_environment());
    if (opt_.as_json) {
      emit(json{{"chi_f", rational_json(result.value)}, {"schedule", schedule_json(result.witness)}});
    } else {
      out_ << "chi_f = " << result.value << '\n';
      for (const auto& e : result.witness.entries) out_ << format_one_based(e.links) << " : " << e.duration << '\n';
    }
    return kOk;
  }

  int feasible() {
    const Hypergraph h = hypergraph();
    const FractionalChromatic result = fractional_chromatic_number(h, demand(h), SizeLimits::from_environment());
    const bool ok = result.value <= Rational(1);
    if (opt_.as_json) {
      emit(json{{"feasible", ok}, {"chi_f", rational_json(result.value)}});
    } else {
      out_ << (ok ? "FEASIBLE" : "INFEASIBLE") << " (chi_f = " << result.value << ")\n";
    }
    return ok ? kOk : kNegative;
  }

  int schedule() {
    const Hypergraph h = hypergraph();
    const DemandVector tau = demand(h);
    const WeightMatrix w = weights(h);
    const Permutation order = opt_.order.empty() ? Permutation::identity(h.num_links())
                                                 : within_file("--order", [&] { return parse_order(opt_.order, h.num_links()); });
    const GreedyResult result = greedy_schedule(h, w, tau, order);
    if (opt_.as_json) {
      json doc{{"ok", result.ok()}};
      if (result.ok()) {
        json links = json::array();
        for (const auto& set : result.assigned) links.push_back(set.to_string());
        doc["intervals"] = links;
      } else {
        doc["stuck"] = json{{"link", result.stuck->link + 1},
                            {"demanded", rational_json(result.stuck->demanded)},
                            {"available", rational_json(result.stuck->available)}};
      }
      emit(doc);
    } else if (result.ok()) {
      for (LinkId i = 0; i < h.num_links(); ++i) {
        out_ << "link " << i + 1 << ": " << result.assigned[static_cast<std::size_t>(i)].to_string() << '\n';
      }
    } else {
      out_ << "STUCK at link " << result.stuck->link + 1 << '\n'
           << "demanded " << result.stuck->demanded << ", available " << result.stuck->available << '\n';
    }
    return result.ok() ? kOk : kNegative;
  }

  int check() {
    const Hypergraph h = hypergraph();
    const DemandVector tau = demand(h);
    ConditionCheck result;
    if (opt_.rule == "lemma1") {
      result = check_lemma1(h, tau);
    } else if (opt_.rule == "cor4") {
      result = check_corollary4(h, tau);
    } else {
      result = check_theorem3(h, weights(h), tau);
    }
    if (opt_.as_json) {
      emit(json{{"rule", opt_.rule}, {"holds", result.holds}, {"per_link", rationals_json(result.per_link)}});
    } else {
      for (std::size_t i = 0; i < result.per_link.size(); ++i) out_ << "link " << i + 1 << ": " << result.per_link[i] << '\n';
      out_ << (result.holds ? "HOLDS" : "FAILS") << '\n';
    }
    return result.holds ? kOk : kNegative;
  }

  int metrics() {
    const Hypergraph h = hypergraph();
    const MetricsReport report = sigma(h, SizeLimits::from_environment());
    if (opt_.as_json) {
      json links = json::array();
      for (std::size_t i = 0; i < report.per_link.size(); ++i) {
        const auto& m = report.per_link[i];
        links.push_back(json{{"link", i + 1},
                             {"delta_prime", rational_json(m.prime.value)},
                             {"delta_prime_witness", set_json(m.prime.witness)},
                             {"delta_doubleprime", rational_json(m.doubleprime.value)},
                             {"delta_doubleprime_witness", set_json(m.doubleprime.witness)}});
      }
      emit(json{{"links", links},
                {"delta_prime", rational_json(report.delta_prime)},
                {"delta_doubleprime", rational_json(report.delta_doubleprime)},
                {"sigma", rational_json(report.sigma)},
                {"li_negi_delta", rational_json(report.li_negi_delta)}});
    } else {
      out_ << "link\tdelta'\twitness'\tdelta''\twitness''\n";
      for (std::size_t i = 0; i < report.per_link.size(); ++i) {
        const auto& m = report.per_link[i];
        out_ << i + 1 << '\t' << m.prime.value << '\t' << braced(m.prime.witness) << '\t' << m.doubleprime.value
             << '\t' << braced(m.doubleprime.witness) << '\n';
      }
      out_ << "Delta' = " << report.delta_prime << '\n'
           << "Delta'' = " << report.delta_doubleprime << '\n'
           << "sigma = " << report.sigma << '\n'
           << "Li-Negi Delta = " << report.li_negi_delta << '\n';
    }
    return kOk;
  }

  int beta(std::ostream& err) {
    const Hypergraph h = hypergraph();
    const SizeLimits limits = SizeLimits::from_environment();
    const BetaWitness witness = beta_by_enumeration(h, limits);
    const Rational s = sigma(h, limits).sigma;
    if (opt_.as_json) {
      emit(json{{"beta", rational_json(witness.beta)},
                {"witness_link", witness.link + 1},
                {"witness_demand", rationals_json(witness.demand.values())},
                {"sigma", rational_json(s)}});
    } else {
      out_ << "beta = " << witness.beta << '\n'
           << "witness link = " << witness.link + 1 << '\n'
           << "witness demand = " << join_rationals(witness.demand.values()) << '\n'
           << "sigma = " << s << '\n';
    }
    if (witness.beta != s) {
      err << "internal error: beta " << witness.beta << " differs from sigma " << s << '\n';
      return kInternalError;
    }
    return kOk;
  }

  int star() {
    const Hypergraph h = hypergraph();
    const auto profile = is_beta_star(h);
    if (!profile) {
      if (opt_.as_json) {
        emit(json{{"star", false}});
      } else {
        out_ << "NOT A STAR\n";
      }
      return kNegative;
    }
    const Rational value = beta_star_formula(*profile);
    if (opt_.as_json) {
      json counts = json::object();
      for (const auto& [k, n] : profile->counts) counts[std::to_string(k)] = n;
      emit(json{{"star", true},
                {"center", profile->center + 1},
                {"vacuous_center", profile->vacuous_center},
                {"edge_size_counts", counts},
                {"beta", rational_json(value)}});
    } else {
      out_ << "center = " << profile->center + 1 << (profile->vacuous_center ? " (vacuous: single edge)" : "") << '\n';
      for (const auto& [k, n] : profile->counts) out_ << "edges of size " << k << ": " << n << '\n';
      out_ << "beta = " << value << '\n';
    }
    return kOk;
  }

  int symmetrize() {
    const Hypergraph h = hypergraph();
    const SymmetrizedDemand result = symmetrize_demand(h, demand(h), SizeLimits::from_environment());
    if (opt_.as_json) {
      emit(json{{"demand", rationals_json(result.demand.values())}, {"automorphisms", result.group_order}});
    } else {
      out_ << format_demand(result.demand) << '\n' << "|Aut(H)| = " << result.group_order << '\n';
    }
    return kOk;
  }

 private:
  static json schedule_json(const Schedule& schedule) {
    json list = json::array();
    for (const auto& e : schedule.entries) list.push_back(json{{"set", set_json(e.links)}, {"duration", rational_json(e.duration)}});
    return list;
  }

  void emit(const json& doc) { out_ << doc.dump(2) << '\n'; }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conflict-hypergraph link scheduling: feasibility, greedy schedules, interference degree"};
  app.set_version_flag("--version", std::string("hypersched ") + kVersion);
  app.require_subcommand(1);

  Options opt;
  std::function<int(Runner&)> action;

  auto add = [&](const std::string& name, const std::string& description, std::function<int(Runner&)> handler) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("FILE", opt.hypergraph_path, "hypergraph file")->required();
    sub->add_flag("--minimalize", opt.minimalize, "drop non-minimal edges instead of rejecting them");
    sub->add_flag("--json", opt.as_json, "machine-readable output");
    sub->callback([&action, handler] { action = handler; });
    return sub;
  };
  auto with_demand = [&](CLI::App* sub) {
    sub->add_option("--demand", opt.demand_path, "demand file")->required();
    return sub;
  };

  add("validate", "check hypergraph invariants", [](Runner& r) { return r.validate(); });
  add("indep-sets", "list independent sets", [](Runner& r) { return r.indep_sets(); })
      ->add_flag("--maximal", opt.maximal, "only inclusion-maximal sets");
  with_demand(add("chi-f", "fractional chromatic number with witness schedule", [](Runner& r) { return r.chi_f(); }));
  with_demand(add("feasible", "admission control decision", [](Runner& r) { return r.feasible(); }));
  CLI::App* schedule =
      with_demand(add("schedule", "greedy interval assignment", [](Runner& r) { return r.schedule(); }));
  schedule->add_option("--order", opt.order, "processing order, comma-separated 1-based labels");
  schedule->add_option("--w", opt.weight_path, "weight matrix file (default: Delta matrix)");
  CLI::App* check = with_demand(add("check", "sufficient feasibility condition", [](Runner& r) { return r.check(); }));
  check->add_option("--rule", opt.rule, "lemma1 | cor4 | thm3")
      ->required()
      ->check(CLI::IsMember({"lemma1", "cor4", "thm3"}));
  check->add_option("--w", opt.weight_path, "weight matrix file for thm3 (default: Delta matrix)");
  add("metrics", "interference degree report", [](Runner& r) { return r.metrics(); });
  add("beta", "worst-case bound ratio by enumeration", [&err](Runner& r) { return r.beta(err); });
  add("star", "star detection and closed-form ratio", [](Runner& r) { return r.star(); });
  with_demand(add("symmetrize", "average a demand over the automorphism group", [](Runner& r) { return r.symmetrize(); }));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  Runner runner(opt, out);
  try {
    return action(runner);
  } catch (const FileError& e) {
    err << e.path;
    if (e.error.line() > 0) err << ':' << e.error.line();
    const std::string what = e.error.what();
    const std::string prefix = "line " + std::to_string(e.error.line()) + ": ";
    err << ": error: " << (what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what) << '\n';
    return kInputError;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << " (set HS_SIZE_LIMIT to raise it)\n";
    return kLimitExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace hypersched::cli
