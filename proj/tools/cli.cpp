#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cstq/ilf_index.hpp"
#include "cstq/lcp_rmq.hpp"
#include "cstq/measures.hpp"
#include "cstq/sparse_rmq.hpp"
#include "cstq/suffix_array.hpp"
#include "cstq/verify.hpp"
#include "json.hpp"

namespace cstq::cli {

namespace {

using Doc = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string scalar(const Doc& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "n/a";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar(v[i]);
    return s;
  }
  return v.dump();
}

// Nested objects become dotted keys. Array elements carrying a "name" are keyed
// by it; with `leaf_names` a named single-field element prints as just "name".
void flatten(const Doc& doc, const std::string& prefix, bool leaf_names, const char* sep, std::ostream& out) {
  for (const auto& [key, v] : doc.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      flatten(v, path, leaf_names, sep, out);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        Doc rest = v[i];
        std::string label = std::to_string(i);
        if (rest.contains("name")) {
          label = rest["name"].get<std::string>();
          rest.erase("name");
        }
        if (leaf_names && rest.size() == 1) {
          out << label << sep << scalar(rest.begin().value()) << "\n";
        } else {
          flatten(rest, path + "." + label, leaf_names, sep, out);
        }
      }
    } else {
      out << path << sep << scalar(v) << "\n";
    }
  }
}

void emit(const Doc& body, const std::string& command, OutputFormat format, std::ostream& out) {
  Doc doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc.update(body);
  switch (format) {
    case OutputFormat::json: out << doc.dump(2) << "\n"; break;
    case OutputFormat::structured: flatten(doc, "", false, "=", out); break;
    case OutputFormat::human: flatten(body, "", true, ": ", out); break;
  }
}

std::vector<Index> read_integers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::vector<Index> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    Index v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InputError("malformed integer '" + tok + "' in '" + path + "'");
    out.push_back(v);
  }
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double log2_or_nan(Index n) { return n > 1 ? std::log2(static_cast<double>(n)) : std::nan(""); }

Doc ratio(double num, double den) {
  if (!(den > 0) || std::isnan(num)) return nullptr;
  return num / den;
}

Doc symbols_json(const OneBased<Symbol>& s) { return Doc(s.values()); }

std::string symbol_label(Symbol c, InputFormat f) {
  if (f == InputFormat::ascii && c >= 32 && c < 127) return std::string(1, static_cast<char>(c));
  return std::to_string(c);
}

int cmd_arrays(const RunConfig& cfg, std::ostream& out) {
  const Text t = read_text(cfg.input_path, cfg.input_format);
  const auto b = build_bundle(t);
  Doc body;
  body["n"] = t.size();
  Doc arrays = Doc::array();
  auto add = [&](const char* name, Doc values) { arrays.push_back({{"name", name}, {"values", std::move(values)}}); };
  add("sa", b.sa.values());
  add("isa", b.isa.values());
  add("lcp", b.lcp.values());
  add("plcp", b.plcp.values());
  if (cfg.input_format == InputFormat::ascii && cfg.output == OutputFormat::human) {
    Doc chars = Doc::array();
    for (Symbol c : b.bwt) chars.push_back(symbol_label(c, cfg.input_format));
    add("bwt", chars);
  } else {
    add("bwt", symbols_json(b.bwt));
  }
  add("lf", b.lf.values());
  add("ilf", b.ilf.values());
  add("phi", b.phi.values());
  add("inv_phi", b.inv_phi.values());
  body["arrays"] = std::move(arrays);
  emit(body, "arrays", cfg.output, out);
  return kExitOk;
}

int cmd_measures(const RunConfig& cfg, std::ostream& out) {
  const Text t = read_text(cfg.input_path, cfg.input_format);
  const Index n = t.size();
  const auto lz = lz77_factorize(t);
  const Index z = lz.size();
  const Index r = bwt_run_count(t);
  const DeltaValue d = substring_complexity(t);
  const double lg = log2_or_nan(n);

  Doc body;
  body["n"] = n;
  body["sigma"] = t.sigma();
  body["rl_runs"] = run_length_encode(t).size();
  body["z"] = z;
  body["r"] = r;
  body["delta"] = {{"numerator", d.numerator}, {"denominator", d.denominator}, {"arg_len", d.arg_len},
                   {"value", d.value()}};
  body["ratios"] = {{"z_over_delta_log_n", ratio(static_cast<double>(z), d.value() * lg)},
                    {"r_over_delta_log2_n", ratio(static_cast<double>(r), d.value() * lg * lg)},
                    {"delta_over_z", ratio(d.value(), static_cast<double>(z))},
                    {"delta_over_r", ratio(d.value(), static_cast<double>(r))}};
  if (cfg.show_phrases) {
    Doc phrases = Doc::array();
    for (const Phrase& p : lz.phrases) {
      phrases.push_back(p.is_literal() ? "(" + symbol_label(p.symbol, cfg.input_format) + ",0)"
                                       : "(" + std::to_string(p.source) + "," + std::to_string(p.length) + ")");
    }
    body["lz77_phrases"] = phrases;
  }
  emit(body, "measures", cfg.output, out);
  return kExitOk;
}

template <class F>
double median_ns_per_op(int repetitions, Index ops, F&& body) {
  body();  // warm-up
  std::vector<double> samples;
  for (int rep = 0; rep < std::max(1, repetitions); ++rep) {
    const auto t0 = Clock::now();
    body();
    samples.push_back(std::chrono::duration<double, std::nano>(Clock::now() - t0).count() /
                      static_cast<double>(std::max<Index>(ops, 1)));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

std::vector<Index> position_queries(const RunConfig& cfg, Index n) {
  if (!cfg.queries_path.empty()) return read_integers(cfg.queries_path);
  std::vector<Index> all(static_cast<std::size_t>(n));
  for (Index i = 1; i <= n; ++i) all[static_cast<std::size_t>(i - 1)] = i;
  return all;
}

std::vector<std::pair<Index, Index>> pair_queries(const RunConfig& cfg, Index lo, Index n, bool ordered) {
  std::vector<std::pair<Index, Index>> q;
  if (!cfg.queries_path.empty()) {
    const auto v = read_integers(cfg.queries_path);
    if (v.size() % 2) throw InputError("query file holds an odd number of integers");
    for (std::size_t i = 0; i < v.size(); i += 2) q.emplace_back(v[i], v[i + 1]);
    return q;
  }
  for (Index a = lo; a <= n; ++a) {
    for (Index b = ordered ? a + 1 : 1; b <= n; ++b) q.emplace_back(a, b);
  }
  return q;
}

int cmd_ilf(const RunConfig& cfg, std::ostream& out) {
  const Text t = read_text(cfg.input_path, cfg.input_format);
  const auto idx = IlfIndex::build(t, cfg.flavor);
  const auto oracle = build_bundle(t);
  const auto queries = position_queries(cfg, t.size());

  Index mismatches = 0;
  IlfQueryCounters counters;
  Doc answers = Doc::array();
  for (Index i : queries) {
    const Index got = idx.query(i, &counters);
    mismatches += got != oracle.ilf.at(i);
    if (!cfg.queries_path.empty()) answers.push_back(got);
  }

  Doc body;
  body["n"] = t.size();
  body["r"] = count_runs(oracle.bwt.values());
  body["r_terminated"] = idx.terminated_runs();
  body["boundaries"] = idx.boundary_count();
  body["stored_entries"] = 2 * idx.boundary_count();
  body["predecessor"] = std::string(to_string(idx.flavor()));
  body["queries"] = queries.size();
  body["predecessor_queries"] = counters.predecessor_queries;
  if (!cfg.queries_path.empty()) body["answers"] = answers;
  body["oracle_mismatches"] = mismatches;
  emit(body, "ilf", cfg.output, out);
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_ilf_bench(const RunConfig& cfg, std::ostream& out) {
  const Text t = read_text(cfg.input_path, cfg.input_format);
  const auto queries = position_queries(cfg, t.size());
  Doc body;
  body["n"] = t.size();
  body["queries"] = queries.size();
  body["repetitions"] = cfg.repetitions;
  Doc rows = Doc::array();
  for (auto flavor : {PredecessorFlavor::yfast, PredecessorFlavor::smallset, PredecessorFlavor::binary}) {
    const auto t0 = Clock::now();
    const auto idx = IlfIndex::build(t, flavor);
    const double build_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    Index sink = 0;
    const double ns = median_ns_per_op(cfg.repetitions, static_cast<Index>(queries.size()), [&] {
      for (Index i : queries) sink += idx.query(i);
    });
    rows.push_back({{"name", std::string(to_string(flavor))},
                    {"build_ms", build_ms},
                    {"median_query_ns", ns},
                    {"checksum", sink % 1000003}});
  }
  body["flavors"] = rows;
  emit(body, "ilf-bench", cfg.output, out);
  return kExitOk;
}

Doc grammar_json(const GrammarReport& g) {
  return {{"n", g.n},
          {"r", g.r},
          {"slp_size", g.slp_size},
          {"slp_height", g.slp_height},
          {"size", g.size},
          {"height", g.height},
          {"widening_rounds", g.rounds},
          {"rhs_bound", g.rhs_bound},
          {"max_rhs", g.max_rhs},
          {"size_over_r_log2_n", g.size_over_r_log2n > 0 ? Doc(g.size_over_r_log2n) : Doc(nullptr)}};
}

int cmd_lcp_rmq(const RunConfig& cfg, std::ostream& out) {
  const Text t = read_text(cfg.input_path, cfg.input_format);
  const auto idx = LcpRmqIndex::build(t, cfg.epsilon);
  const auto lcp = lcp_array(t, suffix_array(t));
  const SparseTableRmq oracle(std::vector<std::int64_t>(lcp.begin(), lcp.end()));
  const auto queries = pair_queries(cfg, 0, t.size(), true);

  Index mismatches = 0;
  Doc answers = Doc::array();
  for (auto [b, e] : queries) {
    const Index got = idx.lcp_rmq(b, e);
    mismatches += got != oracle.argmin(b, e);
    if (!cfg.queries_path.empty()) answers.push_back(got);
  }
  Doc body;
  body["grammar"] = grammar_json(idx.report());
  body["queries"] = queries.size();
  if (!cfg.queries_path.empty()) body["answers"] = answers;
  body["oracle_mismatches"] = mismatches;
  if (cfg.bench) {
    Index sink = 0;
    body["median_query_ns"] = median_ns_per_op(cfg.repetitions, static_cast<Index>(queries.size()), [&] {
      for (auto [b, e] : queries) sink += idx.lcp_rmq(b, e);
    });
    body["checksum"] = sink % 1000003;
  }
  emit(body, "lcp-rmq", cfg.output, out);
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_lce(const RunConfig& cfg, std::ostream& out) {
  const Text t = read_text(cfg.input_path, cfg.input_format);
  const auto idx = LcpRmqIndex::build(t, cfg.epsilon);
  const auto queries = pair_queries(cfg, 1, t.size(), false);
  Index mismatches = 0;
  Doc answers = Doc::array();
  for (auto [i, j] : queries) {
    const Index got = idx.lce(i, j);
    mismatches += got != lce_naive(t, i, j);
    if (!cfg.queries_path.empty()) answers.push_back(got);
  }
  Doc body;
  body["grammar"] = grammar_json(idx.report());
  body["queries"] = queries.size();
  if (!cfg.queries_path.empty()) body["answers"] = answers;
  body["oracle_mismatches"] = mismatches;
  emit(body, "lce", cfg.output, out);
  return mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_gadget_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyPlan plan;
  plan.kind = cfg.kind;
  plan.size = cfg.size;
  plan.exhaustive = cfg.exhaustive;
  plan.trials = cfg.trials;
  plan.seed = cfg.seed;
  plan.workers = cfg.workers;
  const auto rep = verify_plan(plan);

  Doc body;
  body["kind"] = std::string(to_string(rep.kind));
  body["size"] = cfg.size;
  body["mode"] = cfg.exhaustive ? "exhaustive" : "random";
  if (!cfg.exhaustive) {
    body["trials"] = cfg.trials;
    body["seed"] = cfg.seed;
  }
  body["instances"] = rep.instances;
  body["queries"] = rep.queries;
  body["mismatches"] = rep.mismatches;
  body["structural_failures"] = rep.structural_failures;
  body["max_text_length"] = rep.max_text_length;
  body["max_rl_runs"] = rep.max_runs;
  body["max_lz77_phrases"] = rep.max_lz_phrases;
  body["max_certificate_phrases"] = rep.max_certificate_phrases;
  body["max_certificate_bound"] = rep.max_certificate_bound;
  body["first_failure"] = rep.first_failure ? Doc(*rep.first_failure) : Doc(nullptr);
  body["status"] = rep.passed() ? "pass" : "fail";
  emit(body, "gadget-verify", cfg.output, out);
  return rep.passed() ? kExitOk : kExitMismatch;
}

}  // namespace

Text read_text(const std::string& path, InputFormat format) {
  if (format == InputFormat::ints) {
    const auto values = read_integers(path);
    if (values.empty()) throw InputError("'" + path + "' holds no symbols");
    std::vector<Symbol> s;
    Index max = 0;
    for (Index v : values) {
      if (v < 0 || v >= static_cast<Index>(std::numeric_limits<Symbol>::max())) {
        throw InputError("symbol " + std::to_string(v) + " outside the supported range");
      }
      s.push_back(static_cast<Symbol>(v));
      max = std::max(max, v);
    }
    return Text(std::move(s), static_cast<Symbol>(max + 1));
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!bytes.empty() && bytes.back() == '\n') bytes.pop_back();
  if (!bytes.empty() && bytes.back() == '\r') bytes.pop_back();
  if (bytes.empty()) throw InputError("'" + path + "' holds no symbols");
  return Text::from_bytes(bytes);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "arrays") return cmd_arrays(cfg, out);
    if (cfg.subcommand == "measures") return cmd_measures(cfg, out);
    if (cfg.subcommand == "ilf") return cmd_ilf(cfg, out);
    if (cfg.subcommand == "ilf-bench") return cmd_ilf_bench(cfg, out);
    if (cfg.subcommand == "lcp-rmq") return cmd_lcp_rmq(cfg, out);
    if (cfg.subcommand == "lce") return cmd_lce(cfg, out);
    if (cfg.subcommand == "gadget-verify") return cmd_gadget_verify(cfg, out);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitMismatch;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compressed string-query toolkit: query arrays, repetitiveness measures, "
               "compressed indexes and reduction gadget verification."};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, InputFormat> input_formats{{"ascii", InputFormat::ascii}, {"ints", InputFormat::ints}};
  const std::map<std::string, OutputFormat> output_formats{
      {"human", OutputFormat::human}, {"structured", OutputFormat::structured}, {"json", OutputFormat::json}};
  const std::map<std::string, PredecessorFlavor> flavors{{"yfast", PredecessorFlavor::yfast},
                                                         {"smallset", PredecessorFlavor::smallset},
                                                         {"binary", PredecessorFlavor::binary}};
  std::map<std::string, GadgetKind> kinds;
  for (GadgetKind k : kAllGadgetKinds) kinds.emplace(std::string(to_string(k)), k);

  auto output_option = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "Output format: human, structured (key=value) or json")
        ->transform(CLI::CheckedTransformer(output_formats, CLI::ignore_case));
  };
  auto text_options = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input_path, "Text file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format,-f", cfg.input_format, "Input format: ascii (bytes) or ints (whitespace-separated)")
        ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
    output_option(sub);
  };
  auto query_option = [&](CLI::App* sub, const char* what) {
    sub->add_option("--queries,-q", cfg.queries_path, what)->check(CLI::ExistingFile);
  };

  auto* arrays = app.add_subcommand("arrays", "Print SA, ISA, LCP, PLCP, BWT, LF, ILF, PHI and inverse PHI");
  text_options(arrays);

  auto* measures = app.add_subcommand("measures", "Report n, sigma, |RL|, z, r, delta and bound ratios");
  text_options(measures);
  measures->add_flag("--phrases", cfg.show_phrases, "Also list the greedy LZ77 phrases");

  auto* ilf = app.add_subcommand("ilf", "Answer inverse-LF queries with the run-sampled index");
  text_options(ilf);
  query_option(ilf, "File of positions (default: every position)");
  std::string flavor_name{to_string(cfg.flavor)};
  ilf->add_option("--predecessor", flavor_name, "Predecessor structure: yfast, smallset or binary")
      ->check(CLI::IsMember(flavors, CLI::ignore_case));

  auto* ilf_bench = app.add_subcommand("ilf-bench", "Time inverse-LF queries for each predecessor structure");
  text_options(ilf_bench);
  query_option(ilf_bench, "File of positions (default: every position)");
  ilf_bench->add_option("--repetitions", cfg.repetitions, "Timed repetitions after one warm-up")->check(CLI::PositiveNumber);

  auto* lcp_rmq = app.add_subcommand("lcp-rmq", "Answer LCP range-minimum queries with the grammar index");
  text_options(lcp_rmq);
  query_option(lcp_rmq, "File of pairs 'b e' asking for argmin over (b..e] (default: all ranges)");
  lcp_rmq->add_option("--epsilon", cfg.epsilon, "Widening exponent in (0,1)")->check(CLI::Range(0.0, 1.0));
  lcp_rmq->add_flag("--bench", cfg.bench, "Also report the median time per query");
  lcp_rmq->add_option("--repetitions", cfg.repetitions, "Timed repetitions after one warm-up")->check(CLI::PositiveNumber);

  auto* lce = app.add_subcommand("lce", "Answer longest-common-extension queries with the grammar index");
  text_options(lce);
  query_option(lce, "File of pairs 'i j' (default: all pairs)");
  lce->add_option("--epsilon", cfg.epsilon, "Widening exponent in (0,1)")->check(CLI::Range(0.0, 1.0));

  auto* gadget = app.add_subcommand("gadget-verify", "Check a reduction's query mapping against brute force");
  std::string kind_name;
  gadget->add_option("--kind,-k", kind_name, "lcp-select, isa-count, bwt-color, plcp-pred, phi-pred, ilf-pred or phi-inverse")
      ->required()
      ->check(CLI::IsMember(kinds, CLI::ignore_case));
  gadget->add_option("--size,-s", cfg.size, "n for permutations and texts, m for sets")->required()->check(CLI::PositiveNumber);
  auto* exhaustive = gadget->add_flag("--exhaustive", cfg.exhaustive, "Every input of exactly this size");
  auto* trials = gadget->add_option("--trials", cfg.trials, "Random inputs with sizes drawn from [1..size]")
                     ->check(CLI::PositiveNumber);
  auto* seed = gadget->add_option("--seed", cfg.seed, "Seed for the random inputs");
  exhaustive->excludes(trials)->excludes(seed);
  gadget->add_option("--workers", cfg.workers, "Threads to shard instances over")->check(CLI::PositiveNumber);
  output_option(gadget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  cfg.flavor = parse_predecessor_flavor(lower(flavor_name));
  if (!kind_name.empty()) cfg.kind = parse_gadget_kind(lower(kind_name));
  if (cfg.epsilon <= 0 || cfg.epsilon >= 1) {
    err << "error: --epsilon must lie strictly between 0 and 1\n";
    return kExitUsage;
  }
  return run(cfg, out, err);
}

}  // namespace cstq::cli
