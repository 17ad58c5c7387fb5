#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqlab/enumeration.hpp"
#include "eqlab/families.hpp"
#include "eqlab/graph6.hpp"
#include "eqlab/oracles.hpp"

namespace eqlab::cli {

namespace {

using json = nlohmann::ordered_json;

// Malformed or unusable input; always exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr unsigned kSpectralRegularMaxOrder = 10;

struct Caps {
  unsigned catalog = kMaxCatalogOrder;
  unsigned regular = kMaxRegularCatalogOrder;
  unsigned oracle = kOracleOrderCeiling;
};

// EQLAB_MAX_ORDER can only lower the built-in caps.
Caps caps_from_env() {
  Caps caps;
  const char* raw = std::getenv("EQLAB_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return caps;
  unsigned limit = 0;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument("trailing");
    limit = static_cast<unsigned>(std::min<unsigned long>(v, kMaxOrder));
  } catch (const std::exception&) {
    throw InputError(std::string("EQLAB_MAX_ORDER must be a non-negative integer, got '") + raw + "'");
  }
  caps.catalog = std::min(caps.catalog, limit);
  caps.regular = std::min(caps.regular, limit);
  caps.oracle = std::min(caps.oracle, limit);
  return caps;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// "order\nu v\n..." with blank lines and '#' comments ignored.
Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<unsigned> order;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    std::istringstream fields(t);
    std::vector<std::string> tok;
    for (std::string f; fields >> f;) tok.push_back(f);
    auto number = [&](const std::string& s) -> unsigned {
      if (!all_digits(s) || s.size() > 4) {
        throw InputError("edge list line " + std::to_string(line_no) + ": '" + s + "' is not a vertex index");
      }
      return static_cast<unsigned>(std::stoul(s));
    };
    if (!order) {
      if (tok.size() != 1) throw InputError("edge list line " + std::to_string(line_no) + ": expected the order");
      order = number(tok[0]);
      continue;
    }
    if (tok.size() != 2) {
      throw InputError("edge list line " + std::to_string(line_no) + ": expected two vertex indices");
    }
    edges.emplace_back(number(tok[0]), number(tok[1]));
  }
  if (!order) throw InputError("edge list is empty");
  return new_graph(*order, edges);
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw InputError("graph6 line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

// input is "-" (stdin), an existing file, or a literal graph6 string.
std::vector<Graph> load_graphs(const std::string& input) {
  std::string text;
  std::error_code ec;
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream f(input, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    text = input;
  }
  // graph6 bytes are 63-126, so a digits-only first line means an edge list.
  std::istringstream probe(text);
  std::string first;
  while (std::getline(probe, first)) {
    const auto hash = first.find('#');
    const std::string t = trim(hash == std::string::npos ? first : first.substr(0, hash));
    if (!t.empty()) {
      first = t;
      break;
    }
    first.clear();
  }
  if (first.empty()) throw InputError("no graph in input");
  std::vector<Graph> graphs = all_digits(first) ? std::vector<Graph>{parse_edge_list(text)} : parse_graph6_lines(text);
  if (graphs.empty()) throw InputError("no graph in input");
  return graphs;
}

std::string edge_list_text(const Graph& g) {
  std::string s = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

json members_json(const VertexSet& s) { return json(s.members()); }

json verdict_json(const Verdict& v) {
  json j;
  j["holds"] = v.holds;
  if (v.witness) {
    j["witness"] = members_json(*v.witness);
    j["witness_complement"] = members_json(v.witness->complement());
  }
  j["subsets_examined"] = v.subsets_examined;
  return j;
}

json labels_json(const Classification& c) {
  json arr = json::array();
  for (const auto& l : c.labels) arr.push_back({{"kind", family_name(l.kind)}, {"n", l.n}});
  return arr;
}

std::string labels_text(const Classification& c) {
  if (!c.in_characterization()) return "not in characterization";
  std::string s;
  for (const auto& l : c.labels) {
    if (!s.empty()) s += ", ";
    s += l.to_string();
  }
  return s;
}

struct Common {
  bool json_out = false;
  unsigned jobs = 1;
  bool deterministic = false;
  bool force = false;
};

// Evaluates fn on every index, in parallel when jobs > 1, keeping index order.
template <typename R>
std::vector<R> map_ordered(std::size_t count, unsigned jobs, const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for num_threads(static_cast<int>(std::max(1U, jobs))) schedule(dynamic, 4) if (jobs > 1)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      slots[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

class Report {
 public:
  Report(const std::vector<std::string>& args, const Common& common)
      : common_(common), start_(std::chrono::steady_clock::now()) {
    std::string echoed;
    for (const auto& a : args) {
      if (!echoed.empty()) echoed += ' ';
      echoed += a;
    }
    doc_["schema"] = kReportSchema;
    doc_["command"] = echoed;
    doc_["parameters"] = json::object();
    doc_["records"] = json::array();
  }

  json& parameters() { return doc_["parameters"]; }
  json& records() { return doc_["records"]; }
  void set_summary(json s) { doc_["summary"] = std::move(s); }

  void write(std::ostream& out) {
    if (!common_.deterministic) {
      doc_["wall_time_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }
    out << doc_.dump(2) << "\n";
  }

 private:
  Common common_;
  std::chrono::steady_clock::time_point start_;
  json doc_;
};

void check_oracle_cap(const Graph& g, const Caps& caps, bool force) {
  if (g.order() > caps.oracle && !force) {
    throw CapacityError("order " + std::to_string(g.order()) + " is above the oracle ceiling of " +
                        std::to_string(caps.oracle) + " (use --force)");
  }
}

int cmd_check(const std::vector<std::string>& args, const std::string& input, const std::string& prop_name,
              const Common& common, std::ostream& out) {
  const auto property = parse_property(prop_name);
  if (!property) throw InputError("unknown property '" + prop_name + "'");
  const Caps caps = caps_from_env();
  const auto graphs = load_graphs(input);
  for (const auto& g : graphs) {
    if (g.order() % 2 != 0) {
      throw ValidationError(write_graph6(g) + " has odd order " + std::to_string(g.order()));
    }
    check_oracle_cap(g, caps, common.force);
  }
  const OracleOptions opts{common.jobs, common.force};

  Report report(args, common);
  report.parameters()["property"] = prop_name;
  report.parameters()["jobs"] = common.jobs;
  std::size_t failures = 0;
  for (const auto& g : graphs) {
    const Verdict v = evaluate(*property, g, opts);
    const std::string g6 = write_graph6(g);
    if (!v.holds) ++failures;
    if (common.json_out) {
      json rec;
      rec["graph6"] = g6;
      rec["order"] = g.order();
      rec["verdicts"][prop_name] = verdict_json(v);
      report.records().push_back(std::move(rec));
    } else if (v.holds) {
      out << g6 << ": " << prop_name << " holds (" << v.subsets_examined << " bisections checked)\n";
    } else {
      out << g6 << ": " << prop_name << " fails; witness A=" << v.witness->to_string()
          << " B=" << v.witness->complement().to_string() << "\n";
    }
  }
  if (common.json_out) {
    report.set_summary({{"graphs", graphs.size()}, {"holds", graphs.size() - failures}, {"fails", failures}});
    report.write(out);
  }
  return failures == 0 ? kExitOk : kExitFailed;
}

int cmd_classify(const std::vector<std::string>& args, const std::string& input, const Common& common,
                 std::ostream& out) {
  const auto graphs = load_graphs(input);
  Report report(args, common);
  std::size_t members = 0;
  for (const auto& g : graphs) {
    const Classification c = recognize(g);
    members += c.in_characterization() ? 1 : 0;
    if (common.json_out) {
      report.records().push_back({{"graph6", write_graph6(g)},
                                  {"order", g.order()},
                                  {"labels", labels_json(c)},
                                  {"in_characterization", c.in_characterization()}});
    } else {
      out << write_graph6(g) << ": " << labels_text(c) << "\n";
    }
  }
  if (common.json_out) {
    report.set_summary({{"graphs", graphs.size()}, {"in_characterization", members}});
    report.write(out);
  }
  return kExitOk;
}

int cmd_verify_theorem(const std::vector<std::string>& args, unsigned order, const Common& common,
                       std::ostream& out) {
  const Caps caps = caps_from_env();
  if (order == 0 || order % 2 != 0) throw ValidationError("verify-theorem needs an even order in 2..8");
  if (order > caps.catalog) {
    throw CapacityError("verify-theorem supports orders up to " + std::to_string(caps.catalog));
  }
  const GraphCatalog catalog = enumerate_all(order);

  struct Row {
    Verdict verdict;
    Classification classification;
  };
  const auto rows = map_ordered<Row>(catalog.graphs.size(), common.jobs, [&](std::size_t i) {
    return Row{is_degree_equipartite(catalog.graphs[i]), recognize(catalog.graphs[i])};
  });

  Report report(args, common);
  report.parameters()["order"] = order;
  report.parameters()["jobs"] = common.jobs;
  std::size_t positives = 0;
  std::size_t recognized = 0;
  std::vector<std::size_t> disagreements;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool oracle = rows[i].verdict.holds;
    const bool structural = rows[i].classification.in_characterization();
    positives += oracle ? 1 : 0;
    recognized += structural ? 1 : 0;
    if (oracle != structural) disagreements.push_back(i);
    if (common.json_out) {
      json rec;
      rec["graph6"] = write_graph6(catalog.graphs[i]);
      rec["verdicts"]["degree-equipartite"] = verdict_json(rows[i].verdict);
      rec["labels"] = labels_json(rows[i].classification);
      rec["agree"] = oracle == structural;
      report.records().push_back(std::move(rec));
    }
  }
  if (common.json_out) {
    report.set_summary({{"graphs", rows.size()},
                        {"degree_equipartite", positives},
                        {"in_characterization", recognized},
                        {"disagreements", disagreements.size()}});
    report.write(out);
  } else {
    out << "order " << order << ": " << rows.size() << " graphs, " << positives << " degree-equipartite, "
        << recognized << " in characterization, " << disagreements.size() << " disagreements\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].verdict.holds) {
        out << "  " << write_graph6(catalog.graphs[i]) << ": " << labels_text(rows[i].classification) << "\n";
      }
    }
    for (std::size_t i : disagreements) {
      out << "  DISAGREEMENT " << write_graph6(catalog.graphs[i])
          << ": oracle=" << (rows[i].verdict.holds ? "holds" : "fails")
          << " recognizer=" << labels_text(rows[i].classification) << "\n";
    }
  }
  return disagreements.empty() ? kExitOk : kExitFailed;
}

int cmd_spectral_search(const std::vector<std::string>& args, unsigned order, std::optional<unsigned> degree,
                        const Common& common, std::ostream& out) {
  const Caps caps = caps_from_env();
  if (order % 2 != 0) throw ValidationError("spectral-search needs an even order");
  GraphCatalog catalog;
  if (degree) {
    const unsigned cap = std::min(kSpectralRegularMaxOrder, caps.regular);
    if (order > cap) throw CapacityError("spectral-search with --degree supports orders up to " + std::to_string(cap));
    catalog = enumerate_regular(order, *degree);
  } else {
    if (order > caps.catalog) {
      throw CapacityError("spectral-search over all graphs supports orders up to " + std::to_string(caps.catalog) +
                          "; add --degree for regular catalogs up to 10");
    }
    catalog = enumerate_all(order);
  }

  struct Row {
    Verdict spectral;
    Verdict degree;
    Classification classification;
  };
  const auto rows = map_ordered<Row>(catalog.graphs.size(), common.jobs, [&](std::size_t i) {
    const Graph& g = catalog.graphs[i];
    return Row{is_spectral_equipartite(g), is_degree_equipartite(g), recognize(g)};
  });

  Report report(args, common);
  report.parameters()["order"] = order;
  if (degree) report.parameters()["degree"] = *degree;
  report.parameters()["jobs"] = common.jobs;
  std::size_t spectral = 0;
  std::vector<std::size_t> exceptions;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool is_exception = rows[i].spectral.holds && !rows[i].degree.holds;
    spectral += rows[i].spectral.holds ? 1 : 0;
    if (is_exception) exceptions.push_back(i);
    if (common.json_out) {
      json rec;
      rec["graph6"] = write_graph6(catalog.graphs[i]);
      rec["verdicts"]["spectral-equipartite"] = verdict_json(rows[i].spectral);
      rec["verdicts"]["degree-equipartite"] = verdict_json(rows[i].degree);
      rec["labels"] = labels_json(rows[i].classification);
      rec["exception"] = is_exception;
      report.records().push_back(std::move(rec));
    }
  }
  const std::string conclusion = exceptions.empty()
                                     ? "all spectral-equipartite graphs are in the characterization"
                                     : "exception found: spectral-equipartite but not degree-equipartite";
  if (common.json_out) {
    json exc = json::array();
    for (std::size_t i : exceptions) exc.push_back(write_graph6(catalog.graphs[i]));
    report.set_summary({{"graphs", rows.size()},
                        {"spectral_equipartite", spectral},
                        {"exceptions", exc},
                        {"conclusion", conclusion}});
    report.write(out);
  } else {
    out << "order " << order;
    if (degree) out << ", degree " << *degree;
    out << ": " << rows.size() << " graphs scanned, " << spectral << " spectral-equipartite, " << exceptions.size()
        << " exceptions\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].spectral.holds) continue;
      out << "  " << write_graph6(catalog.graphs[i]) << ": " << labels_text(rows[i].classification)
          << (rows[i].degree.holds ? "" : "  [EXCEPTION: not degree-equipartite]") << "\n";
    }
    out << conclusion << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const std::vector<std::string>& args, unsigned order, std::optional<unsigned> degree,
                  const Common& common, std::ostream& out) {
  const Caps caps = caps_from_env();
  GraphCatalog catalog;
  if (degree) {
    if (order > caps.regular) throw CapacityError("regular catalogs go up to order " + std::to_string(caps.regular));
    catalog = enumerate_regular(order, *degree);
  } else {
    if (order > caps.catalog) throw CapacityError("catalogs go up to order " + std::to_string(caps.catalog));
    catalog = enumerate_all(order);
  }
  if (common.json_out) {
    Report report(args, common);
    report.parameters()["order"] = order;
    if (degree) report.parameters()["degree"] = *degree;
    for (const auto& g : catalog.graphs) report.records().push_back({{"graph6", write_graph6(g)}});
    report.set_summary({{"graphs", catalog.graphs.size()}});
    report.write(out);
  } else {
    for (const auto& g : catalog.graphs) out << write_graph6(g) << "\n";
  }
  return kExitOk;
}

int cmd_convert(const std::string& input, const std::string& to, std::ostream& out) {
  const auto graphs = load_graphs(input);
  for (const auto& g : graphs) {
    if (to == "graph6") {
      out << write_graph6(g) << "\n";
    } else {
      out << edge_list_text(g);
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-equipartite graph toolkit: brute-force oracles, structural recognizer, catalogs"};
  app.name("eqlab");
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json_out, "Write a JSON report");
    sub->add_option("--jobs", common.jobs, "Worker threads; results are identical for any value")
        ->check(CLI::Range(1U, 1024U));
    sub->add_flag("--deterministic", common.deterministic, "Omit wall time from JSON reports");
    sub->add_flag("--force", common.force, "Run oracles above the order ceiling");
  };

  std::string input;
  std::string property;
  unsigned order = 0;
  std::optional<unsigned> degree;
  std::string to = "graph6";

  auto* check = app.add_subcommand("check", "Decide a property by exhaustive bisection check");
  check->add_option("input", input, "graph6 string, graph6/edge-list file, or - for stdin")->required();
  check->add_option("--property", property, "degree-equipartite | weakly-equipartite | equipartite | "
                                            "spectral-equipartite | balanced-bisections")
      ->required();
  add_common(check);

  auto* classify = app.add_subcommand("classify", "List the matching families");
  classify->add_option("input", input, "graph6 string, graph6/edge-list file, or - for stdin")->required();
  add_common(classify);

  auto* verify = app.add_subcommand("verify-theorem", "Compare oracle and recognizer over a full catalog");
  verify->add_option("--order", order, "Even order in 2..8")->required();
  add_common(verify);

  auto* spectral = app.add_subcommand("spectral-search", "Search a catalog for spectral-equipartite graphs");
  spectral->add_option("--order", order, "Even order (<= 8, or <= 10 with --degree)")->required();
  spectral->add_option("--degree", degree, "Restrict to k-regular graphs");
  add_common(spectral);

  auto* enumerate = app.add_subcommand("enumerate", "Print a catalog as graph6 lines");
  enumerate->add_option("--order", order, "Order (<= 8, or <= 12 with --degree)")->required();
  enumerate->add_option("--degree", degree, "Restrict to k-regular graphs");
  add_common(enumerate);

  auto* convert = app.add_subcommand("convert", "Convert between edge-list and graph6");
  convert->add_option("input", input, "graph6 string, graph6/edge-list file, or - for stdin")->required();
  convert->add_option("--to", to, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("eqlab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(args, input, property, common, out);
    if (classify->parsed()) return cmd_classify(args, input, common, out);
    if (verify->parsed()) return cmd_verify_theorem(args, order, common, out);
    if (spectral->parsed()) return cmd_spectral_search(args, order, degree, common, out);
    if (enumerate->parsed()) return cmd_enumerate(args, order, degree, common, out);
    if (convert->parsed()) return cmd_convert(input, to, out);
  } catch (const ParseError& e) {
    err << "eqlab: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "eqlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "eqlab: invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "eqlab: capacity: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "eqlab: internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eqlab::cli
