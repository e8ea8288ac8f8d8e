#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "nestobetti/betti.hpp"
#include "nestobetti/hat_poset.hpp"
#include "nestobetti/io.hpp"

namespace nestobetti::cli {

namespace {

using nlohmann::json;

constexpr int kHomologyHochschildBound = 10;

struct SourceOptions {
  std::string building_set;
  std::string graph;
  std::vector<int> hochschild;
  int complete = 0;
  int path = 0;
  int star = 0;
  bool add_singletons = false;
};

struct Source {
  std::string name;
  std::optional<BuildingSet> building;
  std::optional<SimpleGraph> graph;
  std::optional<std::pair<int, int>> hochschild;

  BuildingSet building_set() const {
    if (building) return *building;
    if (graph) return graphical_building_set(*graph);
    return hochschild_building_set(hochschild->first, hochschild->second);
  }
};

void add_source_options(CLI::App* sub, SourceOptions& s) {
  sub->add_option("--building-set", s.building_set, "building set file");
  sub->add_option("--graph", s.graph, "graph file");
  sub->add_option("--hochschild", s.hochschild, "Hochschild building set B_{M,N}")->expected(2);
  sub->add_option("--complete", s.complete, "complete graph on N vertices");
  sub->add_option("--path", s.path, "path 1-2-...-N");
  sub->add_option("--star", s.star, "star on N vertices, centre N");
  sub->add_flag("--add-singletons", s.add_singletons, "insert missing singletons");
}

void require_positive(int n, const char* what) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs a positive size");
}

Source resolve(const SourceOptions& s) {
  const int given = !s.building_set.empty() + !s.graph.empty() + !s.hochschild.empty() +
                    (s.complete != 0) + (s.path != 0) + (s.star != 0);
  if (given != 1) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --building-set, --graph, "
                                            "--hochschild, --complete, --path, --star");
  }
  Source src;
  if (!s.building_set.empty()) {
    src.name = "building-set:" + s.building_set;
    src.building = parse_building_set(read_text_file(s.building_set), {s.add_singletons});
  } else if (!s.graph.empty()) {
    src.name = "graph:" + s.graph;
    src.graph = parse_graph(read_text_file(s.graph));
  } else if (!s.hochschild.empty()) {
    src.name = "hochschild:" + std::to_string(s.hochschild[0]) + "," + std::to_string(s.hochschild[1]);
    src.hochschild = std::make_pair(s.hochschild[0], s.hochschild[1]);
    if (s.hochschild[0] < 0 || s.hochschild[1] < 0 || s.hochschild[0] + s.hochschild[1] < 1) {
      throw Error(ErrorCode::InvalidArgument, "--hochschild needs M, N >= 0 with M + N >= 1");
    }
  } else {
    const int n = s.complete + s.path + s.star;
    require_positive(n, "graph source");
    if (n > ElementSet::kMaxLabel) throw Error(ErrorCode::GroundTooLarge, "too many vertices");
    if (s.complete != 0) {
      src.name = "complete:" + std::to_string(n);
      src.graph = complete_graph(n);
    } else if (s.path != 0) {
      src.name = "path:" + std::to_string(n);
      src.graph = path_graph(n);
    } else {
      src.name = "star:" + std::to_string(n);
      src.graph = star_graph(n);
    }
  }
  return src;
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

json breakdown_json(const std::vector<SubsetContribution>& rows, const std::string& method) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row{{"subset", r.subset.labels()}, {"k", r.k}, {"count", r.count}};
    if (!method.empty()) row["method"] = method;
    arr.push_back(std::move(row));
  }
  return arr;
}

struct BettiOptions {
  SourceOptions source;
  std::string method = "alt";
  bool breakdown = false;
  std::string format = "tsv";
  int threads = 0;
  bool unimodality = false;
};

BettiReport homology_for(const Source& src) {
  if (src.hochschild && src.hochschild->first + src.hochschild->second > kHomologyHochschildBound) {
    throw Error(ErrorCode::TooLarge, "the homology oracle on Hochschild sources is limited to M + N <= " +
                                         std::to_string(kHomologyHochschildBound));
  }
  return real_betti_homology_oracle(src.building_set());
}

BettiReport alternating_for(const Source& src) {
  if (src.hochschild) return hochschild_betti(src.hochschild->first, src.hochschild->second);
  return real_betti_alternating(src.building_set());
}

int cmd_betti(const BettiOptions& o, std::ostream& out) {
  set_thread_count(o.threads);
  const Source src = resolve(o.source);
  std::vector<BettiReport> reports;
  if (o.method == "alt") {
    reports.push_back(alternating_for(src));
  } else if (o.method == "homology") {
    reports.push_back(homology_for(src));
  } else if (o.method == "both") {
    reports.push_back(alternating_for(src));
    reports.push_back(homology_for(src));
  } else if (o.method == "anumber") {
    if (!src.graph) throw Error(ErrorCode::InvalidArgument, "--method anumber needs a graph source");
    reports.push_back(real_betti_graph(*src.graph));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown method " + o.method);
  }
  const std::vector<std::uint64_t>& primary = reports.front().betti;
  const bool both = reports.size() == 2;

  if (o.format == "json") {
    json doc{{"source", src.name}, {"method", both ? "both" : to_string(reports[0].method)},
             {"betti", primary}};
    if (both) {
      doc["method_alternating"] = to_string(reports[0].method);
      doc["betti_homology"] = reports[1].betti;
      doc["agree"] = reports[0].betti == reports[1].betti;
    }
    if (o.breakdown) {
      json rows = json::array();
      for (const auto& r : reports) {
        for (auto& row : breakdown_json(r.breakdown, both ? to_string(r.method) : "")) rows.push_back(row);
      }
      doc["breakdown"] = rows;
    }
    if (o.unimodality) {
      doc["unimodal"] = is_unimodal(primary);
      doc["log_concave"] = is_log_concave(primary);
    }
    out << doc.dump(2) << '\n';
    return 0;
  }

  if (both) {
    out << "k\talternating\thomology\n";
    const std::size_t n = std::max(reports[0].betti.size(), reports[1].betti.size());
    for (std::size_t k = 0; k < n; ++k) {
      out << k << '\t' << reports[0].at(static_cast<int>(k)) << '\t'
          << reports[1].at(static_cast<int>(k)) << '\n';
    }
  } else {
    out << "k\tbeta\n";
    for (std::size_t k = 0; k < primary.size(); ++k) out << k << '\t' << primary[k] << '\n';
  }
  if (o.breakdown) {
    out << "\nmethod\tsubset\tk\tcount\n";
    for (const auto& r : reports) {
      if (r.breakdown.empty() && r.method == Method::ClosedForm) continue;
      for (const auto& row : r.breakdown) {
        out << to_string(r.method) << '\t' << row.subset.to_string() << '\t' << row.k << '\t'
            << row.count << '\n';
      }
    }
  }
  if (o.unimodality) {
    out << "# unimodal\t" << (is_unimodal(primary) ? "yes" : "no") << '\n';
    out << "# log-concave\t" << (is_log_concave(primary) ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_complex_betti(const SourceOptions& s, const std::string& format, std::ostream& out) {
  const Source src = resolve(s);
  const auto even = complex_betti(src.building_set());
  if (format == "json") {
    out << json{{"source", src.name}, {"betti_even", even}}.dump(2) << '\n';
    return 0;
  }
  out << "degree\tbeta\n";
  for (std::size_t d = 0; d < even.size(); ++d) out << 2 * d << '\t' << even[d] << '\n';
  return 0;
}

int cmd_verify_el(const SourceOptions& s, int max_ground, const std::string& format,
                  std::ostream& out) {
  const Source src = resolve(s);
  const ElReport r = verify_el(src.building_set(), max_ground);
  if (format == "json") {
    json doc{{"source", src.name}, {"el_shellable", r.ok}};
    if (r.ok) {
      doc["intervals"] = r.certificates.size();
      json chain = json::array();
      for (ElementSet e : r.top_chain) chain.push_back(e.labels());
      doc["top_chain"] = chain;
    } else {
      doc["failing_interval"] = {r.failing_interval->bottom.labels(), r.failing_interval->top.labels()};
      doc["reason"] = r.failure;
    }
    out << doc.dump(2) << '\n';
  } else if (r.ok) {
    out << "el_shellable\tyes\n";
    out << "intervals\t" << r.certificates.size() << '\n';
    out << "top_chain\t" << chain_to_string(r.top_chain) << '\n';
  } else {
    out << "el_shellable\tno\n";
    out << "failing_interval\t" << r.failing_interval->bottom.to_string() << ' '
        << r.failing_interval->top.to_string() << '\n';
    out << "reason\t" << r.failure << '\n';
  }
  return r.ok ? 0 : 1;
}

int cmd_anumber(const SourceOptions& s, std::ostream& out) {
  const Source src = resolve(s);
  if (!src.graph) throw Error(ErrorCode::InvalidArgument, "anumber needs a graph source");
  const std::int64_t sa = signed_a_number(*src.graph);
  out << "sa\ta\n" << sa << '\t' << (sa < 0 ? -sa : sa) << '\n';
  return 0;
}

int cmd_hochschild_table(int max_m, const std::string& format, std::ostream& out) {
  if (max_m < 0) throw Error(ErrorCode::InvalidArgument, "--max-m must be non-negative");
  struct Row {
    int m;
    int n;
    bool stable;
    std::vector<std::uint64_t> betti;
  };
  std::vector<Row> rows;
  for (int m = 0; m <= max_m; ++m) {
    for (int n = 2; n < m + 2; ++n) rows.push_back({m, n, false, hochschild_betti(m, n).betti});
    if (!hochschild_stability_check(m)) {
      throw Error(ErrorCode::InvalidArgument, "stability fails at m = " + std::to_string(m));
    }
    rows.push_back({m, m + 2, true, hochschild_betti(m, m + 2).betti});
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"m", r.m}, {"n", r.n}, {"stable", r.stable}, {"betti", r.betti}});
    out << arr.dump(2) << '\n';
    return 0;
  }
  out << "m\tn\tbetti\n";
  for (const auto& r : rows) {
    out << r.m << '\t' << (r.stable ? ">=" : "") << r.n << '\t' << join(r.betti, " ") << '\n';
  }
  return 0;
}

int cmd_compare(const SourceOptions& s, const std::string& format, int threads, std::ostream& out) {
  set_thread_count(threads);
  const Source src = resolve(s);
  const MethodComparison c = compare_methods(src.building_set());
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : c.rows) {
      rows.push_back({{"subset", r.subset.labels()}, {"k", r.k}, {"alternating", r.alternating},
                      {"homology", r.homology}, {"off_degree", r.off_degree}, {"agree", r.agree()}});
    }
    out << json{{"source", src.name},
                {"chordal", c.chordal},
                {"alternating_totals", c.alternating_totals},
                {"homology_totals", c.homology_totals},
                {"all_agree", c.all_agree()},
                {"rows", rows}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "subset\tk\talternating\thomology\toff_degree\tstatus\n";
  for (const auto& r : c.rows) {
    out << r.subset.to_string() << '\t' << r.k << '\t' << r.alternating << '\t' << r.homology << '\t'
        << r.off_degree << '\t' << (r.agree() ? "agree" : "MISMATCH") << '\n';
  }
  out << "# chordal\t" << (c.chordal ? "yes" : "no") << '\n';
  out << "# totals alternating\t" << join(c.alternating_totals, " ") << '\n';
  out << "# totals homology\t" << join(c.homology_totals, " ") << '\n';
  return 0;
}

void error_record(std::ostream& err, std::string_view code, const std::string& message, int status) {
  err << json{{"error", code}, {"message", message}, {"exit", status}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers of real toric manifolds of nestohedra"};
  app.require_subcommand(1);

  BettiOptions betti;
  auto* betti_cmd = app.add_subcommand("betti", "rational Betti numbers of the real toric manifold");
  add_source_options(betti_cmd, betti.source);
  betti_cmd->add_option("--method", betti.method, "alt|homology|both|anumber")
      ->check(CLI::IsMember({"alt", "homology", "both", "anumber"}));
  betti_cmd->add_flag("--breakdown", betti.breakdown, "per-subset contributions");
  betti_cmd->add_option("--format", betti.format)->check(CLI::IsMember({"tsv", "json"}));
  betti_cmd->add_option("--threads", betti.threads, "worker threads (0 = default)");
  betti_cmd->add_flag("--unimodality", betti.unimodality, "report unimodality and log-concavity");

  SourceOptions complex_src;
  std::string complex_format = "tsv";
  auto* complex_cmd = app.add_subcommand("complex-betti", "even Betti numbers of the complex toric manifold");
  add_source_options(complex_cmd, complex_src);
  complex_cmd->add_option("--format", complex_format)->check(CLI::IsMember({"tsv", "json"}));

  SourceOptions el_src;
  int max_ground = kDefaultElGroundBound;
  std::string el_format = "tsv";
  auto* el_cmd = app.add_subcommand("verify-el", "check the EL labelling of the even-component poset");
  add_source_options(el_cmd, el_src);
  el_cmd->add_option("--max-ground", max_ground, "refuse larger ground sets");
  el_cmd->add_option("--format", el_format)->check(CLI::IsMember({"tsv", "json"}));

  SourceOptions a_src;
  auto* a_cmd = app.add_subcommand("anumber", "signed and unsigned a-number of a graph");
  add_source_options(a_cmd, a_src);

  int max_m = 6;
  std::string table_format = "tsv";
  auto* table_cmd = app.add_subcommand("hochschild-table", "Betti numbers of Hochschild building sets");
  table_cmd->add_option("--max-m", max_m, "largest m")->required();
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"tsv", "json"}));

  SourceOptions cmp_src;
  std::string cmp_format = "tsv";
  int cmp_threads = 0;
  auto* cmp_cmd = app.add_subcommand("compare", "per-subset alternating count against homology");
  add_source_options(cmp_cmd, cmp_src);
  cmp_cmd->add_option("--format", cmp_format)->check(CLI::IsMember({"tsv", "json"}));
  cmp_cmd->add_option("--threads", cmp_threads, "worker threads (0 = default)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    error_record(err, "UsageError", e.what(), 2);
    return 2;
  }

  try {
    if (betti_cmd->parsed()) return cmd_betti(betti, out);
    if (complex_cmd->parsed()) return cmd_complex_betti(complex_src, complex_format, out);
    if (el_cmd->parsed()) return cmd_verify_el(el_src, max_ground, el_format, out);
    if (a_cmd->parsed()) return cmd_anumber(a_src, out);
    if (table_cmd->parsed()) return cmd_hochschild_table(max_m, table_format, out);
    if (cmp_cmd->parsed()) return cmd_compare(cmp_src, cmp_format, cmp_threads, out);
  } catch (const Error& e) {
    const int status = exit_status(e.code());
    error_record(err, to_string(e.code()), e.what(), status);
    return status;
  } catch (const std::exception& e) {
    error_record(err, "InternalError", e.what(), 2);
    return 2;
  }
  return 2;
}

}  // namespace nestobetti::cli
