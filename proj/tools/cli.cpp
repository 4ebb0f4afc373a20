#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "blockset/io.hpp"

namespace blockset::cli {

namespace {

struct Common {
  std::string format = "json";
  std::string output;
  unsigned threads = 0;
};

unsigned resolve_threads(unsigned flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("BLOCKSET_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Writes to --output when set, otherwise to `out`.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::Parse, "cannot open " + c.output + " for writing");
  file << text;
  if (!file) throw Error(ErrorCode::Parse, "write to " + c.output + " failed");
}

std::string family_text(const FamilyDocument& doc) {
  std::ostringstream os;
  os << "# n=" << doc.family.n() << " d=" << doc.family.d() << " edges=" << doc.family.size() << '\n';
  for (std::size_t i = 0; i < doc.family.size(); ++i) {
    const auto& e = doc.family.edges()[i];
    for (std::size_t j = 0; j < e.size(); ++j) os << (j ? " " : "") << e[j];
    if (doc.colors) os << ' ' << to_string((*doc.colors)[i]);
    os << '\n';
  }
  return os.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << to_string(r.method) << ": " << (r.blocking ? "blocking" : "not blocking") << " (examined "
     << r.examined << ")\n";
  if (const auto* u = std::get_if<UnblockedPartition>(&r.witness)) {
    os << "  unblocked partition " << to_string(u->partition) << '\n';
  } else if (const auto* l = std::get_if<DisconnectedLink>(&r.witness)) {
    os << "  disconnected link for X = {";
    for (std::size_t i = 0; i < l->removed.size(); ++i) os << (i ? "," : "") << l->removed[i];
    os << "}\n";
  }
  return os.str();
}

std::string rows_text(const std::vector<BoundRow>& rows, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    os << kBoundCsvHeader << '\n';
    for (const auto& r : rows) os << to_csv_row(r) << '\n';
  } else if (format == "text") {
    for (const auto& r : rows) {
      os << "d=" << r.d << " n=" << r.n << "  lower_ceil=" << r.lower_ceil << "  dp_upper=" << r.dp_upper
         << "  trivial_upper=" << r.trivial_upper << "  gap=" << r.gap() << '\n';
    }
  } else {
    json a = json::array();
    for (const auto& r : rows) a.push_back(to_json(r));
    os << dump(a);
  }
  return os.str();
}

std::string read_all(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Parse, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

Family random_family(std::size_t n, std::size_t d, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::vector<EdgeTuple> edges;
  for (const auto& t : all_tuples(n, d)) {
    if (keep(rng)) edges.push_back(t);
  }
  return Family(n, d, std::move(edges));
}

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
  sub->add_option("--output", c.output, "Write output to PATH instead of stdout");
  sub->add_option("--threads", c.threads, "Worker cap (falls back to BLOCKSET_THREADS)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blocking sets of set partitions: construct, verify, bound and search"};
  app.require_subcommand(1);

  Common common;
  std::size_t n = 0, d = 0;

  auto* construct = app.add_subcommand("construct", "Build a d-blocking family");
  bool with_trace = false;
  double density = -1.0;
  std::uint64_t seed = 0;
  construct->add_option("--n", n, "Vertex count")->required();
  construct->add_option("--d", d, "Uniformity")->required()->check(CLI::PositiveNumber);
  construct->add_flag("--trace", with_trace, "Include the construction rule tree");
  construct->add_option("--random", density, "Emit a random family keeping each tuple with this probability")
      ->check(CLI::Range(0.0, 1.0));
  construct->add_option("--seed", seed, "Seed for --random");
  add_common(construct, common, {"json", "text"});

  auto* verify = app.add_subcommand("verify", "Decide whether a family document is blocking");
  std::string input;
  std::string method = "enum";
  std::size_t max_link_n = VerifyOptions{}.max_link_n;
  verify->add_option("input,--input", input, "Family document (default: stdin)");
  verify->add_option("--method", method, "Decision procedure")->check(CLI::IsMember({"link", "enum", "both"}));
  verify->add_option("--max-link-n", max_link_n, "Largest n accepted by the link method");
  add_common(verify, common, {"json", "text"});

  auto* bounds = app.add_subcommand("bounds", "Bounds for one (d, n)");
  bounds->add_option("--n", n, "Vertex count")->required();
  bounds->add_option("--d", d, "Uniformity (>= 3)")->required();
  add_common(bounds, common, {"json", "text", "csv"});

  auto* table = app.add_subcommand("table", "Bound table for 3 <= d' <= d, d' <= n' <= n");
  bool gamma_rows = false;
  table->add_option("--n", n, "Largest vertex count");
  table->add_option("--d", d, "Largest uniformity")->required();
  table->add_flag("--gamma", gamma_rows, "Print the leading-coefficient table instead");
  add_common(table, common, {"csv", "json", "text"});

  auto* search = app.add_subcommand("search", "Exact minimum by branch and bound");
  std::uint64_t max_nodes = 0;
  search->add_option("--n", n, "Vertex count")->required();
  search->add_option("--d", d, "Uniformity")->required()->check(CLI::PositiveNumber);
  search->add_option("--max-nodes", max_nodes, "Node budget (0 = unlimited)");
  add_common(search, common, {"json", "text"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  // Table defaults to csv when the user did not pick a format.
  if (table->parsed() && table->count("--format") == 0) common.format = "csv";

  try {
    if (construct->parsed()) {
      FamilyDocument doc;
      if (density >= 0.0) {
        doc.family = random_family(n, d, density, seed);
      } else if (d == 3 && n >= 3) {
        auto c3 = construct3(n);
        doc.family = std::move(c3.family);
        doc.colors = std::move(c3.colors);
        if (with_trace) doc.trace = construct_d(3, n).trace;
      } else {
        auto built = construct_d(d, n);
        doc.family = std::move(built.family);
        if (with_trace) doc.trace = std::move(built.trace);
      }
      emit(common, out, common.format == "text" ? family_text(doc) : dump(to_json(doc)));
      return kSuccess;
    }

    if (verify->parsed()) {
      const auto doc = parse_family_document(read_all(input, in));
      VerifyOptions opts;
      opts.max_link_n = max_link_n;
      opts.threads = resolve_threads(common.threads);
      std::vector<VerificationReport> reports;
      if (method == "link" || method == "both") reports.push_back(verify_link(doc.family, opts));
      if (method == "enum" || method == "both") reports.push_back(verify_enumerate(doc.family));
      const bool blocking = reports.front().blocking;
      const bool agree = std::all_of(reports.begin(), reports.end(),
                                     [&](const VerificationReport& r) { return r.blocking == blocking; });
      std::string text;
      if (common.format == "text") {
        for (const auto& r : reports) text += report_text(r);
      } else if (reports.size() == 1) {
        text = dump(to_json(reports.front()));
      } else {
        json j;
        j["blocking"] = blocking;
        j["method"] = "both";
        j["agree"] = agree;
        json list = json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        j["reports"] = std::move(list);
        text = dump(j);
      }
      emit(common, out, text);
      if (!agree) {
        err << "error: link and enumeration methods disagree\n";
        return kUsageError;
      }
      return blocking ? kSuccess : kNotBlocking;
    }

    if (bounds->parsed()) {
      const auto row = bound_row(d, n);
      if (common.format == "json") {
        json j = to_json(row);
        j["lower_bound"] = lower_bound(d, n).str();
        j["gamma"] = gamma(d).str();
        emit(common, out, dump(j));
      } else {
        emit(common, out, rows_text({row}, common.format));
      }
      return kSuccess;
    }

    if (table->parsed()) {
      if (gamma_rows) {
        const auto rows = check_gamma_bounds(d);
        std::ostringstream os;
        if (common.format == "csv") {
          os << "d,gamma,threshold,star_coefficient,below_threshold,at_most_star\n";
          for (const auto& r : rows) {
            os << r.d << ',' << r.gamma.str() << ',' << r.threshold.str() << ',' << r.star_coefficient.str()
               << ',' << (r.below_threshold ? "true" : "false") << ',' << (r.at_most_star ? "true" : "false")
               << '\n';
          }
        } else if (common.format == "text") {
          for (const auto& r : rows) {
            os << "d=" << r.d << "  gamma=" << r.gamma.str() << " (~" << r.gamma.to_double() << ")  "
               << (r.below_threshold ? "below" : "NOT below") << " 0.86/(d-1)!\n";
          }
        } else {
          json a = json::array();
          for (const auto& r : rows) a.push_back(to_json(r));
          os << dump(a);
        }
        emit(common, out, os.str());
        return kSuccess;
      }
      if (n == 0) n = 40;
      emit(common, out, rows_text(bound_table(d, n), common.format));
      return kSuccess;
    }

    if (search->parsed()) {
      SearchOptions opts;
      if (max_nodes > 0) opts.max_nodes = max_nodes;
      const auto result = min_blocking(n, d, opts);
      if (common.format == "text") {
        std::ostringstream os;
        os << "phi_" << d << "(" << n << ") " << (result.proved_optimal ? "= " : "<= ") << result.optimum
           << "  (nodes " << result.nodes_expanded << ")\n";
        os << family_text(FamilyDocument{result.witness_family, std::nullopt, std::nullopt});
        emit(common, out, os.str());
      } else {
        emit(common, out, dump(to_json(result)));
      }
      return result.budget_exceeded ? kBudgetExceeded : kSuccess;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace blockset::cli
