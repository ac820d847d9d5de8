// Command-line front end. Exit codes: 0 success, 1 usage or input error,
// 2 verification failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symbranch/json_io.hpp"

namespace sb = symbranch;
using sb::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

/// Single writer for JSON lines or CSV rows.
class Emitter {
 public:
  Emitter(std::ostream& out, sb::Format format) : out_(out), format_(format) {}

  sb::Format format() const { return format_; }

  void record(const json& j) { out_ << j.dump() << '\n'; }

  void header(const std::vector<std::string>& columns) {
    if (header_written_) return;
    row(columns);
    header_written_ = true;
  }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) out_ << (k ? "," : "") << csv_field(fields[k]);
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  sb::Format format_;
  bool header_written_ = false;
};

std::string join_ints(const std::vector<int>& v, const std::string& sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

std::string partition_text(const sb::Partition& p) { return join_ints(p.parts(), ","); }

sb::StandardTableau parse_standard_tableau(const std::string& text) {
  // Rows separated by '/', entries by ','.
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t next = text.find('/', pos);
    if (next == std::string::npos) next = text.size();
    rows.push_back(sb::parse_int_list(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return sb::StandardTableau(std::move(rows));
}

struct Options {
  std::string format = "json";
  unsigned jobs = 0;
  std::string output;

  int n = 1;
  std::string lambda;
  std::optional<std::string> mu;
  std::string method = "all";
  std::string kind = "domres";
  bool points = false;
  bool printed = false;
  bool bundles = false;
  int max_size = 8;
  std::vector<int> n_values{2, 3};
  std::string filter = "all";
  bool inject_fault = false;
  std::string top, bottom, even;
};

int cmd_domres(const Options& o, Emitter& out) {
  const sb::Partition lambda = sb::parse_partition(o.lambda);
  std::optional<sb::Partition> mu;
  if (o.mu) mu = sb::parse_partition(*o.mu);
  const auto tableaux = sb::enumerate_domres(lambda, o.n, mu);
  if (out.format() == sb::Format::csv) out.header({"index", "tableau", "word", "endpoint"});
  for (std::size_t k = 0; k < tableaux.size(); ++k) {
    const auto& t = tableaux[k];
    const sb::Word w = sb::column_word(t);
    const auto path = sb::path_of(w, o.n);
    if (out.format() == sb::Format::json) {
      out.record({{"index", k},
                  {"tableau", sb::to_json(t)},
                  {"word", sb::to_json(w)},
                  {"endpoint", path.endpoint()},
                  {"path", sb::to_json(path)}});
    } else {
      out.row({std::to_string(k), sb::tableau_to_string(t), sb::word_to_string(w), join_ints(path.endpoint(), ",")});
    }
  }
  return 0;
}

int cmd_branch(const Options& o, Emitter& out) {
  const sb::Partition lambda = sb::parse_partition(o.lambda);
  std::vector<sb::Method> methods;
  if (o.method == "all") methods = {sb::Method::paths, sb::Method::sundaram, sb::Method::character};
  else if (o.method == "paths") methods = {sb::Method::paths};
  else if (o.method == "sundaram") methods = {sb::Method::sundaram};
  else if (o.method == "character") methods = {sb::Method::character};
  else throw sb::InvalidArgument("unknown method '" + o.method + "'");

  std::vector<sb::BranchingTable> tables;
  for (auto m : methods) tables.push_back(sb::branch(lambda, o.n, m));
  if (out.format() == sb::Format::csv) out.header({"lambda", "n", "method", "mu", "multiplicity"});
  for (const auto& t : tables) {
    if (out.format() == sb::Format::json) {
      json j = sb::to_json(t);
      j["lambda"] = sb::to_json(lambda);
      j["n"] = o.n;
      out.record(j);
    } else {
      for (const auto& [mu, m] : t.multiplicities)
        out.row({partition_text(lambda), std::to_string(o.n), sb::to_string(t.method), partition_text(mu), std::to_string(m)});
    }
  }
  if (tables.size() < 2) return 0;

  // The smallest μ where the methods disagree, if any.
  std::set<sb::Partition> support;
  for (const auto& t : tables)
    for (const auto& [mu, m] : t.multiplicities) support.insert(mu);
  for (const auto& mu : support) {
    bool same = true;
    for (const auto& t : tables) same = same && t.at(mu) == tables.front().at(mu);
    if (same) continue;
    json dump = {{"disagreement", true}, {"lambda", sb::to_json(lambda)}, {"n", o.n}, {"mu", sb::to_json(mu)}};
    for (const auto& t : tables) dump[sb::to_string(t.method)] = t.at(mu);
    std::cerr << dump.dump() << '\n';
    return kExitVerification;
  }
  if (out.format() == sb::Format::json) out.record({{"lambda", sb::to_json(lambda)}, {"n", o.n}, {"agree", true}});
  return 0;
}

int cmd_verify_bijection(const Options& o, Emitter& out) {
  const sb::Partition lambda = sb::parse_partition(o.lambda);
  std::vector<sb::Partition> mus;
  if (o.mu) mus = {sb::parse_partition(*o.mu)};
  else mus = sb::detail::candidate_endpoints(lambda, o.n);
  bool ok = true;
  if (out.format() == sb::Format::csv)
    out.header({"lambda", "mu", "n", "domres_count", "lrs_count", "injective", "image_equals_lrs", "roundtrips", "ok"});
  for (const auto& mu : mus) {
    const auto cert = sb::bijection_certificate(lambda, mu, o.n);
    ok = ok && cert.ok();
    if (out.format() == sb::Format::json) {
      out.record(sb::to_json(cert));
      if (o.bundles)
        for (const auto& t : sb::enumerate_domres(lambda, o.n, mu)) {
          const auto b = sb::q_symbols(t, o.n);
          json j = sb::to_json(b, sb::phi_from_bundle(b, lambda));
          j["tableau"] = sb::to_json(t);
          out.record(j);
        }
    } else {
      auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
      out.row({partition_text(lambda), partition_text(mu), std::to_string(o.n), std::to_string(cert.domres_count),
               std::to_string(cert.lrs_count), flag(cert.injective), flag(cert.image_equals_lrs),
               flag(cert.left_roundtrip && cert.right_roundtrip), flag(cert.ok())});
    }
  }
  return ok ? 0 : kExitVerification;
}

int cmd_verify_characters(const Options& o, Emitter& out) {
  if (o.max_size < 0) throw sb::InvalidArgument("maximum size must be nonnegative");
  std::vector<sb::Partition> shapes = sb::partitions_up_to(o.max_size, 2 * o.n - 1);
  std::vector<sb::BranchingComparison> results(shapes.size());
  sb::parallel_for(shapes.size(), o.jobs, [&](std::size_t k) { results[k] = sb::compare_branching(shapes[k], o.n); });
  bool ok = true;
  if (out.format() == sb::Format::csv) out.header({"lambda", "n", "dim", "tables_agree", "dimension_matches"});
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    const auto& c = results[k];
    ok = ok && c.agrees();
    if (out.format() == sb::Format::json) {
      out.record({{"lambda", sb::to_json(shapes[k])},
                  {"n", o.n},
                  {"paths", sb::to_json(c.paths)["table"]},
                  {"sundaram", sb::to_json(c.sundaram)["table"]},
                  {"character", sb::to_json(c.character)["table"]},
                  {"dim_sl", c.dim_sl},
                  {"dim_sum", c.dim_sum},
                  {"agree", c.agrees()}});
    } else {
      out.row({partition_text(shapes[k]), std::to_string(o.n), std::to_string(c.dim_sl), c.tables_agree() ? "true" : "false",
               c.dimension_matches() ? "true" : "false"});
    }
  }
  return ok ? 0 : kExitVerification;
}

int cmd_polytope(const Options& o, Emitter& out) {
  const sb::Partition lambda = sb::parse_partition(o.lambda);
  const sb::Partition mu = sb::parse_partition(o.mu.value_or(""));
  sb::HRepresentation h;
  if (o.kind == "domres") h = sb::domres_h_rep(lambda, mu, o.n);
  else if (o.kind == "lr") h = sb::lr_h_rep(lambda, mu, o.n, o.printed ? sb::LRForm::printed : sb::LRForm::reconstructed);
  else throw sb::InvalidArgument("unknown polytope kind '" + o.kind + "'");

  if (out.format() == sb::Format::json) {
    json j = sb::to_json(h);
    j["kind"] = o.kind;
    j["lambda"] = sb::to_json(lambda);
    j["mu"] = sb::to_json(mu);
    j["n"] = o.n;
    if (o.points) j["lattice_points"] = sb::lattice_points(h);
    out.record(j);
    return 0;
  }
  std::vector<std::string> columns{"label"};
  columns.insert(columns.end(), h.variable_names.begin(), h.variable_names.end());
  columns.push_back("rel");
  columns.push_back("rhs");
  out.header(columns);
  for (const auto& q : h.ineqs) {
    std::vector<std::string> fields{q.label};
    for (long long c : q.coeffs) fields.push_back(std::to_string(c));
    fields.push_back(sb::to_string(q.rel));
    fields.push_back(std::to_string(q.rhs));
    out.row(fields);
  }
  if (o.points) {
    out.row({"lattice points"});
    for (const auto& v : sb::lattice_points(h)) out.row({join_ints(v, ",")});
  }
  return 0;
}

int cmd_burge(const Options& o, Emitter& out) {
  sb::SpecialTwoLineArray array;
  sb::StandardTableau even;
  if (!o.even.empty()) {
    even = parse_standard_tableau(o.even);
    array = sb::even_tableau_to_array(even);
  } else {
    array = sb::SpecialTwoLineArray(sb::parse_int_list(o.top), sb::parse_int_list(o.bottom));
    even = sb::array_to_even_tableau(array);
  }
  if (out.format() == sb::Format::json) {
    out.record({{"array", sb::to_json(array)}, {"even", sb::to_json(even)}});
  } else {
    out.header({"top", "bottom", "even"});
    out.row({join_ints(array.top(), ","), join_ints(array.bottom(), ","), sb::tableau_to_string(even)});
  }
  return 0;
}

int cmd_verify(const Options& o, Emitter& out) {
  sb::SweepConfig config;
  config.n_values = o.n_values;
  config.max_lambda_size = o.max_size;
  if (o.filter == "stable") config.lambda_filter = sb::LambdaFilter::stable;
  else if (o.filter != "all") throw sb::InvalidArgument("unknown filter '" + o.filter + "'");
  config.format = out.format();
  config.jobs = o.jobs;
  config.inject_fault = o.inject_fault;
  config.output = o.output;

  const auto results = sb::run_sweep(config);
  long long failed = 0;
  if (out.format() == sb::Format::csv) out.header({"check", "cases", "failures", "passed"});
  for (const auto& r : results) {
    if (!r.passed()) ++failed;
    if (out.format() == sb::Format::json) out.record(sb::to_json(r));
    else out.row({r.name, std::to_string(r.cases), std::to_string(r.failures), r.passed() ? "true" : "false"});
  }
  const auto passed = static_cast<long long>(results.size()) - failed;
  if (out.format() == sb::Format::json)
    out.record({{"summary", {{"checks", results.size()}, {"passed", passed}, {"failed", failed}}}});
  else
    out.row({"summary", std::to_string(results.size()), std::to_string(failed), failed ? "false" : "true"});
  return failed ? kExitVerification : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branching from sl(2n) to sp(2n): enumeration and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.jobs = sb::default_jobs();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", o.jobs, "Worker threads (default: SYMBRANCH_JOBS or all cores)")->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "Write records to this file instead of stdout");

  auto add_shape = [&](CLI::App* sub, bool need_mu) {
    sub->add_option("--n", o.n, "Rank n of sp(2n)")->required()->check(CLI::PositiveNumber);
    sub->add_option("--lambda", o.lambda, "Partition, comma separated")->required();
    auto* mu = sub->add_option_function<std::string>("--mu", [&](const std::string& s) { o.mu = s; }, "Endpoint partition");
    if (need_mu) mu->required();
  };

  auto* domres = app.add_subcommand("domres", "List domres(λ) or domres(λ, μ)");
  add_shape(domres, false);

  auto* branch = app.add_subcommand("branch", "Branching multiplicities");
  add_shape(branch, false);
  branch->add_option("--method", o.method, "paths, sundaram, character or all")
      ->check(CLI::IsMember({"paths", "sundaram", "character", "all"}));

  auto* bijection = app.add_subcommand("verify-bijection", "Certificates for φ per (λ, μ)");
  add_shape(bijection, false);
  bijection->add_flag("--bundles", o.bundles, "Also emit the Q-symbol bundle of every element");

  auto* characters = app.add_subcommand("verify-characters", "Compare the three branching methods for every λ");
  characters->add_option("--n", o.n, "Rank n of sp(2n)")->required()->check(CLI::PositiveNumber);
  characters->add_option("--max-size", o.max_size, "Largest |λ|")->required()->check(CLI::NonNegativeNumber);

  auto* polytope = app.add_subcommand("polytope", "H-representation of the domres or LR polytope");
  add_shape(polytope, true);
  polytope->add_option("--kind", o.kind, "domres or lr")->check(CLI::IsMember({"domres", "lr"}));
  polytope->add_flag("--points", o.points, "Also enumerate lattice points");
  polytope->add_flag("--printed", o.printed, "LR system with the (DOM) and (F) rows in their printed form");

  auto* burge = app.add_subcommand("burge", "Burge correspondence in either direction");
  burge->add_option("--top", o.top, "Top row j_1 < ... < j_r");
  burge->add_option("--bottom", o.bottom, "Bottom row i_1, ..., i_r");
  burge->add_option("--even", o.even, "Even-shape standard tableau, rows separated by '/'");

  auto* verify = app.add_subcommand("verify", "Run every acceptance check over a sweep");
  verify->add_option("--n-values", o.n_values, "Ranks to sweep")->delimiter(',')->check(CLI::PositiveNumber);
  verify->add_option("--max-size", o.max_size, "Largest |λ|")->check(CLI::NonNegativeNumber);
  verify->add_option("--filter", o.filter, "stable or all")->check(CLI::IsMember({"stable", "all"}));
  verify->add_flag("--inject-fault", o.inject_fault, "Corrupt one multiplicity to test the harness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      std::cerr << "error: cannot open '" << o.output << "' for writing\n";
      return kExitUsage;
    }
  }
  Emitter out(o.output.empty() ? std::cout : file, o.format == "csv" ? sb::Format::csv : sb::Format::json);

  try {
    if (*domres) return cmd_domres(o, out);
    if (*branch) return cmd_branch(o, out);
    if (*bijection) return cmd_verify_bijection(o, out);
    if (*characters) return cmd_verify_characters(o, out);
    if (*polytope) return cmd_polytope(o, out);
    if (*burge) {
      if (o.even.empty() && o.top.empty() != o.bottom.empty())
        throw sb::InvalidArgument("give --top and --bottom together, or --even");
      return cmd_burge(o, out);
    }
    if (*verify) return cmd_verify(o, out);
  } catch (const sb::InternalInconsistency& e) {
    std::cerr << "verification error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
