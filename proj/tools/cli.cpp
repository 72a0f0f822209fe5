#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "faithful/construct.hpp"
#include "faithful/error.hpp"
#include "faithful/json_io.hpp"
#include "faithful/partition.hpp"
#include "faithful/search.hpp"
#include "faithful/verifier.hpp"

namespace faithful::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

std::vector<Integer> integer_list(const std::string& text) {
  std::vector<Integer> out;
  if (text.empty()) return out;
  for (const std::string& s : split(text, ',')) out.push_back(parse_integer(s));
  return out;
}

// "a..b" or "a"
std::pair<Integer, Integer> integer_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Integer v = parse_integer(text);
    return {v, v};
  }
  return {parse_integer(text.substr(0, dots)), parse_integer(text.substr(dots + 2))};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct Settings {
  std::string m, n;
  std::string file;
  std::string strategy;
  std::string omega;
  std::string parts;
  std::string format = "csv";
  std::string kind;
  std::string method = "auto";
  std::string m_range = "3..5";
  std::string shape = "prop7";
  std::uint64_t cap = 10'000'000;
  std::uint64_t seed = 0;
  std::uint64_t max_length = 1;
  std::uint64_t max_den = 1;
  std::uint64_t y_max = 20;
  std::optional<std::string> n_min, n_max;
  bool trace = false;
};

VerifyOptions verify_options(const Settings& s) {
  VerifyOptions v;
  v.cap = s.cap;
  return v;
}

int cmd_verify(const Settings& s, std::istream& in, std::ostream& out) {
  Json input;
  try {
    if (s.file.empty() || s.file == "-") {
      input = Json::parse(in);
    } else {
      std::ifstream f(s.file);
      if (!f) throw PreconditionError("verify: cannot open " + s.file);
      input = Json::parse(f);
    }
  } catch (const Json::parse_error& e) {
    throw PreconditionError(std::string("verify: malformed JSON: ") + e.what());
  }
  // Output of `decompose` carries the decomposition under its own key.
  const Json& body = input.is_object() && input.contains("decomposition") ? input.at("decomposition") : input;
  const Decomposition d = decomposition_from_json(body);
  require_valid(d, "verify");

  FaithfulnessReport report;
  if (s.method == "naive") {
    report = verify_naive(d, verify_options(s));
  } else {
    VerifyOptions v = verify_options(s);
    if (s.method == "congruence") v.method = VerifyMethod::congruence;
    else if (s.method == "mitm") v.method = VerifyMethod::meet_in_middle;
    else if (s.method != "auto") throw PreconditionError("verify: unknown --method " + s.method);
    report = verify(d, v);
  }
  emit(out, to_json(report));
  return report.faithful ? ok : unfaithful;
}

OmegaSet omega_of(const Settings& s) {
  OmegaSet omega;
  for (const Integer& w : integer_list(s.omega)) {
    if (w < 1) throw PreconditionError("decompose: --omega entries must be positive");
    omega.insert(w);
  }
  return omega;
}

PartitionSpec partition_of(const Integer& m, const std::string& parts) {
  if (parts.empty()) throw PreconditionError("--parts is required");
  PartitionSpec spec{m, integer_list(parts)};
  std::sort(spec.parts.begin(), spec.parts.end());
  require_valid(spec);
  return spec;
}

int cmd_decompose(const Settings& s, std::ostream& out) {
  const Integer m = parse_integer(s.m);
  const Integer n = parse_integer(s.n);
  const VerifyOptions vopts = verify_options(s);
  Json result;
  result["strategy"] = s.strategy;

  Decomposition d;
  std::optional<ConstructionTrace> trace;
  // With more than one part the combined sum is not faithful by design; the
  // verdict that matters is S = T.
  std::optional<bool> partition_equal;
  if (s.strategy == "two-term") {
    d = two_term(m, n);
  } else if (s.strategy == "theorem1") {
    Constructed c = theorem1(m, n);
    d = std::move(c.decomposition);
    trace = std::move(c.trace);
  } else if (s.strategy == "theorem2") {
    CoprimeOptions copts;
    copts.seed = s.seed;
    Constructed c = all_units_but_one(m, n, omega_of(s), copts);
    d = std::move(c.decomposition);
    trace = std::move(c.trace);
  } else if (s.strategy == "prop7") {
    Prop7Result p = prop7(m, n);
    d = std::move(p.decomposition);
    trace = std::move(p.trace);
    result["predicted_faithful"] = p.predicted_faithful;
  } else if (s.strategy == "theorem4") {
    if (m != 4) throw PreconditionError("theorem4: numerator must be 4");
    Constructed c = theorem4(n);
    d = std::move(c.decomposition);
    trace = std::move(c.trace);
  } else if (s.strategy == "partition") {
    PartitionOptions popts;
    popts.coprime.seed = s.seed;
    PartitionCheck check = check_partition_theorem(partition_of(m, s.parts), n, popts, vopts);
    d = check.blocks.combined;
    partition_equal = check.equal;
    Json blocks = Json::array();
    for (const Decomposition& b : check.blocks.blocks) blocks.push_back(to_json(b));
    result["blocks"] = std::move(blocks);
    Json pc = to_json(check);
    result["partition_check"] = {{"s", pc["s"]}, {"t", pc["t"]}, {"s_contains_t", check.s_contains_t},
                                 {"equal", check.equal}};
    if (s.trace) {
      Json traces = Json::array();
      for (const ConstructionTrace& t : check.blocks.traces) traces.push_back(to_json(t));
      result["block_traces"] = std::move(traces);
    }
  } else {
    throw PreconditionError("decompose: unknown --strategy '" + s.strategy + "'");
  }

  const FaithfulnessReport report = verify(d, vopts);
  result["decomposition"] = to_json(d);
  result["certificate"] = to_json(report);
  if (s.trace && trace) result["trace"] = to_json(*trace);
  emit(out, result);
  if (partition_equal) return *partition_equal ? ok : unfaithful;
  return report.faithful ? ok : unfaithful;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void print_table(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  } else if (format == "json") {
    Json arr = Json::array();
    for (const auto& row : t.rows) {
      Json obj;
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    emit(out, arr);
  } else {
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << (i ? "  " : "") << cells[i];
        if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
      }
      out << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) line(row);
  }
}

std::string flag(bool b) { return b ? "true" : "false"; }

Table four_over_n_table(const Integer& lo, const Integer& hi, const VerifyOptions& vopts) {
  Table t{{"n", "x", "y", "z", "r", "case", "verified"}, {}};
  for (Integer n = std::max(lo, Integer(5)); n <= hi; ++n) {
    if (n % 2 == 0) continue;
    const Constructed c = theorem4(n);
    const auto& terms = c.decomposition.terms;
    std::string tag = c.trace.special_case ? *c.trace.special_case
                      : c.trace.branch     ? to_string(*c.trace.branch)
                                           : "";
    t.rows.push_back({n.get_str(), terms[0].den.get_str(), terms[1].den.get_str(), terms[2].den.get_str(),
                      terms[2].num.get_str(), tag, flag(verify(c.decomposition, vopts).faithful)});
  }
  return t;
}

Table prop7_table(const Integer& m, const Integer& lo, const Integer& hi, const VerifyOptions& vopts) {
  Table t{{"m", "n", "y2", "y", "x", "r", "case", "predicted", "verified"}, {}};
  for (Integer n = std::max(lo, Integer(m + 1)); n <= hi; ++n) {
    if (gcd(m, n) != 1) continue;
    const Prop7Result p = prop7(m, n);
    t.rows.push_back({m.get_str(), n.get_str(), p.y2.get_str(), p.y.get_str(), p.x.get_str(), p.trace.r->get_str(),
                      to_string(*p.trace.branch), flag(p.predicted_faithful),
                      flag(verify(p.decomposition, vopts).faithful)});
  }
  return t;
}

int cmd_table(const Settings& s, std::ostream& out) {
  if (s.format != "csv" && s.format != "json" && s.format != "text") {
    throw PreconditionError("table: --format must be csv, json or text");
  }
  const VerifyOptions vopts = verify_options(s);
  Table t;
  if (s.kind == "four-over-n") {
    const Integer lo = s.n_min ? parse_integer(*s.n_min) : Integer(5);
    const Integer hi = s.n_max ? parse_integer(*s.n_max) : Integer(99);
    t = four_over_n_table(lo, hi, vopts);
  } else if (s.kind == "prop7") {
    const Integer m = s.m.empty() ? Integer(3) : parse_integer(s.m);
    if (m < 3) throw PreconditionError("table prop7: needs m >= 3");
    const Integer lo = s.n_min ? parse_integer(*s.n_min) : Integer(m + 1);
    const Integer hi = s.n_max ? parse_integer(*s.n_max) : Integer(50);
    t = prop7_table(m, lo, hi, vopts);
  } else {
    throw PreconditionError("table: unknown kind '" + s.kind + "' (four-over-n or prop7)");
  }
  print_table(t, s.format, out);
  return ok;
}

int cmd_partition_check(const Settings& s, std::ostream& out) {
  const Integer m = parse_integer(s.m);
  const Integer n = parse_integer(s.n);
  PartitionOptions popts;
  popts.coprime.seed = s.seed;
  const PartitionCheck check = check_partition_theorem(partition_of(m, s.parts), n, popts, verify_options(s));
  emit(out, to_json(check));
  return check.equal ? ok : unfaithful;
}

int cmd_search(const Settings& s, std::ostream& out) {
  SearchBudget budget;
  budget.max_length = s.max_length;
  budget.max_denominator = s.max_den;
  budget.combo_cap = s.cap;
  const SearchResult r = min_length_search(parse_integer(s.m), parse_integer(s.n), budget);
  emit(out, to_json(r));
  return r.all_exhausted() ? ok : budget_exhausted;
}

int cmd_hunt(const Settings& s, std::ostream& out) {
  Prop6ScanConfig config;
  std::tie(config.m_min, config.m_max) = integer_range(s.m_range);
  config.n_min = s.n_min ? parse_integer(*s.n_min) : Integer(1);
  config.n_max = s.n_max ? parse_integer(*s.n_max) : Integer(500);
  config.y_max = Integer(static_cast<unsigned long>(s.y_max));
  if (s.shape == "prop7") config.filter = ShapeFilter::prop7_outputs;
  else if (s.shape == "general") config.filter = ShapeFilter::general;
  else throw PreconditionError("hunt: --shape must be prop7 or general");
  emit(out, to_json(prop6_discrepancy_scan(config, verify_options(s))));
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faithful fraction decompositions: construct, verify, tabulate, search"};
  app.require_subcommand(1);
  Settings s;

  auto* verify_cmd = app.add_subcommand("verify", "Check a decomposition (JSON on stdin or FILE)");
  verify_cmd->add_option("file", s.file, "Input file, '-' for stdin");
  verify_cmd->add_option("--cap", s.cap, "Enumeration cap");
  verify_cmd->add_option("--method", s.method, "auto, naive, congruence or mitm");

  auto* decompose_cmd = app.add_subcommand("decompose", "Construct a decomposition of M/N");
  decompose_cmd->add_option("m", s.m)->required();
  decompose_cmd->add_option("n", s.n)->required();
  decompose_cmd->add_option("--strategy", s.strategy, "two-term, theorem1, theorem2, prop7, theorem4, partition")
      ->required();
  decompose_cmd->add_option("--omega", s.omega, "Comma-separated values denominators must be coprime to");
  decompose_cmd->add_option("--parts", s.parts, "Comma-separated partition of M");
  decompose_cmd->add_option("--seed", s.seed, "Offset giving a different decomposition");
  decompose_cmd->add_option("--cap", s.cap, "Verifier enumeration cap");
  decompose_cmd->add_flag("--trace", s.trace, "Include the construction trace");

  auto* table_cmd = app.add_subcommand("table", "Tabulate four-over-n or prop7 decompositions");
  table_cmd->add_option("kind", s.kind, "four-over-n or prop7")->required();
  table_cmd->add_option("--m", s.m, "Numerator for prop7 (default 3)");
  table_cmd->add_option("--n-min", s.n_min);
  table_cmd->add_option("--n-max", s.n_max);
  table_cmd->add_option("--format", s.format, "csv, json or text");
  table_cmd->add_option("--cap", s.cap, "Verifier enumeration cap");

  auto* partition_cmd = app.add_subcommand("partition-check", "Compare S and T for a partition of M");
  partition_cmd->add_option("m", s.m)->required();
  partition_cmd->add_option("n", s.n)->required();
  partition_cmd->add_option("--parts", s.parts)->required();
  partition_cmd->add_option("--seed", s.seed);
  partition_cmd->add_option("--cap", s.cap, "Verifier enumeration cap");

  auto* search_cmd = app.add_subcommand("search", "Bounded search for short faithful decompositions");
  search_cmd->add_option("m", s.m)->required();
  search_cmd->add_option("n", s.n)->required();
  search_cmd->add_option("--max-length", s.max_length)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-den", s.max_den)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--cap", s.cap, "Search nodes per length")->check(CLI::PositiveNumber);

  auto* hunt_cmd = app.add_subcommand("hunt", "Compare the three-term faithfulness condition with the verifier");
  hunt_cmd->add_option("--m", s.m_range, "Numerator range a..b");
  hunt_cmd->add_option("--n-min", s.n_min);
  hunt_cmd->add_option("--n-max", s.n_max);
  hunt_cmd->add_option("--shape", s.shape, "prop7 or general");
  hunt_cmd->add_option("--y-max", s.y_max, "Bound on y2 and y for the general shape");
  hunt_cmd->add_option("--cap", s.cap, "Verifier enumeration cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*verify_cmd) return cmd_verify(s, in, out);
    if (*decompose_cmd) return cmd_decompose(s, out);
    if (*table_cmd) return cmd_table(s, out);
    if (*partition_cmd) return cmd_partition_check(s, out);
    if (*search_cmd) return cmd_search(s, out);
    if (*hunt_cmd) return cmd_hunt(s, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return *verify_cmd ? usage_error : budget_exhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace faithful::cli
