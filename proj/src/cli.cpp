#include "gencomp/cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencomp/counting.hpp"
#include "gencomp/enumerate.hpp"
#include "gencomp/polyco.hpp"

namespace gencomp::cli {
namespace {

// JSON strings go through nlohmann for escaping; Counts are written as bare
// decimal literals because they routinely exceed 64 bits.
std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

WeightVector weights_from(const std::string& text) {
  try {
    return make_weight_vector(parse_weight_list(text));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--weights: ") + e.what());
  }
}

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed)
    if (format == a) return;
  throw UsageError("unknown format '" + format + "'");
}

void print_table(const WeightVector& b, std::size_t n_max, const std::string& format, std::ostream& out) {
  const auto table = CountTable::build(b, n_max);
  const auto totals = count_all_prefix(b, n_max);
  const bool csv = format == "csv";
  if (csv) out << "k,n,count\n";
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Count& c = table.at(k, n);
      if (c == 0) continue;
      if (csv)
        out << k << ',' << n << ',' << to_decimal(c) << '\n';
      else
        out << "{\"k\":" << k << ",\"n\":" << n << ",\"count\":" << to_decimal(c) << "}\n";
    }
    if (csv)
      out << "total," << n << ',' << to_decimal(totals[n]) << '\n';
    else
      out << "{\"n\":" << n << ",\"total\":" << to_decimal(totals[n]) << "}\n";
  }
}

void print_enumeration(const WeightVector& b, std::size_t total, std::optional<std::size_t> parts,
                       std::optional<std::size_t> limit, const std::string& format, std::ostream& out) {
  auto cursor = enumerate_compositions(b, total, parts);
  std::size_t index = 0;
  while (!limit || index < *limit) {
    auto c = cursor.next();
    if (!c) break;
    ++index;
    if (format == "text") {
      out << c->to_string() << '\n';
      continue;
    }
    out << "{\"index\":" << index << ",\"parts\":[";
    for (std::size_t i = 0; i < c->size(); ++i) {
      const auto& p = c->parts()[i];
      out << (i ? "," : "") << "{\"value\":" << p.value << ",\"type\":" << p.type_index << '}';
    }
    out << "]}\n";
  }
}

std::string params_json(const std::map<std::string, std::size_t>& params) {
  std::string s = "{";
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) s += ',';
    first = false;
    s += json_string(key) + ':' + std::to_string(value);
  }
  return s + '}';
}

std::string params_text(const std::map<std::string, std::size_t>& params) {
  std::string s;
  for (const auto& [key, value] : params) {
    if (!s.empty()) s += ' ';
    s += key + '=' + std::to_string(value);
  }
  return s;
}

}  // namespace

std::vector<std::int64_t> parse_weight_list(std::string_view text) {
  if (text.empty()) throw UsageError("--weights: empty weight list");
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
      throw UsageError("--weights: '" + std::string(token) + "' is not an integer");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int print_verify(std::span<const IdentityReport> reports, std::string_view format, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.passed()) ++failed;
    if (format == "jsonl") {
      out << "{\"identity\":" << json_string(r.identity) << ",\"grid\":" << json_string(r.grid)
          << ",\"checked\":" << r.checked << ",\"failures\":[";
      for (std::size_t i = 0; i < r.failures.size(); ++i) {
        const auto& f = r.failures[i];
        out << (i ? "," : "") << "{\"params\":" << params_json(f.parameters)
            << ",\"left\":" << to_decimal(f.left) << ",\"right\":" << to_decimal(f.right) << '}';
      }
      out << "]}\n";
      continue;
    }
    out << (r.passed() ? "ok   " : "FAIL ") << r.identity << "  " << r.grid << "  checked "
        << r.checked << ", failures " << r.failures.size() << '\n';
    for (const auto& f : r.failures)
      out << "     " << params_text(f.parameters) << ": " << to_decimal(f.left)
          << " != " << to_decimal(f.right) << '\n';
  }
  if (format != "jsonl") {
    if (failed == 0)
      out << reports.size() << " identities hold\n";
    else
      out << failed << " of " << reports.size() << " identities failed\n";
  }
  return failed == 0 ? kExitOk : kExitIdentityFailed;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts and enumerates generalized compositions and checks the identities "
               "between part counts, totals and weighted polynomial coefficients.",
               "gencomp"};
  app.require_subcommand(1);

  std::string weights;
  std::size_t parts = 0, total = 0, n = 0, k = 0, n_max = 0, k_max = 8, limit = 0, r = 0;
  std::int64_t i = 0;
  std::string table_format, enum_format, verify_format;
  std::vector<std::string> identities;

  auto* count = app.add_subcommand("count", "Generalized compositions of a total into a fixed number of parts");
  count->add_option("--weights", weights, "Type counts b_1,...,b_r")->required();
  count->add_option("--parts", parts, "Number of parts k")->required();
  count->add_option("--total", total, "Total n")->required();

  auto* all = app.add_subcommand("total", "All generalized compositions of n");
  all->add_option("--weights", weights, "Type counts b_1,...,b_r")->required();
  all->add_option("--n", n, "Total n")->required();

  auto* coeff = app.add_subcommand("coeff", "Coefficient of x^i in (b_1 + b_2 x + ... + b_r x^(r-1))^k");
  coeff->add_option("--weights", weights, "Type counts b_1,...,b_r")->required();
  coeff->add_option("--k", k, "Power k >= 1")->required()->check(CLI::PositiveNumber);
  coeff->add_option("--i", i, "Exponent of x")->required();

  auto* table = app.add_subcommand("table", "Part counts C(k,n) and totals for 1 <= n <= n-max");
  table->add_option("--weights", weights, "Type counts b_1,...,b_r")->required();
  table->add_option("--n-max", n_max, "Largest total")->required()->check(CLI::PositiveNumber);
  table->add_option("--format", table_format, "csv or jsonl")->default_val("csv");

  std::optional<std::size_t> enum_parts, enum_limit;
  auto* enumerate = app.add_subcommand("enumerate", "List generalized compositions in lexicographic order");
  enumerate->add_option("--weights", weights, "Type counts b_1,...,b_r")->required();
  enumerate->add_option("--total", total, "Total n >= 1")->required()->check(CLI::PositiveNumber);
  auto* parts_opt = enumerate->add_option("--parts", parts, "Only compositions with this many parts")
                        ->check(CLI::PositiveNumber);
  auto* limit_opt = enumerate->add_option("--limit", limit, "Stop after this many")->check(CLI::PositiveNumber);
  enumerate->add_option("--format", enum_format, "text or jsonl")->default_val("text");

  auto* verify = app.add_subcommand("verify", "Check every applicable identity over a bounded grid");
  auto* weights_opt = verify->add_option("--weights", weights, "Type counts b_1,...,b_r");
  auto* r_opt = verify->add_option("--r", r, "Use b = (1,...,1) of length r")->check(CLI::PositiveNumber);
  weights_opt->excludes(r_opt);
  verify->add_option("--n-max", n_max, "Largest total n")->required()->check(CLI::PositiveNumber);
  verify->add_option("--k-max", k_max, "Largest part count k")->default_val(8)->check(CLI::PositiveNumber);
  verify->add_option("--identity", identities, "Restrict to these identities (repeatable)");
  verify->add_option("--format", verify_format, "text or jsonl")->default_val("text");

  std::vector<const char*> argv{"gencomp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      out << to_decimal(count_compositions(weights_from(weights), parts, total)) << '\n';
    } else if (all->parsed()) {
      out << to_decimal(count_all(weights_from(weights), n)) << '\n';
    } else if (coeff->parsed()) {
      out << to_decimal(weighted_polynomial_coefficient(weights_from(weights), k, i)) << '\n';
    } else if (table->parsed()) {
      require_format(table_format, {"csv", "jsonl"});
      print_table(weights_from(weights), n_max, table_format, out);
    } else if (enumerate->parsed()) {
      require_format(enum_format, {"text", "jsonl"});
      if (*parts_opt) enum_parts = parts;
      if (*limit_opt) enum_limit = limit;
      print_enumeration(weights_from(weights), total, enum_parts, enum_limit, enum_format, out);
    } else if (verify->parsed()) {
      require_format(verify_format, {"text", "jsonl"});
      if (!*weights_opt && !*r_opt) throw UsageError("verify needs --weights or --r");
      IdentityGrid grid{*weights_opt ? weights_from(weights) : ones(r), n_max, k_max};
      std::vector<Identity> selected;
      try {
        for (const auto& name : identities) selected.push_back(identity_from_name(name));
      } catch (const UnknownIdentity& e) {
        throw UsageError(e.what());
      }
      if (selected.empty())
        for (Identity id : kAllIdentities)
          if (applies_to(id, grid.b)) selected.push_back(id);
      std::vector<IdentityReport> reports;
      for (Identity id : selected) reports.push_back(check_identity(id, grid));
      return print_verify(reports, verify_format, out);
    }
  } catch (const UsageError& e) {
    err << "gencomp: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace gencomp::cli
