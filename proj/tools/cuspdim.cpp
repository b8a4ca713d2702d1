// cuspdim -- exact dimensions of the spaces of cusp forms and newforms on
// Gamma_0(N) and Gamma_1(N).
//
// Subcommands:
//   dim        one dimension (or newform proportion) at a single (N, k)
//   table      level range x weight set, streamed as records
//   enumerate  all levels with dimension <= bound, under a certified cutoff
//   verify     oracle | convolution-identities | bennett-bound |
//              power-of-two | lemma-suite | missing-values
//   average    exact summatory value against the predicted main term
//   constants  certified Euler-product and classical constants
//   coverage   multiplicity histogram of small dimension values
//
// Output is deterministic byte-for-byte for fixed arguments; the timing
// footer goes to the error stream and --no-timing removes it.  Exit status:
// 0 success, 1 verification failure, 2 usage error.

#include <charconv>
#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuspdim/analysis.hpp"
#include "cuspdim/arith.hpp"
#include "cuspdim/dimensions.hpp"
#include "cuspdim/euler_product.hpp"
#include "cuspdim/multiplicative.hpp"
#include "cuspdim/oracle.hpp"
#include "cuspdim/output.hpp"
#include "cuspdim/parallel.hpp"
#include "cuspdim/rational.hpp"

namespace {

using namespace cuspdim;
using nlohmann::ordered_json;

// --------------------------------------------------------------- parsing

enum class Format { plain, csv, json };

Format parse_format(const std::string& text) {
  if (text == "plain") return Format::plain;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + text + "' (plain|csv|json)");
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

// "a", "a:b", or "a:b:s" -> {a, a+s, ..., <= b}
std::vector<int> parse_weight_set(const std::string& text) {
  std::vector<std::string_view> parts;
  std::string_view rest = text;
  while (true) {
    auto colon = rest.find(':');
    parts.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest = rest.substr(colon + 1);
  }
  if (parts.size() > 3) throw std::invalid_argument("weight set '" + text + "' (want a:b[:s])");
  std::uint64_t a = parse_u64(parts[0], "weight");
  std::uint64_t b = parts.size() > 1 ? parse_u64(parts[1], "weight") : a;
  std::uint64_t s = parts.size() > 2 ? parse_u64(parts[2], "weight step") : 1;
  if (s == 0 || a < 2 || b < a || b > 1'000'000)
    throw std::invalid_argument("weight set '" + text + "' out of range (2 <= a <= b, step >= 1)");
  std::vector<int> weights;
  for (std::uint64_t k = a; k <= b; k += s) weights.push_back(static_cast<int>(k));
  return weights;
}

// "n" or "lo..hi"
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text, const char* what) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::uint64_t n = parse_u64(text, what);
    return {n, n};
  }
  std::uint64_t lo = parse_u64(std::string_view(text).substr(0, dots), what);
  std::uint64_t hi = parse_u64(std::string_view(text).substr(dots + 2), what);
  if (lo > hi) throw std::invalid_argument(std::string(what) + " range '" + text + "' has lo > hi");
  return {lo, hi};
}

unsigned resolve_threads(unsigned threads) {
  return threads == 0 ? default_thread_count() : threads;
}

// --------------------------------------------------------------- records

void emit_record(Format fmt, const OutputRecord& rec) {
  switch (fmt) {
    case Format::csv:
      std::printf("%s\n", csv_row(rec).c_str());
      break;
    case Format::json:
      std::printf("%s\n", json_line(rec).c_str());
      break;
    case Format::plain:
      std::printf("%s %" PRId64 " %d %s", rec.family.c_str(), rec.level, rec.k,
                  rec.value.c_str());
      for (const auto& [key, val] : rec.extras) std::printf(" %s=%s", key.c_str(), val.c_str());
      std::printf("\n");
      break;
  }
}

// ------------------------------------------------------------------- dim

int run_dim(const std::string& family, std::uint64_t level, int k, Format fmt) {
  OutputRecord rec;
  rec.family = family;
  rec.level = static_cast<std::int64_t>(level);
  rec.k = k;
  if (family == "rho0" || family == "rho1") {
    Rational r = rho(family == "rho0" ? RhoFamily::rho0 : RhoFamily::rho1, level, k);
    rec.value = r.to_string();
  } else {
    rec.value = dimension(family_from_name(family), level, k).value.get_str();
  }
  if (fmt == Format::plain) {
    std::printf("%s\n", rec.value.c_str());
  } else {
    if (fmt == Format::csv) std::printf("%s\n", csv_header());
    emit_record(fmt, rec);
  }
  return 0;
}

// ----------------------------------------------------------------- table

int run_table(const std::string& family, const std::string& levels_text,
              const std::string& weights_text, Format fmt) {
  auto [lo, hi] = parse_range(levels_text, "level");
  if (lo < 1) throw std::invalid_argument("levels start at 1");
  std::vector<int> weights = parse_weight_set(weights_text);
  std::uint64_t rows = (hi - lo + 1);
  if (rows > 50'000'000 / weights.size())
    throw std::invalid_argument("table too large; narrow the level range or weight set");

  bool is_rho = (family == "rho0" || family == "rho1");
  OutputRecord rec;
  rec.family = family;
  if (fmt == Format::csv) std::printf("%s\n", csv_header());

  if (is_rho) {
    if (rows * weights.size() > 2'000'000)
      throw std::invalid_argument("rho table too large; narrow the range");
    RhoFamily which = family == "rho0" ? RhoFamily::rho0 : RhoFamily::rho1;
    for (std::uint64_t n = lo; n <= hi; ++n)
      for (int k : weights) {
        rec.level = static_cast<std::int64_t>(n);
        rec.k = k;
        rec.value = rho(which, n, k).to_string();
        emit_record(fmt, rec);
      }
    return 0;
  }

  Family fam = family_from_name(family);
  std::vector<std::vector<std::int64_t>> columns;
  for (int k : weights) {
    DimensionSieve sieve(fam, k);
    std::vector<std::int64_t> col(rows);
    sieve.fill(lo, hi, col);
    columns.push_back(std::move(col));
  }
  for (std::uint64_t n = lo; n <= hi; ++n)
    for (std::size_t i = 0; i < weights.size(); ++i) {
      rec.level = static_cast<std::int64_t>(n);
      rec.k = weights[i];
      rec.value = std::to_string(columns[i][n - lo]);
      emit_record(fmt, rec);
    }
  return 0;
}

// ------------------------------------------------------------- enumerate

int run_enumerate(const std::string& family, int k, std::int64_t bound,
                  std::optional<std::uint64_t> cutoff, std::optional<std::int64_t> fiber,
                  unsigned threads, Format fmt) {
  Family fam = family_from_name(family);
  EnumerationResult res = enumerate_small_dim(fam, k, bound, cutoff, resolve_threads(threads));
  std::fprintf(stderr, "# %s k=%d: %zu levels with value <= %" PRId64
                       ", scan cutoff %" PRIu64 " (%s)\n",
               family.c_str(), k, res.levels.size(), bound, res.certificate.cutoff,
               res.certificate.certified ? "certified" : "caller-supplied, not certified");

  if (fmt == Format::csv) std::printf("%s\n", csv_header());
  OutputRecord rec;
  rec.family = family;
  rec.k = k;
  for (const auto& [level, value] : res.levels) {
    if (fiber && value != *fiber) continue;
    rec.level = level;
    rec.value = std::to_string(value);
    emit_record(fmt, rec);
  }
  return 0;
}

// ---------------------------------------------------------------- verify

void write_report(const std::string& path, const ordered_json& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file " + path);
  out << body.dump(2) << "\n";
}

int verify_oracle(const std::string& group_name_text, std::uint64_t max_level,
                  const std::string& weights_text, unsigned threads, const std::string& report) {
  Group group = group_from_name(group_name_text);
  std::vector<int> weights;
  if (!weights_text.empty()) {
    weights = parse_weight_set(weights_text);
  } else if (group == Group::gamma0) {
    weights = parse_weight_set("2:24:2");
  } else {
    weights = parse_weight_set("2:13");
  }
  if (max_level == 0) max_level = group == Group::gamma0 ? 20'000 : 5'000;
  if (max_level > 4'000'000'000ULL) throw std::invalid_argument("max level too large");

  ConsistencyReport rep = consistency_scan(group, static_cast<std::uint32_t>(max_level), weights,
                                           resolve_threads(threads));
  std::printf("check oracle: %s, levels <= %" PRIu64 ", %zu weights\n",
              group_name(group).data(), max_level, weights.size());
  std::printf("checked %" PRIu64 " values: %zu mismatches\n", rep.checked,
              rep.mismatches.size());
  std::size_t shown = 0;
  for (const Mismatch& m : rep.mismatches) {
    if (shown++ == 20) {
      std::printf("  ... (%zu more)\n", rep.mismatches.size() - 20);
      break;
    }
    std::printf("  mismatch %s N=%" PRIu32 " k=%d kind=%c closed=%" PRId64 " oracle=%" PRId64 "\n",
                group_name(m.group).data(), m.level, m.k, m.kind, m.closed_form, m.oracle);
  }
  if (!report.empty()) {
    ordered_json body;
    body["check"] = "oracle";
    body["group"] = group_name(group);
    body["max_level"] = max_level;
    body["weights"] = weights;
    body["checked"] = rep.checked;
    body["ok"] = rep.ok();
    body["mismatches"] = ordered_json::array();
    for (const Mismatch& m : rep.mismatches)
      body["mismatches"].push_back({{"level", m.level},
                                    {"k", m.k},
                                    {"kind", std::string(1, m.kind)},
                                    {"closed_form", m.closed_form},
                                    {"oracle", m.oracle}});
    write_report(report, body);
  }
  return rep.ok() ? 0 : 1;
}

int verify_identities(std::uint64_t max_level, const std::string& report) {
  if (max_level == 0) max_level = 10'000;
  std::vector<IdentityReport> reps = convolution_identity_suite(max_level);
  std::size_t failures = 0;
  for (const IdentityReport& r : reps) {
    if (r.ok)
      std::printf("identity %-28s ok for n <= %" PRIu64 "\n", r.name.c_str(), r.limit);
    else
      std::printf("identity %-28s FAILS first at n = %" PRIu64 "\n", r.name.c_str(),
                  r.first_failure);
    failures += r.ok ? 0 : 1;
  }
  std::printf("%zu identities, %zu failures\n", reps.size(), failures);
  if (!report.empty()) {
    ordered_json body;
    body["check"] = "convolution-identities";
    body["max_level"] = max_level;
    body["ok"] = failures == 0;
    body["identities"] = ordered_json::array();
    for (const IdentityReport& r : reps)
      body["identities"].push_back(
          {{"name", r.name}, {"ok", r.ok}, {"first_failure", r.first_failure}});
    write_report(report, body);
  }
  return failures == 0 ? 0 : 1;
}

int verify_bennett(std::uint64_t max_level, unsigned threads, const std::string& report) {
  if (max_level == 0) max_level = 100'000;
  SharpBoundReport rep = verify_sharp_bound(max_level, resolve_threads(threads));
  std::printf("newform bound 12*g0plus(N,2) <= N+1 for N <= %" PRIu64 ": %zu violations\n",
              rep.max_level, rep.violations.size());
  for (std::uint32_t n : rep.violations) std::printf("  violated at N = %" PRIu32 "\n", n);
  std::printf("equality at %zu levels; set is {35} + primes p = 11 (mod 12): %s\n",
              rep.equality_set.size(), rep.equality_set_is_expected ? "yes" : "NO");
  bool ok = rep.violations.empty() && rep.equality_set_is_expected;
  if (!report.empty()) {
    ordered_json body;
    body["check"] = "bennett-bound";
    body["max_level"] = rep.max_level;
    body["ok"] = ok;
    body["violations"] = rep.violations;
    body["equality_set"] = rep.equality_set;
    body["equality_set_is_expected"] = rep.equality_set_is_expected;
    write_report(report, body);
  }
  return ok ? 0 : 1;
}

int verify_power_of_two(std::uint64_t max_odd_level, const std::string& alpha_text,
                        const std::string& weights_text, const std::string& report) {
  if (max_odd_level == 0) max_odd_level = 999;
  auto [alpha_lo, alpha_hi] = parse_range(alpha_text.empty() ? "4..8" : alpha_text, "alpha");
  std::vector<int> weights = parse_weight_set(weights_text.empty() ? "2:6:2" : weights_text);
  PowerOfTwoReport rep =
      cuspdim::verify_power_of_two(static_cast<std::uint32_t>(max_odd_level),
                                   static_cast<int>(alpha_lo), static_cast<int>(alpha_hi), weights);
  std::printf("power-of-two collapse g0plus(2^a N, k), odd squarefree N <= %" PRIu64
              ", a in %" PRIu64 "..%" PRIu64 ": checked %" PRIu64 ", %zu failures\n",
              max_odd_level, alpha_lo, alpha_hi, rep.checked, rep.failures.size());
  for (const PowerOfTwoFailure& f : rep.failures)
    std::printf("  level %" PRIu64 " k=%d got %" PRId64 " want %" PRId64 "\n", f.level, f.k, f.got,
                f.want);
  if (!report.empty()) {
    ordered_json body;
    body["check"] = "power-of-two";
    body["max_odd_level"] = max_odd_level;
    body["alpha"] = {alpha_lo, alpha_hi};
    body["weights"] = weights;
    body["checked"] = rep.checked;
    body["ok"] = rep.ok();
    body["failures"] = ordered_json::array();
    for (const PowerOfTwoFailure& f : rep.failures)
      body["failures"].push_back(
          {{"level", f.level}, {"k", f.k}, {"got", f.got}, {"want", f.want}});
    write_report(report, body);
  }
  return rep.ok() ? 0 : 1;
}

int verify_lemmas(std::uint64_t max_level, unsigned threads, const std::string& report) {
  if (max_level == 0) max_level = 100'000;
  LemmaSuiteReport rep = lemma_suite(max_level, resolve_threads(threads));
  std::printf("lemma suite over N <= %" PRIu64 ": %" PRIu64 " checks, %zu violations\n",
              rep.max_level, rep.checks, rep.violations.size());
  std::size_t shown = 0;
  for (const std::string& v : rep.violations) {
    if (shown++ == 20) {
      std::printf("  ... (%zu more)\n", rep.violations.size() - 20);
      break;
    }
    std::printf("  %s\n", v.c_str());
  }
  if (!report.empty()) {
    ordered_json body;
    body["check"] = "lemma-suite";
    body["max_level"] = rep.max_level;
    body["checks"] = rep.checks;
    body["ok"] = rep.ok();
    body["violations"] = rep.violations;
    write_report(report, body);
  }
  return rep.ok() ? 0 : 1;
}

int verify_missing(const std::string& family, int k, std::int64_t max_value, std::uint64_t cutoff,
                   unsigned threads, const std::string& report) {
  Family fam = family_from_name(family.empty() ? "g0" : family);
  if (max_value == 0) max_value = 1'000;
  if (cutoff == 0) cutoff = 13'500;
  MissingValueReport rep =
      missing_values(fam, k, max_value, cutoff, resolve_threads(threads));
  std::printf("missing values of %s(N,%d) in [0, %" PRId64 "], levels <= %" PRIu64 " (%s)\n",
              family_name(fam).data(), k, rep.max_value, rep.cutoff,
              rep.certified ? "certified complete" : "not certified");
  std::printf("attained %" PRIu64 ", missing %zu:", rep.attained_count, rep.missing.size());
  for (std::int64_t v : rep.missing) std::printf(" %" PRId64, v);
  std::printf("\n");
  if (!report.empty()) {
    ordered_json body;
    body["check"] = "missing-values";
    body["family"] = family_name(fam);
    body["k"] = k;
    body["max_value"] = rep.max_value;
    body["cutoff"] = rep.cutoff;
    body["certified"] = rep.certified;
    body["attained_count"] = rep.attained_count;
    body["missing"] = rep.missing;
    write_report(report, body);
  }
  return 0;
}

// --------------------------------------------------------------- average

int run_average(const std::string& target, int k, std::uint64_t limit, unsigned threads) {
  AverageCheck chk = average_ratio(target, k, limit, resolve_threads(threads));
  std::printf("average %s k=%d up to x=%" PRIu64 ": empirical %.8e, predicted %.8e, ratio %.6f\n",
              chk.target.c_str(), chk.k, chk.limit, chk.empirical_sum.to_double(),
              chk.predicted_sum, chk.ratio);
  return 0;
}

// ------------------------------------------------------------- constants

int run_constants(std::uint64_t prime_cutoff) {
  if (prime_cutoff == 0) prime_cutoff = 10'000'000;
  Constants c = Constants::compute(prime_cutoff);
  std::printf("Euler products over primes p <= %" PRIu64 "\n", c.prime_cutoff);
  auto line = [](const char* name, const CertifiedValue& v) {
    std::printf("%-12s %-18s radius %.3e\n", name, v.digits().c_str(), v.radius);
  };
  line("a0_plus", c.a0_plus);
  line("a1_star", c.a1_star);
  line("a1_plus", c.a1_plus);
  line("b0", c.b0);
  line("b1", c.b1);
  line("euler_gamma", c.euler_gamma);
  line("pi", c.pi);
  line("zeta2", c.zeta2);
  line("zeta3", c.zeta3);
  line("zeta4", c.zeta4);
  return 0;
}

// -------------------------------------------------------------- coverage

int run_coverage(const std::string& family, int k, std::uint64_t max_level, std::int64_t max_value,
                 unsigned threads) {
  Family fam = family_from_name(family);
  CoverageHistogram hist = value_coverage(fam, k, max_level, max_value, resolve_threads(threads));
  std::printf("coverage of %s(N,%d) over N <= %" PRIu64 ", values 0..%" PRId64 "\n",
              family_name(fam).data(), k, hist.max_level, hist.max_value);
  for (std::int64_t v = 0; v <= hist.max_value; ++v)
    std::printf("%" PRId64 " %" PRIu64 "\n", v, hist.count[static_cast<std::size_t>(v)]);
  std::printf("attained %" PRIu64 " of %" PRId64 "; rarest value %" PRId64
              " (x%" PRIu64 "), commonest %" PRId64 " (x%" PRIu64 ")\n",
              hist.attained(), hist.max_value + 1, hist.min_value_arg,
              hist.min_value_arg >= 0 ? hist.count[static_cast<std::size_t>(hist.min_value_arg)]
                                      : 0,
              hist.max_value_arg,
              hist.max_value_arg >= 0 ? hist.count[static_cast<std::size_t>(hist.max_value_arg)]
                                      : 0);
  return 0;
}

}  // namespace

// ------------------------------------------------------------------ main

int main(int argc, char** argv) {
  CLI::App app{"exact dimensions of spaces of cusp forms and newforms"};
  app.require_subcommand(1);

  std::string family = "g0plus", group_text = "gamma0", levels_text, weights_text, format_text =
      "plain";
  std::string check_name, report_path, alpha_text;
  std::uint64_t level = 1, max_level = 0, limit = 100'000, cutoff = 0, prime_cutoff = 0;
  std::int64_t bound = 100, max_value = 0, fiber_value = 0;
  int k = 2;
  unsigned threads = 0;
  bool no_timing = false;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_flag("--no-timing", no_timing, "suppress the timing footer on the error stream");
    if (with_format)
      cmd->add_option("--format", format_text, "output format: plain|csv|json")
          ->capture_default_str();
  };

  CLI::App* dim_cmd = app.add_subcommand("dim", "one dimension at a single level and weight");
  dim_cmd->add_option("--family", family,
                      "g0|g0plus|g0star|g1|g1plus|g1star|rho0|rho1")->required();
  dim_cmd->add_option("--level", level, "level N >= 1")->required();
  dim_cmd->add_option("--weight", k, "weight k >= 2")->required();
  add_common(dim_cmd, true);

  CLI::App* table_cmd = app.add_subcommand("table", "dimensions over a level range x weight set");
  table_cmd->add_option("--family", family, "family or rho0|rho1")->required();
  table_cmd->add_option("--levels", levels_text, "level range lo..hi")->required();
  table_cmd->add_option("--weights", weights_text, "weight set a:b[:s]")->required();
  add_common(table_cmd, true);

  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "levels with dimension <= bound (certified scan range)");
  enum_cmd->add_option("--family", family, "dimension family")->required();
  enum_cmd->add_option("--weight", k, "weight k");
  enum_cmd->add_option("--max-dim", bound, "enumerate levels with dimension <= this")->required();
  auto* cutoff_opt = enum_cmd->add_option("--cutoff", cutoff,
                                          "scan range override (marks the result uncertified)");
  auto* fiber_opt = enum_cmd->add_option("--fiber", fiber_value,
                                         "print only levels attaining exactly this value");
  enum_cmd->add_option("--threads", threads, "worker cap (0 = hardware)");
  add_common(enum_cmd, true);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run one verification check");
  verify_cmd
      ->add_option("--check", check_name,
                   "oracle|convolution-identities|bennett-bound|power-of-two|lemma-suite|"
                   "missing-values")
      ->required();
  verify_cmd->add_option("--group", group_text, "gamma0|gamma1 (oracle check)");
  verify_cmd->add_option("--max-level", max_level, "level bound (0 = check default)");
  verify_cmd->add_option("--weights", weights_text, "weight set a:b[:s]");
  verify_cmd->add_option("--max-odd-level", max_level, "odd squarefree bound (power-of-two)");
  verify_cmd->add_option("--alpha", alpha_text, "power range lo..hi (power-of-two)");
  auto* verify_family_opt =
      verify_cmd->add_option("--family", family, "dimension family (missing-values)");
  verify_cmd->add_option("--weight", k, "weight k (missing-values)");
  verify_cmd->add_option("--max-value", max_value, "value ceiling (missing-values)");
  verify_cmd->add_option("--cutoff", cutoff, "scan range (missing-values)");
  verify_cmd->add_option("--threads", threads, "worker cap (0 = hardware)");
  verify_cmd->add_option("--report", report_path, "write a JSON report with full detail lists");
  add_common(verify_cmd, false);

  CLI::App* avg_cmd = app.add_subcommand("average", "empirical vs predicted average order");
  avg_cmd->add_option("--target", family, "family name or rho0|rho1")->required();
  avg_cmd->add_option("--weight", k, "weight k");
  avg_cmd->add_option("--limit", limit, "sum over N <= limit")->required();
  avg_cmd->add_option("--threads", threads, "worker cap (0 = hardware)");
  add_common(avg_cmd, false);

  CLI::App* const_cmd = app.add_subcommand("constants", "certified numerical constants");
  const_cmd->add_option("--prime-cutoff", prime_cutoff, "Euler products over p <= this");
  add_common(const_cmd, false);

  CLI::App* cover_cmd = app.add_subcommand("coverage", "value multiplicity histogram");
  cover_cmd->add_option("--family", family, "dimension family")->required();
  cover_cmd->add_option("--weight", k, "weight k");
  cover_cmd->add_option("--max-level", max_level, "scan levels N <= this")->required();
  cover_cmd->add_option("--max-value", max_value, "histogram values 0..this")->required();
  cover_cmd->add_option("--threads", threads, "worker cap (0 = hardware)");
  add_common(cover_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  int status = 1;
  try {
    Format fmt = parse_format(format_text);
    if (dim_cmd->parsed()) {
      status = run_dim(family, level, k, fmt);
    } else if (table_cmd->parsed()) {
      status = run_table(family, levels_text, weights_text, fmt);
    } else if (enum_cmd->parsed()) {
      std::optional<std::uint64_t> cut;
      if (cutoff_opt->count()) cut = cutoff;
      std::optional<std::int64_t> fiber;
      if (fiber_opt->count()) fiber = fiber_value;
      status = run_enumerate(family, k, bound, cut, fiber, threads, fmt);
    } else if (verify_cmd->parsed()) {
      if (check_name == "oracle")
        status = verify_oracle(group_text, max_level, weights_text, threads, report_path);
      else if (check_name == "convolution-identities")
        status = verify_identities(max_level, report_path);
      else if (check_name == "bennett-bound")
        status = verify_bennett(max_level, threads, report_path);
      else if (check_name == "power-of-two")
        status = verify_power_of_two(max_level, alpha_text, weights_text, report_path);
      else if (check_name == "lemma-suite")
        status = verify_lemmas(max_level, threads, report_path);
      else if (check_name == "missing-values")
        status = verify_missing(verify_family_opt->count() ? family : std::string(), k, max_value,
                                cutoff, threads, report_path);
      else
        throw std::invalid_argument("unknown check '" + check_name + "'");
    } else if (avg_cmd->parsed()) {
      status = run_average(family, k, limit, threads);
    } else if (const_cmd->parsed()) {
      status = run_constants(prime_cutoff);
    } else if (cover_cmd->parsed()) {
      status = run_coverage(family, k, max_level, max_value, threads);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failure: %s\n", e.what());
    return 1;
  }

  if (!no_timing) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::fprintf(stderr, "# elapsed %.3f s\n", secs);
  }
  return status;
}
