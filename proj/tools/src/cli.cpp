#include "isogeny/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "isogeny/errors.hpp"

namespace isogeny::cli {

using nlohmann::ordered_json;

unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string scientific(const BigReal& x, int digits) {
  if (x <= 0) return x == 0 ? "0" : "-" + scientific(-x, digits);
  long e = static_cast<long>(floor(log10(x)));
  BigReal mantissa = x / pow(BigReal(10), e);
  const BigReal scale = pow(BigReal(10), digits - 1);
  BigReal rounded = round(mantissa * scale) / scale;
  if (rounded >= 10) {
    rounded /= 10;
    ++e;
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits - 1) << rounded.convert_to<double>() << "e" << e;
  return os.str();
}

namespace {

ordered_json prime_list(const PrimeSet& ps) {
  ordered_json arr = ordered_json::array();
  for (const BigInt& p : ps) arr.push_back(p.get_str());
  return arr;
}

template <class Int>
ordered_json u64_list(const std::vector<Int>& ps) {
  ordered_json arr = ordered_json::array();
  for (auto p : ps) arr.push_back(std::to_string(p));
  return arr;
}

PrimeSet parse_primes(const nlohmann::json& arr) {
  PrimeSet out;
  for (const auto& s : arr) out.emplace_back(s.get<std::string>());
  return out;
}

std::vector<std::uint64_t> parse_u64s(const nlohmann::json& arr) {
  std::vector<std::uint64_t> out;
  for (const auto& s : arr) out.push_back(std::stoull(s.get<std::string>()));
  return out;
}

std::string join(const PrimeSet& ps) {
  std::string s;
  for (const BigInt& p : ps) {
    if (!s.empty()) s += ' ';
    s += p.get_str();
  }
  return s.empty() ? "(none)" : s;
}

template <class Int>
std::string join_ints(const std::vector<Int>& ps) {
  std::string s;
  for (auto p : ps) {
    if (!s.empty()) s += ' ';
    s += std::to_string(p);
  }
  return s.empty() ? "(none)" : s;
}

std::string field_name(std::int64_t D) { return "Q(sqrt(" + std::to_string(D) + "))"; }

}  // namespace

ordered_json to_json(const SupersetReport& r) {
  ordered_json j;
  j["D"] = r.D;
  j["delta_K"] = r.disc;
  j["h_K"] = r.h;
  ordered_json c;
  c["not_type_one_two"] = prime_list(r.not_type_one_two);
  c["type_one"] = prime_list(r.type_one);
  c["type_two_not_momose"] = prime_list(r.type_two_not_momose);
  ordered_json t2;
  t2["bound"] = r.type_two_momose.bound;
  t2["cap"] = r.type_two_momose.cap;
  t2["complete"] = r.type_two_momose.complete;
  t2["survivors"] = u64_list(r.type_two_momose.survivors);
  c["type_two_momose"] = std::move(t2);
  c["ramified"] = prime_list(r.ramified);
  j["components"] = std::move(c);
  j["superset"] = prime_list(r.superset);
  ordered_json aux;
  aux["not_type_one_two"] = u64_list(r.aux_primes);
  aux["type_one"] = u64_list(r.type1_aux_primes);
  j["aux_primes"] = std::move(aux);
  ordered_json sets = ordered_json::array();
  for (const auto& s : r.aux_generating_sets) sets.push_back(u64_list(s));
  j["aux_generating_sets"] = std::move(sets);
  ordered_json timings = ordered_json::object();
  for (const auto& [k, v] : r.timings_ms) timings[k] = v;
  j["timings_ms"] = std::move(timings);
  return j;
}

SupersetReport report_from_json(const nlohmann::json& j) {
  SupersetReport r;
  r.D = j.at("D").get<std::int64_t>();
  r.disc = j.at("delta_K").get<std::int64_t>();
  r.h = j.at("h_K").get<std::uint64_t>();
  const auto& c = j.at("components");
  r.not_type_one_two = parse_primes(c.at("not_type_one_two"));
  r.type_one = parse_primes(c.at("type_one"));
  r.type_two_not_momose = parse_primes(c.at("type_two_not_momose"));
  const auto& t2 = c.at("type_two_momose");
  r.type_two_momose.bound = t2.at("bound").get<double>();
  r.type_two_momose.cap = t2.at("cap").get<std::uint64_t>();
  r.type_two_momose.complete = t2.at("complete").get<bool>();
  r.type_two_momose.survivors = parse_u64s(t2.at("survivors"));
  r.ramified = parse_primes(c.at("ramified"));
  r.superset = parse_primes(j.at("superset"));
  r.aux_primes = parse_u64s(j.at("aux_primes").at("not_type_one_two"));
  r.type1_aux_primes = parse_u64s(j.at("aux_primes").at("type_one"));
  for (const auto& s : j.at("aux_generating_sets")) r.aux_generating_sets.push_back(parse_u64s(s));
  for (const auto& [k, v] : j.at("timings_ms").items()) r.timings_ms[k] = v.get<double>();
  return r;
}

std::string to_text(const SupersetReport& r) {
  std::ostringstream os;
  os << "K = " << field_name(r.D) << ", discriminant " << r.disc << ", class number " << r.h << "\n";
  os << "aux primes:              " << join_ints(r.aux_primes) << "\n";
  os << "type 1 aux primes:       " << join_ints(r.type1_aux_primes) << "\n";
  os << "generating sets:        ";
  if (r.h == 1) {
    os << " (trivial class group)";
  } else {
    for (const auto& s : r.aux_generating_sets) os << " {" << join_ints(s) << "}";
  }
  os << "\n\n";
  os << "NotTypeOneTwoPrimes:     " << join(r.not_type_one_two) << "\n";
  os << "TypeOnePrimes:           " << join(r.type_one) << "\n";
  os << "TypeTwoNotMomosePrimes:  " << join(r.type_two_not_momose) << "\n";
  os << "TypeTwoMomosePrimes:     " << join_ints(r.type_two_momose.survivors) << "\n";
  os << "  T_K = " << scientific(BigReal(r.type_two_momose.bound), 4) << ", scanned to "
     << r.type_two_momose.cap << (r.type_two_momose.complete ? " (complete)" : " (INCOMPLETE)") << "\n";
  os << "Supp(disc):              " << join(r.ramified) << "\n\n";
  os << "superset:                " << join(r.superset) << "\n";
  return os.str();
}

ordered_json to_json(const DlmvBreakdown& b) {
  auto s = [](const BigReal& x) { return scientific(x, 6); };
  ordered_json j;
  j["d_K"] = b.d_K;
  j["delta_K"] = b.disc;
  j["h_K"] = b.h;
  j["r_K"] = b.r;
  j["R_K"] = s(b.regulator);
  j["delta"] = s(b.delta);
  j["C_1"] = s(b.C1);
  j["C_2"] = s(b.C2);
  j["n"] = s(b.n);
  j["C"] = s(b.C);
  j["type_one_bound"] = s(b.type1_bound);
  j["T_K"] = s(b.T_K);
  j["DLMV"] = s(b.dlmv);
  return j;
}

std::string to_text(const DlmvBreakdown& b) {
  std::ostringstream os;
  os << "discriminant " << b.disc << ", class number " << b.h << ", unit rank " << b.r << "\n";
  if (b.r > 0) os << "regulator    " << scientific(b.regulator, 6) << "\n";
  os << "C_1          " << scientific(b.C1, 6) << "\n";
  os << "C_2          " << scientific(b.C2, 6) << "\n";
  os << "n            " << scientific(b.n, 6) << "\n";
  os << "C(K, n)      " << scientific(b.C, 6) << "\n";
  os << "type 1 bound " << scientific(b.type1_bound, 6) << "\n";
  os << "T_K          " << scientific(b.T_K, 6) << "\n";
  os << "DLMV         " << scientific(b.dlmv, 3) << "\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superset of isogeny primes for a quadratic field Q(sqrt(D))", "isogeny-superset"};
  RunConfig cfg;
  cfg.threads = default_threads();
  std::string format = "text";

  app.add_option("D", cfg.D, "Squarefree integer D != 0, 1")->required()->allow_extra_args(false);
  app.add_option("--aux-count", cfg.aux_count, "Aux primes for NotTypeOneTwoPrimes")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--type1-aux-count", cfg.type1_aux_count, "Aux primes (q > 5) for TypeOnePrimes")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--auxgen-count", cfg.auxgen_count, "Disjoint generating sets for TypeTwoNotMomosePrimes")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--type-two-cap,--cap", cfg.type_two_cap,
                 "Stop the Condition CC scan here instead of at T_K (result is then conditional)")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("-j,--threads", cfg.threads,
                 std::string("Worker threads (default: $") + kThreadsEnv + " or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("-f,--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("-o,--output", cfg.output_path, "Write the report to this file");
  app.add_flag("--dlmv-only", cfg.dlmv_only, "Only compute the DLMV bound");
  app.add_option("--trial-limit", cfg.budget.trial_limit, "Trial division bound before Pollard rho")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1'000'000}))->capture_default_str();
  app.add_option("--rho-iterations", cfg.budget.rho_iterations, "Pollard rho iterations per split attempt")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--rho-attempts", cfg.budget.rho_attempts, "Pollard rho polynomials tried per cofactor")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--checkpoint", cfg.checkpoint_path, "Resumable checkpoint file for the Type 2 scan");

  try {
    // Let negative D through as a positional.
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.positionals_at_end(false);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  try {
    const QuadField F = QuadField::make(cfg.D);
    std::string body;
    if (cfg.dlmv_only) {
      const ClassGroup G(F);
      if (!F.is_real() && G.class_number() == 1) {
        throw ImaginaryClassNumberOne(field_name(cfg.D) + " is imaginary of class number one");
      }
      const DlmvBreakdown b = dlmv_bound(G);
      body = cfg.format == OutputFormat::Json ? to_json(b).dump(2) + "\n" : to_text(b);
    } else {
      SupersetConfig sc;
      sc.aux_count = cfg.aux_count;
      sc.type1_aux_count = cfg.type1_aux_count;
      sc.auxgen_count = cfg.auxgen_count;
      sc.type_two_cap = cfg.type_two_cap;
      sc.threads = cfg.threads;
      sc.budget = cfg.budget;
      sc.checkpoint_path = cfg.checkpoint_path;
      const SupersetReport report = assemble(F, sc);
      if (!report.type_two_momose.complete) {
        err << "warning: the Type 2 scan stopped at " << report.type_two_momose.cap
            << ", below T_K = " << scientific(BigReal(report.type_two_momose.bound), 4)
            << ". This superset is conditional on no Condition CC survivor lying above the cap.\n";
      }
      body = cfg.format == OutputFormat::Json ? to_json(report).dump(2) + "\n" : to_text(report);
    }
    if (cfg.output_path.empty()) {
      out << body;
    } else {
      std::ofstream file(cfg.output_path);
      if (!file) throw ValidationError("cannot open " + cfg.output_path + " for writing");
      file << body;
    }
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ComputationError& e) {
    err << "computation failed: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace isogeny::cli
