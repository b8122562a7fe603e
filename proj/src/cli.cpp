#include "lcert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lcert/cache.hpp"
#include "lcert/errors.hpp"
#include "lcert/harness.hpp"
#include "lcert/nt.hpp"
#include "lcert/report.hpp"

namespace lcert {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kHypothesisFailed = 2;
constexpr int kAnomaly = 3;
constexpr int kUndecided = 4;

struct RunConfig {
  long precision = 0;  // 0 = module defaults
  std::string bound = "1048576";
  std::string cache_dir;
  std::string out_path;
  std::string format = "json";
  bool no_timestamp = false;
};

void write_output(const RunConfig& cfg, std::ostream& out,
                  const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  f << text;
  if (!f) fail(errc::usage, "cannot write " + cfg.out_path);
}

mpz_class parse_bound(const std::string& s) {
  try {
    mpz_class b(s);
    if (b < 2) fail(errc::usage, "bound must be >= 2");
    return b;
  } catch (const std::invalid_argument&) {
    fail(errc::usage, "bad bound: " + s);
  }
}

std::vector<long> parse_moduli(const std::string& s) {
  std::vector<long> qs;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) qs.push_back(std::stol(tok));
  if (qs.empty()) fail(errc::usage, "empty modulus list");
  return qs;
}

int verdict_exit(const VerificationReport& rep) {
  if (!rep.hyp_pairwise || !rep.hyp_gcd) return kHypothesisFailed;
  switch (rep.verdict) {
    case Verdict::consistent: return kOk;
    case Verdict::anomaly: return kAnomaly;
    case Verdict::undecided: return kUndecided;
  }
  return kUndecided;
}

int emit_report(const VerificationReport& rep, const RunConfig& cfg,
                std::ostream& out) {
  write_output(cfg, out, render_report(rep, cfg.format, !cfg.no_timestamp));
  return verdict_exit(rep);
}

int run_chars(long q, std::ostream& out) {
  auto chars = enumerate_characters(q);
  out << "characters mod " << q << " (" << chars.size() << ")\n";
  for (size_t k = 0; k < chars.size(); ++k) {
    const auto& chi = chars[k];
    out << "  #" << k << (chi.is_trivial() ? " trivial" : "")
        << (chi.is_even() ? " even" : " odd") << " order " << chi.order()
        << "\n";
  }
  return kOk;
}

int run_lvalue(long q, long char_index, const std::string& erdos_pattern,
               const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  long bits = cfg.precision > 0 ? cfg.precision : 256;
  PrecisionContext ctx(bits);

  std::string key;
  PeriodicFunction f = PeriodicFunction::zero(q);
  bool regularize = false;
  if (!erdos_pattern.empty()) {
    std::vector<int> signs;
    for (char c : erdos_pattern) {
      if (c == '+') signs.push_back(1);
      else if (c == '-') signs.push_back(-1);
      else fail(errc::usage, "pattern must be over {+,-}");
    }
    f = PeriodicFunction::from_signs(q, signs);
    regularize = true;
    key = "lvalue:q=" + std::to_string(q) + ":erdos=" + erdos_pattern;
  } else {
    auto chars = enumerate_characters(q);
    if (char_index < 0 || char_index >= static_cast<long>(chars.size()))
      fail(errc::usage, "character index out of range");
    const auto& chi = chars[char_index];
    if (chi.is_trivial()) fail(errc::usage, "trivial character has no L(1)");
    f = PeriodicFunction::from_character(chi);
    key = "lvalue:q=" + std::to_string(q) +
          ":char=" + std::to_string(char_index);
  }

  Complex value;
  bool hit = false;
  std::string method = regularize ? "digamma-regularized" : "digamma";
  if (!cfg.cache_dir.empty()) {
    ValueCache cache(cfg.cache_dir);
    if (auto v = cache.lookup(key, method, bits, err)) {
      value = std::move(*v);
      hit = true;
    }
  }
  if (!hit) {
    value = l_one_digamma(f, ctx, regularize).value;
    if (!cfg.cache_dir.empty())
      ValueCache(cfg.cache_dir).store(key, method, bits, value);
  }
  out << key << " [" << method << (hit ? ", cached" : "") << ", " << bits
      << " bits]\n"
      << "  re " << value.re.to_decimal() << " (err 2^" << value.re.err_exp()
      << ")\n"
      << "  im " << value.im.to_decimal() << " (err 2^" << value.im.err_exp()
      << ")\n";
  return kOk;
}

int run_units(long q, const RunConfig& cfg, std::ostream& out) {
  long bits = cfg.precision > 0 ? cfg.precision : 256;
  PrecisionContext ctx(bits);
  auto units = ramachandra_units(q);
  out << "units for q=" << q << " (" << units.size() << ")\n";
  for (const auto& u : units) {
    out << "  a=" << u.a << " d=" << u.d_exp
        << " norm=" << u.elt.absolute_norm().get_str()
        << " value=" << u.elt.embed(1, ctx).re.to_decimal(20) << "\n";
  }
  auto rank = multiplicative_independence_rank(units, ctx);
  out << "independence rank " << rank.rank << "/" << units.size() << "\n";
  return rank.full ? kOk : kAnomaly;
}

int run_relation(const std::string& path, const RunConfig& cfg,
                 std::ostream& out) {
  long bits = cfg.precision > 0 ? cfg.precision : 512;
  PrecisionContext ctx(bits);
  std::ifstream in(path);
  if (!in) fail(errc::usage, "cannot read " + path);
  std::vector<Real> xs;
  std::string dec;
  long err;
  while (in >> dec) {
    if (!(in >> err)) fail(errc::usage, "expected: <decimal> <err-exponent>");
    xs.push_back(Real::of_decimal(dec, err, bits));
  }
  if (xs.size() < 2) fail(errc::usage, "need at least two values");

  RelationResult res = find_integer_relation(xs, parse_bound(cfg.bound), ctx);
  if (found_relation(res)) {
    const auto& rc = std::get<RelationCertificate>(res);
    out << "relation found:";
    for (const auto& c : rc.integer_coefficients()) out << " " << c.get_str();
    out << "\nresidual below 2^" << rc.residual.ub_exp() << "\n";
  } else {
    const auto& nc = std::get<NoRelationCertificate>(res);
    out << "no relation up to bound " << nc.bound.get_str()
        << " (lattice norm floor " << nc.norm_floor.to_decimal(12) << ")\n";
  }
  return kOk;
}

int run_report(const std::string& in_path, const RunConfig& cfg,
               std::ostream& out, std::ostream& err) {
  std::ifstream in(in_path);
  if (!in) fail(errc::usage, "cannot read " + in_path);
  auto j = nlohmann::ordered_json::parse(in);
  Verdict v = reverify_report(j);
  VerificationReport rep = report_from_json(j);
  if (v != rep.verdict)
    err << "warning: recomputed verdict " << verdict_name(v)
        << " differs from stored " << verdict_name(rep.verdict) << "\n";
  rep.verdict = v;
  write_output(cfg, out, render_report(rep, cfg.format, !cfg.no_timestamp));
  return verdict_exit(rep);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"exact and certified checks around cyclotomic L(1) values"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--precision", cfg.precision, "working precision in bits");
  app.add_option("--bound", cfg.bound, "relation coefficient bound");
  app.add_option("--cache", cfg.cache_dir, "cache directory")
      ->envname("LCERT_CACHE_DIR");
  app.add_option("--out", cfg.out_path, "write the report to this file");
  app.add_option("--format", cfg.format, "json, csv, or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_flag("--no-timestamp", cfg.no_timestamp,
               "omit the timestamp field from JSON reports");

  long q = 0, char_index = -1, kderiv = 1, m = 1, limit = 0;
  std::string erdos_pattern, file_path, verify_kind;
  std::string qlist;
  bool inject = false;

  auto* chars_cmd = app.add_subcommand("chars", "list characters mod q");
  chars_cmd->add_option("q", q)->required();

  auto* lvalue_cmd = app.add_subcommand("lvalue", "evaluate one L(1) value");
  lvalue_cmd->add_option("q", q)->required();
  lvalue_cmd->add_option("--char", char_index, "character index");
  lvalue_cmd->add_option("--erdos", erdos_pattern, "sign pattern, e.g. ++-+");

  auto* units_cmd =
      app.add_subcommand("units", "cyclotomic units mod q and their rank");
  units_cmd->add_option("q", q)->required();

  auto* cot_cmd =
      app.add_subcommand("cot-identity", "exact cotangent identity check");
  cot_cmd->add_option("q", q)->required();

  auto* rel_cmd =
      app.add_subcommand("relation", "integer-relation search on a value file");
  rel_cmd->add_option("file", file_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification");
  verify_cmd
      ->add_option("kind", verify_kind, "thm1, thm3, thm4, okada, or erdos")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm3", "thm4", "okada", "erdos"}));
  verify_cmd->add_option("--q", qlist, "comma-separated moduli")->required();
  verify_cmd->add_option("--k", kderiv, "cotangent derivative order");
  verify_cmd->add_option("--m", m, "coefficient field modulus");
  verify_cmd->add_flag("--inject-dependent", inject)->group("");

  auto* sophie_cmd =
      app.add_subcommand("sophie", "safe-prime chain below a limit");
  sophie_cmd->add_option("--limit", limit)->required();

  auto* report_cmd =
      app.add_subcommand("report", "re-verify and re-render a report");
  report_cmd->add_option("--in", file_path)->required();

  // let global options appear after the subcommand name
  for (auto* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("lcert");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (chars_cmd->parsed()) return run_chars(q, out);
    if (lvalue_cmd->parsed())
      return run_lvalue(q, char_index, erdos_pattern, cfg, out, err);
    if (units_cmd->parsed()) return run_units(q, cfg, out);
    if (cot_cmd->parsed()) {
      bool ok = verify_cot_identity(q);
      out << "q=" << q << ": " << (ok ? "ok" : "FAILED") << "\n";
      return ok ? kOk : kAnomaly;
    }
    if (rel_cmd->parsed()) return run_relation(file_path, cfg, out);
    if (sophie_cmd->parsed()) {
      auto [b, c] = sophie_germain_chain(limit);
      auto join = [](const std::vector<long>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i)
          s += (i ? "," : "") + std::to_string(v[i]);
        return s;
      };
      out << "B = " << join(b) << "\n" << "C = " << join(c) << "\n";
      return kOk;
    }
    if (report_cmd->parsed()) return run_report(file_path, cfg, out, err);

    // verify
    auto qs = parse_moduli(qlist);
    mpz_class B = parse_bound(cfg.bound);
    EscalationPolicy esc;
    if (cfg.precision > 0) {
      esc.start_bits = cfg.precision;
      esc.max_bits = std::max(cfg.precision, esc.max_bits);
    }
    VerificationReport rep;
    if (verify_kind == "thm1")
      rep = verify_theorem_all(qs, m, B, esc, inject);
    else if (verify_kind == "thm3")
      rep = verify_theorem_even(qs, m, B, esc, inject);
    else if (verify_kind == "thm4")
      rep = verify_theorem_odd(qs, m, B, esc, inject);
    else if (verify_kind == "okada")
      rep = verify_okada(qs, kderiv, B, esc, inject);
    else
      rep = erdos_survey(qs, B, esc);
    return emit_report(rep, cfg, out);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::usage: return kUsage;
      case errc::hypothesis_failed: return kHypothesisFailed;
      case errc::precision_exhausted: return kUndecided;
      case errc::corrupt_entry: return kUndecided;
      default: return kUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace lcert
