#include "lcert/report.hpp"

#include <ctime>
#include <sstream>

#include "lcert/errors.hpp"

namespace lcert {

namespace {

// serialized stand-in for Real::kExact (which is INT64_MIN / 4)
constexpr long kErrExactWire = -1'000'000;

long wire_err(const Real& r) {
  return r.exact() ? kErrExactWire : r.err_exp();
}

Real real_from_wire(const std::string& dec, long err, long prec) {
  Real r = Real::of_decimal(dec, err <= kErrExactWire ? 0 : err, prec);
  if (err <= kErrExactWire) r.set_err_exp(Real::kExact);
  return r;
}

nlohmann::ordered_json value_to_json(const Complex& v) {
  nlohmann::ordered_json j;
  j["re"] = v.re.to_decimal();
  j["im"] = v.im.to_decimal();
  return j;
}

nlohmann::ordered_json err_to_json(const Complex& v) {
  nlohmann::ordered_json j;
  j["re"] = wire_err(v.re);
  j["im"] = wire_err(v.im);
  return j;
}

Complex value_from_json(const nlohmann::ordered_json& val,
                        const nlohmann::ordered_json& err, long prec) {
  return {real_from_wire(val.at("re"), err.at("re"), prec),
          real_from_wire(val.at("im"), err.at("im"), prec)};
}

std::string cyclo_to_wire(const CycloElt& c) {
  std::string s = "m:" + std::to_string(c.modulus()) + ":";
  const auto& cs = c.coeffs();
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) s += "|";
    s += cs[i].get_str();
  }
  return s;
}

CycloElt cyclo_from_wire(const std::string& s) {
  if (s.rfind("m:", 0) != 0) fail(errc::corrupt_entry, "bad coefficient: " + s);
  size_t colon = s.find(':', 2);
  if (colon == std::string::npos)
    fail(errc::corrupt_entry, "bad coefficient: " + s);
  long mod = std::stol(s.substr(2, colon - 2));
  std::vector<mpq_class> cs;
  std::stringstream body(s.substr(colon + 1));
  std::string tok;
  while (std::getline(body, tok, '|')) {
    mpq_class q(tok);
    q.canonicalize();
    cs.push_back(std::move(q));
  }
  return CycloElt::from_coeffs(mod, std::move(cs));
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& rep,
                                      bool with_timestamp) {
  nlohmann::ordered_json j;
  j["experiment"] = rep.experiment;
  j["config"]["precision"] = rep.precision_bits;
  j["config"]["bound"] = rep.bound.get_str();
  j["config"]["m"] = rep.coeff_modulus;
  j["config"]["moduli"] = rep.moduli;
  j["hypothesis"]["pairwise"] = rep.hyp_pairwise;
  j["hypothesis"]["gcd"] = rep.hyp_gcd;
  j["subjects"] = nlohmann::ordered_json::array();
  for (const auto& s : rep.subjects) {
    nlohmann::ordered_json sj;
    sj["id"] = s.id;
    sj["kind"] = s.kind;
    sj["method"] = s.method;
    sj["value"] = value_to_json(s.value);
    sj["err"] = err_to_json(s.value);
    j["subjects"].push_back(std::move(sj));
  }
  j["certificates"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.certificates) {
    nlohmann::ordered_json cj;
    cj["kind"] = c.kind;
    cj["field_modulus"] = c.field_modulus;
    cj["coefficients"] = nlohmann::ordered_json::array();
    for (const auto& co : c.coefficients)
      cj["coefficients"].push_back(cyclo_to_wire(co));
    cj["residual"] = c.residual.to_decimal();
    cj["residual_err"] = wire_err(c.residual);
    cj["bound"] = c.bound.get_str();
    cj["precision"] = c.precision_bits;
    if (c.rank >= 0) cj["rank"] = c.rank;
    j["certificates"].push_back(std::move(cj));
  }
  j["notes"] = rep.notes;
  j["verdict"] = verdict_name(rep.verdict);
  // timing fields vary run to run; suppressing the timestamp suppresses
  // them all so identical configs give identical bytes
  if (with_timestamp) {
    j["wall_seconds"] = rep.wall_seconds;
    j["timestamp"] = utc_timestamp();
  }
  return j;
}

std::string report_to_csv(const VerificationReport& rep) {
  std::string out = "id,kind,method,re,im,re_err,im_err\n";
  for (const auto& s : rep.subjects) {
    out += s.id + "," + s.kind + "," + s.method + "," +
           s.value.re.to_decimal() + "," + s.value.im.to_decimal() + "," +
           std::to_string(wire_err(s.value.re)) + "," +
           std::to_string(wire_err(s.value.im)) + "\n";
  }
  return out;
}

std::string report_to_table(const VerificationReport& rep) {
  std::ostringstream out;
  out << "experiment: " << rep.experiment << "\n"
      << "verdict:    " << verdict_name(rep.verdict) << "\n"
      << "precision:  " << rep.precision_bits << " bits, bound "
      << rep.bound.get_str() << ", coefficients in Q(zeta_"
      << rep.coeff_modulus << ")\n"
      << "hypothesis: pairwise=" << (rep.hyp_pairwise ? "yes" : "no")
      << " gcd=" << (rep.hyp_gcd ? "yes" : "no") << "\n";
  if (!rep.subjects.empty()) {
    out << "subjects:\n";
    for (const auto& s : rep.subjects)
      out << "  " << s.id << " [" << s.method << "] " << s.value.re.to_double()
          << (s.value.im.sign() < 0 ? " - " : " + ")
          << std::abs(s.value.im.to_double()) << "i\n";
  }
  for (const auto& c : rep.certificates) {
    out << "certificate: " << c.kind;
    if (c.kind == "rank") out << " = " << c.rank;
    if (c.kind == "relation") {
      out << " [";
      for (size_t i = 0; i < c.coefficients.size(); ++i)
        out << (i ? ", " : "") << c.coefficients[i].to_string();
      out << "]";
    }
    out << " (residual " << c.residual.to_double() << ")\n";
  }
  for (const auto& n : rep.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string render_report(const VerificationReport& rep,
                          const std::string& format, bool with_timestamp) {
  if (format == "json") return report_to_json(rep, with_timestamp).dump(2) + "\n";
  if (format == "csv") return report_to_csv(rep);
  if (format == "table") return report_to_table(rep);
  fail(errc::usage, "unknown format: " + format);
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport rep;
  rep.experiment = j.at("experiment");
  rep.precision_bits = j.at("config").at("precision");
  rep.bound = mpz_class(j.at("config").at("bound").get<std::string>());
  rep.coeff_modulus = j.at("config").at("m");
  rep.moduli = j.at("config").at("moduli").get<std::vector<long>>();
  rep.hyp_pairwise = j.at("hypothesis").at("pairwise");
  rep.hyp_gcd = j.at("hypothesis").at("gcd");
  long prec = std::max(rep.precision_bits + 32, 96L);
  for (const auto& sj : j.at("subjects")) {
    Subject s;
    s.id = sj.at("id");
    s.kind = sj.at("kind");
    s.method = sj.at("method");
    s.value = value_from_json(sj.at("value"), sj.at("err"), prec);
    rep.subjects.push_back(std::move(s));
  }
  for (const auto& cj : j.at("certificates")) {
    Certificate c;
    c.kind = cj.at("kind");
    c.field_modulus = cj.at("field_modulus");
    for (const auto& co : cj.at("coefficients"))
      c.coefficients.push_back(cyclo_from_wire(co));
    c.residual = real_from_wire(cj.at("residual"), cj.at("residual_err"), prec);
    c.bound = mpz_class(cj.at("bound").get<std::string>());
    c.precision_bits = cj.at("precision");
    if (cj.contains("rank")) c.rank = cj.at("rank");
    rep.certificates.push_back(std::move(c));
  }
  if (j.contains("notes"))
    rep.notes = j.at("notes").get<std::vector<std::string>>();
  std::string v = j.at("verdict");
  rep.verdict = v == "consistent"  ? Verdict::consistent
                : v == "anomaly"   ? Verdict::anomaly
                                   : Verdict::undecided;
  if (j.contains("wall_seconds")) rep.wall_seconds = j.at("wall_seconds");
  return rep;
}

Verdict reverify_report(const nlohmann::ordered_json& j) {
  VerificationReport rep = report_from_json(j);
  std::vector<Complex> xs;
  for (const auto& s : rep.subjects) xs.push_back(s.value);

  bool any_relation = false;
  for (const auto& c : rep.certificates) {
    if (c.kind == "relation") {
      if (xs.size() != c.coefficients.size())
        fail(errc::corrupt_entry, "relation arity mismatch");
      PrecisionContext ctx(std::max(c.precision_bits, 128L));
      Real res = verify_relation(xs, c.coefficients, ctx);
      if (!res.abs_below_pow2(-c.precision_bits / 2))
        fail(errc::corrupt_entry, "relation certificate fails verification");
      any_relation = true;
    } else if (c.kind == "nonvanishing") {
      if (!(c.residual.sign() > 0))
        fail(errc::corrupt_entry, "non-vanishing certificate without margin");
    }
  }
  if (any_relation) return Verdict::anomaly;
  if (!rep.certificates.empty()) return Verdict::consistent;
  return rep.subjects.empty() ? Verdict::consistent : Verdict::undecided;
}

}  // namespace lcert
