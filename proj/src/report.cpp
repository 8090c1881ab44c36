#include "projdes/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace projdes {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* passfail(bool b) { return b ? "pass" : "FAIL"; }

json residual_json(const DegreeResidual& r) {
  return json{{"degree", r.degree}, {"exact", r.exact}, {"zero", r.zero}, {"residual", r.residual}};
}

std::string residual_text(const DegreeResidual& r) {
  std::ostringstream os;
  os << "  degree " << r.degree << ": ";
  if (r.exact)
    os << (r.zero ? "sum zero (exact)" : "sum NONZERO (exact), |value| = " + fmt_double(r.residual));
  else
    os << "residual " << fmt_double(r.residual) << " (" << (r.zero ? "pass" : "FAIL") << ")";
  return os.str();
}

json scalar_json(const RealScalar& v) {
  json j;
  j["approx"] = v.to_double();
  if (v.is_exact()) j["exact"] = v.str();
  return j;
}

json angles_json(const std::vector<RealScalar>& angles) {
  json arr = json::array();
  for (const RealScalar& a : angles) arr.push_back(scalar_json(a));
  return arr;
}

std::string angles_text(const std::vector<RealScalar>& angles) {
  std::vector<std::string> parts;
  for (const RealScalar& a : angles) parts.push_back(scalar_text(a));
  return "{" + join(parts, ", ") + "}";
}

json certificate_json(const TightnessCertificate& c) {
  json j;
  j["s"] = c.s;
  j["e"] = c.e;
  j["parity"] = c.eps;
  j["t_max"] = c.t_max;
  j["bound"] = c.bound.str();
  j["cardinality_match"] = c.cardinality_match;
  j["annihilator"] = c.annihilator.str("xi");
  j["angles_annihilate"] = c.angles_annihilate;
  j["tight"] = c.tight;
  j["angles"] = angles_json(c.angles);
  return j;
}

void certificate_text(std::ostringstream& os, const TightnessCertificate& c) {
  os << "certificate:\n";
  os << "  angle set: " << angles_text(c.angles) << "\n";
  os << "  s = " << c.s << ", e = " << c.e << ", parity = " << c.eps << "\n";
  os << "  max verified strength: " << c.t_max << "\n";
  os << "  cardinality bound at strength " << c.s + c.e << ": " << c.bound.str()
     << (c.cardinality_match ? " (|X| matches)" : " (|X| DIFFERS)") << "\n";
  os << "  annihilator: " << c.annihilator.str("xi") << "\n";
  os << "  annihilator vanishes on angle set: " << yesno(c.angles_annihilate) << "\n";
  os << "  tight: " << yesno(c.tight) << "\n";
}

void require_not_csv(OutputFormat format, const char* command) {
  if (format == OutputFormat::csv)
    throw std::invalid_argument(std::string("csv output is not defined for ") + command);
}

}  // namespace

std::optional<OutputFormat> format_from_name(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "?";
}

std::string scalar_text(const RealScalar& v) {
  if (!v.is_exact()) return fmt_double(v.to_double());
  return v.str() + " ~ " + fmt_double(v.to_double());
}

VerifyOutcome run_verify(const PointSet& ps, int t, double tol) {
  const double verdict_tol = tol > 0 ? tol : 1e-8;
  const double cert_tol = tol > 0 ? tol : 1e-9;
  VerifyOutcome out;
  out.t = t;
  out.verdict = is_t_design(ps, t, verdict_tol);
  out.averaging = averaging_check(ps, t, verdict_tol);
  if (out.verdict.is_design) {
    out.certificate = tightness(ps, t, cert_tol);
    out.has_certificate = true;
  }
  return out;
}

std::string format_verify(const VerifyOutcome& out, OutputFormat format) {
  require_not_csv(format, "verify");
  if (format == OutputFormat::json) {
    json j;
    j["command"] = "verify";
    j["t"] = out.t;
    j["is_design"] = out.verdict.is_design;
    j["residuals"] = json::array();
    for (const DegreeResidual& r : out.verdict.residuals) j["residuals"].push_back(residual_json(r));
    j["averaging"] = json::array();
    for (const DegreeResidual& r : out.averaging.residuals) j["averaging"].push_back(residual_json(r));
    j["averaging_pass"] = out.averaging.is_design;
    if (out.has_certificate) j["certificate"] = certificate_json(out.certificate);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "verify: strength t = " << out.t << "\n";
  os << "design: " << yesno(out.verdict.is_design) << "\n";
  for (const DegreeResidual& r : out.verdict.residuals) os << residual_text(r) << "\n";
  os << "averaging check: " << passfail(out.averaging.is_design) << "\n";
  if (out.has_certificate) certificate_text(os, out.certificate);
  return os.str();
}

BmaOutcome run_bma(const PointSet& ps, int t, double tol) {
  const double build_tol = tol > 0 ? tol : 1e-8;
  BoseMesnerAlgebra alg = build_algebra(ps, t, build_tol);
  MultTableReport mult = verify_mult_table(alg, build_tol);
  IdempotentReport idem = verify_idempotents(alg, build_tol);
  BmaOutcome out{std::move(alg), mult, idem};
  if (out.algebra.params.eps == 1) {
    out.etrace = e_trace_comparison(out.algebra.params);
    out.has_etrace = true;
  }
  out.ok = out.mult.ok && out.idempotents.ok;
  return out;
}

std::string format_bma(const BmaOutcome& out, OutputFormat format) {
  require_not_csv(format, "bma");
  const BoseMesnerAlgebra& alg = out.algebra;
  if (format == OutputFormat::json) {
    json j;
    j["command"] = "bma";
    j["t"] = alg.params.t;
    j["s"] = alg.params.s;
    j["size"] = alg.size;
    j["exact"] = alg.exact;
    j["angles"] = angles_json(alg.angles);
    j["rho"] = json::array();
    for (const RealScalar& r : alg.rho) j["rho"].push_back(scalar_json(r));
    j["chi"] = json::array();
    for (const Rational& c : alg.chi) j["chi"].push_back(c.str());
    if (alg.lambda_s) j["lambda_s"] = scalar_json(*alg.lambda_s);
    j["ranks"] = alg.ranks;
    j["traces"] = json::array();
    for (const RealScalar& tr : alg.traces) j["traces"].push_back(scalar_json(tr));
    j["rank_sum"] = out.idempotents.rank_sum;
    json mult;
    mult["ok"] = out.mult.ok;
    mult["max_residual"] = out.mult.max_residual;
    if (out.mult.witness)
      mult["witness"] = {{"i", out.mult.witness->i},
                         {"k", out.mult.witness->k},
                         {"x", out.mult.witness->x},
                         {"y", out.mult.witness->y}};
    j["mult_table"] = mult;
    j["idempotents"] = {{"ok", out.idempotents.ok},
                        {"failures", out.idempotents.failures},
                        {"max_residual", out.idempotents.max_residual}};
    if (out.has_etrace)
      j["e_trace"] = {{"q_s_at_1", out.etrace.q_s_at_1.str()},
                      {"rank_ls", out.etrace.rank_ls.str()},
                      {"differs", out.etrace.differs}};
    j["ok"] = out.ok;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "algebra: t = " << alg.params.t << ", s = " << alg.params.s << ", |X| = " << alg.size
     << ", backend " << (alg.exact ? "exact" : "float") << "\n";
  os << "angle set: " << angles_text(alg.angles) << "\n";
  {
    std::vector<std::string> parts;
    for (const RealScalar& r : alg.rho) parts.push_back(scalar_text(r));
    os << "rho: " << join(parts, ", ") << "\n";
  }
  {
    std::vector<std::string> parts;
    for (const Rational& c : alg.chi) parts.push_back(c.str());
    os << "chi: " << join(parts, ", ") << "\n";
  }
  if (alg.lambda_s) os << "lambda_s: " << scalar_text(*alg.lambda_s) << "\n";
  {
    std::vector<std::string> parts;
    for (int r : alg.ranks) parts.push_back(std::to_string(r));
    os << "ranks: " << join(parts, ", ") << " (sum " << out.idempotents.rank_sum << ")\n";
  }
  os << "multiplication table: " << passfail(out.mult.ok);
  if (!out.mult.ok && out.mult.witness)
    os << " at M_" << out.mult.witness->i << " * M_" << out.mult.witness->k << ", entry ("
       << out.mult.witness->x << ", " << out.mult.witness->y << ")";
  if (!alg.exact) os << " (max residual " << fmt_double(out.mult.max_residual) << ")";
  os << "\n";
  os << "idempotents: " << passfail(out.idempotents.ok);
  if (!out.idempotents.failures.empty()) os << " [" << join(out.idempotents.failures, "; ") << "]";
  os << "\n";
  if (out.has_etrace)
    os << "series trace vs rank: Q_s(1) = " << out.etrace.q_s_at_1.str()
       << ", rank L_s = " << out.etrace.rank_ls.str()
       << ", differs: " << yesno(out.etrace.differs) << "\n";
  os << "overall: " << passfail(out.ok) << "\n";
  return os.str();
}

std::string format_census(const std::vector<CensusRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    json arr = json::array();
    for (const CensusRow& r : rows)
      arr.push_back({{"field", field_name(r.field)},
                     {"n", r.n},
                     {"s", r.s},
                     {"t", r.t},
                     {"rank_L1", r.rank_L1.str()},
                     {"rank_Ls", r.rank_Ls.str()},
                     {"equal", r.equal},
                     {"bound", r.bound.str()}});
    json j;
    j["command"] = "census";
    j["rows"] = arr;
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "field,n,s,t,rank_L1,rank_Ls,equal,bound\n";
    for (const CensusRow& r : rows)
      os << field_name(r.field) << "," << r.n << "," << r.s << "," << r.t << ","
         << r.rank_L1.str() << "," << r.rank_Ls.str() << "," << (r.equal ? "true" : "false")
         << "," << r.bound.str() << "\n";
    return os.str();
  }
  std::ostringstream os;
  os << "field  n   s   t   rank_L1       rank_Ls       equal  bound\n";
  for (const CensusRow& r : rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-5s  %-3d %-3d %-3d %-13s %-13s %-6s %s\n",
                  field_name(r.field), r.n, r.s, r.t, r.rank_L1.str().c_str(),
                  r.rank_Ls.str().c_str(), r.equal ? "true" : "false", r.bound.str().c_str());
    os << line;
  }
  return os.str();
}

std::string format_rationality(const std::vector<RationalityRow>& rows, OutputFormat format) {
  if (format == OutputFormat::json) {
    json arr = json::array();
    for (const RationalityRow& r : rows) arr.push_back({{"t", r.t}, {"rational", r.rational}});
    json j;
    j["command"] = "rationality";
    j["rows"] = arr;
    return j.dump(2) + "\n";
  }
  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "t,rational\n";
    for (const RationalityRow& r : rows)
      os << r.t << "," << (r.rational ? "true" : "false") << "\n";
    return os.str();
  }
  std::ostringstream os;
  for (const RationalityRow& r : rows)
    os << "t = " << r.t << ": " << (r.rational ? "rational" : "irrational") << "\n";
  return os.str();
}

BoundInfo run_bound(Field field, int n, int t) {
  DesignParams p(field, n, t);
  BoundInfo info;
  info.field = field;
  info.n = n;
  info.t = t;
  info.bound = design_bound(p);
  info.annihilator =
      R_poly(p) * RationalPolynomial::monomial(Rational(1), p.eps, PolyVar::xi);
  info.angles = tight_angle_set(p);
  return info;
}

std::string format_bound(const BoundInfo& info, OutputFormat format) {
  require_not_csv(format, "bound");
  const bool have_exact = info.angles.exact_roots.size() == info.angles.roots.size();
  if (format == OutputFormat::json) {
    json j;
    j["command"] = "bound";
    j["field"] = field_name(info.field);
    j["n"] = info.n;
    j["t"] = info.t;
    j["bound"] = info.bound.str();
    j["annihilator"] = info.annihilator.str("xi");
    j["roots"] = json::array();
    for (size_t i = 0; i < info.angles.roots.size(); ++i) {
      json root;
      root["approx"] = info.angles.roots[i];
      if (have_exact) root["exact"] = info.angles.exact_roots[i].str();
      j["roots"].push_back(root);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "field " << field_name(info.field) << ", n = " << info.n << ", t = " << info.t << "\n";
  os << "cardinality bound: " << info.bound.str() << "\n";
  os << "annihilator: " << info.annihilator.str("xi") << "\n";
  os << "angle roots:";
  for (size_t i = 0; i < info.angles.roots.size(); ++i) {
    os << (i ? ", " : " ");
    if (have_exact)
      os << info.angles.exact_roots[i].str() << " ~ " << fmt_double(info.angles.roots[i]);
    else
      os << fmt_double(info.angles.roots[i]);
  }
  os << "\n";
  return os.str();
}

DesignInfo design_info(const PointSet& ps, double tol) {
  const double angle_tol = tol > 0 ? tol : 1e-9;
  DesignInfo info;
  info.field = ps.field();
  info.n = ps.n();
  info.size = ps.size();
  info.backend = ps.backend();
  info.angles = angle_set(ps, angle_tol);
  info.t_candidate = info.angles.s + info.angles.e;
  info.bound = design_bound(DesignParams(ps.field(), ps.n(), info.t_candidate));
  info.cardinality_match = Rational(static_cast<long>(info.size)) == info.bound;
  return info;
}

std::string format_design_info(const DesignInfo& info, OutputFormat format) {
  require_not_csv(format, "design info");
  if (format == OutputFormat::json) {
    json j;
    j["command"] = "design-info";
    j["field"] = field_name(info.field);
    j["n"] = info.n;
    j["size"] = info.size;
    j["backend"] = backend_name(info.backend);
    j["angles"] = angles_json(info.angles.values);
    j["s"] = info.angles.s;
    j["e"] = info.angles.e;
    j["parity"] = info.angles.eps;
    j["t_candidate"] = info.t_candidate;
    j["bound"] = info.bound.str();
    j["cardinality_match"] = info.cardinality_match;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "field " << field_name(info.field) << ", n = " << info.n << ", |X| = " << info.size
     << ", backend " << backend_name(info.backend) << "\n";
  os << "angle set: " << angles_text(info.angles.values) << "\n";
  os << "s = " << info.angles.s << ", e = " << info.angles.e << ", parity = " << info.angles.eps
     << "\n";
  os << "candidate strength s + e = " << info.t_candidate << "\n";
  os << "cardinality bound at that strength: " << info.bound.str()
     << (info.cardinality_match ? " (|X| matches)" : " (|X| differs)") << "\n";
  return os.str();
}

}  // namespace projdes
