#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projdes/bma.hpp"
#include "projdes/census.hpp"
#include "projdes/designs.hpp"

namespace projdes {

enum class OutputFormat { text, json, csv };

std::optional<OutputFormat> format_from_name(const std::string& name);
const char* format_name(OutputFormat f);

/// "exact ~ approx" display: canonical exact string when available plus a
/// 15-digit float image, e.g. "(5-sqrt5)/10 ~ 0.276393202250021".
std::string scalar_text(const RealScalar& v);

struct VerifyOutcome {
  int t = 0;
  DesignVerdict verdict;
  DesignVerdict averaging;
  bool has_certificate = false;  // certificate is computed only for designs
  TightnessCertificate certificate;
};

/// Full verification pipeline: strength check, moment cross-check and,
/// when the design verifies, the tightness certificate. tol <= 0 selects
/// the per-stage defaults (1e-8 verdicts, 1e-9 certificate).
VerifyOutcome run_verify(const PointSet& ps, int t, double tol = 0.0);
std::string format_verify(const VerifyOutcome& out, OutputFormat format);

struct BmaOutcome {
  BoseMesnerAlgebra algebra;
  MultTableReport mult;
  IdempotentReport idempotents;
  bool has_etrace = false;  // odd t only
  ETraceComparison etrace;
  bool ok = false;
};

BmaOutcome run_bma(const PointSet& ps, int t, double tol = 0.0);
std::string format_bma(const BmaOutcome& out, OutputFormat format);

/// Fixed columns: field,n,s,t,rank_L1,rank_Ls,equal,bound.
std::string format_census(const std::vector<CensusRow>& rows, OutputFormat format);
std::string format_rationality(const std::vector<RationalityRow>& rows, OutputFormat format);

struct BoundInfo {
  Field field = Field::R;
  int n = 1;
  int t = 1;
  Rational bound;
  RationalPolynomial annihilator;
  TightAngleSet angles;
};

BoundInfo run_bound(Field field, int n, int t);
std::string format_bound(const BoundInfo& info, OutputFormat format);

struct DesignInfo {
  Field field = Field::R;
  int n = 1;
  int size = 0;
  Backend backend = Backend::exact_rational;
  AngleSet angles;
  int t_candidate = 0;  // s + e from the angle set
  Rational bound;       // cardinality bound at that strength
  bool cardinality_match = false;
};

DesignInfo design_info(const PointSet& ps, double tol = 0.0);
std::string format_design_info(const DesignInfo& info, OutputFormat format);

}  // namespace projdes
