#include "projdes/projdes.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "projdes/design_io.hpp"
#include "projdes/designs.hpp"
#include "projdes/report.hpp"

using namespace projdes;

struct pd_design {
  PointSet ps;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Runs fn, translating exceptions to status codes. fn returns a pd_status
/// itself so that check-style calls can yield PD_FAIL.
template <typename Fn>
pd_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return PD_EINTERNAL;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return PD_EINVAL;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return PD_EINVAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return PD_EINTERNAL;
  } catch (...) {
    set_error("unknown error");
    return PD_EINTERNAL;
  }
}

pd_status parse_format(const char* name, OutputFormat* out) {
  std::string text = name ? name : "text";
  auto f = format_from_name(text);
  if (!f) {
    set_error("unknown output format: " + text);
    return PD_EINVAL;
  }
  *out = *f;
  return PD_OK;
}

pd_status require(bool cond, const char* msg) {
  if (cond) return PD_OK;
  set_error(msg);
  return PD_EINVAL;
}

void emit(char** slot, const std::string& text) {
  if (slot) *slot = dup_string(text);
}

}  // namespace

extern "C" {

const char* pd_version(void) { return "0.1.0"; }

const char* pd_last_error(void) { return g_last_error.c_str(); }

void pd_string_free(char* s) { std::free(s); }

void pd_design_free(pd_design* d) { delete d; }

pd_status pd_design_load(const char* path, pd_design** out) {
  if (pd_status st = require(path && out, "pd_design_load: NULL argument"); st != PD_OK) return st;
  return guarded([&] {
    *out = new pd_design{load_design(path)};
    return PD_OK;
  });
}

pd_status pd_design_from_json(const char* text, pd_design** out) {
  if (pd_status st = require(text && out, "pd_design_from_json: NULL argument"); st != PD_OK)
    return st;
  return guarded([&] {
    *out = new pd_design{design_from_json(text)};
    return PD_OK;
  });
}

pd_status pd_design_save(const pd_design* d, const char* path) {
  if (pd_status st = require(d && path, "pd_design_save: NULL argument"); st != PD_OK) return st;
  return guarded([&] {
    save_design(d->ps, path);
    return PD_OK;
  });
}

pd_status pd_design_to_json(const pd_design* d, char** out) {
  if (pd_status st = require(d && out, "pd_design_to_json: NULL argument"); st != PD_OK) return st;
  return guarded([&] {
    *out = dup_string(design_to_json(d->ps));
    return PD_OK;
  });
}

pd_status pd_design_construct(const char* which, int t, pd_design** out) {
  if (pd_status st = require(which && out, "pd_design_construct: NULL argument"); st != PD_OK)
    return st;
  return guarded([&]() -> pd_status {
    std::string name = which;
    if (name == "cp1-5design") {
      *out = new pd_design{construct_cp1_5design()};
      return PD_OK;
    }
    if (name == "rp1-polygon") {
      *out = new pd_design{construct_rp1_polygon(t)};
      return PD_OK;
    }
    set_error("unknown construction: " + name);
    return PD_EINVAL;
  });
}

pd_status pd_design_to_float(const pd_design* d, pd_design** out) {
  if (pd_status st = require(d && out, "pd_design_to_float: NULL argument"); st != PD_OK)
    return st;
  return guarded([&] {
    *out = new pd_design{d->ps.to_float()};
    return PD_OK;
  });
}

int pd_design_size(const pd_design* d) { return d ? d->ps.size() : -1; }

pd_status pd_verify(const pd_design* d, int t, double tol, const char* format, int* verified,
                    char** report) {
  if (pd_status st = require(d != nullptr, "pd_verify: NULL design"); st != PD_OK) return st;
  OutputFormat f;
  if (pd_status st = parse_format(format, &f); st != PD_OK) return st;
  return guarded([&]() -> pd_status {
    VerifyOutcome out = run_verify(d->ps, t, tol);
    emit(report, format_verify(out, f));
    if (verified) *verified = out.verdict.is_design ? 1 : 0;
    return out.verdict.is_design ? PD_OK : PD_FAIL;
  });
}

pd_status pd_bma(const pd_design* d, int t, double tol, const char* format, int* ok,
                 char** report) {
  if (pd_status st = require(d != nullptr, "pd_bma: NULL design"); st != PD_OK) return st;
  OutputFormat f;
  if (pd_status st = parse_format(format, &f); st != PD_OK) return st;
  return guarded([&]() -> pd_status {
    BmaOutcome out = run_bma(d->ps, t, tol);
    emit(report, format_bma(out, f));
    if (ok) *ok = out.ok ? 1 : 0;
    return out.ok ? PD_OK : PD_FAIL;
  });
}

pd_status pd_census(const char* fields, int n_max, int s_max, int jobs, const char* format,
                    char** report) {
  OutputFormat f;
  if (pd_status st = parse_format(format, &f); st != PD_OK) return st;
  return guarded([&]() -> pd_status {
    std::vector<Field> list;
    std::string names = fields ? fields : "RCH";
    for (char c : names) {
      auto fld = field_from_name(std::string(1, c));
      if (!fld) {
        set_error(std::string("unknown field in census selection: ") + c);
        return PD_EINVAL;
      }
      list.push_back(*fld);
    }
    emit(report, format_census(sweep(list, n_max, s_max, jobs), f));
    return PD_OK;
  });
}

pd_status pd_rationality(int t_max, const char* format, char** report) {
  OutputFormat f;
  if (pd_status st = parse_format(format, &f); st != PD_OK) return st;
  return guarded([&] {
    emit(report, format_rationality(rationality_table(t_max), f));
    return PD_OK;
  });
}

pd_status pd_bound(const char* field, int n, int t, const char* format, char** report) {
  if (pd_status st = require(field != nullptr, "pd_bound: NULL field"); st != PD_OK) return st;
  OutputFormat f;
  if (pd_status st = parse_format(format, &f); st != PD_OK) return st;
  return guarded([&]() -> pd_status {
    auto fld = field_from_name(field);
    if (!fld) {
      set_error(std::string("unknown field: ") + field);
      return PD_EINVAL;
    }
    emit(report, format_bound(run_bound(*fld, n, t), f));
    return PD_OK;
  });
}

pd_status pd_design_info(const pd_design* d, double tol, const char* format, char** report) {
  if (pd_status st = require(d != nullptr, "pd_design_info: NULL design"); st != PD_OK) return st;
  OutputFormat f;
  if (pd_status st = parse_format(format, &f); st != PD_OK) return st;
  return guarded([&] {
    emit(report, format_design_info(design_info(d->ps, tol), f));
    return PD_OK;
  });
}

}  // extern "C"
