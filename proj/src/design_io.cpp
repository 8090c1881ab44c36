#include "projdes/design_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace projdes {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(size_t point, size_t coord, const std::string& what) {
  throw std::domain_error("point " + std::to_string(point) + ", coordinate " +
                          std::to_string(coord) + ": " + what);
}

enum class ScalarKind { plain, complex_pair, cyclo, quat };

ScalarKind classify(const json& v, size_t pi, size_t ci) {
  if (v.is_string() || v.is_number()) return ScalarKind::plain;
  if (v.is_object()) {
    if (v.contains("re") && v.contains("im") && v.size() == 2) return ScalarKind::complex_pair;
    if (v.contains("cyclo") && v.size() == 1) return ScalarKind::cyclo;
    if (v.contains("quat") && v.size() == 1) return ScalarKind::quat;
  }
  fail_at(pi, ci, "unrecognized scalar form " + v.dump());
}

Rational exact_component(const json& v, size_t pi, size_t ci) {
  try {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::exception& e) {
    fail_at(pi, ci, e.what());
  }
  fail_at(pi, ci, "exact backend needs string or integer components, got " + v.dump());
}

double float_component(const json& v, size_t pi, size_t ci) {
  try {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
      size_t used = 0;
      std::string s = v.get<std::string>();
      double out = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
      return out;
    }
  } catch (const std::exception& e) {
    fail_at(pi, ci, e.what());
  }
  fail_at(pi, ci, "float backend needs numeric or string components, got " + v.dump());
}

Cyclotomic parse_cyclo(const json& v, size_t pi, size_t ci) {
  const json& body = v.at("cyclo");
  if (!body.is_object() || !body.contains("order") || !body.contains("coeffs"))
    fail_at(pi, ci, "cyclo scalar needs {\"order\", \"coeffs\"}");
  long order = body.at("order").get<long>();
  if (order < 1) fail_at(pi, ci, "cyclo order must be >= 1");
  const json& coeffs = body.at("coeffs");
  if (!coeffs.is_array()) fail_at(pi, ci, "cyclo coeffs must be an array");
  if (static_cast<long>(coeffs.size()) > euler_phi(order))
    fail_at(pi, ci, "cyclo coeffs longer than phi(order)");
  std::vector<Rational> c;
  for (const json& e : coeffs) c.push_back(exact_component(e, pi, ci));
  return Cyclotomic::from_power_coeffs(order, std::move(c));
}

PointSet parse_exact(Field field, int n, const json& points) {
  // Survey scalar kinds to pick the backend.
  bool has_quat = false, has_cyclo = false, has_pair = false;
  long order = 0;
  for (size_t pi = 0; pi < points.size(); ++pi) {
    const json& pt = points[pi];
    for (size_t ci = 0; ci < pt.size(); ++ci) {
      switch (classify(pt[ci], pi, ci)) {
        case ScalarKind::plain: break;
        case ScalarKind::complex_pair: has_pair = true; break;
        case ScalarKind::quat: has_quat = true; break;
        case ScalarKind::cyclo: {
          has_cyclo = true;
          long o = pt[ci].at("cyclo").at("order").get<long>();
          if (order == 0) order = o;
          else if (order != o)
            fail_at(pi, ci, "mixed cyclotomic orders " + std::to_string(order) + " and " +
                                std::to_string(o));
          break;
        }
      }
    }
  }
  if (has_quat && (has_cyclo || has_pair))
    throw std::domain_error("mixed backends: quaternion and complex scalars in one file");

  if (has_quat) {
    PointSet::QuatPoints out;
    for (size_t pi = 0; pi < points.size(); ++pi) {
      std::vector<Quaternion<Rational>> row;
      for (size_t ci = 0; ci < points[pi].size(); ++ci) {
        const json& v = points[pi][ci];
        if (classify(v, pi, ci) == ScalarKind::plain) {
          row.push_back({exact_component(v, pi, ci), Rational(0), Rational(0), Rational(0)});
        } else {
          const json& q = v.at("quat");
          if (!q.is_array() || q.size() != 4) fail_at(pi, ci, "quat scalar needs 4 components");
          row.push_back({exact_component(q[0], pi, ci), exact_component(q[1], pi, ci),
                         exact_component(q[2], pi, ci), exact_component(q[3], pi, ci)});
        }
      }
      out.push_back(std::move(row));
    }
    return PointSet(field, n, std::move(out));
  }

  if (has_cyclo || has_pair) {
    if (has_pair) {
      if (order == 0) order = 4;
      else if (order % 4 != 0)
        throw std::domain_error(
            "mixed backends: {re, im} scalars need a cyclotomic order divisible by 4, got order " +
            std::to_string(order));
    }
    Cyclotomic i_unit = has_pair ? Cyclotomic::root_of_unity(order, order / 4) : Cyclotomic(order);
    PointSet::CycloPoints out;
    for (size_t pi = 0; pi < points.size(); ++pi) {
      std::vector<Cyclotomic> row;
      for (size_t ci = 0; ci < points[pi].size(); ++ci) {
        const json& v = points[pi][ci];
        switch (classify(v, pi, ci)) {
          case ScalarKind::plain:
            row.push_back(Cyclotomic(order, exact_component(v, pi, ci)));
            break;
          case ScalarKind::cyclo:
            row.push_back(parse_cyclo(v, pi, ci));
            break;
          case ScalarKind::complex_pair: {
            Cyclotomic re(order, exact_component(v.at("re"), pi, ci));
            Cyclotomic im(order, exact_component(v.at("im"), pi, ci));
            row.push_back(re + im * i_unit);
            break;
          }
          default:
            fail_at(pi, ci, "unexpected scalar kind");
        }
      }
      out.push_back(std::move(row));
    }
    return PointSet(field, n, std::move(out));
  }

  PointSet::RationalPoints out;
  for (size_t pi = 0; pi < points.size(); ++pi) {
    std::vector<Rational> row;
    for (size_t ci = 0; ci < points[pi].size(); ++ci)
      row.push_back(exact_component(points[pi][ci], pi, ci));
    out.push_back(std::move(row));
  }
  return PointSet(field, n, std::move(out));
}

PointSet parse_float(Field field, int n, const json& points) {
  bool has_quat = false;
  for (size_t pi = 0; pi < points.size(); ++pi)
    for (size_t ci = 0; ci < points[pi].size(); ++ci)
      if (classify(points[pi][ci], pi, ci) == ScalarKind::quat) has_quat = true;

  if (has_quat) {
    PointSet::FloatQuatPoints out;
    for (size_t pi = 0; pi < points.size(); ++pi) {
      std::vector<Quaternion<double>> row;
      for (size_t ci = 0; ci < points[pi].size(); ++ci) {
        const json& v = points[pi][ci];
        switch (classify(v, pi, ci)) {
          case ScalarKind::plain:
            row.push_back({float_component(v, pi, ci), 0.0, 0.0, 0.0});
            break;
          case ScalarKind::quat: {
            const json& q = v.at("quat");
            if (!q.is_array() || q.size() != 4) fail_at(pi, ci, "quat scalar needs 4 components");
            row.push_back({float_component(q[0], pi, ci), float_component(q[1], pi, ci),
                           float_component(q[2], pi, ci), float_component(q[3], pi, ci)});
            break;
          }
          default:
            fail_at(pi, ci, "mixed backends: quaternion file may not contain complex scalars");
        }
      }
      out.push_back(std::move(row));
    }
    return PointSet(field, n, std::move(out));
  }

  PointSet::ComplexPoints out;
  for (size_t pi = 0; pi < points.size(); ++pi) {
    std::vector<std::complex<double>> row;
    for (size_t ci = 0; ci < points[pi].size(); ++ci) {
      const json& v = points[pi][ci];
      switch (classify(v, pi, ci)) {
        case ScalarKind::plain:
          row.emplace_back(float_component(v, pi, ci), 0.0);
          break;
        case ScalarKind::complex_pair:
          row.emplace_back(float_component(v.at("re"), pi, ci), float_component(v.at("im"), pi, ci));
          break;
        case ScalarKind::cyclo: {
          Cyclotomic z = parse_cyclo(v, pi, ci);
          row.push_back(z.embed());
          break;
        }
        default:
          fail_at(pi, ci, "unexpected scalar kind");
      }
    }
    out.push_back(std::move(row));
  }
  return PointSet(field, n, std::move(out));
}

}  // namespace

PointSet design_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::domain_error(std::string("design file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::domain_error("design file must be a JSON object");
  for (const char* key : {"field", "n", "backend", "points"})
    if (!doc.contains(key)) throw std::domain_error(std::string("design file missing key \"") + key + "\"");

  std::string field_str = doc.at("field").get<std::string>();
  auto field = field_from_name(field_str);
  if (!field) throw std::domain_error("unknown field \"" + field_str + "\" (expected R, C or H)");
  if (!doc.at("n").is_number_integer()) throw std::domain_error("\"n\" must be an integer");
  int n = doc.at("n").get<int>();
  std::string backend = doc.at("backend").get<std::string>();
  if (backend != "exact" && backend != "float")
    throw std::domain_error("unknown backend \"" + backend + "\" (expected exact or float)");
  const json& points = doc.at("points");
  if (!points.is_array() || points.empty())
    throw std::domain_error("\"points\" must be a non-empty array");
  for (size_t pi = 0; pi < points.size(); ++pi)
    if (!points[pi].is_array()) throw std::domain_error("point " + std::to_string(pi) + " is not an array");

  return backend == "exact" ? parse_exact(*field, n, points) : parse_float(*field, n, points);
}

std::string design_to_json(const PointSet& ps) {
  json doc;
  doc["field"] = field_name(ps.field());
  doc["n"] = ps.n();
  doc["backend"] = ps.exact() ? "exact" : "float";
  json points = json::array();

  if (const auto* rp = std::get_if<PointSet::RationalPoints>(&ps.data())) {
    for (const auto& pt : *rp) {
      json row = json::array();
      for (const Rational& c : pt) row.push_back(c.str());
      points.push_back(std::move(row));
    }
  } else if (const auto* cp = std::get_if<PointSet::CycloPoints>(&ps.data())) {
    for (const auto& pt : *cp) {
      json row = json::array();
      for (const Cyclotomic& c : pt) {
        json coeffs = json::array();
        for (const Rational& x : c.coeffs()) coeffs.push_back(x.str());
        row.push_back(json{{"cyclo", {{"order", c.order()}, {"coeffs", std::move(coeffs)}}}});
      }
      points.push_back(std::move(row));
    }
  } else if (const auto* qp = std::get_if<PointSet::QuatPoints>(&ps.data())) {
    for (const auto& pt : *qp) {
      json row = json::array();
      for (const Quaternion<Rational>& c : pt)
        row.push_back(json{{"quat", {c.w.str(), c.x.str(), c.y.str(), c.z.str()}}});
      points.push_back(std::move(row));
    }
  } else if (const auto* fp = std::get_if<PointSet::ComplexPoints>(&ps.data())) {
    for (const auto& pt : *fp) {
      json row = json::array();
      for (const std::complex<double>& c : pt)
        row.push_back(json{{"re", c.real()}, {"im", c.imag()}});
      points.push_back(std::move(row));
    }
  } else {
    const auto& fq = std::get<PointSet::FloatQuatPoints>(ps.data());
    for (const auto& pt : fq) {
      json row = json::array();
      for (const Quaternion<double>& c : pt) row.push_back(json{{"quat", {c.w, c.x, c.y, c.z}}});
      points.push_back(std::move(row));
    }
  }
  doc["points"] = std::move(points);
  return doc.dump(2) + "\n";
}

PointSet load_design(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::domain_error("cannot open design file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return design_from_json(buf.str());
}

void save_design(const PointSet& ps, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::domain_error("cannot write design file: " + path);
  out << design_to_json(ps);
  if (!out) throw std::domain_error("failed writing design file: " + path);
}

}  // namespace projdes
