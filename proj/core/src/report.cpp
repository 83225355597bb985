#include <sstream>

#include <json.hpp>

#include "polar/pipeline.hpp"

namespace polar {

using json = nlohmann::ordered_json;

namespace {

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

json coefficients(const UniPoly& p) { return rationals(p.coeffs()); }

json polys(const std::vector<UniPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(coefficients(p));
  return a;
}

json interval(const Rational& lo, const Rational& hi) {
  return json::array({to_string(lo), to_string(hi)});
}

json representation(const UnivariateRepresentation& ur) {
  json j;
  j["u_coeffs"] = rationals(ur.u_coeffs);
  j["q"] = coefficients(ur.q);
  j["p"] = polys(ur.p);
  j["rho"] = to_string(ur.rho);
  return j;
}

}  // namespace

std::string report_to_json(const SolveReport& r, bool include_timings) {
  json j;
  j["schema"] = "polar-point/1";
  json in;
  if (!r.input.text.empty()) in["text"] = r.input.text;
  in["variables"] = r.input.variables;
  in["slp_digest"] = r.slp_digest;
  in["n_vars"] = r.input.slp.n_vars();
  in["degree"] = r.metrics.degree;
  j["input"] = std::move(in);

  json change;
  change["level"] = r.change.level;
  change["seed"] = r.change.seed;
  change["height"] = r.change.height;
  json matrix = json::array();
  for (const auto& row : r.change.matrix()) matrix.push_back(rationals(row));
  change["matrix"] = std::move(matrix);
  j["coordinate_change"] = std::move(change);

  j["u_coeffs"] = rationals(r.real_part.u_coeffs);
  j["q"] = coefficients(r.solved.q);
  j["q_star"] = coefficients(r.split.q_star);
  j["p"] = polys(r.real_part.p);
  j["affine_degree"] = std::max(0, r.solved.q.degree());
  j["real_degree"] = std::max(0, r.split.q_star.degree());
  j["factors"] = {{"real", polys(r.split.kept)}, {"nonreal", polys(r.split.discarded)}};
  j["solved_representation"] = representation(r.solved);
  j["residual_zero"] = r.residual_zero;

  json profile = json::array();
  for (const auto& d : r.profile) {
    json e;
    e["level"] = d.level;
    e["delta"] = d.affine_degree;
    e["delta_star"] = d.real_degree;
    e["q"] = coefficients(d.q);
    e["q_star"] = coefficients(d.q_star);
    e["eta"] = rationals(d.eta);
    e["attempts"] = d.attempts;
    profile.push_back(std::move(e));
  }
  j["degree_profile"] = std::move(profile);

  j["precision"] = r.precision;
  json points = json::array();
  for (const auto& pt : r.points) {
    json e;
    e["root"] = interval(pt.root.lo, pt.root.hi);
    e["exact"] = pt.root.exact;
    json coords = json::array();
    for (const auto& c : pt.coords) coords.push_back(interval(c.lo, c.hi));
    e["coords"] = std::move(coords);
    e["decimal"] = pt.decimal;
    points.push_back(std::move(e));
  }
  j["points"] = std::move(points);

  if (r.coverage) {
    const auto& cov = *r.coverage;
    json c;
    json box = json::array();
    for (const auto& [lo, hi] : cov.box) box.push_back(interval(lo, hi));
    c["box"] = std::move(box);
    c["resolution"] = cov.resolution;
    c["components"] = cov.report.component_count;
    c["pass"] = cov.report.pass;
    json assign = json::array();
    for (const auto& a : cov.report.assignment) {
      if (a) {
        assign.push_back(*a);
      } else {
        assign.push_back(nullptr);
      }
    }
    c["assignment"] = std::move(assign);
    c["uncovered"] = cov.report.uncovered;
    if (!cov.report.note.empty()) c["note"] = cov.report.note;
    j["coverage"] = std::move(c);
  }
  j["notes"] = r.notes;

  const auto& m = r.metrics;
  j["metrics"] = {{"slp_size", m.slp_size},
                  {"nonscalar_size", m.nonscalar_size},
                  {"gradient_nonscalar_size", m.gradient_nonscalar_size},
                  {"bezout_bound", m.bezout_bound},
                  {"change_attempts", m.change_attempts},
                  {"form_attempts", m.form_attempts},
                  {"quotient_dimension", m.quotient_dimension},
                  {"rejections", m.rejections}};
  if (include_timings) {
    const auto& t = r.timings;
    j["timings"] = {{"solve_ms", t.solve_ms},     {"clean_ms", t.clean_ms},
                    {"extract_ms", t.extract_ms}, {"profile_ms", t.profile_ms},
                    {"oracle_ms", t.oracle_ms},   {"total_ms", t.total_ms}};
  }
  return j.dump(2);
}

std::string report_summary(const SolveReport& r) {
  std::ostringstream os;
  os << "n = " << r.input.slp.n_vars() << ", d = " << r.metrics.degree
     << ": deg q = " << std::max(0, r.solved.q.degree())
     << ", deg q* = " << std::max(0, r.split.q_star.degree()) << ", " << r.points.size()
     << " real point(s)\n";
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    os << "  point " << i << ": (";
    for (std::size_t k = 0; k < r.points[i].decimal.size(); ++k) {
      os << (k ? ", " : "") << r.points[i].decimal[k];
    }
    os << ")\n";
  }
  for (const auto& d : r.profile) {
    os << "  level " << d.level << ": delta = " << d.affine_degree
       << ", delta* = " << d.real_degree << "\n";
  }
  if (r.coverage) {
    os << "  coverage: " << (r.coverage->report.pass ? "pass" : "FAIL") << " ("
       << r.coverage->report.component_count << " component(s))\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace polar
