#include "kobgeo/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kobgeo {

namespace {

using nlohmann::json;

std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string point(const CVec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += "; ";
    s += num(v(i).real()) + "," + num(v(i).imag());
  }
  return s + ")";
}

json real_json(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

json cvec_json(const CVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({v(i).real(), v(i).imag()});
  return a;
}

}  // namespace

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::fail:
      return 1;
    case Verdict::degenerate_pass:
      return 2;
  }
  return 1;
}

std::string format_report_text(const VerificationReport& r) {
  std::ostringstream o;
  const SamplingConfig& c = r.config;
  o << "verdict: " << verdict_name(r.verdict) << "\n";
  o << "max_deviation: " << num(r.max_deviation) << "\n";
  o << "witness: geodesic " << r.witness.geodesic << ", t = " << num(r.witness.t)
    << ", image = " << point(r.witness.image) << "\n";
  o << "sampling: geodesics " << c.num_geodesics << ", points " << c.points_per_geodesic
    << ", range " << num(c.range) << ", pass_tol " << num(c.pass_tol) << ", degenerate_tol "
    << num(c.degenerate_tol) << "\n";
  o << "id\tdeviation\tin_target\tonto\tdegenerate\tfitted_start\tfitted_end\n";
  for (const GeodesicResult& g : r.per_geodesic) {
    o << g.id << "\t" << num(g.deviation) << "\t" << (g.in_target ? "yes" : "no") << "\t"
      << (g.onto ? "yes" : "no") << "\t" << (g.degenerate ? "yes" : "no") << "\t";
    if (g.fitted) {
      o << point(g.fitted->start()) << "\t" << point(g.fitted->end());
    } else {
      o << "-\t-";
    }
    o << "\n";
  }
  return o.str();
}

std::string format_report_structured(const VerificationReport& r) {
  const SamplingConfig& c = r.config;
  json rows = json::array();
  for (const GeodesicResult& g : r.per_geodesic) {
    json fitted = nullptr;
    if (g.fitted) {
      fitted = {{"start", cvec_json(g.fitted->start())}, {"end", cvec_json(g.fitted->end())}};
    }
    rows.push_back({{"id", g.id},
                    {"deviation", real_json(g.deviation)},
                    {"in_target", g.in_target},
                    {"onto", g.onto},
                    {"degenerate", g.degenerate},
                    {"escaped", g.escaped},
                    {"fitted", fitted}});
  }
  const json doc = {
      {"verdict", verdict_name(r.verdict)},
      {"max_deviation", real_json(r.max_deviation)},
      {"witness",
       {{"geodesic", r.witness.geodesic}, {"t", r.witness.t}, {"image", cvec_json(r.witness.image)}}},
      {"sampling",
       {{"num_geodesics", c.num_geodesics},
        {"points_per_geodesic", c.points_per_geodesic},
        {"range", c.range},
        {"pass_tol", c.pass_tol},
        {"degenerate_tol", c.degenerate_tol}}},
      {"per_geodesic", rows},
  };
  return doc.dump(2) + "\n";
}

}  // namespace kobgeo
