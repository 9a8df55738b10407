#include "kobgeo/map_io.hpp"

#include <set>
#include <variant>

#include <nlohmann/json.hpp>

#include "kobgeo/errors.hpp"

namespace kobgeo {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Writing

json cpx_json(Cpx z) { return json::array({z.real(), z.imag()}); }

json cvec_json(const CVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(cpx_json(v(i)));
  return a;
}

json terms_json(const std::vector<PolyTerm>& terms) {
  json a = json::array();
  for (const PolyTerm& t : terms) {
    a.push_back({{"out", t.out}, {"exps", t.exps}, {"coef", cpx_json(t.coef)}});
  }
  return a;
}

json node_json(const HoloMap& f) {
  json params = json::object();
  json children = json::array();
  std::visit(Overloaded{
                 [&](const HoloMap::Constant& c) { params["value"] = cvec_json(c.value); },
                 [&](const HoloMap::Power& p) {
                   params["alpha"] = cpx_json(p.alpha);
                   params["n"] = p.n;
                 },
                 [&](const DiscMobius& m) {
                   params["a"] = cpx_json(m.center());
                   params["theta"] = m.theta();
                 },
                 [&](const HoloMap::BoundaryContraction& h) { params["C"] = h.c; },
                 [&](const HoloMap::CayleyDisc&) {},
                 [&](const HoloMap::CayleyDiscInv&) {},
                 [&](const HoloMap::ExpFamily& e) {
                   params["a"] = e.a;
                   params["beta"] = cpx_json(e.beta);
                 },
                 [&](const HoloMap::HomPolyNode& h) {
                   params["dim_in"] = h.poly.dim_in();
                   params["dim_out"] = h.poly.dim_out();
                   params["degree"] = h.poly.degree();
                   params["terms"] = terms_json(h.poly.terms());
                 },
                 [&](const BallAutomorphism& m) {
                   params["a"] = cvec_json(m.center());
                   json rows = json::array();
                   for (Eigen::Index r = 0; r < m.unitary().rows(); ++r) {
                     rows.push_back(cvec_json(m.unitary().row(r).transpose()));
                   }
                   params["U"] = rows;
                 },
                 [&](const HoloMap::CayleyBall&) {},
                 [&](const HoloMap::CayleyBallInv&) {},
                 [&](const HoloMap::SiegelAffine& s) {
                   params["dim"] = s.fp.dim_in() + 1;
                   params["m"] = s.m;
                   params["b"] = terms_json(s.b.terms());
                   params["Fp"] = terms_json(s.fp.terms());
                 },
                 [&](const HoloMap::Polynomial& p) {
                   params["dim_in"] = p.map.dim_in();
                   params["dim_out"] = p.map.dim_out();
                   params["terms"] = terms_json(p.map.terms());
                 },
                 [&](const HoloMap::Sum& s) {
                   for (const HoloMap& t : s.terms) children.push_back(node_json(t));
                 },
                 [&](const HoloMap::Compose& c) {
                   for (const HoloMap& t : c.stages) children.push_back(node_json(t));
                 },
             },
             f.node());
  return {{"kind", std::string(kind_name(f.kind()))}, {"params", params}, {"children", children}};
}

// ---------------------------------------------------------------------------
// Reading

class Reader {
 public:
  Reader(const json& params, std::string path) : params_(params), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const { throw InputError(path_ + ": " + what); }

  const json& get(const char* key) {
    used_.insert(key);
    auto it = params_.find(key);
    if (it == params_.end()) fail(std::string("missing parameter '") + key + "'");
    return *it;
  }

  double real(const char* key) { return as_real(get(key), key); }

  int integer(const char* key) { return as_int(get(key), key); }

  Cpx cpx(const char* key) { return as_cpx(get(key), key); }

  CVec cvec(const char* key) { return as_cvec(get(key), key); }

  CMat cmat(const char* key) {
    const json& j = get(key);
    if (!j.is_array() || j.empty()) fail(std::string("'") + key + "' must be a non-empty matrix");
    const auto rows = static_cast<Eigen::Index>(j.size());
    CMat m;
    for (Eigen::Index r = 0; r < rows; ++r) {
      const CVec row = as_cvec(j[static_cast<std::size_t>(r)], key);
      if (r == 0) m.resize(rows, row.size());
      if (row.size() != m.cols()) fail(std::string("'") + key + "' has ragged rows");
      m.row(r) = row.transpose();
    }
    return m;
  }

  std::vector<PolyTerm> terms(const char* key) {
    const json& j = get(key);
    if (!j.is_array()) fail(std::string("'") + key + "' must be a list of terms");
    std::vector<PolyTerm> out;
    for (const json& t : j) {
      if (!t.is_object()) fail(std::string("'") + key + "' entries must be objects");
      for (auto it = t.begin(); it != t.end(); ++it) {
        if (it.key() != "out" && it.key() != "exps" && it.key() != "coef") {
          fail("unknown term field '" + it.key() + "'");
        }
      }
      if (!t.contains("out") || !t.contains("exps") || !t.contains("coef")) {
        fail(std::string("'") + key + "' terms need out, exps and coef");
      }
      PolyTerm term;
      term.out = as_int(t["out"], "out");
      if (!t["exps"].is_array()) fail("'exps' must be a list of integers");
      for (const json& e : t["exps"]) term.exps.push_back(as_int(e, "exps"));
      term.coef = as_cpx(t["coef"], "coef");
      out.push_back(std::move(term));
    }
    return out;
  }

  void finish() const {
    for (auto it = params_.begin(); it != params_.end(); ++it) {
      if (!used_.count(it.key())) fail("unknown parameter '" + it.key() + "'");
    }
  }

 private:
  double as_real(const json& j, const char* key) const {
    if (!j.is_number()) fail(std::string("'") + key + "' must be a number");
    return j.get<double>();
  }

  int as_int(const json& j, const char* key) const {
    if (!j.is_number_integer()) fail(std::string("'") + key + "' must be an integer");
    const auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000) fail(std::string("'") + key + "' is out of range");
    return static_cast<int>(v);
  }

  Cpx as_cpx(const json& j, const char* key) const {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
      fail(std::string("'") + key + "' must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
  }

  CVec as_cvec(const json& j, const char* key) const {
    if (!j.is_array() || j.empty()) fail(std::string("'") + key + "' must be a list of [re, im]");
    CVec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = as_cpx(j[i], key);
    return v;
  }

  const json& params_;
  std::string path_;
  std::set<std::string> used_;
};

HoloMap parse_node(const json& j, const std::string& prefix);

std::vector<HoloMap> parse_children(const json& j, const std::string& path) {
  std::vector<HoloMap> out;
  if (!j.is_array()) throw InputError(path + ": 'children' must be a list");
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_node(j[i], path + "/children[" + std::to_string(i) + "]/"));
  }
  return out;
}

HoloMap build(NodeKind kind, Reader& r, const json& children, const std::string& path) {
  const bool has_children = children.is_array() && !children.empty();
  if (has_children && kind != NodeKind::sum && kind != NodeKind::compose) {
    r.fail("this node kind takes no children");
  }
  switch (kind) {
    case NodeKind::constant:
      return HoloMap::constant(r.cvec("value"));
    case NodeKind::power: {
      const Cpx alpha = r.cpx("alpha");
      return HoloMap::power(alpha, r.integer("n"));
    }
    case NodeKind::mobius: {
      const Cpx a = r.cpx("a");
      return HoloMap::mobius(DiscMobius(a, r.real("theta")));
    }
    case NodeKind::boundary_contraction:
      return HoloMap::boundary_contraction(r.real("C"));
    case NodeKind::cayley_disc:
      return HoloMap::cayley_disc();
    case NodeKind::cayley_disc_inv:
      return HoloMap::cayley_disc_inv();
    case NodeKind::exp_family: {
      const double a = r.real("a");
      return HoloMap::exp_family(a, r.cpx("beta"));
    }
    case NodeKind::hom_poly: {
      const int din = r.integer("dim_in");
      const int dout = r.integer("dim_out");
      const int deg = r.integer("degree");
      return HoloMap::hom_poly(HomPoly(din, dout, deg, r.terms("terms")));
    }
    case NodeKind::ball_automorphism: {
      CVec a = r.cvec("a");
      return HoloMap::ball_automorphism(BallAutomorphism(std::move(a), r.cmat("U")));
    }
    case NodeKind::cayley_ball:
      return HoloMap::cayley_ball();
    case NodeKind::cayley_ball_inv:
      return HoloMap::cayley_ball_inv();
    case NodeKind::siegel_affine: {
      const int dim = r.integer("dim");
      if (dim < 2) r.fail("'dim' must be at least 2");
      const double m = r.real("m");
      PolyMap b(dim - 1, 1, r.terms("b"));
      PolyMap fp(dim - 1, dim - 1, r.terms("Fp"));
      return HoloMap::siegel_affine(m, std::move(b), std::move(fp));
    }
    case NodeKind::polynomial: {
      const int din = r.integer("dim_in");
      const int dout = r.integer("dim_out");
      return HoloMap::polynomial(PolyMap(din, dout, r.terms("terms")));
    }
    case NodeKind::sum:
      return HoloMap::sum(parse_children(children, path));
    case NodeKind::compose:
      return HoloMap::compose(parse_children(children, path));
  }
  r.fail("unhandled node kind");
}

HoloMap parse_node(const json& j, const std::string& prefix) {
  const std::string here = prefix.empty() ? "<root>" : prefix.substr(0, prefix.size() - 1);
  if (!j.is_object()) throw InputError(here + ": node must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "kind" && it.key() != "params" && it.key() != "children") {
      throw InputError(here + ": unknown field '" + it.key() + "'");
    }
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw InputError(here + ": missing 'kind'");
  }
  const std::string name = j["kind"].get<std::string>();
  const std::optional<NodeKind> kind = kind_from_name(name);
  if (!kind) throw InputError(here + ": unknown node kind '" + name + "'");
  const std::string path = prefix + name;

  static const json kEmptyObject = json::object();
  static const json kEmptyArray = json::array();
  const json& params = j.contains("params") ? j["params"] : kEmptyObject;
  const json& children = j.contains("children") ? j["children"] : kEmptyArray;
  if (!params.is_object()) throw InputError(path + ": 'params' must be an object");

  Reader r(params, path);
  try {
    HoloMap f = build(*kind, r, children, path);
    r.finish();
    return f;
  } catch (const InputError& e) {
    const std::string msg = e.what();
    // Messages from nested nodes and from the reader already carry a path.
    if (msg.rfind(prefix, 0) == 0 && !prefix.empty()) throw;
    if (msg.rfind(path, 0) == 0) throw;
    if (msg.rfind(name + ":", 0) == 0) throw InputError(prefix + msg);
    throw InputError(path + ": " + msg);
  }
}

}  // namespace

HoloMap parse_map(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("map file is not valid JSON: ") + e.what());
  }
  return parse_node(j, "");
}

std::string serialize_map(const HoloMap& f) { return node_json(f).dump(2) + "\n"; }

}  // namespace kobgeo
