#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "kobgeo/errors.hpp"
#include "kobgeo/map_io.hpp"
#include "kobgeo/report.hpp"

namespace kobgeo::cli {

namespace {

constexpr const char* kPointHelp =
    "Points are written re,im per coordinate with ';' between coordinates, e.g. 0.5,0 or "
    "\"0.1,0;0,0.2\". Families are DOMAIN:BASE with DOMAIN disc or ball, e.g. disc:0 or "
    "\"ball:1,0;0,0\".";

constexpr const char* kCsvHelp =
    "CSV columns: curve,geodesic_id,t,re_1,im_1,...,re_n,im_n. curve is 'source' for the "
    "family geodesics and 'image' for their images under --map.";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw InputError("cannot read '" + text + "' as a number");
  }
  if (used != t.size() || !std::isfinite(v)) throw InputError("cannot read '" + text + "' as a number");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::string num(double x, int digits = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

void csv_header(std::ostream& o, int width) {
  o << "curve,geodesic_id,t";
  for (int i = 1; i <= width; ++i) o << ",re_" << i << ",im_" << i;
  o << "\n";
}

// Rows narrower than the header are padded with empty fields.
void csv_row(std::ostream& o, const char* curve, int id, double t, const CVec& p, int width) {
  o << curve << "," << id << "," << num(t);
  for (Eigen::Index i = 0; i < p.size(); ++i) o << "," << num(p(i).real()) << "," << num(p(i).imag());
  for (auto i = static_cast<int>(p.size()); i < width; ++i) o << ",,";
  o << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Writes to --out when given, else to the command's output stream.
void emit(const std::string& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << doc;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + out_path + "'");
  f << doc;
}

struct Sampling {
  int geodesics = SamplingConfig{}.num_geodesics;
  int points = SamplingConfig{}.points_per_geodesic;
  double range = SamplingConfig{}.range;
  double tol = SamplingConfig{}.pass_tol;
  int threads = 1;

  SamplingConfig config() const {
    SamplingConfig c;
    c.num_geodesics = geodesics;
    c.points_per_geodesic = points;
    c.range = range;
    c.pass_tol = tol;
    c.threads = threads;
    c.validate();
    return c;
  }
};

void add_sampling(CLI::App* cmd, Sampling& s, bool with_tol) {
  cmd->add_option("--geodesics", s.geodesics, "Number of family geodesics")->capture_default_str();
  cmd->add_option("--points", s.points, "Samples per geodesic")->capture_default_str();
  cmd->add_option("--range", s.range, "Arclength range T; samples t in [-T, T]")->capture_default_str();
  if (with_tol) {
    cmd->add_option("--tol", s.tol, "Pass tolerance on the hyperbolic deviation")->capture_default_str();
    cmd->add_option("--threads", s.threads, "Worker threads for per-geodesic work")->capture_default_str();
  }
}

}  // namespace

CVec parse_point(const std::string& text) {
  const std::vector<std::string> coords = split(text, ';');
  if (coords.empty() || trim(text).empty()) throw InputError("empty point");
  CVec p(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::vector<std::string> parts = split(coords[i], ',');
    if (parts.size() == 1) {
      p(static_cast<Eigen::Index>(i)) = Cpx(parse_real(parts[0]), 0.0);
    } else if (parts.size() == 2) {
      p(static_cast<Eigen::Index>(i)) = Cpx(parse_real(parts[0]), parse_real(parts[1]));
    } else {
      throw InputError("coordinate '" + coords[i] + "' is not re,im");
    }
  }
  return p;
}

FamilySpec parse_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("family '" + text + "' is not DOMAIN:BASE");
  const std::string domain = trim(text.substr(0, colon));
  const CVec base = parse_point(text.substr(colon + 1));
  if (domain == "disc") {
    if (base.size() != 1) throw InputError("disc family base must have one coordinate");
    return FamilySpec::disc(base(0));
  }
  if (domain == "ball") return FamilySpec::ball(base);
  throw InputError("unknown domain '" + domain + "' (expected disc or ball)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geodesic-preserving holomorphic maps of the disc and ball: distances, "
               "geodesic samples, verification and parameter fits.",
               "kobgeo"};
  app.require_subcommand(1);
  app.footer(std::string(kPointHelp) + "\nExit codes: 0 pass, 1 fail, 2 degenerate-pass, "
                                       "3 input error, 4 numeric failure.");

  std::string domain = "disc";
  std::string a_text, b_text, src_text, dst_text, map_path, out_path, format = "text";
  int index = 0;
  int seed = 0;
  double radius = 0.5;
  Sampling sampling;

  CLI::App* distance = app.add_subcommand("distance", "Kobayashi distance between two points");
  distance->add_option("--domain", domain, "disc or ball")->check(CLI::IsMember({"disc", "ball"}))->capture_default_str();
  distance->add_option("--a", a_text, "First point")->required();
  distance->add_option("--b", b_text, "Second point")->required();

  CLI::App* geodesic = app.add_subcommand(
      "geodesic", "Sample a geodesic: the one through --a and --b, or member --index of --src");
  geodesic->add_option("--domain", domain, "disc or ball (with --a/--b)")->check(CLI::IsMember({"disc", "ball"}))->capture_default_str();
  geodesic->add_option("--a", a_text, "First point");
  geodesic->add_option("--b", b_text, "Second point");
  geodesic->add_option("--src", src_text, "Family DOMAIN:BASE");
  geodesic->add_option("--index", index, "Member of the family")->capture_default_str();
  geodesic->add_option("--out", out_path, "Write the CSV here instead of stdout");
  add_sampling(geodesic, sampling, false);
  geodesic->footer(kCsvHelp);

  CLI::App* verify = app.add_subcommand("verify", "Check that a map sends one geodesic family into another");
  verify->add_option("--map", map_path, "Map file")->required();
  verify->add_option("--src", src_text, "Source family DOMAIN:BASE")->required();
  verify->add_option("--dst", dst_text, "Target family DOMAIN:BASE")->required();
  verify->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  add_sampling(verify, sampling, true);

  CLI::App* fit = app.add_subcommand("fit", "Recover (alpha, n) for a map of the form alpha z^n");
  fit->add_option("--map", map_path, "Map file")->required();
  fit->add_option("--radius", radius, "Radius of the winding circle")->capture_default_str();
  fit->add_option("--seed", seed, "Seed for the generic sample points")->capture_default_str();
  fit->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  fit->add_option("--out", out_path, "Write the result here instead of stdout");

  CLI::App* foliation = app.add_subcommand(
      "export-foliation", "CSV of a geodesic family and, with --map, of its image curves");
  foliation->add_option("--src", src_text, "Family DOMAIN:BASE")->required();
  foliation->add_option("--map", map_path, "Optional map file");
  foliation->add_option("--out", out_path, "Write the CSV here instead of stdout");
  add_sampling(foliation, sampling, false);
  foliation->footer(kCsvHelp);

  CLI::App* validate = app.add_subcommand("validate-map", "Parse and type-check a map file");
  validate->add_option("--map", map_path, "Map file")->required();
  validate->add_option("--src", src_text, "Also check the map against this source family");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (distance->parsed()) {
      const CVec a = parse_point(a_text);
      const CVec b = parse_point(b_text);
      if (a.size() != b.size()) throw InputError("points have different dimensions");
      if (domain == "disc" && a.size() != 1) throw InputError("disc points have one coordinate");
      if (domain == "ball" && a.size() < 1) throw InputError("empty ball point");
      const double d = domain == "disc" ? poincare_distance(a(0), b(0))
                                        : kobayashi_ball_distance(a, b);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.10f\n", d);
      out << buf;
      return kPass;
    }

    if (geodesic->parsed()) {
      const SamplingConfig cfg = sampling.config();
      std::optional<Geodesic> g;
      if (!src_text.empty()) {
        if (!a_text.empty() || !b_text.empty()) throw InputError("use either --src or --a/--b");
        const FamilySpec fam = parse_family(src_text);
        if (index < 0 || index >= cfg.num_geodesics) throw InputError("--index outside [0, --geodesics)");
        g = family_geodesic(fam, index, cfg.num_geodesics);
      } else {
        if (a_text.empty() || b_text.empty()) throw InputError("geodesic needs --src or both --a and --b");
        const CVec a = parse_point(a_text);
        const CVec b = parse_point(b_text);
        if (a.size() != b.size()) throw InputError("points have different dimensions");
        if (domain == "disc") {
          if (a.size() != 1) throw InputError("disc points have one coordinate");
          g = geodesic_between(a(0), b(0));
        } else {
          g = ball_geodesic_between(a, b);
        }
      }
      const int width = static_cast<int>(geodesic_point(*g, 0.0).size());
      std::ostringstream csv;
      csv_header(csv, width);
      for (int j = 0; j < cfg.points_per_geodesic; ++j) {
        const double t = -cfg.range + 2.0 * cfg.range * j / (cfg.points_per_geodesic - 1);
        csv_row(csv, "source", src_text.empty() ? 0 : index, t, geodesic_point(*g, t), width);
      }
      emit(csv.str(), out_path, out);
      return kPass;
    }

    if (verify->parsed()) {
      const HoloMap f = parse_map(read_file(map_path));
      const FamilySpec src = parse_family(src_text);
      const FamilySpec dst = parse_family(dst_text);
      const VerificationReport r = verify_preservation(f, src, dst, sampling.config());
      emit(format == "structured" ? format_report_structured(r) : format_report_text(r), out_path,
           out);
      return verdict_exit_code(r.verdict);
    }

    if (fit->parsed()) {
      const HoloMap f = parse_map(read_file(map_path));
      if (!(radius > 0.0 && radius < 1.0)) throw InputError("--radius must lie in (0,1)");
      FitSamples samples = sample_for_fit(f, radius, 256, 0);
      std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
      std::uniform_real_distribution<double> rad(0.15, 0.85);
      std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
      for (int j = 0; j < 16; ++j) {
        const double r = rad(rng);
        const Cpx z = std::polar(r, ang(rng));
        samples.generic.emplace_back(z, f(z));
      }
      const FitResult res = fit_power_map(samples);
      std::ostringstream doc;
      if (format == "structured") {
        doc << "{\n  \"alpha\": [" << num(res.alpha.real(), 17) << ", " << num(res.alpha.imag(), 17)
            << "],\n  \"n\": " << res.n << ",\n  \"residual\": " << num(res.residual, 17) << "\n}\n";
      } else {
        doc << "alpha: " << num(res.alpha.real()) << "," << num(res.alpha.imag()) << "\n"
            << "n: " << res.n << "\n"
            << "residual: " << num(res.residual) << "\n";
      }
      emit(doc.str(), out_path, out);
      return kPass;
    }

    if (foliation->parsed()) {
      const SamplingConfig cfg = sampling.config();
      const FamilySpec fam = parse_family(src_text);
      std::optional<HoloMap> f;
      int width = fam.dim();
      if (!map_path.empty()) {
        f = parse_map(read_file(map_path));
        width = std::max(width, f->output_space(fam.space()).dim);
      }
      std::ostringstream csv;
      csv_header(csv, width);
      for (int i = 0; i < cfg.num_geodesics; ++i) {
        const Geodesic g = family_geodesic(fam, i, cfg.num_geodesics);
        for (int j = 0; j < cfg.points_per_geodesic; ++j) {
          const double t = -cfg.range + 2.0 * cfg.range * j / (cfg.points_per_geodesic - 1);
          csv_row(csv, "source", i, t, geodesic_point(g, t), width);
        }
        if (!f) continue;
        for (int j = 0; j < cfg.points_per_geodesic; ++j) {
          const double t = -cfg.range + 2.0 * cfg.range * j / (cfg.points_per_geodesic - 1);
          csv_row(csv, "image", i, t, (*f)(geodesic_point(g, t)), width);
        }
      }
      emit(csv.str(), out_path, out);
      return kPass;
    }

    if (validate->parsed()) {
      const HoloMap f = parse_map(read_file(map_path));
      out << "ok: " << kind_name(f.kind());
      if (!src_text.empty()) {
        const FamilySpec src = parse_family(src_text);
        out << ", " << describe(src.space()) << " -> " << describe(f.output_space(src.space()));
      }
      out << "\n";
      return kPass;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericError;
  }
  return kInputError;
}

}  // namespace kobgeo::cli
