#include "erlangen/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "erlangen/binary_forms.hpp"
#include "erlangen/cayley_klein.hpp"
#include "erlangen/config.hpp"
#include "erlangen/contact.hpp"
#include "erlangen/error.hpp"
#include "erlangen/groups.hpp"
#include "erlangen/properties.hpp"
#include "erlangen/report.hpp"
#include "erlangen/transfers.hpp"

namespace erlangen {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by the verbs; unset flags fall back to the config file, then
// to the verb's default.
struct Options {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<double> tol;
  std::optional<std::string> group;
  std::optional<int> dimension;
  std::string property;
  std::optional<std::string> metric;
  std::string p, q;
  std::string kind;
  std::string input;
  std::string coeffs;
  bool binomial = false;
  std::string map;
  std::string point;
  std::size_t count = 5;
};

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v)) {
      throw UsageError("--" + flag + ": not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--" + flag + ": empty list");
  return out;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag,
                               std::size_t lo, std::size_t hi) {
  std::vector<double> v = parse_list(text, flag);
  if (v.size() < lo || v.size() > hi) {
    const std::string want =
        lo == hi ? std::to_string(lo)
                 : std::to_string(lo) + " to " + std::to_string(hi);
    throw UsageError("--" + flag + ": expected " + want + " numbers, got " +
                     std::to_string(v.size()));
  }
  return v;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}

std::string join(const Vector& v) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < v.size(); ++i) parts.push_back(format_scalar(v[i]));
  return join(parts);
}

std::string join(const std::vector<double>& v) {
  std::vector<std::string> parts;
  for (double x : v) parts.push_back(format_number(x));
  return join(parts);
}

RunConfig resolve(const Options& o, double default_tol, bool needs_seed) {
  RunConfig cfg;
  bool tol_from_file = false;
  if (o.config) {
    cfg = load_config(*o.config);
    tol_from_file = true;
  }
  if (!tol_from_file) cfg.tolerance = default_tol;
  if (o.seed) cfg.seed = o.seed;
  if (o.trials) cfg.trials = *o.trials;
  if (o.tol) cfg.tolerance = *o.tol;
  if (o.group) cfg.group = *o.group;
  if (o.dimension) cfg.dimension = *o.dimension;
  validate(cfg);
  if (needs_seed && !cfg.seed) {
    throw UsageError("--seed is required (or 'seed' in the config file)");
  }
  return cfg;
}

ProjPoint homogeneous(const std::vector<double>& x) {
  Vector v(static_cast<Eigen::Index>(x.size()) + 1);
  for (std::size_t i = 0; i < x.size(); ++i) v[static_cast<Eigen::Index>(i)] = x[i];
  v[v.size() - 1] = 1.0;
  return ProjPoint(v);
}

int check_invariance(const Options& o, std::ostream& out) {
  const RunConfig cfg = resolve(o, 1e-9, true);
  const GroupDescriptor g = builtin_group(cfg.group, cfg.dimension);
  const PropertySpec spec = builtin_property(o.property, g, o.metric);
  const Verdict v = invariance_test(spec.property, g, spec.sampler, *cfg.seed,
                                    cfg.trials, cfg.tolerance);
  out << serialize_report(v);
  return v.invariant ? kOk : kNegative;
}

int distance(const Options& o, std::ostream& out) {
  const std::vector<double> p = parse_list(o.p, "p", 2, 2);
  const std::vector<double> q = parse_list(o.q, "q", 2, 2);
  const std::string metric = o.metric.value_or("");
  if (metric != "klein-disk" && metric != "elliptic") {
    throw UsageError("--metric must be klein-disk or elliptic");
  }
  const CKMetric m =
      metric == "klein-disk" ? CKMetric::klein_disk() : CKMetric::elliptic_plane();
  const Scalar d = ck_distance(homogeneous(p), homogeneous(q), m);
  // Distances are defined up to sign.
  const std::string value =
      std::abs(d.imag()) <= 1e-12 * std::max(1.0, std::abs(d))
          ? format_number(std::abs(d.real()))
          : format_scalar(d);
  ValueReport r{"cayley-klein distance",
                {{"metric", metric}, {"p", join(p)}, {"q", join(q)},
                 {"distance", value}}};
  out << serialize_report(r);
  return kOk;
}

int transfer(const Options& o, std::ostream& out) {
  ValueReport r{"transfer", {{"kind", o.kind}}};
  if (o.kind == "stereographic") {
    const std::vector<double> x = parse_list(o.input, "input", 3, 3);
    const ExtendedComplex z =
        stereographic(SpherePoint::from_direction(x[0], x[1], x[2]));
    r.fields.emplace_back("z", z.is_infinite() ? "inf" : format_scalar(z.value()));
  } else if (o.kind == "inverse-stereographic") {
    const std::vector<double> x = parse_list(o.input, "input", 2, 2);
    const SpherePoint s = inverse_stereographic(Scalar(x[0], x[1]));
    r.fields.emplace_back("point", join(std::vector<double>{s.x(), s.y(), s.z()}));
    r.fields.emplace_back("latitude", format_number(s.latitude_deg()));
    r.fields.emplace_back("longitude", format_number(s.longitude_deg()));
  } else if (o.kind == "circle-coords") {
    const std::vector<double> x = parse_list(o.input, "input", 3, 4);
    if (x[2] <= 0.0) throw UsageError("--input: radius must be positive");
    int orientation = 1;
    if (x.size() == 4) {
      if (x[3] != 1.0 && x[3] != -1.0) {
        throw UsageError("--input: orientation must be 1 or -1");
      }
      orientation = static_cast<int>(x[3]);
    }
    const CircleCoords u = circle_to_coords(Circle{Scalar(x[0], x[1]), x[2], orientation});
    r.fields.emplace_back("u", join(u.coords()));
  } else if (o.kind == "pluecker") {
    const std::vector<double> x = parse_list(o.input, "input", 6, 6);
    const PlueckerLine l =
        pluecker_embed(homogeneous({x[0], x[1], x[2]}), homogeneous({x[3], x[4], x[5]}));
    r.fields.emplace_back("p", join(l.coords()));
    r.fields.emplace_back("klein_residual", format_number(klein_residual(l.coords())));
  } else {
    throw UsageError(
        "--kind must be stereographic, inverse-stereographic, circle-coords or "
        "pluecker");
  }
  out << serialize_report(r);
  return kOk;
}

int covariants(const Options& o, std::ostream& out) {
  const std::vector<double> c = parse_list(o.coeffs, "coeffs", 2, 64);
  Vector v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v[static_cast<Eigen::Index>(i)] = c[i];
  const BinaryForm f = o.binomial ? BinaryForm::from_binomial(v) : BinaryForm(v);
  ValueReport r{"binary form covariants",
                {{"degree", std::to_string(f.degree())}, {"form", join(f.coeffs())}}};
  if (f.degree() >= 2) r.fields.emplace_back("hessian", join(hessian(f).coeffs()));
  if (f.degree() == 3) {
    const CubicCovariants cv = cubic_covariants(f);
    r.fields.emplace_back("q", join(cv.q.coeffs()));
    r.fields.emplace_back("r", format_scalar(cv.r));
  } else if (f.degree() == 4) {
    const QuarticCovariants cv = quartic_covariants(f);
    r.fields.emplace_back("t", join(cv.t.coeffs()));
    r.fields.emplace_back("i", format_scalar(cv.i));
    r.fields.emplace_back("j", format_scalar(cv.j));
  }
  out << serialize_report(r);
  return kOk;
}

FiveMap named_contact_map(const std::string& name, std::uint64_t seed) {
  if (name == "legendre") return legendre_map();
  if (name == "partial-legendre") return partial_legendre_map();
  if (name == "swap-zp") return swap_zp_map();
  if (name == "prolonged-affine") {
    const Transformation t = builtin_group("affine", 3).sample(seed);
    const ProjMap& g = std::get<ProjMap>(t.forward());
    const Eigen::MatrixXd m = g.matrix().real() / g.matrix()(3, 3).real();
    return prolong_affine_point_map(m.topLeftCorner<3, 3>(), m.topRightCorner<3, 1>());
  }
  throw UsageError(
      "--map must be legendre, partial-legendre, swap-zp or prolonged-affine");
}

int contact_check(const Options& o, std::ostream& out) {
  const RunConfig cfg = resolve(o, 1e-6, true);
  const FiveMap m = named_contact_map(o.map, *cfg.seed);
  ContactVerdict v = is_contact_transformation(m, *cfg.seed, cfg.trials, cfg.tolerance);
  out << "map: " << o.map << "\n" << serialize_report(v);
  return v.contact ? kOk : kNegative;
}

int orbit(const Options& o, std::ostream& out) {
  const RunConfig cfg = resolve(o, 1e-9, true);
  const GroupDescriptor g = builtin_group(cfg.group, cfg.dimension);
  const bool circles = g.carrier == Carrier::CircleCoordinates;
  const std::size_t want = circles || g.carrier == Carrier::ComplexLine
                               ? 2
                               : static_cast<std::size_t>(cfg.dimension);
  if (circles && cfg.dimension != 2) {
    throw InapplicableError("orbit: circle groups take planar points only");
  }
  const std::vector<double> x = parse_list(o.point, "point", want, want);
  if (o.count < 1) throw UsageError("--count must be at least 1");
  const Element start = circles ? Element(ProjPoint(point_circle(Scalar(x[0], x[1])).coords()))
                                : Element(homogeneous(x));
  const std::vector<Configuration> images =
      orbit_sample(Configuration({start}), g, *cfg.seed, o.count);
  ValueReport r{"orbit sample",
                {{"group", g.name},
                 {"dimension", std::to_string(g.dimension)},
                 {"point", join(x)},
                 {"count", std::to_string(images.size())}}};
  for (std::size_t k = 0; k < images.size(); ++k) {
    const ProjPoint& p = std::get<ProjPoint>(images[k][0]);
    std::string value;
    if (circles) {
      // Lie maps need not keep point circles; others print as coordinates.
      const CircleCoords u(p.coords());
      if (u.is_point_circle()) {
        const ExtendedComplex z = circle_point(u);
        value = z.is_infinite() ? "inf"
                                : join(std::vector<double>{z.value().real(), z.value().imag()});
      } else {
        value = join(normalize_max(p.coords()));
      }
    } else {
      const Scalar w = p[p.size() - 1];
      if (std::abs(w) <= 1e-12 * p.coords().cwiseAbs().maxCoeff()) {
        value = "inf";
      } else {
        std::vector<double> a;
        for (Eigen::Index i = 0; i + 1 < p.size(); ++i) a.push_back((p[i] / w).real());
        value = join(a);
      }
    }
    r.fields.emplace_back("image_" + std::to_string(k), value);
  }
  out << serialize_report(r);
  return kOk;
}

int axioms(const Options& o, std::ostream& out) {
  const RunConfig cfg = resolve(o, 1e-8, true);
  const GroupDescriptor g = builtin_group(cfg.group, cfg.dimension);
  const AxiomReport r = check_group_axioms(g, *cfg.seed, cfg.trials, cfg.tolerance);
  out << serialize_report(r);
  return r.ok() ? kOk : kNegative;
}

void add_run_flags(CLI::App* sub, Options& o, bool group_flags) {
  sub->add_option("--config", o.config, "key = value configuration file");
  sub->add_option("--seed", o.seed, "64-bit seed (required)");
  sub->add_option("--trials", o.trials, "number of trials or samples");
  sub->add_option("--tol", o.tol, "tolerance");
  if (group_flags) {
    sub->add_option("--group", o.group, "builtin group name");
    sub->add_option("--dimension", o.dimension, "dimension of the group");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Transformation groups, their invariants and transfers", "erlangen"};
  app.require_subcommand(1);
  Options o;

  auto* inv = app.add_subcommand("check-invariance", "falsification test of a property");
  add_run_flags(inv, o, true);
  inv->add_option("--property", o.property, "property name")->required();
  inv->add_option("--metric", o.metric, "klein-disk or elliptic (ck-distance)");

  auto* dist = app.add_subcommand("distance", "Cayley-Klein distance in the plane");
  dist->add_option("--metric", o.metric, "klein-disk or elliptic")->required();
  dist->add_option("--p", o.p, "x,y")->required();
  dist->add_option("--q", o.q, "x,y")->required();

  auto* tr = app.add_subcommand("transfer", "carry an object to another model");
  tr->add_option("--kind", o.kind,
                 "stereographic | inverse-stereographic | circle-coords | pluecker")
      ->required();
  tr->add_option("--input", o.input, "comma-separated numbers")->required();

  auto* cov = app.add_subcommand("covariants", "covariants of a binary form");
  cov->add_option("--coeffs", o.coeffs, "coefficients of x^d, x^(d-1) y, ..., y^d")
      ->required();
  cov->add_flag("--binomial", o.binomial, "coefficients are binomial-weighted");

  auto* con = app.add_subcommand("contact-check", "is a map of (x,y,z,p,q) a contact map");
  add_run_flags(con, o, false);
  con->add_option("--map", o.map, "legendre | partial-legendre | swap-zp | prolonged-affine")
      ->required();

  auto* orb = app.add_subcommand("orbit", "images of a point under sampled group elements");
  add_run_flags(orb, o, true);
  orb->add_option("--point", o.point, "affine coordinates")->required();
  orb->add_option("--count", o.count, "number of images");

  auto* ax = app.add_subcommand("axioms", "numerical group axiom check");
  add_run_flags(ax, o, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (const auto subs = app.get_subcommands(); !subs.empty()) {
      err << subs.front()->help();
    } else {
      err << app.help();
    }
    return kUsage;
  }

  try {
    if (inv->parsed()) return check_invariance(o, out);
    if (dist->parsed()) return distance(o, out);
    if (tr->parsed()) return transfer(o, out);
    if (cov->parsed()) return covariants(o, out);
    if (con->parsed()) return contact_check(o, out);
    if (orb->parsed()) return orbit(o, out);
    return axioms(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace erlangen
