#include "fanning/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <tuple>

#include "fanning/congruence.hpp"
#include "fanning/errors.hpp"
#include "fanning/invariants.hpp"
#include "fanning/io.hpp"
#include "fanning/linalg.hpp"

namespace fanning::cli {

namespace {

constexpr double kCongruenceTolerance = 1e-7;
constexpr double kCheckTolerance = 1e-8;
constexpr double kRankTolerance = 1e-8;
constexpr double kMaxTransformCondition = 1e3;

struct Config {
  std::vector<std::string> inputs;
  std::string grid;
  std::string out;
  std::string format = "json";
  std::optional<double> tol;
  std::uint64_t seed = 42;
  double time = 0.0;
  double perturb = 0.0;
  bool jacobi = false;
  std::string maurer_cartan;
};

/// Report in both output formats; CSV rows are collected alongside the JSON.
struct Report {
  Json doc;
  std::vector<std::tuple<double, std::string, Matrix>> rows;

  void add_row(double t, std::string name, Matrix m) { rows.emplace_back(t, std::move(name), std::move(m)); }
  void add_scalar(double t, std::string name, double x) { add_row(t, std::move(name), Matrix::Constant(1, 1, x)); }
};

int jet_order(int k) { return 2 * k + 1; }

double resolve_tolerance(const Config& cfg, double fallback) {
  const double tol = cfg.tol ? *cfg.tol : tolerance_from_env(fallback);
  if (!(tol > 0)) throw ParseError("tolerance must be positive");
  return tol;
}

std::vector<double> resolve_grid(const Config& cfg, const std::string& fallback) {
  return parse_grid(cfg.grid.empty() ? fallback : cfg.grid);
}

Matrix gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) m(r, c) = g(rng);
  }
  return m;
}

Matrix random_gl(Index dim, std::mt19937_64& rng) {
  for (;;) {
    Matrix t = gaussian(dim, dim, rng);
    if (condition_number(t) <= kMaxTransformCondition) return t;
  }
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
  Json list = Json::array();
  for (const auto& m : ms) list.push_back(matrix_to_json(m));
  return list;
}

Json doubles_to_json(std::span<const double> xs) {
  Json list = Json::array();
  for (double x : xs) list.push_back(x);
  return list;
}

void emit(const Config& cfg, const Report& report, std::ostream& out) {
  std::ofstream file;
  std::ostream* target = &out;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw Error("cannot write " + cfg.out);
    target = &file;
  }
  if (cfg.format == "csv") {
    write_csv_header(*target);
    for (const auto& [t, name, m] : report.rows) write_csv_matrix(*target, t, name, m);
  } else {
    write_json(*target, report.doc);
  }
}

// ---------------------------------------------------------------------------

struct SampleReport {
  Json doc;
  std::vector<std::tuple<double, std::string, Matrix>> rows;
  bool skipped_normal_only = false;
};

SampleReport invariants_at(const FrameCurve& curve, double t, const Config& cfg, double normal_tol) {
  const int k = curve_k(curve);
  const FrameJet fj = frame_jet(curve, t, jet_order(k));
  fj.require_fanning();
  const CoefficientSet inv = wilczynski_invariants(fj);
  const EndomorphismBundle bundle = endomorphism_bundle(fj);
  const Index dim = fj.dim();
  const Matrix id = Matrix::Identity(dim, dim);
  const double defect = normality_defect(inv);
  const bool normal = defect < normal_tol;

  SampleReport s;
  auto row = [&](const std::string& name, const Matrix& m) { s.rows.emplace_back(t, name, m); };
  s.doc["t"] = t;
  s.doc["condition"] = fj.condition();
  s.doc["normality_defect"] = defect;
  s.doc["normal"] = normal;
  Json p = Json::array();
  for (int i = 1; i <= k; ++i) {
    p.push_back(matrix_to_json(inv.P(i).value()));
    row("P" + std::to_string(i), inv.P(i).value());
  }
  s.doc["P"] = std::move(p);
  const Matrix schw = 2.0 * inv.kappa->value();
  s.doc["schwarzian"] = matrix_to_json(schw);
  s.doc["kappa"] = matrix_to_json(inv.kappa->value());
  row("schwarzian", schw);
  row("kappa", inv.kappa->value());
  Json h = Json::array();
  for (std::size_t j = 0; j < inv.h.size(); ++j) {
    h.push_back(matrix_to_json(inv.h[j].value()));
    row("h" + std::to_string(j + 1), inv.h[j].value());
  }
  s.doc["h"] = std::move(h);

  Json d;
  d["minus_one"] = dim - numerical_rank(bundle.D + id, kRankTolerance);
  d["plus_one"] = dim - numerical_rank(bundle.D - id, kRankTolerance);
  d["involution_residual"] = max_abs(bundle.D * bundle.D - id);
  s.doc["D_spectrum"] = std::move(d);
  row("D", bundle.D);

  if (cfg.jacobi) {
    if (normal) {
      const Matrix j = jacobi_matrix(fj, JacobiKind::jacobi);
      s.doc["jacobi"] = matrix_to_json(j);
      row("jacobi", j);
    } else {
      s.doc["jacobi"] = nullptr;
      s.skipped_normal_only = true;
    }
  }
  if (!cfg.maurer_cartan.empty()) {
    if (normal) {
      const CartanLift lift = cfg.maurer_cartan == "H" ? CartanLift::horizontal : CartanLift::kth_derivative;
      const Matrix mc = maurer_cartan_pullback(fj, lift);
      s.doc["maurer_cartan"] = matrix_to_json(mc);
      row("maurer_cartan", mc);
    } else {
      s.doc["maurer_cartan"] = nullptr;
      s.skipped_normal_only = true;
    }
  }
  return s;
}

int cmd_invariants(const Config& cfg, std::ostream& out, std::ostream& err) {
  const FrameCurve curve = load_curve(cfg.inputs.at(0));
  const std::vector<double> grid = resolve_grid(cfg, "0:1:11");
  const double tol = resolve_tolerance(cfg, kNormalityTolerance);
  std::vector<SampleReport> samples(grid.size());
  kernels::for_each_index(Execution::parallel, grid.size(),
                          [&](std::size_t i) { samples[i] = invariants_at(curve, grid[i], cfg, tol); });

  Report report;
  report.doc["command"] = "invariants";
  report.doc["k"] = curve_k(curve);
  report.doc["n"] = curve_n(curve);
  report.doc["samples"] = Json::array();
  bool skipped = false;
  for (auto& s : samples) {
    report.doc["samples"].push_back(std::move(s.doc));
    for (auto& r : s.rows) report.rows.push_back(std::move(r));
    skipped = skipped || s.skipped_normal_only;
  }
  if (skipped) err << "note: jacobi / maurer-cartan reported as null where the frame is not normal\n";
  emit(cfg, report, out);
  return 0;
}

int cmd_congruent(const Config& cfg, std::ostream& out, std::ostream&) {
  const FrameCurve a = load_curve(cfg.inputs.at(0));
  const FrameCurve b = load_curve(cfg.inputs.at(1));
  const std::vector<double> grid =
      cfg.grid.empty() ? default_samples(curve_k(a), 0.0, 1.0) : parse_grid(cfg.grid);
  CongruenceOptions opts;
  opts.conjugator.tol = resolve_tolerance(cfg, kCongruenceTolerance);
  opts.conjugator.seed = cfg.seed;
  const CongruenceWitness w = are_congruent(a, b, grid, opts);

  Report report;
  report.doc["command"] = "congruent";
  report.doc["verdict"] = to_string(w.verdict);
  report.doc["samples"] = doubles_to_json(w.samples);
  report.doc["residuals"] = doubles_to_json(w.residuals);
  report.doc["span_distances"] = doubles_to_json(w.span_distances);
  report.doc["nullity"] = w.nullity;
  report.doc["conjugator_condition"] = w.conjugator_condition;
  report.doc["X"] = matrix_to_json(w.X);
  report.doc["T"] = w.T.size() ? matrix_to_json(w.T) : Json(nullptr);
  const double t0 = w.samples.front();
  report.add_row(t0, "X", w.X);
  if (w.T.size()) report.add_row(t0, "T", w.T);
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    report.add_scalar(w.samples[i], "residual", w.residuals[i]);
    if (i < w.span_distances.size()) report.add_scalar(w.samples[i], "span_distance", w.span_distances[i]);
  }
  emit(cfg, report, out);
  switch (w.verdict) {
    case Verdict::congruent:
      return 0;
    case Verdict::not_congruent:
      return 1;
    case Verdict::inconclusive:
      return 5;
  }
  return 6;
}

int cmd_canonicalize(const Config& cfg, std::ostream& out, std::ostream&) {
  const FrameCurve curve = load_curve(cfg.inputs.at(0));
  const int k = curve_k(curve);
  const double t = cfg.time;
  const FrameJet fj = frame_jet(curve, t, jet_order(k));
  const CanonicalJet canon = canonicalize_jet(fj);
  const OrbitCoordinates orbit = orbit_coordinates(fj);
  const CoefficientSet inv = wilczynski_invariants(canon.standard);

  Report report;
  report.doc["command"] = "canonicalize";
  report.doc["t"] = t;
  report.doc["T"] = matrix_to_json(canon.T);
  report.add_row(t, "T", canon.T);
  std::vector<Matrix> derivs;
  for (int j = 0; j <= k + 1; ++j) {
    derivs.push_back(canon.standard.jet().deriv(j));
    report.add_row(t, "A" + std::to_string(j), derivs.back());
  }
  report.doc["derivatives"] = matrices_to_json(derivs);
  report.doc["kappa"] = matrix_to_json(inv.kappa->value());
  report.add_row(t, "kappa", inv.kappa->value());
  std::vector<Matrix> h;
  for (std::size_t j = 0; j < inv.h.size(); ++j) {
    h.push_back(inv.h[j].value());
    report.add_row(t, "h" + std::to_string(j + 1), h.back());
  }
  report.doc["h"] = matrices_to_json(h);
  report.doc["orbit_coordinates"] = matrices_to_json(orbit.entries);
  for (std::size_t j = 0; j < orbit.entries.size(); ++j) {
    report.add_row(t, "orbit" + std::to_string(j + 1), orbit.entries[j]);
  }
  emit(cfg, report, out);
  return 0;
}

int cmd_normal_frame(const Config& cfg, std::ostream& out, std::ostream&) {
  const FrameCurve curve = load_curve(cfg.inputs.at(0));
  const std::vector<double> grid = resolve_grid(cfg, "0:1:11");
  NormalFrameOptions opts;
  opts.jet_order = jet_order(curve_k(curve));
  const NormalizationRecord rec = normal_frame(curve, grid, opts);

  Report report;
  report.doc["command"] = "normal-frame";
  report.doc["k"] = rec.k;
  report.doc["n"] = rec.n;
  report.doc["samples"] = Json::array();
  for (std::size_t i = 0; i < rec.times.size(); ++i) {
    const double t = rec.times[i];
    Json s;
    s["t"] = t;
    s["X"] = matrix_to_json(rec.X[i]);
    s["B"] = matrix_to_json(rec.B[i]);
    s["Q"] = matrices_to_json(rec.Q[i]);
    s["normality_defect"] = normality_defect(rec.normal_jets[i]);
    report.doc["samples"].push_back(std::move(s));
    report.add_row(t, "X", rec.X[i]);
    report.add_row(t, "B", rec.B[i]);
    for (std::size_t j = 0; j < rec.Q[i].size(); ++j) report.add_row(t, "Q" + std::to_string(j + 2), rec.Q[i][j]);
  }
  emit(cfg, report, out);
  return 0;
}

struct Check {
  std::string name;
  double t;
  double residual;
};

std::vector<Check> checks_at(const FrameJet& fj, const Matrix& transform) {
  const int k = fj.k();
  const double t = fj.base_time();
  fj.require_fanning();
  const Index dim = fj.dim();
  const Matrix id = Matrix::Identity(dim, dim);
  const EndomorphismBundle bundle = endomorphism_bundle(fj);
  std::vector<Check> out;

  out.push_back({"reflection D^2 = I", t, max_abs(bundle.D * bundle.D - id)});

  const Matrix f = bundle.F.value();
  Matrix fk = id;
  for (int i = 0; i < k; ++i) fk = fk * f;
  out.push_back({"nilpotency F^k = 0", t, max_abs(fk) / std::pow(1.0 + max_abs(f), k)});

  const FrameJet moved = left_act(transform, fj);
  const CoefficientSet a = wilczynski_invariants(fj);
  const CoefficientSet b = wilczynski_invariants(moved);
  double scale = 1.0 + a.kappa->value().cwiseAbs().maxCoeff();
  double inv_residual = max_abs(a.kappa->value() - b.kappa->value());
  for (std::size_t j = 0; j < a.h.size(); ++j) {
    scale = std::max(scale, 1.0 + max_abs(a.h[j].value()));
    inv_residual = std::max(inv_residual, max_abs(a.h[j].value() - b.h[j].value()));
  }
  out.push_back({"equivariance kappa, h_j", t, inv_residual / scale});
  const Matrix conj = transform * f * transform.inverse();
  const Matrix f_moved = fundamental_endomorphism(moved, 0).value();
  out.push_back({"equivariance F[TA] = T F T^-1", t, max_abs(f_moved - conj) / (1.0 + max_abs(conj))});

  out.push_back({"horizontal derivative formulas", t,
                 bundle.h_formula_residual / (1.0 + max_abs(bundle.H.value()))});

  const FrameJet normal = normalize_jet(fj);
  const EndomorphismBundle nb = endomorphism_bundle(normal);
  const Matrix kappa = ode_coefficients(normal).P(2).value();
  const Matrix kh = nb.K * nb.H.value();
  const Matrix rhs = (k - 1.0) * nb.H.value() * kappa;
  out.push_back({"jacobi K H = (k-1) H kappa", t, max_abs(kh - rhs) / (1.0 + max_abs(rhs))});
  return out;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const FrameCurve curve = load_curve(cfg.inputs.at(0));
  const std::vector<double> grid = resolve_grid(cfg, "0:1:5");
  const double tol = resolve_tolerance(cfg, kCheckTolerance);
  const int k = curve_k(curve);
  std::mt19937_64 rng(cfg.seed);
  const Matrix transform = random_gl(static_cast<Index>(k) * curve_n(curve), rng);

  std::vector<std::vector<Check>> per_sample(grid.size());
  kernels::for_each_index(Execution::parallel, grid.size(), [&](std::size_t i) {
    per_sample[i] = checks_at(frame_jet(curve, grid[i], jet_order(k)), transform);
  });

  Report report;
  report.doc["command"] = "verify";
  report.doc["seed"] = cfg.seed;
  report.doc["tolerance"] = tol;
  report.doc["checks"] = Json::array();
  bool all_pass = true;
  for (const auto& checks : per_sample) {
    for (const auto& c : checks) {
      const bool pass = c.residual < tol;
      all_pass = all_pass && pass;
      Json j;
      j["name"] = c.name;
      j["t"] = c.t;
      j["residual"] = c.residual;
      j["pass"] = pass;
      report.doc["checks"].push_back(std::move(j));
      report.add_scalar(c.t, c.name, c.residual);
      if (!pass) err << "FAIL " << c.name << " at t=" << format_number(c.t) << ": residual " << format_number(c.residual) << "\n";
    }
  }
  report.doc["passed"] = all_pass;
  emit(cfg, report, out);
  return all_pass ? 0 : 1;
}

FrameCurve transform_curve(const FrameCurve& curve, std::uint64_t seed, double perturb) {
  std::mt19937_64 rng(seed);
  const int k = curve_k(curve);
  const int n = curve_n(curve);
  const Index dim = static_cast<Index>(k) * n;
  const Matrix t = random_gl(dim, rng);
  Matrix x0;
  do {
    x0 = Matrix::Identity(n, n) + 0.3 * gaussian(n, n, rng) / std::sqrt(static_cast<double>(n));
  } while (condition_number(x0) > 10.0);
  const Matrix x1 = 0.2 * gaussian(n, n, rng) / std::sqrt(static_cast<double>(n));
  const Matrix bump = perturb * gaussian(dim, n, rng);

  if (const auto* poly = std::get_if<PolynomialFrameCurve>(&curve)) {
    std::vector<Matrix> c(poly->polynomial().coefficients().begin(), poly->polynomial().coefficients().end());
    if (perturb != 0.0) {
      if (static_cast<int>(c.size()) <= k) c.resize(static_cast<std::size_t>(k + 1), Matrix::Zero(dim, n));
      c[static_cast<std::size_t>(k)] += bump;
    }
    // T A(t) (X0 + t X1)
    std::vector<Matrix> out(c.size() + 1, Matrix::Zero(dim, n));
    for (std::size_t m = 0; m < c.size(); ++m) {
      out[m] += t * c[m] * x0;
      out[m + 1] += t * c[m] * x1;
    }
    return PolynomialFrameCurve(k, n, std::move(out));
  }

  const auto& ode = std::get<OdeFrameCurve>(curve);
  const Matrix x0_inv = x0.inverse();
  std::vector<PolynomialMatrix> p;
  for (int i = 0; i < k; ++i) {
    const auto src = ode.coefficients()[static_cast<std::size_t>(i)].coefficients();
    std::vector<Matrix> c;
    for (const auto& m : src) c.push_back(x0_inv * m * x0);
    if (i == 1 && perturb != 0.0) c[0] += perturb * gaussian(n, n, rng);
    p.emplace_back(n, n, std::move(c));
  }
  return OdeFrameCurve(k, n, std::move(p), t * ode.initial() * block_diagonal(x0, k), ode.settings());
}

int cmd_transform(const Config& cfg, std::ostream& out, std::ostream&) {
  const FrameCurve curve = load_curve(cfg.inputs.at(0));
  Report report;
  report.doc = curve_to_json(transform_curve(curve, cfg.seed, cfg.perturb));
  Config json_only = cfg;
  json_only.format = "json";
  emit(json_only, report, out);
  return 0;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(x)) throw ParseError("bad number in grid: \"" + s + "\"");
    return x;
  };
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
  };
  if (spec.empty()) throw ParseError("empty grid");
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw ParseError("grid must be start:end:count");
    const double a = number(parts[0]);
    const double b = number(parts[1]);
    const double count = number(parts[2]);
    if (count < 1 || count != std::floor(count)) throw ParseError("grid count must be a positive integer");
    const int m = static_cast<int>(count);
    if (m > 1 && !(b > a)) throw ParseError("grid end must exceed start");
    std::vector<double> g(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) g[static_cast<std::size_t>(i)] = m == 1 ? a : a + (b - a) * i / (m - 1);
    return g;
  }
  std::vector<double> g;
  for (const auto& p : split(spec, ',')) g.push_back(number(p));
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (!(g[i] > g[i - 1])) throw ParseError("grid times must be strictly increasing");
  }
  return g;
}

double tolerance_from_env(double fallback) {
  const char* env = std::getenv("FANNING_TOL");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const double x = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(x > 0) || !std::isfinite(x)) {
    throw ParseError(std::string("FANNING_TOL is not a positive number: ") + env);
  }
  return x;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential invariants and congruence of fanning curves in Gr(n, kn)", "fanning"};
  app.require_subcommand(1);
  Config cfg;
  double tol = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", tol, "Tolerance (overrides FANNING_TOL)");
  };
  auto grid = [&](CLI::App* sub) { sub->add_option("--grid", cfg.grid, "start:end:count or t1,t2,..."); };

  auto* invariants = app.add_subcommand("invariants", "Invariants along a time grid");
  invariants->add_option("curve", cfg.inputs, "Curve file")->required()->expected(1);
  grid(invariants);
  common(invariants);
  invariants->add_flag("--jacobi", cfg.jacobi, "Include the Jacobi matrix (normal frames)");
  invariants->add_option("--maurer-cartan", cfg.maurer_cartan, "Include M^-1 M' for M built on H or A^(k-1)")
      ->check(CLI::IsMember({"H", "kderiv"}));

  auto* congruent = app.add_subcommand("congruent", "Decide congruence of two curves");
  congruent->add_option("curves", cfg.inputs, "Two curve files")->required()->expected(2);
  grid(congruent);
  common(congruent);
  congruent->add_option("--seed", cfg.seed, "Seed for the conjugator search");

  auto* canonicalize = app.add_subcommand("canonicalize", "Standard jet and orbit coordinates at a time");
  canonicalize->add_option("curve", cfg.inputs, "Curve file")->required()->expected(1);
  canonicalize->add_option("--t", cfg.time, "Base time");
  common(canonicalize);

  auto* normal = app.add_subcommand("normal-frame", "Normal frame and invariants Q_j along a grid");
  normal->add_option("curve", cfg.inputs, "Curve file")->required()->expected(1);
  grid(normal);
  common(normal);

  auto* verify = app.add_subcommand("verify", "Identity checks on a curve");
  verify->add_option("curve", cfg.inputs, "Curve file")->required()->expected(1);
  verify->add_option("--seed", cfg.seed, "Seed for the random transformation");
  grid(verify);
  common(verify);

  auto* transform = app.add_subcommand("transform", "Write a congruent (or perturbed) copy of a curve");
  transform->add_option("curve", cfg.inputs, "Curve file")->required()->expected(1);
  transform->add_option("--seed", cfg.seed, "Seed for T and the frame change");
  transform->add_option("--perturb", cfg.perturb, "Size of a random perturbation applied first");
  transform->add_option("--out", cfg.out, "Write the curve to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto* sub : {invariants, congruent, canonicalize, normal, verify}) {
    if (sub->parsed() && sub->count("--tol") > 0) cfg.tol = tol;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(cfg, out, err);
    if (congruent->parsed()) return cmd_congruent(cfg, out, err);
    if (canonicalize->parsed()) return cmd_canonicalize(cfg, out, err);
    if (normal->parsed()) return cmd_normal_frame(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (transform->parsed()) return cmd_transform(cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError& e) {
    // Shapes at this level come from the input files.
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotFanningError& e) {
    err << "error: " << e.what() << " [condition number " << format_number(e.condition()) << ", t="
        << format_number(e.time()) << "]\n";
    return 3;
  } catch (const InsufficientOrderError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 6;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"fanning"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fanning::cli
