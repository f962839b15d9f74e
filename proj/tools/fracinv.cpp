#include "fracinv/audit/audit.hpp"
#include "fracinv/detect/bounds.hpp"
#include "fracinv/detect/curves.hpp"
#include "fracinv/detect/lines.hpp"
#include "fracinv/detect/parabolas.hpp"
#include "fracinv/detect/report.hpp"
#include "fracinv/frac/fam.hpp"
#include "fracinv/frac/ml.hpp"
#include "fracinv/io/corpus.hpp"
#include "fracinv/io/system_json.hpp"
#include "fracinv/io/writers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>

using namespace fracinv;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBlowup = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PolyField2D load_field(const std::string& arg) {
  if (io::corpus_has(arg)) return io::corpus_field(arg);
  return io::load_system_file(arg); // SystemParseError carries the path
}

std::array<double, 2> parse_pair(const std::string& s, const char* flag) {
  double a = 0, b = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "%lf,%lf%c", &a, &b, &tail) != 2)
    throw InputError(std::string(flag) + ": expected \"x,y\", got '" + s + "'");
  return {a, b};
}

std::set<std::string> parse_formats(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "json" && item != "csv" && item != "svg")
      throw InputError("--format: unknown format '" + item + "'");
    out.insert(item);
  }
  if (out.empty()) throw InputError("--format: empty");
  return out;
}

int steps_for(double h, double T) {
  if (!(h > 0)) throw InputError("--h must be > 0");
  if (!(T > 0)) throw InputError("--T must be > 0");
  double n = T / h;
  if (n > 2e6) throw InputError("--h too small for --T (over 2e6 steps)");
  return std::max(1, (int)std::llround(n));
}

void check_alpha(double a) {
  if (!(a > 0 && a <= 1)) throw InputError("--alpha must lie in (0, 1]");
}

// one sidecar per run so identical configs are recognizable at a glance
void write_config_hash(const std::string& out_dir, const std::string& canon) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)io::fnv1a(canon));
  io::atomic_write(out_dir + "/config.hash", std::string(buf) + "  config\n");
}

void emit(const std::string& out_dir, const std::string& name, const std::string& content) {
  io::atomic_write(out_dir + "/" + name, content);
}

frac::RHS2 field_rhs(const PolyField2D& f) {
  return [f](double, const std::array<double, 2>& x) { return f.eval_d(x[0], x[1]); };
}

// ---------------------------------------------------------------- analyze

detect::InvariantReport run_all_detectors(const PolyField2D& f) {
  std::vector<detect::InvariantReport> parts;
  parts.push_back(detect::detect_lines_origin(f));
  parts.push_back(detect::detect_lines_axis(f));
  parts.push_back(detect::detect_lines_affine(f));
  if (f.degree() <= 2) {
    parts.push_back(detect::detect_parabola_y_of_x(f));
    parts.push_back(detect::detect_parabola_x_of_y(f));
    parts.push_back(detect::detect_parabola_rotated(f));
    parts.push_back(detect::detect_cubic(f));
    parts.push_back(detect::detect_power_family(f));
    parts.push_back(detect::detect_exponential_family(f));
  }
  parts.push_back(detect::detect_separatrix(f));
  auto rep = detect::merge_reports(parts);
  if (f.is_zero())
    rep.diagnostics.push_back("trivial flow: every point is an equilibrium, every curve is invariant");
  if (f.degree() > 2)
    rep.diagnostics.push_back("degree > 2: curve detectors beyond lines were skipped");
  return rep;
}

std::string summary_text(const PolyField2D& f, const detect::InvariantReport& rep,
                         const detect::BoundReport& bounds) {
  std::ostringstream os;
  if (f.is_zero())
    os << "system is identically zero, classification: " << rep.classification << "\n";
  else
    os << "system degree " << f.degree() << ", classification: " << rep.classification << "\n";
  if (rep.candidates.empty()) os << "no invariant curves detected\n";
  for (const auto& c : rep.candidates) {
    os << "  [" << detect::kind_name(c.kind) << "] " << c.label;
    if (!c.clause.empty()) os << "   (" << c.clause << ")";
    if (c.cert.exact)
      os << "   certified, cofactor " << c.cert.cofactor;
    else if (!c.cert.kind.empty())
      os << "   " << c.cert.kind << " residual " << c.cert.residual;
    os << "\n";
    if (c.infinite_family) os << "    infinite family: " << c.family_desc << "\n";
  }
  for (const auto& d : rep.diagnostics) os << "note: " << d << "\n";
  for (const auto& v : bounds.violations) os << "BOUND VIOLATION: " << v << "\n";
  for (const auto& n : bounds.notes) os << "bound: " << n << "\n";
  return os.str();
}

int cmd_analyze(const std::string& system, const std::string& out_dir,
                const std::set<std::string>& formats) {
  PolyField2D f = load_field(system);
  auto rep = run_all_detectors(f);
  auto bounds = detect::validate_line_bounds(f, rep);
  json j = detect::report_json(rep);
  j["bounds"] = {{"ok", bounds.ok}, {"violations", bounds.violations}, {"notes", bounds.notes}};
  j["system"] = json::parse(io::system_to_json(f));
  if (formats.count("json")) emit(out_dir, "report.json", j.dump(2) + "\n");
  emit(out_dir, "summary.txt", summary_text(f, rep, bounds));
  write_config_hash(out_dir, "analyze\nsystem=" + io::system_to_json(f));
  std::cout << summary_text(f, rep, bounds);
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const std::string& system, double alpha, double h, double T,
                 const std::string& x0s, const std::string& out_dir) {
  PolyField2D f = load_field(system);
  check_alpha(alpha);
  int steps = steps_for(h, T);
  auto x0 = parse_pair(x0s, "--x0");
  // alpha = 1 runs the classical reference integrator
  frac::Trajectory tr = (alpha == 1.0) ? frac::rk4_solve(field_rhs(f), x0, T, steps)
                                       : frac::fam_solve(field_rhs(f), x0, alpha, T, steps);
  std::string csv = io::trajectory_csv(tr.t, tr.x);
  emit(out_dir, "trajectory.csv", csv);
  io::write_hash_sidecar(out_dir + "/trajectory.csv", csv);
  std::ostringstream canon;
  canon << "simulate\nalpha=" << alpha << "\nh=" << h << "\nT=" << T << "\nx0=" << x0s
        << "\nsystem=" << io::system_to_json(f);
  write_config_hash(out_dir, canon.str());
  if (tr.blew_up) {
    std::cerr << "blow-up at t = " << tr.blowup_time << "; partial trajectory written\n";
    return kExitBlowup;
  }
  std::cout << "wrote " << tr.t.size() << " rows to " << out_dir << "/trajectory.csv\n";
  return kExitOk;
}

// ---------------------------------------------------------------- audit

json audit_semigroup_json(const audit::RestartAudit& r) {
  return json{{"preset", "semigroup"},
              {"alpha", r.alpha},
              {"t_break", r.t_break},
              {"t_end", r.t_end},
              {"direct_end", {r.direct_end[0], r.direct_end[1]}},
              {"restart_end", {r.restart_end[0], r.restart_end[1]}},
              {"divergence", r.divergence},
              {"solver_tol", r.solver_tol},
              {"threshold", r.threshold},
              {"method", r.method},
              {"semigroup_holds", r.semigroup_holds},
              {"verdict", r.semigroup_holds ? "invariant-within-tol" : "non-invariant"}};
}

int cmd_audit(const std::string& preset, const std::string& system, double alpha, double h,
              double T, double tstar, const std::string& x0s, const std::string& line_s,
              const std::string& curve_s, double c2, const std::string& out_dir) {
  json out;
  std::vector<std::pair<std::string, frac::Trajectory>> paired;
  std::ostringstream canon;
  canon << "audit\npreset=" << preset << "\nalpha=" << alpha << "\nh=" << h << "\nT=" << T
        << "\ntstar=" << tstar << "\nx0=" << x0s << "\nc2=" << c2;

  if (preset == "semigroup") {
    PolyField2D f = load_field(system);
    check_alpha(alpha);
    if (!(tstar > 0 && tstar < T)) throw InputError("--tstar must lie in (0, T)");
    int steps = steps_for(h, T);
    auto x0 = parse_pair(x0s, "--x0");
    auto r = audit::restart_divergence(f, x0, alpha, tstar, T, steps);
    out = audit_semigroup_json(r);
    // paired trajectories for inspection: one direct run, one restarted at t*
    auto rhs = field_rhs(f);
    auto direct = frac::fam_solve(rhs, x0, alpha, r.t_end, steps);
    paired.emplace_back("direct", direct);
    int s1 = std::max(1, (int)std::llround(steps * r.t_break / r.t_end));
    auto leg1 = frac::fam_solve(rhs, x0, alpha, r.t_break, s1);
    if (!leg1.x.empty() && !leg1.blew_up) {
      auto leg2 = frac::fam_solve(rhs, leg1.x.back(), alpha, r.t_end - r.t_break, steps - s1);
      frac::Trajectory joined = leg1;
      for (std::size_t i = 1; i < leg2.t.size(); ++i) {
        joined.t.push_back(r.t_break + leg2.t[i]);
        joined.x.push_back(leg2.x[i]);
      }
      paired.emplace_back("restarted", joined);
    }
    canon << "\nsystem=" << io::system_to_json(f);
  } else if (preset == "subspace") {
    PolyField2D f = load_field(system);
    check_alpha(alpha);
    double A = 0, B = 0, C = 0;
    char tail = 0;
    if (std::sscanf(line_s.c_str(), "%lf,%lf,%lf%c", &A, &B, &C, &tail) != 3)
      throw InputError("--line: expected \"A,B,C\" for A x + B y + C = 0");
    int steps = steps_for(h, T);
    auto x0 = parse_pair(x0s, "--x0");
    auto r = audit::subspace_invariance_check(f, A, B, C, x0, alpha, T, steps);
    out = {{"preset", "subspace"},
           {"alpha", r.alpha},
           {"line", {A, B, C}},
           {"algebraic_invariant", r.algebraic_invariant},
           {"algebraic_note", r.algebraic_note},
           {"on_line_initially", r.on_line_initially},
           {"max_distance", r.max_distance},
           {"scale", r.scale},
           {"solver_tol", r.solver_tol},
           {"threshold", r.threshold},
           {"stayed", r.stayed},
           {"final_state", {r.final_state[0], r.final_state[1]}},
           {"verdict", r.stayed ? "stayed-on-line" : "left-line"}};
    paired.emplace_back("fractional", frac::fam_solve(field_rhs(f), x0, alpha, T, steps));
    canon << "\nline=" << line_s << "\nsystem=" << io::system_to_json(f);
  } else if (preset == "curve") {
    PolyField2D f = load_field(system);
    check_alpha(alpha);
    if (curve_s.empty()) throw InputError("--curve is required for the curve preset");
    BiPoly g = io::parse_poly_json(curve_s);
    int steps = steps_for(h, T);
    auto x0 = parse_pair(x0s, "--x0");
    auto r = audit::curve_invariance_check(f, g, x0, alpha, T, steps);
    out = {{"preset", "curve"},
           {"alpha", r.alpha},
           {"curve", g.str()},
           {"algebraic_invariant", r.algebraic_invariant},
           {"on_curve_initially", r.on_curve_initially},
           {"max_defect", r.max_defect},
           {"max_defect_classical", r.max_defect_classical},
           {"solver_tol", r.solver_tol},
           {"threshold", r.threshold},
           {"stayed", r.stayed},
           {"stayed_classical", r.stayed_classical},
           {"final_state", {r.final_state[0], r.final_state[1]}},
           {"verdict", r.stayed ? "stayed-on-curve" : "left-curve"}};
    paired.emplace_back("fractional", frac::fam_solve(field_rhs(f), x0, alpha, T, steps));
    paired.emplace_back("classical", frac::fam_solve(field_rhs(f), x0, 1.0, T, steps));
    canon << "\ncurve=" << curve_s << "\nsystem=" << io::system_to_json(f);
  } else if (preset == "manifold") {
    if (!(c2 > 0)) throw InputError("--c2 must be > 0");
    if (!(T > 0)) throw InputError("--T must be > 0");
    auto r = audit::stable_manifold_audit(c2, T);
    out = {{"preset", "manifold"},
           {"coefficient", r.coefficient},
           {"c1", r.c1},
           {"c2", r.c2},
           {"t_end", r.t_end},
           {"initial_x", r.initial_x},
           {"peak_x", r.peak_x},
           {"growth_ratio", r.growth_ratio},
           {"manifold_defect_max", r.manifold_defect_max},
           {"y_decayed", r.y_decayed},
           {"refuted", r.refuted},
           {"verdict", r.refuted ? "published manifold refuted" : "no refutation observed"}};
    frac::Trajectory tr;
    tr.t = r.t;
    tr.x = r.xy;
    paired.emplace_back("closed-form", tr);
  } else {
    throw InputError("unknown preset '" + preset +
                     "' (expected semigroup, subspace, curve, or manifold)");
  }

  emit(out_dir, "audit.json", out.dump(2) + "\n");
  for (const auto& [name, tr] : paired)
    emit(out_dir, name + ".csv", io::trajectory_csv(tr.t, tr.x));
  write_config_hash(out_dir, canon.str());
  std::cout << out["preset"].get<std::string>() << ": " << out["verdict"].get<std::string>()
            << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- ml / field

int cmd_ml(double alpha, double beta, const std::string& zs) {
  if (!(alpha > 0)) throw InputError("--alpha must be > 0");
  double re = 0, im = 0;
  char tail = 0;
  int got = std::sscanf(zs.c_str(), "%lf,%lf%c", &re, &im, &tail);
  if (got != 2) {
    im = 0;
    if (std::sscanf(zs.c_str(), "%lf%c", &re, &tail) != 1)
      throw InputError("--z: expected \"re\" or \"re,im\", got '" + zs + "'");
  }
  auto r = frac::ml_full({re, im}, alpha, beta);
  json j{{"alpha", alpha},
         {"beta", beta},
         {"z", {re, im}},
         {"value", {r.value.real(), r.value.imag()}},
         {"method", r.method},
         {"work", r.work},
         {"err_estimate", r.err_estimate}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_field(const std::string& system, const io::GridSpec& gs, bool overlay,
              const std::string& out_dir, const std::set<std::string>& formats) {
  PolyField2D f = load_field(system);
  if (gs.nx < 2 || gs.ny < 2) throw InputError("--grid must be at least 2");
  if (!(gs.x1 > gs.x0) || !(gs.y1 > gs.y0)) throw InputError("empty grid window");
  if (formats.count("csv")) {
    auto csv = io::quiver_csv(f, gs);
    emit(out_dir, "field.csv", csv);
    io::write_hash_sidecar(out_dir + "/field.csv", csv);
  }
  if (formats.count("svg")) {
    std::vector<io::SvgOverlay> overlays;
    if (overlay) {
      auto rep = run_all_detectors(f);
      for (const auto& c : rep.candidates) {
        if (c.g.is_zero() || c.infinite_family) continue;
        double level = 0;
        if (auto it = c.param_num.find("level"); it != c.param_num.end()) level = it->second;
        overlays.push_back({c.g, level, "#c0392b"});
      }
    }
    emit(out_dir, "field.svg", io::field_svg(f, gs, overlays));
  }
  std::ostringstream canon;
  canon << "field\nwindow=" << gs.x0 << "," << gs.x1 << "," << gs.y0 << "," << gs.y1
        << "\ngrid=" << gs.nx << "x" << gs.ny << "\noverlay=" << overlay
        << "\nsystem=" << io::system_to_json(f);
  write_config_hash(out_dir, canon.str());
  std::cout << "field data written to " << out_dir << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant-curve detection and fractional-order auditing for planar systems"};
  app.require_subcommand(1);

  std::string system, out_dir = ".", x0s = "0.1,0.3", format = "json,csv,svg";
  double alpha = 1.0, h = 1.0 / 256, T = 1.0, tstar = 0.0, c2 = 1e-10;

  auto add_common = [&](CLI::App* c, bool needs_system) {
    auto* opt = c->add_option("--system", system, "system JSON file or bundled name");
    if (needs_system) opt->required();
    c->add_option("--out", out_dir, "output directory");
    c->add_option("--format", format, "comma list of json,csv,svg");
  };

  auto* an = app.add_subcommand("analyze", "detect invariant curves, write report");
  add_common(an, true);

  auto* sim = app.add_subcommand("simulate", "integrate the system, write trajectory CSV");
  sim->set_help_flag("--help", "print help"); // frees -h for the step size
  add_common(sim, true);
  sim->add_option("--alpha", alpha, "derivative order in (0,1]");
  sim->add_option("--h", h, "step size");
  sim->add_option("--T", T, "end time");
  sim->add_option("--x0", x0s, "initial point \"x,y\"");

  auto* au = app.add_subcommand("audit", "run an invariance audit preset");
  au->set_help_flag("--help", "print help");
  std::string preset, line_s, curve_s;
  au->add_option("--preset", preset, "semigroup | subspace | curve | manifold")->required();
  add_common(au, false);
  au->add_option("--alpha", alpha, "derivative order in (0,1]");
  au->add_option("--h", h, "step size");
  au->add_option("--T", T, "end time");
  au->add_option("--tstar", tstar, "restart time for the semigroup preset");
  au->add_option("--x0", x0s, "initial point \"x,y\"");
  au->add_option("--line", line_s, "line A,B,C meaning A x + B y + C = 0");
  au->add_option("--curve", curve_s, "curve coefficients as {\"i,j\": \"p/q\", ...}");
  au->add_option("--c2", c2, "manifold preset: initial y amplitude");

  auto* mlc = app.add_subcommand("ml", "evaluate the two-parameter Mittag-Leffler function");
  double beta = 1.0;
  std::string zs = "1";
  mlc->add_option("--alpha", alpha, "first parameter, > 0")->required();
  mlc->add_option("--beta", beta, "second parameter");
  mlc->add_option("--z", zs, "argument \"re\" or \"re,im\"");

  auto* fld = app.add_subcommand("field", "sample the vector field on a grid");
  add_common(fld, true);
  io::GridSpec gs;
  bool overlay = false;
  fld->add_option("--xmin", gs.x0, "window");
  fld->add_option("--xmax", gs.x1, "window");
  fld->add_option("--ymin", gs.y0, "window");
  fld->add_option("--ymax", gs.y1, "window");
  int grid_n = 24;
  fld->add_option("--grid", grid_n, "samples per axis");
  fld->add_flag("--overlay", overlay, "overlay detected invariant curves in the SVG");

  auto* sys = app.add_subcommand("systems", "list bundled system names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput; // --help exits 0, bad flags exit 2
  }

  try {
    auto formats = parse_formats(format);
    if (an->parsed()) return cmd_analyze(system, out_dir, formats);
    if (sim->parsed()) return cmd_simulate(system, alpha, h, T, x0s, out_dir);
    if (au->parsed()) {
      if (preset == "manifold" && au->count("--T") == 0) T = 40.0; // closed form, long horizon
      return cmd_audit(preset, system, alpha, h, T, tstar, x0s, line_s, curve_s, c2, out_dir);
    }
    if (mlc->parsed()) return cmd_ml(alpha, beta, zs);
    if (fld->parsed()) {
      gs.nx = gs.ny = grid_n;
      return cmd_field(system, gs, overlay, out_dir, formats);
    }
    if (sys->parsed()) {
      for (const auto& n : io::corpus_names()) std::cout << n << "\n";
      return kExitOk;
    }
  } catch (const io::SystemParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
