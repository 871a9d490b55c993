#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hqc/catalog.hpp"
#include "hqc/curve_io.hpp"
#include "hqc/grid.hpp"
#include "hqc/group.hpp"
#include "hqc/lifting.hpp"
#include "hqc/report.hpp"

namespace hqc::cli {

namespace {

using json = nlohmann::json;

struct RunConfig {
  std::string command;
  std::string map;
  std::string grid;
  double tol = 1e-6;
  std::string in;
  std::string out;
  std::string format;
  bool force = false;
  std::string basepoint;
  double phase = 0.0;
  std::string kind = "heis";
  unsigned threads = 0;
};

// Raised for problems with the command line or the map spec.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CatalogEntry parse_map(const std::string& text) {
  if (text.empty()) throw UsageError("--map is required");
  json spec;
  if (text.front() == '{') {
    try {
      spec = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError(std::string("map spec is not valid JSON: ") + e.what());
    }
  } else {
    spec = text;
  }
  try {
    return catalog_lookup(spec);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::optional<cplx> parse_basepoint(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double re = 0.0, im = 0.0;
  if (!(in >> re)) throw UsageError("--basepoint expects 're' or 're,im'");
  if (!(in >> im)) im = 0.0;
  std::string rest;
  if (in >> rest) throw UsageError("--basepoint expects 're' or 're,im'");
  return cplx{re, im};
}

std::vector<HeisPoint> resolve_grid(const std::string& text, GroupKind kind) {
  try {
    if (text.empty()) return kind == GroupKind::star ? standard_grid() : unit_box_grid();
    if (text == "standard") return standard_grid();
    if (text == "box") return unit_box_grid();
    return polar_grid(grid_from_json(json::parse(text)));
  } catch (const json::exception& e) {
    throw UsageError(std::string("grid spec is not valid JSON: ") + e.what());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// Evaluates fn at every point on a small thread pool. Results keep grid
// order, and the error of the lowest failing index is the one rethrown.
template <class T, class F>
std::vector<T> sweep(const std::vector<HeisPoint>& pts, F fn, unsigned threads) {
  std::vector<std::optional<T>> slots(pts.size());
  std::vector<std::exception_ptr> errors(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) {
      try {
        slots[i] = fn(pts[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, pts.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
    worker();
  }
  std::vector<T> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string resolve_format(const RunConfig& cfg, const char* fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
  return f;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& format, const json& doc, const Table& table) {
  Sink sink(cfg.out, out);
  if (format == "csv") {
    table.write_csv(*sink);
  } else {
    *sink << doc.dump(2) << '\n';
  }
}

json header(const RunConfig& cfg) { return {{"schema", 1}, {"command", cfg.command}}; }

int cmd_lift(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CatalogEntry entry = parse_map(cfg.map);
  if (!entry.planar) throw UsageError("lift needs a planar map; '" + entry.name + "' is a Heisenberg isometry");
  const std::string format = resolve_format(cfg, "json");
  LiftOptions opt;
  opt.basepoint = parse_basepoint(cfg.basepoint);
  opt.phase = cfg.phase;
  opt.force = cfg.force;
  const bool star = entry.planar->domain == PlanarDomain::L;
  const GroupKind kind = star ? GroupKind::star : GroupKind::heis;
  const std::vector<HeisPoint> grid = resolve_grid(cfg.grid, kind);

  StarMap F;
  std::optional<Potential> potential;
  double gate = 0.0;
  bool forced = false;
  if (star) {
    StarLift L = lift_star(*entry.planar, opt);
    F = L.map;
    potential = L.psi;
    gate = L.gate_residual;
    forced = L.forced;
  } else {
    HeisLift L = lift_heis(*entry.planar, opt);
    F = L.map;
    potential = L.phi;
    gate = L.gate_residual;
    forced = L.forced;
  }
  if (forced) err << "warning: symplectic gate failed (residual " << format_number(gate) << "); lift forced\n";

  Table table;
  table.columns = {"x", "y", "t", star ? "zeta_re" : "z_re", star ? "zeta_im" : "z_im", star ? "psi" : "phi",
                   "fI_re", "fI_im", "f3", "R1_re", "R1_im", "R2_re", "R2_im", "R3_minus_lambda",
                   "lambda_star", "K", "mu_re", "mu_im"};
  const Potential pot = *potential;
  table.rows = sweep<std::vector<double>>(
      grid,
      [&](const HeisPoint& p) {
        const cplx base = star ? cplx{-std::norm(p.z), p.t} : p.z;
        const FrameDerivatives d = frame_derivatives(F, p);
        const ContactResiduals r = contact_residuals(d);
        const Distortion k = distortion(d);
        const cplx mu = beltrami(d);
        return std::vector<double>{p.x(),       p.y(),       p.t,         base.real(),      base.imag(),
                                   pot(base),   d.f.real(),  d.f.imag(),  d.f3,             r.R1.real(),
                                   r.R1.imag(), r.R2.real(), r.R2.imag(), r.R3 - r.lambda,  r.lambda,
                                   k.K,         mu.real(),   mu.imag()};
      },
      cfg.threads);

  double max_res = 0.0, max_lambda = 0.0, max_K = 1.0, mu_inf = 0.0;
  for (const auto& row : table.rows) {
    max_res = std::max({max_res, std::hypot(row[9], row[10]), std::hypot(row[11], row[12]), std::abs(row[13])});
    max_lambda = std::max(max_lambda, std::abs(row[14] - 1.0));
    max_K = std::max(max_K, row[15]);
    mu_inf = std::max(mu_inf, std::hypot(row[16], row[17]));
  }
  const bool pass = max_res < cfg.tol && max_lambda < cfg.tol;

  LiftDescriptor desc;
  desc.kind = kind;
  desc.map_spec = entry.spec;
  desc.basepoint = pot.basepoint();
  desc.phase = pot.phase();
  desc.forced = forced;
  json doc = header(cfg);
  doc["map"] = entry.spec;
  doc["lift"] = to_json(desc);
  doc["forced"] = forced;
  doc["gate_residual"] = gate;
  doc["tolerance"] = cfg.tol;
  doc["rows"] = table.to_json();
  doc["summary"] = {{"points", table.rows.size()},
                    {"max_residual", max_res},
                    {"max_lambda_deviation", max_lambda},
                    {"max_K", max_K},
                    {"mu_inf", mu_inf},
                    {"pass", pass}};
  emit(cfg, out, format, doc, table);
  err << "lift: " << table.rows.size() << " points, max residual " << format_number(max_res)
      << ", max |lambda - 1| " << format_number(max_lambda) << (pass ? "" : " (tolerance breached)") << '\n';
  return pass ? kOk : kBreach;
}

int cmd_contact(const RunConfig& cfg, std::ostream& out, std::ostream& err, bool distortion_mode) {
  const CatalogEntry entry = parse_map(cfg.map);
  const std::string format = resolve_format(cfg, "json");
  LiftOptions opt;
  opt.basepoint = parse_basepoint(cfg.basepoint);
  opt.phase = cfg.phase;
  opt.force = cfg.force;
  const StarMap F = entry_map(entry, opt);
  const std::vector<HeisPoint> grid = resolve_grid(cfg.grid, F.kind);
  const std::vector<ContactReport> reports =
      sweep<ContactReport>(grid, [&](const HeisPoint& p) { return contact_report(F, p); }, cfg.threads);

  Table table;
  table.columns = contact_columns();
  json rows = json::array();
  double max_res = 0.0, max_K = 1.0, mu_inf = 0.0, bound_gap = -1.0;
  double lo = reports.empty() ? 0.0 : reports.front().lambda_star, hi = lo;
  for (const ContactReport& r : reports) {
    table.add(contact_row(r));
    rows.push_back(to_json(r));
    max_res = std::max({max_res, std::abs(r.R1), std::abs(r.R2), std::abs(r.R3_minus_lambda)});
    max_K = std::max(max_K, r.K);
    mu_inf = std::max(mu_inf, std::abs(r.mu));
    bound_gap = std::max(bound_gap, std::abs(r.mu) - (r.K - 1.0) / (r.K + 1.0));
    lo = std::min(lo, r.lambda_star);
    hi = std::max(hi, r.lambda_star);
  }
  const double k_bound = (max_K - 1.0) / (max_K + 1.0);
  const bool contact_ok = max_res < cfg.tol;
  const bool bound_ok = bound_gap <= cfg.tol;
  const bool pass = contact_ok && (!distortion_mode || bound_ok);

  json doc = header(cfg);
  doc["map"] = entry.spec;
  doc["frame"] = F.kind == GroupKind::star ? "star" : "heis";
  doc["tolerance"] = cfg.tol;
  doc["rows"] = rows;
  doc["summary"] = {{"points", reports.size()},   {"max_residual", max_res}, {"lambda_min", lo},
                    {"lambda_max", hi},           {"max_K", max_K},          {"mu_inf", mu_inf},
                    {"k_bound", k_bound},         {"mu_bound_gap", bound_gap}, {"contact", contact_ok},
                    {"pass", pass}};
  emit(cfg, out, format, doc, table);
  err << cfg.command << ": max residual " << format_number(max_res) << ", max K " << format_number(max_K)
      << ", |mu|_inf " << format_number(mu_inf) << " vs (K-1)/(K+1) " << format_number(k_bound)
      << (pass ? "" : " (breach)") << '\n';
  return pass ? kOk : kBreach;
}

CurveSpace base_space(GroupKind kind) { return kind == GroupKind::heis ? CurveSpace::plane : CurveSpace::half_plane; }

GroupKind parse_kind(const std::string& kind) {
  if (kind == "heis") return GroupKind::heis;
  if (kind == "star") return GroupKind::star;
  throw UsageError("--kind must be heis or star");
}

Curve read_input_curve(const RunConfig& cfg, GroupKind kind) {
  if (cfg.in.empty()) throw UsageError("--in is required");
  return load_curve(cfg.in, base_space(kind));
}

int cmd_curve_lift(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GroupKind kind = parse_kind(cfg.kind);
  const std::string format = resolve_format(cfg, "csv");
  const Curve source = read_input_curve(cfg, kind);
  const Curve lift =
      kind == GroupKind::heis ? lift_plane_curve_heis(source, cfg.phase) : lift_hyperbolic_curve(source, cfg.phase);
  const double defect = horizontality_defect(lift);
  Table table;
  table.columns = {"s", "re", "im", "t"};
  for (std::size_t k = 0; k < lift.size(); ++k) table.add({lift.s[k], lift.z[k].real(), lift.z[k].imag(), lift.t[k]});
  json doc = header(cfg);
  doc["kind"] = cfg.kind;
  doc["start"] = cfg.phase;
  doc["horizontality_defect"] = defect;
  doc["curve"] = curve_to_json(lift);
  emit(cfg, out, format, doc, table);
  err << "curve-lift: " << lift.size() << " samples, horizontality defect " << format_number(defect) << '\n';
  return defect < cfg.tol ? kOk : kBreach;
}

int cmd_holonomy(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GroupKind kind = parse_kind(cfg.kind);
  const std::string format = resolve_format(cfg, "json");
  const Curve source = read_input_curve(cfg, kind);
  const HolonomyReport rep = holonomy_closed(source, kind);
  const bool pass = rep.residual < cfg.tol;
  Table table;
  table.columns = {"delta", "area_oracle", "area_check", "residual"};
  table.add({rep.delta, rep.area_oracle, rep.area_check, rep.residual});
  json doc = header(cfg);
  doc["kind"] = cfg.kind;
  doc["tolerance"] = cfg.tol;
  doc["holonomy"] = to_json(rep);
  doc["pass"] = pass;
  emit(cfg, out, format, doc, table);
  err << "holonomy: delta " << format_number(rep.delta) << ", area " << format_number(rep.area_oracle)
      << ", residual " << format_number(rep.residual) << '\n';
  return pass ? kOk : kBreach;
}

int cmd_catalog_list(const RunConfig& cfg, std::ostream& out) {
  json doc = header(cfg);
  doc["maps"] = catalog_list();
  Sink sink(cfg.out, out);
  *sink << doc.dump(2) << '\n';
  return kOk;
}

bool curve_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput:
    case ErrorCode::TooFewSamples:
    case ErrorCode::LeftHalfPlaneViolation:
    case ErrorCode::InvalidPoint:
    case ErrorCode::NotClosed:
      return true;
    default:
      return false;
  }
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  const bool curve_cmd = cfg.command == "curve-lift" || cfg.command == "holonomy";
  try {
    if (cfg.command == "lift") return cmd_lift(cfg, out, err);
    if (cfg.command == "check-contact") return cmd_contact(cfg, out, err, false);
    if (cfg.command == "distortion") return cmd_contact(cfg, out, err, true);
    if (cfg.command == "curve-lift") return cmd_curve_lift(cfg, out, err);
    if (cfg.command == "holonomy") return cmd_holonomy(cfg, out, err);
    if (cfg.command == "catalog list") return cmd_catalog_list(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::NotSymplectic) return kNotSymplectic;
    if (e.code() == ErrorCode::QuadratureNonConvergence) return kQuadrature;
    if (curve_cmd && curve_error(e.code())) return kBadCurve;
    return kBreach;
  }
  throw UsageError("no command given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Contact maps of the Heisenberg and hyperbolic Heisenberg groups", "hqc"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Residual tolerance")->capture_default_str();
    sub->add_option("--out", cfg.out, "Write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json or csv");
    sub->add_option("--threads", cfg.threads, "Worker threads for grid sweeps (0: all cores)");
  };
  auto add_map = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--map", cfg.map, "Catalog name or JSON spec, e.g. '{\"name\":\"twist\",\"k\":2}'")->required();
    sub->add_option("--grid", cfg.grid, "standard, box, or a JSON grid spec");
    sub->add_flag("--force", cfg.force, "Lift even if the symplectic gate fails");
    sub->add_option("--basepoint", cfg.basepoint, "Potential basepoint 're,im'");
    sub->add_option("--phase", cfg.phase, "Value of the potential at the basepoint");
  };
  auto add_curve = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--in", cfg.in, "Curve file (.csv or .json)")->required();
    sub->add_option("--kind", cfg.kind, "heis (plane curve) or star (half-plane curve)")->capture_default_str();
    sub->add_option("--phase", cfg.phase, "Initial t (heis) or arg z (star) of the lift");
  };

  CLI::App* lift = app.add_subcommand("lift", "Lift a symplectic map and check the result on a grid");
  add_map(lift);
  CLI::App* contact = app.add_subcommand("check-contact", "Contact residuals of a catalog map on a grid");
  add_map(contact);
  CLI::App* dist = app.add_subcommand("distortion", "Distortion and Beltrami coefficient on a grid");
  add_map(dist);
  CLI::App* curve = app.add_subcommand("curve-lift", "Horizontal lift of a plane or half-plane curve");
  add_curve(curve);
  CLI::App* hol = app.add_subcommand("holonomy", "Holonomy of a closed curve against its enclosed area");
  add_curve(hol);
  CLI::App* catalog = app.add_subcommand("catalog", "Catalog of example maps");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "List catalog families and parameters");
  list->add_option("--out", cfg.out, "Write the listing here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (CLI::App* sub : {lift, contact, dist, curve, hol})
    if (sub->parsed()) cfg.command = sub->get_name();
  if (list->parsed()) cfg.command = "catalog list";

  try {
    return dispatch(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace hqc::cli
