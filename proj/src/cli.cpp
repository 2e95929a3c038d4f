#include "holomove/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "holomove/acceptance.hpp"
#include "holomove/applications.hpp"
#include "holomove/atlas.hpp"
#include "holomove/errors.hpp"
#include "holomove/families.hpp"
#include "holomove/hyperbolic.hpp"
#include "holomove/motion_io.hpp"
#include "holomove/motion_lab.hpp"

namespace holomove::cli {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& text) {
  const std::string t = trim(text);
  if (t == "e-inv") return std::exp(-1.0);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw input_error("not a number: '" + text + "'");
  }
  if (used != t.size() || !std::isfinite(v)) throw input_error("not a finite number: '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw input_error("not an integer: '" + text + "'");
  }
  if (used != t.size()) throw input_error("not an integer: '" + text + "'");
  return v;
}

std::string print_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string print_complex(complex z) { return print_double(z.real()) + "," + print_double(z.imag()); }

json complex_json(complex z) { return json::array({z.real(), z.imag()}); }

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  if (trim(text).empty()) return ids;
  for (const auto& part : split(text, ',')) ids.push_back(parse_int(part));
  return ids;
}

// -- command results --------------------------------------------------------

struct Outcome {
  bool pass = true;
  json outputs = json::object();
  json tolerances = json::object();
};

atlas::RenderSpec render_spec(const RunConfig& c, atlas::RenderKind kind) {
  atlas::RenderSpec s;
  s.kind = kind;
  s.window = c.window.value_or(atlas::default_window(kind));
  s.width = c.width;
  s.height = c.height;
  s.max_iter = c.max_iter;
  s.escape_radius = c.escape_radius;
  s.a = c.a;
  s.lambda = c.lambda;
  s.branch = c.branch == "negated" ? families::SqrtBranch::negated : families::SqrtBranch::principal;
  return s;
}

json label_counts(const atlas::RasterClass& r) {
  return {{"exterior", r.count(atlas::exterior)},     {"member", r.count(atlas::member)},
          {"undecided", r.count(atlas::undecided)},   {"other_basin", r.count(atlas::other_basin)},
          {"other_attractor", r.count(atlas::other_attractor)}, {"unsettled_members", r.unsettled_members}};
}

json write_raster(const atlas::RasterClass& r, const std::string& image, const std::string& labels,
                  std::ostream& out) {
  atlas::write_image(r, image);
  json j{{"image", image}, {"width", r.width()}, {"height", r.height()}, {"max_iter", r.max_iter},
         {"escape_radius", r.escape_radius}, {"counts", label_counts(r)},
         {"window", {r.spec.window.x_min, r.spec.window.x_max, r.spec.window.y_min, r.spec.window.y_max}}};
  if (!labels.empty()) {
    atlas::write_label_dump(r, labels);
    j["labels"] = labels;
  }
  out << "wrote " << image << " (" << r.width() << "x" << r.height() << ", " << atlas::to_string(r.spec.kind)
      << "): member " << r.count(atlas::member) << ", exterior " << r.count(atlas::exterior) << ", undecided "
      << r.count(atlas::undecided) << ", other_basin " << r.count(atlas::other_basin) << ", other_attractor "
      << r.count(atlas::other_attractor) << "\n";
  return j;
}

std::string default_output(atlas::RenderKind kind, const std::string& output) {
  return output.empty() ? atlas::to_string(kind) + ".ppm" : output;
}

Outcome cmd_render(const RunConfig& c, atlas::RenderKind kind, std::ostream& out) {
  const auto spec = render_spec(c, kind);
  const auto r = atlas::render(spec, c.effective_workers());
  Outcome o;
  const std::string image = default_output(kind, c.output);
  o.outputs["raster"] = write_raster(r, image, c.labels, out);

  if (kind == atlas::RenderKind::dyn_plane_fa && spec.window.pixel_of(c.a, spec.width, spec.height).first < 0) {
    // a itself is off the stated window: also render one that holds it
    auto around = spec;
    around.window = window_around(0.0, c.a, std::max(1.0, 0.1 * std::abs(c.a)));
    const std::filesystem::path p(image);
    const std::string second = (p.parent_path() / (p.stem().string() + "_around_a" + p.extension().string())).string();
    o.outputs["raster_around_a"] = write_raster(atlas::render(around, c.effective_workers()), second, "", out);
  }
  if (kind == atlas::RenderKind::locus_G) {
    const bool zero_in = families::in_connectedness_locus(families::RationalParam(spec.lambda, 0.0, spec.branch));
    o.outputs["zero_in_locus"] = zero_in;
    out << "A = 0 " << (zero_in ? "is" : "is not") << " in the connectedness locus\n";
  }
  return o;
}

Outcome cmd_centers(const RunConfig& c, std::ostream& out) {
  const auto centers = families::basin_centers(c.count);
  Outcome o;
  json list = json::array();
  for (complex z : centers.ordered()) {
    out << format_complex(z) << "\n";
    list.push_back(complex_json(z));
  }
  o.outputs["centers"] = list;
  o.tolerances["newton_residual"] = 1e-10;
  return o;
}

std::string describe_kind(motion::CorollaryKind k) {
  return k == motion::CorollaryKind::explosion_to ? "explosion_to" : "motion_extension";
}

struct LoadedMotion {
  motion::MotionDocument doc;
  std::size_t pivot0;
  std::size_t pivot1;
  bool explicit_pivots = false;
};

LoadedMotion load_source(const RunConfig& c) {
  const std::string& s = c.source;
  if (s == "app1") {
    auto src = applications::immediate_basin_source(c.radius, c.samples);
    return {{src.sample, src.contour}, src.pivot0, src.pivot1, false};
  }
  if (s.rfind("app1-preimage:", 0) == 0) {
    auto src = applications::preimage_source(parse_int(s.substr(14)), c.radius, c.samples);
    return {{src.sample, src.contour}, src.pivot0, src.pivot1, false};
  }
  if (s == "app2") {
    auto src = applications::per1_special_source(c.samples);
    return {{src.sample, src.contour}, src.pivot0, src.pivot1, true};
  }
  if (s.rfind("file:", 0) == 0) {
    auto doc = motion::read_json(s.substr(5));
    const auto p = motion::farthest_pivots(doc.sample.E_points);
    return {doc, p.first, p.second, false};
  }
  throw input_error("unknown source '" + s + "' (app1, app1-preimage:i, app2, file:PATH)");
}

json decomposition_json(const motion::ExplosionDecomposition& d) {
  json P = json::array();
  for (complex v : d.P.coefficients()) P.push_back(complex_json(v));
  json hat = json::array();
  for (complex v : d.hatH.E_points) hat.push_back(complex_json(v));
  return {{"order", d.order}, {"P", P}, {"residual", d.residual}, {"pivots", {d.pivot0, d.pivot1}},
          {"inverted", d.inverted}, {"hatH_base", hat}};
}

void print_decomposition(const motion::ExplosionDecomposition& d, const motion::CorollaryVerdict& v,
                         std::ostream& out) {
  out << "n = " << d.order << "\n";
  out << "P = [";
  for (std::size_t k = 0; k < d.P.coefficients().size(); ++k)
    out << (k ? ", " : "") << format_complex(d.P.coefficients()[k]);
  out << "]\n";
  out << "residual = " << d.residual << "\n";
  out << "corollary: " << describe_kind(v.kind);
  if (v.kind == motion::CorollaryKind::explosion_to) out << " " << format_complex(v.z_star);
  out << "\n";
}

CircleContour require_contour(const motion::MotionDocument& doc) {
  if (!doc.contour) throw input_error("motion document has no contour");
  return *doc.contour;
}

Outcome cmd_fit(const RunConfig& c, std::ostream& out) {
  const auto m = load_source(c);
  const auto contour = require_contour(m.doc);
  if (!c.save.empty()) motion::write_json(c.save, m.doc);
  const auto d = m.explicit_pivots ? motion::decompose_explosion(m.doc.sample, contour, m.pivot0, m.pivot1)
                                   : motion::decompose_explosion(m.doc.sample, contour);
  const auto v = motion::corollary_classify(d);
  print_decomposition(d, v, out);
  Outcome o;
  o.outputs = decomposition_json(d);
  o.outputs["corollary"] = describe_kind(v.kind);
  if (v.kind == motion::CorollaryKind::explosion_to) o.outputs["z_star"] = complex_json(v.z_star);
  if (!c.save.empty()) o.outputs["saved"] = c.save;
  o.tolerances = {{"significance", motion::significance}, {"winding_snap", winding_snap_tolerance},
                  {"corollary", 1e-8}};
  return o;
}

// Trajectory values reordered to follow the contour points.
std::vector<std::vector<complex>> trajectories_on(const motion::MotionSample& sample, const CircleContour& c) {
  const motion::MotionSample m = sample.marked_at_infinity ? motion::invert_parameters(sample) : sample;
  std::vector<std::vector<complex>> out(m.cols(), std::vector<complex>(static_cast<std::size_t>(c.samples())));
  const double tol = 1e-9 * c.radius();
  for (int k = 0; k < c.samples(); ++k) {
    const complex p = c.point(k);
    std::size_t j = 0;
    while (j < m.rows() && std::abs(m.param_points[j] - p) > tol) ++j;
    if (j == m.rows()) throw input_error("contour point " + std::to_string(k) + " is not among the parameters");
    for (std::size_t i = 0; i < m.cols(); ++i) out[i][static_cast<std::size_t>(k)] = m.at(j, i);
  }
  return out;
}

Outcome cmd_classify(const RunConfig& c, std::ostream& out) {
  if (c.file.empty()) throw input_error("classify needs --file");
  const auto doc = motion::read_json(c.file);
  const auto contour = require_contour(doc);
  const auto& m = doc.sample;
  const auto [p0, p1] = motion::farthest_pivots(m.E_points);
  const auto traj = trajectories_on(m, contour);

  Outcome o;
  json verdicts = json::array();
  bool all_holomorphic = true;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto v = motion::classify_extension(traj[i], contour, m.E_points[p0], m.E_points[p1]);
    all_holomorphic = all_holomorphic && v.kind == motion::ExtensionKind::holomorphic;
    out << "z[" << i << "] = " << format_complex(m.E_points[i]) << ": " << v.describe() << "\n";
    json j{{"point", complex_json(m.E_points[i])}, {"verdict", v.describe()}};
    if (v.winding) j["winding"] = *v.winding;
    verdicts.push_back(j);
  }
  o.outputs["trajectories"] = verdicts;
  if (!m.e_connected) {
    out << "corollary: not applicable (E is not declared connected)\n";
    o.outputs["corollary"] = "not_applicable";
  } else if (!all_holomorphic) {
    out << "corollary: not applicable (not horizontally extendable)\n";
    o.outputs["corollary"] = "not_applicable";
  } else {
    const auto d = motion::decompose_explosion(m, contour);
    const auto v = motion::corollary_classify(d);
    print_decomposition(d, v, out);
    o.outputs["decomposition"] = decomposition_json(d);
    o.outputs["corollary"] = describe_kind(v.kind);
  }
  o.tolerances = {{"significance", motion::significance}, {"winding_snap", winding_snap_tolerance}};
  return o;
}

Outcome cmd_kbound(const RunConfig& c, std::ostream& out) {
  Outcome o;
  double R0 = 0.0;
  bool in_unbounded = true;
  if (c.r0) {
    R0 = *c.r0;
    if (std::abs(c.a) <= R0) in_unbounded = false;
    o.outputs["R0_source"] = "given";
  } else {
    auto spec = render_spec(c, atlas::RenderKind::param_plane_fa);
    const auto raster = atlas::render(spec, c.effective_workers());
    R0 = 1.1 * atlas::bounding_radius(raster, atlas::member);
    in_unbounded = atlas::in_unbounded_complement(raster, c.a, R0);
    o.outputs["R0_source"] = "rendered";
    o.outputs["render_resolution"] = {c.width, c.height};
  }
  o.outputs["R0"] = R0;
  o.outputs["a"] = complex_json(c.a);
  o.outputs["in_unbounded_complement"] = in_unbounded;
  out << "R0 = " << print_double(R0) << "\n";
  out << "a " << (in_unbounded ? "lies" : "does not lie") << " in the unbounded complement of C0\n";
  if (std::abs(c.a) > R0) {
    const auto e = hyperbolic::K_upper_bound(c.a, R0);
    o.outputs["d_upper"] = e.d_upper;
    o.outputs["K_upper"] = e.K_upper;
    out << "d_upper = " << print_double(e.d_upper) << "\nK_upper = " << print_double(e.K_upper) << "\n";
  } else {
    out << "no bound: |a| <= R0\n";
    o.pass = false;
  }
  o.tolerances["R0_margin"] = 1.1;
  return o;
}

Outcome cmd_verify(const RunConfig& c, std::ostream& out) {
  acceptance::Context ctx;
  ctx.suite = acceptance::suite_from_string(c.suite);
  ctx.workers = c.effective_workers();
  Outcome o;
  json results = json::array();
  acceptance::run_suite(ctx, parse_id_list(c.only), [&](const acceptance::CriterionResult& r) {
    out << acceptance::format_line(r) << "\n" << std::flush;
    results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                       {"seconds", r.seconds}, {"budget_seconds", r.budget}});
    o.pass = o.pass && r.pass;
  });
  o.outputs["criteria"] = results;
  o.outputs["suite"] = c.suite;
  return o;
}

void write_report(const RunConfig& c, const Outcome& o) {
  json inputs = json::object();
  for (const auto& [k, v] : c.entries()) inputs[k] = v;
  const json report{{"schema_version", report_schema_version}, {"command", c.command}, {"inputs", inputs},
                    {"outputs", o.outputs},  {"tolerances", o.tolerances},           {"pass", o.pass}};
  std::ofstream f(c.report);
  if (!f) throw input_error("cannot write report " + c.report);
  f << report.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_double(parts[0]), parse_double(parts[1])};
  throw input_error("expected RE,IM: '" + text + "'");
}

Window parse_window(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw input_error("expected x_min,x_max,y_min,y_max: '" + text + "'");
  Window w{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]), parse_double(parts[3])};
  w.validate();
  return w;
}

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  auto positive = [&](int v) {
    if (v <= 0) throw input_error(key + " must be positive");
    return v;
  };
  if (key == "command") command = value;
  else if (key == "window") window = value.empty() ? std::nullopt : std::optional<Window>(parse_window(value));
  else if (key == "width") width = positive(parse_int(value));
  else if (key == "height") height = positive(parse_int(value));
  else if (key == "resolution") width = height = positive(parse_int(value));
  else if (key == "max_iter") max_iter = parse_int(value);
  else if (key == "escape_radius") escape_radius = parse_double(value);
  else if (key == "a") a = parse_complex(value);
  else if (key == "lambda") lambda = parse_complex(value);
  else if (key == "branch") {
    if (value != "principal" && value != "negated") throw input_error("branch must be principal or negated");
    branch = value;
  } else if (key == "count") count = parse_int(value);
  else if (key == "source") source = value;
  else if (key == "radius") radius = parse_double(value);
  else if (key == "samples") samples = positive(parse_int(value));
  else if (key == "file") file = value;
  else if (key == "output") output = value;
  else if (key == "labels") labels = value;
  else if (key == "save") save = value;
  else if (key == "report") report = value;
  else if (key == "workers") {
    workers = parse_int(value);
    if (workers < 0) throw input_error("workers must be nonnegative");
  } else if (key == "suite") {
    acceptance::suite_from_string(value);
    suite = value;
  } else if (key == "only") {
    parse_id_list(value);
    only = value;
  } else if (key == "r0") r0 = value.empty() ? std::nullopt : std::optional<double>(parse_double(value));
  else throw input_error("unknown configuration key '" + key + "'");
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  std::string w;
  if (window) w = print_double(window->x_min) + "," + print_double(window->x_max) + "," +
                  print_double(window->y_min) + "," + print_double(window->y_max);
  return {{"command", command},
          {"window", w},
          {"width", std::to_string(width)},
          {"height", std::to_string(height)},
          {"max_iter", std::to_string(max_iter)},
          {"escape_radius", print_double(escape_radius)},
          {"a", print_complex(a)},
          {"lambda", print_complex(lambda)},
          {"branch", branch},
          {"count", std::to_string(count)},
          {"source", source},
          {"radius", print_double(radius)},
          {"samples", std::to_string(samples)},
          {"file", file},
          {"output", output},
          {"labels", labels},
          {"save", save},
          {"report", report},
          {"workers", std::to_string(workers)},
          {"suite", suite},
          {"only", only},
          {"r0", r0 ? print_double(*r0) : ""}};
}

std::string RunConfig::print() const {
  std::string out;
  for (const auto& [k, v] : entries()) out += k + "=" + v + "\n";
  return out;
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw input_error("line " + std::to_string(number) + ": expected key=value");
    c.set(trim(t.substr(0, eq)), t.substr(eq + 1));
  }
  return c;
}

int RunConfig::effective_workers() const {
  const int available = default_workers();
  return workers > 0 ? workers : available;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"holomove: holomorphic motions and explosions in complex dynamics", "holomove"};
  app.require_subcommand(1);
  app.fallthrough();

  // every flag is kept as text and applied through RunConfig::set after the
  // config file, so both share one parser
  std::map<std::string, std::string> flags;
  std::vector<std::pair<std::string, CLI::Option*>> bound;
  auto flag = [&](CLI::App* target, const std::string& key, const std::string& help) {
    std::string name = "--" + key;
    std::replace(name.begin(), name.end(), '_', '-');
    bound.emplace_back(key, target->add_option(name, flags[key], help));
  };

  std::string config_path;
  app.add_option("--config", config_path, "key=value file; flags override its entries");
  flag(&app, "report", "write a JSON report {schema_version, command, inputs, outputs, tolerances, pass}");
  flag(&app, "workers", "worker threads (default: HOLOMOVE_WORKERS, else hardware concurrency)");

  auto render_flags = [&](CLI::App* sub) {
    flag(sub, "window", "x_min,x_max,y_min,y_max (default: the kind's customary window)");
    flag(sub, "width", "pixels (default 512)");
    flag(sub, "height", "pixels (default 512)");
    flag(sub, "resolution", "sets width and height");
    flag(sub, "max_iter", "iteration budget (default 500 for f_a, 2000 otherwise)");
    flag(sub, "escape_radius", "escape threshold (default Re z > 50 for f_a, 1e6 locus, 2 Mandelbrot)");
    flag(sub, "output", "image path, .ppm or .png");
    flag(sub, "labels", "raw label dump path");
  };

  auto* param = app.add_subcommand("render-param", "parameter plane of f_a; member pixels form C0");
  render_flags(param);
  auto* dyn = app.add_subcommand("render-dyn", "dynamical plane of f_a; member pixels form the immediate basin");
  render_flags(dyn);
  flag(dyn, "a", "parameter RE,IM");
  auto* locus = app.add_subcommand("render-locus", "connectedness locus of G_{lambda,A} in the A-plane");
  render_flags(locus);
  flag(locus, "lambda", "multiplier RE,IM or e-inv (default e-inv)");
  flag(locus, "branch", "principal or negated square root of A");
  auto* mandel = app.add_subcommand("render-mandelbrot", "Mandelbrot set");
  render_flags(mandel);

  auto* centers = app.add_subcommand("centers", "zeros z_{-N}..z_N of e^z (z - 1) + 1");
  flag(centers, "count", "N (default 5)");

  auto* fit = app.add_subcommand("fit-explosion", "decompose a sampled motion as P + (l - l*)^n Hhat");
  flag(fit, "source", "app1, app1-preimage:i, app2 or file:PATH (JSON motion document)");
  flag(fit, "radius", "|a| of the sampling circle for app1 sources (default 100)");
  flag(fit, "samples", "contour samples (default 256)");
  flag(fit, "save", "write the sampled motion as JSON");

  auto* classify = app.add_subcommand("classify", "classify every trajectory of a sampled motion");
  flag(classify, "file", "JSON motion document with a contour");

  auto* kbound = app.add_subcommand("kbound", "dilatation bound for the basin motion at a");
  flag(kbound, "a", "parameter RE,IM");
  flag(kbound, "r0", "radius containing C0 (default: measured from a C0 render, times 1.1)");
  flag(kbound, "resolution", "C0 render resolution (default 512)");

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  flag(verify, "suite", "fast (256-pixel rasters) or full (512) (default fast)");
  flag(verify, "only", "comma-separated criterion ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = RunConfig::parse(read_file(config_path));
    for (const auto& [key, option] : bound)
      if (option->count() > 0) config.set(key, flags[key]);
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  CLI::App* chosen = app.get_subcommands().front();
  config.command = chosen->get_name();

  Outcome outcome;
  int code = exit_ok;
  try {
    const std::string& cmd = config.command;
    if (cmd == "render-param") outcome = cmd_render(config, atlas::RenderKind::param_plane_fa, out);
    else if (cmd == "render-dyn") outcome = cmd_render(config, atlas::RenderKind::dyn_plane_fa, out);
    else if (cmd == "render-locus") outcome = cmd_render(config, atlas::RenderKind::locus_G, out);
    else if (cmd == "render-mandelbrot") outcome = cmd_render(config, atlas::RenderKind::mandelbrot, out);
    else if (cmd == "centers") outcome = cmd_centers(config, out);
    else if (cmd == "fit-explosion") outcome = cmd_fit(config, out);
    else if (cmd == "classify") outcome = cmd_classify(config, out);
    else if (cmd == "kbound") outcome = cmd_kbound(config, out);
    else outcome = cmd_verify(config, out);
    if (!outcome.pass) code = exit_failed;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    outcome.pass = false;
    outcome.outputs["error"] = e.what();
    code = exit_failed;
  }

  if (!config.report.empty()) {
    try {
      write_report(config, outcome);
    } catch (const input_error& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
  }
  return code;
}

}  // namespace holomove::cli
