// dislokit command-line front end. Talks to the library only through the C
// interface in dislokit/dislokit.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dislokit/dislokit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(dk_status s) {
  switch (s) {
    case DK_OK: return kExitOk;
    case DK_ERR_INTERNAL:
    case DK_ERR_INVARIANT: return kExitInvariant;
    default: return kExitUsage;
  }
}

void check(dk_status s, const char* what) {
  if (s != DK_OK) throw Failure{exit_for(s), std::string(what) + ": " + dk_last_error()};
}

struct Options {
  std::string lattice = "sc";
  double a = 1.0;
  std::string z0;
  double rho = 7.2;
  double N = 75.0;
  std::optional<double> eps;
  double s = 2.0;
  double kp = 1.0;
  double kd = 1.0;
  std::string mode = "single";
  std::string out = "-";
  std::string format = "csv";
  int threads = 0;

  int layers = 1;
  std::string edge_weight = "owned";
  std::string rule = "plain";
  std::string adjacency = "meets";
  double eps_fraction = 0.4;
  std::string summary;
  std::string points;
  std::vector<double> Ns;
  int cells = 20;
};

bool bcc(const Options& o) { return o.lattice == "bcc"; }

double planar_unit(const Options& o) { return bcc(o) ? std::sqrt(2.0) * o.a : o.a; }

// z0 in basis-free planar units of the lattice (a for SC, d1 for BCC).
std::pair<double, double> z0_normalised(const Options& o) {
  if (o.z0.empty()) {
    // Centre of the fundamental cell, 0.5 + 0.5 tau.
    return bcc(o) ? std::pair{0.75, std::sqrt(3.0) / 4.0} : std::pair{0.5, 0.5};
  }
  std::stringstream ss(o.z0);
  double x = 0, y = 0;
  char comma = 0;
  if (!(ss >> x >> comma >> y) || comma != ',' || !(ss >> std::ws).eof())
    throw Failure{kExitUsage, "--z0 expects \"x,y\", got \"" + o.z0 + "\""};
  return {x, y};
}

int threads_of(const Options& o) {
  if (o.threads > 0) return o.threads;
  if (const char* env = std::getenv("DISLOKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
    throw Failure{kExitUsage, std::string("DISLOKIT_THREADS must be a positive integer, got \"") + env + "\""};
  }
  return 1;
}

dk_format format_of(const Options& o) {
  if (o.format == "json") return DK_FORMAT_JSON;
  if (o.format == "xyz") return DK_FORMAT_XYZ;
  return DK_FORMAT_CSV;
}

dk_ring ring_of(const Options& o) { return bcc(o) ? DK_RING_EISENSTEIN : DK_RING_GAUSS; }

dk_zeta_options zeta_options(const Options& o) {
  return {o.rule == "adjacency" ? DK_ANNULUS_ADJACENCY : DK_ANNULUS_PLAIN, o.eps_fraction,
          o.adjacency == "subset" ? DK_ADJACENCY_SUBSET : DK_ADJACENCY_MEETS};
}

dk_region region_of(const Options& o) {
  const double d3 = std::sqrt(3.0) / 6.0 * o.a;
  return {o.rho, o.N, o.eps.value_or(0.4 * d3 / 2.0), o.adjacency == "subset" ? DK_ADJACENCY_SUBSET : DK_ADJACENCY_MEETS};
}

class Config {
 public:
  explicit Config(const Options& o) {
    const auto [x, y] = z0_normalised(o);
    const double d = planar_unit(o);
    check(dk_config_create(bcc(o) ? DK_LATTICE_BCC : DK_LATTICE_SC, o.a, x * d, y * d, o.kp, o.kd, &cfg_),
          "configuration");
  }
  ~Config() { dk_config_destroy(cfg_); }
  Config(const Config&) = delete;
  Config& operator=(const Config&) = delete;
  const dk_config* get() const { return cfg_; }

 private:
  dk_config* cfg_ = nullptr;
};

class TableHandle {
 public:
  ~TableHandle() { dk_table_destroy(t_); }
  dk_table** out() { return &t_; }
  const dk_table* get() const { return t_; }

 private:
  dk_table* t_ = nullptr;
};

void emit_text(const std::string& text, const std::string& path) {
  if (path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw Failure{kExitUsage, "cannot open " + path + " for writing"};
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  if (std::fclose(f) != 0 || !ok) throw Failure{kExitUsage, "write to " + path + " failed"};
}

void emit_table(const TableHandle& t, const Options& o) {
  if (o.out == "-") {
    char* text = nullptr;
    check(dk_table_to_string(t.get(), format_of(o), &text), "serialise");
    const std::string copy = text;
    dk_string_free(text);
    emit_text(copy, "-");
  } else {
    check(dk_table_write(t.get(), format_of(o), o.out.c_str()), "write");
  }
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_region(const Options& o) {
  if (!(o.N > o.rho)) throw Failure{kExitUsage, "--N must exceed --rho"};
}

int cmd_lattice(const Options& o) {
  const Config cfg(o);
  TableHandle t;
  check(dk_lattice_export(cfg.get(), o.N * planar_unit(o), 0, o.layers, t.out()), "lattice");
  emit_table(t, o);
  return kExitOk;
}

int cmd_region(const Options& o) {
  require_region(o);
  const Config cfg(o);
  const dk_region region = region_of(o);
  TableHandle t;
  check(dk_region_export(cfg.get(), &region, t.out()), "region");
  emit_table(t, o);
  return kExitOk;
}

int cmd_energy(const Options& o) {
  require_region(o);
  const Config cfg(o);
  const dk_region region = region_of(o);
  TableHandle t;
  dk_energy_summary summary{};
  check(dk_energy_run(cfg.get(), &region, o.edge_weight == "shared" ? DK_WEIGHT_SHARED : DK_WEIGHT_OWNED,
                      threads_of(o), t.out(), &summary),
        "energy");
  emit_table(t, o);
  char* json = nullptr;
  check(dk_energy_summary_json(&summary, &json), "summary");
  const std::string text = json;
  dk_string_free(json);
  if (!o.summary.empty())
    emit_text(text, o.summary);
  else if (o.out == "-")
    std::fputs(text.c_str(), stderr);
  else
    emit_text(text, "-");
  return kExitOk;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_points(const std::string& spec) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::stringstream is(item);
    long long l1 = 0, l2 = 0;
    char comma = 0;
    if (!(is >> l1 >> comma >> l2) || comma != ',' || !(is >> std::ws).eof())
      throw Failure{kExitUsage, "--points expects \"l1,l2;l1,l2;...\", bad item \"" + item + "\""};
    out.emplace_back(l1, l2);
  }
  if (out.empty()) throw Failure{kExitUsage, "--points is empty"};
  return out;
}

int cmd_zeta(const Options& o) {
  const int threads = threads_of(o);
  const dk_zeta_options zopt = zeta_options(o);
  const auto [x, y] = z0_normalised(o);
  // The zeta argument is -z0 in normalised units, matching the energy sums.
  const double zr = -x, zi = -y;

  if (o.mode == "single") {
    double value = 0;
    std::uint64_t terms = 0;
    if (!o.points.empty()) {
      const auto pts = parse_points(o.points);
      std::vector<std::int64_t> l1, l2;
      for (const auto& [p, q] : pts) {
        l1.push_back(p);
        l2.push_back(q);
      }
      check(dk_zeta_explicit(ring_of(o), o.s, zr, zi, l1.data(), l2.data(), pts.size(), &value), "zeta");
      terms = pts.size();
    } else {
      require_region(o);
      check(dk_zeta_single(ring_of(o), o.s, zr, zi, o.rho, o.N, &zopt, threads, &value, &terms), "zeta");
    }
    std::string text = "{\"schema\":1,\"kind\":\"zeta\",\"ring\":\"";
    text += bcc(o) ? "eisenstein" : "gauss";
    text += "\",\"s\":" + number(o.s) + ",\"z\":[" + number(zr) + "," + number(zi) + "],\"value\":" + number(value) +
            ",\"terms\":" + std::to_string(terms) + "}\n";
    emit_text(text, o.out);
    return kExitOk;
  }

  TableHandle t;
  if (o.mode == "scan") {
    std::vector<double> Ns = o.Ns;
    if (Ns.empty()) Ns = {20, 30, 50, 75, 100, 150, 200, 300, 500};
    for (double n : Ns)
      if (!(n > o.rho)) throw Failure{kExitUsage, "every scan N must exceed --rho"};
    check(dk_zeta_scan(ring_of(o), o.s, zr, zi, o.rho, Ns.data(), Ns.size(), &zopt, threads, t.out()), "zeta scan");
  } else {
    require_region(o);
    double lo = 0, hi = 0;
    check(dk_zeta_grid(ring_of(o), o.s, o.rho, o.N, o.cells, &zopt, threads, t.out(), &lo, &hi), "zeta grid");
    std::fprintf(stderr, "min = %.17g, max = %.17g\n", lo, hi);
  }
  emit_table(t, o);
  return kExitOk;
}

int cmd_validate(const Options& o) {
  char* json = nullptr;
  int ok = 0;
  check(dk_validate(&json, &ok), "validate");
  const std::string text = json;
  dk_string_free(json);
  emit_text(text, o.out);
  return ok ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Screw dislocations in SC and BCC lattices: geometry, energies and zeta sums"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dk_version()));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--lattice", o.lattice, "sc or bcc")->check(CLI::IsMember({"sc", "bcc"}))->capture_default_str();
    sub->add_option("--a", o.a, "lattice constant")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--z0", o.z0, "dislocation centre \"x,y\" in units of a (sc) or d1 (bcc); default 0.5+0.5tau");
    sub->add_option("--kp", o.kp, "axis spring constant")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--kd", o.kd, "diagonal spring constant")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--out", o.out, "output path, - for stdout")->capture_default_str();
    sub->add_option("--format", o.format, "csv, json or xyz")
        ->check(CLI::IsMember({"csv", "json", "xyz"}))
        ->capture_default_str();
    sub->add_option("--threads", o.threads, "worker threads (default: DISLOKIT_THREADS or 1)")
        ->check(CLI::NonNegativeNumber);
  };
  auto region = [&](CLI::App* sub) {
    sub->add_option("--rho", o.rho, "inner radius in planar units")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--N", o.N, "outer radius in planar units")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--eps", o.eps, "bcc core threshold (length); default 0.4 d3/2")->check(CLI::PositiveNumber);
    sub->add_option("--adjacency", o.adjacency, "bcc type-III rule: meets or subset")
        ->check(CLI::IsMember({"meets", "subset"}))
        ->capture_default_str();
  };

  auto* lattice = app.add_subcommand("lattice", "export dislocated node positions");
  common(lattice);
  lattice->add_option("--N", o.N, "base-point radius in planar units")->check(CLI::PositiveNumber)->capture_default_str();
  lattice->add_option("--layers", o.layers, "windings n = 0 .. layers-1")->check(CLI::PositiveNumber)->capture_default_str();

  auto* reg = app.add_subcommand("region", "export annulus points");
  common(reg);
  region(reg);

  auto* energy = app.add_subcommand("energy", "per-node energies and regional sums");
  common(energy);
  region(energy);
  energy->add_option("--edge-weight", o.edge_weight, "owned or shared")
      ->check(CLI::IsMember({"owned", "shared"}))
      ->capture_default_str();
  energy->add_option("--summary", o.summary, "write the JSON summary here");

  auto* zeta = app.add_subcommand("zeta", "truncated zeta sums");
  common(zeta);
  zeta->add_option("--rho", o.rho, "inner radius")->check(CLI::PositiveNumber)->capture_default_str();
  zeta->add_option("--N", o.N, "outer radius")->check(CLI::PositiveNumber)->capture_default_str();
  zeta->add_option("--s", o.s, "exponent")->check(CLI::PositiveNumber)->capture_default_str();
  zeta->add_option("--mode", o.mode, "single, scan or grid")
      ->check(CLI::IsMember({"single", "scan", "grid"}))
      ->capture_default_str();
  zeta->add_option("--Ns", o.Ns, "outer radii for scan mode")->delimiter(',');
  zeta->add_option("--cells", o.cells, "grid subdivisions per side")->check(CLI::Range(1, 4096))->capture_default_str();
  zeta->add_option("--rule", o.rule, "annulus rule: plain or adjacency (bcc)")
      ->check(CLI::IsMember({"plain", "adjacency"}))
      ->capture_default_str();
  zeta->add_option("--adjacency", o.adjacency, "type-III rule for the adjacency annulus")
      ->check(CLI::IsMember({"meets", "subset"}))
      ->capture_default_str();
  zeta->add_option("--eps-fraction", o.eps_fraction, "core threshold as a fraction of d3/2")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  zeta->add_option("--points", o.points, "explicit set \"l1,l2;l1,l2\" for single mode");

  auto* val = app.add_subcommand("validate", "run the invariant suites");
  val->add_option("--out", o.out, "report path, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*lattice) return cmd_lattice(o);
    if (*reg) return cmd_region(o);
    if (*energy) return cmd_energy(o);
    if (*zeta) return cmd_zeta(o);
    if (*val) return cmd_validate(o);
  } catch (const Failure& f) {
    std::fprintf(stderr, "dislokit: %s\n", f.message.c_str());
    return f.exit_code;
  }
  return kExitUsage;
}
