#include "apollo/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "apollo/json_io.hpp"
#include "apollo/render.hpp"

namespace apollo::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << data;
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

Viewport parse_viewport(const std::string& text) {
  std::vector<double> v;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad viewport '" + text + "' (expected xmin,ymin,xmax,ymax)");
    }
  }
  if (v.size() != 4 || !(v[2] > v[0]) || !(v[3] > v[1])) {
    throw UsageError("bad viewport '" + text + "' (expected xmin,ymin,xmax,ymax with positive area)");
  }
  return {v[0], v[1], v[2], v[3]};
}

Rational parse_bound(const std::string& text) {
  try {
    if (text.find('/') != std::string::npos) return parse_rational(text);
    return parse_decimal(text);
  } catch (const Error&) {
    throw UsageError("bad curvature bound '" + text + "'");
  }
}

struct GenerateArgs {
  std::string seed, seed_file, mode = "exact", out = "-", max_curvature, viewport;
  std::optional<int> depth;
  std::size_t max_disks = 200000;
  unsigned threads = 1;
};

int do_generate(const GenerateArgs& a) {
  if (!a.depth && a.max_curvature.empty()) throw UsageError("generate needs --depth or --max-curvature");
  if (a.seed.empty() == a.seed_file.empty()) throw UsageError("give exactly one of --seed or --seed-file");
  PackingConfig c;
  c.mode = parse_mode(a.mode);
  c.max_depth = a.depth;
  if (!a.max_curvature.empty()) c.max_curvature = parse_bound(a.max_curvature);
  if (!a.viewport.empty()) c.viewport = parse_viewport(a.viewport);
  c.max_disks = a.max_disks;
  c.threads = a.threads;
  if (!a.seed.empty()) {
    try {
      c.seed = builtin_seed(a.seed);
    } catch (const Error& e) {
      throw UsageError(std::string(e.what()) + " (see `apollo seeds`)");
    }
  } else {
    const SeedSymbols symbols = parse_seed_file(read_file(a.seed_file));
    if (const auto* exact = std::get_if<std::vector<DiskSymbol<FieldElement>>>(&symbols)) {
      try {
        c.seed = seed_from_symbols(*exact);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotRepresentable) throw;
        std::vector<DiskSymbol<double>> approx;
        for (const auto& d : *exact) approx.push_back(to_double(d));
        c.seed = seed_from_symbols(approx);
        if (c.mode == Mode::exact) {
          std::cerr << "note: " << e.what() << "; generating in float mode\n";
          c.mode = Mode::floating;
        }
      }
    } else {
      c.seed = seed_from_symbols(std::get<std::vector<DiskSymbol<double>>>(symbols));
      c.mode = Mode::floating;
    }
  }
  const Packing p = generate(c);
  write_file(a.out, export_json(p));
  if (a.out != "-") {
    std::cerr << p.disks.size() << " disks, " << p.quadruples.size() << " quadruples" << (p.truncated ? " (truncated)" : "")
              << " -> " << a.out << "\n";
  }
  return kOk;
}

struct RenderArgs {
  std::string in, out = "-", viewport, labels = "curvature";
  int width = 800, height = 800, digits = 3;
  double min_px = 0.25;
};

int do_render(const RenderArgs& a) {
  RenderOptions o;
  if (!a.viewport.empty()) o.viewport = parse_viewport(a.viewport);
  if (a.width <= 0 || a.height <= 0) throw UsageError("--width and --height must be positive");
  o.width_px = a.width;
  o.height_px = a.height;
  try {
    o.labels = parse_label_mode(a.labels);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  o.decimal_digits = a.digits;
  o.min_px = a.min_px;
  write_file(a.out, render_svg(import_json(read_file(a.in)), o));
  return kOk;
}

int do_verify(const std::string& in, double tol) {
  const Packing p = import_json(read_file(in));
  const VerificationReport r = verify_packing(p, tol);
  std::cout << "mode: " << to_string(p.mode) << "\n"
            << "disks checked: " << r.disks_checked << "\n"
            << "quadruples checked: " << r.quadruples_checked << "\n";
  if (p.mode == Mode::floating) std::cout << "max residual: " << r.max_residual << "\n";
  const std::size_t shown = std::min<std::size_t>(r.violations.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) std::cout << "violation: " << r.violations[i] << "\n";
  if (shown < r.violations.size()) std::cout << "... " << r.violations.size() - shown << " more\n";
  std::cout << (r.ok() ? "OK" : "FAILED") << ": " << r.violations.size() << " violations\n";
  return r.ok() ? kOk : kFailure;
}

int do_classify(const std::string& in) {
  const Packing p = import_json(read_file(in));
  const Classification c = classify(p);
  std::cout << "type: " << to_string(c.type) << "\n"
            << "min curvature: " << c.min_curvature << (c.min_attained ? "" : " (infimum 0 not attained)") << "\n"
            << "zero-curvature disks: " << c.zero_curvature_count << "\n"
            << "negative-curvature disks: " << c.negative_curvature_count << "\n"
            << "unbounded by construction: " << (c.unbounded_by_construction ? "yes" : "no") << "\n";
  return kOk;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact Apollonian disk packings over Q(sqrt(phi))", "apollo"};
  app.require_subcommand(1);

  auto* seeds = app.add_subcommand("seeds", "List built-in seeds");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a packing and write it as JSON");
  generate_cmd->add_option("--seed", gen.seed, "Built-in seed name");
  generate_cmd->add_option("--seed-file", gen.seed_file, "JSON file {\"seed\": [3 or 4 symbols]}");
  generate_cmd->add_option("--depth", gen.depth, "Maximum number of reflections from the seed")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--max-curvature", gen.max_curvature, "Skip disks with larger curvature (decimal or p/q)");
  generate_cmd->add_option("--max-disks", gen.max_disks, "Stop after this many disks")->capture_default_str();
  generate_cmd->add_option("--mode", gen.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  generate_cmd->add_option("--threads", gen.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  generate_cmd->add_option("--viewport", gen.viewport, "Keep only disks meeting xmin,ymin,xmax,ymax");
  generate_cmd->add_option("--out", gen.out, "Output file, - for stdout")->capture_default_str();

  RenderArgs ren;
  auto* render_cmd = app.add_subcommand("render", "Render a packing JSON file as SVG");
  render_cmd->add_option("--in", ren.in, "Packing JSON")->required();
  render_cmd->add_option("--out", ren.out, "Output SVG, - for stdout")->capture_default_str();
  render_cmd->add_option("--viewport", ren.viewport, "xmin,ymin,xmax,ymax (default: fitted)");
  render_cmd->add_option("--width", ren.width, "Width in pixels")->capture_default_str();
  render_cmd->add_option("--height", ren.height, "Height in pixels")->capture_default_str();
  render_cmd->add_option("--labels", ren.labels, "none, curvature or symbol")
      ->check(CLI::IsMember({"none", "curvature", "symbol"}))
      ->capture_default_str();
  render_cmd->add_option("--digits", ren.digits, "Decimal digits in labels")->check(CLI::Range(0, 30))->capture_default_str();
  render_cmd->add_option("--min-px", ren.min_px, "Skip disks with a smaller radius in pixels")->capture_default_str();

  std::string verify_in;
  double verify_tol = 1e-9;
  auto* verify_cmd = app.add_subcommand("verify", "Check norms, tangencies and M F M^T = G");
  verify_cmd->add_option("--in", verify_in, "Packing JSON")->required();
  verify_cmd->add_option("--tol", verify_tol, "Relative tolerance in float mode")->capture_default_str();

  std::string classify_in;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a packing as type A, B, C or D");
  classify_cmd->add_option("--in", classify_in, "Packing JSON")->required();

  std::string kind, frame = "theorem";
  long from = 0, to = 0;
  int chain_digits = 6;
  auto* chain_cmd = app.add_subcommand("chain", "Print the golden zigzag or spiral chain");
  chain_cmd->add_option("--kind", kind, "zigzag or spiral")->required()->check(CLI::IsMember({"zigzag", "spiral"}));
  chain_cmd->add_option("--from", from, "First index")->required();
  chain_cmd->add_option("--to", to, "Last index")->required();
  chain_cmd->add_option("--digits", chain_digits, "Decimal digits")->check(CLI::Range(0, 60))->capture_default_str();
  chain_cmd->add_option("--frame", frame, "Spiral orientation: theorem (z_1 real) or figure (rotated by omega)")
      ->check(CLI::IsMember({"theorem", "figure"}))
      ->capture_default_str();

  int constants_digits = 6;
  auto* constants_cmd = app.add_subcommand("constants", "Print the golden constants and their identities");
  constants_cmd->add_option("--digits", constants_digits, "Decimal digits")->check(CLI::Range(0, 60))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*seeds) {
      for (const auto& name : builtin_seed_names()) std::cout << name << "\t" << describe_seed(name) << "\n";
      return kOk;
    }
    if (*generate_cmd) return do_generate(gen);
    if (*render_cmd) return do_render(ren);
    if (*verify_cmd) return do_verify(verify_in, verify_tol);
    if (*classify_cmd) return do_classify(classify_in);
    if (*chain_cmd) {
      if (from > to) throw UsageError("--from must not exceed --to");
      std::cout << chain_table(kind == "zigzag" ? ChainKind::zigzag : ChainKind::spiral, from, to, chain_digits,
                               frame == "figure" ? SpiralFrame::figure : SpiralFrame::theorem);
      return kOk;
    }
    if (*constants_cmd) {
      std::cout << constants_report(constants_digits);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidConfig ? kUsage : kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace apollo::cli
