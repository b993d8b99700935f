// ggsp command-line tool: graphon sampling, spectra, Fourier transforms,
// the S3/torus convergence experiments, and S4 representation frames.
// All computation goes through the C API in ggsp/ggsp.h; this file only
// handles flags, files, and exit codes (0 ok, 1 runtime/IO, 2 usage).

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggsp/ggsp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

int exit_code_for(ggsp_status rc) {
  switch (rc) {
    case GGSP_OK:
      return kExitOk;
    case GGSP_ERR_INVALID_ARGUMENT:
    case GGSP_ERR_PARSE:
      return kExitUsage;
    default:
      return kExitRuntime;
  }
}

int report_error(const char* what, ggsp_status rc) {
  std::cerr << "error: " << what << ": " << ggsp_last_error() << "\n";
  return exit_code_for(rc);
}

// Managed C-API handles and strings.
using ModelPtr = std::unique_ptr<ggsp_model, decltype(&ggsp_model_free)>;
using GraphPtr = std::unique_ptr<ggsp_graph, decltype(&ggsp_graph_free)>;
using SpectrumPtr = std::unique_ptr<ggsp_spectrum, decltype(&ggsp_spectrum_free)>;
using ScatterPtr = std::unique_ptr<ggsp_scatter, decltype(&ggsp_scatter_free)>;
using WsPtr = std::unique_ptr<ggsp_ws_report, decltype(&ggsp_ws_free)>;
using FramesPtr = std::unique_ptr<ggsp_frames, decltype(&ggsp_frames_free)>;

struct CString {
  char* value = nullptr;
  ~CString() { ggsp_string_free(value); }
  char** out() { return &value; }
  const char* get() const { return value ? value : ""; }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return bool(in);
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  out.flush();
  return bool(out);
}

// --model accepts inline JSON (leading '{') or a path to a JSON file.
int load_model(const std::string& spec, ModelPtr& model) {
  std::string text = spec;
  if (text.empty() || text.front() != '{') {
    if (!read_file(spec, text)) {
      std::cerr << "error: cannot read model file '" << spec << "'\n";
      return kExitUsage;
    }
  }
  ggsp_model* raw = nullptr;
  const ggsp_status rc = ggsp_model_parse(text.c_str(), &raw);
  if (rc != GGSP_OK) return report_error("invalid model", rc);
  model.reset(raw);
  return kExitOk;
}

int load_graph(const std::string& path, GraphPtr& graph) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read graph file '" << path << "'\n";
    return kExitRuntime;
  }
  ggsp_graph* raw = nullptr;
  const ggsp_status rc = ggsp_graph_parse(text.c_str(), &raw);
  if (rc != GGSP_OK) return report_error("invalid graph", rc);
  graph.reset(raw);
  return kExitOk;
}

// ---- sample ----

struct SampleArgs {
  std::string model;
  std::size_t n = 100;
  std::uint64_t seed = 0;
  std::string out;
};

int run_sample(const SampleArgs& args) {
  ModelPtr model(nullptr, ggsp_model_free);
  if (int rc = load_model(args.model, model)) return rc;

  ggsp_graph* raw = nullptr;
  ggsp_status rc = ggsp_sample(model.get(), args.n, args.seed, &raw);
  if (rc != GGSP_OK) return report_error("sampling failed", rc);
  GraphPtr graph(raw, ggsp_graph_free);

  CString json;
  rc = ggsp_graph_to_json(graph.get(), json.out());
  if (rc != GGSP_OK) return report_error("serialization failed", rc);
  if (!write_file(args.out, std::string(json.get()) + "\n")) {
    std::cerr << "error: cannot write '" << args.out << "'\n";
    return kExitRuntime;
  }

  const std::size_t n = ggsp_graph_order(graph.get());
  const std::size_t edges = ggsp_graph_num_edges(graph.get());
  const double pairs = double(n) * double(n - 1) / 2.0;
  std::cout << "n=" << n << " edges=" << edges
            << " density=" << (pairs > 0 ? double(edges) / pairs : 0.0) << "\n";
  return kExitOk;
}

// ---- spectrum ----

struct SpectrumArgs {
  std::string graph;
  std::string model;
  std::size_t discretize = 0;
  std::string out;
  std::string vectors;
};

int run_spectrum(const SpectrumArgs& args) {
  if (args.graph.empty() == args.model.empty()) {
    std::cerr << "error: pass exactly one of --graph or --model\n";
    return kExitUsage;
  }

  SpectrumPtr spectrum(nullptr, ggsp_spectrum_free);
  if (!args.graph.empty()) {
    GraphPtr graph(nullptr, ggsp_graph_free);
    if (int rc = load_graph(args.graph, graph)) return rc;
    ggsp_spectrum* raw = nullptr;
    const ggsp_status rc = ggsp_graph_spectrum(graph.get(), &raw);
    if (rc != GGSP_OK) return report_error("eigendecomposition failed", rc);
    spectrum.reset(raw);
  } else {
    ModelPtr model(nullptr, ggsp_model_free);
    if (int rc = load_model(args.model, model)) return rc;
    ggsp_spectrum* raw = nullptr;
    const ggsp_status rc =
        args.discretize > 0
            ? ggsp_torus_spectrum(model.get(), args.discretize, &raw)
            : ggsp_model_spectrum(model.get(), &raw);
    if (rc != GGSP_OK) return report_error("eigendecomposition failed", rc);
    spectrum.reset(raw);
  }

  CString csv;
  ggsp_status rc = ggsp_spectrum_csv(spectrum.get(), csv.out());
  if (rc != GGSP_OK) return report_error("CSV generation failed", rc);
  if (args.out.empty()) {
    std::cout << csv.get();
  } else if (!write_file(args.out, csv.get())) {
    std::cerr << "error: cannot write '" << args.out << "'\n";
    return kExitRuntime;
  }

  if (!args.vectors.empty()) {
    CString json;
    rc = ggsp_spectrum_vectors_json(spectrum.get(), json.out());
    if (rc != GGSP_OK) return report_error("eigenvector export failed", rc);
    if (!write_file(args.vectors, std::string(json.get()) + "\n")) {
      std::cerr << "error: cannot write '" << args.vectors << "'\n";
      return kExitRuntime;
    }
  }
  return kExitOk;
}

// ---- gft ----

struct GftArgs {
  std::string graph;
  std::string signal;
  long long block = -1;
  std::string out;
};

int run_gft(const GftArgs& args) {
  if (args.signal.empty() == (args.block < 0)) {
    std::cerr << "error: pass exactly one of --signal or --block\n";
    return kExitUsage;
  }

  GraphPtr graph(nullptr, ggsp_graph_free);
  if (int rc = load_graph(args.graph, graph)) return rc;
  const std::size_t n = ggsp_graph_order(graph.get());

  std::vector<double> signal(n, 0.0);
  if (args.block >= 0) {
    const ggsp_status rc = ggsp_block_signal(
        graph.get(), std::size_t(args.block), signal.data(), signal.size());
    if (rc != GGSP_OK) return report_error("block signal failed", rc);
  } else {
    std::string text;
    if (!read_file(args.signal, text)) {
      std::cerr << "error: cannot read signal file '" << args.signal << "'\n";
      return kExitRuntime;
    }
    const nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.size() != n) {
      std::cerr << "error: signal file must hold a JSON array of " << n
                << " numbers\n";
      return kExitUsage;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!j[i].is_number()) {
        std::cerr << "error: signal entries must be numbers\n";
        return kExitUsage;
      }
      signal[i] = j[i].get<double>();
    }
  }

  ggsp_spectrum* raw = nullptr;
  ggsp_status rc = ggsp_graph_spectrum(graph.get(), &raw);
  if (rc != GGSP_OK) return report_error("eigendecomposition failed", rc);
  SpectrumPtr spectrum(raw, ggsp_spectrum_free);

  std::vector<double> coeffs(n, 0.0), values(n, 0.0);
  rc = ggsp_gft(spectrum.get(), signal.data(), signal.size(), coeffs.data());
  if (rc != GGSP_OK) return report_error("transform failed", rc);
  rc = ggsp_spectrum_eigenvalues(spectrum.get(), values.data(), values.size());
  if (rc != GGSP_OK) return report_error("eigenvalue readout failed", rc);

  std::string csv = "rank,eigenvalue,coefficient\n";
  char buf[96];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i + 1, values[i], coeffs[i]);
    csv += buf;
  }
  if (args.out.empty()) {
    std::cout << csv;
  } else if (!write_file(args.out, csv)) {
    std::cerr << "error: cannot write '" << args.out << "'\n";
    return kExitRuntime;
  }

  // Parseval check under the uniform 1/n inner product of graph spectra.
  double energy = 0.0, coeff_energy = 0.0;
  for (double v : signal) energy += v * v / double(n);
  for (double c : coeffs) coeff_energy += c * c;
  std::cout << "signal energy=" << energy << " coefficient energy=" << coeff_energy
            << " parseval gap=" << std::abs(energy - coeff_energy) << "\n";
  return kExitOk;
}

// ---- experiment s3 ----

struct S3Args {
  std::size_t n = 1000;
  std::size_t samples = 10;
  std::uint64_t seed = 42;
  std::string out_dir = ".";
};

int run_experiment_s3(const S3Args& args) {
  ggsp_scatter* raw = nullptr;
  ggsp_status rc = ggsp_run_s3(args.n, args.samples, args.seed, &raw);
  if (rc != GGSP_OK) return report_error("experiment failed", rc);
  ScatterPtr scatter(raw, ggsp_scatter_free);

  std::error_code ec;
  std::filesystem::create_directories(args.out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create directory '" << args.out_dir << "'\n";
    return kExitRuntime;
  }

  CString csv, svg;
  rc = ggsp_scatter_csv(scatter.get(), csv.out());
  if (rc != GGSP_OK) return report_error("CSV generation failed", rc);
  rc = ggsp_scatter_svg(scatter.get(), svg.out());
  if (rc != GGSP_OK) return report_error("SVG generation failed", rc);

  const std::string csv_path = args.out_dir + "/scatter.csv";
  const std::string svg_path = args.out_dir + "/scatter.svg";
  if (!write_file(csv_path, csv.get()) || !write_file(svg_path, svg.get())) {
    std::cerr << "error: cannot write outputs under '" << args.out_dir << "'\n";
    return kExitRuntime;
  }

  double ref_c3 = 0, ref_c2 = 0, ref_radius = 0;
  double max_dev = 0, rsd = 0, spread = 0;
  ggsp_scatter_reference(scatter.get(), &ref_c3, &ref_c2, &ref_radius);
  ggsp_scatter_stats(scatter.get(), &max_dev, &rsd, &spread);
  std::cout << "samples=" << args.samples << " n=" << args.n
            << " reference radius=" << ref_radius
            << " max relative radius deviation=" << max_dev
            << " c2 relative spread=" << spread << "\n";
  std::cout << "wrote " << csv_path << " and " << svg_path << "\n";
  return kExitOk;
}

// ---- experiment ws ----

struct WsArgs {
  std::size_t n = 2000;
  double d = 0.2;
  double p = 0.08;
  std::uint64_t seed = 42;
  int k_max = 3;
  std::string out;
};

int run_experiment_ws(const WsArgs& args) {
  ggsp_ws_report* raw = nullptr;
  ggsp_status rc = ggsp_run_ws(args.n, args.d, args.p, args.seed, args.k_max, &raw);
  if (rc != GGSP_OK) return report_error("experiment failed", rc);
  WsPtr report(raw, ggsp_ws_free);

  CString text;
  rc = ggsp_ws_text(report.get(), text.out());
  if (rc != GGSP_OK) return report_error("report generation failed", rc);
  std::cout << text.get();

  if (!args.out.empty()) {
    CString csv;
    rc = ggsp_ws_csv(report.get(), csv.out());
    if (rc != GGSP_OK) return report_error("CSV generation failed", rc);
    if (!write_file(args.out, csv.get())) {
      std::cerr << "error: cannot write '" << args.out << "'\n";
      return kExitRuntime;
    }
  }
  return kExitOk;
}

// ---- frames s4 ----

struct FramesArgs {
  std::string out;
};

int run_frames_s4(const FramesArgs& args) {
  ggsp_frames* raw = nullptr;
  ggsp_status rc = ggsp_frames_s4(&raw);
  if (rc != GGSP_OK) return report_error("frame construction failed", rc);
  FramesPtr frames(raw, ggsp_frames_free);

  CString report;
  rc = ggsp_frames_report(frames.get(), report.out());
  if (rc != GGSP_OK) return report_error("report generation failed", rc);
  std::cout << report.get();

  if (!args.out.empty()) {
    CString json;
    rc = ggsp_frames_json(frames.get(), json.out());
    if (rc != GGSP_OK) return report_error("JSON export failed", rc);
    if (!write_file(args.out, std::string(json.get()) + "\n")) {
      std::cerr << "error: cannot write '" << args.out << "'\n";
      return kExitRuntime;
    }
  }

  if (!ggsp_frames_verified(frames.get())) {
    std::cerr << "error: frame verification failed\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphon signal processing toolkit"};
  app.require_subcommand(1);

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "draw a random graph from a graphon model");
  sample->add_option("--model", sample_args.model, "model JSON (inline or file path)")
      ->required();
  sample->add_option("--n", sample_args.n, "number of vertices")->required();
  sample->add_option("--seed", sample_args.seed, "64-bit sampling seed");
  sample->add_option("--out", sample_args.out, "output graph JSON path")->required();

  SpectrumArgs spectrum_args;
  auto* spectrum =
      app.add_subcommand("spectrum", "eigenvalues of a graph or model operator");
  spectrum->add_option("--graph", spectrum_args.graph, "graph JSON file");
  spectrum->add_option("--model", spectrum_args.model, "model JSON (inline or file path)");
  spectrum->add_option("--discretize", spectrum_args.discretize,
                       "grid size for torus models");
  spectrum->add_option("--out", spectrum_args.out, "CSV output path (default stdout)");
  spectrum->add_option("--vectors", spectrum_args.vectors,
                       "also write eigenvectors as JSON to this path");

  GftArgs gft_args;
  auto* gft = app.add_subcommand("gft", "graph Fourier coefficients of a signal");
  gft->add_option("--graph", gft_args.graph, "graph JSON file")->required();
  gft->add_option("--signal", gft_args.signal, "signal file (JSON array)");
  gft->add_option("--block", gft_args.block, "use the indicator of this latent block");
  gft->add_option("--out", gft_args.out, "CSV output path (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "reproduction experiments");
  experiment->require_subcommand(1);

  S3Args s3_args;
  auto* s3 = experiment->add_subcommand(
      "s3", "scatter of Fourier coefficients 2 and 3 over samples of the S3 model");
  s3->add_option("--n", s3_args.n, "vertices per sample (default 1000)");
  s3->add_option("--samples", s3_args.samples, "number of samples (default 10)");
  s3->add_option("--seed", s3_args.seed, "master seed (default 42)");
  s3->add_option("--out-dir", s3_args.out_dir, "output directory (default .)");

  WsArgs ws_args;
  auto* ws = experiment->add_subcommand(
      "ws", "sample spectrum of the small-world torus graphon vs closed form");
  ws->add_option("--n", ws_args.n, "vertices (default 2000)");
  ws->add_option("--d", ws_args.d, "neighborhood radius (default 0.2)");
  ws->add_option("--p", ws_args.p, "rewiring probability (default 0.08)");
  ws->add_option("--seed", ws_args.seed, "sampling seed (default 42)");
  ws->add_option("--k-max", ws_args.k_max, "highest frequency compared (default 3)");
  ws->add_option("--out", ws_args.out, "also write the comparison CSV here");

  auto* frames = app.add_subcommand("frames", "representation-theoretic frames");
  frames->require_subcommand(1);

  FramesArgs frames_args;
  auto* s4 = frames->add_subcommand(
      "s4", "tight frame for l^2(S4) from the irreps of the default generating set");
  s4->add_option("--out", frames_args.out, "frames JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (sample->parsed()) return run_sample(sample_args);
  if (spectrum->parsed()) return run_spectrum(spectrum_args);
  if (gft->parsed()) return run_gft(gft_args);
  if (experiment->parsed()) {
    if (s3->parsed()) return run_experiment_s3(s3_args);
    if (ws->parsed()) return run_experiment_ws(ws_args);
  }
  if (frames->parsed() && s4->parsed()) return run_frames_s4(frames_args);

  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
