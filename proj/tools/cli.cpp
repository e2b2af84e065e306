// Copyright 2026 The ottk Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ottk/apps.hpp"
#include "ottk/cdt.hpp"
#include "ottk/io.hpp"
#include "ottk/ot_exact.hpp"
#include "ottk/radon.hpp"
#include "ottk/rcdt.hpp"
#include "ottk/scdt.hpp"
#include "ottk/synth.hpp"

namespace ottk::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Options {
  // global
  std::size_t m = kDefaultM;
  std::size_t n_theta = kDefaultNTheta;
  std::optional<std::uint64_t> seed;
  std::string format = "text";

  std::string kind;
  std::string input, input2, output, reference, manifest, model;
  std::vector<std::string> inputs;
  bool normalize = false;
  bool energy = false;
  std::size_t n_t = 0;
  std::size_t n = 0;
  std::optional<double> lo, hi;
  std::size_t width = 64, height = 64;
  std::string window = "ramlak";
  std::vector<double> ts{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> alphas{-2.0, -1.0, 0.0, 1.0, 2.0};
  std::size_t dim = 2;
  std::size_t modes = 3;
  std::size_t mode = 0;
  double gamma = 0.0;
  std::size_t count = 20;
  std::size_t size = 128;
  double extent = 1.0;
};

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

// key=value pairs on one line, or a JSON object.
void emit(std::ostream& out, const Options& o, const std::vector<std::pair<std::string, double>>& kv) {
  if (o.format == "json") {
    json j = json::object();
    for (const auto& [k, v] : kv) j[k] = v;
    out << j.dump() << "\n";
    return;
  }
  if (kv.size() == 1) {
    out << num(kv.front().second) << "\n";
    return;
  }
  for (std::size_t i = 0; i < kv.size(); ++i) {
    out << (i ? " " : "") << kv[i].first << "=" << num(kv[i].second);
  }
  out << "\n";
}

void flush_warnings(std::ostream& err, const Warnings& w) {
  for (const auto& s : w) err << "warning: " << s << "\n";
}

FbpOptions fbp(const Options& o) {
  return FbpOptions{o.window == "hann" ? FbpWindow::kHann : FbpWindow::kRamLak};
}

// 1D input as a probability density: optional energy conversion and
// renormalization, both opt-in.
Density1D load_density(const fs::path& p, const Options& o) {
  const SignedDensity1D s = io::read_signal(p);
  if (o.energy) return normalized_energy_density(s);
  for (double v : s.values()) {
    require(v >= 0.0, "negative sample in " + p.string() + ": use --energy or --kind scdt");
  }
  Density1D d(s.grid(), std::vector<double>(s.values().begin(), s.values().end()));
  return o.normalize ? normalize(d) : d;
}

CdtRep load_cdt(const fs::path& p, const Options& o) { return cdt_forward(load_density(p, o), o.m); }

Image2D load_image(const fs::path& p, const Options& o) { return io::read_image(p, o.extent); }

Grid1D output_grid(const Options& o, double lo, double hi, std::size_t n_default) {
  return Grid1D(o.lo.value_or(lo), o.hi.value_or(hi), o.n ? o.n : n_default);
}

// ---- transform / invert ----

int cmd_transform(const Options& o, std::ostream& out, std::ostream& err) {
  (void)out;
  (void)err;
  if (o.kind == "cdt") {
    io::write_cdt(o.output, load_cdt(o.input, o));
  } else if (o.kind == "scdt") {
    io::write_scdt(o.output, scdt_forward(io::read_signal(o.input), o.m));
  } else if (o.kind == "rcdt") {
    io::write_rcdt(o.output, rcdt_forward(load_image(o.input, o), o.m, o.n_theta, o.n_t));
  } else if (o.kind == "rscdt") {
    io::write_rscdt(o.output, rscdt_forward(load_image(o.input, o), o.m, o.n_theta, o.n_t));
  } else {  // lot
    require(!o.reference.empty(), "--reference is required for --kind lot");
    const LotEmbedding e = lot_embed(io::read_measure(o.input), io::read_measure(o.reference));
    const std::size_t d = e.reference.dim();
    io::write_measure(o.output, DiscreteMeasure(d, e.map, std::vector<double>(
                                                              e.reference.weights().begin(),
                                                              e.reference.weights().end())));
    std::ofstream(io::sidecar(o.output))
        << json{{"kind", "lot"}, {"plan_cost", e.plan_cost}, {"map_cost", e.map_cost()}}.dump(2)
        << "\n";
  }
  return kExitOk;
}

int cmd_invert(const Options& o, std::ostream& out, std::ostream& err) {
  (void)out;
  Warnings w;
  if (o.kind == "cdt") {
    const CdtRep rep = io::read_cdt(o.input);
    const Grid1D g = output_grid(o, rep.lo(), rep.hi(), 1025);
    const Density1D d = cdt_inverse(rep, g);
    io::write_signal(o.output, g, d.values());
  } else if (o.kind == "scdt") {
    const ScdtRep rep = io::read_scdt(o.input);
    const Grid1D g = output_grid(o, rep.lo, rep.hi, 1025);
    const SignedDensity1D d = scdt_inverse(rep, g, &w);
    io::write_signal(o.output, g, d.values());
  } else if (o.kind == "rcdt") {
    io::write_image(o.output, rcdt_inverse(io::read_rcdt(o.input), o.width, o.height, o.n_t,
                                           fbp(o), &w));
  } else if (o.kind == "rscdt") {
    io::write_image(o.output, rscdt_inverse(io::read_rscdt(o.input), o.width, o.height, fbp(o), &w));
  } else {
    throw Error("--kind lot has no inverse; use geodesic --kind lot");
  }
  flush_warnings(err, w);
  return kExitOk;
}

// ---- distance / geodesic ----

int cmd_distance(const Options& o, std::ostream& out, std::ostream& err) {
  (void)err;
  double d = 0.0;
  if (o.kind == "cdt") {
    d = d_cdt(load_cdt(o.input, o), load_cdt(o.input2, o));
  } else if (o.kind == "scdt") {
    d = d_scdt(scdt_forward(io::read_signal(o.input), o.m),
               scdt_forward(io::read_signal(o.input2), o.m));
  } else if (o.kind == "rcdt") {
    d = d_rcdt(rcdt_forward(load_image(o.input, o), o.m, o.n_theta, o.n_t),
               rcdt_forward(load_image(o.input2, o), o.m, o.n_theta, o.n_t));
  } else if (o.kind == "rscdt") {
    d = d_rscdt(rscdt_forward(load_image(o.input, o), o.m, o.n_theta, o.n_t),
                rscdt_forward(load_image(o.input2, o), o.m, o.n_theta, o.n_t));
  } else if (o.kind == "w2") {
    d = std::sqrt(std::max(0.0, solve_kantorovich(io::read_measure(o.input),
                                                  io::read_measure(o.input2)).cost));
  } else if (o.kind == "sw2") {
    d = sw2_pointcloud(io::read_measure(o.input), io::read_measure(o.input2), o.n_theta);
  } else {  // lot
    require(!o.reference.empty(), "--reference is required for --kind lot");
    const DiscreteMeasure r = io::read_measure(o.reference);
    d = d_lot(lot_embed(io::read_measure(o.input), r), lot_embed(io::read_measure(o.input2), r));
  }
  emit(out, o, {{"distance", d}});
  return kExitOk;
}

void write_sweep(const fs::path& path, const Grid1D& g, const std::vector<double>& ts,
                 const std::vector<std::vector<double>>& rows) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  require(static_cast<bool>(f), "cannot write " + path.string());
  f << "t";
  for (std::size_t k = 0; k < g.size(); ++k) f << "," << io::format_double(g.node(k));
  f << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    f << io::format_double(ts[r]);
    for (double v : rows[r]) f << "," << io::format_double(v);
    f << "\n";
  }
}

int cmd_geodesic(const Options& o, std::ostream& out, std::ostream& err) {
  (void)out;
  (void)err;
  if (o.kind == "lot") {
    require(!o.reference.empty(), "--reference is required for --kind lot");
    const DiscreteMeasure r = io::read_measure(o.reference);
    const LotEmbedding e1 = lot_embed(io::read_measure(o.input), r);
    const LotEmbedding e2 = lot_embed(io::read_measure(o.input2), r);
    if (fs::path(o.output).has_parent_path()) fs::create_directories(fs::path(o.output).parent_path());
    std::ofstream f(o.output);
    require(static_cast<bool>(f), "cannot write " + o.output);
    f << (r.dim() == 1 ? "t,i,x,weight\n" : "t,i,x,y,weight\n");
    for (double t : o.ts) {
      const DiscreteMeasure g = lot_geodesic(e1, e2, t);
      for (std::size_t i = 0; i < g.size(); ++i) {
        f << io::format_double(t) << "," << i;
        for (double c : g.point(i)) f << "," << io::format_double(c);
        f << "," << io::format_double(g.weights()[i]) << "\n";
      }
    }
    return kExitOk;
  }
  std::vector<std::vector<double>> rows;
  if (o.kind == "cdt") {
    const Density1D f1 = load_density(o.input, o);
    const CdtRep r1 = cdt_forward(f1, o.m);
    const CdtRep r2 = load_cdt(o.input2, o);
    const Grid1D g = output_grid(o, f1.grid().lo(), f1.grid().hi(), f1.grid().size());
    for (double t : o.ts) {
      const Density1D d = cdt_geodesic(r1, r2, t, g);
      rows.emplace_back(d.values().begin(), d.values().end());
    }
    write_sweep(o.output, g, o.ts, rows);
  } else if (o.kind == "scdt") {
    const SignedDensity1D f1 = io::read_signal(o.input);
    const SignedDensity1D f2 = io::read_signal(o.input2);
    const Grid1D g = output_grid(o, f1.grid().lo(), f1.grid().hi(), f1.grid().size());
    for (double t : o.ts) {
      const SignedDensity1D d = scdt_geodesic_positive(f1, f2, t, o.m, g);
      rows.emplace_back(d.values().begin(), d.values().end());
    }
    write_sweep(o.output, g, o.ts, rows);
  } else {
    throw Error("geodesic supports --kind cdt, scdt (positive measures) and lot");
  }
  return kExitOk;
}

// ---- radon ----

int cmd_radon(const Options& o, std::ostream&, std::ostream&) {
  const Image2D img = load_image(o.input, o);
  io::write_sinogram(o.output, radon_forward(img, o.n_t ? o.n_t : default_n_t(img), o.n_theta));
  return kExitOk;
}

int cmd_iradon(const Options& o, std::ostream&, std::ostream& err) {
  Warnings w;
  io::write_image(o.output, radon_inverse(io::read_sinogram(o.input), o.width, o.height, fbp(o), &w));
  flush_warnings(err, w);
  return kExitOk;
}

// ---- estimation ----

int cmd_estimate(const Options& o, std::ostream& out, std::ostream&) {
  Options oo = o;
  oo.normalize = true;
  const EstimationResult r = estimate_affine(load_density(o.input, oo), load_density(o.input2, oo),
                                             o.m);
  emit(out, o, {{"omega", r.omega}, {"tau", r.tau}, {"a", r.a}, {"b", r.b},
                {"residual", r.residual}});
  return kExitOk;
}

// ---- datasets ----

struct Dataset {
  std::vector<Vector> x;
  std::vector<int> labels;
  std::vector<std::string> paths;
  json meta;
};

Vector transform_file(const fs::path& p, const json& meta) {
  const std::string kind = meta.at("transform");
  const std::size_t m = meta.at("m");
  if (kind == "cdt") {
    Options o;
    o.normalize = true;
    const CdtRep rep = cdt_forward(load_density(p, o), m);
    return Vector(rep.q.values().begin(), rep.q.values().end());
  }
  if (kind == "rcdt") {
    const Image2D img = io::read_image(p, meta.at("extent").get<double>());
    const RcdtRep rep = rcdt_forward(img, m, meta.at("n_theta").get<std::size_t>());
    return Vector(rep.values().begin(), rep.values().end());
  }
  // raw samples, signals or images
  if (p.extension() == ".pgm" || meta.value("input", "signal") == "image") {
    const Image2D img = io::read_image(p, meta.value("extent", 1.0));
    return Vector(img.values().begin(), img.values().end());
  }
  const SignedDensity1D s = io::read_signal(p);
  return Vector(s.values().begin(), s.values().end());
}

// Transform metadata recorded with fitted models; the first sample fixes the
// domain used later for inversion.
json dataset_meta(const Options& o, const fs::path& first) {
  json meta{{"transform", o.kind}, {"m", o.m}, {"n_theta", o.n_theta}};
  if (o.kind == "rcdt" || first.extension() == ".pgm" ||
      (o.kind == "raw" && io::read_csv(first).header.empty())) {
    const Image2D img = io::read_image(first, o.extent);
    meta["input"] = "image";
    meta["extent"] = img.extent();
    meta["width"] = img.width();
    meta["height"] = img.height();
  } else {
    const SignedDensity1D s = io::read_signal(first);
    meta["input"] = "signal";
    meta["lo"] = s.grid().lo();
    meta["hi"] = s.grid().hi();
    meta["n"] = s.grid().size();
  }
  return meta;
}

Dataset load_dataset(const Options& o) {
  const auto entries = io::read_manifest(o.manifest);
  require(!entries.empty(), "manifest is empty: " + o.manifest);
  Dataset d;
  d.meta = dataset_meta(o, entries.front().path);
  for (const auto& e : entries) {
    d.x.push_back(transform_file(e.path, d.meta));
    d.labels.push_back(e.label);
    d.paths.push_back(e.path.string());
  }
  return d;
}

int cmd_classify_train(const Options& o, std::ostream& out, std::ostream&) {
  const Dataset d = load_dataset(o);
  const SubspaceModel model = fit_nearest_subspace(d.x, d.labels, o.dim);
  io::write_subspace_model(o.model, model, d.meta.dump());
  std::size_t correct = 0;
  for (std::size_t i = 0; i < d.x.size(); ++i) correct += classify(model, d.x[i]) == d.labels[i];
  emit(out, o, {{"classes", static_cast<double>(model.classes.size())},
                {"training_accuracy", static_cast<double>(correct) / d.x.size()}});
  return kExitOk;
}

int cmd_classify_predict(const Options& o, std::ostream& out, std::ostream&) {
  std::string meta_text;
  const SubspaceModel model = io::read_subspace_model(o.model, &meta_text);
  const json meta = json::parse(meta_text);
  std::vector<io::ManifestEntry> entries;
  if (!o.manifest.empty()) entries = io::read_manifest(o.manifest);
  for (const auto& p : o.inputs) entries.push_back({p, 0});
  require(!entries.empty(), "nothing to classify: give --manifest or input files");
  std::size_t correct = 0;
  out << "path,label\n";
  for (const auto& e : entries) {
    const int label = classify(model, transform_file(e.path, meta));
    out << e.path.string() << "," << label << "\n";
    correct += label == e.label;
  }
  if (!o.manifest.empty() && o.inputs.empty()) {
    out << "accuracy," << num(static_cast<double>(correct) / entries.size()) << "\n";
  }
  return kExitOk;
}

int cmd_tbm(const Options& o, std::ostream& out, bool plda) {
  require(o.kind == "cdt" || o.kind == "rcdt", "TBM supports --kind cdt or rcdt");
  const Dataset d = load_dataset(o);
  const TbmModel model =
      plda ? tbm_plda(d.x, d.labels, o.gamma, o.modes) : tbm_pca(d.x, o.modes);
  io::write_tbm_model(o.model, model, d.meta.dump());
  double explained = 0.0;
  for (double v : model.eigenvalues) explained += v;
  std::vector<std::pair<std::string, double>> kv{{"modes", static_cast<double>(model.num_modes())}};
  if (!plda && model.total_variance > 0.0) {
    kv.emplace_back("explained_variance", explained / model.total_variance);
  }
  emit(out, o, kv);
  return kExitOk;
}

int cmd_tbm_modes(const Options& o, std::ostream&, std::ostream& err) {
  std::string meta_text;
  const TbmModel model = io::read_tbm_model(o.model, &meta_text);
  const json meta = json::parse(meta_text);
  const std::string kind = meta.at("transform");
  const fs::path outp(o.output);
  if (outp.has_parent_path()) fs::create_directories(outp.parent_path());
  std::ofstream f(outp);
  require(static_cast<bool>(f), "cannot write " + o.output);
  if (kind == "cdt") {
    const Grid1D g(meta.at("lo").get<double>(), meta.at("hi").get<double>(),
                   o.n ? o.n : meta.at("n").get<std::size_t>());
    const auto line = visualize_mode_cdt(model, o.mode, o.alphas, g);
    f << "alpha,in_range";
    for (std::size_t k = 0; k < g.size(); ++k) f << "," << io::format_double(g.node(k));
    f << "\n";
    for (const auto& s : line) {
      f << io::format_double(s.alpha) << "," << (s.in_range ? 1 : 0);
      if (s.signal) {
        for (double v : s.signal->values()) f << "," << io::format_double(v);
      }
      f << "\n";
      if (!s.in_range) err << "warning: alpha=" << num(s.alpha) << " leaves the transform range\n";
    }
  } else if (kind == "rcdt") {
    const std::size_t w = o.width ? o.width : meta.at("width").get<std::size_t>();
    const std::size_t h = o.height ? o.height : meta.at("height").get<std::size_t>();
    const auto line = visualize_mode_rcdt(model, o.mode, o.alphas,
                                          meta.at("n_theta").get<std::size_t>(),
                                          meta.at("extent").get<double>(), w, h);
    f << "alpha,in_range,path\n";
    for (std::size_t i = 0; i < line.size(); ++i) {
      f << io::format_double(line[i].alpha) << "," << (line[i].in_range ? 1 : 0) << ",";
      if (line[i].image) {
        const fs::path img = outp.parent_path() /
                             (outp.stem().string() + "_" + std::to_string(i) + ".csv");
        io::write_image(img, *line[i].image);
        f << img.filename().string();
      } else {
        err << "warning: alpha=" << num(line[i].alpha) << " leaves the transform range\n";
      }
      f << "\n";
    }
  } else {
    throw Error("model transform '" + kind + "' cannot be visualized");
  }
  return kExitOk;
}

// ---- synth ----

int cmd_synth(const Options& o, std::ostream& out, std::ostream&) {
  const fs::path dir(o.output);
  fs::create_directories(dir);
  const std::size_t n = o.n ? o.n : 1025;
  if (o.kind == "bump-templates") {
    require(o.seed.has_value(), "--seed is required for bump-templates");
    const Grid1D g = synth::default_signal_grid(n);
    const auto data = synth::bump_dataset(g, o.count, *o.seed);
    std::vector<io::ManifestEntry> manifest;
    std::ofstream params(dir / "params.csv");
    params << "file,label,omega,tau\n";
    for (std::size_t i = 0; i < data.size(); ++i) {
      const std::string name = "sample_" + std::to_string(i) + ".csv";
      io::write_signal(dir / name, g, data[i].signal.values());
      manifest.push_back({name, data[i].label});
      params << name << "," << data[i].label << "," << io::format_double(data[i].omega) << ","
             << io::format_double(data[i].tau) << "\n";
    }
    io::write_manifest(dir / "manifest.csv", manifest);
    const auto templates = synth::standard_templates();
    for (std::size_t c = 0; c < templates.size(); ++c) {
      io::write_signal(dir / ("template_" + std::to_string(c) + ".csv"), g,
                       synth::render(templates[c], g).values());
    }
    out << data.size() << " signals written to " << dir.string() << "\n";
  } else if (o.kind == "gaussian-pair") {
    const Grid1D g = synth::default_signal_grid(n);
    const auto [a, b] = synth::gaussian_pair(g);
    io::write_signal(dir / "gaussian_a.csv", g, a.values());
    io::write_signal(dir / "gaussian_b.csv", g, b.values());
    out << "gaussian pair written to " << dir.string() << "\n";
  } else if (o.kind == "disc-phantom") {
    io::write_image(dir / "disc.csv", synth::disc_phantom(o.size, o.size, o.extent, 0.5 * o.extent));
    out << "disc phantom written to " << dir.string() << "\n";
  } else {  // signed-two-bump
    io::write_image(dir / "signed_two_bump.csv", synth::signed_two_bump(o.size, o.size, o.extent));
    out << "signed two-bump phantom written to " << dir.string() << "\n";
  }
  return kExitOk;
}

// ---- parser ----

void add_globals(CLI::App& app, Options& o) {
  app.add_option("--m", o.m, "quantile samples per CDT")->check(CLI::PositiveNumber);
  app.add_option("--n-theta", o.n_theta, "number of projection angles")->check(CLI::Range(2, 100000));
  app.add_option("--seed", o.seed, "seed for synthetic data");
  app.add_option("--format", o.format, "result format on stdout")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"ottk: transport transforms, distances and pipelines"};
  app.require_subcommand(1);
  app.fallthrough();
  add_globals(app, o);

  const std::vector<std::string> transforms{"cdt", "scdt", "rcdt", "rscdt", "lot"};

  auto* transform = app.add_subcommand("transform", "forward transform of a signal, image or measure");
  transform->add_option("--kind", o.kind)->required()->check(CLI::IsMember(transforms));
  transform->add_option("input", o.input)->required();
  transform->add_option("output", o.output)->required();
  transform->add_option("--reference", o.reference, "reference measure for lot");
  transform->add_flag("--normalize", o.normalize, "rescale the input to unit mass");
  transform->add_flag("--energy", o.energy, "use s^2 / ||s||^2 of a raw signal");
  transform->add_option("--n-t", o.n_t, "ray offsets for rcdt/rscdt (0 = width + 1)");
  transform->add_option("--extent", o.extent, "image half-width when no sidecar is present");

  auto* invert = app.add_subcommand("invert", "inverse transform of a stored rep");
  invert->add_option("--kind", o.kind)->required()->check(CLI::IsMember(transforms));
  invert->add_option("input", o.input)->required();
  invert->add_option("output", o.output)->required();
  invert->add_option("--n", o.n, "output grid nodes (1D)");
  invert->add_option("--lo", o.lo);
  invert->add_option("--hi", o.hi);
  invert->add_option("--width", o.width);
  invert->add_option("--height", o.height);
  invert->add_option("--n-t", o.n_t);
  invert->add_option("--window", o.window)->check(CLI::IsMember({"ramlak", "hann"}));

  auto* distance = app.add_subcommand("distance", "transport distance between two inputs");
  distance->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"cdt", "scdt", "rcdt", "rscdt", "w2", "sw2", "lot"}));
  distance->add_option("a", o.input)->required();
  distance->add_option("b", o.input2)->required();
  distance->add_option("--reference", o.reference);
  distance->add_flag("--normalize", o.normalize);
  distance->add_flag("--energy", o.energy);
  distance->add_option("--n-t", o.n_t);
  distance->add_option("--extent", o.extent);

  auto* geodesic = app.add_subcommand("geodesic", "t-sweep along the transport geodesic");
  geodesic->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"cdt", "scdt", "lot"}));
  geodesic->add_option("a", o.input)->required();
  geodesic->add_option("b", o.input2)->required();
  geodesic->add_option("output", o.output)->required();
  geodesic->add_option("--t", o.ts, "comma-separated t values in [0, 1]")->delimiter(',');
  geodesic->add_option("--n", o.n);
  geodesic->add_option("--reference", o.reference);
  geodesic->add_flag("--normalize", o.normalize);

  auto* radon = app.add_subcommand("radon", "Radon transform of an image");
  radon->add_option("input", o.input)->required();
  radon->add_option("output", o.output)->required();
  radon->add_option("--n-t", o.n_t);
  radon->add_option("--extent", o.extent);

  auto* iradon = app.add_subcommand("iradon", "filtered back projection of a sinogram");
  iradon->add_option("input", o.input)->required();
  iradon->add_option("output", o.output)->required();
  iradon->add_option("--width", o.width);
  iradon->add_option("--height", o.height);
  iradon->add_option("--window", o.window)->check(CLI::IsMember({"ramlak", "hann"}));

  auto* estimate = app.add_subcommand("estimate", "recover dilation and translation");
  estimate->add_option("template", o.input)->required();
  estimate->add_option("observed", o.input2)->required();
  estimate->add_flag("--energy", o.energy);

  auto* ctrain = app.add_subcommand("classify-train", "fit a nearest-subspace classifier");
  ctrain->add_option("manifest", o.manifest)->required();
  ctrain->add_option("model", o.model)->required();
  ctrain->add_option("--kind", o.kind)->check(CLI::IsMember({"cdt", "rcdt", "raw"}))
      ->default_val("cdt");
  ctrain->add_option("--dim", o.dim, "subspace dimension per class");
  ctrain->add_option("--extent", o.extent);

  auto* cpredict = app.add_subcommand("classify-predict", "classify with a fitted model");
  cpredict->add_option("model", o.model)->required();
  cpredict->add_option("inputs", o.inputs);
  cpredict->add_option("--manifest", o.manifest);

  auto* pca = app.add_subcommand("tbm-pca", "PCA in transform space");
  pca->add_option("manifest", o.manifest)->required();
  pca->add_option("model", o.model)->required();
  pca->add_option("--kind", o.kind)->check(CLI::IsMember({"cdt", "rcdt"}))->default_val("cdt");
  pca->add_option("--modes", o.modes);
  pca->add_option("--extent", o.extent);

  auto* plda = app.add_subcommand("tbm-plda", "penalized LDA in transform space");
  plda->add_option("manifest", o.manifest)->required();
  plda->add_option("model", o.model)->required();
  plda->add_option("--kind", o.kind)->check(CLI::IsMember({"cdt", "rcdt"}))->default_val("cdt");
  plda->add_option("--modes", o.modes);
  plda->add_option("--gamma", o.gamma)->required()->check(CLI::PositiveNumber);
  plda->add_option("--extent", o.extent);

  auto* tmodes = app.add_subcommand("tbm-modes", "reconstructions along a TBM mode");
  tmodes->add_option("model", o.model)->required();
  tmodes->add_option("output", o.output)->required();
  tmodes->add_option("--mode", o.mode);
  tmodes->add_option("--alphas", o.alphas)->delimiter(',');
  tmodes->add_option("--n", o.n);
  tmodes->add_option("--width", o.width);
  tmodes->add_option("--height", o.height);

  auto* synth = app.add_subcommand("synth", "write synthetic datasets");
  synth->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"bump-templates", "gaussian-pair", "disc-phantom", "signed-two-bump"}));
  synth->add_option("--out", o.output)->required();
  synth->add_option("--count", o.count, "samples per class (bump-templates)");
  synth->add_option("--size", o.size, "image side (phantoms)");
  synth->add_option("--n", o.n, "signal grid nodes");
  synth->add_option("--extent", o.extent);

  for (auto* sub : app.get_subcommands({})) add_globals(*sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  // tbm-modes reads the output size from the model unless given.
  if (app.got_subcommand(tmodes)) {
    if (tmodes->count("--width") == 0) o.width = 0;
    if (tmodes->count("--height") == 0) o.height = 0;
  }

  try {
    if (app.got_subcommand(transform)) return cmd_transform(o, out, err);
    if (app.got_subcommand(invert)) return cmd_invert(o, out, err);
    if (app.got_subcommand(distance)) return cmd_distance(o, out, err);
    if (app.got_subcommand(geodesic)) return cmd_geodesic(o, out, err);
    if (app.got_subcommand(radon)) return cmd_radon(o, out, err);
    if (app.got_subcommand(iradon)) return cmd_iradon(o, out, err);
    if (app.got_subcommand(estimate)) return cmd_estimate(o, out, err);
    if (app.got_subcommand(ctrain)) return cmd_classify_train(o, out, err);
    if (app.got_subcommand(cpredict)) return cmd_classify_predict(o, out, err);
    if (app.got_subcommand(pca)) return cmd_tbm(o, out, false);
    if (app.got_subcommand(plda)) return cmd_tbm(o, out, true);
    if (app.got_subcommand(tmodes)) return cmd_tbm_modes(o, out, err);
    if (app.got_subcommand(synth)) return cmd_synth(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace ottk::cli
