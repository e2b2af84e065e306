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

#include "ottk/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ottk/error.hpp"

namespace ottk::io {
namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parse_double(const std::string& s, double& v) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (*b == '+') ++b;
  const auto r = std::from_chars(b, e, v);
  return r.ec == std::errc() && r.ptr == e;
}

double to_double(const std::string& s, const fs::path& path) {
  double v = 0.0;
  require(parse_double(s, v), "malformed number '" + s + "' in " + path.string());
  return v;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write " + path.string());
  return out;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const json& j) { open_out(path) << j.dump(2) << "\n"; }

template <typename T>
T field(const json& j, const char* key, const fs::path& path) {
  require(j.contains(key), std::string("missing '") + key + "' in " + path.string());
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(std::string("bad '") + key + "' in " + path.string());
  }
}

std::vector<std::vector<double>> matrix_rows(const fs::path& path, std::size_t cols) {
  const auto rows = read_numeric_csv(path);
  for (const auto& r : rows) {
    require(r.size() == cols, "unexpected column count in " + path.string());
  }
  return rows;
}

void write_row(std::ostream& out, std::span<const double> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << format_double(v[i]);
  }
  out << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

fs::path sidecar(const fs::path& path) { return fs::path(path.string() + ".json"); }

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot read " + path.string());
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto cells = split(line);
    if (first) {
      first = false;
      double v = 0.0;
      const bool numeric =
          std::all_of(cells.begin(), cells.end(), [&](const std::string& c) {
            return c.empty() || parse_double(c, v);
          });
      if (!numeric) {
        t.header = std::move(cells);
        continue;
      }
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::vector<std::vector<double>> read_numeric_csv(const fs::path& path) {
  const CsvTable t = read_csv(path);
  std::vector<std::vector<double>> out;
  for (const auto& r : t.rows) {
    std::vector<double> v;
    for (const auto& c : r) v.push_back(to_double(c, path));
    out.push_back(std::move(v));
  }
  return out;
}

SignedDensity1D read_signal(const fs::path& path) {
  const auto rows = matrix_rows(path, 2);
  require(rows.size() >= 2, "signal needs at least two samples: " + path.string());
  const double lo = rows.front()[0];
  const double hi = rows.back()[0];
  const Grid1D grid(lo, hi, rows.size());
  std::vector<double> v;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    require(std::abs(rows[k][0] - grid.node(k)) <= 1e-9 * std::max(1.0, hi - lo),
            "signal x values are not uniformly spaced: " + path.string());
    v.push_back(rows[k][1]);
  }
  return SignedDensity1D(grid, std::move(v));
}

void write_signal(const fs::path& path, const Grid1D& grid, std::span<const double> values) {
  require(values.size() == grid.size(), "signal values do not match the grid");
  auto out = open_out(path);
  out << "x,value\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out << format_double(grid.node(k)) << ',' << format_double(values[k]) << '\n';
  }
}

CdtRep read_cdt(const fs::path& path) {
  const json meta = read_json(sidecar(path));
  const auto rows = matrix_rows(path, 1);
  std::vector<double> q;
  for (const auto& r : rows) q.push_back(r[0]);
  require(q.size() == field<std::size_t>(meta, "m", path), "CDT rep length does not match m");
  return CdtRep{QuantileRep(field<double>(meta, "lo", path), field<double>(meta, "hi", path),
                            std::move(q))};
}

void write_cdt(const fs::path& path, const CdtRep& rep) {
  auto out = open_out(path);
  out << "q\n";
  for (double v : rep.q.values()) out << format_double(v) << '\n';
  write_json(sidecar(path), json{{"kind", "cdt"}, {"m", rep.m()}, {"lo", rep.lo()}, {"hi", rep.hi()}});
}

ScdtRep read_scdt(const fs::path& path) {
  const json meta = read_json(sidecar(path));
  const CsvTable t = read_csv(path);
  ScdtRep rep;
  rep.m = field<std::size_t>(meta, "m", path);
  rep.lo = field<double>(meta, "lo", path);
  rep.hi = field<double>(meta, "hi", path);
  rep.mass_plus = field<double>(meta, "mass_plus", path);
  rep.mass_minus = field<double>(meta, "mass_minus", path);
  require(t.rows.size() == rep.m, "SCDT rep length does not match m");
  std::vector<double> p, n;
  for (const auto& r : t.rows) {
    require(r.size() == 2, "SCDT rep needs two columns: " + path.string());
    if (!r[0].empty()) p.push_back(to_double(r[0], path));
    if (!r[1].empty()) n.push_back(to_double(r[1], path));
  }
  require(p.empty() || p.size() == rep.m, "SCDT positive column is incomplete");
  require(n.empty() || n.size() == rep.m, "SCDT negative column is incomplete");
  if (!p.empty()) rep.plus = QuantileRep(rep.lo, rep.hi, std::move(p));
  if (!n.empty()) rep.minus = QuantileRep(rep.lo, rep.hi, std::move(n));
  return rep;
}

void write_scdt(const fs::path& path, const ScdtRep& rep) {
  auto out = open_out(path);
  out << "q_plus,q_minus\n";
  for (std::size_t j = 0; j < rep.m; ++j) {
    if (rep.plus) out << format_double((*rep.plus)[j]);
    out << ',';
    if (rep.minus) out << format_double((*rep.minus)[j]);
    out << '\n';
  }
  write_json(sidecar(path), json{{"kind", "scdt"},
                                 {"m", rep.m},
                                 {"lo", rep.lo},
                                 {"hi", rep.hi},
                                 {"mass_plus", rep.mass_plus},
                                 {"mass_minus", rep.mass_minus}});
}

Image2D read_image(const fs::path& path, double default_extent) {
  double extent = default_extent;
  if (fs::exists(sidecar(path))) extent = field<double>(read_json(sidecar(path)), "extent", path);
  if (path.extension() == ".pgm") {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot read " + path.string());
    std::string magic;
    in >> magic;
    require(magic == "P2", "only plain PGM (P2) is supported: " + path.string());
    auto next = [&]() {
      std::string tok;
      while (in >> tok) {
        if (tok[0] == '#') {
          std::getline(in, tok);
          continue;
        }
        return to_double(tok, path);
      }
      throw Error("truncated PGM: " + path.string());
    };
    const auto w = static_cast<std::size_t>(next());
    const auto h = static_cast<std::size_t>(next());
    const double maxval = next();
    require(maxval > 0.0, "bad PGM maxval: " + path.string());
    std::vector<double> v(w * h);
    // PGM rows run top to bottom; image row j is y index j from the bottom.
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t i = 0; i < w; ++i) v[(h - 1 - r) * w + i] = next() / maxval;
    }
    return Image2D(w, h, extent, std::move(v));
  }
  const auto rows = read_numeric_csv(path);
  require(!rows.empty() && !rows.front().empty(), "empty image: " + path.string());
  const std::size_t w = rows.front().size();
  std::vector<double> v;
  for (const auto& r : rows) {
    require(r.size() == w, "ragged image rows: " + path.string());
    v.insert(v.end(), r.begin(), r.end());
  }
  return Image2D(w, rows.size(), extent, std::move(v));
}

void write_image(const fs::path& path, const Image2D& img) {
  auto out = open_out(path);
  if (path.extension() == ".pgm") {
    double hi = 0.0;
    for (double v : img.values()) hi = std::max(hi, v);
    out << "P2\n" << img.width() << ' ' << img.height() << "\n255\n";
    for (std::size_t r = 0; r < img.height(); ++r) {
      const std::size_t j = img.height() - 1 - r;
      for (std::size_t i = 0; i < img.width(); ++i) {
        const double v = hi > 0.0 ? std::clamp(img.at(i, j) / hi, 0.0, 1.0) : 0.0;
        out << (i ? " " : "") << static_cast<int>(std::lround(255.0 * v));
      }
      out << '\n';
    }
  } else {
    for (std::size_t j = 0; j < img.height(); ++j) {
      write_row(out, img.values().subspan(j * img.width(), img.width()));
    }
  }
  write_json(sidecar(path), json{{"width", img.width()}, {"height", img.height()},
                                 {"extent", img.extent()}});
}

Sinogram read_sinogram(const fs::path& path) {
  const json meta = read_json(sidecar(path));
  const auto n_t = field<std::size_t>(meta, "n_t", path);
  const auto n_theta = field<std::size_t>(meta, "n_theta", path);
  const auto rows = matrix_rows(path, n_theta);
  require(rows.size() == n_t, "sinogram row count does not match n_t");
  std::vector<double> v(n_t * n_theta);
  for (std::size_t i = 0; i < n_t; ++i) {
    for (std::size_t a = 0; a < n_theta; ++a) v[a * n_t + i] = rows[i][a];
  }
  return Sinogram(n_t, n_theta, field<double>(meta, "extent", path), std::move(v));
}

void write_sinogram(const fs::path& path, const Sinogram& sino) {
  auto out = open_out(path);
  std::vector<double> row(sino.n_theta());
  for (std::size_t i = 0; i < sino.n_t(); ++i) {
    for (std::size_t a = 0; a < sino.n_theta(); ++a) row[a] = sino.column(a)[i];
    write_row(out, row);
  }
  write_json(sidecar(path), json{{"kind", "sinogram"},
                                 {"n_t", sino.n_t()},
                                 {"n_theta", sino.n_theta()},
                                 {"extent", sino.extent()}});
}

RcdtRep read_rcdt(const fs::path& path) {
  const json meta = read_json(sidecar(path));
  const auto m = field<std::size_t>(meta, "m", path);
  const auto n_theta = field<std::size_t>(meta, "n_theta", path);
  const auto rows = matrix_rows(path, n_theta);
  require(rows.size() == m, "RCDT row count does not match m");
  std::vector<double> v(m * n_theta);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t a = 0; a < n_theta; ++a) v[a * m + j] = rows[j][a];
  }
  return RcdtRep(m, n_theta, field<double>(meta, "extent", path), std::move(v));
}

void write_rcdt(const fs::path& path, const RcdtRep& rep) {
  auto out = open_out(path);
  std::vector<double> row(rep.n_theta());
  for (std::size_t j = 0; j < rep.m(); ++j) {
    for (std::size_t a = 0; a < rep.n_theta(); ++a) row[a] = rep.column(a)[j];
    write_row(out, row);
  }
  write_json(sidecar(path), json{{"kind", "rcdt"},
                                 {"m", rep.m()},
                                 {"n_theta", rep.n_theta()},
                                 {"extent", rep.extent()},
                                 {"channels", {"T"}}});
}

RscdtRep read_rscdt(const fs::path& path) {
  const json meta = read_json(sidecar(path));
  const auto m = field<std::size_t>(meta, "m", path);
  const auto n_theta = field<std::size_t>(meta, "n_theta", path);
  const auto r = field<std::vector<double>>(meta, "r", path);
  const auto s = field<std::vector<double>>(meta, "s", path);
  require(r.size() == n_theta && s.size() == n_theta, "RSCDT mass channels do not match n_theta");
  const CsvTable t = read_csv(path);
  require(t.rows.size() == m, "RSCDT row count does not match m");
  RscdtRep rep;
  rep.n_t = field<std::size_t>(meta, "n_t", path);
  rep.extent = field<double>(meta, "extent", path);
  rep.slices.resize(n_theta);
  for (std::size_t a = 0; a < n_theta; ++a) {
    ScdtRep& sl = rep.slices[a];
    sl.m = m;
    sl.lo = -rep.extent;
    sl.hi = rep.extent;
    sl.mass_plus = r[a];
    sl.mass_minus = s[a];
    std::vector<double> p, n;
    for (const auto& row : t.rows) {
      require(row.size() == 2 * n_theta, "RSCDT rep needs 2 n_theta columns");
      if (!row[a].empty()) p.push_back(to_double(row[a], path));
      if (!row[n_theta + a].empty()) n.push_back(to_double(row[n_theta + a], path));
    }
    require(p.empty() || p.size() == m, "RSCDT T column is incomplete");
    require(n.empty() || n.size() == m, "RSCDT U column is incomplete");
    if (!p.empty()) sl.plus = QuantileRep(sl.lo, sl.hi, std::move(p));
    if (!n.empty()) sl.minus = QuantileRep(sl.lo, sl.hi, std::move(n));
  }
  return rep;
}

void write_rscdt(const fs::path& path, const RscdtRep& rep) {
  auto out = open_out(path);
  const std::size_t n = rep.n_theta();
  for (std::size_t j = 0; j < rep.m(); ++j) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a) out << ',';
      if (rep.slices[a].plus) out << format_double((*rep.slices[a].plus)[j]);
    }
    for (std::size_t a = 0; a < n; ++a) {
      out << ',';
      if (rep.slices[a].minus) out << format_double((*rep.slices[a].minus)[j]);
    }
    out << '\n';
  }
  std::vector<double> r(n), s(n);
  for (std::size_t a = 0; a < n; ++a) {
    r[a] = rep.slices[a].mass_plus;
    s[a] = rep.slices[a].mass_minus;
  }
  write_json(sidecar(path), json{{"kind", "rscdt"},
                                 {"m", rep.m()},
                                 {"n_theta", n},
                                 {"n_t", rep.n_t},
                                 {"extent", rep.extent},
                                 {"channels", {"T", "U", "r", "s"}},
                                 {"r", r},
                                 {"s", s}});
}

DiscreteMeasure read_measure(const fs::path& path) {
  const auto rows = read_numeric_csv(path);
  require(!rows.empty(), "empty measure: " + path.string());
  const std::size_t cols = rows.front().size();
  require(cols == 2 || cols == 3, "measure CSV needs x,weight or x,y,weight columns");
  std::vector<double> coords, weights;
  for (const auto& r : rows) {
    require(r.size() == cols, "ragged measure rows: " + path.string());
    coords.insert(coords.end(), r.begin(), r.end() - 1);
    weights.push_back(r.back());
  }
  return DiscreteMeasure(cols - 1, std::move(coords), std::move(weights));
}

void write_measure(const fs::path& path, const DiscreteMeasure& mu) {
  auto out = open_out(path);
  out << (mu.dim() == 1 ? "x,weight\n" : "x,y,weight\n");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    std::vector<double> row(mu.point(i).begin(), mu.point(i).end());
    row.push_back(mu.weights()[i]);
    write_row(out, row);
  }
}

void write_plan(const fs::path& path, const TransportPlan& plan) {
  auto out = open_out(path);
  out << "i,j,mass\n";
  for (const auto& e : plan.entries) out << e.row << ',' << e.col << ',' << format_double(e.mass) << '\n';
}

std::vector<ManifestEntry> read_manifest(const fs::path& path) {
  const CsvTable t = read_csv(path);
  std::vector<ManifestEntry> out;
  for (const auto& r : t.rows) {
    require(r.size() == 2, "manifest rows need path,label: " + path.string());
    fs::path p = r[0];
    if (p.is_relative()) p = path.parent_path() / p;
    const double label = to_double(r[1], path);
    require(label == std::floor(label), "manifest labels must be integers");
    out.push_back({p, static_cast<int>(label)});
  }
  return out;
}

void write_manifest(const fs::path& path, const std::vector<ManifestEntry>& entries) {
  auto out = open_out(path);
  out << "path,label\n";
  for (const auto& e : entries) out << e.path.string() << ',' << e.label << '\n';
}

namespace {

json matrix_to_json(const Matrix& m) {
  json cols = json::array();
  for (std::size_t k = 0; k < m.cols(); ++k) cols.push_back(m.col(k));
  return cols;
}

Matrix matrix_from_json(const json& cols, std::size_t dim) {
  Matrix m(dim, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto c = cols[k].get<std::vector<double>>();
    require(c.size() == dim, "model column has the wrong length");
    for (std::size_t i = 0; i < dim; ++i) m(i, k) = c[i];
  }
  return m;
}

}  // namespace

void write_subspace_model(const fs::path& path, const SubspaceModel& model,
                          const std::string& meta) {
  json classes = json::array();
  for (const auto& c : model.classes) {
    classes.push_back({{"label", c.label}, {"mean", c.mean}, {"basis", matrix_to_json(c.basis)}});
  }
  json j{{"model", "nearest_subspace"}, {"dim", model.dim}, {"classes", classes}};
  j["meta"] = meta.empty() ? json::object() : json::parse(meta);
  write_json(path, j);
}

SubspaceModel read_subspace_model(const fs::path& path, std::string* meta) {
  const json j = read_json(path);
  require(field<std::string>(j, "model", path) == "nearest_subspace",
          "not a nearest-subspace model: " + path.string());
  SubspaceModel model;
  model.dim = field<std::size_t>(j, "dim", path);
  if (meta) *meta = j.contains("meta") ? j["meta"].dump() : "{}";
  for (const auto& c : field<json>(j, "classes", path)) {
    SubspaceClass sc;
    sc.label = field<int>(c, "label", path);
    sc.mean = field<std::vector<double>>(c, "mean", path);
    sc.basis = matrix_from_json(field<json>(c, "basis", path), sc.mean.size());
    model.classes.push_back(std::move(sc));
  }
  return model;
}

void write_tbm_model(const fs::path& path, const TbmModel& model, const std::string& meta) {
  json j{{"model", "tbm"},
         {"kind", to_string(model.kind)},
         {"gamma", model.gamma},
         {"mean", model.mean},
         {"modes", matrix_to_json(model.modes)},
         {"eigenvalues", model.eigenvalues},
         {"total_variance", model.total_variance}};
  j["meta"] = meta.empty() ? json::object() : json::parse(meta);
  write_json(path, j);
}

TbmModel read_tbm_model(const fs::path& path, std::string* meta) {
  const json j = read_json(path);
  require(field<std::string>(j, "model", path) == "tbm", "not a TBM model: " + path.string());
  TbmModel model;
  model.kind = field<std::string>(j, "kind", path) == "plda" ? TbmKind::kPlda : TbmKind::kPca;
  model.gamma = field<double>(j, "gamma", path);
  model.mean = field<std::vector<double>>(j, "mean", path);
  model.modes = matrix_from_json(field<json>(j, "modes", path), model.mean.size());
  model.eigenvalues = field<std::vector<double>>(j, "eigenvalues", path);
  model.total_variance = field<double>(j, "total_variance", path);
  require(model.eigenvalues.size() == model.modes.cols(), "TBM eigenvalues do not match modes");
  if (meta) *meta = j.contains("meta") ? j["meta"].dump() : "{}";
  return model;
}

}  // namespace ottk::io
