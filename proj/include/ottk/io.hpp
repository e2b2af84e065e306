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

// File formats. Matrices are CSV; metadata goes in a JSON sidecar written
// next to the data file as "<path>.json".
//
//   1D signal        CSV "x,value", uniform x
//   CDT rep          CSV "q" (m rows) + sidecar {kind, m, lo, hi}
//   SCDT rep         CSV "q_plus,q_minus" (empty cell = zero part) +
//                    sidecar {kind, m, lo, hi, mass_plus, mass_minus}
//   image            CSV matrix (row = y index) or PGM P2 + sidecar {extent}
//   sinogram         CSV matrix n_t x n_theta + sidecar {n_t, n_theta, extent}
//   RCDT rep         CSV matrix m x n_theta + sidecar {kind, m, n_theta, extent,
//                    channels: ["T"]}
//   RSCDT rep        CSV matrix m x 2 n_theta (T columns, then U columns,
//                    empty = zero part) + sidecar {n_t, extent, channels,
//                    r, s}
//   discrete measure CSV "x,weight" or "x,y,weight"
//   plan             CSV "i,j,mass"
//   manifest         CSV "path,label"

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ottk/apps.hpp"
#include "ottk/cdt.hpp"
#include "ottk/ot_exact.hpp"
#include "ottk/radon.hpp"
#include "ottk/rcdt.hpp"
#include "ottk/scdt.hpp"

namespace ottk::io {

namespace fs = std::filesystem;

/// Rows of a CSV file; a first row that does not parse as numbers is
/// returned separately as the header.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const fs::path& path);
std::vector<std::vector<double>> read_numeric_csv(const fs::path& path);
fs::path sidecar(const fs::path& path);

SignedDensity1D read_signal(const fs::path& path);
void write_signal(const fs::path& path, const Grid1D& grid, std::span<const double> values);

CdtRep read_cdt(const fs::path& path);
void write_cdt(const fs::path& path, const CdtRep& rep);

ScdtRep read_scdt(const fs::path& path);
void write_scdt(const fs::path& path, const ScdtRep& rep);

/// PGM (by extension .pgm) or CSV; extent comes from the sidecar when present.
Image2D read_image(const fs::path& path, double default_extent = 1.0);
void write_image(const fs::path& path, const Image2D& img);

Sinogram read_sinogram(const fs::path& path);
void write_sinogram(const fs::path& path, const Sinogram& sino);

RcdtRep read_rcdt(const fs::path& path);
void write_rcdt(const fs::path& path, const RcdtRep& rep);

RscdtRep read_rscdt(const fs::path& path);
void write_rscdt(const fs::path& path, const RscdtRep& rep);

DiscreteMeasure read_measure(const fs::path& path);
void write_measure(const fs::path& path, const DiscreteMeasure& mu);

void write_plan(const fs::path& path, const TransportPlan& plan);

struct ManifestEntry {
  fs::path path;
  int label = 0;
};
/// Relative paths resolve against the manifest's directory.
std::vector<ManifestEntry> read_manifest(const fs::path& path);
void write_manifest(const fs::path& path, const std::vector<ManifestEntry>& entries);

/// `meta` is a JSON object string stored with the model (may be empty).
void write_subspace_model(const fs::path& path, const SubspaceModel& model,
                          const std::string& meta = "");
SubspaceModel read_subspace_model(const fs::path& path, std::string* meta = nullptr);

void write_tbm_model(const fs::path& path, const TbmModel& model, const std::string& meta = "");
TbmModel read_tbm_model(const fs::path& path, std::string* meta = nullptr);

std::string format_double(double v);

}  // namespace ottk::io
