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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ottk {

/// In-place radix-2 FFT; size must be a power of two. The inverse includes
/// the 1/N factor.
void fft(std::span<std::complex<double>> data, bool inverse);

/// Forward DFT of a real signal zero-padded to `size` (a power of two).
std::vector<std::complex<double>> real_fft(std::span<const double> signal, std::size_t size);

std::size_t next_pow2(std::size_t n);

}  // namespace ottk
