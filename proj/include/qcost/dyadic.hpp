// Copyright 2026 The qcost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace qcost {

/**
 * Exact value (re + i*im) / 2^log2_den with integer re, im.
 *
 * Always kept reduced: when log2_den > 0 at least one of re/im is odd, and
 * zero is stored as 0/2^0. Reduced form makes structural equality coincide
 * with numeric equality. Arithmetic that would overflow 64-bit numerators
 * throws ResourceError.
 */
class DyadicGaussian {
 public:
  constexpr DyadicGaussian() = default;
  DyadicGaussian(std::int64_t re, std::int64_t im, unsigned log2_den = 0);

  static DyadicGaussian zero() { return {}; }
  static DyadicGaussian one() { return {1, 0, 0}; }

  std::int64_t re_num() const { return re_; }
  std::int64_t im_num() const { return im_; }
  unsigned log2_den() const { return den_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  DyadicGaussian conj() const;
  DyadicGaussian operator-() const;

  friend DyadicGaussian operator+(const DyadicGaussian& a, const DyadicGaussian& b);
  friend DyadicGaussian operator-(const DyadicGaussian& a, const DyadicGaussian& b);
  friend DyadicGaussian operator*(const DyadicGaussian& a, const DyadicGaussian& b);
  DyadicGaussian& operator+=(const DyadicGaussian& o) { return *this = *this + o; }

  friend bool operator==(const DyadicGaussian&, const DyadicGaussian&) = default;

  std::string to_string() const;

 private:
  void reduce();

  std::int64_t re_ = 0;
  std::int64_t im_ = 0;
  unsigned den_ = 0;
};

}  // namespace qcost

template <>
struct std::hash<qcost::DyadicGaussian> {
  std::size_t operator()(const qcost::DyadicGaussian& d) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(d.re_num());
    h = h * 1000003u ^ std::hash<std::int64_t>{}(d.im_num());
    return h * 1000003u ^ d.log2_den();
  }
};
