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

#include "qcost/dyadic.hpp"

#include <sstream>

#include "qcost/errors.hpp"

namespace qcost {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("dyadic overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ResourceError("dyadic overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("dyadic overflow");
  return r;
}

std::int64_t checked_shl(std::int64_t a, unsigned s) {
  if (s >= 62) {
    if (a == 0) return 0;
    throw ResourceError("dyadic overflow");
  }
  return checked_mul(a, std::int64_t{1} << s);
}

}  // namespace

DyadicGaussian::DyadicGaussian(std::int64_t re, std::int64_t im, unsigned log2_den)
    : re_(re), im_(im), den_(log2_den) {
  reduce();
}

void DyadicGaussian::reduce() {
  if (re_ == 0 && im_ == 0) {
    den_ = 0;
    return;
  }
  while (den_ > 0 && (re_ % 2 == 0) && (im_ % 2 == 0)) {
    re_ /= 2;
    im_ /= 2;
    --den_;
  }
}

DyadicGaussian DyadicGaussian::conj() const {
  DyadicGaussian r = *this;
  r.im_ = checked_sub(0, im_);
  return r;
}

DyadicGaussian DyadicGaussian::operator-() const {
  DyadicGaussian r = *this;
  r.re_ = checked_sub(0, re_);
  r.im_ = checked_sub(0, im_);
  return r;
}

DyadicGaussian operator+(const DyadicGaussian& a, const DyadicGaussian& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const unsigned den = a.den_ > b.den_ ? a.den_ : b.den_;
  const unsigned sa = den - a.den_;
  const unsigned sb = den - b.den_;
  return DyadicGaussian(checked_add(checked_shl(a.re_, sa), checked_shl(b.re_, sb)),
                        checked_add(checked_shl(a.im_, sa), checked_shl(b.im_, sb)), den);
}

DyadicGaussian operator-(const DyadicGaussian& a, const DyadicGaussian& b) {
  return a + (-b);
}

DyadicGaussian operator*(const DyadicGaussian& a, const DyadicGaussian& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::int64_t re =
      checked_sub(checked_mul(a.re_, b.re_), checked_mul(a.im_, b.im_));
  const std::int64_t im =
      checked_add(checked_mul(a.re_, b.im_), checked_mul(a.im_, b.re_));
  const unsigned den = a.den_ + b.den_;
  if (den > 120) throw ResourceError("dyadic denominator out of range");
  return DyadicGaussian(re, im, den);
}

std::string DyadicGaussian::to_string() const {
  std::ostringstream os;
  os << '(' << re_ << (im_ < 0 ? "-" : "+") << (im_ < 0 ? -im_ : im_) << "i)";
  if (den_ > 0) os << "/2^" << den_;
  return os.str();
}

}  // namespace qcost
