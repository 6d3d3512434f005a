// Copyright 2026 The vqesim Authors
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

#include "vqesim/geometry.hpp"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <numbers>

#include "vqesim/error.hpp"

namespace vqesim {

namespace {

struct Vec2 {
  double x = 0, y = 0;
};

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }
Vec2 unit(Vec2 a) { return (1.0 / norm(a)) * a; }

using Ring = std::array<Vec2, 6>;

Ring hexagon(double radius) {
  Ring c;
  for (int k = 0; k < 6; ++k) {
    const double a = k * std::numbers::pi / 3.0;
    c[static_cast<std::size_t>(k)] = {radius * std::cos(a), radius * std::sin(a)};
  }
  return c;
}

// Hydrogen positions on the external bisector of each carbon's two bonds.
Ring bisector_hydrogens(const Ring& c) {
  Ring h;
  for (std::size_t k = 0; k < 6; ++k) {
    const Vec2 u1 = unit(c[(k + 5) % 6] - c[k]);
    const Vec2 u2 = unit(c[(k + 1) % 6] - c[k]);
    const Vec2 sum = u1 + u2;
    const Vec2 out = norm(sum) > 1e-12 ? -1.0 * unit(sum) : Vec2{-u1.y, u1.x};
    h[k] = c[k] + kCarbonHydrogenBond * out;
  }
  return h;
}

MoleculeGeometry assemble(const Ring& c, const Ring& h, int k, double p) {
  MoleculeGeometry g;
  g.distortion = k;
  g.parameter = p;
  for (const auto& v : c) g.atoms.push_back({"C", v.x, v.y, 0.0});
  for (const auto& v : h) g.atoms.push_back({"H", v.x, v.y, 0.0});
  return g;
}

void require(bool ok, const char* what, double value) {
  if (!ok || !std::isfinite(value)) {
    throw ValidationError(fmt::format("{} (got {})", what, value));
  }
}

double clean(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace

MoleculeGeometry distortion1(double r1) {
  require(r1 > 0, "distortion 1 needs r1 > 0", r1);
  const Ring c = hexagon(r1);
  Ring h;
  for (std::size_t k = 0; k < 6; ++k) {
    h[k] = (1.0 + kCarbonHydrogenBond / norm(c[k])) * c[k];
  }
  return assemble(c, h, 1, r1);
}

MoleculeGeometry distortion2(double r2) {
  require(r2 > 0, "distortion 2 needs r2 > 0", r2);
  const double a = kEquilibriumCarbonBond;
  const Ring c = {Vec2{a, 0.0},           Vec2{a / 2, r2 / 2},
                  Vec2{-a / 2, r2 / 2},   Vec2{-a, 0.0},
                  Vec2{-a / 2, -r2 / 2},  Vec2{a / 2, -r2 / 2}};
  return assemble(c, bisector_hydrogens(c), 2, r2);
}

MoleculeGeometry distortion3(double r3) {
  require(r3 >= 0, "distortion 3 needs r3 >= 0", r3);
  Ring c = hexagon(kEquilibriumCarbonBond);
  Ring h;
  for (std::size_t k = 0; k < 6; ++k) {
    h[k] = (1.0 + kCarbonHydrogenBond / norm(c[k])) * c[k];
  }
  for (std::size_t k = 0; k < 6; ++k) {
    const bool right = c[k].x > 0;
    const Vec2 shift{0.0, right ? r3 / 2 : -r3 / 2};
    c[k] = c[k] + shift;
    h[k] = h[k] + shift;
  }
  return assemble(c, h, 3, r3);
}

MoleculeGeometry make_distortion(int k, double parameter) {
  switch (k) {
    case 1: return distortion1(parameter);
    case 2: return distortion2(parameter);
    case 3: return distortion3(parameter);
    default: throw ValidationError(fmt::format("unknown distortion {}", k));
  }
}

std::string to_xyz(const MoleculeGeometry& g) {
  std::string s = fmt::format("{}\ndistortion={} param={}\n", g.atoms.size(),
                              g.distortion, g.parameter);
  for (const auto& a : g.atoms) {
    s += fmt::format("{} {:.6f} {:.6f} {:.6f}\n", a.element, clean(a.x),
                     clean(a.y), clean(a.z));
  }
  return s;
}

std::string xyz_filename(int k, double parameter) {
  return fmt::format("benzene_d{}_{}.xyz", k, parameter);
}

}  // namespace vqesim
