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

/**
 * @file
 * Benzene geometries for three families of distortions, written as XYZ.
 *
 * Atom order is the same for every family: carbons C0..C5 at equilibrium
 * angles 0°, 60°, ..., 300° in the xy-plane, then H0..H5 with H_k bonded
 * to C_k. Coordinates are in Ångström.
 */
#pragma once

#include <string>
#include <vector>

namespace vqesim {

inline constexpr double kCarbonHydrogenBond = 1.09;
inline constexpr double kEquilibriumCarbonBond = 1.41;

struct Atom {
  std::string element;
  double x = 0, y = 0, z = 0;
};

struct MoleculeGeometry {
  std::vector<Atom> atoms;
  int distortion = 0;
  double parameter = 0.0;
};

/// Uniform deformation: regular hexagon of side (= circumradius) r1, each H
/// radially outward at 1.09 Å.
MoleculeGeometry distortion1(double r1);

/// Two opposite C-C sides (C1-C2 and C4-C5) of fixed length 1.41 Å kept
/// parallel to x at y = ±r2/2; the two remaining carbons stay at
/// (±1.41, 0), halfway between the sides. Each H lies on the external
/// bisector of its carbon's two C-C bonds. r2 = √3·1.41 is the hexagon.
MoleculeGeometry distortion2(double r2);

/// The hexagon is cut by the y-axis into two rigid C3H3 triplets
/// (C5, C0, C1 and C2, C3, C4 with their H atoms), slid by +r3/2 and −r3/2
/// along y. r3 = 0 is the hexagon.
MoleculeGeometry distortion3(double r3);

/// Dispatches on k in {1, 2, 3}.
MoleculeGeometry make_distortion(int k, double parameter);

/// Atom count, comment `distortion=<k> param=<value>`, then `El x y z` with
/// six decimals.
std::string to_xyz(const MoleculeGeometry& g);

/// `benzene_d<k>_<value>.xyz` with the shortest round-trip value text.
std::string xyz_filename(int k, double parameter);

}  // namespace vqesim
