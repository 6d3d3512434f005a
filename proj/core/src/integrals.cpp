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

#include "vqesim/integrals.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <json.hpp>

#include "vqesim/error.hpp"

namespace vqesim {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

// Extracts `KEY=value` from the namelist text; value ends at ',' or space.
std::optional<std::string> namelist_value(const std::string& header,
                                          const std::string& key) {
  std::size_t pos = 0;
  while ((pos = header.find(key, pos)) != std::string::npos) {
    const bool starts_word =
        pos == 0 || !std::isalnum(static_cast<unsigned char>(header[pos - 1]));
    std::size_t eq = pos + key.size();
    while (eq < header.size() && header[eq] == ' ') ++eq;
    if (starts_word && eq < header.size() && header[eq] == '=') {
      std::size_t b = eq + 1;
      while (b < header.size() && header[b] == ' ') ++b;
      std::size_t e = b;
      while (e < header.size() && header[e] != ',' && header[e] != ' ' &&
             header[e] != '\n' && header[e] != '/' && header[e] != '&') {
        ++e;
      }
      return header.substr(b, e - b);
    }
    pos += key.size();
  }
  return std::nullopt;
}

long parse_int_field(const std::string& header, const std::string& key,
                     bool required, long fallback) {
  auto v = namelist_value(header, key);
  if (!v || v->empty()) {
    if (required) {
      throw ValidationError("FCIDUMP header is missing " + key + "=");
    }
    return fallback;
  }
  try {
    std::size_t used = 0;
    long out = std::stol(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
    return out;
  } catch (const std::exception&) {
    throw ValidationError("FCIDUMP header has a malformed " + key + " value '" +
                          *v + "'");
  }
}

using Quad = std::array<std::size_t, 4>;

// Canonical representative of the 8-fold real-orbital symmetry class of
// (pq|rs).
Quad canonical_chemist(std::size_t p, std::size_t q, std::size_t r,
                       std::size_t s) {
  if (p < q) std::swap(p, q);
  if (r < s) std::swap(r, s);
  if (std::pair{p, q} < std::pair{r, s}) {
    std::swap(p, r);
    std::swap(q, s);
  }
  return {p, q, r, s};
}

void set_chemist_8fold(MolecularIntegrals& m, std::size_t p, std::size_t q,
                       std::size_t r, std::size_t s, double v) {
  const std::array<Quad, 8> perms = {{{p, q, r, s},
                                      {q, p, r, s},
                                      {p, q, s, r},
                                      {q, p, s, r},
                                      {r, s, p, q},
                                      {s, r, p, q},
                                      {r, s, q, p},
                                      {s, r, q, p}}};
  for (const auto& [a, b, c, d] : perms) m.two(a, b, c, d) = v;
}

// Repeated records must agree to within rounding noise (some writers emit
// symmetry-equivalent records computed separately); the first one wins.
constexpr double kDuplicateTolerance = 1e-10;

bool same_within_tolerance(double a, double b) {
  return std::abs(a - b) <= kDuplicateTolerance * std::max(1.0, std::abs(a));
}

// Returns true for the first occurrence of `key`.
bool check_same_value(std::map<Quad, double>& seen, const Quad& key, double v,
                      std::size_t line_no) {
  auto [it, inserted] = seen.emplace(key, v);
  if (!inserted && !same_within_tolerance(it->second, v)) {
    throw ValidationError(fmt::format(
        "FCIDUMP line {}: conflicting duplicate record for ({} {} {} {}): "
        "{} vs {}",
        line_no, key[0] + 1, key[1] + 1, key[2] + 1, key[3] + 1, it->second, v));
  }
  return inserted;
}

std::vector<double> json_array(const nlohmann::json& j, const char* key) {
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number()) {
      throw ValidationError(std::string("sidecar '") + key +
                            "' must hold numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

MolecularIntegrals MolecularIntegrals::zeros(std::size_t n,
                                             std::size_t n_electrons) {
  MolecularIntegrals m;
  m.n_orbitals = n;
  m.n_electrons = n_electrons;
  m.h_one.assign(n * n, 0.0);
  m.h_two.assign(n * n * n * n, 0.0);
  return m;
}

double MolecularIntegrals::chemist(std::size_t p, std::size_t q, std::size_t r,
                                   std::size_t s) const {
  // (pq|rs) = h_{p r s q} in the physicists' order documented in the header.
  return convention == TwoBodyConvention::chemists ? two(p, q, r, s)
                                                   : two(p, r, s, q);
}

double MolecularIntegrals::physicist(std::size_t p, std::size_t q,
                                     std::size_t r, std::size_t s) const {
  return convention == TwoBodyConvention::physicists ? two(p, q, r, s)
                                                     : two(p, s, q, r);
}

MolecularIntegrals MolecularIntegrals::with_convention(
    TwoBodyConvention target) const {
  if (target == convention) return *this;
  MolecularIntegrals out = *this;
  out.convention = target;
  const std::size_t n = n_orbitals;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          out.two(p, q, r, s) = target == TwoBodyConvention::physicists
                                    ? chemist(p, s, q, r)
                                    : physicist(p, r, s, q);
  return out;
}

void MolecularIntegrals::validate(double tol) const {
  const std::size_t n = n_orbitals;
  if (n == 0) throw ValidationError("integrals need at least one orbital");
  if (h_one.size() != n * n) throw ValidationError("h_one has the wrong size");
  if (h_two.size() != n * n * n * n) {
    throw ValidationError("h_two has the wrong size");
  }
  if (n_electrons > 2 * n) {
    throw ValidationError(fmt::format(
        "{} electrons do not fit in {} spatial orbitals", n_electrons, n));
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < p; ++q)
      if (std::abs(one(p, q) - one(q, p)) > tol) {
        throw ValidationError(
            fmt::format("h_one is not symmetric at ({}, {})", p, q));
      }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = chemist(p, q, r, s);
          const auto [a, b, c, d] = canonical_chemist(p, q, r, s);
          if (std::abs(v - chemist(a, b, c, d)) > tol) {
            throw ValidationError(fmt::format(
                "h_two breaks 8-fold symmetry at ({} {} {} {})", p, q, r, s));
          }
        }
  if (orbital_energies && orbital_energies->size() != n) {
    throw ValidationError("orbital_energies length differs from n_orbitals");
  }
  if (noons) {
    if (noons->size() != n) {
      throw ValidationError("noons length differs from n_orbitals");
    }
    const double sum = std::accumulate(noons->begin(), noons->end(), 0.0);
    if (std::abs(sum - static_cast<double>(n_electrons)) > 1e-6) {
      throw ValidationError(fmt::format(
          "noons sum to {} but there are {} electrons", sum, n_electrons));
    }
  }
}

Sidecar parse_sidecar_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("sidecar JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("sidecar JSON must be an object");
  Sidecar out;
  if (j.contains("noons")) out.noons = json_array(j, "noons");
  if (j.contains("orbital_energies")) {
    out.orbital_energies = json_array(j, "orbital_energies");
  }
  return out;
}

Sidecar load_sidecar(const std::string& path) {
  return parse_sidecar_json(read_file(path));
}

void apply_sidecar(MolecularIntegrals& m, const Sidecar& side) {
  if (side.noons) m.noons = side.noons;
  if (side.orbital_energies) m.orbital_energies = side.orbital_energies;
}

MolecularIntegrals parse_fcidump(std::string_view text) {
  const std::string src(text);
  const std::string up = upper(src);
  const auto fci = up.find("&FCI");
  if (fci == std::string::npos) {
    throw ValidationError("FCIDUMP header must start with &FCI");
  }
  // Namelist ends at "&END", "/END" or a lone "/".
  std::size_t end = std::string::npos;
  std::size_t body = 0;
  for (const char* term : {"&END", "/END"}) {
    auto pos = up.find(term, fci + 4);
    if (pos != std::string::npos && pos < end) {
      end = pos;
      body = pos + 4;
    }
  }
  if (end == std::string::npos) {
    for (std::size_t i = fci + 4; i < up.size(); ++i) {
      if (up[i] == '/') {
        end = i;
        body = i + 1;
        break;
      }
    }
  }
  if (end == std::string::npos) {
    throw ValidationError("FCIDUMP namelist is not terminated (&END or /)");
  }
  const std::string header = up.substr(fci, end - fci);
  const long norb = parse_int_field(header, "NORB", true, 0);
  const long nelec = parse_int_field(header, "NELEC", true, 0);
  const long ms2 = parse_int_field(header, "MS2", false, 0);
  if (norb <= 0) throw ValidationError("FCIDUMP NORB must be positive");
  if (nelec < 0) throw ValidationError("FCIDUMP NELEC must be non-negative");

  auto m = MolecularIntegrals::zeros(static_cast<std::size_t>(norb),
                                     static_cast<std::size_t>(nelec));
  m.ms2 = static_cast<int>(ms2);
  const std::size_t n = m.n_orbitals;

  std::map<Quad, double> seen_two;
  std::map<Quad, double> seen_one;
  std::map<std::size_t, double> seen_eps;
  std::optional<double> core;
  std::vector<double> eps(n, 0.0);
  bool any_eps = false;

  // Line numbers count from the start of the file.
  std::size_t line_no = static_cast<std::size_t>(
      std::count(src.begin(), src.begin() + static_cast<long>(body), '\n')) + 1;
  std::istringstream in(src.substr(body));
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!first) ++line_no;
    first = false;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 5) {
      throw ValidationError(fmt::format(
          "FCIDUMP line {}: expected 'value i j k l', got '{}'", line_no, line));
    }
    double v;
    std::array<long, 4> idx{};
    try {
      std::string vt = tok[0];
      std::replace(vt.begin(), vt.end(), 'D', 'E');
      std::replace(vt.begin(), vt.end(), 'd', 'e');
      std::size_t used = 0;
      v = std::stod(vt, &used);
      if (used != vt.size()) throw std::invalid_argument(vt);
      for (int k = 0; k < 4; ++k) {
        idx[k] = std::stol(tok[k + 1], &used);
        if (used != tok[k + 1].size()) throw std::invalid_argument(tok[k + 1]);
      }
    } catch (const std::exception&) {
      throw ValidationError(
          fmt::format("FCIDUMP line {}: malformed record '{}'", line_no, line));
    }
    for (long x : idx) {
      if (x < 0 || x > norb) {
        throw ValidationError(fmt::format(
            "FCIDUMP line {}: index {} out of range 0..{}", line_no, x, norb));
      }
    }
    const auto [i, j, k, l] = idx;
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (core && !same_within_tolerance(*core, v)) {
        throw ValidationError(fmt::format(
            "FCIDUMP line {}: conflicting core energy records", line_no));
      }
      if (!core) core = v;
    } else if (j == 0 && k == 0 && l == 0) {
      const auto p = static_cast<std::size_t>(i - 1);
      auto [it, inserted] = seen_eps.emplace(p, v);
      if (!inserted && !same_within_tolerance(it->second, v)) {
        throw ValidationError(fmt::format(
            "FCIDUMP line {}: conflicting orbital energy for orbital {}",
            line_no, i));
      }
      if (inserted) eps[p] = v;
      any_eps = true;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0) {
        throw ValidationError(fmt::format(
            "FCIDUMP line {}: one-body record with a zero index", line_no));
      }
      auto p = static_cast<std::size_t>(i - 1);
      auto q = static_cast<std::size_t>(j - 1);
      if (check_same_value(seen_one, {std::max(p, q), std::min(p, q), 0, 0}, v,
                           line_no)) {
        m.one(p, q) = v;
        m.one(q, p) = v;
      }
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0) {
        throw ValidationError(fmt::format(
            "FCIDUMP line {}: two-body record with a zero index", line_no));
      }
      const auto key = canonical_chemist(
          static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
          static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1));
      if (check_same_value(seen_two, key, v, line_no)) {
        set_chemist_8fold(m, key[0], key[1], key[2], key[3], v);
      }
    }
  }
  m.e_core = core.value_or(0.0);
  if (any_eps) m.orbital_energies = std::move(eps);
  return m;
}

MolecularIntegrals load_fcidump(const std::string& path) {
  return parse_fcidump(read_file(path));
}

std::string write_fcidump(const MolecularIntegrals& src) {
  const MolecularIntegrals m = src.with_convention(TwoBodyConvention::chemists);
  const std::size_t n = m.n_orbitals;
  std::string out = fmt::format(" &FCI NORB={},NELEC={},MS2={},\n  ORBSYM=", n,
                                m.n_electrons, m.ms2);
  for (std::size_t i = 0; i < n; ++i) out += "1,";
  out += "\n  ISYM=1,\n &END\n";
  auto rec = [&out](double v, std::size_t i, std::size_t j, std::size_t k,
                    std::size_t l) {
    out += fmt::format("{:>24} {:>4} {:>4} {:>4} {:>4}\n", fmt::format("{}", v),
                       i, j, k, l);
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r <= p; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (std::pair{p, q} < std::pair{r, s}) continue;
          const double v = m.two(p, q, r, s);
          if (v != 0.0) rec(v, p + 1, q + 1, r + 1, s + 1);
        }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q) {
      const double v = m.one(p, q);
      if (v != 0.0) rec(v, p + 1, q + 1, 0, 0);
    }
  if (m.orbital_energies) {
    for (std::size_t p = 0; p < n; ++p) rec((*m.orbital_energies)[p], p + 1, 0, 0, 0);
  }
  rec(m.e_core, 0, 0, 0, 0);
  return out;
}

std::vector<std::size_t> ActiveSpace::virtual_orbitals(
    std::size_t n_orbitals) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_orbitals; ++i) {
    const bool in_a = std::find(active.begin(), active.end(), i) != active.end();
    const bool in_o = std::find(occupied_frozen.begin(), occupied_frozen.end(),
                                i) != occupied_frozen.end();
    if (!in_a && !in_o) out.push_back(i);
  }
  return out;
}

ActiveSpace select_active_space(const MolecularIntegrals& m, double eps1,
                                double eps2) {
  if (!m.noons) {
    throw ValidationError(
        "active-space selection needs natural-orbital occupations (noons)");
  }
  if (!(eps2 > 0.0 && eps2 < 2.0 - eps1)) {
    throw ValidationError(fmt::format(
        "thresholds must satisfy 0 < eps2 < 2 - eps1 (eps1={}, eps2={})", eps1,
        eps2));
  }
  const auto& n_i = *m.noons;
  if (n_i.size() != m.n_orbitals) {
    throw ValidationError("noons length differs from n_orbitals");
  }
  const double high = 2.0 - eps1;
  const auto n_elec = static_cast<double>(m.n_electrons);
  ActiveSpace a;
  for (std::size_t i = 0; i < m.n_orbitals; ++i) {
    const double occ = n_i[i];
    const bool at_or_above_fermi = 2.0 * static_cast<double>(i + 1) >= n_elec;
    if ((occ >= eps2 && occ <= high) || (occ >= high && at_or_above_fermi)) {
      a.active.push_back(i);
    } else if (occ >= high) {
      a.occupied_frozen.push_back(i);
    }
  }
  if (a.active.empty()) {
    throw ValidationError(fmt::format(
        "thresholds eps1={} eps2={} leave the active space empty", eps1, eps2));
  }
  if (2 * a.occupied_frozen.size() > m.n_electrons) {
    throw ValidationError("more frozen electrons than electrons");
  }
  a.n_active_electrons = m.n_electrons - 2 * a.occupied_frozen.size();
  return a;
}

ActiveSpace make_active_space(const MolecularIntegrals& m,
                              std::vector<std::size_t> active,
                              std::vector<std::size_t> occupied_frozen) {
  std::sort(active.begin(), active.end());
  std::sort(occupied_frozen.begin(), occupied_frozen.end());
  if (active.empty()) throw ValidationError("active space is empty");
  std::set<std::size_t> seen;
  for (auto v : active) {
    if (v >= m.n_orbitals || !seen.insert(v).second) {
      throw ValidationError(fmt::format("bad active orbital index {}", v));
    }
  }
  for (auto v : occupied_frozen) {
    if (v >= m.n_orbitals || !seen.insert(v).second) {
      throw ValidationError(fmt::format(
          "frozen orbital {} is out of range or also active", v));
    }
  }
  if (2 * occupied_frozen.size() > m.n_electrons) {
    throw ValidationError("more frozen electrons than electrons");
  }
  ActiveSpace a{std::move(active), std::move(occupied_frozen), 0};
  a.n_active_electrons = m.n_electrons - 2 * a.occupied_frozen.size();
  if (a.n_active_electrons > 2 * a.active.size()) {
    throw ValidationError(fmt::format(
        "{} active electrons do not fit in {} active orbitals",
        a.n_active_electrons, a.active.size()));
  }
  return a;
}

MolecularIntegrals freeze_orbitals(const MolecularIntegrals& m,
                                   const ActiveSpace& a) {
  const std::size_t n = m.n_orbitals;
  std::set<std::size_t> seen;
  for (auto v : a.active) {
    if (v >= n || !seen.insert(v).second) {
      throw ValidationError("active space is inconsistent with the integrals");
    }
  }
  for (auto v : a.occupied_frozen) {
    if (v >= n || !seen.insert(v).second) {
      throw ValidationError("frozen set is inconsistent with the integrals");
    }
  }
  if (a.n_active_electrons + 2 * a.occupied_frozen.size() != m.n_electrons) {
    throw ValidationError("active electron count is inconsistent");
  }

  const std::size_t na = a.active.size();
  auto out = MolecularIntegrals::zeros(na, a.n_active_electrons);
  out.ms2 = m.ms2;
  out.convention = TwoBodyConvention::chemists;

  // E_core += Σ_i 2 h_ii + Σ_ij (2 h_ijji − h_ijij), physicists' h_pqrs.
  double e_core = m.e_core;
  for (auto i : a.occupied_frozen) {
    e_core += 2.0 * m.one(i, i);
    for (auto j : a.occupied_frozen) {
      e_core += 2.0 * m.physicist(i, j, j, i) - m.physicist(i, j, i, j);
    }
  }
  out.e_core = e_core;

  // h_pq += Σ_i (2 h_ipqi − h_ipiq).
  for (std::size_t u = 0; u < na; ++u) {
    for (std::size_t v = 0; v < na; ++v) {
      const auto p = a.active[u];
      const auto q = a.active[v];
      double h = m.one(p, q);
      for (auto i : a.occupied_frozen) {
        h += 2.0 * m.physicist(i, p, q, i) - m.physicist(i, p, i, q);
      }
      out.one(u, v) = h;
    }
  }
  for (std::size_t u = 0; u < na; ++u)
    for (std::size_t v = 0; v < na; ++v)
      for (std::size_t w = 0; w < na; ++w)
        for (std::size_t x = 0; x < na; ++x)
          out.two(u, v, w, x) =
              m.chemist(a.active[u], a.active[v], a.active[w], a.active[x]);

  if (m.orbital_energies) {
    std::vector<double> eps;
    for (auto p : a.active) eps.push_back((*m.orbital_energies)[p]);
    out.orbital_energies = std::move(eps);
  }
  if (m.noons) {
    std::vector<double> occ;
    for (auto p : a.active) occ.push_back((*m.noons)[p]);
    // Active occupations no longer sum to the active electron count once
    // virtuals are dropped; keep them only when they still do.
    const double sum = std::accumulate(occ.begin(), occ.end(), 0.0);
    if (std::abs(sum - static_cast<double>(out.n_electrons)) <= 1e-6) {
      out.noons = std::move(occ);
    }
  }
  return out;
}

}  // namespace vqesim
