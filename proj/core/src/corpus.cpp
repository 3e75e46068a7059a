// Copyright 2026 The approachlab Authors
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

#include "approachlab/corpus.hpp"

#include <charconv>

#include "approachlab/error.hpp"

namespace approachlab::corpus {
namespace {

RationalMatrix matrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<RationalVector> rs;
  for (const auto& row : rows) {
    RationalVector v;
    for (int x : row) v.push_back(x);
    rs.push_back(std::move(v));
  }
  return RationalMatrix::from_rows(rs);
}

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.push_back(x);
  return v;
}

Polytope box(std::size_t d, const Rational& lo, const Rational& hi) {
  std::vector<RationalVector> vs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    RationalVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = ((mask >> i) & 1U) ? hi : lo;
    vs.push_back(std::move(v));
  }
  return Polytope(std::move(vs));
}

// Constraint "move the mass on [first, last) onto target", scaled.
BilinearGen swap_block(std::size_t d, std::size_t first, std::size_t last, std::size_t target,
                       const Rational& scale, std::string label) {
  RationalMatrix M(d, d);
  for (std::size_t j = first; j < last; ++j) {
    M(j, j) += scale;
    M(j, target) -= scale;
  }
  return {std::move(M), RationalVector(d), RationalVector(d), Rational(), std::move(label)};
}

std::size_t size_param(const Params& p, const std::string& key) {
  const std::string& text = p.at(key);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("parameter --" + key + ": expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

void require_at_least(std::size_t value, std::size_t lo, const std::string& key) {
  if (value < lo) throw PreconditionError("parameter --" + key + " must be at least " + std::to_string(lo));
}

}  // namespace

RegretInstance figure2a() {
  const RationalMatrix lin = matrix({{0, 0, 0}, {0, -1, 0}, {0, 0, -2}});
  return {"figure2a",
          Polytope::simplex(3),
          box(3, -1, 1),
          {{lin, vec({1, 0, 0}), "phi1"}, {lin, vec({0, 2, 0}), "phi2"}, {lin, vec({0, 0, 3}), "phi3"}}};
}

RegretInstance figure2b() {
  return {"figure2b",
          Polytope::simplex(3),
          box(3, -1, 1),
          {{RationalMatrix(3, 3), vec({1, 0, 0}), "phi1"},
           {matrix({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), vec({0, 2, 0}), "phi2"},
           {matrix({{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}}), vec({0, 0, 3}), "phi3"}}};
}

RegretInstance figure2c() {
  return {"figure2c",
          Polytope::simplex(3),
          box(3, -1, 1),
          {{matrix({{1, -1, 0}, {1, 1, 0}, {0, 0, 1}}), RationalVector(3), "phi1"},
           {matrix({{1, 0, 1}, {0, 1, 0}, {-1, 0, 1}}), RationalVector(3), "phi2"},
           {matrix({{1, 0, 0}, {0, 1, -1}, {0, 1, 1}}), RationalVector(3), "phi3"}}};
}

ApproachabilityInstance gap_instance(std::size_t dprime) {
  require_at_least(dprime, 2, "dprime");
  const std::size_t d = dprime + 1;
  std::vector<BilinearGen> us;
  for (std::size_t i = 0; i < dprime; ++i) us.push_back(swap_block(d, 0, dprime, i, 1, "u" + std::to_string(i + 1)));
  return {"gap-instance-" + std::to_string(dprime), Polytope::simplex(d), Polytope::unit_cube(d), std::move(us)};
}

ApproachabilityInstance appendix_b(const Rational& eps, std::size_t d1, std::size_t d2) {
  require_at_least(d1, 2, "d1");
  require_at_least(d2, 2, "d2");
  if (eps.sign() <= 0) throw PreconditionError("parameter --eps must be positive");
  const std::size_t d = d1 + d2;
  std::vector<BilinearGen> us;
  for (std::size_t i = 0; i < d1; ++i) us.push_back(swap_block(d, 0, d1, i, eps, "u" + std::to_string(i + 1)));
  for (std::size_t i = 0; i < d2; ++i) {
    us.push_back(swap_block(d, d1, d, d1 + i, 1, "u" + std::to_string(d1 + i + 1)));
  }
  return {"appendix-b", Polytope::simplex(d), Polytope::unit_cube(d), std::move(us)};
}

RationalMatrix ab_matrix_a() { return matrix({{-6, 8, -9}, {2, -1, -9}, {4, -7, 18}}); }
RationalMatrix ab_matrix_b() { return matrix({{10, -3, -7}, {6, -6, 10}, {-16, 9, -3}}); }

RegretInstance ab_counterexample() {
  const RationalMatrix I = RationalMatrix::identity(3);
  const RationalMatrix A = ab_matrix_a();
  const RationalMatrix B = ab_matrix_b();
  const RationalVector zero(3);
  return {"ab-counterexample",
          Polytope::simplex(3),
          Polytope::unit_cube(3),
          {{I + A, zero, "Id+A"},
           {I - A, zero, "Id-A"},
           {I + B, zero, "Id+B"},
           {I - B, zero, "Id-B"},
           {I + A + B, zero, "Id+A+B"},
           {I - A - B, zero, "Id-A-B"},
           {I + A - B, zero, "Id+A-B"},
           {I - A + B, zero, "Id-A+B"}}};
}

RegretInstance experts(std::size_t n) {
  require_at_least(n, 1, "n");
  std::vector<AffineMapGen> phi;
  for (std::size_t i = 0; i < n; ++i) {
    phi.push_back(AffineMapGen::constant(RationalVector::unit(n, i), "e" + std::to_string(i + 1)));
  }
  return {"experts-" + std::to_string(n), Polytope::simplex(n), Polytope::unit_cube(n), std::move(phi)};
}

RegretInstance swap_regret(std::size_t n) {
  require_at_least(n, 1, "n");
  if (n > 5) throw PreconditionError("parameter --n must be at most 5 for the swap instance");
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= n;
  std::vector<AffineMapGen> phi;
  for (std::size_t code = 0; code < count; ++code) {
    RationalMatrix lin(n, n);
    std::string label = "swap[";
    std::size_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t image = rest % n;
      rest /= n;
      lin(image, i) = 1;
      label += (i > 0 ? "," : "") + std::to_string(image + 1);
    }
    phi.push_back({std::move(lin), RationalVector(n), label + "]"});
  }
  return {"swap-" + std::to_string(n), Polytope::simplex(n), Polytope::unit_cube(n), std::move(phi)};
}

RegretInstance external_alpha() {
  return {"external-alpha",
          Polytope::simplex(2),
          Polytope::unit_cube(2),
          {{matrix({{1, 0}, {0, 2}}), RationalVector(2), "alpha=0"},
           {matrix({{1, 0}, {-1, 1}}), RationalVector(2), "alpha=1"}}};
}

RegretInstance translation_instance() {
  return {"translation-instance",
          Polytope::simplex(3),
          Polytope::unit_cube(3),
          {{RationalMatrix::identity(3), vec({1, 0, 0}), "shift"}}};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = {
      {"figure2a", "improper instance linearly equivalent to external regret", {}},
      {"figure2b", "improper instance linearly equivalent to proper regret", {}},
      {"figure2c", "skew-symmetric improper instance with no proper equivalent", {}},
      {"gap-instance", "degenerate approachability instance with a free action", {{"dprime", "2"}}},
      {"appendix-b", "eps-weighted two-block approachability instance", {{"eps", "1/100"}, {"d1", "2"}, {"d2", "2"}}},
      {"ab-counterexample", "shared left kernel but opposed displacements", {}},
      {"experts", "learning with experts", {{"n", "3"}}},
      {"swap", "swap regret", {{"n", "3"}}},
      {"external-alpha", "improper 2-action family equivalent to external regret", {}},
      {"translation-instance", "fixed-point-free translation (invalid)", {}},
  };
  return kEntries;
}

AnyInstance build(const std::string& name, const Params& params) {
  const Entry* entry = nullptr;
  for (const auto& e : entries()) {
    if (e.name == name) entry = &e;
  }
  if (entry == nullptr) {
    std::string known;
    for (const auto& e : entries()) known += (known.empty() ? "" : ", ") + e.name;
    throw PreconditionError("unknown corpus instance '" + name + "'; available: " + known);
  }
  Params p = entry->defaults;
  for (const auto& [key, value] : params) {
    if (!p.count(key)) throw PreconditionError("instance '" + name + "' takes no parameter --" + key);
    p[key] = value;
  }
  if (name == "figure2a") return figure2a();
  if (name == "figure2b") return figure2b();
  if (name == "figure2c") return figure2c();
  if (name == "gap-instance") return gap_instance(size_param(p, "dprime"));
  if (name == "appendix-b") {
    return appendix_b(Rational::parse(p.at("eps")), size_param(p, "d1"), size_param(p, "d2"));
  }
  if (name == "ab-counterexample") return ab_counterexample();
  if (name == "experts") return experts(size_param(p, "n"));
  if (name == "swap") return swap_regret(size_param(p, "n"));
  if (name == "external-alpha") return external_alpha();
  return translation_instance();
}

}  // namespace approachlab::corpus
