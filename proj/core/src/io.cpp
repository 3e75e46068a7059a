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

#include "approachlab/io.hpp"

#include <fstream>
#include <sstream>

#include "approachlab/error.hpp"
#include "json.hpp"

namespace approachlab {
namespace {

using Json = nlohmann::ordered_json;

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

Json polytope_json(const Polytope& P) {
  Json vs = Json::array();
  for (const auto& v : P.vertices()) vs.push_back(vector_json(v));
  return Json{{"vertices", std::move(vs)}};
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError(where + ": expected a rational string");
}

RationalVector vector_from(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

RationalMatrix matrix_from(const Json& j, const std::string& where, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  if (j.size() != rows) {
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  }
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    RationalVector row = vector_from(j[r], at);
    if (row.size() != cols) {
      throw ParseError(at + ": expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Polytope polytope_from(const Json& j, const std::string& where) {
  const Json& vs = field(j, "vertices", where);
  if (!vs.is_array() || vs.empty()) throw ParseError(where + ".vertices: expected a non-empty array");
  std::vector<RationalVector> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back(vector_from(vs[i], where + ".vertices[" + std::to_string(i) + "]"));
  }
  try {
    return Polytope(std::move(vertices));
  } catch (const DimensionError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::string label_from(const Json& g, const std::string& where, std::size_t index) {
  auto it = g.find("label");
  if (it == g.end()) return "g" + std::to_string(index + 1);
  if (!it->is_string()) throw ParseError(where + ".label: expected a string");
  return it->get<std::string>();
}

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string instance_to_json(const RegretInstance& inst) {
  Json phi = Json::array();
  for (const auto& g : inst.Phi) {
    phi.push_back(Json{{"label", g.label}, {"linear", matrix_json(g.linear)}, {"offset", vector_json(g.offset)}});
  }
  Json out{{"kind", "regret"},
           {"name", inst.name},
           {"dim", inst.dim()},
           {"P", polytope_json(inst.P)},
           {"L", polytope_json(inst.L)},
           {"Phi", std::move(phi)}};
  return dump(out);
}

std::string instance_to_json(const ApproachabilityInstance& inst) {
  Json us = Json::array();
  for (const auto& u : inst.U) {
    us.push_back(Json{{"label", u.label},
                      {"M", matrix_json(u.M)},
                      {"p_offset", vector_json(u.p_offset)},
                      {"l_offset", vector_json(u.l_offset)},
                      {"c", u.c.str()}});
  }
  Json out{{"kind", "approachability"},
           {"name", inst.name},
           {"dim", inst.P.ambient_dim()},
           {"P", polytope_json(inst.P)},
           {"L", polytope_json(inst.L)},
           {"U", std::move(us)}};
  return dump(out);
}

std::string instance_to_json(const AnyInstance& inst) {
  return std::visit([](const auto& i) { return instance_to_json(i); }, inst);
}

AnyInstance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON at " + position(text, e.byte) + ": " + e.what());
  }
  const Json& kind_j = field(doc, "kind", "instance");
  if (!kind_j.is_string()) throw ParseError("instance.kind: expected a string");
  const std::string kind = kind_j.get<std::string>();
  const Json& name_j = field(doc, "name", "instance");
  if (!name_j.is_string()) throw ParseError("instance.name: expected a string");
  const Json& dim_j = field(doc, "dim", "instance");
  if (!dim_j.is_number_unsigned()) throw ParseError("instance.dim: expected a non-negative integer");
  const auto dim = dim_j.get<std::size_t>();
  Polytope P = polytope_from(field(doc, "P", "instance"), "P");
  Polytope L = polytope_from(field(doc, "L", "instance"), "L");
  if (P.ambient_dim() != dim) {
    throw ParseError("instance.dim is " + std::to_string(dim) + " but P has dimension " +
                     std::to_string(P.ambient_dim()));
  }
  const std::size_t dl = L.ambient_dim();

  if (kind == "regret") {
    if (dl != dim) throw ParseError("regret instance: L has dimension " + std::to_string(dl));
    const Json& gens = field(doc, "Phi", "instance");
    if (!gens.is_array() || gens.empty()) throw ParseError("instance.Phi: expected a non-empty array");
    std::vector<AffineMapGen> phi;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string at = "Phi[" + std::to_string(i) + "]";
      AffineMapGen g{matrix_from(field(gens[i], "linear", at), at + ".linear", dim, dim),
                     vector_from(field(gens[i], "offset", at), at + ".offset"), label_from(gens[i], at, i)};
      if (g.offset.size() != dim) throw ParseError(at + ".offset: expected " + std::to_string(dim) + " entries");
      phi.push_back(std::move(g));
    }
    return RegretInstance{name_j.get<std::string>(), std::move(P), std::move(L), std::move(phi)};
  }
  if (kind == "approachability") {
    const Json& gens = field(doc, "U", "instance");
    if (!gens.is_array() || gens.empty()) throw ParseError("instance.U: expected a non-empty array");
    std::vector<BilinearGen> us;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string at = "U[" + std::to_string(i) + "]";
      BilinearGen u{matrix_from(field(gens[i], "M", at), at + ".M", dim, dl),
                    vector_from(field(gens[i], "p_offset", at), at + ".p_offset"),
                    vector_from(field(gens[i], "l_offset", at), at + ".l_offset"),
                    rational_from(field(gens[i], "c", at), at + ".c"), label_from(gens[i], at, i)};
      if (u.p_offset.size() != dl) throw ParseError(at + ".p_offset: expected " + std::to_string(dl) + " entries");
      if (u.l_offset.size() != dim) throw ParseError(at + ".l_offset: expected " + std::to_string(dim) + " entries");
      us.push_back(std::move(u));
    }
    return ApproachabilityInstance{name_j.get<std::string>(), std::move(P), std::move(L), std::move(us)};
  }
  throw ParseError("instance.kind: expected \"regret\" or \"approachability\", got \"" + kind + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace approachlab
