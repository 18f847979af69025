// Copyright 2026 The posemi Authors
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

#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "posemi/posemiring.hpp"

namespace posemi {

namespace {

using Json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void shape_error(const std::string& what) {
  throw ParseError(what, 0, 0);
}

const Json& require(const Json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) shape_error(std::string("missing key '") + key + "'");
  return *it;
}

std::string require_string(const Json& doc, const char* key) {
  const Json& v = require(doc, key);
  if (!v.is_string()) shape_error(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<ElementId> read_table(
    const Json& doc, const char* key, std::size_t n,
    const std::unordered_map<std::string, ElementId>& index) {
  const Json& rows = require(doc, key);
  if (!rows.is_array() || rows.size() != n) {
    shape_error(std::string("'") + key + "' must have " + std::to_string(n) +
                " rows");
  }
  std::vector<ElementId> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      shape_error(std::string("'") + key + "' row " + std::to_string(i) +
                  " must have " + std::to_string(n) + " entries");
    }
    for (const Json& cell : row) {
      if (!cell.is_string()) {
        shape_error(std::string("'") + key + "' entries must be strings");
      }
      const auto it = index.find(cell.get<std::string>());
      if (it == index.end()) {
        shape_error(std::string("'") + key + "' refers to unknown element '" +
                    cell.get<std::string>() + "'");
      }
      table.push_back(it->second);
    }
  }
  return table;
}

std::string quoted(const std::string& s) { return Json(s).dump(); }

void write_row(std::ostringstream& out, const FinitePoSemiring& s,
               std::span<const ElementId> row) {
  out << '[';
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) out << ", ";
    out << quoted(s.name(row[j]));
  }
  out << ']';
}

void write_table(std::ostringstream& out, const FinitePoSemiring& s,
                 std::span<const ElementId> table) {
  const std::size_t n = s.size();
  out << "[\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "    ";
    write_row(out, s, table.subspan(i * n, n));
    out << (i + 1 < n ? ",\n" : "\n");
  }
  out << "  ]";
}

}  // namespace

FinitePoSemiring parse_posemiring(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_column(text, byte);
    throw ParseError("syntax error at line " + std::to_string(line) +
                         ", column " + std::to_string(column),
                     line, column);
  }
  if (!doc.is_object()) shape_error("top level must be an object");

  const Json& elements = require(doc, "elements");
  if (!elements.is_array()) shape_error("'elements' must be an array");
  std::vector<std::string> names;
  std::unordered_map<std::string, ElementId> index;
  for (const Json& e : elements) {
    if (!e.is_string()) shape_error("element names must be strings");
    auto name = e.get<std::string>();
    if (!index.emplace(name, static_cast<ElementId>(names.size())).second) {
      shape_error("duplicate element name '" + name + "'");
    }
    names.push_back(std::move(name));
  }
  const std::size_t n = names.size();
  if (n < 2) shape_error("at least two elements are required");

  auto lookup = [&](const char* key) {
    const std::string name = require_string(doc, key);
    const auto it = index.find(name);
    if (it == index.end()) {
      shape_error(std::string("'") + key + "' names unknown element '" + name +
                  "'");
    }
    return it->second;
  };
  const ElementId zero = lookup("zero");
  const ElementId one = lookup("one");
  auto add = read_table(doc, "add", n, index);
  auto mul = read_table(doc, "mul", n, index);
  try {
    return FinitePoSemiring(std::move(names), zero, one, std::move(add),
                            std::move(mul));
  } catch (const StructureError& e) {
    shape_error(e.what());
  }
}

std::string serialize_posemiring(const FinitePoSemiring& s) {
  std::ostringstream out;
  out << "{\n  \"elements\": ";
  out << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ", ";
    out << quoted(s.name(static_cast<ElementId>(i)));
  }
  out << "],\n";
  out << "  \"zero\": " << quoted(s.name(s.zero())) << ",\n";
  out << "  \"one\": " << quoted(s.name(s.one())) << ",\n";
  out << "  \"add\": ";
  write_table(out, s, s.add_table());
  out << ",\n  \"mul\": ";
  write_table(out, s, s.mul_table());
  out << "\n}\n";
  return out.str();
}

}  // namespace posemi
