// Copyright 2026 The profam Authors
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

// JSON encodings: group tables, integer matrices, check lists.
//
// Group table:  {"order": n, "table": [[...], ...], "names": [...]}  (names optional)
// Matrix:       {"rows": r, "cols": c, "entries": [[...], ...]}; entries are
//               integers or decimal strings, written as strings.

#ifndef PROFAM_IO_HPP_
#define PROFAM_IO_HPP_

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "profam/family.hpp"
#include "profam/fingroup.hpp"
#include "profam/intmat.hpp"
#include "profam/report.hpp"

namespace profam {

using Json = nlohmann::json;

// Raised for unreadable or malformed input files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Json GroupToJson(const FiniteGroup& g) {
  Json table = Json::array();
  for (ElementId a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (ElementId b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  Json names = Json::array();
  for (ElementId a = 0; a < g.order(); ++a) names.push_back(g.name(a));
  return {{"order", g.order()}, {"table", table}, {"names", names}};
}

inline FiniteGroup GroupFromJson(const Json& j) {
  try {
    const int order = j.at("order").get<int>();
    const auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(table.size()) != order) throw IoError("group table: row count != order");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroup(table, names);
  } catch (const Json::exception& e) {
    throw IoError(std::string("group table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("group table: ") + e.what());
  }
}

inline Json MatrixToJson(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline IntMatrix MatrixFromJson(const Json& j) {
  try {
    const std::size_t rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (entries.size() != rows) throw IoError("matrix: row count mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols) throw IoError("matrix: column count mismatch");
      for (std::size_t c = 0; c < cols; ++c) {
        const Json& e = entries[r][c];
        m(r, c) = e.is_string() ? BigInt(e.get<std::string>()) : BigInt(e.get<long long>());
      }
    }
    return m;
  } catch (const Json::exception& e) {
    throw IoError(std::string("matrix: ") + e.what());
  }
}

inline Json FamilyMemberToJson(const FamilyMember& m) {
  return {{"pair", {m.label.a, m.label.b}}, {"mx", MatrixToJson(m.mx)}, {"my", MatrixToJson(m.my)}};
}

inline FamilyMember FamilyMemberFromJson(const Json& j) {
  try {
    const auto pair = j.at("pair").get<std::vector<int>>();
    if (pair.size() != 2) throw IoError("family member: pair must have two entries");
    return {ZPair{pair[0], pair[1]}, MatrixFromJson(j.at("mx")), MatrixFromJson(j.at("my"))};
  } catch (const Json::exception& e) {
    throw IoError(std::string("family member: ") + e.what());
  }
}

// Accepts {"members": [...]} at top level or under "result".
inline std::vector<FamilyMember> FamilyFromJson(const Json& j) {
  const Json* members = nullptr;
  if (j.contains("members")) {
    members = &j.at("members");
  } else if (j.contains("result") && j.at("result").contains("members")) {
    members = &j.at("result").at("members");
  }
  if (!members || !members->is_array()) throw IoError("family: no members array");
  std::vector<FamilyMember> out;
  for (const Json& m : *members) out.push_back(FamilyMemberFromJson(m));
  return out;
}

inline Json CheckListToJson(const CheckList& checks) {
  Json out = Json::array();
  for (const NamedCheck& c : checks) {
    out.push_back({{"name", c.name}, {"status", StatusName(c.status)}, {"witness", c.witness}});
  }
  return out;
}

inline Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

inline void WriteJsonFile(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

// Every *.json file in `dir` is one group table; the file stem is its id.
inline std::vector<LibraryGroup> LoadLibraryDir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<LibraryGroup> out;
  for (const auto& f : files) out.push_back({f.stem().string(), GroupFromJson(ReadJsonFile(f))});
  std::stable_sort(out.begin(), out.end(), [](const LibraryGroup& a, const LibraryGroup& b) {
    return a.group.order() < b.group.order();
  });
  return out;
}

// Built-in library unless PF_LIBRARY_DIR names a directory of tables.
inline std::vector<LibraryGroup> LibraryFromEnvironment() {
  if (const char* dir = std::getenv("PF_LIBRARY_DIR"); dir && *dir) return LoadLibraryDir(dir);
  return DefaultLibrary();
}

}  // namespace profam

#endif  // PROFAM_IO_HPP_
