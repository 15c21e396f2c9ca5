#pragma once

// JSON form of a SeifertSystem:
//   {"mu": 2, "rank": 1, "matrices": {"++": [[-1]], "+-": [[0]], "-+": [[0]], "--": [[-1]]}}
// Matrices are row-major integer arrays; an empty (rank 0) matrix is [].

#include "json.hpp"

#include <fstream>
#include <map>
#include <string>

#include "bclink/error.hpp"
#include "bclink/signature.hpp"

namespace bclink::sig {

inline nlohmann::json to_json(const SeifertSystem& s) {
  nlohmann::json mats = nlohmann::json::object();
  for (const auto& [key, m] : s.matrices()) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    mats[key] = std::move(rows);
  }
  return {{"mu", s.mu()}, {"rank", s.rank()}, {"matrices", std::move(mats)}};
}

/// Parses and validates; every problem surfaces as DataFormatError.
inline SeifertSystem seifert_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw DataFormatError("top level must be an object");
    for (const char* field : {"mu", "rank", "matrices"}) {
      if (!j.contains(field)) throw DataFormatError(std::string("missing field \"") + field + "\"");
    }
    if (!j["mu"].is_number_integer() || !j["rank"].is_number_integer()) {
      throw DataFormatError("mu and rank must be integers");
    }
    const int mu = j["mu"].get<int>();
    const int rank = j["rank"].get<int>();
    if (!j["matrices"].is_object()) throw DataFormatError("\"matrices\" must be an object");

    std::map<std::string, IntMatrix> mats;
    for (const auto& [key, rows] : j["matrices"].items()) {
      if (!rows.is_array() || static_cast<int>(rows.size()) != rank) {
        throw DataFormatError("matrix \"" + key + "\" must have " + std::to_string(rank) + " rows");
      }
      IntMatrix m(rank, rank);
      for (int r = 0; r < rank; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != rank) {
          throw DataFormatError("matrix \"" + key + "\" row " + std::to_string(r) + " has the wrong length");
        }
        for (int c = 0; c < rank; ++c) {
          const auto& v = row[static_cast<std::size_t>(c)];
          if (!v.is_number_integer()) throw DataFormatError("matrix \"" + key + "\" has a non-integer entry");
          m(r, c) = v.get<int>();
        }
      }
      mats.emplace(key, std::move(m));
    }
    return SeifertSystem(mu, rank, std::move(mats));
  } catch (const BadSystem& e) {
    throw DataFormatError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw DataFormatError(e.what());
  }
}

inline SeifertSystem load_seifert(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataFormatError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw DataFormatError(std::string("malformed JSON: ") + e.what());
  }
  return seifert_from_json(j);
}

}  // namespace bclink::sig
