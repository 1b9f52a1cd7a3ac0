#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "radda/problem.hpp"

namespace radda::io {

// Problem document:
//   {"n": .., "m": .., "p": ..,
//    "A": {"kind": "banded", "lower": kl, "upper": ku,
//          "bands": [[diagonal −kl], ..., [diagonal +ku]]}   (diagonal d has n−|d| entries)
//       | {"kind": "dense", "entries": [column-major n·n]},
//    "B": [column-major n·m], "C": [row-major p·n]}
// Doubles are written in shortest round-trip form.

nlohmann::json problem_to_json(const CareProblem& problem);
/// Throws ErrorCode::parse on malformed documents.
CareProblem problem_from_json(const nlohmann::json& doc);

CareProblem read_problem(const std::filesystem::path& path);
void write_problem(const CareProblem& problem, const std::filesystem::path& path);

/// {"kind": "lowrank_symmetric", "n", "rank", "D": [column-major], "Sigma": [column-major],
///  "note": "X = D * Sigma * D^T"}
nlohmann::json factors_to_json(const Matrix& d, const Matrix& sigma);
/// Returns {D, Sigma}.
std::pair<Matrix, Matrix> factors_from_json(const nlohmann::json& doc);

}  // namespace radda::io
