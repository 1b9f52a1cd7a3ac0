#include <doctest.h>

#include <filesystem>
#include <random>

#include "radda/error.hpp"
#include "radda/io.hpp"
#include "test_support.hpp"

using namespace radda;

namespace {

void check_same(const CareProblem& a, const CareProblem& b) {
  CHECK(a.A().is_banded() == b.A().is_banded());
  if (a.A().is_banded() && b.A().is_banded()) CHECK(a.A().banded() == b.A().banded());
  CHECK(a.A().to_dense() == b.A().to_dense());
  CHECK(a.B() == b.B());
  CHECK(a.C() == b.C());
}

ErrorCode parse_code(const char* text) {
  try {
    io::problem_from_json(nlohmann::json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected parse failure");
  return ErrorCode::numeric;
}

}  // namespace

TEST_CASE("problem documents round-trip bit for bit") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 25; ++t) {
    const CareProblem p = testing::random_stable_problem(rng, 1 + t);
    check_same(p, io::problem_from_json(nlohmann::json::parse(io::problem_to_json(p).dump())));
  }
  const CareProblem dense(SystemMatrix(testing::random_matrix(rng, 4, 4)),
                          testing::random_matrix(rng, 4, 2), testing::random_matrix(rng, 3, 4));
  check_same(dense, io::problem_from_json(nlohmann::json::parse(io::problem_to_json(dense).dump())));
}

TEST_CASE("problem files round-trip") {
  const auto path = std::filesystem::temp_directory_path() / "radda_io_roundtrip.json";
  const CareProblem p = make_example2(9);
  io::write_problem(p, path);
  check_same(p, io::read_problem(path));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(io::read_problem(path), Error);
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK(parse_code(R"({"n": 2})") == ErrorCode::parse);
  CHECK(parse_code(R"([1, 2])") == ErrorCode::parse);
  CHECK(parse_code(R"({"n": 1, "m": 1, "p": 1, "A": {"kind": "tridiag"}, "B": [1], "C": [1]})") ==
        ErrorCode::parse);
  CHECK(parse_code(R"({"n": 1, "m": 1, "p": 1, "A": {"kind": "dense", "entries": [1, 2]},
                      "B": [1], "C": [1]})") == ErrorCode::parse);
  CHECK(parse_code(R"({"n": 2, "m": 1, "p": 1,
                      "A": {"kind": "banded", "lower": 0, "upper": 0, "bands": [[1]]},
                      "B": [1, 1], "C": [1, 1]})") == ErrorCode::parse);
  CHECK(parse_code(R"({"n": 1, "m": 1, "p": 1, "A": {"kind": "dense", "entries": ["x"]},
                      "B": [1], "C": [1]})") == ErrorCode::parse);
}

TEST_CASE("low-rank factor documents round-trip") {
  std::mt19937_64 rng(2);
  const Matrix d = testing::random_matrix(rng, 7, 3);
  Matrix s = testing::random_matrix(rng, 3, 3);
  s = symmetrized(s);
  const nlohmann::json doc = nlohmann::json::parse(io::factors_to_json(d, s).dump());
  CHECK(doc.at("kind") == "lowrank_symmetric");
  CHECK(doc.at("n") == 7);
  CHECK(doc.at("rank") == 3);
  const auto [d2, s2] = io::factors_from_json(doc);
  CHECK(d2 == d);
  CHECK(s2 == s);
}
