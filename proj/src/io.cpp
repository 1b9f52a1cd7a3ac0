#include "radda/io.hpp"

#include <fstream>
#include <vector>

#include "radda/error.hpp"

namespace radda::io {
namespace {

using nlohmann::json;

std::vector<double> column_major(const Matrix& m) {
  return {m.data(), m.data() + m.size()};
}

Matrix matrix_from(const json& values, Index rows, Index cols, bool row_major,
                   const char* what) {
  if (!values.is_array() || static_cast<Index>(values.size()) != rows * cols)
    throw Error(ErrorCode::parse, std::string(what) + ": expected " +
                                      std::to_string(rows * cols) + " entries");
  Matrix m(rows, cols);
  Index idx = 0;
  for (const auto& v : values) {
    if (!v.is_number()) throw Error(ErrorCode::parse, std::string(what) + ": non-numeric entry");
    const Index i = row_major ? idx / cols : idx % rows;
    const Index j = row_major ? idx % cols : idx / rows;
    m(i, j) = v.get<double>();
    ++idx;
  }
  return m;
}

Index dim(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1)
    throw Error(ErrorCode::parse, std::string("missing or invalid dimension '") + key + "'");
  return static_cast<Index>(doc[key].get<long long>());
}

}  // namespace

json problem_to_json(const CareProblem& problem) {
  const Index n = problem.n();
  json a;
  if (problem.A().is_banded()) {
    const BandedMatrix& band = problem.A().banded();
    json bands = json::array();
    for (Index d = -band.lower(); d <= band.upper(); ++d) {
      const auto diag = band.diagonal(d);
      const Index i0 = d < 0 ? -d : 0;
      const Index len = n - (d < 0 ? -d : d);
      bands.push_back(std::vector<double>(diag.begin() + i0, diag.begin() + i0 + len));
    }
    a = {{"kind", "banded"}, {"lower", band.lower()}, {"upper", band.upper()}, {"bands", bands}};
  } else {
    a = {{"kind", "dense"}, {"entries", column_major(problem.A().dense())}};
  }
  const Matrix ct = problem.C().transpose();  // column-major Cᵀ is row-major C
  return {{"n", n},       {"m", problem.m()},           {"p", problem.p()},
          {"A", a},       {"B", column_major(problem.B())}, {"C", column_major(ct)}};
}

CareProblem problem_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::parse, "problem document must be an object");
  const Index n = dim(doc, "n");
  const Index m = dim(doc, "m");
  const Index p = dim(doc, "p");
  if (!doc.contains("A") || !doc["A"].is_object())
    throw Error(ErrorCode::parse, "missing object 'A'");
  const json& a = doc["A"];
  const std::string kind = a.value("kind", "");

  auto make = [&](SystemMatrix sys) {
    if (!doc.contains("B") || !doc.contains("C"))
      throw Error(ErrorCode::parse, "missing 'B' or 'C'");
    return CareProblem(std::move(sys), matrix_from(doc["B"], n, m, false, "B"),
                       matrix_from(doc["C"], p, n, true, "C"));
  };

  if (kind == "dense") {
    if (!a.contains("entries")) throw Error(ErrorCode::parse, "dense A needs 'entries'");
    return make(SystemMatrix(matrix_from(a["entries"], n, n, false, "A.entries")));
  }
  if (kind != "banded") throw Error(ErrorCode::parse, "A.kind must be 'banded' or 'dense'");
  if (!a.contains("lower") || !a.contains("upper") || !a.contains("bands") ||
      !a["lower"].is_number_integer() || !a["upper"].is_number_integer() ||
      !a["bands"].is_array())
    throw Error(ErrorCode::parse, "banded A needs integer 'lower', 'upper' and array 'bands'");
  const auto lower = static_cast<Index>(a["lower"].get<long long>());
  const auto upper = static_cast<Index>(a["upper"].get<long long>());
  if (lower < 0 || upper < 0 || lower >= n || upper >= n)
    throw Error(ErrorCode::parse, "bandwidths must lie in [0, n)");
  const json& bands = a["bands"];
  if (static_cast<Index>(bands.size()) != lower + upper + 1)
    throw Error(ErrorCode::parse, "expected lower+upper+1 bands");
  BandedMatrix band(n, lower, upper);
  for (Index d = -lower; d <= upper; ++d) {
    const json& diag = bands[static_cast<std::size_t>(d + lower)];
    const Index len = n - (d < 0 ? -d : d);
    const Matrix values = matrix_from(diag, len, 1, false, "A.bands");
    const Index i0 = d < 0 ? -d : 0;
    for (Index r = 0; r < len; ++r) band.set(i0 + r, i0 + r + d, values(r, 0));
  }
  return make(SystemMatrix(std::move(band)));
}

CareProblem read_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse, "cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, path.string() + ": " + e.what());
  }
  return problem_from_json(doc);
}

void write_problem(const CareProblem& problem, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::parse, "cannot write " + path.string());
  out << problem_to_json(problem).dump(2) << '\n';
}

json factors_to_json(const Matrix& d, const Matrix& sigma) {
  return {{"kind", "lowrank_symmetric"},
          {"n", d.rows()},
          {"rank", d.cols()},
          {"D", column_major(d)},
          {"Sigma", column_major(sigma)},
          {"note", "X = D * Sigma * D^T"}};
}

std::pair<Matrix, Matrix> factors_from_json(const json& doc) {
  if (!doc.is_object() || doc.value("kind", "") != "lowrank_symmetric")
    throw Error(ErrorCode::parse, "not a lowrank_symmetric document");
  const Index n = dim(doc, "n");
  if (!doc.contains("rank") || !doc["rank"].is_number_integer())
    throw Error(ErrorCode::parse, "missing 'rank'");
  const auto r = static_cast<Index>(doc["rank"].get<long long>());
  if (!doc.contains("D") || !doc.contains("Sigma")) throw Error(ErrorCode::parse, "missing factors");
  return {matrix_from(doc["D"], n, r, false, "D"), matrix_from(doc["Sigma"], r, r, false, "Sigma")};
}

}  // namespace radda::io
