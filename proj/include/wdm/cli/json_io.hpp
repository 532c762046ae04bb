#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wdm/mixed/filtered.hpp"
#include "wdm/pi1/truncation.hpp"
#include "wdm/selmer/curve.hpp"
#include "wdm/selmer/lie.hpp"

namespace wdm::cli {

using json = nlohmann::json;

// Every schema violation, each prefixed with its JSON pointer.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

// Collects errors while reading; call finish() to throw them all at once.
class Reader {
 public:
  void error(const std::string& ptr, const std::string& msg);
  bool ok() const { return errors_.empty(); }
  void finish() const;

  const json* field(const json& obj, const std::string& ptr, const char* key, bool required = true);
  std::optional<Q> rational(const json& j, const std::string& ptr);
  std::optional<long> integer(const json& j, const std::string& ptr, long min, long max);
  std::optional<Vec> vector(const json& j, const std::string& ptr, std::optional<std::size_t> len);
  std::optional<Matrix> matrix(const json& j, const std::string& ptr, std::optional<std::size_t> rows,
                               std::optional<std::size_t> cols);
  // List of columns spanning a subspace of Q^ambient.
  std::optional<Subspace> columns(const json& j, const std::string& ptr, std::size_t ambient);
  // {"i": [[col], ...], ...}
  std::optional<std::map<int, Subspace>> filtration(const json& j, const std::string& ptr, std::size_t ambient);

 private:
  std::vector<std::string> errors_;
};

std::string child(const std::string& ptr, const std::string& key);
std::string child(const std::string& ptr, std::size_t index);

// Readers throw SchemaError; mathematical validation is left to the library.
WDRep read_wdrep(const json& j);
FilteredWDRep read_filtered(const json& j);

struct TruncationInput {
  std::size_t letters = 0, depth = 0;
  Z q;
  Vec eigenvalues;
  std::vector<NPair> n_pairs;
  std::vector<Vec> K;
};
TruncationInput read_truncation(const json& j);

PhiNLieDatum read_datum(const json& j);
CurveSelmerInput read_curve(const json& j);

json to_json(const Q& x);
json to_json(const Vec& v);
json to_json(const Matrix& m);  // row-major
json columns_json(const Subspace& s);
json to_json(const PhiNLieDatum& d);
json to_json(const FilteredWDRep& v);

// Same shape with every rational string replaced by a double.
json floatify(const json& j);

}  // namespace wdm::cli
