#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twogap/domain.hpp"
#include "twogap/predictor.hpp"
#include "twogap/remez.hpp"

namespace twogap::records {

using Json = nlohmann::ordered_json;
using Row = std::vector<std::string>;

/// 17 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_machine(double value);
/// Inverse of format_machine. Throws DomainError on malformed input.
double parse_machine(const std::string& text);

/// Machine value as a JSON number, or as a string when non-finite.
Json machine_json(double value);
double machine_from_json(const Json& value);

/// One CSV line (no trailing newline); fields with commas or quotes are quoted.
std::string csv_line(const Row& fields);

// Characteristics.
const Row& chars_header();
Row chars_row(const GreenCharacteristics& chars);
Json to_json(const GreenCharacteristics& chars);
GreenCharacteristics chars_from_json(const Json& j);

// Predictions. The JSON object also carries the domain as "a" and "b".
const Row& prediction_header();
Row prediction_row(double A, double B, const predictor::PredictionRecord& record);
Json to_json(double A, double B, const predictor::PredictionRecord& record);
predictor::PredictionRecord prediction_from_json(const Json& j);

/// Serialisable view of a Remez result. Extended values are decimal strings
/// with `digits` significant digits.
struct RemezRecord {
  double a = 0.0;
  double b = 0.0;
  int n = 0;
  int digits = 0;
  std::string L;
  std::string L_upper;
  int m = 0;
  int K = 0;
  int N = 0;
  std::optional<char> case_label;
  int n1 = 0;
  int n2 = 0;
  int iterations = 0;
  std::vector<std::string> coefficients;
  std::vector<std::pair<std::string, int>> alternation;

  bool operator==(const RemezRecord&) const = default;
};

RemezRecord make_remez_record(const remez::BestApproxResult& result);
const Row& remez_header();
Row remez_row(const RemezRecord& record);
Json to_json(const RemezRecord& record);
RemezRecord remez_from_json(const Json& j);

/// One line of a theory-versus-oracle sweep. Empty strings mark values that
/// could not be produced; `error` then says why.
struct CompareRow {
  int n = 0;
  std::optional<predictor::PredictionRecord> prediction;
  std::string L_remez;
  std::optional<double> ratio_theorem;
  std::optional<double> ratio_refined;
  std::optional<int> n1;
  std::optional<int> n2;
  std::optional<char> case_label;
  std::string error;
};

const Row& compare_header();
Row compare_row(const CompareRow& row);
Json to_json(const CompareRow& row);

/// Closed-form reference values as {"a", <index name>, "L"}.
Row reference_header(const std::string& index_name);
Row reference_row(double A, int index, double L);
Json reference_json(double A, const std::string& index_name, int index, double L);

}  // namespace twogap::records
