#include "twogap/records.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "twogap/errors.hpp"

namespace twogap::records {
namespace {

std::string optional_machine(const std::optional<double>& value) {
  return value ? format_machine(*value) : std::string();
}

Json optional_machine_json(const std::optional<double>& value) {
  return value ? machine_json(*value) : Json(nullptr);
}

Json case_json(const std::optional<char>& label) {
  return label ? Json(std::string(1, *label)) : Json(nullptr);
}

std::optional<char> case_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  const std::string s = j.get<std::string>();
  if (s.size() != 1) throw DomainError("records: malformed case label '" + s + "'");
  return s[0];
}

}  // namespace

std::string format_machine(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

double parse_machine(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw DomainError("records: not a number: '" + text + "'");
  }
  return v;
}

Json machine_json(double value) {
  if (std::isfinite(value)) return value;
  return format_machine(value);
}

double machine_from_json(const Json& value) {
  if (value.is_string()) return parse_machine(value.get<std::string>());
  return value.get<double>();
}

std::string csv_line(const Row& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char ch : f) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  }
  return out;
}

// ---------------------------------------------------------------------------

const Row& chars_header() {
  static const Row h{"a", "b", "c_crit", "eta", "eta1", "eta2",
                     "alpha", "omega_c", "p", "rho", "c0_abs"};
  return h;
}

Row chars_row(const GreenCharacteristics& c) {
  return {format_machine(c.A),     format_machine(c.B),     format_machine(c.C),
          format_machine(c.eta),   format_machine(c.eta1),  format_machine(c.eta2),
          format_machine(c.alpha), format_machine(c.omegaC), format_machine(c.p),
          format_machine(c.rho),   format_machine(c.c0_abs)};
}

Json to_json(const GreenCharacteristics& c) {
  Json j;
  j["a"] = machine_json(c.A);
  j["b"] = machine_json(c.B);
  j["c_crit"] = machine_json(c.C);
  j["eta"] = machine_json(c.eta);
  j["eta1"] = machine_json(c.eta1);
  j["eta2"] = machine_json(c.eta2);
  j["alpha"] = machine_json(c.alpha);
  j["omega_c"] = machine_json(c.omegaC);
  j["p"] = machine_json(c.p);
  j["rho"] = machine_json(c.rho);
  j["c0_abs"] = machine_json(c.c0_abs);
  return j;
}

GreenCharacteristics chars_from_json(const Json& j) {
  GreenCharacteristics c;
  c.A = machine_from_json(j.at("a"));
  c.B = machine_from_json(j.at("b"));
  c.C = machine_from_json(j.at("c_crit"));
  c.eta = machine_from_json(j.at("eta"));
  c.eta1 = machine_from_json(j.at("eta1"));
  c.eta2 = machine_from_json(j.at("eta2"));
  c.alpha = machine_from_json(j.at("alpha"));
  c.omegaC = machine_from_json(j.at("omega_c"));
  c.p = machine_from_json(j.at("p"));
  c.rho = machine_from_json(j.at("rho"));
  c.c0_abs = machine_from_json(j.at("c0_abs"));
  return c;
}

// ---------------------------------------------------------------------------

const Row& prediction_header() {
  static const Row h{"a",         "b",          "n",           "phase",
                     "D_n",       "G_DC",       "a_n",         "L_theorem",
                     "L_refined", "theta_ratio", "theta_ratio_raw"};
  return h;
}

Row prediction_row(double A, double B, const predictor::PredictionRecord& r) {
  return {format_machine(A),           format_machine(B),
          std::to_string(r.n),         format_machine(r.phase),
          format_machine(r.D_n),       format_machine(r.G_DC),
          format_machine(r.a_n),       format_machine(r.L_theorem),
          optional_machine(r.L_refined), format_machine(r.theta_ratio),
          format_machine(r.theta_ratio_raw)};
}

Json to_json(double A, double B, const predictor::PredictionRecord& r) {
  Json j;
  j["a"] = machine_json(A);
  j["b"] = machine_json(B);
  j["n"] = r.n;
  j["phase"] = machine_json(r.phase);
  j["D_n"] = machine_json(r.D_n);
  j["G_DC"] = machine_json(r.G_DC);
  j["a_n"] = machine_json(r.a_n);
  j["L_theorem"] = machine_json(r.L_theorem);
  j["L_refined"] = optional_machine_json(r.L_refined);
  j["theta_ratio"] = machine_json(r.theta_ratio);
  j["theta_ratio_raw"] = machine_json(r.theta_ratio_raw);
  return j;
}

predictor::PredictionRecord prediction_from_json(const Json& j) {
  predictor::PredictionRecord r;
  r.n = j.at("n").get<int>();
  r.phase = machine_from_json(j.at("phase"));
  r.D_n = machine_from_json(j.at("D_n"));
  r.G_DC = machine_from_json(j.at("G_DC"));
  r.a_n = machine_from_json(j.at("a_n"));
  r.L_theorem = machine_from_json(j.at("L_theorem"));
  if (!j.at("L_refined").is_null()) r.L_refined = machine_from_json(j.at("L_refined"));
  r.theta_ratio = machine_from_json(j.at("theta_ratio"));
  r.theta_ratio_raw = machine_from_json(j.at("theta_ratio_raw"));
  return r;
}

// ---------------------------------------------------------------------------

RemezRecord make_remez_record(const remez::BestApproxResult& res) {
  RemezRecord r;
  r.a = res.domain.A;
  r.b = res.domain.B;
  r.n = res.n;
  r.digits = res.digits;
  r.L = res.L.to_string(res.digits);
  r.L_upper = res.L_upper.to_string(res.digits);
  r.m = res.m;
  r.K = res.K;
  r.N = res.N;
  if (res.case_label) r.case_label = remez::to_char(*res.case_label);
  r.n1 = res.n1;
  r.n2 = res.n2;
  r.iterations = res.iterations;
  for (const auto& c : res.poly.coefficients) r.coefficients.push_back(c.to_string(res.digits));
  for (const auto& p : res.alternation) r.alternation.emplace_back(p.x.to_string(res.digits), p.sign);
  return r;
}

const Row& remez_header() {
  static const Row h{"a", "b",  "n",    "digits", "L",  "L_upper",   "m",
                     "K", "N", "case", "n1",     "n2", "iterations"};
  return h;
}

Row remez_row(const RemezRecord& r) {
  return {format_machine(r.a),
          format_machine(r.b),
          std::to_string(r.n),
          std::to_string(r.digits),
          r.L,
          r.L_upper,
          std::to_string(r.m),
          std::to_string(r.K),
          std::to_string(r.N),
          r.case_label ? std::string(1, *r.case_label) : std::string(),
          std::to_string(r.n1),
          std::to_string(r.n2),
          std::to_string(r.iterations)};
}

Json to_json(const RemezRecord& r) {
  Json j;
  j["a"] = machine_json(r.a);
  j["b"] = machine_json(r.b);
  j["n"] = r.n;
  j["digits"] = r.digits;
  j["L"] = r.L;
  j["L_upper"] = r.L_upper;
  j["m"] = r.m;
  j["K"] = r.K;
  j["N"] = r.N;
  j["case"] = case_json(r.case_label);
  j["n1"] = r.n1;
  j["n2"] = r.n2;
  j["iterations"] = r.iterations;
  j["coefficients"] = r.coefficients;
  Json alt = Json::array();
  for (const auto& [x, sign] : r.alternation) alt.push_back({{"x", x}, {"sign", sign}});
  j["alternation"] = std::move(alt);
  return j;
}

RemezRecord remez_from_json(const Json& j) {
  RemezRecord r;
  r.a = machine_from_json(j.at("a"));
  r.b = machine_from_json(j.at("b"));
  r.n = j.at("n").get<int>();
  r.digits = j.at("digits").get<int>();
  r.L = j.at("L").get<std::string>();
  r.L_upper = j.at("L_upper").get<std::string>();
  r.m = j.at("m").get<int>();
  r.K = j.at("K").get<int>();
  r.N = j.at("N").get<int>();
  r.case_label = case_from_json(j.at("case"));
  r.n1 = j.at("n1").get<int>();
  r.n2 = j.at("n2").get<int>();
  r.iterations = j.at("iterations").get<int>();
  r.coefficients = j.at("coefficients").get<std::vector<std::string>>();
  for (const auto& p : j.at("alternation")) {
    r.alternation.emplace_back(p.at("x").get<std::string>(), p.at("sign").get<int>());
  }
  return r;
}

// ---------------------------------------------------------------------------

const Row& compare_header() {
  static const Row h{"n",         "phase",     "D_n",     "G_DC",          "a_n",
                     "L_theorem", "L_refined", "L_remez", "ratio_theorem", "ratio_refined",
                     "n1",        "n2",        "case",    "error"};
  return h;
}

Row compare_row(const CompareRow& row) {
  Row out{std::to_string(row.n)};
  if (row.prediction) {
    const auto& p = *row.prediction;
    for (double v : {p.phase, p.D_n, p.G_DC, p.a_n, p.L_theorem}) out.push_back(format_machine(v));
    out.push_back(optional_machine(p.L_refined));
  } else {
    out.insert(out.end(), 6, std::string());
  }
  out.push_back(row.L_remez);
  out.push_back(optional_machine(row.ratio_theorem));
  out.push_back(optional_machine(row.ratio_refined));
  out.push_back(row.n1 ? std::to_string(*row.n1) : std::string());
  out.push_back(row.n2 ? std::to_string(*row.n2) : std::string());
  out.push_back(row.case_label ? std::string(1, *row.case_label) : std::string());
  out.push_back(row.error);
  return out;
}

Json to_json(const CompareRow& row) {
  Json j;
  j["n"] = row.n;
  if (row.prediction) {
    const auto& p = *row.prediction;
    j["phase"] = machine_json(p.phase);
    j["D_n"] = machine_json(p.D_n);
    j["G_DC"] = machine_json(p.G_DC);
    j["a_n"] = machine_json(p.a_n);
    j["L_theorem"] = machine_json(p.L_theorem);
    j["L_refined"] = optional_machine_json(p.L_refined);
  } else {
    for (const char* k : {"phase", "D_n", "G_DC", "a_n", "L_theorem", "L_refined"}) j[k] = nullptr;
  }
  j["L_remez"] = row.L_remez.empty() ? Json(nullptr) : Json(row.L_remez);
  j["ratio_theorem"] = optional_machine_json(row.ratio_theorem);
  j["ratio_refined"] = optional_machine_json(row.ratio_refined);
  j["n1"] = row.n1 ? Json(*row.n1) : Json(nullptr);
  j["n2"] = row.n2 ? Json(*row.n2) : Json(nullptr);
  j["case"] = case_json(row.case_label);
  j["error"] = row.error.empty() ? Json(nullptr) : Json(row.error);
  return j;
}

// ---------------------------------------------------------------------------

Row reference_header(const std::string& index_name) { return {"a", index_name, "L"}; }

Row reference_row(double A, int index, double L) {
  return {format_machine(A), std::to_string(index), format_machine(L)};
}

Json reference_json(double A, const std::string& index_name, int index, double L) {
  Json j;
  j["a"] = machine_json(A);
  j[index_name] = index;
  j["L"] = machine_json(L);
  return j;
}

}  // namespace twogap::records
