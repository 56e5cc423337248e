#include "twogap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "twogap/errors.hpp"
#include "twogap/predictor.hpp"
#include "twogap/records.hpp"
#include "twogap/remez.hpp"
#include "twogap/ring_green.hpp"

namespace twogap::cli {
namespace {

using records::Json;

struct Config {
  std::string command;
  double a = 0.0;
  double b = 0.0;
  std::string n_text;
  int m = -1;
  std::string digits = "auto";
  std::optional<double> tol;
  std::string format;
  std::string out;
};

enum class Format { json, csv };

Format resolve_format(const Config& cfg, bool sweep) {
  if (cfg.format.empty()) return sweep ? Format::csv : Format::json;
  return cfg.format == "csv" ? Format::csv : Format::json;
}

remez::PrecisionContext precision_for(const Config& cfg, const TwoIntervalDomain& domain, int n) {
  if (cfg.digits == "auto") return remez::PrecisionContext::automatic(domain, n);
  return remez::PrecisionContext{std::stoi(cfg.digits)};
}

void check_digits(const std::string& digits) {
  if (digits == "auto") return;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != digits.size() || used == 0) {
    throw DomainError("--digits must be an integer or 'auto'");
  }
  if (value < remez::kMinDigits) {
    throw DomainError("--digits must be at least " + std::to_string(remez::kMinDigits));
  }
}

// Runs body(i) for i in [0, count) on up to thread_count() workers.
void parallel_for(int count, const std::function<void(int)>& body) {
  const int workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

void write_table(std::ostream& os, const records::Row& header,
                 const std::vector<records::Row>& rows) {
  os << records::csv_line(header) << '\n';
  for (const auto& r : rows) os << records::csv_line(r) << '\n';
}

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

void cmd_chars(const Config& cfg, std::ostream& os) {
  const GreenCharacteristics chars = ring::complete_characteristics({cfg.a, cfg.b});
  if (resolve_format(cfg, false) == Format::csv) {
    write_table(os, records::chars_header(), {records::chars_row(chars)});
  } else {
    write_json(os, records::to_json(chars));
  }
}

void cmd_predict(const Config& cfg, std::ostream& os) {
  const NRange range = parse_range(cfg.n_text);
  const GreenCharacteristics chars = ring::complete_characteristics({cfg.a, cfg.b});
  std::vector<predictor::PredictionRecord> recs;
  for (int n = range.lo; n <= range.hi; ++n) recs.push_back(predictor::predict(n, chars));

  const Format fmt = resolve_format(cfg, !range.single());
  if (fmt == Format::csv) {
    std::vector<records::Row> rows;
    for (const auto& r : recs) rows.push_back(records::prediction_row(cfg.a, cfg.b, r));
    write_table(os, records::prediction_header(), rows);
  } else if (range.single()) {
    write_json(os, records::to_json(cfg.a, cfg.b, recs.front()));
  } else {
    Json arr = Json::array();
    for (const auto& r : recs) arr.push_back(records::to_json(cfg.a, cfg.b, r));
    write_json(os, arr);
  }
}

void cmd_remez(const Config& cfg, std::ostream& os) {
  const NRange range = parse_range(cfg.n_text);
  const TwoIntervalDomain domain{cfg.a, cfg.b};
  validate(domain, true);
  const int count = range.hi - range.lo + 1;
  std::vector<std::optional<records::RemezRecord>> recs(count);
  std::vector<std::exception_ptr> failures(count);
  parallel_for(count, [&](int i) {
    const int n = range.lo + i;
    try {
      recs[i] = records::make_remez_record(
          remez::best_approx(domain, n, precision_for(cfg, domain, n), cfg.tol));
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  const Format fmt = resolve_format(cfg, !range.single());
  if (fmt == Format::csv) {
    std::vector<records::Row> rows;
    for (const auto& r : recs) rows.push_back(records::remez_row(*r));
    write_table(os, records::remez_header(), rows);
  } else if (range.single()) {
    write_json(os, records::to_json(*recs.front()));
  } else {
    Json arr = Json::array();
    for (const auto& r : recs) arr.push_back(records::to_json(*r));
    write_json(os, arr);
  }
}

records::CompareRow compare_one(const Config& cfg, const GreenCharacteristics& chars, int n) {
  records::CompareRow row;
  row.n = n;
  std::vector<std::string> errors;
  try {
    row.prediction = predictor::predict(n, chars);
  } catch (const std::exception& e) {
    errors.emplace_back(e.what());
  }
  try {
    const TwoIntervalDomain domain = chars.domain();
    const remez::BestApproxResult res =
        remez::best_approx(domain, n, precision_for(cfg, domain, n), cfg.tol);
    row.L_remez = res.L.to_string(res.digits);
    row.n1 = res.n1;
    row.n2 = res.n2;
    if (res.case_label) row.case_label = remez::to_char(*res.case_label);
    const double L = res.L.to_double();
    if (row.prediction) {
      row.ratio_theorem = L / row.prediction->L_theorem;
      if (row.prediction->L_refined) row.ratio_refined = L / *row.prediction->L_refined;
    }
  } catch (const std::exception& e) {
    errors.emplace_back(e.what());
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    row.error += (i ? "; " : "") + errors[i];
  }
  return row;
}

// Returns false when every row failed.
bool cmd_compare(const Config& cfg, std::ostream& os, std::ostream& err) {
  const NRange range = parse_range(cfg.n_text);
  const GreenCharacteristics chars = ring::complete_characteristics({cfg.a, cfg.b});
  const int count = range.hi - range.lo + 1;
  std::vector<records::CompareRow> rows(count);
  parallel_for(count, [&](int i) { rows[i] = compare_one(cfg, chars, range.lo + i); });

  int failed = 0;
  for (const auto& r : rows) {
    // A row fails when the oracle produced nothing; a missing refined
    // prediction alone is reported but keeps the row.
    if (r.L_remez.empty() || !r.prediction) ++failed;
    if (!r.error.empty()) err << "n=" << r.n << ": " << r.error << '\n';
  }

  if (resolve_format(cfg, true) == Format::csv) {
    std::vector<records::Row> table;
    for (const auto& r : rows) table.push_back(records::compare_row(r));
    write_table(os, records::compare_header(), table);
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(records::to_json(r));
    write_json(os, arr);
  }
  return failed < count;
}

void cmd_symmetric(const Config& cfg, std::ostream& os) {
  if (cfg.m < 0) throw DomainError("symmetric: --m must be a non-negative integer");
  const double L = predictor::symmetric_reference(cfg.m, cfg.a);
  if (resolve_format(cfg, false) == Format::csv) {
    write_table(os, records::reference_header("m"), {records::reference_row(cfg.a, cfg.m, L)});
  } else {
    write_json(os, records::reference_json(cfg.a, "m", cfg.m, L));
  }
}

void cmd_degenerate(const Config& cfg, std::ostream& os) {
  const NRange range = parse_range(cfg.n_text);
  std::vector<records::Row> rows;
  Json arr = Json::array();
  for (int n = range.lo; n <= range.hi; ++n) {
    const double L = predictor::degenerate_reference(n, cfg.a);
    rows.push_back(records::reference_row(cfg.a, n, L));
    arr.push_back(records::reference_json(cfg.a, "n", n, L));
  }
  if (resolve_format(cfg, !range.single()) == Format::csv) {
    write_table(os, records::reference_header("n"), rows);
  } else {
    write_json(os, range.single() ? arr.front() : arr);
  }
}

}  // namespace

NRange parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw DomainError("malformed n or n-range '" + text + "'");
    return v;
  };
  NRange r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo < 0 || r.hi < r.lo) throw DomainError("n-range '" + text + "' is empty or negative");
  return r;
}

int thread_count() {
  if (const char* env = std::getenv("TWOGAP_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Best uniform approximation of sgn on two intervals", "twogap"};
  app.require_subcommand(1, 1);

  auto add_domain = [&](CLI::App* sub, bool needs_b) {
    sub->add_option("--a", cfg.a, "Left interval is [-a, -1]")->required();
    if (needs_b) sub->add_option("--b", cfg.b, "Right interval is [1, b]")->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
  };
  auto add_remez = [&](CLI::App* sub) {
    sub->add_option("--digits", cfg.digits, "Decimal digits or 'auto'");
    sub->add_option("--tol", cfg.tol, "Relative tolerance of the Remez bracket");
  };

  CLI::App* chars = app.add_subcommand("chars", "Green function characteristics");
  add_domain(chars, true);
  add_output(chars);

  CLI::App* predict = app.add_subcommand("predict", "Asymptotic prediction of L_n");
  add_domain(predict, true);
  predict->add_option("--n", cfg.n_text, "Degree or lo..hi")->required();
  add_output(predict);

  CLI::App* rz = app.add_subcommand("remez", "Minimax error by Remez exchange");
  add_domain(rz, true);
  rz->add_option("--n", cfg.n_text, "Degree or lo..hi")->required();
  add_remez(rz);
  add_output(rz);

  CLI::App* compare = app.add_subcommand("compare", "Prediction against the Remez oracle");
  add_domain(compare, true);
  compare->add_option("--n", cfg.n_text, "Degree or lo..hi")->required();
  add_remez(compare);
  add_output(compare);

  CLI::App* sym = app.add_subcommand("symmetric", "Asymptote of L_{2m+1} for A = B");
  add_domain(sym, false);
  sym->add_option("--m", cfg.m, "Index m of L_{2m+1}")->required();
  add_output(sym);

  CLI::App* deg = app.add_subcommand("degenerate", "Exact L_n on [-A,-1] U {1}");
  add_domain(deg, false);
  deg->add_option("--n", cfg.n_text, "Degree or lo..hi")->required();
  add_output(deg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "twogap: " << e.what() << '\n';
    return kExitInvalid;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  bool all_failed = false;
  try {
    check_digits(cfg.digits);
    if (cfg.tol && !(*cfg.tol > 0.0)) throw DomainError("--tol must be positive");
    if (cfg.command == "chars") cmd_chars(cfg, buffer);
    else if (cfg.command == "predict") cmd_predict(cfg, buffer);
    else if (cfg.command == "remez") cmd_remez(cfg, buffer);
    else if (cfg.command == "compare") all_failed = !cmd_compare(cfg, buffer, err);
    else if (cfg.command == "symmetric") cmd_symmetric(cfg, buffer);
    else cmd_degenerate(cfg, buffer);
  } catch (const DomainError& e) {
    err << "twogap: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "twogap: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "twogap: " << e.what() << '\n';
    return kExitNonConvergence;
  }

  if (cfg.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "twogap: cannot open '" << cfg.out << "' for writing\n";
      return kExitInvalid;
    }
    file << buffer.str();
  }
  if (all_failed) {
    err << "twogap: every row failed\n";
    return kExitNonConvergence;
  }
  return kExitOk;
}

}  // namespace twogap::cli
