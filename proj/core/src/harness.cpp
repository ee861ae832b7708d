#include "mfpt/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "mfpt/matrix_io.hpp"
#include "mfpt/oracle.hpp"

namespace mfpt {

std::string_view precision_name(Precision p) noexcept {
  return p == Precision::Single ? "single" : "double";
}

std::string_view format_extension(ReportFormat f) noexcept {
  switch (f) {
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
    case ReportFormat::Markdown: return "md";
  }
  return "txt";
}

void RunConfig::check() const {
  if (problems.empty()) throw ContractViolation("no problems selected");
  if (procedures.empty()) throw ContractViolation("no procedures selected");
  if (precisions.empty()) throw ContractViolation("no precision selected");
  if (reps < 1) throw ContractViolation("reps must be at least 1");
}

const std::vector<std::string>& accuracy_columns() {
  static const std::vector<std::string> cols = {
      "problem", "m",          "procedure",      "precision",
      "status",  "error",      "pze",            "ore",
      "minare",  "maxare",     "negative_entries", "zero_entries",
      "oracle_max_rel", "aned", "aned_terms",    "minae",
      "maxae",   "rel"};
  return cols;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

AccuracyReport nan_report() { return {kNaN, kNaN, kNaN, kNaN}; }

template <Real T>
void count_signs(const MfptMatrix<T>& mm, AccuracyRow& row) {
  for (T v : mm.mfpt.data()) {
    row.negative_entries += v < T(0);
    row.zero_entries += v == T(0);
  }
}

double max_rel(const MfptMatrix<double>& got, const MfptMatrix<double>& want) {
  double worst = 0;
  for (std::size_t k = 0; k < want.mfpt.data().size(); ++k) {
    const double w = want.mfpt.data()[k];
    const double r = std::abs(got.mfpt.data()[k] - w) / std::abs(w);
    if (std::isnan(r)) return kNaN;
    worst = std::max(worst, r);
  }
  return worst;
}

struct LoadedProblem {
  std::string name;
  TransitionMatrix<double> p;
};

std::vector<LoadedProblem> load_all(const RunConfig& cfg) {
  std::vector<LoadedProblem> out;
  out.reserve(cfg.problems.size());
  for (const auto& spec : cfg.problems) {
    out.push_back({spec.name(), load_problem(spec)});
  }
  return out;
}

}  // namespace

std::vector<AccuracyRow> run_accuracy(const RunConfig& cfg) {
  cfg.check();
  std::vector<AccuracyRow> rows;
  for (const auto& prob : load_all(cfg)) {
    const std::size_t m = prob.p.states();
    const TransitionMatrix<float> ps = prob.p.cast<float>();
    std::optional<MfptMatrix<double>> oracle;
    if (cfg.oracle) oracle = mfpt_oracle(prob.p);

    for (Procedure proc : cfg.procedures) {
      // The binary64 result is needed for single rows even when double rows
      // are not requested.
      std::optional<MfptMatrix<double>> md;
      std::string md_error;
      try {
        md = run_procedure(proc, prob.p).m;
      } catch (const Error& e) {
        md_error = e.what();
      }

      for (Precision prec : cfg.precisions) {
        AccuracyRow row;
        row.problem = prob.name;
        row.m = m;
        row.procedure = procedure_id(proc);
        row.precision = prec;
        if (prec == Precision::Double) {
          if (md) {
            row.acc = accuracy_report(residual(prob.p, *md));
            count_signs(*md, row);
            if (oracle) row.oracle_max_rel = max_rel(*md, *oracle);
          } else {
            row.ok = false;
            row.error = md_error;
            row.acc = nan_report();
            if (oracle) row.oracle_max_rel = kNaN;
          }
        } else {
          PrecisionComparison nan_cmp;
          nan_cmp.status = PrecisionComparison::Status::NotComputed;
          nan_cmp.aned = nan_cmp.minae = nan_cmp.maxae = nan_cmp.rel = kNaN;
          try {
            const auto ms = run_procedure(proc, ps).m;
            row.acc = accuracy_report(residual(ps, ms));
            count_signs(ms, row);
            row.compare = md ? precision_compare(*md, ms) : nan_cmp;
          } catch (const Error& e) {
            row.ok = false;
            row.error = e.what();
            row.acc = nan_report();
            row.compare = nan_cmp;
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<TimingRecord> run_bench(const RunConfig& cfg) {
  cfg.check();
  using clock = std::chrono::steady_clock;
  std::vector<TimingRecord> out;
  for (const auto& prob : load_all(cfg)) {
    const TransitionMatrix<float> ps = prob.p.cast<float>();
    for (Procedure proc : cfg.procedures) {
      for (Precision prec : cfg.precisions) {
        TimingRecord rec;
        rec.problem = prob.name;
        rec.m = prob.p.states();
        rec.procedure = procedure_id(proc);
        rec.precision = prec;
        rec.reps = cfg.reps;
        auto once = [&] {
          if (prec == Precision::Double) {
            return run_procedure(proc, prob.p).m.mfpt(0, 0) != 0.0;
          }
          return run_procedure(proc, ps).m.mfpt(0, 0) != 0.0f;
        };
        try {
          volatile bool sink = once();  // warmup
          const auto t0 = clock::now();
          for (int r = 0; r < cfg.reps; ++r) sink = once();
          const auto t1 = clock::now();
          (void)sink;
          rec.mean_seconds =
              std::chrono::duration<double>(t1 - t0).count() / cfg.reps;
        } catch (const Error& e) {
          rec.ok = false;
          rec.error = e.what();
          rec.mean_seconds = kNaN;
        }
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return format_real(v);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

std::string aned_text(const PrecisionComparison& c) {
  switch (c.status) {
    case PrecisionComparison::Status::Exact: return "exact";
    case PrecisionComparison::Status::NotComputed: return "NaN";
    case PrecisionComparison::Status::Value: return num(c.aned);
  }
  return "NaN";
}

// Cell values in schema order, as text. Empty means not applicable.
std::vector<std::string> cells(const AccuracyRow& r) {
  std::vector<std::string> v = {
      r.problem,
      std::to_string(r.m),
      std::to_string(r.procedure),
      std::string(precision_name(r.precision)),
      r.ok ? "ok" : "failed",
      r.error,
      num(r.acc.pze),
      num(r.acc.ore),
      num(r.acc.minare),
      num(r.acc.maxare),
      r.ok ? std::to_string(r.negative_entries) : "NaN",
      r.ok ? std::to_string(r.zero_entries) : "NaN",
      r.oracle_max_rel ? num(*r.oracle_max_rel) : ""};
  if (r.compare) {
    const auto& c = *r.compare;
    const bool have = c.status != PrecisionComparison::Status::NotComputed;
    v.push_back(aned_text(c));
    v.push_back(have ? std::to_string(r.m * r.m - c.excluded_count) : "NaN");
    v.push_back(num(c.minae));
    v.push_back(num(c.maxae));
    v.push_back(num(c.rel));
  } else {
    v.insert(v.end(), 5, "");
  }
  return v;
}

nlohmann::ordered_json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

void write_accuracy(std::ostream& out, const std::vector<AccuracyRow>& rows,
                    ReportFormat fmt) {
  const auto& cols = accuracy_columns();
  switch (fmt) {
    case ReportFormat::Csv: {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        out << (k ? "," : "") << cols[k];
      }
      out << '\n';
      for (const auto& r : rows) {
        const auto v = cells(r);
        for (std::size_t k = 0; k < v.size(); ++k) {
          out << (k ? "," : "") << csv_quote(v[k]);
        }
        out << '\n';
      }
      break;
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json doc;
      doc["schema_version"] = kAccuracySchemaVersion;
      auto& arr = doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["problem"] = r.problem;
        j["m"] = r.m;
        j["procedure"] = r.procedure;
        j["precision"] = precision_name(r.precision);
        j["status"] = r.ok ? "ok" : "failed";
        j["error"] = r.ok ? nlohmann::ordered_json(nullptr)
                          : nlohmann::ordered_json(r.error);
        j["pze"] = jnum(r.acc.pze);
        j["ore"] = jnum(r.acc.ore);
        j["minare"] = jnum(r.acc.minare);
        j["maxare"] = jnum(r.acc.maxare);
        j["negative_entries"] = r.ok ? nlohmann::ordered_json(r.negative_entries)
                                     : nlohmann::ordered_json(nullptr);
        j["zero_entries"] = r.ok ? nlohmann::ordered_json(r.zero_entries)
                                 : nlohmann::ordered_json(nullptr);
        j["oracle_max_rel"] =
            r.oracle_max_rel ? jnum(*r.oracle_max_rel) : nullptr;
        if (r.compare) {
          const auto& c = *r.compare;
          if (c.status == PrecisionComparison::Status::Exact) {
            j["aned"] = "exact";
          } else {
            j["aned"] = jnum(c.aned);
          }
          j["aned_terms"] =
              c.status == PrecisionComparison::Status::NotComputed
                  ? nlohmann::ordered_json(nullptr)
                  : nlohmann::ordered_json(r.m * r.m - c.excluded_count);
          j["minae"] = jnum(c.minae);
          j["maxae"] = jnum(c.maxae);
          j["rel"] = jnum(c.rel);
        } else {
          for (const char* k : {"aned", "aned_terms", "minae", "maxae", "rel"}) {
            j[k] = nullptr;
          }
        }
        arr.push_back(std::move(j));
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case ReportFormat::Markdown: {
      out << '|';
      for (const auto& c : cols) out << ' ' << c << " |";
      out << "\n|";
      for (std::size_t k = 0; k < cols.size(); ++k) out << " --- |";
      out << '\n';
      for (const auto& r : rows) {
        out << '|';
        for (const auto& v : cells(r)) out << ' ' << md_escape(v) << " |";
        out << '\n';
      }
      break;
    }
  }
}

void write_timing(std::ostream& out, const std::vector<TimingRecord>& rows,
                  ReportFormat fmt) {
  static const char* kCols[] = {"problem",   "m",      "procedure",
                                "precision", "status", "error",
                                "mean_seconds", "reps"};
  auto row_cells = [](const TimingRecord& r) {
    return std::vector<std::string>{r.problem,
                                    std::to_string(r.m),
                                    std::to_string(r.procedure),
                                    std::string(precision_name(r.precision)),
                                    r.ok ? "ok" : "failed",
                                    r.error,
                                    num(r.mean_seconds),
                                    std::to_string(r.reps)};
  };
  switch (fmt) {
    case ReportFormat::Csv: {
      bool first = true;
      for (const char* c : kCols) {
        out << (first ? "" : ",") << c;
        first = false;
      }
      out << '\n';
      for (const auto& r : rows) {
        const auto v = row_cells(r);
        for (std::size_t k = 0; k < v.size(); ++k) {
          out << (k ? "," : "") << csv_quote(v[k]);
        }
        out << '\n';
      }
      break;
    }
    case ReportFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["problem"] = r.problem;
        j["m"] = r.m;
        j["procedure"] = r.procedure;
        j["precision"] = precision_name(r.precision);
        j["status"] = r.ok ? "ok" : "failed";
        j["error"] = r.ok ? nlohmann::ordered_json(nullptr)
                          : nlohmann::ordered_json(r.error);
        j["mean_seconds"] = jnum(r.mean_seconds);
        j["reps"] = r.reps;
        arr.push_back(std::move(j));
      }
      nlohmann::ordered_json doc;
      doc["rows"] = std::move(arr);
      out << doc.dump(2) << '\n';
      break;
    }
    case ReportFormat::Markdown: {
      out << '|';
      for (const char* c : kCols) out << ' ' << c << " |";
      out << "\n|";
      for (std::size_t k = 0; k < std::size(kCols); ++k) out << " --- |";
      out << '\n';
      for (const auto& r : rows) {
        out << '|';
        for (const auto& v : row_cells(r)) out << ' ' << md_escape(v) << " |";
        out << '\n';
      }
      break;
    }
  }
}

}  // namespace mfpt
