#pragma once

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "classprod/theorem_suite.hpp"

// Serialization of verification reports (text and JSON) and scan results
// (CSV and JSON). CSV output is byte-deterministic: fixed header, LF line
// endings, `true`/`false` booleans, rows sorted by (group label, class rep).

namespace classprod {

inline const char* status_name(VerificationReport::Status s) {
  switch (s) {
    case VerificationReport::Status::pass:
      return "pass";
    case VerificationReport::Status::fail:
      return "fail";
    default:
      return "skipped";
  }
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_name"] = r.check_name;
  j["group"] = r.group_label;
  j["status"] = status_name(r.status);
  if (r.status == VerificationReport::Status::skipped)
    j["skip_reason"] = r.skip_reason;
  j["cases"] = r.cases_checked;
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const CheckCase& c : r.witnesses) {
    nlohmann::ordered_json w;
    w["label"] = c.label;
    w["ok"] = c.ok;
    nlohmann::ordered_json vals;
    for (const auto& [name, v] : c.values) vals[name] = v;
    w["values"] = std::move(vals);
    ws.push_back(std::move(w));
  }
  j["witnesses"] = std::move(ws);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline nlohmann::ordered_json reports_to_json(
    const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (const VerificationReport& r : reports) {
    arr.push_back(report_to_json(r));
    switch (r.status) {
      case VerificationReport::Status::pass:
        ++pass;
        break;
      case VerificationReport::Status::fail:
        ++fail;
        break;
      default:
        ++skipped;
    }
  }
  nlohmann::ordered_json j;
  j["reports"] = std::move(arr);
  j["summary"] = {{"pass", pass},
                  {"fail", fail},
                  {"skipped", skipped},
                  {"total", static_cast<int>(reports.size())}};
  return j;
}

inline void write_text_report(std::ostream& out, const VerificationReport& r) {
  const char* tag = r.status == VerificationReport::Status::pass   ? "[PASS]"
                    : r.status == VerificationReport::Status::fail ? "[FAIL]"
                                                                   : "[SKIP]";
  out << tag << ' ' << r.check_name << " on " << r.group_label;
  if (r.status == VerificationReport::Status::skipped) {
    out << " -- " << r.skip_reason << '\n';
    return;
  }
  out << " -- " << r.cases_checked << " cases, " << std::fixed
      << std::setprecision(1) << r.elapsed_ms << " ms\n";
  int shown = 0;
  for (const CheckCase& c : r.witnesses) {
    if (c.ok) continue;
    if (++shown > 8) {
      out << "       ...\n";
      break;
    }
    out << "       " << c.label << ':';
    for (const auto& [name, v] : c.values) out << ' ' << name << '=' << v;
    out << '\n';
  }
}

// ---- scan output ----------------------------------------------------------

inline void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << "group,order,solvable,supersolvable,class_rep,class_size,eta_aa,"
         "dl_mod_centralizer\n";
  for (const ScanRow& r : rows)
    out << r.group_label << ',' << r.order << ','
        << (r.solvable ? "true" : "false") << ','
        << (r.supersolvable ? "true" : "false") << ',' << r.class_rep << ','
        << r.class_size << ',' << r.eta_aa << ',' << r.dl_mod_centralizer
        << '\n';
}

inline void write_scan_summary_text(std::ostream& out, const ScanResult& res) {
  out << "scan: " << res.summary.group_count << " groups, "
      << res.summary.row_count << " rows (" << res.summary.solvable_row_count
      << " solvable), " << res.skipped.size() << " skipped\n";
  out << "max dl by eta over solvable rows:\n";
  for (auto [e, d] : res.summary.max_dl_by_eta)
    out << "  eta=" << e << ": max dl=" << d << '\n';
  out << "least q with dl <= q*eta + r over solvable rows:\n";
  for (auto [r, q] : res.summary.least_q)
    out << "  r=" << r << ": q=" << q << '\n';
  for (const ScanSkip& s : res.skipped)
    out << "skipped " << s.label << ": " << s.reason << '\n';
}

inline nlohmann::ordered_json scan_summary_json(const ScanResult& res) {
  nlohmann::ordered_json j;
  j["group_count"] = res.summary.group_count;
  j["row_count"] = res.summary.row_count;
  j["solvable_row_count"] = res.summary.solvable_row_count;
  nlohmann::ordered_json by_eta = nlohmann::ordered_json::array();
  for (auto [e, d] : res.summary.max_dl_by_eta)
    by_eta.push_back({{"eta", e}, {"max_dl", d}});
  j["max_dl_by_eta"] = std::move(by_eta);
  nlohmann::ordered_json qs = nlohmann::ordered_json::array();
  for (auto [r, q] : res.summary.least_q)
    qs.push_back({{"r", r}, {"q", q}});
  j["least_q"] = std::move(qs);
  nlohmann::ordered_json sk = nlohmann::ordered_json::array();
  for (const ScanSkip& s : res.skipped)
    sk.push_back({{"group", s.label}, {"reason", s.reason}});
  j["skipped"] = std::move(sk);
  return j;
}

}  // namespace classprod
