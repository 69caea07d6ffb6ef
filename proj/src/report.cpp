#include <fstream>
#include <ostream>

#include <json.hpp>

#include "scv/error.hpp"
#include "scv/harness.hpp"

namespace scv {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void emit_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["case"] = report.case_name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = params;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json rec;
    rec["p"] = r.p;
    rec["lhs"] = r.lhs;
    rec["rhs"] = r.rhs;
    rec["modulus"] = r.modulus;
    rec["status"] = std::string(to_string(r.status));
    if (!r.reason.empty()) rec["reason"] = r.reason;
    records.push_back(std::move(rec));
  }
  j["records"] = records;
  const Summary s = report.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}};
  j["elapsed_ms"] = report.elapsed_ms;
  out << j.dump(2) << '\n';
}

void emit_csv(const Report& report, std::ostream& out) {
  out << "case,p,lhs,rhs,modulus,status,reason\n";
  for (const auto& r : report.records) {
    out << csv_field(report.case_name) << ',' << r.p << ',' << r.lhs << ',' << r.rhs << ',' << r.modulus << ','
        << to_string(r.status) << ',' << csv_field(r.reason) << '\n';
  }
}

}  // namespace

void emit_report(const Report& report, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Json) {
    emit_json(report, out);
  } else {
    emit_csv(report, out);
  }
  if (!out) throw Error(ErrorKind::IoFailure, "report stream is not writable");
}

void emit_report(const Report& report, ReportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoFailure, "cannot open " + path);
  emit_report(report, format, out);
  out.close();
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write " + path);
}

}  // namespace scv
