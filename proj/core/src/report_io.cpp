/*
   Copyright 2026 The idealcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "idealcount/report_io.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace idealcount {
namespace {

using nlohmann::ordered_json;

// Full precision for JSON; values outside binary64 go out as strings.
ordered_json exact(const LogMagnitude& v) {
  const double d = v.to_double();
  if (std::isfinite(d) && (d != 0.0 || v.is_zero())) return d;
  return v.to_scientific(17);
}

// JSON has no infinity; overflowed doubles go out as strings.
ordered_json num(double d) {
  if (std::isfinite(d)) return d;
  return std::isnan(d) ? "nan" : (d > 0 ? "inf" : "-inf");
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

// RFC 4180 quoting for free-text cells.
std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

std::string csv_number(double value) { return LogMagnitude::from_double(value).to_scientific(6); }

std::string csv_number(const LogMagnitude& value) { return value.to_scientific(6); }

std::string constants_csv(const std::vector<ConstantRow>& rows) {
  std::ostringstream out;
  out << "n,lambda_S,lambda_K,a7,q1,a12,a13,q2,q3,q4,q5,q6,q7_upper,q8_upper,v1,v2,v3,alpha,xi1,xi2,xi3,xi4\n";
  for (const auto& r : rows) {
    out << r.n;
    for (const LogMagnitude* v : {&r.lambda_S, &r.lambda_K, &r.a7, &r.q1, &r.a12, &r.a13, &r.q2, &r.q3, &r.q4, &r.q5,
                                  &r.q6, &r.q7_upper, &r.q8_upper})
      out << ',' << csv_number(*v);
    for (double v : {r.v1, r.v2, r.v3, r.alpha, r.xi1, r.xi2, r.xi3, r.xi4}) out << ',' << csv_number(v);
    out << '\n';
  }
  return out.str();
}

std::string constants_json(const std::vector<ConstantRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"lambda_S", exact(r.lambda_S)},
                   {"lambda_K", exact(r.lambda_K)},
                   {"a7", exact(r.a7)},
                   {"q1", exact(r.q1)},
                   {"a12", exact(r.a12)},
                   {"a13", exact(r.a13)},
                   {"q2", exact(r.q2)},
                   {"q3", exact(r.q3)},
                   {"q4", exact(r.q4)},
                   {"q5", exact(r.q5)},
                   {"q6", exact(r.q6)},
                   {"q7_upper", exact(r.q7_upper)},
                   {"q8_upper", exact(r.q8_upper)},
                   {"v1", num(r.v1)},
                   {"v2", num(r.v2)},
                   {"v3", num(r.v3)},
                   {"alpha", num(r.alpha)},
                   {"xi1", num(r.xi1)},
                   {"xi2", num(r.xi2)},
                   {"xi3", num(r.xi3)},
                   {"xi4", num(r.xi4)}});
  }
  return dump({{"command", "constants"}, {"rows", arr}});
}

std::string table_csv(const TableReport& report) {
  std::ostringstream out;
  out << "table,n,column,computed,printed,rel_diff,ok,note\n";
  for (const auto& row : report.rows)
    for (const auto& c : row.cells) {
      out << to_string(report.id) << ',' << row.n << ',' << c.column << ',';
      if (report.id == TableId::T3)
        out << static_cast<long long>(std::llround(c.computed.to_double()));
      else
        out << csv_number(c.computed);
      out << ',' << csv_text(c.printed) << ',' << csv_number(c.rel_diff) << ',' << yes_no(c.ok) << ',' << csv_text(row.note) << '\n';
    }
  return out.str();
}

std::string table_json(const TableReport& report) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json cells = ordered_json::array();
    for (const auto& c : row.cells)
      cells.push_back({{"column", c.column},
                       {"computed", exact(c.computed)},
                       {"printed", c.printed},
                       {"rel_diff", c.rel_diff},
                       {"ok", c.ok}});
    ordered_json r = {{"n", row.n}, {"cells", cells}};
    if (report.id == TableId::T4) r["dominance_ok"] = row.extra_ok;
    if (!row.note.empty()) r["note"] = row.note;
    rows.push_back(r);
  }
  return dump({{"command", "table"},
               {"table", to_string(report.id)},
               {"pass", report.pass},
               {"worst_rel_diff", report.worst_rel_diff},
               {"rows", rows}});
}

std::string bound_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "x,I,kappa_x,error,rhs_improved,rhs_sunley,ratio,q1_rhs,below1_lhs,below1_rhs,above1_lhs,above1_rhs,log_lhs,"
         "log_rhs,checks_ok\n";
  for (const auto& p : report.points) {
    const bool ok = p.q1_ok && (!p.beyond_disc || (p.below1.ok && p.above1.ok && p.log_case.ok));
    out << csv_number(p.x) << ',' << p.ideal_count << ',' << csv_number(p.kappa_x) << ',' << csv_number(p.error) << ','
        << csv_number(p.rhs_improved) << ',' << csv_number(p.rhs_sunley) << ',' << csv_number(p.ratio) << ',';
    if (p.beyond_disc) {
      out << csv_number(p.q1_rhs) << ',' << csv_number(p.below1.lhs) << ',' << csv_number(p.below1.rhs) << ','
          << csv_number(p.above1.lhs) << ',' << csv_number(p.above1.rhs) << ',' << csv_number(p.log_case.lhs) << ','
          << csv_number(p.log_case.rhs);
    } else {
      out << ",,,,,,";
    }
    out << ',' << yes_no(ok) << '\n';
  }
  return out.str();
}

std::string bound_json(const BoundReport& report) {
  ordered_json pts = ordered_json::array();
  for (const auto& p : report.points) {
    ordered_json j = {{"x", p.x},
                      {"I", p.ideal_count},
                      {"kappa_x", p.kappa_x},
                      {"error", p.error},
                      {"rhs_improved", exact(p.rhs_improved)},
                      {"rhs_sunley", exact(p.rhs_sunley)},
                      {"ratio", p.ratio}};
    if (p.beyond_disc) {
      j["q1_rhs"] = p.q1_rhs;
      j["q1_ok"] = p.q1_ok;
      for (const auto& [name, c] : {std::pair<const char*, const PartialSumCheck*>{"below1", &p.below1},
                                    {"above1", &p.above1},
                                    {"log", &p.log_case}})
        j[name] = {{"theta", c->theta}, {"lhs", c->lhs}, {"rhs", c->rhs}, {"ok", c->ok}};
    }
    pts.push_back(j);
  }
  return dump({{"command", "verify"},
               {"field", report.label},
               {"degree", report.degree},
               {"kappa", {{"value", report.kappa.value},
                          {"method", to_string(report.kappa.method)},
                          {"est_error", report.kappa.est_error}}},
               {"pass", report.pass},
               {"max_ratio", report.max_ratio},
               {"observed_c", report.observed_c},
               {"auxiliary_ok", report.auxiliary_ok},
               {"points", pts}});
}

CountSummary summarize_count(const TauTable& table, double x) {
  CountSummary s;
  s.label = table.field().label;
  s.x = x;
  s.ideal_count = ideal_count(table, x);
  s.table_limit = table.X();
  const auto top = static_cast<std::uint64_t>(std::floor(x));
  for (std::uint64_t m = 1; m <= top; ++m) {
    const std::uint32_t t = table.tau(m);
    if (t > s.tau_max) {
      s.tau_max = t;
      s.tau_max_at = m;
    }
    if (t == 0) ++s.zero_count;
  }
  return s;
}

std::string count_csv(const CountSummary& s) {
  std::ostringstream out;
  out << "field,x,I,tau_max,tau_max_at,zero_count\n";
  out << csv_text(s.label) << ',' << csv_number(s.x) << ',' << s.ideal_count << ',' << s.tau_max << ',' << s.tau_max_at << ','
      << s.zero_count << '\n';
  return out.str();
}

std::string count_json(const CountSummary& s) {
  return dump({{"command", "count"},
               {"field", s.label},
               {"x", s.x},
               {"I", s.ideal_count},
               {"table_limit", s.table_limit},
               {"tau_max", s.tau_max},
               {"tau_max_at", s.tau_max_at},
               {"zero_count", s.zero_count}});
}

std::string integral_csv(const std::vector<IntegralRow>& rows) {
  std::ostringstream out;
  out << "eta,value,est_error,evaluations,below_bound\n";
  for (const auto& r : rows)
    out << csv_number(r.eta) << ',' << csv_number(r.result.value) << ',' << csv_number(r.result.est_error) << ','
        << r.result.evaluations << ',' << yes_no(r.result.value <= kUpsilonIntegralBound) << '\n';
  return out.str();
}

std::string integral_json(const std::vector<IntegralRow>& rows, double tol, bool pass) {
  ordered_json arr = ordered_json::array();
  const IntegralRow* best = nullptr;
  for (const auto& r : rows) {
    if (best == nullptr || r.result.value > best->result.value) best = &r;
    arr.push_back({{"eta", r.eta},
                   {"value", r.result.value},
                   {"est_error", r.result.est_error},
                   {"evaluations", r.result.evaluations}});
  }
  ordered_json doc = {{"command", "integral"}, {"bound", kUpsilonIntegralBound}, {"tol", tol}, {"pass", pass}};
  if (best != nullptr) doc["argmax_eta"] = best->eta;
  doc["rows"] = arr;
  return dump(doc);
}

std::string probe_csv(const std::vector<ProbeRow>& rows) {
  std::ostringstream out;
  out << "U,mu,modulus,est_error,below_26\n";
  for (const auto& r : rows)
    out << csv_number(r.upper) << ',' << csv_number(r.mu) << ',' << csv_number(r.result.value) << ','
        << csv_number(r.result.est_error) << ',' << yes_no(r.below_bound) << '\n';
  return out.str();
}

std::string probe_json(const std::vector<ProbeRow>& rows) {
  ordered_json arr = ordered_json::array();
  bool pass = true;
  for (const auto& r : rows) {
    pass = pass && r.below_bound;
    arr.push_back({{"U", r.upper},
                   {"mu", r.mu},
                   {"modulus", r.result.value},
                   {"est_error", r.result.est_error},
                   {"below_26", r.below_bound}});
  }
  return dump({{"command", "probe"}, {"probe", "satz204"}, {"pass", pass}, {"rows", arr}});
}

std::string summary_json(const std::string& check_name, bool pass, double worst_case, const std::string& details_path) {
  return dump({{"check_name", check_name}, {"pass", pass}, {"worst_case", worst_case}, {"details_path", details_path}});
}

}  // namespace idealcount
