#include "probe/checker/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace probe::checker {

namespace {

nlohmann::json quantity_json(const std::optional<Quantity>& q) {
  if (!q) return nullptr;
  return q->approx;
}

std::string csv_field(const std::optional<Quantity>& q) { return q ? format_double(q->approx) : "undefined"; }

}  // namespace

std::string format_double(double value) {
  char buf[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

std::string format_significant(double value, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string to_json(const Report& report, bool timing) {
  nlohmann::ordered_json j;
  j["property"] = report.property;
  j["verdict"] = to_string(report.verdict);
  j["decidedRound"] = report.decided_round;
  j["fullyExpanded"] = report.fully_expanded;
  j["stopReason"] = report.stop_reason;
  if (!report.diagnostic.empty()) j["diagnostic"] = report.diagnostic;
  auto& its = j["iterations"] = nlohmann::ordered_json::array();
  for (const auto& rec : report.iterations) {
    nlohmann::ordered_json r;
    r["round"] = rec.round;
    r["states"] = rec.states;
    r["transitions"] = rec.transitions;
    r["frontier"] = rec.frontier;
    r["numerator"] = rec.numerator.approx;
    r["denominator"] = rec.denominator.approx;
    r["value"] = quantity_json(rec.value);
    if (rec.value && rec.value->exact) r["exactValue"] = rec.value->exact->get_str();
    r["outcome"] = to_string(rec.outcome);
    its.push_back(std::move(r));
  }
  j["wallClockSeconds"] = timing ? report.wall_clock_seconds : 0.0;
  return j.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "round,states,transitions,numerator,denominator,value\n";
  for (const auto& rec : report.iterations) {
    out << rec.round << ',' << rec.states << ',' << rec.transitions << ',' << format_double(rec.numerator.approx)
        << ',' << format_double(rec.denominator.approx) << ',' << csv_field(rec.value) << '\n';
  }
  return out.str();
}

std::string to_text(const Report& report, bool timing) {
  std::ostringstream out;
  out << "property  " << report.property << '\n';
  for (const auto& rec : report.iterations) {
    out << "round " << rec.round << ": states " << rec.states << ", transitions " << rec.transitions
        << ", frontier " << rec.frontier << ", value ";
    if (!rec.value) {
      out << "undefined";
    } else {
      out << format_significant(rec.value->approx, 6);
      if (rec.value->exact && rec.value->exact->get_str().size() <= 40) out << " (" << rec.value->exact->get_str() << ")";
    }
    out << " -> " << to_string(rec.outcome) << '\n';
  }
  out << "verdict   " << to_string(report.verdict);
  if (report.decided_round) out << " at round " << report.decided_round;
  out << " (" << report.stop_reason << ")\n";
  if (!report.diagnostic.empty()) out << "note      " << report.diagnostic << '\n';
  if (timing) out << "time      " << format_significant(report.wall_clock_seconds, 3) << " s\n";
  return out.str();
}

}  // namespace probe::checker
