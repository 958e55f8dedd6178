#include "qcong/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "unknown";
}

namespace {

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw ArgumentError("unknown report status '" + s + "'");
}

}  // namespace

void VerificationReport::add_counterexample(Counterexample c) {
  ++mismatch_total;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(c));
  status = Status::fail;
}

void VerificationReport::mark_skipped(std::string reason) {
  status = Status::skipped;
  skip_reason = std::move(reason);
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["description"] = r.description;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  if (r.progression) {
    j["progression"] = {{"step", r.progression->first}, {"offset", r.progression->second}};
  } else {
    j["progression"] = nullptr;
  }
  if (r.modulus) {
    j["modulus"] = *r.modulus;
  } else {
    j["modulus"] = nullptr;
  }
  j["status"] = to_string(r.status);
  if (r.status == Status::skipped) j["skip_reason"] = r.skip_reason;
  j["terms_checked"] = r.terms_checked;
  j["mismatch_total"] = r.mismatch_total;
  auto cex = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) {
    // Values are decimal strings so arbitrarily large integers survive a JSON round trip.
    cex.push_back({{"index", c.index},
                   {"coefficient_index", c.coefficient_index},
                   {"found", c.found.get_str()},
                   {"expected", c.expected.get_str()}});
  }
  j["counterexamples"] = cex;
  j["notes"] = r.notes;
  j["wall_time_us"] = r.wall_time_us;
  return j;
}

VerificationReport report_from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.family = j.at("family").get<std::string>();
  r.description = j.at("description").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<long>());
  if (!j.at("progression").is_null()) {
    r.progression = {j["progression"].at("step").get<std::size_t>(),
                     j["progression"].at("offset").get<std::size_t>()};
  }
  if (!j.at("modulus").is_null()) r.modulus = j["modulus"].get<std::uint64_t>();
  r.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("skip_reason")) r.skip_reason = j["skip_reason"].get<std::string>();
  r.terms_checked = j.at("terms_checked").get<std::size_t>();
  r.mismatch_total = j.at("mismatch_total").get<std::size_t>();
  for (const auto& c : j.at("counterexamples")) {
    r.counterexamples.push_back({c.at("index").get<std::size_t>(),
                                 c.at("coefficient_index").get<std::size_t>(),
                                 mpz_class(c.at("found").get<std::string>()),
                                 mpz_class(c.at("expected").get<std::string>())});
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.wall_time_us = j.at("wall_time_us").get<std::int64_t>();
  return r;
}

std::string render_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "status" << std::setw(16) << "family" << std::setw(26)
      << "progression" << std::setw(8) << "mod" << std::setw(8) << "terms"
      << "details\n";
  for (const auto& r : reports) {
    std::string prog = "-";
    if (r.progression) {
      prog = std::to_string(r.progression->first) + "n+" + std::to_string(r.progression->second);
    }
    std::string detail = r.description;
    for (const auto& [k, v] : r.params) detail += " " + k + "=" + std::to_string(v);
    if (!r.counterexamples.empty()) {
      const auto& c = r.counterexamples.front();
      detail += " | first mismatch n=" + std::to_string(c.index) + " found " + c.found.get_str() +
                " expected " + c.expected.get_str();
    }
    if (r.status == Status::skipped) detail += " | skipped: " + r.skip_reason;
    out << std::left << std::setw(8) << to_string(r.status) << std::setw(16) << r.family
        << std::setw(26) << prog << std::setw(8)
        << (r.modulus ? std::to_string(*r.modulus) : std::string("exact")) << std::setw(8)
        << r.terms_checked << detail << '\n';
    for (const auto& note : r.notes) out << "        note: " << note << '\n';
  }
  return out.str();
}

}  // namespace qcong
