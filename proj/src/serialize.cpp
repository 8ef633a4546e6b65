#include "zschur/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace zschur {

using nlohmann::json;

std::string encode_coloring(const Coloring& chi, int r) {
  std::string out;
  if (r <= 10) {
    out.reserve(static_cast<size_t>(chi.length()));
    for (uint8_t c : chi.colors()) out.push_back(static_cast<char>('0' + c));
    return out;
  }
  for (int i = 0; i < chi.length(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(chi.color(i + 1));
  }
  return out;
}

Coloring parse_coloring(const std::string& text, int r) {
  std::vector<uint8_t> colors;
  if (text.find(',') == std::string::npos && r <= 10) {
    colors.reserve(text.size());
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("coloring digits must be 0-9");
      const int c = ch - '0';
      if (c >= r) throw std::invalid_argument("coloring digit exceeds r-1");
      colors.push_back(static_cast<uint8_t>(c));
    }
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      const int c = std::stoi(item);
      if (c < 0 || c >= r) throw std::invalid_argument("coloring entry outside 0..r-1");
      colors.push_back(static_cast<uint8_t>(c));
    }
  }
  return Coloring(std::move(colors));
}

std::string palette_name(Palette palette) {
  return palette == Palette::Binary ? "binary" : "full";
}

Palette palette_from_name(const std::string& name) {
  if (name == "binary") return Palette::Binary;
  if (name == "full") return Palette::Full;
  throw std::invalid_argument("unknown palette: " + name);
}

std::string status_name(Status status) {
  switch (status) {
    case Status::Finite: return "finite";
    case Status::Infinite: return "infinite";
    case Status::Unresolved: return "unresolved";
  }
  return "unresolved";
}

json to_json(const Solution& sol) {
  return json{{"parts", sol.parts}, {"target", sol.target}};
}

json to_json(const SearchOutcome& outcome, int r) {
  json j{{"status", status_name(outcome.status)},
         {"nodes", outcome.stats.nodes},
         {"elapsed_ms", outcome.stats.elapsed_ms}};
  if (outcome.status == Status::Finite) {
    j["value"] = outcome.value;
    j["witness"] = encode_coloring(outcome.witness, r);
  } else if (outcome.status == Status::Unresolved) {
    j["lower_bound"] = outcome.lower_bound;
    j["witness"] = encode_coloring(outcome.witness, r);
  }
  return j;
}

json to_json(const VerificationReport& report) {
  json j{{"family", report.family},
         {"k", report.k},
         {"length", report.length},
         {"claimed_bound", report.claimed_bound},
         {"avoids", report.avoids},
         {"counterexample", nullptr}};
  if (report.counterexample) {
    json ce = to_json(*report.counterexample);
    ce["color_sum"] = report.counterexample_color_sum;
    j["counterexample"] = ce;
  }
  return j;
}

json to_json(const Expectation& expected) {
  switch (expected.kind) {
    case ExpKind::Finite: return json{{"kind", "finite"}, {"value", expected.value}};
    case ExpKind::Infinite: return json{{"kind", "infinite"}};
    case ExpKind::LowerBoundOnly:
      return json{{"kind", "lower_bound_only"}, {"value", expected.value}};
  }
  return json{{"kind", "infinite"}};
}

namespace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::SkippedBudget: return "skipped-budget";
    case Verdict::ConsistentLowerBound: return "consistent-lower-bound";
  }
  return "mismatch";
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "match") return Verdict::Match;
  if (name == "mismatch") return Verdict::Mismatch;
  if (name == "skipped-budget") return Verdict::SkippedBudget;
  if (name == "consistent-lower-bound") return Verdict::ConsistentLowerBound;
  throw std::invalid_argument("unknown verdict: " + name);
}

}  // namespace

json to_json(const CellResult& cell) {
  return json{{"table", cell.table},
              {"k", cell.k},
              {"r", cell.r},
              {"palette", palette_name(cell.palette)},
              {"expected", to_json(cell.expected)},
              {"computed", to_json(cell.computed, cell.r)},
              {"verdict", verdict_name(cell.verdict)},
              {"new_result", cell.new_result},
              {"from_cache", cell.from_cache},
              {"elapsed_s", cell.elapsed_s}};
}

json to_json(const ConjectureReport& report) {
  const char* name = report.question == Question::Q1   ? "q1"
                     : report.question == Question::Q2 ? "q2"
                                                       : "q4";
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r{{"k", row.k},
           {"status", status_name(row.computed.status)},
           {"conjectured", row.conjectured},
           {"consistent", row.consistent}};
    if (row.computed.status == Status::Finite) r["computed"] = row.computed.value;
    if (row.computed.status == Status::Unresolved) r["lower_bound"] = row.computed.lower_bound;
    if (report.question == Question::Q4 && row.consistent) r["ratio"] = row.ratio;
    rows.push_back(std::move(r));
  }
  return json{{"question", name}, {"rows", std::move(rows)}};
}

SearchOutcome outcome_from_json(const json& j, int r) {
  SearchOutcome out;
  const std::string status = j.at("status").get<std::string>();
  out.stats.nodes = j.value("nodes", 0LL);
  out.stats.elapsed_ms = j.value("elapsed_ms", 0LL);
  if (status == "finite") {
    out.status = Status::Finite;
    out.value = j.at("value").get<long long>();
    out.witness = parse_coloring(j.at("witness").get<std::string>(), r);
  } else if (status == "infinite") {
    out.status = Status::Infinite;
  } else if (status == "unresolved") {
    out.status = Status::Unresolved;
    out.lower_bound = j.at("lower_bound").get<long long>();
    out.witness = parse_coloring(j.at("witness").get<std::string>(), r);
  } else {
    throw std::invalid_argument("unknown status: " + status);
  }
  return out;
}

Expectation expectation_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite") return {ExpKind::Finite, j.at("value").get<long long>()};
  if (kind == "infinite") return {ExpKind::Infinite, 0};
  if (kind == "lower_bound_only")
    return {ExpKind::LowerBoundOnly, j.at("value").get<long long>()};
  throw std::invalid_argument("unknown expectation kind: " + kind);
}

CellResult cell_from_json(const json& j) {
  CellResult cell;
  cell.table = j.at("table").get<int>();
  cell.k = j.at("k").get<int>();
  cell.r = j.at("r").get<int>();
  cell.palette = palette_from_name(j.at("palette").get<std::string>());
  cell.expected = expectation_from_json(j.at("expected"));
  cell.computed = outcome_from_json(j.at("computed"), cell.r);
  cell.verdict = verdict_from_name(j.at("verdict").get<std::string>());
  cell.new_result = j.value("new_result", false);
  cell.from_cache = j.value("from_cache", false);
  cell.elapsed_s = j.value("elapsed_s", 0.0);
  return cell;
}

}  // namespace zschur
