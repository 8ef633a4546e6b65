// JSON and text encodings shared by the CLI and the result cache.
// Colorings encode as a digit string over 0..r-1 (position 1 first) when
// r <= 10, and as comma-separated integers otherwise.
#pragma once

#include <json.hpp>

#include "zschur/core.hpp"
#include "zschur/tables.hpp"
#include "zschur/witness.hpp"

namespace zschur {

std::string encode_coloring(const Coloring& chi, int r);
Coloring parse_coloring(const std::string& text, int r);  // throws on bad input

std::string palette_name(Palette palette);
Palette palette_from_name(const std::string& name);

std::string status_name(Status status);

nlohmann::json to_json(const Solution& sol);
nlohmann::json to_json(const SearchOutcome& outcome, int r);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const Expectation& expected);
nlohmann::json to_json(const CellResult& cell);
nlohmann::json to_json(const ConjectureReport& report);

SearchOutcome outcome_from_json(const nlohmann::json& j, int r);
Expectation expectation_from_json(const nlohmann::json& j);
CellResult cell_from_json(const nlohmann::json& j);

}  // namespace zschur
