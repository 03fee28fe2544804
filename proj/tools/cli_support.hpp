#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "indist/measurement.hpp"
#include "indist/types.hpp"

namespace indist::cli {

using nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

// Rounds to 12 significant digits so the printed JSON is stable.
double sig12(double x);
ordered_json num(double x);
ordered_json cnum(cplx z);
ordered_json matrix(const Mat& m);
ordered_json table(const measurement::CoincidenceTable& t);

// Comma-separated list of exactly `count` numbers.
std::vector<double> parse_list(const std::string& text, std::size_t count);

// Reads key=value lines ('#' starts a comment) into "--key=value" tokens.
std::vector<std::string> config_tokens(const std::string& path);

// Moves a --config file's entries in front of the user's own flags so the
// flags win. `depth` is the number of leading subcommand words.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

struct Record {
    ordered_json config = ordered_json::object();
    ordered_json results = ordered_json::object();
    std::vector<std::string> refs;

    ordered_json to_json(const std::string& command) const;
};

// Flattens results into "path,value" rows.
std::string to_csv(const ordered_json& results);
std::string to_text(const ordered_json& record);

}  // namespace indist::cli
