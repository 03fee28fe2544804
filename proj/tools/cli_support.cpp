#include "cli_support.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "indist/version.hpp"

namespace indist::cli {

double sig12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

ordered_json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    return sig12(x);
}

ordered_json cnum(cplx z) { return ordered_json::array({num(z.real()), num(z.imag())}); }

ordered_json matrix(const Mat& m) {
    ordered_json re = ordered_json::array(), im = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json r = ordered_json::array(), c = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            r.push_back(num(m(i, j).real()));
            c.push_back(num(m(i, j).imag()));
        }
        re.push_back(r);
        im.push_back(c);
    }
    return {{"real", re}, {"imag", im}};
}

ordered_json table(const measurement::CoincidenceTable& t) {
    ordered_json probs = ordered_json::array();
    for (const auto& row : t.probs) probs.push_back({num(row[0]), num(row[1])});
    return {{"alice", measurement::to_string(t.obs_a)},
            {"bob", measurement::to_string(t.obs_b)},
            {"rows", t.rows},
            {"cols", t.cols},
            {"probs", probs}};
}

std::vector<double> parse_list(const std::string& text, std::size_t count) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ValidationError("'" + item + "' is not a number");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw ValidationError("'" + item + "' is not a number");
        if (!std::isfinite(v)) throw ValidationError("non-finite value in list");
        out.push_back(v);
    }
    if (out.size() != count) throw ValidationError("expected " + std::to_string(count) + " comma-separated values");
    return out;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::vector<std::string> config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file '" + path + "'");
    std::vector<std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ValidationError(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        while (!key.empty() && key.front() == '-') key.erase(0, 1);
        if (key.empty()) throw ValidationError(path + ":" + std::to_string(lineno) + ": empty key");
        const std::string value = trim(line.substr(eq + 1));
        out.push_back(value.empty() ? "--" + key : "--" + key + "=" + value);
    }
    return out;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> rest;
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw ValidationError("--config needs a path");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) return rest;
    std::size_t depth = 0;
    while (depth < rest.size() && !rest[depth].empty() && rest[depth][0] != '-') ++depth;
    auto file = config_tokens(path);
    std::vector<std::string> out(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(depth));
    out.insert(out.end(), file.begin(), file.end());
    out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(depth), rest.end());
    return out;
}

ordered_json Record::to_json(const std::string& command) const {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kVersion;
    j["command"] = command;
    j["config"] = config;
    j["results"] = results;
    j["provenance"] = {{"paper_eq_refs", refs}};
    return j;
}

namespace {

void flatten(const ordered_json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    } else {
        rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

}  // namespace

std::string to_csv(const ordered_json& results) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(results, "", rows);
    std::string out = "key,value\n";
    for (const auto& [k, v] : rows) {
        const bool quote = v.find(',') != std::string::npos;
        out += k + "," + (quote ? "\"" + v + "\"" : v) + "\n";
    }
    return out;
}

std::string to_text(const ordered_json& record) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(record, "", rows);
    std::string out;
    for (const auto& [k, v] : rows) out += k + " = " + v + "\n";
    return out;
}

}  // namespace indist::cli
