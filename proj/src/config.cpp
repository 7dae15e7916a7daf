#include "iho/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "iho/errors.hpp"

namespace iho {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

double parse_double(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    double v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ConfigError(what + ": '" + text + "' is not a number");
    return v;
}

int parse_int(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ConfigError(what + ": '" + text + "' is not an integer");
    if (v < INT32_MIN || v > INT32_MAX)
        throw ConfigError(what + ": '" + text + "' out of range");
    return static_cast<int>(v);
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return from_string(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

Config Config::from_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": malformed section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty())
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": empty section name");
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        const std::string full = section.empty() ? key : section + "." + key;
        if (!cfg.kv_.emplace(full, value).second)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": duplicate key '" + full + "'");
    }
    return cfg;
}

const std::string* Config::find(const std::string& key) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return nullptr;
    used_.insert(key);
    return &it->second;
}

bool Config::has(const std::string& key) const { return kv_.count(key) != 0; }

std::string Config::get_string(const std::string& key) {
    const std::string* v = find(key);
    if (!v) throw ConfigError("missing required key '" + key + "'");
    return *v;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) {
    const std::string* v = find(key);
    return v ? *v : fallback;
}

double Config::get_double(const std::string& key) {
    return parse_double(get_string(key), key);
}

double Config::get_double(const std::string& key, double fallback) {
    const std::string* v = find(key);
    return v ? parse_double(*v, key) : fallback;
}

int Config::get_int(const std::string& key) {
    return parse_int(get_string(key), key);
}

int Config::get_int(const std::string& key, int fallback) {
    const std::string* v = find(key);
    return v ? parse_int(*v, key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) {
    const std::string* v = find(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "yes" || *v == "1") return true;
    if (*v == "false" || *v == "no" || *v == "0") return false;
    throw ConfigError(key + ": '" + *v + "' is not a boolean");
}

std::vector<double> Config::get_double_list(const std::string& key,
                                            const std::vector<double>& fallback) {
    const std::string* v = find(key);
    if (!v) return fallback;
    std::vector<double> out;
    std::string token;
    std::istringstream in(*v);
    while (std::getline(in, token, ','))
        out.push_back(parse_double(token, key));
    if (out.empty()) throw ConfigError(key + ": empty list");
    return out;
}

void Config::set(const std::string& key, const std::string& value) {
    kv_[key] = value;
    used_.erase(key);
}

void Config::check_all_consumed() const {
    for (const auto& [key, value] : kv_) {
        if (key == "experiment") continue;
        if (!used_.count(key))
            throw ConfigError("unknown key '" + key +
                              "' (misspelled or not used by this experiment)");
    }
}

}  // namespace iho
