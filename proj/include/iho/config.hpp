#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace iho {

// Flat INI-style key/value store.  `[section]` headers prefix the keys that
// follow ("section.key"); full-line comments start with '#' or ';'.  Every
// lookup marks the key as consumed so check_all_consumed() can reject
// misspelled keys instead of silently ignoring them.
class Config {
  public:
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key);
    std::string get_string(const std::string& key, const std::string& fallback);
    double get_double(const std::string& key);
    double get_double(const std::string& key, double fallback);
    int get_int(const std::string& key);
    int get_int(const std::string& key, int fallback);
    bool get_bool(const std::string& key, bool fallback);
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback);

    // Sweep overrides; replaces or adds, and counts as not yet consumed.
    void set(const std::string& key, const std::string& value);

    // Throws naming the first key that was never read by the experiment.
    void check_all_consumed() const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
    mutable std::set<std::string> used_;

    const std::string* find(const std::string& key) const;
};

double parse_double(const std::string& text, const std::string& what);
int parse_int(const std::string& text, const std::string& what);

}  // namespace iho
