#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpforge::config {

// Parse error with file/line and the key path that failed.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Restricted TOML-style value: number, string, boolean, array of numbers,
// or array of inline tables with scalar members.
struct Value {
    enum class Kind { Number, String, Boolean, NumberArray, TableArray };
    Kind kind = Kind::Number;
    double number = 0.0;
    std::string string;
    bool boolean = false;
    std::vector<double> numbers;
    std::vector<std::map<std::string, Value>> tables;
    int line = 0;
};

// Section tree: values plus nested child tables ([a.b] headers).
class Table {
public:
    const Value* find(const std::string& key) const;
    const Table* child(const std::string& name) const;

    // checked typed accessors; `where` names the table in error messages
    double number(const std::string& key, const std::string& where) const;
    double number_or(const std::string& key, double fallback) const;
    std::string string(const std::string& key, const std::string& where) const;
    std::string string_or(const std::string& key,
                          const std::string& fallback) const;
    bool boolean_or(const std::string& key, bool fallback) const;
    const std::vector<double>& number_array(const std::string& key,
                                            const std::string& where) const;
    bool has(const std::string& key) const { return find(key) != nullptr; }

    std::map<std::string, Value> values;
    std::map<std::string, Table> children;
};

Table parse(const std::string& text, const std::string& source_name);
Table parse_file(const std::string& path);

}  // namespace cpforge::config
