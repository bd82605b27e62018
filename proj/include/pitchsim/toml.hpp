#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pitchsim/errors.hpp"

// Minimal TOML subset: [section] / [a.b] headers, key = value pairs with
// numbers, booleans, strings and (nested) arrays, '#' comments. Covers the
// scenario files this project reads; not a general TOML implementation.

namespace pitchsim::toml {

struct Value {
    enum class Type { Number, Boolean, String, Array } type = Type::Number;
    double num = 0.0;
    bool boolean = false;
    std::string str;
    std::vector<Value> arr;
};

class Table {
public:
    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    double number(const std::string& key) const {
        const Value& v = at(key);
        if (v.type != Value::Type::Number)
            throw config_error("config key '" + key + "' is not a number");
        return v.num;
    }
    double number_or(const std::string& key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    bool boolean(const std::string& key) const {
        const Value& v = at(key);
        if (v.type != Value::Type::Boolean)
            throw config_error("config key '" + key + "' is not a boolean");
        return v.boolean;
    }
    bool boolean_or(const std::string& key, bool fallback) const {
        return has(key) ? boolean(key) : fallback;
    }

    std::string string(const std::string& key) const {
        const Value& v = at(key);
        if (v.type != Value::Type::String)
            throw config_error("config key '" + key + "' is not a string");
        return v.str;
    }
    std::string string_or(const std::string& key, const std::string& fallback) const {
        return has(key) ? string(key) : fallback;
    }

    std::vector<double> numbers(const std::string& key) const {
        const Value& v = at(key);
        if (v.type != Value::Type::Array)
            throw config_error("config key '" + key + "' is not an array");
        std::vector<double> out;
        for (const auto& e : v.arr) {
            if (e.type != Value::Type::Number)
                throw config_error("config key '" + key + "' is not a numeric array");
            out.push_back(e.num);
        }
        return out;
    }

    // array of [t, v] pairs
    std::vector<std::pair<double, double>> pairs(const std::string& key) const {
        const Value& v = at(key);
        if (v.type != Value::Type::Array)
            throw config_error("config key '" + key + "' is not an array");
        std::vector<std::pair<double, double>> out;
        for (const auto& e : v.arr) {
            if (e.type != Value::Type::Array || e.arr.size() != 2 ||
                e.arr[0].type != Value::Type::Number || e.arr[1].type != Value::Type::Number)
                throw config_error("config key '" + key + "' must hold [t, v] pairs");
            out.emplace_back(e.arr[0].num, e.arr[1].num);
        }
        return out;
    }

    void set(const std::string& key, Value v) { kv_[key] = std::move(v); }

private:
    const Value& at(const std::string& key) const {
        auto it = kv_.find(key);
        if (it == kv_.end()) throw config_error("missing config key '" + key + "'");
        return it->second;
    }

    std::map<std::string, Value> kv_;
};

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

inline Value parse_value(const std::string& s, std::size_t& i, int line_no);

inline Value parse_array(const std::string& s, std::size_t& i, int line_no) {
    Value v;
    v.type = Value::Type::Array;
    ++i; // '['
    for (;;) {
        skip_ws(s, i);
        if (i >= s.size())
            throw config_error("unterminated array on line " + std::to_string(line_no));
        if (s[i] == ']') { ++i; break; }
        v.arr.push_back(parse_value(s, i, line_no));
        skip_ws(s, i);
        if (i < s.size() && s[i] == ',') { ++i; continue; }
        if (i < s.size() && s[i] == ']') { ++i; break; }
        throw config_error("expected ',' or ']' in array on line " + std::to_string(line_no));
    }
    return v;
}

inline Value parse_value(const std::string& s, std::size_t& i, int line_no) {
    skip_ws(s, i);
    if (i >= s.size()) throw config_error("missing value on line " + std::to_string(line_no));
    Value v;
    const char c = s[i];
    if (c == '[') return parse_array(s, i, line_no);
    if (c == '"') {
        v.type = Value::Type::String;
        ++i;
        while (i < s.size() && s[i] != '"') {
            if (s[i] == '\\' && i + 1 < s.size()) {
                ++i;
                switch (s[i]) {
                case 'n': v.str += '\n'; break;
                case 't': v.str += '\t'; break;
                default: v.str += s[i]; break;
                }
            } else {
                v.str += s[i];
            }
            ++i;
        }
        if (i >= s.size())
            throw config_error("unterminated string on line " + std::to_string(line_no));
        ++i;
        return v;
    }
    if (s.compare(i, 4, "true") == 0 &&
        (i + 4 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 4])))) {
        v.type = Value::Type::Boolean;
        v.boolean = true;
        i += 4;
        return v;
    }
    if (s.compare(i, 5, "false") == 0 &&
        (i + 5 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 5])))) {
        v.type = Value::Type::Boolean;
        v.boolean = false;
        i += 5;
        return v;
    }
    char* end = nullptr;
    const double num = std::strtod(s.c_str() + i, &end);
    if (end == s.c_str() + i)
        throw config_error("cannot parse value on line " + std::to_string(line_no) + ": " + s);
    v.type = Value::Type::Number;
    v.num = num;
    i = static_cast<std::size_t>(end - s.c_str());
    return v;
}

inline std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

} // namespace detail

inline Table parse(std::istream& in) {
    Table t;
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = detail::trim(detail::strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw config_error("malformed section header on line " + std::to_string(line_no));
            section = detail::trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw config_error("empty section name on line " + std::to_string(line_no));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("expected 'key = value' on line " + std::to_string(line_no));
        const std::string key = detail::trim(line.substr(0, eq));
        if (key.empty())
            throw config_error("empty key on line " + std::to_string(line_no));
        std::size_t i = eq + 1;
        Value v = detail::parse_value(line, i, line_no);
        detail::skip_ws(line, i);
        if (i != line.size())
            throw config_error("trailing characters after value on line " + std::to_string(line_no));
        t.set(section.empty() ? key : section + "." + key, std::move(v));
    }
    return t;
}

inline Table parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    return parse(in);
}

inline Table parse_string(const std::string& text) {
    std::istringstream ss(text);
    return parse(ss);
}

} // namespace pitchsim::toml
