#include "cpforge/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cpforge::config {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    std::string source;

    [[noreturn]] void fail(const std::string& message) const {
        std::ostringstream os;
        os << source << ":" << line << ": " << message;
        throw ConfigError(os.str());
    }

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char take() {
        char c = text[pos++];
        if (c == '\n') ++line;
        return c;
    }
    void skip_inline_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
    }
    void skip_ws_and_comments() {
        for (;;) {
            skip_inline_ws();
            if (peek() == '#') {
                while (!done() && peek() != '\n') ++pos;
            } else if (peek() == '\n' || peek() == '\r') {
                take();
            } else {
                return;
            }
        }
    }
};

bool is_key_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string parse_key(Cursor& in) {
    in.skip_inline_ws();
    std::string key;
    while (!in.done() && is_key_char(in.peek())) key.push_back(in.take());
    if (key.empty()) in.fail("expected a key");
    return key;
}

Value parse_scalar(Cursor& in);

std::map<std::string, Value> parse_inline_table(Cursor& in) {
    std::map<std::string, Value> table;
    in.take();  // '{'
    for (;;) {
        in.skip_inline_ws();
        if (in.peek() == '}') {
            in.take();
            return table;
        }
        std::string key = parse_key(in);
        in.skip_inline_ws();
        if (in.peek() != '=') in.fail("expected '=' in inline table after '" + key + "'");
        in.take();
        in.skip_inline_ws();
        if (in.peek() == '{' || in.peek() == '[')
            in.fail("inline tables hold scalar values only");
        table[key] = parse_scalar(in);
        in.skip_inline_ws();
        if (in.peek() == ',') {
            in.take();
            continue;
        }
        if (in.peek() == '}') {
            in.take();
            return table;
        }
        in.fail("expected ',' or '}' in inline table");
    }
}

Value parse_scalar(Cursor& in) {
    Value v;
    v.line = in.line;
    if (in.peek() == '"') {
        in.take();
        v.kind = Value::Kind::String;
        while (!in.done() && in.peek() != '"') {
            if (in.peek() == '\n') in.fail("unterminated string");
            v.string.push_back(in.take());
        }
        if (in.done()) in.fail("unterminated string");
        in.take();
        return v;
    }
    std::string token;
    while (!in.done() && (std::isalnum(static_cast<unsigned char>(in.peek())) ||
                          in.peek() == '+' || in.peek() == '-' ||
                          in.peek() == '.' || in.peek() == '_'))
        token.push_back(in.take());
    if (token == "true" || token == "false") {
        v.kind = Value::Kind::Boolean;
        v.boolean = token == "true";
        return v;
    }
    char* end = nullptr;
    v.number = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size())
        in.fail("cannot parse value '" + token + "'");
    v.kind = Value::Kind::Number;
    return v;
}

Value parse_value(Cursor& in) {
    in.skip_inline_ws();
    Value v;
    v.line = in.line;
    if (in.peek() == '[') {
        in.take();
        bool first = true;
        bool table_mode = false;
        for (;;) {
            in.skip_ws_and_comments();
            if (in.peek() == ']') {
                in.take();
                break;
            }
            if (first) {
                table_mode = in.peek() == '{';
                v.kind = table_mode ? Value::Kind::TableArray
                                    : Value::Kind::NumberArray;
                first = false;
            }
            if (table_mode) {
                if (in.peek() != '{') in.fail("expected inline table in array");
                v.tables.push_back(parse_inline_table(in));
            } else {
                Value item = parse_scalar(in);
                if (item.kind != Value::Kind::Number)
                    in.fail("arrays hold numbers or inline tables");
                v.numbers.push_back(item.number);
            }
            in.skip_ws_and_comments();
            if (in.peek() == ',') {
                in.take();
                continue;
            }
            if (in.peek() == ']') {
                in.take();
                break;
            }
            in.fail("expected ',' or ']' in array");
        }
        if (first) v.kind = Value::Kind::NumberArray;  // empty array
        return v;
    }
    return parse_scalar(in);
}

}  // namespace

const Value* Table::find(const std::string& key) const {
    auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
}

const Table* Table::child(const std::string& name) const {
    auto it = children.find(name);
    return it == children.end() ? nullptr : &it->second;
}

double Table::number(const std::string& key, const std::string& where) const {
    const Value* v = find(key);
    if (!v || v->kind != Value::Kind::Number)
        throw ConfigError(where + ": missing numeric key '" + key + "'");
    return v->number;
}

double Table::number_or(const std::string& key, double fallback) const {
    const Value* v = find(key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::Number)
        throw ConfigError("key '" + key + "' must be numeric");
    return v->number;
}

std::string Table::string(const std::string& key,
                          const std::string& where) const {
    const Value* v = find(key);
    if (!v || v->kind != Value::Kind::String)
        throw ConfigError(where + ": missing string key '" + key + "'");
    return v->string;
}

std::string Table::string_or(const std::string& key,
                             const std::string& fallback) const {
    const Value* v = find(key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::String)
        throw ConfigError("key '" + key + "' must be a string");
    return v->string;
}

bool Table::boolean_or(const std::string& key, bool fallback) const {
    const Value* v = find(key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::Boolean)
        throw ConfigError("key '" + key + "' must be a boolean");
    return v->boolean;
}

const std::vector<double>& Table::number_array(const std::string& key,
                                               const std::string& where) const {
    const Value* v = find(key);
    if (!v || v->kind != Value::Kind::NumberArray)
        throw ConfigError(where + ": missing numeric array '" + key + "'");
    return v->numbers;
}

Table parse(const std::string& text, const std::string& source_name) {
    Table root;
    Cursor in{text, 0, 1, source_name};
    Table* current = &root;

    for (;;) {
        in.skip_ws_and_comments();
        if (in.done()) return root;

        if (in.peek() == '[') {
            in.take();
            current = &root;
            for (;;) {
                std::string part = parse_key(in);
                current = &current->children[part];
                in.skip_inline_ws();
                if (in.peek() == '.') {
                    in.take();
                    continue;
                }
                if (in.peek() == ']') {
                    in.take();
                    break;
                }
                in.fail("expected '.' or ']' in section header");
            }
            continue;
        }

        std::string key = parse_key(in);
        in.skip_inline_ws();
        if (in.peek() != '=') in.fail("expected '=' after key '" + key + "'");
        in.take();
        current->values[key] = parse_value(in);
        in.skip_inline_ws();
        if (!in.done() && in.peek() != '\n' && in.peek() != '\r' &&
            in.peek() != '#')
            in.fail("unexpected trailing characters after value for '" + key + "'");
    }
}

Table parse_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse(buffer.str(), path);
}

}  // namespace cpforge::config
