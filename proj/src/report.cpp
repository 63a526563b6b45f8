#include "randerslab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace randerslab {

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if ((unsigned char)c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

std::string format_double(double d) {
    if (std::isnan(d)) return "\"nan\"";
    if (std::isinf(d)) return d > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

Json& Json::set(const std::string& key, Json value) {
    if (!is_object()) v_ = Object{};
    Object& obj = std::get<Object>(v_);
    for (auto& kv : obj) {
        if (kv.first == key) {
            kv.second = std::move(value);
            return *this;
        }
    }
    obj.emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (!std::holds_alternative<Array>(v_)) v_ = Array{};
    std::get<Array>(v_).push_back(std::move(value));
    return *this;
}

const Json* Json::find(const std::string& key) const {
    if (!is_object()) return nullptr;
    for (const auto& kv : std::get<Object>(v_))
        if (kv.first == key) return &kv.second;
    return nullptr;
}

void Json::dump_to(std::string& out, int indent, int depth) const {
    std::string pad(indent * (depth + 1), ' ');
    std::string close_pad(indent * depth, ' ');

    if (std::holds_alternative<std::nullptr_t>(v_)) {
        out += "null";
    } else if (auto* b = std::get_if<bool>(&v_)) {
        out += *b ? "true" : "false";
    } else if (auto* i = std::get_if<long long>(&v_)) {
        out += std::to_string(*i);
    } else if (auto* d = std::get_if<double>(&v_)) {
        out += format_double(*d);
    } else if (auto* s = std::get_if<std::string>(&v_)) {
        append_escaped(out, *s);
    } else if (auto* a = std::get_if<Array>(&v_)) {
        if (a->empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (size_t i = 0; i < a->size(); ++i) {
            out += pad;
            (*a)[i].dump_to(out, indent, depth + 1);
            out += (i + 1 < a->size()) ? ",\n" : "\n";
        }
        out += close_pad + "]";
    } else {
        const Object& obj = std::get<Object>(v_);
        if (obj.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        for (size_t i = 0; i < obj.size(); ++i) {
            out += pad;
            append_escaped(out, obj[i].first);
            out += ": ";
            obj[i].second.dump_to(out, indent, depth + 1);
            out += (i + 1 < obj.size()) ? ",\n" : "\n";
        }
        out += close_pad + "}";
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    out += '\n';
    return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns) {
    if (header.size() != columns.size())
        throw std::invalid_argument("csv_table: header/column count mismatch");
    size_t rows = columns.empty() ? 0 : columns[0].size();
    for (const auto& c : columns)
        if (c.size() != rows) throw std::invalid_argument("csv_table: ragged columns");

    std::string out;
    for (size_t j = 0; j < header.size(); ++j) {
        out += header[j];
        out += (j + 1 < header.size()) ? ',' : '\n';
    }
    char buf[40];
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < columns.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", columns[j][i]);
            out += buf;
            out += (j + 1 < columns.size()) ? ',' : '\n';
        }
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace randerslab
