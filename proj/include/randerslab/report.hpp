#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace randerslab {

// JSON value with insertion-ordered object keys, so a report serializes to
// the same bytes on every run. Doubles print with 17 significant digits;
// non-finite doubles print as the strings "inf", "-inf", "nan".
class Json {
  public:
    using Array = std::vector<Json>;
    using Object = std::vector<std::pair<std::string, Json>>;

    Json() : v_(nullptr) {}
    Json(bool b) : v_(b) {}
    Json(int i) : v_((long long)i) {}
    Json(long long i) : v_(i) {}
    Json(size_t i) : v_((long long)i) {}
    Json(double d) : v_(d) {}
    Json(const char* s) : v_(std::string(s)) {}
    Json(std::string s) : v_(std::move(s)) {}

    static Json object() { Json j; j.v_ = Object{}; return j; }
    static Json array() { Json j; j.v_ = Array{}; return j; }

    Json& set(const std::string& key, Json value);  // append, or overwrite in place
    Json& push(Json value);
    const Json* find(const std::string& key) const;

    bool is_object() const { return std::holds_alternative<Object>(v_); }
    const Array* as_array() const { return std::get_if<Array>(&v_); }
    const bool* as_bool() const { return std::get_if<bool>(&v_); }
    const std::string* as_string() const { return std::get_if<std::string>(&v_); }
    std::string dump(int indent = 2) const;

  private:
    void dump_to(std::string& out, int indent, int depth) const;
    std::variant<std::nullptr_t, bool, long long, double, std::string, Array, Object> v_;
};

std::string format_double(double d);  // %.17g with the non-finite convention above

// CSV with a header row; all columns must share a length.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace randerslab
