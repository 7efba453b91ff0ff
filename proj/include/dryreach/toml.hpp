#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dryreach::toml {

// Small TOML-style document model covering what scenario files use: tables,
// array-of-tables headers, inline tables, arrays, strings, integers, floats
// and booleans, with '#' comments. Tables preserve insertion order so a
// document has a stable canonical serialization.
class Value;
using Array = std::vector<Value>;
using Entry = std::pair<std::string, Value>;
using Table = std::vector<Entry>;

class Value {
 public:
  enum class Kind { String, Integer, Float, Boolean, Array, Table };

  Value() : kind_(Kind::Table) {}

  static Value of_string(std::string s);
  static Value of_integer(long long v);
  static Value of_float(double v);
  static Value of_boolean(bool v);
  static Value of_array(Array a);
  static Value of_table();

  Kind kind() const { return kind_; }
  bool is_string() const { return kind_ == Kind::String; }
  bool is_integer() const { return kind_ == Kind::Integer; }
  bool is_float() const { return kind_ == Kind::Float; }
  bool is_number() const { return kind_ == Kind::Integer || kind_ == Kind::Float; }
  bool is_boolean() const { return kind_ == Kind::Boolean; }
  bool is_array() const { return kind_ == Kind::Array; }
  bool is_table() const { return kind_ == Kind::Table; }

  const std::string& as_string() const;
  long long as_integer() const;
  double as_number() const;  // integer or float
  bool as_boolean() const;
  const Array& as_array() const;
  Array& as_array();
  const Table& as_table() const;
  Table& as_table();

  // Table access. at() fails with ScenarioError when the key is absent.
  bool has(const std::string& key) const;
  const Value* find(const std::string& key) const;
  const Value& at(const std::string& key) const;
  Value& put(const std::string& key, Value v);

  // Structural equality; table comparison ignores entry order.
  bool operator==(const Value& other) const;
  bool operator!=(const Value& other) const { return !(*this == other); }

  // `origin` names the input in error messages (file path, "<input>", ...).
  static Value parse(const std::string& text, const std::string& origin = "<input>");
  static Value parse_file(const std::string& path);

  // Canonical text form; *this must be a table. Parsing the result yields an
  // equal document, and serializing it again yields identical bytes.
  std::string serialize() const;

 private:
  Kind kind_;
  std::string str_;
  long long int_ = 0;
  double float_ = 0.0;
  bool bool_ = false;
  Array array_;
  Table table_;
};

// Shortest decimal text that parses back to exactly `v` and is marked as a
// float (contains '.' or an exponent). Shared with the artifact writers.
std::string format_float(double v);

}  // namespace dryreach::toml
