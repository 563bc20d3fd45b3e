#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sunit/bigint.hpp"

namespace sunit {

// Flat key=value configuration. Lines starting with '#' are comments. A JSON
// object can be merged on top, and explicit CLI flags override both.
class ExperimentConfig {
 public:
  void set(const std::string& key, const std::string& value) {
    values_[key] = value;
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw std::invalid_argument("config: missing key '" + key + "'");
    return *v;
  }

  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const {
    auto v = get(key);
    return v ? parse_u64(key, *v) : fallback;
  }

  std::uint64_t require_u64(const std::string& key) const {
    return parse_u64(key, require(key));
  }

  double require_double(const std::string& key) const {
    return parse_double(key, require(key));
  }

  double get_double(const std::string& key, double fallback) const {
    auto v = get(key);
    return v ? parse_double(key, *v) : fallback;
  }

  Natural require_natural(const std::string& key) const {
    try {
      return parse_natural(require(key));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("config: key '" + key +
                                  "' is not a decimal natural");
    }
  }

  std::optional<std::uint64_t> optional_u64(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return parse_u64(key, *v);
  }

  // Comma-separated list of primes, e.g. "2,3,5".
  std::vector<std::uint64_t> require_u64_list(const std::string& key) const {
    const std::string raw = require(key);
    std::vector<std::uint64_t> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      out.push_back(parse_u64(key, item));
    }
    return out;
  }

  const std::map<std::string, std::string>& values() const { return values_; }

  void merge_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
      throw std::invalid_argument("config: cannot read " + file.string());
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::string trimmed = trim(line);
      if (trimmed.empty() || trimmed[0] == '#') continue;
      const std::size_t eq = trimmed.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                    " of " + file.string() + " is not key=value");
      }
      set(trim(trimmed.substr(0, eq)), trim(trimmed.substr(eq + 1)));
    }
  }

  void merge_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) {
      throw std::invalid_argument("config: JSON override must be an object");
    }
    for (const auto& [key, value] : j.items()) {
      if (value.is_string()) {
        set(key, value.get<std::string>());
      } else if (value.is_number_integer()) {
        set(key, std::to_string(value.get<long long>()));
      } else if (value.is_number_unsigned()) {
        set(key, std::to_string(value.get<unsigned long long>()));
      } else if (value.is_number_float()) {
        std::ostringstream os;
        os.precision(17);
        os << value.get<double>();
        set(key, os.str());
      } else if (value.is_boolean()) {
        set(key, value.get<bool>() ? "1" : "0");
      } else {
        throw std::invalid_argument("config: unsupported JSON value for key '" +
                                    key + "'");
      }
    }
  }

 private:
  static std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  static std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
      std::size_t pos = 0;
      const unsigned long long parsed = std::stoull(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return parsed;
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key '" + key +
                                  "' is not an unsigned integer: " + v);
    }
  }

  static double parse_double(const std::string& key, const std::string& v) {
    try {
      std::size_t pos = 0;
      const double parsed = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return parsed;
    } catch (const std::exception&) {
      throw std::invalid_argument("config: key '" + key +
                                  "' is not a number: " + v);
    }
  }

  std::map<std::string, std::string> values_;
};

}  // namespace sunit
