#pragma once

// Canonical text forms: `name` or `name:key=value,key=value`. A value may be
// a parenthesised nested form, e.g. `bernardi:eta=1,gamma=-0.5,inner=(crescent)`.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subord_lab/error.hpp"

namespace subord_lab::text {

struct Form {
  std::string name;
  std::vector<std::pair<std::string, std::string>> args;

  bool has(std::string_view key) const {
    for (const auto& [k, v] : args)
      if (k == key) return true;
    return false;
  }

  const std::string& get(std::string_view key) const {
    for (const auto& [k, v] : args)
      if (k == key) return v;
    fail(ErrorKind::Parse, name + ": missing parameter '" + std::string(key) + "'");
  }

  void require_only(std::initializer_list<std::string_view> allowed) const {
    const std::set<std::string_view> ok(allowed);
    for (const auto& [k, v] : args)
      if (!ok.count(k)) fail(ErrorKind::Parse, name + ": unknown parameter '" + k + "'");
  }
};

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t')) --b;
  return std::string(s.substr(a, b - a));
}

inline Form parse(std::string_view s) {
  Form f;
  const auto colon = s.find(':');
  f.name = trim(s.substr(0, colon));
  if (f.name.empty()) fail(ErrorKind::Parse, "empty name in '" + std::string(s) + "'");
  if (colon == std::string_view::npos) return f;
  std::string_view rest = s.substr(colon + 1);
  std::size_t i = 0;
  while (i < rest.size()) {
    const auto eq = rest.find('=', i);
    if (eq == std::string_view::npos)
      fail(ErrorKind::Parse, "expected key=value in '" + std::string(s) + "'");
    std::string key = trim(rest.substr(i, eq - i));
    std::size_t j = eq + 1;
    int depth = 0;
    while (j < rest.size() && (depth > 0 || rest[j] != ',')) {
      if (rest[j] == '(') ++depth;
      if (rest[j] == ')') --depth;
      if (depth < 0) fail(ErrorKind::Parse, "unbalanced ')' in '" + std::string(s) + "'");
      ++j;
    }
    if (depth != 0) fail(ErrorKind::Parse, "unbalanced '(' in '" + std::string(s) + "'");
    std::string value = trim(rest.substr(eq + 1, j - eq - 1));
    if (value.size() >= 2 && value.front() == '(' && value.back() == ')')
      value = value.substr(1, value.size() - 2);
    if (key.empty() || value.empty())
      fail(ErrorKind::Parse, "empty key or value in '" + std::string(s) + "'");
    if (f.has(key)) fail(ErrorKind::Parse, "duplicate parameter '" + key + "'");
    f.args.emplace_back(std::move(key), std::move(value));
    i = j + 1;
  }
  return f;
}

inline double to_double(const std::string& v) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0' || !std::isfinite(x))
    fail(ErrorKind::Parse, "not a finite number: '" + v + "'");
  return x;
}

/// Shortest round-trip formatting, at most 17 significant digits.
inline std::string num(double x) {
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

/// Fixed 17 significant digits (machine-readable outputs).
inline std::string num17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace subord_lab::text
