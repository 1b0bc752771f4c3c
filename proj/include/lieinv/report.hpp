#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lieinv {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct AlgebraFingerprint {
  std::string name;
  std::size_t dim = 0;
  std::string hash;

  friend bool operator==(const AlgebraFingerprint&, const AlgebraFingerprint&) = default;
};

// Structured outcome of a check. Failing verdicts are content, not errors.
struct Report {
  std::string command;
  std::optional<AlgebraFingerprint> algebra;
  std::vector<Verdict> verdicts;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
  std::int64_t elapsed_ms = 0;

  void add(std::string name, bool pass, std::string detail = {});
  bool passed() const;
  const Verdict* find(const std::string& name) const;
  // Appends the other report's verdicts, prefixing their names.
  void merge(const Report& other, const std::string& prefix);

  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace lieinv
