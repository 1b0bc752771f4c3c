#include "lieinv/report.hpp"

#include <algorithm>

namespace lieinv {

void Report::add(std::string name, bool pass, std::string detail) {
  verdicts.push_back(Verdict{std::move(name), pass, std::move(detail)});
}

bool Report::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

const Verdict* Report::find(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& v : other.verdicts) add(prefix + v.name, v.pass, v.detail);
}

}  // namespace lieinv
