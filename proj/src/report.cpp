#include "hdiff/report.hpp"

#include <algorithm>

namespace hdiff {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

void Report::add(std::string name, bool ok, std::string witness) {
  if (ok) witness.clear();
  checks_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness)});
}

void Report::skip(std::string name, std::string reason) {
  checks_.push_back({std::move(name), Status::Skipped, std::move(reason)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.status, c.witness});
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Fail; }));
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail) return &c;
  return nullptr;
}

std::vector<Check> Report::sorted() const {
  std::vector<Check> out = checks_;
  std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return out;
}

}  // namespace hdiff
