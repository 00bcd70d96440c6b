#pragma once

#include <string>
#include <vector>

namespace hdiff {

enum class Status { Pass, Fail, Skipped };

const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;
};

/// Named pass/fail results of a verification run.
class Report {
 public:
  void add(std::string name, bool ok, std::string witness = {});
  void skip(std::string name, std::string reason);
  /// Appends the checks of other, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  /// Checks ordered by name (stable for equal names).
  std::vector<Check> sorted() const;
  /// First failing check, or nullptr.
  const Check* first_failure() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace hdiff
