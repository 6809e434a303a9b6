#pragma once

// Named verification runs behind `csfkit verify`.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace csfkit::cli {

struct VerifyOptions {
  std::optional<int> max_d;
  std::optional<std::pair<int, int>> m_range;
  std::optional<std::pair<int, int>> order;  // (n, n) for univariate runs
};

struct VerifyRow {
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct VerifyEntry {
  std::string id;
  std::string alias;
  std::string summary;
  std::function<std::vector<VerifyRow>(const VerifyOptions&)> run;
};

const std::vector<VerifyEntry>& verify_catalog();
/// Looks an entry up by id or alias.
const VerifyEntry* find_verify_entry(const std::string& name);

}  // namespace csfkit::cli
