#pragma once

#include <string>
#include <vector>

namespace qflag {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;  // witness coordinates / message on failure
};

struct Report {
  std::string suite;
  std::vector<CheckItem> items;

  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    items.push_back(CheckItem{std::move(name), pass, std::move(detail)});
  }
  std::string text() const;
};

}  // namespace qflag
