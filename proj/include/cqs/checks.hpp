#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number.hpp"

namespace cqs {

/// How hard to cross-check quantities that have two independent routes.
/// check throws RouteMismatch on disagreement, report only records it.
enum class Verify { off, check, report };

struct RouteCheck {
  std::string name;
  std::string primary;
  std::string secondary;
  bool ok = true;
};

class CheckLog {
 public:
  void add(RouteCheck c) { entries_.push_back(std::move(c)); }
  const std::vector<RouteCheck>& entries() const { return entries_; }
  bool all_ok() const {
    for (const auto& e : entries_)
      if (!e.ok) return false;
    return true;
  }
  void merge(const CheckLog& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

 private:
  std::vector<RouteCheck> entries_;
};

template <class T>
bool agree(Verify mode, std::string_view name, const T& primary, const T& secondary,
           CheckLog* log = nullptr) {
  if (mode == Verify::off) return true;
  bool ok = primary == secondary;
  if (log || !ok) {
    RouteCheck c{std::string(name), to_string(primary), to_string(secondary), ok};
    if (!ok && mode == Verify::check)
      throw RouteMismatch(c.name + ": " + c.primary + " != " + c.secondary);
    if (log) log->add(std::move(c));
  }
  return ok;
}

}  // namespace cqs
