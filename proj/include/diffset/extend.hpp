#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diffset/diffcore.hpp"
#include "diffset/groups.hpp"

namespace diffset {

/// How the add/remove condition is evaluated.
/// Auto uses the sumset test 2g not in S(D) for odd v and the literal
/// (g - D) cap (D - g) condition otherwise; the sumset test is wrong for even v.
enum class ExtensionRoute { Auto, Sumset, General };

/// Elements g outside D with (g - D) cap (D - g) empty. Throws std::invalid_argument unless D is a DS.
IndexSet addable_elements(const GroupSpec& group, std::span<const std::uint32_t> set,
                          ExtensionRoute route = ExtensionRoute::Auto);

/// Elements d of D with (d - D) cap (D - d) = {0}. Throws std::invalid_argument unless D is a DS with lambda >= 1.
IndexSet removable_elements(const GroupSpec& group, std::span<const std::uint32_t> set,
                            ExtensionRoute route = ExtensionRoute::Auto);

struct Extension {
  std::uint32_t element;
  Classification result;
  bool degenerate;  // result is a perfect DS rather than a proper ADS
};

struct ExtensionReport {
  GroupSpec group;
  IndexSet set;
  Classification base;
  std::vector<Extension> addable;
  std::vector<Extension> removable;
};

/// Full report; every listed result has been re-classified and matches
/// (v, k+1, lambda, v-1-2k) for additions and (v, k-1, lambda-1, 2(k-1)) for removals.
ExtensionReport extension_report(const GroupSpec& group, std::span<const std::uint32_t> set);

struct SetRecord {
  GroupSpec group;
  IndexSet set;
  std::string label;
};

struct ScanFailure {
  std::size_t index;
  std::string label;
  std::string message;
};

struct ScanResult {
  std::vector<std::pair<std::size_t, ExtensionReport>> reports;  // (record index, report), input order
  std::vector<ScanFailure> failures;
};

/// Reports only records with a nonempty addable or removable list. Per-record errors are collected.
ScanResult scan_database(std::span<const SetRecord> records, unsigned jobs = 1);

}  // namespace diffset
