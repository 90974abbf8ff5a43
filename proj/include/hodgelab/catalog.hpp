#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgelab/common.hpp"
#include "hodgelab/derhamring.hpp"
#include "hodgelab/hdrring.hpp"
#include "hodgelab/hodgering.hpp"

namespace hodgelab {

/// A single number known for a partial entry, e.g. {"h^{0,1}", 1}.
struct KnownNumber {
  std::string label;
  Integer value;
};

/// Named class with its Hodge and de Rham data. Partial entries carry only
/// the numbers that are actually known and refuse to take part in products.
struct VarietyClass {
  std::string name;
  int dim = 0;
  std::optional<HodgeDiamond> hodge;   ///< nullopt: abstract
  std::optional<DeRhamVector> derham;  ///< nullopt: unknown
  std::string derham_source;           ///< "via-s", "pinned" or "unknown"
  std::vector<KnownNumber> known;
  std::string notes;

  bool concrete() const { return hodge.has_value() && derham.has_value(); }
  /// Throws PartialEntry when the entry is not concrete.
  HdrElement element() const;
};

/// All entries in a fixed order.
const std::vector<VarietyClass>& catalog_entries();
/// Throws UnknownName.
const VarietyClass& catalog_get(const std::string& name);
/// Componentwise product of the named classes; the empty list is the point.
/// Throws UnknownName or PartialEntry.
HdrElement catalog_product(const std::vector<std::string>& names);

}  // namespace hodgelab
