#pragma once

#include <string>

#include "regset/cover.hpp"
#include "regset/regular.hpp"

namespace regset {

/// { "order": n, "identity": i, "mul": [[...]], "labels": [...] }
std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text,
                            TableCheck check = TableCheck::exhaustive,
                            unsigned seed = 12345);

/// Sorted index array, e.g. [0,2].
std::string element_set_to_json(const ElementSet& s);
ElementSet element_set_from_json(const std::string& text, int parent_order);

/// { "group": {...}, "S": [...], "D": [...], "a": a, "b": b }
std::string certificate_to_json(const RegularCertificate& cert);

/// { "k": k, "target_order": n, "assignment": [...] }
std::string covering_map_to_json(const CoveringMap& f);

}  // namespace regset
