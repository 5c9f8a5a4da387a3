#pragma once

// Named properties for invariance testing, each paired with a configuration
// sampler suited to the group's carrier: affine points (with hyperplanes and
// quadrics) for matrix groups of space, pairs (z : 1) and plane circles for
// Moebius maps, circle coordinates for the circle groups.

#include <optional>
#include <string>
#include <vector>

#include "erlangen/groups.hpp"

namespace erlangen {

struct PropertySpec {
  Property property;
  ConfigSampler sampler;
};

/// euclidean-distance, angle, cross-ratio, incidence, tangency,
/// collinearity, ck-distance.
const std::vector<std::string>& builtin_property_names();

/// `metric` is required for ck-distance ("klein-disk" or "elliptic") and
/// ignored otherwise. Throws PreconditionError for unknown names or a
/// missing metric, and InapplicableError when the property has no sampler
/// for this group.
PropertySpec builtin_property(const std::string& name, const GroupDescriptor& g,
                              const std::optional<std::string>& metric = {});

}  // namespace erlangen
