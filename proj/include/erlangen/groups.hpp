#pragma once

// Transformation groups as values: a descriptor bundles identity,
// composition, inversion, a seeded sampler and a numeric membership test.
// Invariance is tested by falsification; an Invariant verdict only means
// that no counterexample turned up in the trials that were run.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "erlangen/contact.hpp"
#include "erlangen/projective.hpp"
#include "erlangen/transfers.hpp"

namespace erlangen {

/// Linear map of circle (tetracyclic, pentaspherical or Lie) coordinates.
struct CircleMap {
  ProjMap map;
};

using ContactMapRef = std::shared_ptr<const FiveMap>;

using MapVariant = std::variant<ProjMap, MoebiusMap, CircleMap, ContactMapRef>;

enum class MapKind { Projective, Moebius, Circle, Contact };

/// A map together with its inverse. Both halves have the same kind.
class Transformation {
 public:
  Transformation(ProjMap m);              // NOLINT: value-like wrapper
  Transformation(MoebiusMap m);           // NOLINT
  Transformation(CircleMap m);            // NOLINT
  Transformation(ContactMapRef forward, ContactMapRef inverse);

  MapKind kind() const;
  const MapVariant& forward() const { return forward_; }
  const MapVariant& inverse() const { return inverse_; }

 private:
  Transformation(MapVariant forward, MapVariant inverse);
  friend Transformation invert(const Transformation& t);
  friend Transformation compose(const Transformation& a,
                                const Transformation& b);

  MapVariant forward_;
  MapVariant inverse_;
};

/// (compose(a, b)) applies b first. Throws InapplicableError for mixed kinds.
Transformation compose(const Transformation& a, const Transformation& b);
Transformation invert(const Transformation& t);

/// Matrix kinds compare matrices up to scale (and the conjugation flag);
/// contact maps compare values at a fixed set of elements.
bool same_transformation(const Transformation& a, const Transformation& b,
                         double tol);

using Element = std::variant<ProjPoint, Hyperplane, Quadric>;

/// Nonempty heterogeneous list of elements.
class Configuration {
 public:
  explicit Configuration(std::vector<Element> elements);
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }
  Configuration with(Element extra) const;

 private:
  std::vector<Element> elements_;
};

bool equal_up_to_scale(const Element& a, const Element& b, double tol);

/// Action on one element:
///  - projective maps act linearly (points), contragrediently (hyperplanes)
///    and by congruence (quadrics);
///  - Moebius maps act on pairs (z : 1) of the complex line, on affine plane
///    points (x : y : w) through z = (x + i y) / w, and on circle-type
///    conics;
///  - circle maps act on coordinate vectors of their size, or of one more
///    entry with the last coordinate scaled by the square root of the
///    form factor (the inversive subgroup acting on Lie coordinates);
///  - contact maps act on affine points (x : y : z : p : q : 1).
/// Throws InapplicableError otherwise.
Element apply(const Transformation& t, const Element& e);
Configuration apply(const Transformation& t, const Configuration& c);

/// What a group's elements act on, used to pick configuration samplers.
enum class Carrier { AffineSpace, ComplexLine, CircleCoordinates };

struct GroupDescriptor {
  std::string name;
  int dimension = 0;
  Carrier carrier = Carrier::AffineSpace;
  Transformation identity;
  std::function<Transformation(const Transformation&, const Transformation&)>
      compose;
  std::function<Transformation(const Transformation&)> invert;
  std::function<Transformation(std::uint64_t seed)> sample;
  std::function<bool(const Transformation&, double tol)> contains;
};

/// Names: euclidean_isometries, principal (dimension 2 or 3), affine,
/// projective (any dimension >= 1), moebius (2), inversive_pentaspherical
/// and lie_sphere_extended (2 or 3). Throws PreconditionError otherwise.
GroupDescriptor builtin_group(const std::string& name, int dimension);
const std::vector<std::string>& builtin_group_names();

enum class AxiomCheck { Closure, Inverse, Identity };

struct AxiomFailure {
  AxiomCheck check;
  /// Per-trial seed: derive_seed(seed, trial).
  std::uint64_t seed;
  std::size_t trial;
};

struct AxiomReport {
  std::string group;
  std::size_t trials = 0;
  double tolerance = 0.0;
  std::size_t closure_failures = 0;
  std::size_t inverse_failures = 0;
  std::size_t identity_failures = 0;
  std::vector<AxiomFailure> failures;

  bool ok() const {
    return closure_failures + inverse_failures + identity_failures == 0;
  }
};

/// Trial k draws a = sample(derive_seed(s, 0)), b = sample(derive_seed(s, 1))
/// with s = derive_seed(seed, k), then checks contains(a * b); contains and
/// identity of a * a^-1; contains(identity) and identity * a = a = a * identity.
AxiomReport check_group_axioms(const GroupDescriptor& g, std::uint64_t seed,
                               std::size_t trials, double tol = 1e-8);

/// Set semantics: every image equals some element of c (a bijection for
/// invertible t and distinct elements).
bool stabilizes(const Transformation& t, const Configuration& c,
                double tol = 1e-9);

using PropertyValue = std::variant<Scalar, bool>;

/// A functional on configurations; nullopt means undefined on this input.
/// Library errors thrown while evaluating also count as undefined.
struct Property {
  std::string name;
  std::function<std::optional<PropertyValue>(const Configuration&)> evaluate;
};

using ConfigSampler = std::function<Configuration(std::uint64_t seed)>;

struct Witness {
  Configuration config;
  Transformation transformation;
  PropertyValue before;
  PropertyValue after;
  /// Trial seed; the configuration uses derive_seed(seed, 0) and the
  /// transformation derive_seed(seed, 1).
  std::uint64_t seed;
};

struct Verdict {
  bool invariant = true;
  std::string property;
  std::string group;
  std::size_t trials = 0;
  std::size_t executed = 0;
  std::size_t undefined = 0;
  double tolerance = 0.0;
  std::optional<Witness> witness;
};

/// Scalars match when |a - b| <= tol * max(1, |a|, |b|); booleans exactly.
bool values_match(const PropertyValue& a, const PropertyValue& b, double tol);

/// Stops at the first violation. Throws PreconditionError when trials is 0
/// or the property is undefined on more than 90% of the trials.
Verdict invariance_test(const Property& property, const GroupDescriptor& g,
                        const ConfigSampler& sampler, std::uint64_t seed,
                        std::size_t trials, double tol);

/// m maps the pair {(1 : i : 0), (1 : -i : 0)} to itself. Requires a real
/// 3x3 map.
bool is_similarity_via_circular_points(const ProjMap& m, double tol = 1e-9);
/// Bottom row (0, 0, *) and linear block A with A^T A proportional to I.
bool is_similarity_direct(const ProjMap& m, double tol = 1e-9);

/// count images of c under independent samples of g. Configurations fixed
/// by a normal subgroup give degenerate bodies; nothing detects that here.
std::vector<Configuration> orbit_sample(const Configuration& c,
                                        const GroupDescriptor& g,
                                        std::uint64_t seed, std::size_t count);

/// Restricts an affine-carrier group to the stabilizer of a finite point F
/// by following each sample with the translation carrying its image of F
/// back to F. Valid for groups that contain the translations.
GroupDescriptor point_stabilizer(const GroupDescriptor& g, const ProjPoint& f);

/// Real up to a global phase, within tol relative to the largest entry.
bool is_real_up_to_phase(const Matrix& m, double tol);
/// Translation by t as a projective map of size t.size() + 1.
ProjMap translation(const Eigen::VectorXd& t);

}  // namespace erlangen
