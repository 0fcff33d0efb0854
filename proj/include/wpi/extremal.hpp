#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wpi/canon.hpp"
#include "wpi/chem.hpp"

namespace wpi {

// ---------------------------------------------------------------------------
// Extensions
// ---------------------------------------------------------------------------

/// ext1 attaches two hexagons to a terminal hexagon, making it branched;
/// ext2 attaches one so it becomes angular; ext3 one so it becomes linear.
enum class ExtensionKind { ext1, ext2, ext3 };
std::string_view to_string(ExtensionKind k);

struct ExtensionStep {
  ExtensionKind kind = ExtensionKind::ext1;
  int target = 0;
  /// Lattice directions, from the target, of the new hexagon(s).
  std::vector<int> placement;
};

/// Every (terminal target, placement) pair for `kind`, realizable or not.
std::vector<ExtensionStep> possible_extensions(const PolycyclicSpec& spec, ExtensionKind kind);

/// New hexagons get ids max_id()+1 (and +2). Throws std::invalid_argument when
/// the target is not terminal or the placement does not match the kind, and
/// UnrealizableError when the result collides on the lattice.
PolycyclicSpec apply_extension(const PolycyclicSpec& spec, const ExtensionStep& step);

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// B/B_prime are benzenoid families, P/P_prime their phenylene counterparts.
enum class Family { L, B, B_prime, P, P_prime, other };
std::string_view to_string(Family f);

struct FamilyTag {
  Family family = Family::L;
  int h = 0;
};

PolycyclicSpec linear_chain_spec(int h, SystemKind kind);
/// h >= 1 for benzenoids, h >= 2 for phenylenes; std::invalid_argument otherwise.
BuiltSystem linear_chain(int h, SystemKind kind);

/// Every lattice-realizable member of the family, pairwise non-isomorphic,
/// found by trying all targets, placements and step orders from the
/// two-hexagon seed. The kind follows the family letter (B benzenoid, P
/// phenylene); L needs the explicit kind and defaults to benzenoid. Throws
/// std::invalid_argument on parity, range or kind mismatch.
std::vector<BuiltSystem> generate_family(const FamilyTag& tag);
std::vector<BuiltSystem> generate_family(const FamilyTag& tag, SystemKind kind);

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

/// Largest h accepted by enumerate_catafused unless overridden.
inline constexpr int kDefaultEnumerationLimit = 8;

/// Lattice shape of a spec, normalised over translations, rotations and
/// reflections of the hexagonal lattice.
std::vector<Cell> shape_key(const std::map<int, Cell>& cells);

/// Every lattice-realizable catacondensed system with exactly h hexagons, once
/// per isomorphism class, in a deterministic order. Throws GuardError when
/// h > limit and std::invalid_argument for h < 1 (h < 2 for phenylenes).
std::vector<BuiltSystem> enumerate_catafused(int h, SystemKind kind, int limit = kDefaultEnumerationLimit);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct SystemValues {
  std::int64_t wp_closed = 0;
  std::int64_t wp_formula = 0;
  std::int64_t wp_oracle = 0;
  bool agree() const noexcept { return wp_closed == wp_formula && wp_formula == wp_oracle; }
};

/// Closed form, gated closed formula and BFS oracle for one built system.
SystemValues wiener_polarity_three_ways(const BuiltSystem& sys);

struct ExtremalReport {
  int h = 0;
  SystemKind kind = SystemKind::benzenoid;
  int system_count = 0;
  std::int64_t min_value = 0;
  std::int64_t max_value = 0;
  /// One-line specs ("id parent dir; ...") of the extremal systems.
  std::vector<std::string> min_witnesses;
  std::vector<std::string> max_witnesses;
  int family_size = 0;
  int prime_family_size = 0;
  bool min_unique_is_linear = false;
  bool max_set_equals_family = false;
  /// Odd h only: every B'/P' member has the maximum b but s < h - 1.
  bool prime_falls_short = true;
  /// closed form = formula = oracle on every system.
  bool three_way_agreement = false;
  /// 2b + a = s - 1, b + 2 = t, s <= h - 1 on every system.
  bool type_identities = false;
  std::vector<std::string> counterexamples;

  bool passed() const noexcept {
    return min_unique_is_linear && max_set_equals_family && prime_falls_short && three_way_agreement &&
           type_identities && counterexamples.empty();
  }
};

/// Scans enumerate_catafused(h, kind) and checks the extremal
/// characterisation. Failures are reported, not thrown.
ExtremalReport verify_extremal(int h, SystemKind kind, int limit = kDefaultEnumerationLimit);

/// "0 -1 0; 1 0 0; ..." form of serialize_spec.
std::string spec_one_line(const PolycyclicSpec& spec);

}  // namespace wpi
