#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsgs/numerical_set.hpp"

namespace nsgs {

enum class EnumMode { ByGenus, ByFrobenius };

/// Enumeration range: every semigroup with genus (or Frobenius number) not
/// exceeding the limit.  Limits are hard-capped at desk scale; the
/// NSGS_MAX_BOUND environment variable may lower the caps, never raise them.
struct EnumBound {
    EnumMode mode = EnumMode::ByGenus;
    Int limit = 1;
};

std::string to_string(EnumMode mode);

/// Effective caps after the NSGS_MAX_BOUND override.
Int numerical_set_frobenius_cap();   // 24: full 2^(F-1) blow-up per F
Int semigroup_genus_cap();           // 20
Int semigroup_frobenius_cap();       // 40

using SetVisitor = std::function<void(const NumericalSet&)>;

/// Every proper numerical set with Frobenius number <= max_frobenius,
/// exactly once, ordered by Frobenius number and then by the gap bitmask
/// (bit v-1 encodes membership of v) as an integer.  Throws BoundExceeded
/// past the cap.
void enumerate_numerical_sets(Int max_frobenius, const SetVisitor& visit);
std::vector<NumericalSet> enumerate_numerical_sets(Int max_frobenius);

/// Every numerical semigroup within the bound, exactly once, in the same
/// canonical order.  Generated from the root {0,2,->} by repeatedly removing
/// minimal generators above the Frobenius number.  Throws BoundExceeded.
void enumerate_semigroups(const EnumBound& bound, const SetVisitor& visit);
std::vector<NumericalSet> enumerate_semigroups(const EnumBound& bound);

/// Independent route to the same stream: filters the full numerical-set
/// enumeration through is_semigroup.  Slower and reaches less far (the
/// underlying set enumeration is capped), but shares no code with the tree
/// generator; the two must agree wherever both apply.
void enumerate_semigroups_by_filter(const EnumBound& bound, const SetVisitor& visit);
std::vector<NumericalSet> enumerate_semigroups_by_filter(const EnumBound& bound);

struct VerificationFailure {
    std::string input;
    std::optional<std::string> kind;
    std::string expected;
    std::string got;
};

/// Outcome of replaying one registered claim against brute force over an
/// enumeration range.  Serialization keeps at most the first 100 failures;
/// failure_count carries the full total.
struct VerificationReport {
    std::string theorem;
    EnumBound bound;
    Int checked = 0;
    std::vector<VerificationFailure> failures;

    bool passed() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

/// Registered claim identifiers, in registry order.
const std::vector<std::string>& theorem_registry();
bool is_known_theorem(const std::string& theorem);
/// One-line description of what a registry entry checks.
std::string theorem_description(const std::string& theorem);
/// Range used by the self-test suite for this entry.
EnumBound theorem_default_bound(const std::string& theorem);

/// Checks every in-scope instance of the claim, never stopping at the first
/// failure.  Throws UnknownTheorem for an unregistered identifier and
/// BoundExceeded for unusable bounds.
VerificationReport verify_theorem(const std::string& theorem, const EnumBound& bound);

} // namespace nsgs
