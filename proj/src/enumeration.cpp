#include "nsgs/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>

#include "nsgs/sum_ops.hpp"
#include "nsgs/symmetry.hpp"
#include "nsgs/young_diagram.hpp"

namespace nsgs {

namespace {

constexpr Int kNumericalSetFrobeniusCap = 24;
constexpr Int kSemigroupGenusCap = 20;
constexpr Int kSemigroupFrobeniusCap = 40;
// Pairwise claims square the instance count, so their range stays smaller.
constexpr Int kPairwiseFrobeniusCap = 12;

std::optional<Int> env_bound_override() {
    const char* raw = std::getenv("NSGS_MAX_BOUND");
    if (raw == nullptr) return std::nullopt;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) return std::nullopt;
    return static_cast<Int>(v);
}

Int capped(Int hard_cap) {
    const auto env = env_bound_override();
    return env ? std::min(hard_cap, *env) : hard_cap;
}

// Compact semigroup/set representation used inside the enumerators: bit v-1
// of `gaps` encodes that v is a gap; bit frobenius-1 is always set.  Only
// valid while the Frobenius number stays below 64, which the caps guarantee.
struct MaskSet {
    Int frobenius = 1;
    std::uint64_t gaps = 1;

    bool contains(Int x) const {
        if (x < 0) return false;
        if (x == 0 || x > frobenius) return true;
        return (gaps >> (x - 1) & 1) == 0;
    }
    Int genus() const { return std::popcount(gaps); }
    Int multiplicity() const {
        for (Int x = 1; x <= frobenius; ++x) {
            if (contains(x)) return x;
        }
        return frobenius + 1;
    }
    bool operator<(const MaskSet& o) const {
        return frobenius != o.frobenius ? frobenius < o.frobenius : gaps < o.gaps;
    }
};

NumericalSet to_numerical_set(const MaskSet& m) {
    std::vector<Int> small;
    for (Int x = 0; x <= m.frobenius; ++x) {
        if (m.contains(x)) small.push_back(x);
    }
    return NumericalSet::from_small_elements(std::move(small), m.frobenius + 1);
}

bool mask_is_semigroup(const MaskSet& m) {
    std::vector<Int> small;
    for (Int x = 1; x < m.frobenius; ++x) {
        if (m.contains(x)) small.push_back(x);
    }
    for (std::size_t i = 0; i < small.size(); ++i) {
        for (std::size_t j = i; j < small.size(); ++j) {
            const Int sum = small[i] + small[j];
            if (sum > m.frobenius) break;
            if (!m.contains(sum)) return false;
        }
    }
    return true;
}

// Generators above the Frobenius number: elements of [C, C+mult) that are
// not a sum of two nonzero elements.  Removing one yields the tree child
// whose Frobenius number is the removed element.
template <typename Fn>
void for_each_tree_child(const MaskSet& m, Fn&& fn) {
    const Int conductor = m.frobenius + 1;
    const Int mult = m.multiplicity();
    for (Int g = conductor; g < conductor + mult; ++g) {
        bool expressible = false;
        for (Int y = mult; y + y <= g && !expressible; ++y) {
            expressible = m.contains(y) && m.contains(g - y);
        }
        if (!expressible) {
            fn(MaskSet{g, m.gaps | (std::uint64_t{1} << (g - 1))});
        }
    }
}

void validate_bound(const EnumBound& bound) {
    if (bound.limit < 1) {
        throw BoundExceeded("enumeration limit must be at least 1");
    }
    const Int cap = bound.mode == EnumMode::ByGenus ? capped(kSemigroupGenusCap)
                                                    : capped(kSemigroupFrobeniusCap);
    if (bound.limit > cap) {
        throw BoundExceeded("enumeration limit " + std::to_string(bound.limit) +
                            " exceeds the cap " + std::to_string(cap));
    }
}

bool within(const EnumBound& bound, const MaskSet& m) {
    return bound.mode == EnumMode::ByGenus ? m.genus() <= bound.limit
                                           : m.frobenius <= bound.limit;
}

void collect_tree(const MaskSet& node, const EnumBound& bound, std::vector<MaskSet>& out) {
    out.push_back(node);
    for_each_tree_child(node, [&](const MaskSet& child) {
        if (within(bound, child)) collect_tree(child, bound, out);
    });
}

std::vector<MaskSet> tree_semigroups(const EnumBound& bound) {
    validate_bound(bound);
    std::vector<MaskSet> all;
    collect_tree(MaskSet{}, bound, all);
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

std::string to_string(EnumMode mode) {
    return mode == EnumMode::ByGenus ? "genus" : "frobenius";
}

Int numerical_set_frobenius_cap() { return capped(kNumericalSetFrobeniusCap); }
Int semigroup_genus_cap() { return capped(kSemigroupGenusCap); }
Int semigroup_frobenius_cap() { return capped(kSemigroupFrobeniusCap); }

void enumerate_numerical_sets(Int max_frobenius, const SetVisitor& visit) {
    if (max_frobenius < 1 || max_frobenius > numerical_set_frobenius_cap()) {
        throw BoundExceeded("numerical-set enumeration bound must lie in [1, " +
                            std::to_string(numerical_set_frobenius_cap()) + "]");
    }
    for (Int f = 1; f <= max_frobenius; ++f) {
        const std::uint64_t top = std::uint64_t{1} << (f - 1);
        for (std::uint64_t sub = 0; sub < top; ++sub) {
            visit(to_numerical_set(MaskSet{f, sub | top}));
        }
    }
}

std::vector<NumericalSet> enumerate_numerical_sets(Int max_frobenius) {
    std::vector<NumericalSet> out;
    enumerate_numerical_sets(max_frobenius, [&](const NumericalSet& s) { out.push_back(s); });
    return out;
}

void enumerate_semigroups(const EnumBound& bound, const SetVisitor& visit) {
    for (const MaskSet& m : tree_semigroups(bound)) {
        visit(to_numerical_set(m));
    }
}

std::vector<NumericalSet> enumerate_semigroups(const EnumBound& bound) {
    std::vector<NumericalSet> out;
    enumerate_semigroups(bound, [&](const NumericalSet& s) { out.push_back(s); });
    return out;
}

void enumerate_semigroups_by_filter(const EnumBound& bound, const SetVisitor& visit) {
    validate_bound(bound);
    // A semigroup of genus g has Frobenius number at most 2g-1.
    const Int max_f =
        bound.mode == EnumMode::ByGenus ? 2 * bound.limit - 1 : bound.limit;
    if (max_f > numerical_set_frobenius_cap()) {
        throw BoundExceeded("the filter strategy needs numerical sets up to Frobenius " +
                            std::to_string(max_f) + ", past its cap");
    }
    for (Int f = 1; f <= max_f; ++f) {
        const std::uint64_t top = std::uint64_t{1} << (f - 1);
        for (std::uint64_t sub = 0; sub < top; ++sub) {
            const MaskSet m{f, sub | top};
            if (!within(bound, m) || !mask_is_semigroup(m)) continue;
            visit(to_numerical_set(m));
        }
    }
}

std::vector<NumericalSet> enumerate_semigroups_by_filter(const EnumBound& bound) {
    std::vector<NumericalSet> out;
    enumerate_semigroups_by_filter(bound, [&](const NumericalSet& s) { out.push_back(s); });
    return out;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json serialized_failures = nlohmann::json::array();
    const std::size_t shown = std::min<std::size_t>(failures.size(), 100);
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& f = failures[i];
        serialized_failures.push_back({
            {"input", f.input},
            {"kind", f.kind ? nlohmann::json(*f.kind) : nlohmann::json(nullptr)},
            {"expected", f.expected},
            {"got", f.got},
        });
    }
    return nlohmann::json{
        {"theorem", theorem},
        {"mode", to_string(bound.mode)},
        {"limit", bound.limit},
        {"checked", checked},
        {"failures", std::move(serialized_failures)},
        {"failure_count", static_cast<Int>(failures.size())},
    };
}

namespace {

struct Verifier {
    std::string description;
    EnumBound default_bound;
    void (*run)(const EnumBound&, VerificationReport&);
};

void record(VerificationReport& report, const std::string& input,
            std::optional<std::string> kind, std::string expected, std::string got) {
    report.failures.push_back(VerificationFailure{
        input, std::move(kind), std::move(expected), std::move(got)});
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void require_frobenius_mode(const EnumBound& bound) {
    if (bound.mode != EnumMode::ByFrobenius) {
        throw BoundExceeded(
            "this claim ranges over numerical sets, which a genus bound does not "
            "make finite; use a frobenius bound");
    }
}

std::vector<NumericalSet> sets_in(const EnumBound& bound) {
    require_frobenius_mode(bound);
    return enumerate_numerical_sets(bound.limit);
}

std::string gap_string(const GapSet& g) {
    std::string out;
    for (Int v : g.values()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

// --- individual claims -----------------------------------------------------

void verify_hook_criteria(const EnumBound& bound, VerificationReport& report) {
    for (const NumericalSet& s : sets_in(bound)) {
        ++report.checked;
        const auto& small = s.small_elements();
        for (std::size_t i = 0; i < small.size(); ++i) {
            const auto hooks = column_hook_set(s, static_cast<Int>(i));
            const Int expected = s.frobenius() - small[i];
            if (hooks.back() != expected) {
                record(report, to_string(s), "column " + std::to_string(i),
                       std::to_string(expected), std::to_string(hooks.back()));
            }
        }
        const bool direct = is_semigroup(s);
        const bool via_hooks = is_semigroup_via_hooks(s);
        if (direct != via_hooks) {
            record(report, to_string(s), std::nullopt, yes_no(direct), yes_no(via_hooks));
        }
    }
}

void verify_sum_gap_formulas(const EnumBound& bound, VerificationReport& report) {
    if (bound.limit > capped(kPairwiseFrobeniusCap)) {
        throw BoundExceeded("the pairwise sum-formula claim is capped at Frobenius " +
                            std::to_string(capped(kPairwiseFrobeniusCap)));
    }
    const auto sets = sets_in(bound);
    for (const NumericalSet& s : sets) {
        for (const NumericalSet& t : sets) {
            for (SumKind kind : kAllSumKinds) {
                ++report.checked;
                const GapSet actual = set_sum(s, t, kind).gaps();
                const GapSet predicted = predicted_gaps(s, t, kind);
                if (!(actual == predicted)) {
                    record(report, to_string(s) + " ; " + to_string(t), to_string(kind),
                           gap_string(predicted), gap_string(actual));
                }
            }
        }
    }
}

void verify_self_sum_not_closed(const EnumBound& bound, VerificationReport& report) {
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        ++report.checked;
        if (!self_sum_closure_counterexample(s)) return;
        for (SumKind kind : {SumKind::Conjoint, SumKind::Discrete}) {
            if (is_semigroup(set_sum(s, s, kind))) {
                record(report, to_string(s), to_string(kind),
                       "self-sum is not a semigroup", "semigroup");
            }
        }
    });
}

void verify_genus_characterization(const EnumBound& bound, VerificationReport& report) {
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        ++report.checked;
        const bool sym = is_symmetric(s);
        const bool sym_by_genus = 2 * s.genus() == s.frobenius() + 1;
        if (sym != sym_by_genus) {
            record(report, to_string(s), "symmetric", yes_no(sym_by_genus), yes_no(sym));
        }
        const bool pseudo = is_pseudo_symmetric(s);
        const bool pseudo_by_genus = 2 * s.genus() == s.frobenius() + 2;
        if (pseudo != pseudo_by_genus) {
            record(report, to_string(s), "pseudo-symmetric", yes_no(pseudo_by_genus),
                   yes_no(pseudo));
        }
    });
}

void verify_dual_genus_values(const EnumBound& bound, VerificationReport& report) {
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        ++report.checked;
        const Int small_count = static_cast<Int>(s.small_elements().size());
        const NumericalSet star = dual(s);
        const auto check = [&](const char* what, Int expected, Int got) {
            if (expected != got) {
                record(report, to_string(s), what, std::to_string(expected),
                       std::to_string(got));
            }
        };
        check("genus", s.conductor() - small_count, s.genus());
        check("dual genus", small_count, star.genus());
        check("end-to-end genus", s.conductor(),
              set_sum(s, star, SumKind::EndToEnd).genus());
        check("overlap genus", s.conductor() - 1,
              set_sum(s, star, SumKind::Overlap).genus());
        check("discrete genus", s.conductor() + 1,
              set_sum(s, star, SumKind::Discrete).genus());
        check("conjoint genus", s.conductor(),
              set_sum(s, star, SumKind::Conjoint).genus());
    });
}

void verify_self_dual_is_symmetric(const EnumBound& bound, VerificationReport& report) {
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        ++report.checked;
        const bool sym = is_symmetric(s);
        const bool self_dual = dual(s) == s;
        if (sym != self_dual) {
            record(report, to_string(s), std::nullopt,
                   "symmetric == self-dual", sym ? "symmetric only" : "self-dual only");
        }
    });
}

// Candidate pool for decomposition uniqueness: every semigroup summand T
// paired with its dual, bucketed by Frobenius number.  A sum T (+) T* has
// Frobenius 2F(T)+d with d fixed by the kind, so only one bucket can ever
// reproduce a given set; the buckets together still cover every candidate
// with conductor up to the scanned maximum.
class SummandPool {
public:
    explicit SummandPool(Int max_summand_frobenius) {
        buckets_.resize(static_cast<std::size_t>(max_summand_frobenius) + 1);
        enumerate_semigroups({EnumMode::ByFrobenius, max_summand_frobenius},
                             [&](const NumericalSet& t) {
                                 buckets_[static_cast<std::size_t>(t.frobenius())]
                                     .push_back({t, dual(t)});
                             });
    }

    // All semigroups T with set_sum(T, dual(T), kind) == target.
    std::vector<NumericalSet> matches(const NumericalSet& target, SumKind kind) const {
        Int delta = 0;
        switch (kind) {
            case SumKind::Discrete: delta = 2; break;
            case SumKind::EndToEnd: delta = 1; break;
            case SumKind::Conjoint: delta = 0; break;
            case SumKind::Overlap: delta = -1; break;
        }
        const Int wanted = target.frobenius() - delta;
        if (wanted % 2 != 0) return {};
        const Int f = wanted / 2;
        if (f < 1 || f >= static_cast<Int>(buckets_.size())) return {};
        std::vector<NumericalSet> out;
        for (const auto& [t, t_dual] : buckets_[static_cast<std::size_t>(f)]) {
            if (set_sum(t, t_dual, kind) == target) out.push_back(t);
        }
        return out;
    }

private:
    std::vector<std::vector<std::pair<NumericalSet, NumericalSet>>> buckets_;
};

Int max_frobenius_in(const EnumBound& bound) {
    return bound.mode == EnumMode::ByFrobenius ? bound.limit : 2 * bound.limit - 1;
}

void verify_symmetric_decomposition(const EnumBound& bound, VerificationReport& report) {
    const SummandPool pool((max_frobenius_in(bound) + 1) / 2);
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        if (!is_symmetric(s)) return;
        ++report.checked;
        if (s.frobenius() == 1) {
            try {
                decompose_symmetric(s);
                record(report, to_string(s), std::nullopt, "ExcludedCase", "a decomposition");
            } catch (const ExcludedCase&) {
            }
            return;
        }
        std::optional<Decomposition> d;
        try {
            d = decompose_symmetric(s);
        } catch (const std::exception& e) {
            record(report, to_string(s), std::nullopt, "a decomposition", e.what());
            return;
        }
        if (d->kind != SumKind::EndToEnd && d->kind != SumKind::Overlap) {
            record(report, to_string(s), to_string(d->kind), "end-to-end or overlap",
                   "wrong kind");
        }
        if (!is_semigroup(d->summand)) {
            record(report, to_string(s), to_string(d->kind),
                   "summand is a semigroup", to_string(d->summand));
        }
        if (!(d->dual_summand == dual(d->summand))) {
            record(report, to_string(s), to_string(d->kind), "partner equals dual",
                   to_string(d->dual_summand));
        }
        if (!(set_sum(d->summand, d->dual_summand, d->kind) == s)) {
            record(report, to_string(s), to_string(d->kind), "round trip", "mismatch");
        }
        // Per-kind uniqueness.  Both kinds at once can succeed (dropping the
        // conductor from an end-to-end summand yields an overlap summand for
        // the same set whenever that smaller set is still a semigroup), so
        // uniqueness holds within each kind, not across them.
        for (SumKind kind : {SumKind::EndToEnd, SumKind::Overlap}) {
            const auto found = pool.matches(s, kind);
            if (found.size() > 1) {
                record(report, to_string(s), to_string(kind), "at most one summand",
                       std::to_string(found.size()) + " summands");
            }
            if (kind == d->kind &&
                (found.size() != 1 || !(found.front() == d->summand))) {
                record(report, to_string(s), to_string(kind),
                       "search finds exactly the returned summand",
                       std::to_string(found.size()) + " matches");
            }
        }
    });
}

void verify_pseudo_symmetric_decomposition(const EnumBound& bound,
                                           VerificationReport& report) {
    const SummandPool pool(std::max<Int>(1, max_frobenius_in(bound) / 2));
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        if (!is_pseudo_symmetric(s)) return;
        ++report.checked;
        if (s.frobenius() == 2) {
            try {
                decompose_pseudo_symmetric(s);
                record(report, to_string(s), std::nullopt, "ExcludedCase", "a decomposition");
            } catch (const ExcludedCase&) {
            }
            return;
        }
        std::optional<Decomposition> d;
        try {
            d = decompose_pseudo_symmetric(s);
        } catch (const std::exception& e) {
            record(report, to_string(s), std::nullopt, "a decomposition", e.what());
            return;
        }
        if (d->kind != SumKind::Conjoint && d->kind != SumKind::Discrete) {
            record(report, to_string(s), to_string(d->kind), "conjoint or discrete",
                   "wrong kind");
        }
        if (!is_semigroup(d->summand)) {
            record(report, to_string(s), to_string(d->kind),
                   "summand is a semigroup", to_string(d->summand));
        }
        if (is_symmetric(d->summand)) {
            record(report, to_string(s), to_string(d->kind), "summand not symmetric",
                   to_string(d->summand));
        }
        if (!(d->dual_summand == dual(d->summand))) {
            record(report, to_string(s), to_string(d->kind), "partner equals dual",
                   to_string(d->dual_summand));
        }
        if (!(set_sum(d->summand, d->dual_summand, d->kind) == s)) {
            record(report, to_string(s), to_string(d->kind), "round trip", "mismatch");
        }
        for (SumKind kind : {SumKind::Conjoint, SumKind::Discrete}) {
            const auto found = pool.matches(s, kind);
            if (found.size() > 1) {
                record(report, to_string(s), to_string(kind), "at most one summand",
                       std::to_string(found.size()) + " summands");
            }
            if (kind == d->kind &&
                (found.size() != 1 || !(found.front() == d->summand))) {
                record(report, to_string(s), to_string(kind),
                       "search finds exactly the returned summand",
                       std::to_string(found.size()) + " matches");
            }
        }
    });
}

void verify_conductor_not_minimal(const EnumBound& bound, VerificationReport& report) {
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        if (!is_symmetric(s) || s.frobenius() == 1) return;
        ++report.checked;
        const auto gens = minimal_generators(s);
        if (std::binary_search(gens.begin(), gens.end(), s.conductor())) {
            record(report, to_string(s), std::nullopt,
                   "conductor not a minimal generator", "minimal generator");
        }
    });
}

void verify_symmetric_dual_sums_open(const EnumBound& bound, VerificationReport& report) {
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        if (!is_symmetric(s) || s.frobenius() == 1) return;
        ++report.checked;
        const NumericalSet star = dual(s);
        for (SumKind kind : {SumKind::Conjoint, SumKind::Discrete}) {
            if (is_semigroup(set_sum(s, star, kind))) {
                record(report, to_string(s), to_string(kind),
                       "dual sum is not a semigroup", "semigroup");
            }
        }
    });
}

void verify_closure_criteria(const EnumBound& bound, VerificationReport& report) {
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        const NumericalSet star = dual(s);
        for (SumKind kind : kAllSumKinds) {
            ++report.checked;
            const bool by_criterion = dual_sum_is_semigroup(s, kind);
            const bool by_brute_force = is_semigroup(set_sum(s, star, kind));
            if (by_criterion != by_brute_force) {
                record(report, to_string(s), to_string(kind), yes_no(by_brute_force),
                       yes_no(by_criterion));
            }
        }
    });
}

void verify_closed_sum_classes(const EnumBound& bound, VerificationReport& report) {
    enumerate_semigroups(bound, [&](const NumericalSet& s) {
        const NumericalSet star = dual(s);
        for (SumKind kind : kAllSumKinds) {
            ++report.checked;
            if (!dual_sum_is_semigroup(s, kind)) continue;
            const NumericalSet sum = set_sum(s, star, kind);
            const bool expect_symmetric =
                kind == SumKind::EndToEnd || kind == SumKind::Overlap;
            const bool ok = expect_symmetric ? is_symmetric(sum) : is_pseudo_symmetric(sum);
            if (!ok) {
                record(report, to_string(s), to_string(kind),
                       expect_symmetric ? "symmetric sum" : "pseudo-symmetric sum",
                       to_string(sum));
            }
        }
    });
}

const std::vector<std::pair<std::string, Verifier>>& registry() {
    static const std::vector<std::pair<std::string, Verifier>> entries = {
        {"prop24",
         {"column hooks top out at frobenius - element; hook-subset test equals "
          "the pairwise semigroup test",
          {EnumMode::ByFrobenius, 12}, verify_hook_criteria}},
        {"lemma310",
         {"closed-form gap lists of all four sums match the computed sums",
          {EnumMode::ByFrobenius, 8}, verify_sum_gap_formulas}},
        {"prop311",
         {"a non-minimal conductor makes both self-sums fail closure",
          {EnumMode::ByGenus, 12}, verify_self_sum_not_closed}},
        {"prop42",
         {"symmetry predicates match their genus characterizations",
          {EnumMode::ByGenus, 12}, verify_genus_characterization}},
        {"lemma44",
         {"genus of the dual and of all four dual sums take their closed-form "
          "values",
          {EnumMode::ByGenus, 12}, verify_dual_genus_values}},
        {"remark45",
         {"a semigroup is symmetric exactly when it equals its dual",
          {EnumMode::ByGenus, 12}, verify_self_dual_is_symmetric}},
        {"thm47",
         {"symmetric semigroups split as T end-to-end/overlap dual(T), with "
          "per-kind uniqueness by exhaustive search",
          {EnumMode::ByFrobenius, 27}, verify_symmetric_decomposition}},
        {"lemma49",
         {"the conductor of a symmetric semigroup (beyond the one-gap case) is "
          "never a minimal generator",
          {EnumMode::ByGenus, 12}, verify_conductor_not_minimal}},
        {"cor410",
         {"conjoint and discrete dual sums of a symmetric semigroup are never "
          "semigroups",
          {EnumMode::ByGenus, 12}, verify_symmetric_dual_sums_open}},
        {"thm412",
         {"pseudo-symmetric semigroups split as T conjoint/discrete dual(T) "
          "with a non-symmetric summand, per-kind uniqueness by search",
          {EnumMode::ByFrobenius, 27}, verify_pseudo_symmetric_decomposition}},
        {"thm416",
         {"the closed-form closure criteria agree with brute force on all four "
          "dual sums",
          {EnumMode::ByGenus, 12}, verify_closure_criteria}},
        {"cor417",
         {"closed end-to-end/overlap dual sums are symmetric; closed "
          "discrete/conjoint ones are pseudo-symmetric",
          {EnumMode::ByGenus, 12}, verify_closed_sum_classes}},
    };
    return entries;
}

const Verifier& find_verifier(const std::string& theorem) {
    for (const auto& [name, verifier] : registry()) {
        if (name == theorem) return verifier;
    }
    throw UnknownTheorem("unknown theorem identifier: " + theorem);
}

} // namespace

const std::vector<std::string>& theorem_registry() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, verifier] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_known_theorem(const std::string& theorem) {
    for (const auto& [name, verifier] : registry()) {
        if (name == theorem) return true;
    }
    return false;
}

std::string theorem_description(const std::string& theorem) {
    return find_verifier(theorem).description;
}

EnumBound theorem_default_bound(const std::string& theorem) {
    return find_verifier(theorem).default_bound;
}

VerificationReport verify_theorem(const std::string& theorem, const EnumBound& bound) {
    const Verifier& verifier = find_verifier(theorem);
    validate_bound(bound);
    VerificationReport report;
    report.theorem = theorem;
    report.bound = bound;
    verifier.run(bound, report);
    return report;
}

} // namespace nsgs
