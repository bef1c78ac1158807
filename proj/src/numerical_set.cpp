#include "nsgs/numerical_set.hpp"

#include <algorithm>
#include <sstream>

namespace nsgs {

Int checked_add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in numerical-set arithmetic");
    }
    return out;
}

GapSet::GapSet(std::vector<Int> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw MalformedInput("gap set must be nonempty");
    }
    Int prev = 0;
    for (Int v : values_) {
        if (v <= prev) {
            throw MalformedInput("gaps must be positive and strictly increasing");
        }
        prev = v;
    }
}

NumericalSet NumericalSet::from_small_elements(std::vector<Int> elems, Int conductor) {
    if (elems.empty() || elems.front() != 0) {
        throw MalformedInput("small elements must start with 0");
    }
    for (std::size_t i = 1; i < elems.size(); ++i) {
        if (elems[i] <= elems[i - 1]) {
            throw MalformedInput("small elements must be strictly increasing");
        }
    }
    if (conductor < 2) {
        throw MalformedInput("conductor must be at least 2");
    }
    if (elems.back() >= conductor) {
        throw MalformedInput("small elements must lie below the conductor");
    }
    if (elems.back() == conductor - 1) {
        throw MalformedInput("conductor - 1 must be a gap (canonical form)");
    }
    return NumericalSet(std::move(elems), conductor);
}

NumericalSet NumericalSet::from_gaps(const GapSet& gaps) {
    const Int conductor = gaps.frobenius() + 1;
    std::vector<Int> small;
    small.reserve(static_cast<std::size_t>(conductor - gaps.size()));
    auto it = gaps.values().begin();
    for (Int x = 0; x < conductor; ++x) {
        if (it != gaps.values().end() && *it == x) {
            ++it;
        } else {
            small.push_back(x);
        }
    }
    return NumericalSet(std::move(small), conductor);
}

GapSet NumericalSet::gaps() const {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(genus()));
    auto it = small_.begin();
    for (Int x = 0; x < conductor_; ++x) {
        if (it != small_.end() && *it == x) {
            ++it;
        } else {
            out.push_back(x);
        }
    }
    return GapSet(std::move(out));
}

bool NumericalSet::contains(Int x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return std::binary_search(small_.begin(), small_.end(), x);
}

Int NumericalSet::multiplicity() const {
    return small_.size() > 1 ? small_[1] : conductor_;
}

bool is_semigroup(const NumericalSet& s) {
    const auto& small = s.small_elements();
    for (std::size_t i = 1; i < small.size(); ++i) {
        for (std::size_t j = i; j < small.size(); ++j) {
            if (!s.contains(small[i] + small[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Int> minimal_generators(const NumericalSet& s) {
    if (!is_semigroup(s)) {
        throw NotASemigroup("minimal generators are defined for semigroups only");
    }
    const Int bound = checked_add(s.conductor(), s.multiplicity());
    std::vector<Int> gens;
    for (Int x = 1; x <= bound; ++x) {
        if (!s.contains(x)) continue;
        bool expressible = false;
        for (Int y = 1; y + y <= x && !expressible; ++y) {
            expressible = s.contains(y) && s.contains(x - y);
        }
        if (!expressible) {
            gens.push_back(x);
        }
    }
    return gens;
}

bool canonical_less(const NumericalSet& a, const NumericalSet& b) {
    if (a.frobenius() != b.frobenius()) {
        return a.frobenius() < b.frobenius();
    }
    // Same Frobenius number: compare gap sets from the top down; the set
    // owning the largest differing gap sorts later.
    const auto ga = a.gaps().values();
    const auto gb = b.gaps().values();
    auto ia = ga.rbegin();
    auto ib = gb.rbegin();
    for (; ia != ga.rend() && ib != gb.rend(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == ga.rend() && ib != gb.rend();
}

std::string to_string(const NumericalSet& s) {
    std::ostringstream out;
    for (Int e : s.small_elements()) {
        out << e << ' ';
    }
    out << s.conductor() << " ->";
    return out.str();
}

namespace {

std::vector<Int> parse_integers(std::istringstream& in) {
    std::vector<Int> values;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t pos = 0;
            const Int v = std::stoll(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            values.push_back(v);
        } catch (const std::exception&) {
            throw MalformedInput("not a non-negative integer: '" + tok + "'");
        }
    }
    return values;
}

} // namespace

NumericalSet parse_set(const std::string& text) {
    std::istringstream in(text);
    std::string first;
    if (!(in >> first)) {
        throw MalformedInput("empty set notation");
    }
    if (first == "gaps:") {
        return NumericalSet::from_gaps(GapSet(parse_integers(in)));
    }

    std::vector<std::string> tokens{first};
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.size() < 3 || tokens.back() != "->") {
        throw MalformedInput("expected '<small elements> <conductor> ->'");
    }
    tokens.pop_back();
    std::string joined;
    for (const auto& t : tokens) {
        joined += t;
        joined += ' ';
    }
    std::istringstream numbers(joined);
    std::vector<Int> values = parse_integers(numbers);
    const Int conductor = values.back();
    values.pop_back();
    return NumericalSet::from_small_elements(std::move(values), conductor);
}

} // namespace nsgs
