#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "latcode/errors.hpp"

namespace latcode::lattice {

// Exact rational valuation values.  All valuations in practice are integer
// heights; the fraction form keeps comparisons exact either way.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
};

// A finite bounded lattice over elements 0..N-1, built from its cover
// relation.  Order, join and meet tables are dense; everything is immutable
// after construction and queries are pure.
class FiniteLattice {
public:
    // Builds from cover pairs (lo, hi).  Redundant comparable pairs are
    // tolerated and reduced away; the stored cover set is the transitive
    // reduction of the reachability order.  Throws not_a_poset_error on a
    // cycle and not_a_lattice_error (with the offending pair) when some pair
    // has no unique least upper bound or greatest lower bound.
    static FiniteLattice from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                     std::optional<std::vector<std::string>> labels = std::nullopt);

    int size() const { return n_; }
    bool leq(int x, int y) const { return (up_[static_cast<size_t>(x) * words_ + y / 64] >> (y % 64)) & 1; }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
    int join(int x, int y) const { return join_[static_cast<size_t>(x) * n_ + y]; }
    int meet(int x, int y) const { return meet_[static_cast<size_t>(x) * n_ + y]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    // lo ⋖ hi: lo < hi with nothing strictly between.
    bool covers_pair(int lo, int hi) const;

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::optional<std::vector<std::string>>& labels() const { return labels_; }

    // Fault-injection hook for mutation tests: a copy of this lattice with one
    // meet entry overwritten (symmetrically).  The result usually violates
    // lattice laws; that is the point.
    FiniteLattice with_meet_override(int x, int y, int value) const;

    // Word-packed rows of the order matrix, for scan-heavy algorithms.
    int words() const { return words_; }
    const std::uint64_t* up_row(int x) const { return up_.data() + static_cast<size_t>(x) * words_; }
    const std::uint64_t* down_row(int x) const { return down_.data() + static_cast<size_t>(x) * words_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> up_, down_;
    std::vector<int> join_, meet_;
    std::vector<std::pair<int, int>> covers_;
    std::optional<std::vector<std::string>> labels_;
    int bottom_ = -1, top_ = -1;
};

struct HeightProfile {
    std::vector<int> heights;
    int lattice_height = 0;
};

// Longest chain length from the bottom, over the cover DAG.
HeightProfile height(const FiniteLattice& L);

// Elements covering the bottom.
std::vector<int> atoms(const FiniteLattice& L);

// W_k = number of elements at height k, for k = 0..h(I).
std::vector<long long> whitney_numbers(const FiniteLattice& L);

// Smallest superset of `seed` closed under join and meet.
std::vector<int> sublattice_closure(const FiniteLattice& L, const std::vector<int>& seed);

// Whether a set of elements is closed under join and meet.
bool is_closed_subset(const FiniteLattice& L, const std::vector<int>& elems);

struct ValuationReport {
    bool is_valuation = true;
    bool is_isotone = true;
    bool is_positive = true;
    bool metric_ok = true;
    std::optional<std::vector<int>> failing_tuple;
    std::string failing_check;
};

// Tests v for the valuation identity, isotonicity, positivity and whether
// d_v(x,y) = v(x∨y) - v(x∧y) is a metric; reports the first failing tuple.
ValuationReport check_valuation(const FiniteLattice& L, const std::vector<Rational>& v);

// Order reversed, join and meet swapped.
FiniteLattice dual(const FiniteLattice& L);

// Deterministic DOT rendering of the Hasse diagram, one edge per cover pair,
// elements ranked by height.
std::string hasse_export(const FiniteLattice& L);

// Convenience builders used across the test catalog.
FiniteLattice boolean_lattice(int n);
FiniteLattice chain_lattice(int length);
FiniteLattice m3();
FiniteLattice n5();

// The lattice induced on a join/meet-closed subset of L, with elements
// renumbered to 0..|S|-1 in ascending host order.  Labels are inherited.
FiniteLattice induced_lattice(const FiniteLattice& L, const std::vector<int>& elems);

}  // namespace latcode::lattice
