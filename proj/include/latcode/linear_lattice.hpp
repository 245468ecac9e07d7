#pragma once

#include <map>
#include <optional>
#include <vector>

#include "latcode/gfcore.hpp"
#include "latcode/lattice_core.hpp"

namespace latcode::pspace {

inline constexpr std::uint64_t kDefaultLatticeBudget = 1000;

// The lattice of all subspaces of GF(q)^n under sum and intersection,
// materialized as a FiniteLattice with a bidirectional subspace/index map.
// Elements are indexed by (dimension, encoding) order; labels are the RREF
// digit strings; the height of an element equals its dimension.
class ProjectiveSpaceLattice {
public:
    // Enumerates, stratifies by dimension and checks every pair of elements:
    // join against subspace_sum and meet against subspace_intersect.
    // Throws resource_error past the element budget.
    ProjectiveSpaceLattice(const gf::Field& field, int n,
                           std::uint64_t budget = kDefaultLatticeBudget);

    const gf::Field& field() const { return field_; }
    int ambient_dim() const { return n_; }
    const lattice::FiniteLattice& lattice() const { return lattice_; }
    const gf::SubspaceRepr& subspace_of(int index) const;
    int index_of(const gf::SubspaceRepr& s) const;  // membership_error if absent
    bool contains(const gf::SubspaceRepr& s) const;
    int size() const { return static_cast<int>(subspaces_.size()); }

private:
    gf::Field field_;
    int n_;
    std::vector<gf::SubspaceRepr> subspaces_;
    std::map<std::pair<int, std::vector<int>>, int> index_;
    lattice::FiniteLattice lattice_;
};

ProjectiveSpaceLattice build_projective_lattice(const gf::Field& field, int n,
                                                std::uint64_t budget = kDefaultLatticeBudget);

struct GrassmannianSlice {
    int k = 0;
    std::vector<int> members;
};

// The height-k level of the lattice.
GrassmannianSlice grassmannian(const ProjectiveSpaceLattice& P, int k);

struct MetricEquivalenceReport {
    bool valuation_ok = false;       // height passes all four valuation flags
    bool distances_agree = true;     // d_h == d_S on every pair
    long long pairs_checked = 0;
    std::optional<std::pair<int, int>> failing_pair;
};

// Theorem check: the height valuation induces exactly the subspace distance.
MetricEquivalenceReport metric_equivalence_check(const ProjectiveSpaceLattice& P);

}  // namespace latcode::pspace
