#include "latcode/linear_lattice.hpp"

#include <algorithm>

namespace latcode::pspace {

ProjectiveSpaceLattice::ProjectiveSpaceLattice(const gf::Field& field, int n, std::uint64_t budget)
    : field_(field), n_(n), lattice_(lattice::FiniteLattice::from_covers(1, {})) {
    std::uint64_t total = gf::count_subspaces(n, field.q(), std::nullopt);
    if (total > budget)
        throw resource_error("lattice budget exceeded: GF(" + std::to_string(field.q()) + ")^" + std::to_string(n) +
                             " has " + std::to_string(total) + " subspaces, element budget is " +
                             std::to_string(budget));
    subspaces_ = gf::enumerate_subspaces(field_, n, std::nullopt, budget);
    const int N = static_cast<int>(subspaces_.size());
    for (int i = 0; i < N; ++i) index_[{subspaces_[i].dim(), subspaces_[i].encoding()}] = i;

    // Covers from dimension stratification: X ⋖ Y iff X ⊂ Y with dim +1.
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels;
    labels.reserve(N);
    for (const auto& s : subspaces_) labels.push_back(s.label(field_.q()));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (subspaces_[j].dim() != subspaces_[i].dim() + 1) continue;
            if (gf::subspace_contains(field_, subspaces_[j], subspaces_[i])) covers.emplace_back(i, j);
        }
    lattice_ = lattice::FiniteLattice::from_covers(N, covers, labels);

    // Every invariant verified during construction: join/meet tables agree
    // with the subspace operations, heights equal dimensions.
    lattice::HeightProfile hp = lattice::height(lattice_);
    for (int i = 0; i < N; ++i)
        if (hp.heights[i] != subspaces_[i].dim())
            throw consistency_fault("element height does not equal subspace dimension");
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            int jn = index_of(gf::subspace_sum(field_, subspaces_[i], subspaces_[j]));
            int mt = index_of(gf::subspace_intersect(field_, subspaces_[i], subspaces_[j]));
            if (lattice_.join(i, j) != jn)
                throw consistency_fault("lattice join disagrees with subspace sum");
            if (lattice_.meet(i, j) != mt)
                throw consistency_fault("lattice meet disagrees with subspace intersection");
        }
}

const gf::SubspaceRepr& ProjectiveSpaceLattice::subspace_of(int index) const {
    if (index < 0 || index >= size()) throw std::invalid_argument("element index out of range");
    return subspaces_[index];
}

int ProjectiveSpaceLattice::index_of(const gf::SubspaceRepr& s) const {
    auto it = index_.find({s.dim(), s.encoding()});
    if (it == index_.end()) throw membership_error("subspace is not an element of this lattice");
    return it->second;
}

bool ProjectiveSpaceLattice::contains(const gf::SubspaceRepr& s) const {
    return index_.count({s.dim(), s.encoding()}) > 0;
}

ProjectiveSpaceLattice build_projective_lattice(const gf::Field& field, int n, std::uint64_t budget) {
    return ProjectiveSpaceLattice(field, n, budget);
}

GrassmannianSlice grassmannian(const ProjectiveSpaceLattice& P, int k) {
    if (k < 0 || k > P.ambient_dim())
        throw std::domain_error("slice dimension k must satisfy 0 <= k <= n");
    GrassmannianSlice slice;
    slice.k = k;
    for (int i = 0; i < P.size(); ++i)
        if (P.subspace_of(i).dim() == k) slice.members.push_back(i);
    return slice;
}

MetricEquivalenceReport metric_equivalence_check(const ProjectiveSpaceLattice& P) {
    MetricEquivalenceReport r;
    const auto& L = P.lattice();
    lattice::HeightProfile hp = lattice::height(L);
    std::vector<lattice::Rational> v(hp.heights.begin(), hp.heights.end());
    lattice::ValuationReport val = lattice::check_valuation(L, v);
    r.valuation_ok = val.is_valuation && val.is_isotone && val.is_positive && val.metric_ok;
    for (int i = 0; i < P.size(); ++i)
        for (int j = i; j < P.size(); ++j) {
            int dh = hp.heights[L.join(i, j)] - hp.heights[L.meet(i, j)];
            int ds = gf::subspace_distance(P.field(), P.subspace_of(i), P.subspace_of(j));
            r.pairs_checked++;
            if (dh != ds && !r.failing_pair) {
                r.distances_agree = false;
                r.failing_pair = {i, j};
            }
        }
    return r;
}

}  // namespace latcode::pspace
