#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcode/gfcore.hpp"

namespace latcode::codes {

// A linearly independent set E = {e1..er} of GF(q)^n together with a
// partition of its index range into m nonempty blocks.
struct PartitionCodeSpec {
    gf::Field field;
    int n = 0;
    std::vector<gf::VectorGF> independent_set;
    std::vector<std::vector<int>> blocks;  // 0-based positions into independent_set
};

// A set of codewords (canonically sorted, deduplicated, zero always present)
// with optional linear-addition table ⊞, complement map and block structure.
struct SubspaceCode {
    gf::Field field;
    int n = 0;
    std::vector<gf::SubspaceRepr> codewords;
    std::optional<std::vector<std::vector<int>>> index_sets;  // I ⊆ [m] per codeword
    std::optional<std::vector<std::vector<int>>> boxplus;     // dense table over codeword indices
    std::optional<std::vector<int>> complement;               // involution over codeword indices
    std::optional<std::vector<std::vector<int>>> blocks;

    SubspaceCode(gf::Field f, int ambient) : field(std::move(f)), n(ambient) {}

    int size() const { return static_cast<int>(codewords.size()); }
    std::optional<int> find(const gf::SubspaceRepr& s) const;
    int index_of(const gf::SubspaceRepr& s) const;  // membership_error if absent
};

// The code {<E_I> : I ⊆ [m]} of a partitioned independent set, with ⊞ given
// by symmetric difference of index sets.  Exactly 2^m distinct codewords.
SubspaceCode build_partition_code(const PartitionCodeSpec& spec);

int boxplus_index(const SubspaceCode& c, int i, int j);
gf::SubspaceRepr boxplus(const SubspaceCode& c, const gf::SubspaceRepr& x, const gf::SubspaceRepr& y);

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
};

struct AxiomWitness {
    std::string axiom;
    std::vector<int> codewords;  // indices of the failing tuple
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomCheck> axioms;
    std::optional<AxiomWitness> witness;

    bool all_pass() const {
        for (const auto& a : axioms)
            if (!a.pass) return false;
        return true;
    }
};

// Exhaustive check of the linear-code axioms: (i) abelian group, (ii) zero
// identity, (iii) self-inverse, (iv) translation invariance of the subspace
// distance over all triples.
AxiomReport verify_linear(const SubspaceCode& c);

// Pairwise intersections stay inside the code.
AxiomReport verify_closed_under_intersection(const SubspaceCode& c);

// Installs f(X) = X ⊞ F_q^n.  Requires the ⊞ table, closure under
// intersection, and the full space among the codewords (necessity).
SubspaceCode canonical_complement(const SubspaceCode& c);

// Exhaustive check of the complement axioms: (i) meet zero and sum full,
// (ii) dimension pairing k -> n-k with unique images, (iii) involution,
// (iv) distance preservation over all pairs.
AxiomReport verify_complement(const SubspaceCode& c);

// Independent re-check of a failing tuple against d_S and the raw tables.
bool verify_axiom_witness(const SubspaceCode& c, const AxiomReport& report);

inline constexpr size_t kDefaultComplementSearchBudget = 64;

struct ComplementSearchResult {
    std::vector<gf::SubspaceRepr> codewords;  // canonicalized input
    std::optional<std::vector<int>> complement;
    long long candidates_checked = 0;
};

// Searches for any map satisfying the complement axioms, as a perfect
// matching between dimension-k and dimension-(n-k) strata filtered by the
// direct-sum condition, then checked for distance preservation.  Candidate
// order is deterministic; returns the first valid map or none.
ComplementSearchResult search_complement(const gf::Field& field, int n,
                                         const std::vector<gf::SubspaceRepr>& codewords,
                                         size_t budget = kDefaultComplementSearchBudget);

struct OneDimBoundReport {
    long long count_dim1 = 0;
    std::optional<long long> bound;  // 2^(n-1), stated for q = 2 only
    bool ok = true;
};

// Bound on one-dimensional codewords of a code carrying a complement.
OneDimBoundReport one_dim_bound_check(const SubspaceCode& c);

}  // namespace latcode::codes
