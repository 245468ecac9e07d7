#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcode/lattice_props.hpp"
#include "latcode/linear_lattice.hpp"
#include "latcode/subspace_codes.hpp"

namespace latcode::lab {

using lattice::FiniteLattice;

// ---------------------------------------------------------------------------
// Catalog

struct NamedLattice {
    std::string name;
    FiniteLattice L;
};

// The fixed population of named test lattices: boolean lattices, chains, the
// diamond and pentagon, stacked diamonds, the partition lattice of a 4-set,
// and the linear lattices P_2(n<=4), P_3(n<=3).
std::vector<NamedLattice> build_catalog();

// The lattice of set partitions of {0..n-1} ordered by refinement.
FiniteLattice partition_lattice(int n);

// Join/meet closures of random element seeds; results are deduplicated,
// nonempty and genuinely closed.
std::vector<std::vector<int>> sample_sublattices(const FiniteLattice& L, int count, std::uint64_t seed,
                                                 int max_seed_size = 6);

// ---------------------------------------------------------------------------
// Sublattice surveys

enum class SurveyMode { exhaustive, sampled };
std::string to_string(SurveyMode m);

struct SublatticeSurveyResult {
    std::string host;
    SurveyMode mode = SurveyMode::exhaustive;
    std::uint64_t seed = 0;  // sampled mode only
    long long total_sublattices_found = 0;
    long long distributive_count = 0;
    long long max_distributive_size = 0;
    std::vector<std::vector<int>> extremal_sublattices;      // distributive of maximum size
    std::vector<std::vector<int>> distributive_sublattices;  // every distributive sublattice found
};

inline constexpr int kExhaustiveSurveyLimit = 16;

// Exhaustive mode scans all 2^|L| subsets (|L| <= 16); sampled mode closes
// random seeds plus every subset of host atoms up to the host height.
SublatticeSurveyResult enumerate_sublattices(const FiniteLattice& L, SurveyMode mode, std::uint64_t seed = 1,
                                             int random_samples = 500, const std::string& host_name = "");

// ---------------------------------------------------------------------------
// Theorem checks

struct T2Report {
    int host_height = 0;
    long long bound = 0;  // 2^height
    long long max_size_found = 0;
    long long extremal_count = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Size bound 2^n for distributive sublattices of a geometric host, plus the
// extremal characterization (atoms of the host, top membership, atom count).
T2Report verify_T2(const FiniteLattice& L, const SublatticeSurveyResult& survey);

struct PhiBijection {
    std::vector<int> atom_index;
    std::vector<int> subset_to_element;  // indexed by atom bitmask, size 2^m
    bool verified = false;
};

// The subset-to-join map on a uniquely atomistic lattice, verified bijective
// with the expected endpoints.
PhiBijection phi_bijection(const FiniteLattice& M, int max_atoms = 20);

struct C2Report {
    std::vector<long long> whitney;    // of the sublattice, its own grading
    std::vector<long long> binomials;  // C(n, k), k = 0..n
    int sublattice_atoms = 0;
    int host_height = 0;
    bool bounds_ok = true;
    bool equality_all = false;
    bool equality_iff_atoms_ok = true;
    bool ok() const { return bounds_ok && equality_iff_atoms_ok; }
};

// Whitney bound W_k(M) <= C(n, k) for a distributive sublattice of a
// geometric host, with the equality characterization.
C2Report verify_C2(const FiniteLattice& host, const std::vector<int>& members);

// The constructive side of the code/sublattice correspondence: from a
// distributive sublattice of the linear lattice whose bottom is the zero
// subspace, pick bases of its atoms and build the partitioned code.
codes::SubspaceCode code_from_sublattice(const pspace::ProjectiveSpaceLattice& P, const std::vector<int>& members);

struct T3T4Report {
    long long distributive_checked = 0;
    long long with_full_space = 0;
    long long without_full_space = 0;
    // The constructive procedure presumes the atom decomposition exists and
    // the sublattice bottom is the zero subspace (a linear code contains {0}
    // and its ⊞ group is an elementary 2-group).  Sublattices outside that
    // premise, such as long chains, are counted here rather than checked.
    long long skipped_nonzero_bottom = 0;
    long long skipped_non_atomistic = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// For every surveyed distributive sublattice with zero bottom and atoms
// joining to everything: the built code passes the linearity and closure
// axioms and reproduces the sublattice; complements exist exactly when the
// full space is a member.
T3T4Report verify_T3_T4(const pspace::ProjectiveSpaceLattice& P, const SublatticeSurveyResult& survey);

// ---------------------------------------------------------------------------
// Suites

struct CheckFailure {
    std::string instance;
    std::string detail;
    std::optional<props::Witness> witness;
};

struct SuiteReport {
    std::string suite;
    std::optional<std::uint64_t> seed;
    long long instances = 0;
    std::vector<CheckFailure> failures;
    bool ok() const { return failures.empty(); }
};

struct SuiteOptions {
    std::uint64_t seed = 20240811;
    int sampled_sublattices = 500;  // population size across catalog hosts
    std::optional<int> q;           // scope for pspace-backed suites
    std::optional<int> n;
    std::uint64_t budget = pspace::kDefaultLatticeBudget;
};

const std::vector<std::string>& suite_names();

// Runs one named theorem suite (T1, UAT, UAC, TL1, TL3, T2, C2, T3T4, LT1,
// CP1) over its population and reports per-instance failures.
SuiteReport run_theorem_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace latcode::lab
