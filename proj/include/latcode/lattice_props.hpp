#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcode/lattice_core.hpp"

namespace latcode::props {

using lattice::FiniteLattice;

enum class Property {
    modular,
    semimodular,
    distributive,
    atomic,
    atomistic,
    uniquely_atomistic,
    geometric,
};

std::string to_string(Property p);
Property property_from_string(const std::string& s);

struct Witness {
    enum class Kind {
        N5,
        M3,
        identity_failure,
        cover_failure,
        non_atomistic_element,
        ambiguous_decomposition,
    };
    Kind kind;
    std::vector<int> elements;
    std::string detail;
};

std::string to_string(Witness::Kind k);

struct PropertyReport {
    Property property;
    bool holds = false;
    std::optional<Witness> witness;
};

// Consistency bug trap: an identity scan and the matching forbidden-sublattice
// search disagreed.  Carries the evidence from whichever side claims failure.
class decider_fault : public consistency_fault {
public:
    decider_fault(const std::string& msg, Witness w) : consistency_fault(msg), witness_(std::move(w)) {}
    const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};

// unique_decomposition (and the atom-set calculus) called on a lattice that
// is not uniquely atomistic.
class not_uniquely_atomistic_error : public precondition_error {
public:
    not_uniquely_atomistic_error(const std::string& msg, Witness w)
        : precondition_error(msg), witness_(std::move(w)) {}
    const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};

// Pentagon search: a strict pair a2 ≺ a1 and a side element b incomparable to
// both with equal joins and equal meets.  Returns the lexicographically least
// (a1, a2, b); elements are {a1, a2, b, join, meet}.
std::optional<Witness> find_N5(const FiniteLattice& L);

// Diamond search: three pairwise-incomparable elements with pairwise equal
// joins and pairwise equal meets.  Returns the lexicographically least
// (y1, y2, y3); elements are {y1, y2, y3, join, meet}.
std::optional<Witness> find_M3(const FiniteLattice& L);

// Modular identity over all triples with x ⪯ z, cross-checked against the N5
// search; throws decider_fault if the two disagree.
PropertyReport is_modular(const FiniteLattice& L);

// The cover condition x∧y ⋖ x, y  ⟹  x, y ⋖ x∨y over all pairs.
PropertyReport is_semimodular(const FiniteLattice& L);

// Distributive identity over all triples, cross-validated against both
// forbidden-sublattice searches; attaches an M3 witness on modular lattices
// and an N5 witness otherwise.
PropertyReport is_distributive(const FiniteLattice& L);

// Every non-bottom element has an atom below it (always true when finite).
PropertyReport is_atomic(const FiniteLattice& L);

// Every element is the join of the atoms below it.
PropertyReport is_atomistic(const FiniteLattice& L);

// Atomistic, and no atom below x is redundant in the join of atoms below x.
// Cross-validated against the exponential subset oracle when the lattice has
// at most `oracle_atom_limit` atoms; disagreement throws decider_fault.
PropertyReport is_uniquely_atomistic(const FiniteLattice& L, int oracle_atom_limit = 20);

// Semimodular and atomistic.
PropertyReport is_geometric(const FiniteLattice& L);

// Subset oracle for unique atomisticity: folds the join of every subset of
// atoms and checks each element is hit exactly once.  Exponential in the atom
// count; refuses more than max_atoms atoms.
struct SubsetOracleResult {
    bool holds = false;
    std::optional<int> bad_element;   // hit zero or >= two times
    long long subsets_checked = 0;
};
SubsetOracleResult unique_atomisticity_oracle(const FiniteLattice& L, int max_atoms = 20);

// The map x ↦ S_x sending each element to the (unique) set of atoms joining
// to it.  decomposition[x] lists positions into atom_index.
struct AtomDecomposition {
    std::vector<int> atom_index;
    std::vector<std::vector<int>> decomposition;
};
AtomDecomposition unique_decomposition(const FiniteLattice& L);

// Atom positions of the atoms below x (ascending).
std::vector<int> atoms_below(const FiniteLattice& L, int x);

// sup S for a set of atom positions; requires a uniquely atomistic lattice.
int join_of(const FiniteLattice& L, const std::vector<int>& atom_positions);

// sup(S1 ∩ S2), asserted equal to meet(sup S1, sup S2).
int meet_via_sets(const FiniteLattice& L, const std::vector<int>& s1, const std::vector<int>& s2);

// Independent re-check of a returned witness against the raw tables.
bool verify_witness(const FiniteLattice& L, const PropertyReport& report);

}  // namespace latcode::props
