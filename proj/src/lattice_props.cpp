#include "latcode/lattice_props.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latcode::props {

using lattice::atoms;

std::string to_string(Property p) {
    switch (p) {
        case Property::modular: return "modular";
        case Property::semimodular: return "semimodular";
        case Property::distributive: return "distributive";
        case Property::atomic: return "atomic";
        case Property::atomistic: return "atomistic";
        case Property::uniquely_atomistic: return "uniquely_atomistic";
        case Property::geometric: return "geometric";
    }
    return "?";
}

Property property_from_string(const std::string& s) {
    static const std::map<std::string, Property> table = {
        {"modular", Property::modular},
        {"semimodular", Property::semimodular},
        {"distributive", Property::distributive},
        {"atomic", Property::atomic},
        {"atomistic", Property::atomistic},
        {"uniquely_atomistic", Property::uniquely_atomistic},
        {"geometric", Property::geometric},
    };
    auto it = table.find(s);
    if (it == table.end()) throw std::invalid_argument("unknown property: " + s);
    return it->second;
}

std::string to_string(Witness::Kind k) {
    switch (k) {
        case Witness::Kind::N5: return "N5";
        case Witness::Kind::M3: return "M3";
        case Witness::Kind::identity_failure: return "identity_failure";
        case Witness::Kind::cover_failure: return "cover_failure";
        case Witness::Kind::non_atomistic_element: return "non_atomistic_element";
        case Witness::Kind::ambiguous_decomposition: return "ambiguous_decomposition";
    }
    return "?";
}

std::optional<Witness> find_N5(const FiniteLattice& L) {
    const int n = L.size();
    for (int a1 = 0; a1 < n; ++a1) {
        for (int a2 = 0; a2 < n; ++a2) {
            if (!L.lt(a2, a1)) continue;
            for (int b = 0; b < n; ++b) {
                if (L.comparable(b, a1) || L.comparable(b, a2)) continue;
                int jn = L.join(a1, b);
                if (jn != L.join(a2, b)) continue;
                int mt = L.meet(a1, b);
                if (mt != L.meet(a2, b)) continue;
                Witness w;
                w.kind = Witness::Kind::N5;
                w.elements = {a1, a2, b, jn, mt};
                w.detail = "pentagon: " + std::to_string(a2) + " < " + std::to_string(a1) +
                           " with side element " + std::to_string(b);
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_M3(const FiniteLattice& L) {
    const int n = L.size();
    for (int y1 = 0; y1 < n; ++y1) {
        for (int y2 = y1 + 1; y2 < n; ++y2) {
            if (L.comparable(y1, y2)) continue;
            int jn = L.join(y1, y2), mt = L.meet(y1, y2);
            for (int y3 = y2 + 1; y3 < n; ++y3) {
                if (L.comparable(y1, y3) || L.comparable(y2, y3)) continue;
                if (L.join(y1, y3) != jn || L.join(y2, y3) != jn) continue;
                if (L.meet(y1, y3) != mt || L.meet(y2, y3) != mt) continue;
                Witness w;
                w.kind = Witness::Kind::M3;
                w.elements = {y1, y2, y3, jn, mt};
                w.detail = "diamond on pairwise-incomparable elements";
                return w;
            }
        }
    }
    return std::nullopt;
}

namespace {

std::optional<Witness> modular_identity_violation(const FiniteLattice& L) {
    const int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            if (!L.leq(x, z)) continue;
            for (int y = 0; y < n; ++y)
                if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z)) {
                    Witness w;
                    w.kind = Witness::Kind::identity_failure;
                    w.elements = {x, y, z};
                    w.detail = "modular identity x v (y ^ z) = (x v y) ^ z fails with x <= z";
                    return w;
                }
        }
    return std::nullopt;
}

std::optional<Witness> distributive_identity_violation(const FiniteLattice& L) {
    const int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
                    Witness w;
                    w.kind = Witness::Kind::identity_failure;
                    w.elements = {x, y, z};
                    w.detail = "distributive identity x ^ (y v z) = (x ^ y) v (x ^ z) fails";
                    return w;
                }
    return std::nullopt;
}

}  // namespace

PropertyReport is_modular(const FiniteLattice& L) {
    std::optional<Witness> identity_bad = modular_identity_violation(L);
    std::optional<Witness> pentagon = find_N5(L);
    if (identity_bad.has_value() != pentagon.has_value()) {
        const Witness& evidence = identity_bad ? *identity_bad : *pentagon;
        throw decider_fault(std::string("modularity deciders disagree: identity scan says ") +
                                (identity_bad ? "non-modular" : "modular") + " but N5 search says " +
                                (pentagon ? "non-modular" : "modular"),
                            evidence);
    }
    PropertyReport r{Property::modular, !identity_bad, std::nullopt};
    if (pentagon) r.witness = *pentagon;
    return r;
}

PropertyReport is_semimodular(const FiniteLattice& L) {
    const int n = L.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int mt = L.meet(x, y);
            if (!L.covers_pair(mt, x) || !L.covers_pair(mt, y)) continue;
            int jn = L.join(x, y);
            if (!L.covers_pair(x, jn) || !L.covers_pair(y, jn)) {
                Witness w;
                w.kind = Witness::Kind::cover_failure;
                w.elements = {x, y};
                w.detail = "x ^ y covers into x and y but x v y does not cover back";
                return {Property::semimodular, false, w};
            }
        }
    return {Property::semimodular, true, std::nullopt};
}

PropertyReport is_distributive(const FiniteLattice& L) {
    std::optional<Witness> identity_bad = distributive_identity_violation(L);
    std::optional<Witness> pentagon = find_N5(L);
    std::optional<Witness> diamond = find_M3(L);

    if (!identity_bad) {
        if (pentagon)
            throw decider_fault("distributivity deciders disagree: identity holds but an N5 exists", *pentagon);
        if (diamond)
            throw decider_fault("distributivity deciders disagree: identity holds but an M3 exists", *diamond);
        return {Property::distributive, true, std::nullopt};
    }
    if (!pentagon) {
        // Modular and non-distributive: Dedekind-Birkhoff guarantees a diamond.
        if (!diamond)
            throw decider_fault(
                "distributivity deciders disagree: identity fails on a modular lattice but no M3 exists",
                *identity_bad);
        return {Property::distributive, false, *diamond};
    }
    return {Property::distributive, false, *pentagon};
}

PropertyReport is_atomic(const FiniteLattice& L) {
    std::vector<int> as = atoms(L);
    for (int x = 0; x < L.size(); ++x) {
        if (x == L.bottom()) continue;
        bool has_atom = std::any_of(as.begin(), as.end(), [&](int a) { return L.leq(a, x); });
        if (!has_atom) {
            Witness w;
            w.kind = Witness::Kind::non_atomistic_element;
            w.elements = {x};
            w.detail = "non-bottom element with no atom below it";
            return {Property::atomic, false, w};
        }
    }
    return {Property::atomic, true, std::nullopt};
}

std::vector<int> atoms_below(const FiniteLattice& L, int x) {
    std::vector<int> as = atoms(L);
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(as.size()); ++i)
        if (L.leq(as[i], x)) out.push_back(i);
    return out;
}

namespace {

int fold_join_atoms(const FiniteLattice& L, const std::vector<int>& as, const std::vector<int>& positions) {
    int acc = L.bottom();
    for (int p : positions) acc = L.join(acc, as[p]);
    return acc;
}

}  // namespace

PropertyReport is_atomistic(const FiniteLattice& L) {
    std::vector<int> as = atoms(L);
    for (int x = 0; x < L.size(); ++x) {
        int acc = L.bottom();
        for (int a : as)
            if (L.leq(a, x)) acc = L.join(acc, a);
        if (acc != x) {
            Witness w;
            w.kind = Witness::Kind::non_atomistic_element;
            w.elements = {x};
            w.detail = "element exceeds the join of the atoms below it";
            return {Property::atomistic, false, w};
        }
    }
    return {Property::atomistic, true, std::nullopt};
}

SubsetOracleResult unique_atomisticity_oracle(const FiniteLattice& L, int max_atoms) {
    std::vector<int> as = atoms(L);
    const int m = static_cast<int>(as.size());
    if (m > max_atoms)
        throw resource_error("subset oracle limited to " + std::to_string(max_atoms) + " atoms, lattice has " +
                             std::to_string(m));
    std::vector<long long> hits(L.size(), 0);
    // DFS over atom subsets, reusing partial joins.
    std::vector<std::pair<int, int>> stack;  // (next atom position, current join)
    stack.emplace_back(0, L.bottom());
    long long subsets = 0;
    while (!stack.empty()) {
        auto [i, cur] = stack.back();
        stack.pop_back();
        if (i == m) {
            hits[cur]++;
            subsets++;
            continue;
        }
        stack.emplace_back(i + 1, cur);
        stack.emplace_back(i + 1, L.join(cur, as[i]));
    }
    SubsetOracleResult r;
    r.subsets_checked = subsets;
    r.holds = true;
    for (int x = 0; x < L.size(); ++x)
        if (hits[x] != 1) {
            r.holds = false;
            r.bad_element = x;
            break;
        }
    return r;
}

PropertyReport is_uniquely_atomistic(const FiniteLattice& L, int oracle_atom_limit) {
    PropertyReport atomistic = is_atomistic(L);
    PropertyReport r{Property::uniquely_atomistic, true, std::nullopt};
    if (!atomistic.holds) {
        r.holds = false;
        r.witness = atomistic.witness;
    } else {
        std::vector<int> as = atoms(L);
        for (int x = 0; x < L.size() && r.holds; ++x) {
            std::vector<int> below = atoms_below(L, x);
            for (int drop : below) {
                int acc = L.bottom();
                for (int p : below)
                    if (p != drop) acc = L.join(acc, as[p]);
                if (acc == x) {
                    Witness w;
                    w.kind = Witness::Kind::ambiguous_decomposition;
                    w.elements = {x, as[drop]};
                    w.detail = "the atoms below the element still join to it after dropping atom " +
                               std::to_string(as[drop]);
                    r.holds = false;
                    r.witness = w;
                    break;
                }
            }
        }
    }
    // Cross-check against the subset oracle where feasible.
    if (static_cast<int>(atoms(L).size()) <= oracle_atom_limit) {
        SubsetOracleResult oracle = unique_atomisticity_oracle(L, oracle_atom_limit);
        if (oracle.holds != r.holds) {
            Witness evidence;
            if (r.witness) {
                evidence = *r.witness;
            } else {
                evidence.kind = Witness::Kind::ambiguous_decomposition;
                evidence.elements = {oracle.bad_element.value_or(-1), -1};
                evidence.detail = "subset oracle hit count differs from 1";
            }
            throw decider_fault("unique-atomisticity criterion and subset oracle disagree", evidence);
        }
    }
    return r;
}

PropertyReport is_geometric(const FiniteLattice& L) {
    PropertyReport semi = is_semimodular(L);
    if (!semi.holds) {
        PropertyReport r{Property::geometric, false, semi.witness};
        if (r.witness) r.witness->detail = "not semimodular: " + r.witness->detail;
        return r;
    }
    PropertyReport atomistic = is_atomistic(L);
    if (!atomistic.holds) {
        PropertyReport r{Property::geometric, false, atomistic.witness};
        if (r.witness) r.witness->detail = "not atomistic: " + r.witness->detail;
        return r;
    }
    return {Property::geometric, true, std::nullopt};
}

AtomDecomposition unique_decomposition(const FiniteLattice& L) {
    PropertyReport ua = is_uniquely_atomistic(L);
    if (!ua.holds)
        throw not_uniquely_atomistic_error("unique_decomposition requires a uniquely atomistic lattice",
                                           ua.witness.value());
    AtomDecomposition d;
    d.atom_index = atoms(L);
    d.decomposition.resize(L.size());
    std::set<std::vector<int>> seen;
    for (int x = 0; x < L.size(); ++x) {
        d.decomposition[x] = atoms_below(L, x);
        if (fold_join_atoms(L, d.atom_index, d.decomposition[x]) != x)
            throw consistency_fault("atom decomposition does not join back to its element");
        if (!seen.insert(d.decomposition[x]).second)
            throw consistency_fault("atom decomposition is not injective");
    }
    if (!d.decomposition[L.bottom()].empty())
        throw consistency_fault("bottom must decompose as the empty atom set");
    for (int i = 0; i < static_cast<int>(d.atom_index.size()); ++i)
        if (d.decomposition[d.atom_index[i]] != std::vector<int>{i})
            throw consistency_fault("atom must decompose as its own singleton");
    return d;
}

namespace {

void require_uniquely_atomistic(const FiniteLattice& L) {
    PropertyReport ua = is_uniquely_atomistic(L);
    if (!ua.holds)
        throw not_uniquely_atomistic_error("operation requires a uniquely atomistic lattice", ua.witness.value());
}

}  // namespace

int join_of(const FiniteLattice& L, const std::vector<int>& atom_positions) {
    require_uniquely_atomistic(L);
    std::vector<int> as = atoms(L);
    for (int p : atom_positions)
        if (p < 0 || p >= static_cast<int>(as.size()))
            throw std::invalid_argument("atom position out of range");
    return fold_join_atoms(L, as, atom_positions);
}

int meet_via_sets(const FiniteLattice& L, const std::vector<int>& s1, const std::vector<int>& s2) {
    require_uniquely_atomistic(L);
    std::vector<int> as = atoms(L);
    for (const auto* s : {&s1, &s2})
        for (int p : *s)
            if (p < 0 || p >= static_cast<int>(as.size()))
                throw std::invalid_argument("atom position out of range");
    std::vector<int> a = s1, b = s2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    int via_sets = fold_join_atoms(L, as, inter);
    int via_table = L.meet(fold_join_atoms(L, as, a), fold_join_atoms(L, as, b));
    if (via_sets != via_table)
        throw consistency_fault("sup(S1 ^ S2) differs from meet(sup S1, sup S2) in a uniquely atomistic lattice");
    return via_sets;
}

bool verify_witness(const FiniteLattice& L, const PropertyReport& report) {
    if (!report.witness) return false;
    const Witness& w = *report.witness;
    const auto& e = w.elements;
    switch (w.kind) {
        case Witness::Kind::N5: {
            if (e.size() != 5) return false;
            int a1 = e[0], a2 = e[1], b = e[2], jn = e[3], mt = e[4];
            return L.lt(a2, a1) && !L.comparable(b, a1) && !L.comparable(b, a2) && L.join(a1, b) == jn &&
                   L.join(a2, b) == jn && L.meet(a1, b) == mt && L.meet(a2, b) == mt;
        }
        case Witness::Kind::M3: {
            if (e.size() != 5) return false;
            int y1 = e[0], y2 = e[1], y3 = e[2], jn = e[3], mt = e[4];
            return !L.comparable(y1, y2) && !L.comparable(y2, y3) && !L.comparable(y1, y3) &&
                   L.join(y1, y2) == jn && L.join(y2, y3) == jn && L.join(y1, y3) == jn &&
                   L.meet(y1, y2) == mt && L.meet(y2, y3) == mt && L.meet(y1, y3) == mt;
        }
        case Witness::Kind::identity_failure: {
            if (e.size() != 3) return false;
            int x = e[0], y = e[1], z = e[2];
            if (report.property == Property::modular)
                return L.leq(x, z) && L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z);
            if (report.property == Property::distributive)
                return L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z));
            return false;
        }
        case Witness::Kind::cover_failure: {
            if (e.size() != 2) return false;
            int x = e[0], y = e[1];
            int mt = L.meet(x, y), jn = L.join(x, y);
            return L.covers_pair(mt, x) && L.covers_pair(mt, y) &&
                   !(L.covers_pair(x, jn) && L.covers_pair(y, jn));
        }
        case Witness::Kind::non_atomistic_element: {
            if (e.size() != 1) return false;
            int x = e[0];
            int acc = L.bottom();
            for (int a : atoms(L))
                if (L.leq(a, x)) acc = L.join(acc, a);
            return acc != x;
        }
        case Witness::Kind::ambiguous_decomposition: {
            if (e.size() != 2) return false;
            int x = e[0], dropped = e[1];
            if (dropped < 0) return false;
            if (!L.covers_pair(L.bottom(), dropped) || !L.leq(dropped, x)) return false;
            int acc = L.bottom();
            for (int a : atoms(L))
                if (a != dropped && L.leq(a, x)) acc = L.join(acc, a);
            return acc == x;
        }
    }
    return false;
}

}  // namespace latcode::props
