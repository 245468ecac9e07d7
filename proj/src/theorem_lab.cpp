#include "latcode/theorem_lab.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace latcode::lab {

using lattice::atoms;
using lattice::FiniteLattice;

// ---------------------------------------------------------------------------
// Catalog

FiniteLattice partition_lattice(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("partition lattice supported for 1 <= n <= 6");
    // Enumerate set partitions as restricted growth strings.
    std::vector<std::vector<int>> parts;  // block id per point
    std::vector<int> rgs(n, 0);
    while (true) {
        parts.push_back(rgs);
        int i = n - 1;
        while (i > 0) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) break;
            --i;
        }
        if (i == 0) break;
        rgs[i]++;
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    const int N = static_cast<int>(parts.size());
    auto refines = [&](const std::vector<int>& a, const std::vector<int>& b) {
        // a refines b: points sharing a block in a share one in b.
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (a[x] == a[y] && b[x] != b[y]) return false;
        return true;
    };
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::string> labels;
    for (int i = 0; i < N; ++i) {
        std::ostringstream os;
        for (int x = 0; x < n; ++x) os << parts[i][x];
        labels.push_back(os.str());
        for (int j = 0; j < N; ++j)
            if (i != j && refines(parts[i], parts[j]) && parts[i] != parts[j]) pairs.emplace_back(i, j);
    }
    return FiniteLattice::from_covers(N, pairs, labels);
}

namespace {

FiniteLattice m3_stack() {
    return FiniteLattice::from_covers(
        9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {4, 7}, {5, 8}, {6, 8}, {7, 8}});
}

FiniteLattice m3_plus_top() {
    return FiniteLattice::from_covers(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});
}

}  // namespace

std::vector<NamedLattice> build_catalog() {
    std::vector<NamedLattice> out;
    for (int n = 1; n <= 5; ++n) out.push_back({"B" + std::to_string(n), lattice::boolean_lattice(n)});
    for (int len = 1; len <= 6; ++len) out.push_back({"chain" + std::to_string(len), lattice::chain_lattice(len)});
    out.push_back({"M3", lattice::m3()});
    out.push_back({"N5", lattice::n5()});
    out.push_back({"M3_stack", m3_stack()});
    out.push_back({"M3_plus_top", m3_plus_top()});
    out.push_back({"Pi4", partition_lattice(4)});
    for (int n = 1; n <= 4; ++n) {
        gf::Field f2(2);
        out.push_back({"P2_" + std::to_string(n), pspace::build_projective_lattice(f2, n).lattice()});
    }
    for (int n = 1; n <= 3; ++n) {
        gf::Field f3(3);
        out.push_back({"P3_" + std::to_string(n), pspace::build_projective_lattice(f3, n).lattice()});
    }
    return out;
}

std::vector<std::vector<int>> sample_sublattices(const FiniteLattice& L, int count, std::uint64_t seed,
                                                 int max_seed_size) {
    std::mt19937_64 rng(seed);
    std::set<std::vector<int>> dedup;
    std::vector<std::vector<int>> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts < count * 20) {
        ++attempts;
        int k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_seed_size - 1)));
        std::vector<int> seed_elems;
        for (int i = 0; i < k; ++i) seed_elems.push_back(static_cast<int>(rng() % L.size()));
        std::vector<int> closed = lattice::sublattice_closure(L, seed_elems);
        if (closed.empty()) continue;
        if (dedup.insert(closed).second) out.push_back(std::move(closed));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Surveys

std::string to_string(SurveyMode m) { return m == SurveyMode::exhaustive ? "exhaustive" : "sampled"; }

namespace {

bool subset_distributive(const FiniteLattice& L, const std::vector<int>& elems) {
    for (int x : elems)
        for (int y : elems)
            for (int z : elems)
                if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
    return true;
}

void record_distributive(SublatticeSurveyResult& r, std::vector<int> elems) {
    r.distributive_count++;
    long long size = static_cast<long long>(elems.size());
    if (size > r.max_distributive_size) {
        r.max_distributive_size = size;
        r.extremal_sublattices.clear();
    }
    if (size == r.max_distributive_size) r.extremal_sublattices.push_back(elems);
    r.distributive_sublattices.push_back(std::move(elems));
}

}  // namespace

SublatticeSurveyResult enumerate_sublattices(const FiniteLattice& L, SurveyMode mode, std::uint64_t seed,
                                             int random_samples, const std::string& host_name) {
    SublatticeSurveyResult r;
    r.host = host_name;
    r.mode = mode;
    const int N = L.size();

    if (mode == SurveyMode::exhaustive) {
        if (N > kExhaustiveSurveyLimit)
            throw resource_error("exhaustive sublattice survey limited to " +
                                 std::to_string(kExhaustiveSurveyLimit) + " elements, lattice has " +
                                 std::to_string(N));
        // Subset scan over bitmasks; closure check via the tables.
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << N); ++mask) {
            std::vector<int> elems;
            for (int i = 0; i < N; ++i)
                if (mask & (std::uint32_t{1} << i)) elems.push_back(i);
            bool closed = true;
            for (size_t i = 0; i < elems.size() && closed; ++i)
                for (size_t j = 0; j <= i; ++j) {
                    if (!(mask & (std::uint32_t{1} << L.join(elems[i], elems[j]))) ||
                        !(mask & (std::uint32_t{1} << L.meet(elems[i], elems[j])))) {
                        closed = false;
                        break;
                    }
                }
            if (!closed) continue;
            r.total_sublattices_found++;
            if (subset_distributive(L, elems)) record_distributive(r, std::move(elems));
        }
        return r;
    }

    // Sampled mode: closures of every small atom subset, plus random seeds.
    r.seed = seed;
    std::set<std::vector<int>> found;
    auto consider = [&](const std::vector<int>& closed) {
        if (closed.empty() || !found.insert(closed).second) return;
        r.total_sublattices_found++;
        if (subset_distributive(L, closed)) record_distributive(r, closed);
    };

    std::vector<int> as = atoms(L);
    int max_atom_subset = lattice::height(L).lattice_height;
    std::vector<int> pick;
    // All atom subsets of size <= host height, by backtracking.
    std::function<void(size_t)> rec = [&](size_t start) {
        if (!pick.empty()) consider(lattice::sublattice_closure(L, pick));
        if (static_cast<int>(pick.size()) == max_atom_subset) return;
        for (size_t i = start; i < as.size(); ++i) {
            pick.push_back(as[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);

    for (const auto& closed : sample_sublattices(L, random_samples, seed)) consider(closed);
    return r;
}

// ---------------------------------------------------------------------------
// T2 / C1

T2Report verify_T2(const FiniteLattice& L, const SublatticeSurveyResult& survey) {
    props::PropertyReport geo = props::is_geometric(L);
    if (!geo.holds)
        throw precondition_error("T2 requires a geometric host; failed: " +
                                 (geo.witness ? geo.witness->detail : std::string("unknown")));
    T2Report rep;
    rep.host_height = lattice::height(L).lattice_height;
    rep.bound = 1LL << rep.host_height;
    std::vector<int> host_atoms = atoms(L);
    std::set<int> host_atom_set(host_atoms.begin(), host_atoms.end());

    for (const auto& members : survey.distributive_sublattices) {
        long long size = static_cast<long long>(members.size());
        rep.max_size_found = std::max(rep.max_size_found, size);
        if (size > rep.bound) {
            rep.failures.push_back("distributive sublattice of size " + std::to_string(size) +
                                   " exceeds the bound " + std::to_string(rep.bound));
            continue;
        }
        // Atoms of the sublattice, mapped back to host elements.
        FiniteLattice M = lattice::induced_lattice(L, members);
        std::vector<int> m_atoms_host;
        for (int a : atoms(M)) m_atoms_host.push_back(members[a]);
        long long m_atoms_that_are_host_atoms = 0;
        for (int a : m_atoms_host)
            if (host_atom_set.count(a)) m_atoms_that_are_host_atoms++;
        long long host_atoms_in_M = 0;
        for (int x : members)
            if (host_atom_set.count(x)) host_atoms_in_M++;

        if (size == rep.bound) {
            rep.extremal_count++;
            for (int a : m_atoms_host)
                if (!host_atom_set.count(a))
                    rep.failures.push_back("extremal sublattice has an atom that is not a host atom: " +
                                           std::to_string(a));
            if (!std::count(members.begin(), members.end(), L.top()))
                rep.failures.push_back("extremal sublattice misses the host top");
            if (host_atoms_in_M != rep.host_height)
                rep.failures.push_back("extremal sublattice contains " + std::to_string(host_atoms_in_M) +
                                       " host atoms, expected " + std::to_string(rep.host_height));
        } else if (m_atoms_that_are_host_atoms == rep.host_height) {
            // Converse direction: a distributive sublattice whose own atoms
            // are n atoms of the host must already be extremal.
            rep.failures.push_back("sublattice whose atoms are " + std::to_string(m_atoms_that_are_host_atoms) +
                                   " host atoms has size " + std::to_string(size) + " instead of " +
                                   std::to_string(rep.bound));
        }
    }
    return rep;
}

PhiBijection phi_bijection(const FiniteLattice& M, int max_atoms) {
    props::AtomDecomposition dec = props::unique_decomposition(M);
    const int m = static_cast<int>(dec.atom_index.size());
    if (m > max_atoms)
        throw resource_error("phi bijection limited to " + std::to_string(max_atoms) + " atoms, lattice has " +
                             std::to_string(m));
    PhiBijection phi;
    phi.atom_index = dec.atom_index;
    phi.subset_to_element.assign(size_t{1} << m, -1);
    std::vector<bool> hit(M.size(), false);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        int acc = M.bottom();
        for (int i = 0; i < m; ++i)
            if (mask & (std::uint32_t{1} << i)) acc = M.join(acc, dec.atom_index[i]);
        phi.subset_to_element[mask] = acc;
        if (hit[acc]) throw consistency_fault("phi is not injective on a uniquely atomistic lattice");
        hit[acc] = true;
    }
    if ((size_t{1} << m) != static_cast<size_t>(M.size()))
        throw consistency_fault("phi is not surjective: 2^m differs from the lattice size");
    if (phi.subset_to_element[0] != M.bottom() || phi.subset_to_element[(size_t{1} << m) - 1] != M.top())
        throw consistency_fault("phi endpoints are wrong");
    phi.verified = true;
    return phi;
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

C2Report verify_C2(const FiniteLattice& host, const std::vector<int>& members) {
    props::PropertyReport geo = props::is_geometric(host);
    if (!geo.holds) throw precondition_error("C2 requires a geometric host");
    FiniteLattice M = lattice::induced_lattice(host, members);
    if (!props::is_distributive(M).holds)
        throw precondition_error("C2 requires a distributive sublattice");

    C2Report rep;
    rep.host_height = lattice::height(host).lattice_height;
    rep.whitney = lattice::whitney_numbers(M);
    for (int k = 0; k <= rep.host_height; ++k) rep.binomials.push_back(binomial(rep.host_height, k));
    rep.sublattice_atoms = static_cast<int>(atoms(M).size());

    rep.equality_all = true;
    for (int k = 0; k <= rep.host_height; ++k) {
        long long wk = k < static_cast<int>(rep.whitney.size()) ? rep.whitney[k] : 0;
        if (wk > rep.binomials[k]) rep.bounds_ok = false;
        if (wk != rep.binomials[k]) rep.equality_all = false;
    }
    rep.equality_iff_atoms_ok = (rep.equality_all == (rep.sublattice_atoms == rep.host_height));
    return rep;
}

// ---------------------------------------------------------------------------
// T3 / T4

codes::SubspaceCode code_from_sublattice(const pspace::ProjectiveSpaceLattice& P, const std::vector<int>& members) {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    FiniteLattice M = lattice::induced_lattice(P.lattice(), sorted);
    if (P.subspace_of(sorted[M.bottom()]).dim() != 0)
        throw precondition_error("the sublattice bottom is not the zero subspace; "
                                 "such a set cannot be a linear code");
    props::AtomDecomposition dec = props::unique_decomposition(M);

    codes::PartitionCodeSpec spec{P.field(), P.ambient_dim(), {}, {}};
    for (int a : dec.atom_index) {
        const gf::SubspaceRepr& atom_space = P.subspace_of(sorted[a]);
        std::vector<int> block;
        for (const auto& row : atom_space.basis) {
            block.push_back(static_cast<int>(spec.independent_set.size()));
            spec.independent_set.push_back(row);
        }
        spec.blocks.push_back(std::move(block));
    }
    return codes::build_partition_code(spec);
}

T3T4Report verify_T3_T4(const pspace::ProjectiveSpaceLattice& P, const SublatticeSurveyResult& survey) {
    T3T4Report rep;
    const gf::SubspaceRepr full = gf::full_space(P.ambient_dim());
    for (const auto& members : survey.distributive_sublattices) {
        // Locate the bottom (minimal member = fold of meets).
        int bottom = members[0];
        for (int x : members) bottom = P.lattice().meet(bottom, x);
        if (P.subspace_of(bottom).dim() != 0) {
            rep.skipped_nonzero_bottom++;
            continue;
        }
        if (!props::is_atomistic(lattice::induced_lattice(P.lattice(), members)).holds) {
            rep.skipped_non_atomistic++;
            continue;
        }
        rep.distributive_checked++;
        std::string tag = "sublattice{" + std::to_string(members.size()) + " elems}";
        try {
            codes::SubspaceCode code = code_from_sublattice(P, members);
            if (!codes::verify_linear(code).all_pass())
                rep.failures.push_back(tag + ": built code fails the linearity axioms");
            if (!codes::verify_closed_under_intersection(code).all_pass())
                rep.failures.push_back(tag + ": built code is not closed under intersection");
            // The codeword set must reproduce the sublattice exactly.
            std::set<std::vector<int>> from_code, from_sublattice;
            for (const auto& w : code.codewords) from_code.insert(w.encoding());
            bool sizes_match = code.size() == static_cast<int>(members.size());
            for (int x : members) from_sublattice.insert(P.subspace_of(x).encoding());
            if (!sizes_match || from_code != from_sublattice)
                rep.failures.push_back(tag + ": codeword set differs from the sublattice");

            if (code.find(full)) {
                rep.with_full_space++;
                codes::SubspaceCode withf = codes::canonical_complement(code);
                if (!codes::verify_complement(withf).all_pass())
                    rep.failures.push_back(tag + ": canonical complement fails the complement axioms");
            } else {
                rep.without_full_space++;
                bool threw = false;
                try {
                    codes::canonical_complement(code);
                } catch (const precondition_error&) {
                    threw = true;
                }
                if (!threw)
                    rep.failures.push_back(tag + ": canonical complement did not reject a code "
                                                 "without the full space");
            }
        } catch (const std::exception& e) {
            rep.failures.push_back(tag + ": " + e.what());
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Suites

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"T1", "UAT", "UAC", "TL1", "TL3",
                                                   "T2", "C2",  "T3T4", "LT1", "CP1"};
    return names;
}

namespace {

struct Population {
    std::vector<NamedLattice> instances;
};

Population build_population(const SuiteOptions& opts) {
    Population pop;
    std::vector<NamedLattice> catalog = build_catalog();
    const int hosts = static_cast<int>(catalog.size());
    int per_host = std::max(1, (opts.sampled_sublattices + hosts - 1) / hosts);

    // Small hosts run out of distinct sublattices; top the population up from
    // the largest hosts until the requested sample count is reached.  A rerun
    // with a larger count extends the previous deterministic sequence.
    std::vector<int> requested(hosts, per_host);
    std::vector<std::vector<std::vector<int>>> samples(hosts);
    std::vector<bool> exhausted(hosts, false);
    auto refresh = [&](int i) {
        samples[i] = sample_sublattices(catalog[i].L, requested[i], opts.seed + i + 1);
        if (static_cast<int>(samples[i].size()) < requested[i]) exhausted[i] = true;
    };
    for (int i = 0; i < hosts; ++i) refresh(i);
    while (true) {
        long long total = 0;
        for (const auto& s : samples) total += static_cast<long long>(s.size());
        if (total >= opts.sampled_sublattices) break;
        int best = -1;
        for (int i = 0; i < hosts; ++i)
            if (!exhausted[i] && (best < 0 || catalog[i].L.size() > catalog[best].L.size())) best = i;
        if (best < 0) break;
        requested[best] += static_cast<int>(opts.sampled_sublattices - total);
        refresh(best);
    }

    for (auto& entry : catalog) pop.instances.push_back(entry);
    for (int i = 0; i < hosts; ++i) {
        int j = 0;
        for (const auto& members : samples[i])
            pop.instances.push_back({catalog[i].name + "/sample" + std::to_string(j++),
                                     lattice::induced_lattice(catalog[i].L, members)});
    }
    return pop;
}

void expect(SuiteReport& rep, const std::string& instance, bool condition, const std::string& detail,
            std::optional<props::Witness> w = std::nullopt) {
    if (!condition) rep.failures.push_back({instance, detail, std::move(w)});
}

std::vector<std::pair<int, int>> pspace_scopes(const SuiteOptions& opts) {
    if (opts.q && opts.n) return {{*opts.q, *opts.n}};
    return {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}};
}

SuiteReport suite_over_population(const std::string& name, const SuiteOptions& opts,
                                  const std::function<void(SuiteReport&, const NamedLattice&)>& check) {
    SuiteReport rep;
    rep.suite = name;
    rep.seed = opts.seed;
    Population pop = build_population(opts);
    for (const auto& inst : pop.instances) {
        rep.instances++;
        check(rep, inst);
    }
    return rep;
}

// All set partitions of {0..r-1} as block lists.
std::vector<std::vector<std::vector<int>>> set_partitions(int r) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(r, 0);
    while (true) {
        int blocks = r == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> part(blocks);
        for (int i = 0; i < r; ++i) part[rgs[i]].push_back(i);
        out.push_back(part);
        int i = r - 1;
        while (i > 0) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) break;
            --i;
        }
        if (i <= 0) break;
        rgs[i]++;
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return out;
}

std::vector<gf::VectorGF> standard_basis(int n, int r) {
    std::vector<gf::VectorGF> rows;
    for (int i = 0; i < r; ++i) {
        gf::VectorGF v(n, 0);
        v[i] = 1;
        rows.push_back(v);
    }
    return rows;
}

// A non-basis independent set: the staircase e_i + e_{i+1} rows, then e_n.
std::vector<gf::VectorGF> staircase_set(int n, int r) {
    std::vector<gf::VectorGF> rows;
    for (int i = 0; i < r; ++i) {
        gf::VectorGF v(n, 0);
        v[i] = 1;
        if (i + 1 < n) v[i + 1] = 1;
        rows.push_back(v);
    }
    return rows;
}

// Is the codeword set closed under + and ∩, and distributive as a lattice?
bool distributive_sublattice_of_pspace(const codes::SubspaceCode& code, std::string* why) {
    for (int i = 0; i < code.size(); ++i)
        for (int j = i; j < code.size(); ++j) {
            if (!code.find(gf::subspace_sum(code.field, code.codewords[i], code.codewords[j]))) {
                *why = "not closed under subspace sum";
                return false;
            }
            if (!code.find(gf::subspace_intersect(code.field, code.codewords[i], code.codewords[j]))) {
                *why = "not closed under intersection";
                return false;
            }
        }
    // Induced order by containment.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < code.size(); ++i)
        for (int j = 0; j < code.size(); ++j)
            if (i != j && gf::subspace_contains(code.field, code.codewords[j], code.codewords[i]))
                pairs.emplace_back(i, j);
    FiniteLattice M = FiniteLattice::from_covers(code.size(), pairs);
    if (!props::is_distributive(M).holds) {
        *why = "induced lattice is not distributive";
        return false;
    }
    return true;
}

SuiteReport suite_LT1(const SuiteOptions& opts) {
    SuiteReport rep;
    rep.suite = "LT1";
    std::vector<int> qs = opts.q ? std::vector<int>{*opts.q} : std::vector<int>{2, 3};
    int max_n = opts.n ? *opts.n : 4;
    for (int q : qs) {
        gf::Field f(q);
        for (int n = 1; n <= max_n; ++n) {
            long long max_size_at_n = 0;
            bool extremal_only_at_full_basis = true;  // every 2^n-sized code has r = m = n
            for (int set_kind = 0; set_kind < 2; ++set_kind) {
                for (int r = 1; r <= n; ++r) {
                    std::vector<gf::VectorGF> vectors =
                        set_kind == 0 ? standard_basis(n, r) : staircase_set(n, r);
                    for (const auto& blocks : set_partitions(r)) {
                        rep.instances++;
                        std::string tag = "q=" + std::to_string(q) + ",n=" + std::to_string(n) +
                                          (set_kind ? ",staircase" : ",basis") + ",r=" + std::to_string(r) +
                                          ",m=" + std::to_string(blocks.size());
                        codes::SubspaceCode code =
                            codes::build_partition_code({f, n, vectors, blocks});
                        expect(rep, tag, code.size() == (1 << blocks.size()), "code size is not 2^m");
                        expect(rep, tag, codes::verify_linear(code).all_pass(), "linearity axioms fail");
                        expect(rep, tag, codes::verify_closed_under_intersection(code).all_pass(),
                               "intersection closure fails");
                        std::string why;
                        expect(rep, tag, distributive_sublattice_of_pspace(code, &why), why);
                        // Disjoint codewords add as their vector-space sum.
                        bool ll1 = true;
                        for (int i = 0; i < code.size() && ll1; ++i)
                            for (int j = 0; j < code.size(); ++j) {
                                if (gf::subspace_intersect(f, code.codewords[i], code.codewords[j]).dim() != 0)
                                    continue;
                                if (code.codewords[codes::boxplus_index(code, i, j)] !=
                                    gf::subspace_sum(f, code.codewords[i], code.codewords[j])) {
                                    ll1 = false;
                                    break;
                                }
                            }
                        expect(rep, tag, ll1, "disjoint ⊞ differs from the vector-space sum");
                        max_size_at_n = std::max<long long>(max_size_at_n, code.size());
                        if (code.size() == (1 << n) && !(r == n && static_cast<int>(blocks.size()) == n))
                            extremal_only_at_full_basis = false;
                    }
                }
            }
            std::string tag = "q=" + std::to_string(q) + ",n=" + std::to_string(n);
            expect(rep, tag, max_size_at_n == (1 << n), "maximum code size is not 2^n");
            expect(rep, tag, extremal_only_at_full_basis, "a partition with r < n or m < n reached 2^n");
        }
    }
    return rep;
}

SuiteReport suite_CP1(const SuiteOptions& opts) {
    SuiteReport rep;
    rep.suite = "CP1";
    std::vector<int> qs = opts.q ? std::vector<int>{*opts.q} : std::vector<int>{2, 3};
    int max_n = opts.n ? *opts.n : 4;
    for (int q : qs) {
        gf::Field f(q);
        for (int n = 2; n <= max_n; ++n) {
            rep.instances++;
            std::string tag = "q=" + std::to_string(q) + ",n=" + std::to_string(n);
            codes::PartitionCodeSpec spec{f, n, standard_basis(n, n), {}};
            for (int i = 0; i < n; ++i) spec.blocks.push_back({i});
            codes::SubspaceCode code = codes::canonical_complement(codes::build_partition_code(spec));
            expect(rep, tag, codes::verify_complement(code).all_pass(), "complement axioms fail");
            codes::OneDimBoundReport bound = codes::one_dim_bound_check(code);
            expect(rep, tag, bound.count_dim1 == n, "fixed-basis code should have exactly n lines");
            if (q == 2)
                expect(rep, tag, bound.bound.has_value() && bound.ok,
                       "|U_1| exceeds 2^(n-1) on a complemented code");
        }
    }
    return rep;
}

SuiteReport suite_T2_C2_T3T4(const std::string& which, const SuiteOptions& opts) {
    SuiteReport rep;
    rep.suite = which;
    rep.seed = opts.seed;

    if (which == "T3T4") {
        for (auto [q, n] : pspace_scopes(opts)) {
            gf::Field f(q);
            pspace::ProjectiveSpaceLattice P = pspace::build_projective_lattice(f, n, opts.budget);
            SurveyMode mode =
                P.size() <= kExhaustiveSurveyLimit ? SurveyMode::exhaustive : SurveyMode::sampled;
            SublatticeSurveyResult survey = enumerate_sublattices(
                P.lattice(), mode, opts.seed, opts.sampled_sublattices, "P" + std::to_string(q) + "_" + std::to_string(n));
            rep.instances++;
            T3T4Report t = verify_T3_T4(P, survey);
            for (const auto& failure : t.failures)
                rep.failures.push_back({survey.host, failure, std::nullopt});
        }
        return rep;
    }

    // T2 / C2 run over every geometric catalog host (or the scoped pspace).
    std::vector<NamedLattice> hosts;
    if (opts.q && opts.n) {
        gf::Field f(*opts.q);
        hosts.push_back({"P" + std::to_string(*opts.q) + "_" + std::to_string(*opts.n),
                         pspace::build_projective_lattice(f, *opts.n, opts.budget).lattice()});
    } else {
        for (auto& entry : build_catalog())
            if (props::is_geometric(entry.L).holds) hosts.push_back(entry);
    }
    for (const auto& host : hosts) {
        SurveyMode mode =
            host.L.size() <= kExhaustiveSurveyLimit ? SurveyMode::exhaustive : SurveyMode::sampled;
        SublatticeSurveyResult survey =
            enumerate_sublattices(host.L, mode, opts.seed, opts.sampled_sublattices, host.name);
        rep.instances++;
        if (which == "T2") {
            T2Report t = verify_T2(host.L, survey);
            for (const auto& failure : t.failures) rep.failures.push_back({host.name, failure, std::nullopt});
        } else {  // C2
            for (const auto& members : survey.distributive_sublattices) {
                C2Report c = verify_C2(host.L, members);
                if (!c.ok())
                    rep.failures.push_back({host.name,
                                            "whitney bound or equality characterization fails on a "
                                            "sublattice of size " +
                                                std::to_string(members.size()),
                                            std::nullopt});
            }
        }
    }
    return rep;
}

SuiteReport suite_TL3(const SuiteOptions& opts) {
    SuiteReport rep;
    rep.suite = "TL3";
    rep.seed = opts.seed;
    // Valuation flags and unit cover steps on every modular instance.
    Population pop = build_population(opts);
    for (const auto& inst : pop.instances) {
        rep.instances++;
        props::PropertyReport mod = props::is_modular(inst.L);
        if (!mod.holds) continue;
        lattice::HeightProfile hp = lattice::height(inst.L);
        std::vector<lattice::Rational> v(hp.heights.begin(), hp.heights.end());
        lattice::ValuationReport val = lattice::check_valuation(inst.L, v);
        expect(rep, inst.name, val.is_valuation && val.is_isotone && val.is_positive && val.metric_ok,
               "height is not a positive isotone valuation with metric d_h (" + val.failing_check + ")");
        bool unit_covers = true;
        for (auto [lo, hi] : inst.L.covers())
            if (hp.heights[hi] != hp.heights[lo] + 1) { unit_covers = false; break; }
        expect(rep, inst.name, unit_covers, "a cover step does not raise height by one");
    }
    // Metric agreement with the subspace distance on the linear lattices.
    for (auto [q, n] : pspace_scopes(opts)) {
        rep.instances++;
        gf::Field f(q);
        pspace::ProjectiveSpaceLattice P = pspace::build_projective_lattice(f, n, opts.budget);
        std::string tag = "P" + std::to_string(q) + "_" + std::to_string(n);
        pspace::MetricEquivalenceReport m = pspace::metric_equivalence_check(P);
        expect(rep, tag, m.valuation_ok, "height valuation flags fail on the linear lattice");
        expect(rep, tag, m.distances_agree, "d_h differs from d_S somewhere");
    }
    return rep;
}

}  // namespace

SuiteReport run_theorem_suite(const std::string& name, const SuiteOptions& opts) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
        std::string all;
        for (const auto& s : suite_names()) all += (all.empty() ? "" : ", ") + s;
        throw std::invalid_argument("unknown suite '" + name + "'; valid names: " + all);
    }

    if (name == "T1")
        return suite_over_population(name, opts, [](SuiteReport& rep, const NamedLattice& inst) {
            props::PropertyReport atomistic = props::is_atomistic(inst.L);
            if (!atomistic.holds) return;
            bool dist = props::is_distributive(inst.L).holds;
            bool ua = props::is_uniquely_atomistic(inst.L).holds;
            expect(rep, inst.name, dist == ua,
                   "atomistic instance where distributive and uniquely-atomistic disagree");
        });
    if (name == "UAT")
        return suite_over_population(name, opts, [](SuiteReport& rep, const NamedLattice& inst) {
            if (!props::is_uniquely_atomistic(inst.L).holds) return;
            expect(rep, inst.name, props::is_modular(inst.L).holds,
                   "uniquely atomistic instance that is not modular");
        });
    if (name == "UAC")
        return suite_over_population(name, opts, [](SuiteReport& rep, const NamedLattice& inst) {
            if (!props::is_uniquely_atomistic(inst.L).holds) return;
            expect(rep, inst.name, props::is_geometric(inst.L).holds,
                   "uniquely atomistic instance that is not geometric");
        });
    if (name == "TL1")
        return suite_over_population(name, opts, [](SuiteReport& rep, const NamedLattice& inst) {
            props::PropertyReport mod = props::is_modular(inst.L);
            auto pentagon = props::find_N5(inst.L);
            expect(rep, inst.name, mod.holds == !pentagon.has_value(),
                   "modularity does not match N5-freeness", mod.witness);
            if (!mod.holds && mod.witness)
                expect(rep, inst.name, props::verify_witness(inst.L, mod), "modularity witness fails re-check",
                       mod.witness);
            if (mod.holds) {
                props::PropertyReport dist = props::is_distributive(inst.L);
                auto diamond = props::find_M3(inst.L);
                expect(rep, inst.name, dist.holds == !diamond.has_value(),
                       "distributivity does not match M3-freeness on a modular instance", dist.witness);
                if (!dist.holds && dist.witness)
                    expect(rep, inst.name, props::verify_witness(inst.L, dist),
                           "distributivity witness fails re-check", dist.witness);
            }
        });
    if (name == "TL3") return suite_TL3(opts);
    if (name == "T2" || name == "C2" || name == "T3T4") return suite_T2_C2_T3T4(name, opts);
    if (name == "LT1") return suite_LT1(opts);
    return suite_CP1(opts);
}

}  // namespace latcode::lab
