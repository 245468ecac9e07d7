#include "latcode/subspace_codes.hpp"

#include <algorithm>
#include <numeric>

namespace latcode::codes {

using gf::SubspaceRepr;

std::optional<int> SubspaceCode::find(const SubspaceRepr& s) const {
    auto it = std::lower_bound(codewords.begin(), codewords.end(), s, gf::subspace_less);
    if (it != codewords.end() && *it == s) return static_cast<int>(it - codewords.begin());
    return std::nullopt;
}

int SubspaceCode::index_of(const SubspaceRepr& s) const {
    auto idx = find(s);
    if (!idx) throw membership_error("subspace is not a codeword of this code");
    return *idx;
}

SubspaceCode build_partition_code(const PartitionCodeSpec& spec) {
    const int r = static_cast<int>(spec.independent_set.size());
    const int m = static_cast<int>(spec.blocks.size());
    if (m > 20) throw resource_error("partition codes limited to 20 blocks (2^m codewords)");
    if (gf::rank(spec.field, spec.independent_set, spec.n) != r)
        throw rank_error("the " + std::to_string(r) + " given vectors are not linearly independent");
    std::vector<bool> seen(r, false);
    for (const auto& block : spec.blocks) {
        if (block.empty()) throw partition_error("partition blocks must be nonempty");
        for (int pos : block) {
            if (pos < 0 || pos >= r) throw partition_error("block entry out of range");
            if (seen[pos]) throw partition_error("blocks are not disjoint");
            seen[pos] = true;
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw partition_error("blocks do not cover the independent set");

    // One codeword per subset of blocks.
    std::vector<std::pair<std::vector<int>, SubspaceRepr>> built;
    built.reserve(size_t{1} << m);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<gf::VectorGF> rows;
        std::vector<int> subset;
        for (int b = 0; b < m; ++b) {
            if (!(mask & (std::uint32_t{1} << b))) continue;
            subset.push_back(b);
            for (int pos : spec.blocks[b]) rows.push_back(spec.independent_set[pos]);
        }
        built.emplace_back(std::move(subset), gf::rref(spec.field, rows, spec.n));
    }
    std::sort(built.begin(), built.end(),
              [](const auto& a, const auto& b) { return gf::subspace_less(a.second, b.second); });
    for (size_t i = 1; i < built.size(); ++i)
        if (built[i - 1].second == built[i].second)
            throw consistency_fault("partition code produced duplicate codewords from an independent set");

    SubspaceCode code(spec.field, spec.n);
    code.blocks = spec.blocks;
    code.index_sets.emplace();
    for (auto& [subset, word] : built) {
        code.index_sets->push_back(subset);
        code.codewords.push_back(std::move(word));
    }

    // ⊞ by symmetric difference of index sets.
    const int N = code.size();
    std::vector<std::uint32_t> masks(N, 0);
    for (int i = 0; i < N; ++i)
        for (int b : (*code.index_sets)[i]) masks[i] |= std::uint32_t{1} << b;
    std::vector<int> by_mask(size_t{1} << m, -1);
    for (int i = 0; i < N; ++i) by_mask[masks[i]] = i;
    code.boxplus.emplace(N, std::vector<int>(N, -1));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) (*code.boxplus)[i][j] = by_mask[masks[i] ^ masks[j]];
    return code;
}

int boxplus_index(const SubspaceCode& c, int i, int j) {
    if (!c.boxplus) throw precondition_error("code has no linear-addition table");
    if (i < 0 || i >= c.size() || j < 0 || j >= c.size()) throw membership_error("codeword index out of range");
    return (*c.boxplus)[i][j];
}

SubspaceRepr boxplus(const SubspaceCode& c, const SubspaceRepr& x, const SubspaceRepr& y) {
    return c.codewords[boxplus_index(c, c.index_of(x), c.index_of(y))];
}

namespace {

std::vector<std::vector<int>> pairwise_distances(const SubspaceCode& c) {
    const int N = c.size();
    std::vector<std::vector<int>> d(N, std::vector<int>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            d[i][j] = d[j][i] = gf::subspace_distance(c.field, c.codewords[i], c.codewords[j]);
    return d;
}

void fail(AxiomReport& r, std::vector<AxiomCheck>::iterator check, std::vector<int> tuple, std::string detail) {
    check->pass = false;
    if (!r.witness) r.witness = AxiomWitness{check->axiom, std::move(tuple), std::move(detail)};
}

}  // namespace

AxiomReport verify_linear(const SubspaceCode& c) {
    if (!c.boxplus) throw precondition_error("verify_linear requires the ⊞ table");
    const int N = c.size();
    const auto& t = *c.boxplus;
    AxiomReport r;
    r.axioms = {{"i_abelian_group", true},
                {"ii_zero_identity", true},
                {"iii_self_inverse", true},
                {"iv_translation_invariance", true}};
    auto group = r.axioms.begin(), identity = group + 1, self_inverse = group + 2, invariance = group + 3;

    // Closure and commutativity.
    for (int i = 0; i < N && group->pass; ++i) {
        if (static_cast<int>(t[i].size()) != N) {
            fail(r, group, {i}, "table row has wrong length");
            break;
        }
        for (int j = 0; j < N; ++j) {
            if (t[i][j] < 0 || t[i][j] >= N) {
                fail(r, group, {i, j}, "table entry escapes the code");
                break;
            }
            if (t[i][j] != t[j][i]) {
                fail(r, group, {i, j}, "commutativity fails");
                break;
            }
        }
    }
    // Associativity over all triples.
    for (int i = 0; i < N && group->pass; ++i)
        for (int j = 0; j < N && group->pass; ++j)
            for (int k = 0; k < N; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]]) {
                    fail(r, group, {i, j, k}, "associativity fails");
                    break;
                }

    auto zero = c.find(gf::zero_subspace(c.n));
    if (!zero) {
        fail(r, identity, {}, "zero subspace is not a codeword");
    } else {
        for (int i = 0; i < N; ++i)
            if (t[i][*zero] != i) {
                fail(r, identity, {i, *zero}, "X ⊞ {0} != X");
                break;
            }
        for (int i = 0; i < N && self_inverse->pass; ++i)
            if (t[i][i] != *zero) fail(r, self_inverse, {i, i}, "X ⊞ X != {0}");
    }

    std::vector<std::vector<int>> d = pairwise_distances(c);
    for (int i = 0; i < N && invariance->pass; ++i)
        for (int j = 0; j < N && invariance->pass; ++j)
            for (int w = 0; w < N; ++w)
                if (d[i][j] != d[t[i][w]][t[j][w]]) {
                    fail(r, invariance, {i, j, w}, "d_S is not invariant under translation by W");
                    break;
                }
    return r;
}

AxiomReport verify_closed_under_intersection(const SubspaceCode& c) {
    AxiomReport r;
    r.axioms = {{"closed_under_intersection", true}};
    const int N = c.size();
    for (int i = 0; i < N && r.axioms[0].pass; ++i)
        for (int j = i; j < N; ++j) {
            SubspaceRepr inter = gf::subspace_intersect(c.field, c.codewords[i], c.codewords[j]);
            if (!c.find(inter)) {
                fail(r, r.axioms.begin(), {i, j}, "X ∩ Y escapes the code");
                break;
            }
        }
    return r;
}

SubspaceCode canonical_complement(const SubspaceCode& c) {
    if (!c.boxplus) throw precondition_error("canonical complement requires a linear code (⊞ table missing)");
    auto full = c.find(gf::full_space(c.n));
    if (!full)
        throw precondition_error("canonical complement requires the full space among the codewords; "
                                 "without it no complement exists");
    if (!verify_closed_under_intersection(c).all_pass())
        throw precondition_error("canonical complement requires closure under intersection");
    SubspaceCode out = c;
    out.complement.emplace(c.size());
    for (int i = 0; i < c.size(); ++i) (*out.complement)[i] = (*c.boxplus)[i][*full];
    return out;
}

AxiomReport verify_complement(const SubspaceCode& c) {
    if (!c.complement) throw precondition_error("verify_complement requires a complement map");
    const int N = c.size();
    const auto& f = *c.complement;
    AxiomReport r;
    r.axioms = {{"i_direct_sum", true},
                {"ii_dimension_pairing", true},
                {"iii_involution", true},
                {"iv_distance_preservation", true}};
    auto direct_sum = r.axioms.begin(), pairing = direct_sum + 1, involution = direct_sum + 2,
         preservation = direct_sum + 3;

    if (static_cast<int>(f.size()) != N) {
        fail(r, direct_sum, {}, "complement map has wrong length");
        return r;
    }
    for (int i = 0; i < N; ++i)
        if (f[i] < 0 || f[i] >= N) {
            fail(r, direct_sum, {i}, "complement image escapes the code");
            return r;
        }

    for (int i = 0; i < N && direct_sum->pass; ++i) {
        if (gf::subspace_intersect(c.field, c.codewords[i], c.codewords[f[i]]).dim() != 0)
            fail(r, direct_sum, {i, f[i]}, "X ∩ f(X) != {0}");
        else if (gf::subspace_sum(c.field, c.codewords[i], c.codewords[f[i]]).dim() != c.n)
            fail(r, direct_sum, {i, f[i]}, "X ⊕ f(X) != full space");
    }
    for (int i = 0; i < N && pairing->pass; ++i)
        if (c.codewords[f[i]].dim() != c.n - c.codewords[i].dim())
            fail(r, pairing, {i, f[i]}, "dim f(X) != n - dim X");
    if (pairing->pass) {
        std::vector<int> hits(N, 0);
        for (int i = 0; i < N; ++i) hits[f[i]]++;
        for (int i = 0; i < N; ++i)
            if (hits[i] != 1) {
                fail(r, pairing, {i}, "f is not injective stratum to stratum");
                break;
            }
    }
    for (int i = 0; i < N && involution->pass; ++i)
        if (f[f[i]] != i) fail(r, involution, {i, f[i]}, "f(f(X)) != X");

    std::vector<std::vector<int>> d = pairwise_distances(c);
    for (int i = 0; i < N && preservation->pass; ++i)
        for (int j = 0; j < N; ++j)
            if (d[i][j] != d[f[i]][f[j]]) {
                fail(r, preservation, {i, j}, "d_S(X, Y) != d_S(f(X), f(Y))");
                break;
            }
    return r;
}

bool verify_axiom_witness(const SubspaceCode& c, const AxiomReport& report) {
    if (!report.witness) return false;
    const AxiomWitness& w = *report.witness;
    const auto& e = w.codewords;
    for (int i : e)
        if (i < 0 || i >= c.size()) return false;
    auto dist = [&](int a, int b) { return gf::subspace_distance(c.field, c.codewords[a], c.codewords[b]); };
    const auto* t = c.boxplus ? &*c.boxplus : nullptr;
    const auto* f = c.complement ? &*c.complement : nullptr;

    if (w.axiom == "i_abelian_group" && t) {
        if (e.size() == 2) return (*t)[e[0]][e[1]] != (*t)[e[1]][e[0]];
        if (e.size() == 3)
            return (*t)[(*t)[e[0]][e[1]]][e[2]] != (*t)[e[0]][(*t)[e[1]][e[2]]];
        return false;
    }
    if (w.axiom == "ii_zero_identity" && t) {
        if (e.empty()) return !c.find(gf::zero_subspace(c.n)).has_value();
        return (*t)[e[0]][e[1]] != e[0];
    }
    if (w.axiom == "iii_self_inverse" && t) {
        auto zero = c.find(gf::zero_subspace(c.n));
        return zero && e.size() == 2 && (*t)[e[0]][e[0]] != *zero;
    }
    if (w.axiom == "iv_translation_invariance" && t) {
        if (e.size() != 3) return false;
        return dist(e[0], e[1]) != dist((*t)[e[0]][e[2]], (*t)[e[1]][e[2]]);
    }
    if (w.axiom == "closed_under_intersection") {
        if (e.size() != 2) return false;
        return !c.find(gf::subspace_intersect(c.field, c.codewords[e[0]], c.codewords[e[1]])).has_value();
    }
    if (w.axiom == "i_direct_sum" && f) {
        if (e.size() != 2) return false;
        return gf::subspace_intersect(c.field, c.codewords[e[0]], c.codewords[e[1]]).dim() != 0 ||
               gf::subspace_sum(c.field, c.codewords[e[0]], c.codewords[e[1]]).dim() != c.n;
    }
    if (w.axiom == "ii_dimension_pairing" && f) {
        if (e.size() == 2) return c.codewords[e[1]].dim() != c.n - c.codewords[e[0]].dim();
        if (e.size() == 1) {
            int hits = 0;
            for (int i = 0; i < c.size(); ++i)
                if ((*f)[i] == e[0]) hits++;
            return hits != 1;
        }
        return false;
    }
    if (w.axiom == "iii_involution" && f) {
        return e.size() == 2 && (*f)[(*f)[e[0]]] != e[0];
    }
    if (w.axiom == "iv_distance_preservation" && f) {
        return e.size() == 2 && dist(e[0], e[1]) != dist((*f)[e[0]], (*f)[e[1]]);
    }
    return false;
}

namespace {

struct MatchingSearch {
    const std::vector<SubspaceRepr>& words;
    const gf::Field& field;
    int n;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> levels;  // (U_k, U_{n-k}) index lists
    std::vector<int> f;
    std::vector<std::vector<int>> pair_dist;
    long long checked = 0;
    long long cap = 1'000'000;

    bool compatible(int i, int j) const {
        return gf::subspace_intersect(field, words[i], words[j]).dim() == 0 &&
               gf::subspace_sum(field, words[i], words[j]).dim() == n;
    }

    bool distance_preserving() const {
        const int N = static_cast<int>(words.size());
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                if (pair_dist[i][j] != pair_dist[f[i]][f[j]]) return false;
        return true;
    }

    // Match the stratum lists in deterministic order (the middle stratum
    // aliases both lists), then check distance preservation on the assembled
    // involution.
    bool match(size_t level) {
        if (level == levels.size()) {
            ++checked;
            if (checked > cap) throw resource_error("complement search exceeded its candidate budget");
            return distance_preserving();
        }
        const auto& [left, right] = levels[level];
        int unmatched = -1;
        for (int i : left)
            if (f[i] < 0) { unmatched = i; break; }
        if (unmatched < 0) return match(level + 1);
        for (int j : right) {
            if (f[j] >= 0 || !compatible(unmatched, j)) continue;
            f[unmatched] = j;
            f[j] = unmatched;
            if (match(level)) return true;
            f[unmatched] = -1;
            f[j] = -1;
        }
        return false;
    }
};

}  // namespace

ComplementSearchResult search_complement(const gf::Field& field, int n,
                                         const std::vector<SubspaceRepr>& codewords, size_t budget) {
    ComplementSearchResult result;
    result.codewords = codewords;
    std::sort(result.codewords.begin(), result.codewords.end(), gf::subspace_less);
    result.codewords.erase(std::unique(result.codewords.begin(), result.codewords.end()),
                           result.codewords.end());
    for (const auto& w : result.codewords)
        if (w.n != n) throw shape_error("codeword ambient dimension does not match n");
    if (result.codewords.size() > budget)
        throw resource_error("complement search limited to " + std::to_string(budget) + " codewords, got " +
                             std::to_string(result.codewords.size()));

    const int N = static_cast<int>(result.codewords.size());
    std::vector<std::vector<int>> strata(n + 1);
    for (int i = 0; i < N; ++i) strata[result.codewords[i].dim()].push_back(i);

    // A complement pairs U_k with U_{n-k} bijectively.
    for (int k = 0; k <= n; ++k)
        if (strata[k].size() != strata[n - k].size()) return result;

    MatchingSearch search{result.codewords, field, n, {}, std::vector<int>(N, -1), {}, 0, 1'000'000};
    search.pair_dist.assign(N, std::vector<int>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            search.pair_dist[i][j] = search.pair_dist[j][i] =
                gf::subspace_distance(field, result.codewords[i], result.codewords[j]);
    for (int k = 0; 2 * k <= n; ++k)
        if (!strata[k].empty()) search.levels.emplace_back(strata[k], strata[n - k]);

    bool found = search.match(0);
    result.candidates_checked = search.checked;
    if (found) result.complement = search.f;
    return result;
}

OneDimBoundReport one_dim_bound_check(const SubspaceCode& c) {
    if (!c.complement)
        throw precondition_error("one-dimensional bound applies to codes carrying a complement");
    OneDimBoundReport r;
    for (const auto& w : c.codewords)
        if (w.dim() == 1) r.count_dim1++;
    if (c.field.q() == 2) {
        r.bound = c.n >= 1 ? (1LL << (c.n - 1)) : 1;
        r.ok = r.count_dim1 <= *r.bound;
    }
    return r;
}

}  // namespace latcode::codes
