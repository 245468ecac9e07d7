#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latcode/subspace_codes.hpp"

using namespace latcode;
using namespace latcode::gf;
using namespace latcode::codes;

namespace {

std::vector<VectorGF> standard_basis(int n, int r) {
    std::vector<VectorGF> rows;
    for (int i = 0; i < r; ++i) {
        VectorGF v(n, 0);
        v[i] = 1;
        rows.push_back(v);
    }
    return rows;
}

PartitionCodeSpec fixed_basis_spec(int q, int n) {
    PartitionCodeSpec spec{Field(q), n, standard_basis(n, n), {}};
    for (int i = 0; i < n; ++i) spec.blocks.push_back({i});
    return spec;
}

}  // namespace

TEST_CASE("fixed-basis code of F_2^3 has 8 codewords") {
    SubspaceCode c = build_partition_code(fixed_basis_spec(2, 3));
    CHECK(c.size() == 8);
    CHECK(c.find(zero_subspace(3)).has_value());
    CHECK(c.find(full_space(3)).has_value());
    std::set<int> dims;
    for (const auto& w : c.codewords) dims.insert(w.dim());
    CHECK(dims == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("two-block partition of the basis of F_2^3 gives 4 codewords") {
    PartitionCodeSpec spec{Field(2), 3, standard_basis(3, 3), {{0, 1}, {2}}};
    SubspaceCode c = build_partition_code(spec);
    CHECK(c.size() == 4);
    CHECK(c.find(zero_subspace(3)).has_value());
    CHECK(c.find(rref(spec.field, {{1, 0, 0}, {0, 1, 0}}, 3)).has_value());
    CHECK(c.find(rref(spec.field, {{0, 0, 1}}, 3)).has_value());
    CHECK(c.find(full_space(3)).has_value());
}

TEST_CASE("single block gives the two-codeword code") {
    PartitionCodeSpec spec{Field(2), 3, standard_basis(3, 2), {{0, 1}}};
    SubspaceCode c = build_partition_code(spec);
    CHECK(c.size() == 2);
}

TEST_CASE("empty independent set gives the zero-only code") {
    PartitionCodeSpec spec{Field(2), 2, {}, {}};
    SubspaceCode c = build_partition_code(spec);
    CHECK(c.size() == 1);
    CHECK(c.codewords[0].is_zero());
    CHECK(verify_linear(c).all_pass());
}

TEST_CASE("dependent vectors and malformed partitions are rejected") {
    PartitionCodeSpec dep{Field(2), 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {{0}, {1}, {2}}};
    CHECK_THROWS_AS(build_partition_code(dep), rank_error);
    PartitionCodeSpec empty_block{Field(2), 3, standard_basis(3, 2), {{0, 1}, {}}};
    CHECK_THROWS_AS(build_partition_code(empty_block), partition_error);
    PartitionCodeSpec overlap{Field(2), 3, standard_basis(3, 2), {{0, 1}, {1}}};
    CHECK_THROWS_AS(build_partition_code(overlap), partition_error);
    PartitionCodeSpec gap{Field(2), 3, standard_basis(3, 2), {{0}}};
    CHECK_THROWS_AS(build_partition_code(gap), partition_error);
}

TEST_CASE("boxplus: identity, self-inverse, disjoint sum") {
    SubspaceCode c = build_partition_code(fixed_basis_spec(2, 3));
    SubspaceRepr e1 = rref(c.field, {{1, 0, 0}}, 3);
    SubspaceRepr e2 = rref(c.field, {{0, 1, 0}}, 3);
    CHECK(boxplus(c, e1, zero_subspace(3)) == e1);
    CHECK(boxplus(c, e1, e1) == zero_subspace(3));
    CHECK(boxplus(c, e1, e2) == subspace_sum(c.field, e1, e2));
    SubspaceRepr alien = rref(c.field, {{1, 1, 0}}, 3);
    CHECK_THROWS_AS(boxplus(c, e1, alien), membership_error);
}

TEST_CASE("boxplus of disjoint codewords equals the vector-space sum everywhere") {
    for (int q : {2, 3}) {
        PartitionCodeSpec spec{Field(q), 4, standard_basis(4, 4), {{0}, {1, 2}, {3}}};
        SubspaceCode c = build_partition_code(spec);
        for (int i = 0; i < c.size(); ++i)
            for (int j = 0; j < c.size(); ++j) {
                if (subspace_intersect(c.field, c.codewords[i], c.codewords[j]).dim() != 0) continue;
                CHECK(c.codewords[boxplus_index(c, i, j)] ==
                      subspace_sum(c.field, c.codewords[i], c.codewords[j]));
            }
    }
}

TEST_CASE("verify_linear passes on partition codes") {
    for (int q : {2, 3}) {
        for (int n = 1; n <= 4; ++n) {
            SubspaceCode c = build_partition_code(fixed_basis_spec(q, n));
            AxiomReport r = verify_linear(c);
            CHECK(r.all_pass());
            CHECK(verify_closed_under_intersection(c).all_pass());
        }
    }
}

TEST_CASE("verify_linear passes on the forced two-element code") {
    SubspaceCode c(Field(2), 2);
    c.codewords = {zero_subspace(2), full_space(2)};
    c.boxplus = {{0, 1}, {1, 0}};
    CHECK(verify_linear(c).all_pass());
}

TEST_CASE("a corrupted boxplus entry is detected with a re-verifiable witness") {
    SubspaceCode c = build_partition_code(fixed_basis_spec(2, 3));
    int corrupted = 0;
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < c.size(); ++j)
            for (int v = 0; v < c.size(); ++v) {
                if ((*c.boxplus)[i][j] == v) continue;
                SubspaceCode bad = c;
                (*bad.boxplus)[i][j] = v;
                AxiomReport r = verify_linear(bad);
                if (!r.all_pass()) {
                    corrupted++;
                    REQUIRE(r.witness.has_value());
                    CHECK(verify_axiom_witness(bad, r));
                }
            }
    // every possible single-entry corruption must be caught
    CHECK(corrupted == 8 * 8 * 7);
}

TEST_CASE("closure under intersection: examples") {
    Field f2(2);
    // All of P_2(2) is intersection-closed.
    SubspaceCode all(f2, 2);
    all.codewords = enumerate_subspaces(f2, 2);
    CHECK(verify_closed_under_intersection(all).all_pass());

    // {0, <e1>, <e1+e2>, <e1,e2>}: pairwise meets are {0} or members.
    SubspaceCode mixed(f2, 2);
    mixed.codewords = {zero_subspace(2), rref(f2, {{1, 0}}, 2), rref(f2, {{1, 1}}, 2), full_space(2)};
    std::sort(mixed.codewords.begin(), mixed.codewords.end(), subspace_less);
    CHECK(verify_closed_under_intersection(mixed).all_pass());

    // Two distinct planes of F_2^3 without their common line: not closed.
    SubspaceCode open_code(f2, 3);
    open_code.codewords = {zero_subspace(3), rref(f2, {{1, 0, 0}, {0, 1, 0}}, 3),
                           rref(f2, {{1, 0, 0}, {0, 0, 1}}, 3)};
    std::sort(open_code.codewords.begin(), open_code.codewords.end(), subspace_less);
    AxiomReport r = verify_closed_under_intersection(open_code);
    CHECK_FALSE(r.all_pass());
    REQUIRE(r.witness.has_value());
    CHECK(verify_axiom_witness(open_code, r));
}

TEST_CASE("canonical complement on the fixed-basis code") {
    SubspaceCode c = canonical_complement(build_partition_code(fixed_basis_spec(2, 3)));
    REQUIRE(c.complement.has_value());
    SubspaceRepr e1 = rref(c.field, {{1, 0, 0}}, 3);
    SubspaceRepr e23 = rref(c.field, {{0, 1, 0}, {0, 0, 1}}, 3);
    CHECK((*c.complement)[c.index_of(e1)] == c.index_of(e23));
    CHECK((*c.complement)[c.index_of(zero_subspace(3))] == c.index_of(full_space(3)));
    for (int i = 0; i < c.size(); ++i) CHECK((*c.complement)[(*c.complement)[i]] == i);
    CHECK(verify_complement(c).all_pass());
}

TEST_CASE("canonical complement requires the full space") {
    PartitionCodeSpec spec{Field(2), 3, standard_basis(3, 2), {{0}, {1}}};  // proper subspace code
    SubspaceCode c = build_partition_code(spec);
    CHECK_FALSE(c.find(full_space(3)).has_value());
    CHECK_THROWS_AS(canonical_complement(c), precondition_error);
}

TEST_CASE("complement mutation is detected with a re-verifiable witness") {
    SubspaceCode c = canonical_complement(build_partition_code(fixed_basis_spec(2, 3)));
    // Swap the images of two same-dimension codewords.
    std::vector<int> ones;
    for (int i = 0; i < c.size(); ++i)
        if (c.codewords[i].dim() == 1) ones.push_back(i);
    REQUIRE(ones.size() == 3);
    SubspaceCode bad = c;
    std::swap((*bad.complement)[ones[0]], (*bad.complement)[ones[1]]);
    AxiomReport r = verify_complement(bad);
    CHECK_FALSE(r.all_pass());
    REQUIRE(r.witness.has_value());
    CHECK(verify_axiom_witness(bad, r));
}

TEST_CASE("two-codeword swap complement passes") {
    SubspaceCode c(Field(3), 2);
    c.codewords = {zero_subspace(2), full_space(2)};
    c.complement = {1, 0};
    CHECK(verify_complement(c).all_pass());
}

TEST_CASE("search_complement: none on all of P_2(2), swap on the trivial pair") {
    Field f2(2);
    ComplementSearchResult whole = search_complement(f2, 2, enumerate_subspaces(f2, 2));
    CHECK_FALSE(whole.complement.has_value());

    ComplementSearchResult pairres =
        search_complement(f2, 2, std::vector<SubspaceRepr>{zero_subspace(2), full_space(2)});
    REQUIRE(pairres.complement.has_value());
    CHECK((*pairres.complement) == std::vector<int>{1, 0});
}

TEST_CASE("search_complement succeeds on the fixed-basis code of F_2^3") {
    SubspaceCode c = build_partition_code(fixed_basis_spec(2, 3));
    ComplementSearchResult r = search_complement(c.field, 3, c.codewords);
    REQUIRE(r.complement.has_value());
    SubspaceCode with(c.field, 3);
    with.codewords = r.codewords;
    with.complement = r.complement;
    CHECK(verify_complement(with).all_pass());
}

TEST_CASE("search_complement budget") {
    Field f2(2);
    CHECK_THROWS_AS(search_complement(f2, 4, enumerate_subspaces(f2, 4), 10), resource_error);
}

TEST_CASE("one-dimensional bound") {
    SubspaceCode c3 = canonical_complement(build_partition_code(fixed_basis_spec(2, 3)));
    OneDimBoundReport r3 = one_dim_bound_check(c3);
    CHECK(r3.count_dim1 == 3);
    CHECK(r3.bound == 4);
    CHECK(r3.ok);

    SubspaceCode trivial(Field(2), 3);
    trivial.codewords = {zero_subspace(3), full_space(3)};
    trivial.complement = {1, 0};
    OneDimBoundReport rt = one_dim_bound_check(trivial);
    CHECK(rt.count_dim1 == 0);
    CHECK(rt.ok);

    SubspaceCode c4 = canonical_complement(build_partition_code(fixed_basis_spec(2, 4)));
    OneDimBoundReport r4 = one_dim_bound_check(c4);
    CHECK(r4.count_dim1 == 4);
    CHECK(r4.bound == 8);
    CHECK(r4.ok);

    // q = 3: the count is reported but no bound is claimed.
    SubspaceCode q3 = canonical_complement(build_partition_code(fixed_basis_spec(3, 3)));
    OneDimBoundReport rq3 = one_dim_bound_check(q3);
    CHECK(rq3.count_dim1 == 3);
    CHECK_FALSE(rq3.bound.has_value());

    SubspaceCode no_complement = build_partition_code(fixed_basis_spec(2, 3));
    CHECK_THROWS_AS(one_dim_bound_check(no_complement), precondition_error);
}

TEST_CASE("group structure is elementary abelian of order 2^m") {
    SubspaceCode c = build_partition_code(PartitionCodeSpec{Field(3), 4, standard_basis(4, 3), {{0, 2}, {1}}});
    CHECK(c.size() == 4);
    AxiomReport r = verify_linear(c);
    CHECK(r.all_pass());
    int zero = c.index_of(zero_subspace(4));
    for (int i = 0; i < c.size(); ++i) CHECK((*c.boxplus)[i][i] == zero);
}
