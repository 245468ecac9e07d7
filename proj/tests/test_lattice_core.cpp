#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "latcode/json_io.hpp"
#include "latcode/lattice_core.hpp"

using namespace latcode;
using namespace latcode::lattice;

namespace {

// Test-only oracle: recompute the order by Floyd-Warshall closure over the
// exported covers, then joins/meets by scanning all elements. Independent of
// the bitset machinery inside FiniteLattice.
struct SlowOrder {
    int n;
    std::vector<std::vector<bool>> le;

    explicit SlowOrder(const FiniteLattice& L) : n(L.size()), le(n, std::vector<bool>(n, false)) {
        for (int i = 0; i < n; ++i) le[i][i] = true;
        for (auto [lo, hi] : L.covers()) le[lo][hi] = true;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (le[i][k] && le[k][j]) le[i][j] = true;
    }

    int lub(int x, int y) const {
        int best = -1;
        for (int z = 0; z < n; ++z) {
            if (!le[x][z] || !le[y][z]) continue;
            if (best < 0 || le[z][best]) best = z;
        }
        // verify it is below every upper bound
        for (int z = 0; z < n; ++z)
            if (le[x][z] && le[y][z] && !le[best][z]) return -1;
        return best;
    }

    int glb(int x, int y) const {
        int best = -1;
        for (int z = 0; z < n; ++z) {
            if (!le[z][x] || !le[z][y]) continue;
            if (best < 0 || le[best][z]) best = z;
        }
        for (int z = 0; z < n; ++z)
            if (le[z][x] && le[z][y] && !le[z][best]) return -1;
        return best;
    }
};

void check_against_oracle(const FiniteLattice& L) {
    SlowOrder oracle(L);
    for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y) {
            REQUIRE(L.leq(x, y) == oracle.le[x][y]);
            REQUIRE(L.join(x, y) == oracle.lub(x, y));
            REQUIRE(L.meet(x, y) == oracle.glb(x, y));
        }
}

// Brute-force lattice isomorphism for tiny lattices (permutation scan).
bool isomorphic(const FiniteLattice& A, const FiniteLattice& B) {
    if (A.size() != B.size()) return false;
    std::vector<int> perm(A.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < A.size() && ok; ++x)
            for (int y = 0; y < A.size(); ++y)
                if (A.leq(x, y) != B.leq(perm[x], perm[y])) { ok = false; break; }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("M3 from covers") {
    FiniteLattice L = m3();
    CHECK(L.size() == 5);
    CHECK(L.bottom() == 0);
    CHECK(L.top() == 4);
    CHECK(L.join(1, 2) == 4);
    CHECK(L.meet(1, 2) == 0);
    CHECK(L.join(1, 1) == 1);
    CHECK(L.covers().size() == 6);
    check_against_oracle(L);
}

TEST_CASE("chain lattice: join is max, meet is min") {
    FiniteLattice L = chain_lattice(2);
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y) {
            CHECK(L.join(x, y) == std::max(x, y));
            CHECK(L.meet(x, y) == std::min(x, y));
        }
}

TEST_CASE("bowtie is rejected with the offending pair") {
    std::vector<std::pair<int, int>> bowtie = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    CHECK_THROWS_AS(FiniteLattice::from_covers(4, bowtie), not_a_lattice_error);
    try {
        FiniteLattice::from_covers(4, bowtie);
    } catch (const not_a_lattice_error& e) {
        CHECK(std::string(e.what()).find("no unique least upper bound") != std::string::npos);
        CHECK(e.pair() == std::make_pair(0, 1));
    }
}

TEST_CASE("cycles and self-loops are rejected") {
    CHECK_THROWS_AS(FiniteLattice::from_covers(2, {{0, 1}, {1, 0}}), not_a_poset_error);
    CHECK_THROWS_AS(FiniteLattice::from_covers(2, {{0, 0}}), not_a_poset_error);
    CHECK_THROWS_AS(FiniteLattice::from_covers(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("two incomparable elements alone are not a lattice") {
    CHECK_THROWS_AS(FiniteLattice::from_covers(2, {}), not_a_lattice_error);
}

TEST_CASE("redundant comparable pairs are reduced away") {
    FiniteLattice L = FiniteLattice::from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(L.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    check_against_oracle(L);
}

TEST_CASE("heights") {
    FiniteLattice L = m3();
    HeightProfile hp = height(L);
    CHECK(hp.heights == std::vector<int>{0, 1, 1, 1, 2});
    CHECK(hp.lattice_height == 2);
    FiniteLattice c = chain_lattice(5);
    CHECK(height(c).lattice_height == 5);
    // N5 heights: longest chains
    CHECK(height(n5()).heights == std::vector<int>{0, 1, 2, 1, 3});
}

TEST_CASE("atoms") {
    CHECK(atoms(m3()) == std::vector<int>{1, 2, 3});
    CHECK(atoms(chain_lattice(2)) == std::vector<int>{1});
    CHECK(atoms(boolean_lattice(3)) == std::vector<int>{1, 2, 4});
}

TEST_CASE("whitney numbers") {
    CHECK(whitney_numbers(boolean_lattice(3)) == std::vector<long long>{1, 3, 3, 1});
    CHECK(whitney_numbers(m3()) == std::vector<long long>{1, 3, 1});
    auto w = whitney_numbers(chain_lattice(4));
    CHECK(w == std::vector<long long>{1, 1, 1, 1, 1});
    long long total = 0;
    for (long long c : whitney_numbers(boolean_lattice(4))) total += c;
    CHECK(total == 16);
}

TEST_CASE("sublattice closure") {
    FiniteLattice L = m3();
    CHECK(sublattice_closure(L, {0, 4}) == std::vector<int>{0, 4});
    CHECK(sublattice_closure(L, {1, 2}) == std::vector<int>{0, 1, 2, 4});
    CHECK(sublattice_closure(L, {}) == std::vector<int>{});
    CHECK(is_closed_subset(L, sublattice_closure(L, {1, 3})));
    CHECK_FALSE(is_closed_subset(L, {1, 2}));
}

TEST_CASE("valuation report: height on M3 passes all flags") {
    FiniteLattice L = m3();
    HeightProfile hp = height(L);
    std::vector<Rational> v(hp.heights.begin(), hp.heights.end());
    ValuationReport r = check_valuation(L, v);
    CHECK(r.is_valuation);
    CHECK(r.is_isotone);
    CHECK(r.is_positive);
    CHECK(r.metric_ok);
    CHECK_FALSE(r.failing_tuple.has_value());
}

TEST_CASE("valuation report: zero map is a valuation but not positive") {
    FiniteLattice L = m3();
    std::vector<Rational> v(5, Rational(0));
    ValuationReport r = check_valuation(L, v);
    CHECK(r.is_valuation);
    CHECK(r.is_isotone);
    CHECK_FALSE(r.is_positive);
    CHECK_FALSE(r.metric_ok);  // d_v cannot separate points
}

TEST_CASE("valuation report: height on N5 fails the valuation identity") {
    FiniteLattice L = n5();
    HeightProfile hp = height(L);
    std::vector<Rational> v(hp.heights.begin(), hp.heights.end());
    ValuationReport r = check_valuation(L, v);
    CHECK_FALSE(r.is_valuation);
    REQUIRE(r.failing_tuple.has_value());
    // The witness re-verifies: v(x∨y) + v(x∧y) != v(x) + v(y).
    int x = (*r.failing_tuple)[0], y = (*r.failing_tuple)[1];
    CHECK(v[L.join(x, y)] + v[L.meet(x, y)] != v[x] + v[y]);
}

TEST_CASE("metric_ok implies is_positive on a lattice zoo") {
    for (const FiniteLattice& L : {m3(), n5(), boolean_lattice(3), chain_lattice(3)}) {
        HeightProfile hp = height(L);
        std::vector<Rational> v(hp.heights.begin(), hp.heights.end());
        ValuationReport r = check_valuation(L, v);
        if (r.metric_ok) CHECK(r.is_positive);
    }
}

TEST_CASE("rational valuations are exact") {
    FiniteLattice L = chain_lattice(2);
    std::vector<Rational> v = {Rational(0), Rational(1, 3), Rational(2, 3)};
    ValuationReport r = check_valuation(L, v);
    CHECK(r.is_valuation);
    CHECK(r.is_positive);
    CHECK(r.metric_ok);
}

TEST_CASE("dual swaps join and meet and is an involution") {
    FiniteLattice L = n5();
    FiniteLattice D = dual(L);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            CHECK(D.join(x, y) == L.meet(x, y));
            CHECK(D.meet(x, y) == L.join(x, y));
            CHECK(D.leq(x, y) == L.leq(y, x));
        }
    FiniteLattice DD = dual(D);
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
            CHECK(DD.join(x, y) == L.join(x, y));
            CHECK(DD.meet(x, y) == L.meet(x, y));
        }
    CHECK(DD.covers() == L.covers());
}

TEST_CASE("dual of chain and of self-dual lattices") {
    CHECK(isomorphic(dual(chain_lattice(3)), chain_lattice(3)));
    CHECK(isomorphic(dual(m3()), m3()));
    CHECK(isomorphic(dual(n5()), n5()));
}

TEST_CASE("absorption and bound laws on a zoo") {
    for (const FiniteLattice& L : {m3(), n5(), boolean_lattice(4), chain_lattice(5)}) {
        for (int x = 0; x < L.size(); ++x) {
            CHECK(L.leq(L.bottom(), x));
            CHECK(L.leq(x, L.top()));
            for (int y = 0; y < L.size(); ++y) {
                CHECK(L.leq(x, L.join(x, y)));
                CHECK(L.leq(L.meet(x, y), x));
                CHECK(L.join(x, L.meet(x, y)) == x);
                CHECK(L.meet(x, L.join(x, y)) == x);
            }
        }
    }
}

TEST_CASE("hasse export is deterministic and has one edge per cover") {
    std::string dot = hasse_export(m3());
    CHECK(std::count(dot.begin(), dot.end(), '>') == 6);
    CHECK(dot == hasse_export(m3()));
    std::string chain_dot = hasse_export(chain_lattice(2));
    CHECK(std::count(chain_dot.begin(), chain_dot.end(), '>') == 2);
    CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("cover round trip preserves all tables") {
    for (const FiniteLattice& L : {m3(), n5(), boolean_lattice(4)}) {
        FiniteLattice R = FiniteLattice::from_covers(L.size(), L.covers(), L.labels());
        CHECK(R.covers() == L.covers());
        for (int x = 0; x < L.size(); ++x)
            for (int y = 0; y < L.size(); ++y) {
                REQUIRE(R.leq(x, y) == L.leq(x, y));
                REQUIRE(R.join(x, y) == L.join(x, y));
                REQUIRE(R.meet(x, y) == L.meet(x, y));
            }
    }
}

TEST_CASE("lattice JSON round trip is byte stable") {
    FiniteLattice L = boolean_lattice(3);
    io::Json j = io::lattice_to_json(L);
    std::string once = io::dump(j);
    FiniteLattice R = io::lattice_from_json(io::Json::parse(once));
    std::string twice = io::dump(io::lattice_to_json(R));
    CHECK(once == twice);
    CHECK(R.size() == 8);
}

TEST_CASE("lattice JSON validation") {
    CHECK_THROWS_AS(io::lattice_from_json(io::Json::parse("{\"n\": 2}")), std::invalid_argument);
    CHECK_THROWS_AS(io::lattice_from_json(io::Json::parse("{\"n\": 4, \"covers\": [[0,2],[0,3],[1,2],[1,3]]}")),
                    not_a_lattice_error);
}

TEST_CASE("subspace JSON rejects non-RREF rows") {
    io::Json good = io::Json::parse(R"({"q": 2, "modulus": null, "n": 3, "rows": [[1,0,1],[0,1,1]]})");
    auto [f, s] = io::subspace_from_json(good);
    CHECK(s.dim() == 2);
    std::string bytes = io::dump(io::subspace_to_json(f, s));
    CHECK(io::dump(io::subspace_to_json(f, io::subspace_from_json(io::Json::parse(bytes)).second)) == bytes);
    io::Json bad = io::Json::parse(R"({"q": 2, "modulus": null, "n": 3, "rows": [[1,1,0],[1,0,1]]})");
    CHECK_THROWS_AS(io::subspace_from_json(bad), std::invalid_argument);
}

TEST_CASE("induced lattice on a closed subset") {
    FiniteLattice L = boolean_lattice(3);
    // {∅, {1}, {2}, {1,2}} is closed: indices 0, 1, 2, 3.
    FiniteLattice M = induced_lattice(L, {0, 1, 2, 3});
    CHECK(M.size() == 4);
    CHECK(isomorphic(M, boolean_lattice(2)));
    CHECK_THROWS_AS(induced_lattice(L, {1, 2}), precondition_error);
}
