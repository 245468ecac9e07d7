#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "latcode/theorem_lab.hpp"

using namespace latcode;
using namespace latcode::lattice;
using namespace latcode::lab;

TEST_CASE("catalog builds with stable names") {
    auto catalog = build_catalog();
    std::vector<std::string> names;
    for (const auto& e : catalog) names.push_back(e.name);
    std::vector<std::string> expected = {"B1",     "B2",     "B3",       "B4",          "B5",  "chain1",
                                         "chain2", "chain3", "chain4",   "chain5",      "chain6", "M3",
                                         "N5",     "M3_stack", "M3_plus_top", "Pi4",    "P2_1", "P2_2",
                                         "P2_3",   "P2_4",   "P3_1",     "P3_2",        "P3_3"};
    CHECK(names == expected);
}

TEST_CASE("the partition lattice of a 4-set is geometric but not modular") {
    FiniteLattice pi4 = partition_lattice(4);
    CHECK(pi4.size() == 15);  // Bell(4)
    CHECK(whitney_numbers(pi4) == std::vector<long long>{1, 6, 7, 1});
    CHECK(props::is_geometric(pi4).holds);
    CHECK_FALSE(props::is_modular(pi4).holds);
    CHECK(props::is_semimodular(pi4).holds);
    CHECK(atoms(pi4).size() == 6);
}

TEST_CASE("sampled sublattices are genuine and deduplicated") {
    FiniteLattice host = boolean_lattice(4);
    auto samples = sample_sublattices(host, 50, 42);
    CHECK(samples.size() > 10);
    std::set<std::vector<int>> dedup(samples.begin(), samples.end());
    CHECK(dedup.size() == samples.size());
    for (const auto& members : samples) CHECK(is_closed_subset(host, members));
    // Determinism under the same seed.
    CHECK(sample_sublattices(host, 50, 42) == samples);
}

TEST_CASE("exhaustive survey of M3") {
    SublatticeSurveyResult r = enumerate_sublattices(m3(), SurveyMode::exhaustive);
    CHECK(r.max_distributive_size == 4);
    // A concrete extremal example: {O, a1, a2, I}.
    std::vector<int> example = {0, 1, 2, 4};
    CHECK(std::count(r.extremal_sublattices.begin(), r.extremal_sublattices.end(), example) == 1);
    // There are exactly 3 of them, one per atom pair.
    CHECK(r.extremal_sublattices.size() == 3);
    // M3 itself is closed but not distributive.
    for (const auto& members : r.distributive_sublattices) CHECK(members.size() <= 4);
    CHECK(r.total_sublattices_found > r.distributive_count);
}

TEST_CASE("exhaustive survey of a chain finds the whole chain distributive") {
    FiniteLattice c = chain_lattice(2);
    SublatticeSurveyResult r = enumerate_sublattices(c, SurveyMode::exhaustive);
    CHECK(r.max_distributive_size == 3);
    CHECK(r.total_sublattices_found == 7);     // every nonempty subset of a chain is closed
    CHECK(r.distributive_count == 7);
    CHECK(enumerate_sublattices(boolean_lattice(2), SurveyMode::exhaustive).max_distributive_size == 4);
}

TEST_CASE("exhaustive survey respects the size cap") {
    CHECK_THROWS_AS(enumerate_sublattices(boolean_lattice(5), SurveyMode::exhaustive), resource_error);
}

TEST_CASE("sampled survey finds the extremal family on B_5") {
    SublatticeSurveyResult r = enumerate_sublattices(boolean_lattice(5), SurveyMode::sampled, 7, 100);
    CHECK(r.max_distributive_size == 32);  // the whole boolean lattice
    CHECK(r.seed == 7);
}

TEST_CASE("verify_T2 on B_3 and M3") {
    FiniteLattice b3 = boolean_lattice(3);
    T2Report t = verify_T2(b3, enumerate_sublattices(b3, SurveyMode::exhaustive));
    CHECK(t.ok());
    CHECK(t.bound == 8);
    CHECK(t.max_size_found == 8);
    CHECK(t.extremal_count == 1);  // only B_3 itself

    T2Report m = verify_T2(m3(), enumerate_sublattices(m3(), SurveyMode::exhaustive));
    CHECK(m.ok());
    CHECK(m.bound == 4);
    CHECK(m.extremal_count == 3);
}

TEST_CASE("verify_T2 rejects non-geometric hosts") {
    CHECK_THROWS_AS(verify_T2(n5(), enumerate_sublattices(n5(), SurveyMode::exhaustive)), precondition_error);
}

TEST_CASE("verify_T2 on the partition lattice Pi4 (non-modular geometric host)") {
    FiniteLattice pi4 = partition_lattice(4);
    SublatticeSurveyResult survey = enumerate_sublattices(pi4, SurveyMode::exhaustive);
    T2Report t = verify_T2(pi4, survey);
    CHECK(t.ok());
    CHECK(t.bound == 8);
    CHECK(t.max_size_found == 8);
    CHECK(t.extremal_count > 0);
}

TEST_CASE("phi bijection on B_3 and a failure on M3") {
    FiniteLattice b3 = boolean_lattice(3);
    PhiBijection phi = phi_bijection(b3);
    CHECK(phi.verified);
    CHECK(phi.subset_to_element.size() == 8);
    CHECK(phi.subset_to_element[0] == b3.bottom());
    CHECK(phi.subset_to_element[7] == b3.top());
    std::set<int> image(phi.subset_to_element.begin(), phi.subset_to_element.end());
    CHECK(image.size() == 8);
    CHECK_THROWS_AS(phi_bijection(m3()), props::not_uniquely_atomistic_error);
}

TEST_CASE("verify_C2 on sublattices of B_3") {
    FiniteLattice b3 = boolean_lattice(3);
    C2Report whole = verify_C2(b3, {0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(whole.ok());
    CHECK(whole.whitney == std::vector<long long>{1, 3, 3, 1});
    CHECK(whole.equality_all);
    CHECK(whole.sublattice_atoms == 3);

    C2Report tiny = verify_C2(b3, {0, 7});
    CHECK(tiny.ok());
    CHECK(tiny.whitney == std::vector<long long>{1, 1});
    CHECK_FALSE(tiny.equality_all);
    CHECK_THROWS_AS(verify_C2(n5(), {0, 4}), precondition_error);
}

TEST_CASE("code_from_sublattice rebuilds the fixed-basis code from its lattice") {
    gf::Field f2(2);
    pspace::ProjectiveSpaceLattice P = pspace::build_projective_lattice(f2, 3);
    // Members: all spans of subsets of the standard basis.
    std::vector<int> members;
    std::vector<gf::VectorGF> basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<gf::VectorGF> rows;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) rows.push_back(basis[i]);
        members.push_back(P.index_of(gf::rref(f2, rows, 3)));
    }
    codes::SubspaceCode code = code_from_sublattice(P, members);
    CHECK(code.size() == 8);
    CHECK(codes::verify_linear(code).all_pass());
    CHECK(codes::verify_closed_under_intersection(code).all_pass());

    // The subset-to-join map is a verified bijection onto the 8 codewords.
    PhiBijection phi = phi_bijection(induced_lattice(P.lattice(), members));
    CHECK(phi.verified);
    CHECK(phi.subset_to_element.size() == 8);

    // A sublattice with nonzero bottom is rejected.
    std::vector<int> shifted;
    for (int mask = 0; mask < 4; ++mask) {
        std::vector<gf::VectorGF> rows = {{1, 0, 0}};
        for (int i = 1; i < 3; ++i)
            if (mask & (1 << (i - 1))) rows.push_back(basis[i]);
        shifted.push_back(P.index_of(gf::rref(f2, rows, 3)));
    }
    CHECK_THROWS_AS(code_from_sublattice(P, shifted), precondition_error);
}

TEST_CASE("verify_T3_T4 on P_2(2) exhaustively") {
    gf::Field f2(2);
    pspace::ProjectiveSpaceLattice P = pspace::build_projective_lattice(f2, 2);
    SublatticeSurveyResult survey = enumerate_sublattices(P.lattice(), SurveyMode::exhaustive);
    T3T4Report rep = verify_T3_T4(P, survey);
    CHECK(rep.ok());
    CHECK(rep.distributive_checked > 0);
    CHECK(rep.with_full_space > 0);
    CHECK(rep.without_full_space > 0);
    CHECK(rep.skipped_nonzero_bottom > 0);  // e.g. singletons of nonzero subspaces
    CHECK(rep.skipped_non_atomistic > 0);   // e.g. the chains {0} < line < plane
}

TEST_CASE("suite runner rejects unknown names with the list of valid ones") {
    CHECK_THROWS_AS(run_theorem_suite("BOGUS"), std::invalid_argument);
    try {
        run_theorem_suite("BOGUS");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("T3T4") != std::string::npos);
        CHECK(msg.find("TL1") != std::string::npos);
    }
}

TEST_CASE("small-population suite runs are clean") {
    SuiteOptions opts;
    opts.sampled_sublattices = 40;  // keep the unit test quick; acceptance runs the full size
    for (const std::string& name : {"T1", "UAT", "UAC", "TL1"}) {
        SuiteReport rep = run_theorem_suite(name, opts);
        INFO(name);
        CHECK(rep.ok());
        CHECK(rep.instances > 40);
        CHECK(rep.seed.has_value());
    }
}

TEST_CASE("scoped T2 suite on P_2(3) reports the extremal count through verify_T2") {
    gf::Field f2(2);
    pspace::ProjectiveSpaceLattice P = pspace::build_projective_lattice(f2, 3);
    SublatticeSurveyResult survey = enumerate_sublattices(P.lattice(), SurveyMode::exhaustive);
    T2Report t = verify_T2(P.lattice(), survey);
    CHECK(t.ok());
    CHECK(t.bound == 8);
    CHECK(t.max_size_found == 8);
    CHECK(t.extremal_count == 28);  // oracle: unordered bases of F_2^3 = 7*6*4/3!
}

TEST_CASE("LT1 and CP1 suites are clean at reduced scope") {
    SuiteOptions opts;
    opts.q = 2;
    opts.n = 3;
    SuiteReport lt1 = run_theorem_suite("LT1", opts);
    CHECK(lt1.ok());
    CHECK(lt1.instances > 10);
    SuiteReport cp1 = run_theorem_suite("CP1", opts);
    CHECK(cp1.ok());
}
