#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latcode/json_io.hpp"

namespace py = pybind11;
using namespace latcode;

namespace {

std::vector<lattice::Rational> to_rationals(const std::vector<long long>& v) {
    return {v.begin(), v.end()};
}

props::PropertyReport decide(const lattice::FiniteLattice& L, props::Property p) {
    switch (p) {
        case props::Property::modular: return props::is_modular(L);
        case props::Property::semimodular: return props::is_semimodular(L);
        case props::Property::distributive: return props::is_distributive(L);
        case props::Property::atomic: return props::is_atomic(L);
        case props::Property::atomistic: return props::is_atomistic(L);
        case props::Property::uniquely_atomistic: return props::is_uniquely_atomistic(L);
        case props::Property::geometric: return props::is_geometric(L);
    }
    throw std::invalid_argument("unknown property");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-lattice and subspace-code toolkit: GF(q) subspaces, lattice "
              "property deciders with witnesses, linear lattices, intersection-closed "
              "linear codes and theorem verification suites.";

    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_RuntimeError);
    py::register_exception<consistency_fault>(m, "ConsistencyFault", PyExc_RuntimeError);
    py::register_exception<not_a_poset_error>(m, "NotAPosetError", PyExc_ValueError);
    py::register_exception<not_a_lattice_error>(m, "NotALatticeError", PyExc_ValueError);
    py::register_exception<membership_error>(m, "MembershipError", PyExc_ValueError);

    // ------------------------------------------------------------------ gf
    py::class_<gf::Field>(m, "Field")
        .def(py::init<int>(), py::arg("q"))
        .def(py::init<int, const std::vector<int>&>(), py::arg("q"), py::arg("modulus"))
        .def_property_readonly("q", &gf::Field::q)
        .def_property_readonly("p", &gf::Field::p)
        .def_property_readonly("e", &gf::Field::e)
        .def_property_readonly("modulus", &gf::Field::modulus)
        .def("add", &gf::Field::add)
        .def("neg", &gf::Field::neg)
        .def("sub", &gf::Field::sub)
        .def("mul", &gf::Field::mul)
        .def("inv", &gf::Field::inv)
        .def("__repr__", [](const gf::Field& f) { return "Field(q=" + std::to_string(f.q()) + ")"; });

    py::class_<gf::SubspaceRepr>(m, "Subspace")
        .def_readonly("n", &gf::SubspaceRepr::n)
        .def_property_readonly("rows", [](const gf::SubspaceRepr& s) { return s.basis; })
        .def_property_readonly("dim", &gf::SubspaceRepr::dim)
        .def("label", &gf::SubspaceRepr::label, py::arg("q"))
        .def("encoding", &gf::SubspaceRepr::encoding)
        .def("__eq__", [](const gf::SubspaceRepr& a, const gf::SubspaceRepr& b) { return a == b; })
        .def("__hash__",
             [](const gf::SubspaceRepr& s) {
                 size_t h = std::hash<int>()(s.n);
                 for (int d : s.encoding()) h = h * 1000003 + d;
                 return h;
             })
        .def("__repr__", [](const gf::SubspaceRepr& s) {
            return "Subspace(n=" + std::to_string(s.n) + ", dim=" + std::to_string(s.dim()) + ")";
        });

    m.def("rref", &gf::rref, py::arg("field"), py::arg("rows"), py::arg("n"));
    m.def("subspace_sum", &gf::subspace_sum);
    m.def("subspace_intersect", &gf::subspace_intersect);
    m.def("subspace_distance", &gf::subspace_distance);
    m.def("subspace_contains", &gf::subspace_contains);
    m.def("zero_subspace", &gf::zero_subspace);
    m.def("full_space", &gf::full_space);
    m.def("gaussian_binomial", &gf::gaussian_binomial);
    m.def("enumerate_subspaces", &gf::enumerate_subspaces, py::arg("field"), py::arg("n"),
          py::arg("k") = std::nullopt, py::arg("budget") = gf::kDefaultEnumerationBudget);

    // -------------------------------------------------------------- lattice
    py::class_<lattice::FiniteLattice>(m, "FiniteLattice")
        .def_static("from_covers", &lattice::FiniteLattice::from_covers, py::arg("n"), py::arg("covers"),
                    py::arg("labels") = std::nullopt)
        .def_static("from_json",
                    [](const std::string& text) { return io::lattice_from_json(io::Json::parse(text)); })
        .def("to_json", [](const lattice::FiniteLattice& L) { return io::dump(io::lattice_to_json(L)); })
        .def_property_readonly("size", &lattice::FiniteLattice::size)
        .def("leq", &lattice::FiniteLattice::leq)
        .def("join", &lattice::FiniteLattice::join)
        .def("meet", &lattice::FiniteLattice::meet)
        .def("covers_pair", &lattice::FiniteLattice::covers_pair)
        .def_property_readonly("bottom", &lattice::FiniteLattice::bottom)
        .def_property_readonly("top", &lattice::FiniteLattice::top)
        .def_property_readonly("covers", [](const lattice::FiniteLattice& L) { return L.covers(); })
        .def_property_readonly("labels", [](const lattice::FiniteLattice& L) { return L.labels(); })
        .def("with_meet_override", &lattice::FiniteLattice::with_meet_override)
        .def("__repr__", [](const lattice::FiniteLattice& L) {
            return "FiniteLattice(size=" + std::to_string(L.size()) + ")";
        });

    py::class_<lattice::HeightProfile>(m, "HeightProfile")
        .def_readonly("heights", &lattice::HeightProfile::heights)
        .def_readonly("lattice_height", &lattice::HeightProfile::lattice_height);

    py::class_<lattice::ValuationReport>(m, "ValuationReport")
        .def_readonly("is_valuation", &lattice::ValuationReport::is_valuation)
        .def_readonly("is_isotone", &lattice::ValuationReport::is_isotone)
        .def_readonly("is_positive", &lattice::ValuationReport::is_positive)
        .def_readonly("metric_ok", &lattice::ValuationReport::metric_ok)
        .def_readonly("failing_tuple", &lattice::ValuationReport::failing_tuple)
        .def_readonly("failing_check", &lattice::ValuationReport::failing_check);

    m.def("height", &lattice::height);
    m.def("atoms", &lattice::atoms);
    m.def("whitney_numbers", &lattice::whitney_numbers);
    m.def("sublattice_closure", &lattice::sublattice_closure);
    m.def("is_closed_subset", &lattice::is_closed_subset);
    m.def(
        "check_valuation",
        [](const lattice::FiniteLattice& L, const std::vector<long long>& v) {
            return lattice::check_valuation(L, to_rationals(v));
        },
        py::arg("lattice"), py::arg("values"));
    m.def("dual", &lattice::dual);
    m.def("hasse_export", &lattice::hasse_export);
    m.def("boolean_lattice", &lattice::boolean_lattice);
    m.def("chain_lattice", &lattice::chain_lattice);
    m.def("m3", &lattice::m3);
    m.def("n5", &lattice::n5);
    m.def("induced_lattice", &lattice::induced_lattice);

    // ---------------------------------------------------------------- props
    py::class_<props::Witness>(m, "Witness")
        .def_property_readonly("kind", [](const props::Witness& w) { return props::to_string(w.kind); })
        .def_readonly("elements", &props::Witness::elements)
        .def_readonly("detail", &props::Witness::detail)
        .def("__repr__", [](const props::Witness& w) {
            return "Witness(kind=" + props::to_string(w.kind) + ")";
        });

    py::class_<props::PropertyReport>(m, "PropertyReport")
        .def_property_readonly("property",
                               [](const props::PropertyReport& r) { return props::to_string(r.property); })
        .def_readonly("holds", &props::PropertyReport::holds)
        .def_readonly("witness", &props::PropertyReport::witness)
        .def("to_json",
             [](const props::PropertyReport& r) { return io::dump(io::property_report_to_json(r)); })
        .def("__repr__", [](const props::PropertyReport& r) {
            return "PropertyReport(" + props::to_string(r.property) + "=" + (r.holds ? "True" : "False") + ")";
        });

    m.def("is_modular", &props::is_modular);
    m.def("is_semimodular", &props::is_semimodular);
    m.def("is_distributive", &props::is_distributive);
    m.def("is_atomic", &props::is_atomic);
    m.def("is_atomistic", &props::is_atomistic);
    m.def("is_uniquely_atomistic", &props::is_uniquely_atomistic, py::arg("lattice"),
          py::arg("oracle_atom_limit") = 20);
    m.def("is_geometric", &props::is_geometric);
    m.def("check_property", [](const lattice::FiniteLattice& L, const std::string& name) {
        return decide(L, props::property_from_string(name));
    });
    m.def("find_N5", &props::find_N5);
    m.def("find_M3", &props::find_M3);
    m.def("verify_witness", &props::verify_witness);
    m.def("atoms_below", &props::atoms_below);
    m.def("join_of", &props::join_of);
    m.def("meet_via_sets", &props::meet_via_sets);

    py::class_<props::SubsetOracleResult>(m, "SubsetOracleResult")
        .def_readonly("holds", &props::SubsetOracleResult::holds)
        .def_readonly("bad_element", &props::SubsetOracleResult::bad_element)
        .def_readonly("subsets_checked", &props::SubsetOracleResult::subsets_checked);
    m.def("unique_atomisticity_oracle", &props::unique_atomisticity_oracle, py::arg("lattice"),
          py::arg("max_atoms") = 20);

    py::class_<props::AtomDecomposition>(m, "AtomDecomposition")
        .def_readonly("atom_index", &props::AtomDecomposition::atom_index)
        .def_readonly("decomposition", &props::AtomDecomposition::decomposition);
    m.def("unique_decomposition", &props::unique_decomposition);

    // --------------------------------------------------------------- pspace
    py::class_<pspace::ProjectiveSpaceLattice>(m, "ProjectiveSpaceLattice")
        .def_property_readonly("lattice", &pspace::ProjectiveSpaceLattice::lattice,
                               py::return_value_policy::reference_internal)
        .def_property_readonly("field", &pspace::ProjectiveSpaceLattice::field,
                               py::return_value_policy::reference_internal)
        .def_property_readonly("ambient_dim", &pspace::ProjectiveSpaceLattice::ambient_dim)
        .def_property_readonly("size", &pspace::ProjectiveSpaceLattice::size)
        .def("subspace_of", &pspace::ProjectiveSpaceLattice::subspace_of,
             py::return_value_policy::reference_internal)
        .def("index_of", &pspace::ProjectiveSpaceLattice::index_of)
        .def("contains", &pspace::ProjectiveSpaceLattice::contains);
    m.def("build_projective_lattice", &pspace::build_projective_lattice, py::arg("field"), py::arg("n"),
          py::arg("budget") = pspace::kDefaultLatticeBudget);

    py::class_<pspace::GrassmannianSlice>(m, "GrassmannianSlice")
        .def_readonly("k", &pspace::GrassmannianSlice::k)
        .def_readonly("members", &pspace::GrassmannianSlice::members);
    m.def("grassmannian", &pspace::grassmannian);

    py::class_<pspace::MetricEquivalenceReport>(m, "MetricEquivalenceReport")
        .def_readonly("valuation_ok", &pspace::MetricEquivalenceReport::valuation_ok)
        .def_readonly("distances_agree", &pspace::MetricEquivalenceReport::distances_agree)
        .def_readonly("pairs_checked", &pspace::MetricEquivalenceReport::pairs_checked)
        .def_readonly("failing_pair", &pspace::MetricEquivalenceReport::failing_pair);
    m.def("metric_equivalence_check", &pspace::metric_equivalence_check);

    // ---------------------------------------------------------------- codes
    py::class_<codes::AxiomCheck>(m, "AxiomCheck")
        .def_readonly("axiom", &codes::AxiomCheck::axiom)
        .def_readonly("pass_", &codes::AxiomCheck::pass)
        .def_property_readonly("ok", [](const codes::AxiomCheck& a) { return a.pass; });

    py::class_<codes::AxiomWitness>(m, "AxiomWitness")
        .def_readonly("axiom", &codes::AxiomWitness::axiom)
        .def_readonly("codewords", &codes::AxiomWitness::codewords)
        .def_readonly("detail", &codes::AxiomWitness::detail);

    py::class_<codes::AxiomReport>(m, "AxiomReport")
        .def_readonly("axioms", &codes::AxiomReport::axioms)
        .def_readonly("witness", &codes::AxiomReport::witness)
        .def("all_pass", &codes::AxiomReport::all_pass)
        .def("to_json", [](const codes::AxiomReport& r) { return io::dump(io::axiom_report_to_json(r)); });

    py::class_<codes::SubspaceCode>(m, "SubspaceCode")
        .def_property_readonly("field", [](const codes::SubspaceCode& c) { return c.field; })
        .def_readonly("n", &codes::SubspaceCode::n)
        .def_readonly("codewords", &codes::SubspaceCode::codewords)
        .def_readonly("index_sets", &codes::SubspaceCode::index_sets)
        .def_readonly("boxplus_table", &codes::SubspaceCode::boxplus)
        .def_readonly("complement_map", &codes::SubspaceCode::complement)
        .def_readonly("blocks", &codes::SubspaceCode::blocks)
        .def_property_readonly("size", &codes::SubspaceCode::size)
        .def("index_of", &codes::SubspaceCode::index_of)
        .def("to_json", [](const codes::SubspaceCode& c) { return io::dump(io::code_to_json(c)); })
        .def_static("from_json",
                    [](const std::string& text) { return io::code_from_json(io::Json::parse(text)); })
        .def("__repr__", [](const codes::SubspaceCode& c) {
            return "SubspaceCode(q=" + std::to_string(c.field.q()) + ", n=" + std::to_string(c.n) +
                   ", size=" + std::to_string(c.size()) + ")";
        });

    m.def(
        "build_partition_code",
        [](const gf::Field& f, int n, const std::vector<gf::VectorGF>& vectors,
           const std::vector<std::vector<int>>& blocks) {
            return codes::build_partition_code({f, n, vectors, blocks});
        },
        py::arg("field"), py::arg("n"), py::arg("independent_set"), py::arg("blocks"));
    m.def("boxplus", &codes::boxplus);
    m.def("boxplus_index", &codes::boxplus_index);
    m.def("verify_linear", &codes::verify_linear);
    m.def("verify_closed_under_intersection", &codes::verify_closed_under_intersection);
    m.def("canonical_complement", &codes::canonical_complement);
    m.def("verify_complement", &codes::verify_complement);
    m.def("verify_axiom_witness", &codes::verify_axiom_witness);

    py::class_<codes::ComplementSearchResult>(m, "ComplementSearchResult")
        .def_readonly("codewords", &codes::ComplementSearchResult::codewords)
        .def_readonly("complement", &codes::ComplementSearchResult::complement)
        .def_readonly("candidates_checked", &codes::ComplementSearchResult::candidates_checked);
    m.def("search_complement", &codes::search_complement, py::arg("field"), py::arg("n"),
          py::arg("codewords"), py::arg("budget") = codes::kDefaultComplementSearchBudget);

    py::class_<codes::OneDimBoundReport>(m, "OneDimBoundReport")
        .def_readonly("count_dim1", &codes::OneDimBoundReport::count_dim1)
        .def_readonly("bound", &codes::OneDimBoundReport::bound)
        .def_readonly("ok", &codes::OneDimBoundReport::ok);
    m.def("one_dim_bound_check", &codes::one_dim_bound_check);

    // ------------------------------------------------------------------ lab
    py::class_<lab::NamedLattice>(m, "NamedLattice")
        .def_readonly("name", &lab::NamedLattice::name)
        .def_readonly("lattice", &lab::NamedLattice::L);
    m.def("build_catalog", &lab::build_catalog);
    m.def("partition_lattice", &lab::partition_lattice);
    m.def("sample_sublattices", &lab::sample_sublattices, py::arg("lattice"), py::arg("count"),
          py::arg("seed"), py::arg("max_seed_size") = 6);

    py::class_<lab::SublatticeSurveyResult>(m, "SublatticeSurveyResult")
        .def_readonly("host", &lab::SublatticeSurveyResult::host)
        .def_property_readonly("mode",
                               [](const lab::SublatticeSurveyResult& r) { return lab::to_string(r.mode); })
        .def_readonly("seed", &lab::SublatticeSurveyResult::seed)
        .def_readonly("total_sublattices_found", &lab::SublatticeSurveyResult::total_sublattices_found)
        .def_readonly("distributive_count", &lab::SublatticeSurveyResult::distributive_count)
        .def_readonly("max_distributive_size", &lab::SublatticeSurveyResult::max_distributive_size)
        .def_readonly("extremal_sublattices", &lab::SublatticeSurveyResult::extremal_sublattices)
        .def_readonly("distributive_sublattices", &lab::SublatticeSurveyResult::distributive_sublattices);
    m.def(
        "enumerate_sublattices",
        [](const lattice::FiniteLattice& L, const std::string& mode, std::uint64_t seed, int random_samples,
           const std::string& host) {
            lab::SurveyMode sm = mode == "exhaustive" ? lab::SurveyMode::exhaustive : lab::SurveyMode::sampled;
            if (mode != "exhaustive" && mode != "sampled")
                throw std::invalid_argument("mode must be 'exhaustive' or 'sampled'");
            return lab::enumerate_sublattices(L, sm, seed, random_samples, host);
        },
        py::arg("lattice"), py::arg("mode"), py::arg("seed") = 1, py::arg("random_samples") = 500,
        py::arg("host") = "");

    py::class_<lab::T2Report>(m, "T2Report")
        .def_readonly("host_height", &lab::T2Report::host_height)
        .def_readonly("bound", &lab::T2Report::bound)
        .def_readonly("max_size_found", &lab::T2Report::max_size_found)
        .def_readonly("extremal_count", &lab::T2Report::extremal_count)
        .def_readonly("failures", &lab::T2Report::failures)
        .def("ok", &lab::T2Report::ok);
    m.def("verify_T2", &lab::verify_T2);

    py::class_<lab::PhiBijection>(m, "PhiBijection")
        .def_readonly("atom_index", &lab::PhiBijection::atom_index)
        .def_readonly("subset_to_element", &lab::PhiBijection::subset_to_element)
        .def_readonly("verified", &lab::PhiBijection::verified);
    m.def("phi_bijection", &lab::phi_bijection, py::arg("lattice"), py::arg("max_atoms") = 20);

    py::class_<lab::C2Report>(m, "C2Report")
        .def_readonly("whitney", &lab::C2Report::whitney)
        .def_readonly("binomials", &lab::C2Report::binomials)
        .def_readonly("sublattice_atoms", &lab::C2Report::sublattice_atoms)
        .def_readonly("host_height", &lab::C2Report::host_height)
        .def_readonly("bounds_ok", &lab::C2Report::bounds_ok)
        .def_readonly("equality_all", &lab::C2Report::equality_all)
        .def_readonly("equality_iff_atoms_ok", &lab::C2Report::equality_iff_atoms_ok)
        .def("ok", &lab::C2Report::ok);
    m.def("verify_C2", &lab::verify_C2);

    m.def("code_from_sublattice", &lab::code_from_sublattice);

    py::class_<lab::T3T4Report>(m, "T3T4Report")
        .def_readonly("distributive_checked", &lab::T3T4Report::distributive_checked)
        .def_readonly("with_full_space", &lab::T3T4Report::with_full_space)
        .def_readonly("without_full_space", &lab::T3T4Report::without_full_space)
        .def_readonly("skipped_nonzero_bottom", &lab::T3T4Report::skipped_nonzero_bottom)
        .def_readonly("skipped_non_atomistic", &lab::T3T4Report::skipped_non_atomistic)
        .def_readonly("failures", &lab::T3T4Report::failures)
        .def("ok", &lab::T3T4Report::ok);
    m.def("verify_T3_T4", &lab::verify_T3_T4);

    py::class_<lab::CheckFailure>(m, "CheckFailure")
        .def_readonly("instance", &lab::CheckFailure::instance)
        .def_readonly("detail", &lab::CheckFailure::detail)
        .def_readonly("witness", &lab::CheckFailure::witness);

    py::class_<lab::SuiteReport>(m, "SuiteReport")
        .def_readonly("suite", &lab::SuiteReport::suite)
        .def_readonly("seed", &lab::SuiteReport::seed)
        .def_readonly("instances", &lab::SuiteReport::instances)
        .def_readonly("failures", &lab::SuiteReport::failures)
        .def("ok", &lab::SuiteReport::ok)
        .def("to_json", [](const lab::SuiteReport& r) { return io::dump(io::suite_report_to_json(r)); });

    m.def("suite_names", []() { return lab::suite_names(); });
    m.def(
        "run_theorem_suite",
        [](const std::string& name, std::uint64_t seed, int samples, std::optional<int> q,
           std::optional<int> n, std::uint64_t budget) {
            lab::SuiteOptions opts;
            opts.seed = seed;
            opts.sampled_sublattices = samples;
            opts.q = q;
            opts.n = n;
            opts.budget = budget;
            return lab::run_theorem_suite(name, opts);
        },
        py::arg("name"), py::arg("seed") = 20240811, py::arg("samples") = 500, py::arg("q") = std::nullopt,
        py::arg("n") = std::nullopt, py::arg("budget") = pspace::kDefaultLatticeBudget);
}
