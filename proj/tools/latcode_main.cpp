// latcode command line: build lattices and codes, run property checks and
// theorem suites, export DOT/JSON.
//
// Exit codes: 0 success / all properties hold / zero suite failures,
//             1 a checked property or suite failed,
//             2 usage or input error,
//             3 budget exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "latcode/json_io.hpp"

using namespace latcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const std::string& out_path, const std::string& contents) {
    if (out_path.empty())
        std::cout << contents;
    else
        io::write_file_atomic(out_path, contents);
}

// Pipe-delimited, 1-based block syntax: "1,2|3" -> {{0,1},{2}}.
std::vector<std::vector<int>> parse_blocks(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::stringstream outer(text);
    std::string block;
    while (std::getline(outer, block, '|')) {
        std::vector<int> entries;
        std::stringstream inner(block);
        std::string tok;
        while (std::getline(inner, tok, ',')) {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) throw std::invalid_argument("bad block entry '" + tok + "'");
            entries.push_back(v - 1);
        }
        blocks.push_back(entries);
    }
    return blocks;
}

int run_check(const std::string& input, const std::string& properties, const std::string& format,
              const std::string& out) {
    lattice::FiniteLattice L = io::lattice_from_json(io::parse_file(input));
    std::vector<props::Property> wanted;
    std::stringstream ss(properties);
    std::string name;
    while (std::getline(ss, name, ',')) wanted.push_back(props::property_from_string(name));
    if (wanted.empty()) throw std::invalid_argument("no properties requested");

    bool all_hold = true;
    io::Json reports = io::Json::array();
    std::ostringstream text;
    for (props::Property p : wanted) {
        props::PropertyReport r;
        switch (p) {
            case props::Property::modular: r = props::is_modular(L); break;
            case props::Property::semimodular: r = props::is_semimodular(L); break;
            case props::Property::distributive: r = props::is_distributive(L); break;
            case props::Property::atomic: r = props::is_atomic(L); break;
            case props::Property::atomistic: r = props::is_atomistic(L); break;
            case props::Property::uniquely_atomistic: r = props::is_uniquely_atomistic(L); break;
            case props::Property::geometric: r = props::is_geometric(L); break;
        }
        all_hold = all_hold && r.holds;
        reports.push_back(io::property_report_to_json(r));
        text << props::to_string(p) << ": " << (r.holds ? "true" : "false");
        if (r.witness) text << "  [witness " << props::to_string(r.witness->kind) << " at (";
        if (r.witness) {
            for (size_t i = 0; i < r.witness->elements.size(); ++i)
                text << (i ? ", " : "") << r.witness->elements[i];
            text << ")]";
        }
        text << "\n";
    }
    emit(out, format == "json" ? io::dump(reports) : text.str());
    return all_hold ? kExitOk : kExitFailed;
}

struct BuildArgs {
    int q = 2;
    int n = 2;
    std::string out, dot, subspaces, blocks;
    std::uint64_t budget = pspace::kDefaultLatticeBudget;
};

int run_build(const BuildArgs& args, const std::string& kind) {
    const int q = args.q, n = args.n;
    const std::string& out = args.out;
    const std::string& dot = args.dot;
    const std::uint64_t budget = args.budget;

    if (kind == "pspace") {
        gf::Field f(q);
        pspace::ProjectiveSpaceLattice P = pspace::build_projective_lattice(f, n, budget);
        emit(out, io::dump(io::lattice_to_json(P.lattice())));
        if (!dot.empty()) io::write_file_atomic(dot, lattice::hasse_export(P.lattice()));
        const std::string& table = args.subspaces;
        if (!table.empty()) {
            io::Json t;
            t["q"] = f.q();
            t["modulus"] = f.modulus().empty() ? io::Json(nullptr) : io::Json(f.modulus());
            t["n"] = n;
            io::Json rows = io::Json::array();
            for (int i = 0; i < P.size(); ++i) rows.push_back(P.subspace_of(i).basis);
            t["subspaces"] = rows;
            io::write_file_atomic(table, io::dump(t));
        }
        return kExitOk;
    }
    if (kind == "boolean") {
        lattice::FiniteLattice L = lattice::boolean_lattice(n);
        emit(out, io::dump(io::lattice_to_json(L)));
        if (!dot.empty()) io::write_file_atomic(dot, lattice::hasse_export(L));
        return kExitOk;
    }
    if (kind == "catalog") {
        if (out.empty()) throw std::invalid_argument("build catalog needs --out DIR");
        std::filesystem::create_directories(out);
        for (const auto& entry : lab::build_catalog()) {
            io::write_file_atomic(out + "/" + entry.name + ".json", io::dump(io::lattice_to_json(entry.L)));
            if (!dot.empty())
                io::write_file_atomic(out + "/" + entry.name + ".dot", lattice::hasse_export(entry.L));
        }
        return kExitOk;
    }
    // partition-code
    if (args.blocks.empty()) throw std::invalid_argument("build partition-code needs --blocks \"1|2|3\"");
    std::vector<std::vector<int>> blocks = parse_blocks(args.blocks);
    int r = 0;
    for (const auto& b : blocks)
        for (int v : b) r = std::max(r, v + 1);
    if (r > n) throw std::invalid_argument("block entries exceed the ambient dimension");
    codes::PartitionCodeSpec spec{gf::Field(q), n, {}, blocks};
    for (int i = 0; i < r; ++i) {
        gf::VectorGF v(n, 0);
        v[i] = 1;
        spec.independent_set.push_back(v);
    }
    codes::SubspaceCode code = codes::build_partition_code(spec);
    emit(out, io::dump(io::code_to_json(code)));
    return kExitOk;
}

int run_theorems(const std::string& suite, const lab::SuiteOptions& opts, const std::string& format,
                 const std::string& out) {
    lab::SuiteReport rep = lab::run_theorem_suite(suite, opts);
    io::Json j = io::suite_report_to_json(rep);
    if (!out.empty()) io::write_file_atomic(out, io::dump(j));
    if (format == "json") {
        if (out.empty()) std::cout << io::dump(j);
    } else {
        std::cout << "suite " << rep.suite << ": " << rep.instances << " instances, " << rep.failures.size()
                  << " failures";
        if (rep.seed) std::cout << " (seed " << *rep.seed << ")";
        std::cout << "\n";
        for (const auto& f : rep.failures) std::cout << "  " << f.instance << ": " << f.detail << "\n";
    }
    return rep.ok() ? kExitOk : kExitFailed;
}

int run_export(const std::string& input, const std::string& format, const std::string& out) {
    lattice::FiniteLattice L = io::lattice_from_json(io::parse_file(input));
    if (format == "dot")
        emit(out, lattice::hasse_export(L));
    else
        emit(out, io::dump(io::lattice_to_json(L)));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-lattice and subspace-code toolkit"};
    app.require_subcommand(1);

    std::string format = "text", out, input, properties, suite;
    std::uint64_t seed = 20240811;
    std::uint64_t budget = pspace::kDefaultLatticeBudget;
    int q = 2, n = 2, samples = 500;

    CLI::App* check = app.add_subcommand("check", "decide lattice properties of a lattice JSON file");
    check->add_option("input", input, "lattice JSON file")->required();
    check->add_option("--properties", properties, "comma-separated property list")
        ->default_val("modular,semimodular,distributive,atomic,atomistic,uniquely_atomistic,geometric");
    check->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    check->add_option("--out", out, "write the report here instead of stdout");

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "construct lattices and codes");
    build->require_subcommand(1);
    for (const char* kind : {"pspace", "boolean", "catalog", "partition-code"}) {
        CLI::App* sub = build->add_subcommand(kind);
        sub->add_option("-q", build_args.q, "field size");
        sub->add_option("-n", build_args.n, "ambient dimension / ground-set size");
        sub->add_option("--blocks", build_args.blocks, "partition blocks, pipe-delimited 1-based: \"1,2|3\"");
        sub->add_option("--out", build_args.out, "output path (directory for catalog)");
        sub->add_option("--dot", build_args.dot, "also write a DOT rendering here");
        sub->add_option("--subspaces", build_args.subspaces, "also write the index-to-rows subspace table here");
        sub->add_option("--budget", build_args.budget, "element budget");
    }

    CLI::App* theorems = app.add_subcommand("theorems", "run theorem verification suites");
    CLI::App* run = theorems->add_subcommand("run", "run one suite");
    run->add_option("suite", suite, "suite name")->required();
    run->add_option("-q", q, "scope: field size");
    run->add_option("-n", n, "scope: ambient dimension");
    run->add_option("--seed", seed, "sampling seed");
    run->add_option("--samples", samples, "sampled sublattice count");
    run->add_option("--budget", budget, "element budget");
    run->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    run->add_option("--out", out, "write the JSON report here");

    CLI::App* exporter = app.add_subcommand("export", "re-emit a lattice JSON file as JSON or DOT");
    exporter->add_option("input", input, "lattice JSON file")->required();
    exporter->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
    exporter->add_option("--out", out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(input, properties, format, out);
        if (build->parsed()) {
            for (const char* kind : {"pspace", "boolean", "catalog", "partition-code"})
                if (build->get_subcommand(kind)->parsed()) return run_build(build_args, kind);
        }
        if (theorems->parsed() && run->parsed()) {
            lab::SuiteOptions opts;
            opts.seed = seed;
            opts.sampled_sublattices = samples;
            opts.budget = budget;
            if (run->count("-q")) opts.q = q;
            if (run->count("-n")) opts.n = n;
            return run_theorems(suite, opts, format, out);
        }
        if (exporter->parsed()) return run_export(input, format, out);
        std::cerr << "nothing to do\n";
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
