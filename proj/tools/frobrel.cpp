// Command-line surface: verify, construct, classify, partition, diagram,
// census-table. JSON goes to stdout; diagnostics to stderr.
// Exit codes: 0 success, 1 invalid input data, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frobrel/classify.hpp"
#include "frobrel/constructors.hpp"
#include "frobrel/diagram.hpp"
#include "frobrel/io.hpp"
#include "frobrel/tqft.hpp"

namespace {

using namespace frobrel;

FrobObject load_object(const std::string& path) {
    FrobData d = load_frob_data(path);
    VerifyResult v = verify(d);
    if (!v.ok()) {
        std::string what = path + ": not a Frobenius object";
        for (const auto& f : v.failures) what += "\n  " + std::string(axiom_name(f.axiom)) + ": " + f.detail;
        throw std::runtime_error(what);
    }
    return *v.object;
}

std::vector<int> parse_twist(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

int run_verify(const std::string& path) {
    const FrobData d = load_frob_data(path);
    const UnitalityCheck u = check_unitality(d);
    const NondegeneracyCheck nd = check_nondegeneracy(d);
    const AssociativityCheck a = check_associativity(d);
    std::cout << "unitality: " << (u.ok ? "ok" : "FAIL (" + u.detail + ")") << "\n";
    std::cout << "nondegeneracy: " << (nd.ok ? "ok" : "FAIL (" + nd.detail + ")") << "\n";
    if (a.ok)
        std::cout << "associativity: ok\n";
    else
        std::cout << "associativity: FAIL (sides differ at (" << d.carrier.label(a.x) << ","
                  << d.carrier.label(a.y) << "," << d.carrier.label(a.z) << "))\n";
    const VerifyResult v = verify(d);
    if (!v.ok()) {
        std::cout << "valid: no\n";
        return 1;
    }
    std::cout << "commutative: " << (v.object->commutative() ? "yes" : "no") << "\n";
    std::cout << "alpha_hat:";
    for (int x = 0; x < d.n(); ++x)
        std::cout << " " << d.carrier.label(x) << "->" << d.carrier.label(v.object->alpha_hat(x));
    std::cout << "\nvalid: yes\n";
    return 0;
}

void emit_object(const FrobObject& obj) {
    FrobData d = obj.data();
    if (d.carrier.labels.empty()) d.carrier = letter_carrier(d.n());
    std::cout << dump_json(frob_data_to_json(d));
}

// Uniform random raw data over all (eta, eps, mu) on n elements; verifying
// samples must land in the census.
int sample_check(const Census& census, int n, long samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<CanonicalForm> canon;
    for (const auto& e : census.entries) canon.insert(e.canon);
    long verified = 0;
    for (long s = 0; s < samples; ++s) {
        const std::uint32_t unit = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
        const std::uint32_t counit = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
        std::vector<std::uint32_t> cells(n * n);
        for (auto& c : cells) c = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
        const FrobData d = make_frob_data(n, unit, counit, cells);
        if (!verify(d).ok()) continue;
        ++verified;
        if (!canon.count(canonical_form(d))) {
            std::cerr << "sample-check: verifying sample outside census!\n";
            return 1;
        }
    }
    std::cerr << "sample-check: " << samples << " samples, " << verified
              << " verified, all in census\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius objects in the category of sets and relations"};
    app.require_subcommand(1);

    // verify
    std::string verify_path;
    auto* cmd_verify = app.add_subcommand("verify", "Check the three axioms on an object file");
    cmd_verify->add_option("file", verify_path, "FrobObject JSON file")->required();

    // construct
    auto* cmd_construct = app.add_subcommand("construct", "Build objects from algebraic data");
    cmd_construct->require_subcommand(1);

    std::string grp_name;
    int grp_omega = 0;
    auto* con_group = cmd_construct->add_subcommand("group", "From a built-in group");
    con_group->add_option("--group", grp_name, "Group name (Z<m>, S<k>, D<m>, Q8)")->required();
    con_group->add_option("--omega", grp_omega, "Counit element index (default 0)");

    int ab_m = 0, ab_omega = 0;
    auto* con_abelian = cmd_construct->add_subcommand("abelian", "Cyclic group with shifted counit");
    con_abelian->add_option("--m", ab_m, "Order of the cyclic group")->required();
    con_abelian->add_option("--omega", ab_omega, "Counit element (default 0)");

    std::string conj_name;
    auto* con_conj = cmd_construct->add_subcommand("conjugacy", "Conjugacy classes of a group");
    con_conj->add_option("--group", conj_name, "Group name (Z<m>, S<k>, D<m>, Q8)")->required();

    int gpd_trivial = -1, gpd_pair = -1;
    std::string gpd_group, gpd_file, gpd_twist;
    auto* con_gpd = cmd_construct->add_subcommand("groupoid", "From a groupoid, optionally twisted");
    con_gpd->add_option("--trivial", gpd_trivial, "Trivial groupoid with this many objects");
    con_gpd->add_option("--pair", gpd_pair, "Pair groupoid on this many objects");
    con_gpd->add_option("--group", gpd_group, "One-object groupoid from a built-in group");
    con_gpd->add_option("--file", gpd_file, "Groupoid JSON file");
    con_gpd->add_option("--twist", gpd_twist, "Section of t as comma-separated morphism indices");

    std::vector<std::string> du_files;
    auto* con_du = cmd_construct->add_subcommand("disjoint-union", "Disjoint union of two objects");
    con_du->add_option("files", du_files, "Two FrobObject JSON files")->expected(2);

    // classify
    int cls_n = 0, cls_jobs = 1;
    long cls_samples = 0;
    std::uint64_t cls_seed = 0;
    std::string cls_table = "json", cls_out;
    bool cls_no_annotate = false;
    auto* cmd_classify = app.add_subcommand("classify", "Census of all objects on n elements");
    cmd_classify->add_option("--n", cls_n, "Carrier size")->required();
    cmd_classify->add_option("--jobs", cls_jobs, "Worker count (default 1)");
    cmd_classify->add_option("--table", cls_table, "Output form: json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    cmd_classify->add_option("--out", cls_out, "Write census JSON to this file");
    cmd_classify->add_option("--sample-check", cls_samples,
                             "Run this many random-data completeness samples");
    cmd_classify->add_option("--seed", cls_seed, "Seed for --sample-check (default 0)");
    cmd_classify->add_flag("--no-annotate", cls_no_annotate, "Skip construction annotations");

    // partition
    std::string part_path;
    int part_max_genus = -1;
    auto* cmd_partition = app.add_subcommand("partition", "Partition function of an object");
    cmd_partition->add_option("file", part_path, "FrobObject JSON file")->required();
    cmd_partition->add_option("--max-genus", part_max_genus,
                              "Also list the values for g = 0..G");

    // diagram
    std::string dia_expr, dia_object;
    std::vector<std::string> dia_equal;
    auto* cmd_diagram = app.add_subcommand("diagram", "Evaluate string-diagram words");
    cmd_diagram->add_option("--expr", dia_expr, "Diagram word to evaluate");
    cmd_diagram->add_option("--equal", dia_equal, "Two diagram words to compare")->expected(2);
    cmd_diagram->add_option("--object", dia_object, "FrobObject JSON file")->required();

    // census-table
    int ct_n = -1;
    std::string ct_census;
    auto* cmd_table = app.add_subcommand("census-table", "Markdown census table");
    cmd_table->add_option("--n", ct_n, "Classify this carrier size");
    cmd_table->add_option("--census", ct_census, "Render an existing census JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_verify) return run_verify(verify_path);

        if (*cmd_construct) {
            if (*con_group) {
                const auto g = builtin_group(grp_name);
                if (!g) throw std::runtime_error("unknown group: " + grp_name);
                emit_object(group_to_frobenius(*g, grp_omega));
            } else if (*con_abelian) {
                emit_object(group_to_frobenius(cyclic_group(ab_m), ab_omega));
            } else if (*con_conj) {
                const auto g = builtin_group(conj_name);
                if (!g) throw std::runtime_error("unknown group: " + conj_name);
                emit_object(conjugacy_classes_to_frobenius(*g));
            } else if (*con_gpd) {
                std::optional<FiniteGroupoid> gpd;
                if (gpd_trivial >= 0) gpd = trivial_groupoid(gpd_trivial);
                else if (gpd_pair >= 0) gpd = pair_groupoid(gpd_pair);
                else if (!gpd_group.empty()) {
                    const auto g = builtin_group(gpd_group);
                    if (!g) throw std::runtime_error("unknown group: " + gpd_group);
                    gpd = group_as_groupoid(*g);
                } else if (!gpd_file.empty()) {
                    gpd = groupoid_from_json(parse_json_file(gpd_file));
                } else {
                    std::cerr << "construct groupoid: give one of --trivial/--pair/--group/--file\n";
                    return 2;
                }
                std::optional<Section> twist;
                if (!gpd_twist.empty()) twist = Section{parse_twist(gpd_twist)};
                emit_object(groupoid_to_frobenius(*gpd, twist));
            } else if (*con_du) {
                emit_object(disjoint_union(load_object(du_files[0]), load_object(du_files[1])));
            }
            return 0;
        }

        if (*cmd_classify) {
            ClassifyOptions opts;
            opts.jobs = cls_jobs;
            opts.annotate = !cls_no_annotate;
            const Census census = classify(cls_n, opts);
            const njson j = census_to_json(census);
            if (!cls_out.empty()) {
                std::ofstream out(cls_out);
                out << dump_json(j);
                if (!out) throw std::runtime_error("cannot write " + cls_out);
                std::cerr << "n=" << cls_n << ": " << census.count() << " objects -> " << cls_out
                          << "\n";
            } else if (cls_table == "markdown") {
                std::cout << census_markdown(j);
            } else {
                std::cout << dump_json(j);
            }
            if (cls_samples > 0) return sample_check(census, cls_n, cls_samples, cls_seed);
            return 0;
        }

        if (*cmd_partition) {
            const FrobObject obj = load_object(part_path);
            if (!obj.commutative())
                std::cerr << "warning: object is not commutative; the sequence is formal, not a "
                             "surface invariant\n";
            const PartitionFunction pf = partition_function(obj);
            njson j = partition_to_json(pf);
            if (part_max_genus >= 0) {
                njson values = njson::array();
                for (int g = 0; g <= part_max_genus; ++g) values.push_back(pf.value_at(g));
                j["values"] = values;
            }
            std::cout << dump_json(j);
            return 0;
        }

        if (*cmd_diagram) {
            const FrobObject obj = load_object(dia_object);
            if (!dia_equal.empty()) {
                const Diagram d1 = parse_diagram(dia_equal[0]);
                const Diagram d2 = parse_diagram(dia_equal[1]);
                std::cout << (equal_diagrams(d1, d2, obj) ? "true" : "false") << "\n";
            } else if (!dia_expr.empty()) {
                std::cout << dump_json(relation_to_json(evaluate(parse_diagram(dia_expr), obj)));
            } else {
                std::cerr << "diagram: give --expr or --equal\n";
                return 2;
            }
            return 0;
        }

        if (*cmd_table) {
            njson j;
            if (!ct_census.empty()) {
                j = parse_json_file(ct_census);
            } else if (ct_n >= 0) {
                j = census_to_json(classify(ct_n));
            } else {
                std::cerr << "census-table: give --n or --census\n";
                return 2;
            }
            std::cout << census_markdown(j);
            return 0;
        }
    } catch (const DiagramParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
