// Command-line front end: generate allocations, verify allocation files,
// query the method planner and the published solution tables.
//
// Exit codes: 0 success/valid, 1 invalid input, 2 solution needs outside
// data, 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgp/io.hpp"
#include "sgp/planner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitDataRequired = 2;
constexpr int kExitInvalid = 3;

void print_node(const sgp::PlanNode& node, const std::string& format) {
    if (format == "tsv") {
        std::cout << node.method << "\t" << node.r << "\t" << node.max << "\t"
                  << sgp::to_string(node.status) << "\n";
    } else {
        std::cout << node.method << " r=" << node.r << " max=" << node.max
                  << " status=" << sgp::to_string(node.status) << "\n";
        if (!node.note.empty()) std::cout << "note: " << node.note << "\n";
    }
}

void print_cert(const sgp::AllocationCert& cert) {
    std::cout << "rounds: " << cert.rounds << "\n"
              << "valid: " << (cert.valid ? "yes" : "no") << "\n"
              << "max rounds: " << cert.max_bound << "\n"
              << "maximal: " << (cert.maximal ? "yes" : "no") << "\n"
              << "pairs covered: " << cert.pairs_covered << "/" << cert.pairs_total << "\n"
              << "missing pairs: " << cert.missing_pairs.size() << "\n";
    for (const auto& viol : cert.violations) std::cout << "violation: " << viol << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Social golfer allocations from combinatorial designs"};
    app.require_subcommand(1);

    std::string data_dir = sgp::DataRepo::default_dir();
    app.add_option("--data-dir", data_dir, "directory with bundled designs and tables");

    // generate
    auto* gen = app.add_subcommand("generate", "construct an allocation");
    int gen_v = 0, gen_size = 0;
    std::string gen_sizes_str, gen_counts_str;
    int gen_rounds = -1;
    std::string gen_output, gen_format = "text";
    gen->add_option("--players,-v", gen_v, "number of points")->required();
    gen->add_option("--size,-k", gen_size, "single block size");
    gen->add_option("--sizes", gen_sizes_str, "two adjacent block sizes k1,k2");
    gen->add_option("--counts", gen_counts_str, "blocks per round of each size: m1,m2");
    gen->add_option("--rounds", gen_rounds, "keep only the first r rounds");
    gen->add_option("--output,-o", gen_output, "output file (stdout when omitted)");
    gen->add_option("--format", gen_format, "text|tsv plan summary")->check(CLI::IsMember({"text", "tsv"}));

    // verify
    auto* ver = app.add_subcommand("verify", "check an allocation file");
    std::string ver_path;
    ver->add_option("path", ver_path, "allocation file")->required();

    // plan
    auto* plan = app.add_subcommand("plan", "show the method for (v, k)");
    int plan_v = 0, plan_k = 0;
    std::string plan_format = "text";
    plan->add_option("v", plan_v)->required();
    plan->add_option("k", plan_k)->required();
    plan->add_option("--format", plan_format)->check(CLI::IsMember({"text", "tsv"}));

    // lookup
    auto* look = app.add_subcommand("lookup", "published solutions for v");
    int look_v = 0, look_k = -1;
    look->add_option("v", look_v)->required();
    look->add_option("k", look_k, "restrict to one block size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ver->parsed()) {
            sgp::Allocation a;
            try {
                a = sgp::read_allocation_file(ver_path);
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return kExitBadInput;
            }
            sgp::AllocationCert cert = sgp::verify_allocation(a);
            print_cert(cert);
            return cert.valid ? kExitOk : kExitInvalid;
        }

        sgp::Planner planner{sgp::DataRepo(data_dir)};

        if (plan->parsed()) {
            sgp::PlanNode node = planner.optimal(plan_v, plan_k);
            print_node(node, plan_format);
            return node.status == sgp::PlanStatus::DataRequired ? kExitDataRequired : kExitOk;
        }
        if (look->parsed()) {
            auto rows = look_k > 0 ? planner.catalog().lookup(look_v, look_k)
                                   : planner.catalog().lookup(look_v);
            if (look_k > 0) {
                auto sga_rows = planner.catalog().lookup(look_v);
                for (const auto& row : sga_rows)
                    if (row.k2 == look_k || (row.k1 == look_k && row.k2 != 0)) rows.push_back(row);
            }
            if (rows.empty()) {
                std::cerr << "no published rows for v=" << look_v << "\n";
                return kExitBadInput;
            }
            std::cout << "v\tk1\tk2\tm1\tm2\tmax\tmethod\tr\n";
            for (const auto& row : rows)
                std::cout << row.v << "\t" << row.k1 << "\t" << (row.k2 ? std::to_string(row.k2) : "-")
                          << "\t" << row.m1 << "\t" << row.m2 << "\t" << row.max << "\t"
                          << row.method << "\t" << row.r << "\n";
            return kExitOk;
        }

        // generate
        std::vector<int> gen_sizes, gen_counts;
        if (gen_size > 0) gen_sizes.push_back(gen_size);
        auto split_ints = [](const std::string& s, std::vector<int>& out) {
            std::istringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        };
        split_ints(gen_sizes_str, gen_sizes);
        split_ints(gen_counts_str, gen_counts);
        if (gen_sizes.empty() || gen_sizes.size() > 2) {
            std::cerr << "need --size k or --sizes k1,k2\n";
            return kExitBadInput;
        }
        sgp::PlanNode node;
        if (gen_sizes.size() == 1) {
            if (!gen_counts.empty()) {
                std::cerr << "--counts only applies with two sizes\n";
                return kExitBadInput;
            }
            if (gen_v % gen_sizes[0] != 0) {
                std::cerr << "block size must divide the number of players\n";
                return kExitBadInput;
            }
            node = planner.optimal(gen_v, gen_sizes[0]);
        } else {
            if (gen_counts.size() != 2) {
                std::cerr << "two sizes need --counts m1,m2\n";
                return kExitBadInput;
            }
            sgp::SgaParams p{gen_v, gen_sizes[0], gen_sizes[1], gen_counts[0], gen_counts[1]};
            if (!p.consistent()) {
                std::cerr << "inconsistent sizes/counts: need k2=k1+1 and k1*m1+k2*m2=v\n";
                return kExitBadInput;
            }
            node = planner.plan_sga(p);
        }
        print_node(node, gen_format);
        if (!node.alloc) {
            std::cerr << "solution requires outside data (method " << node.method << ")\n";
            return kExitDataRequired;
        }
        sgp::Allocation out = *node.alloc;
        if (gen_rounds >= 0) {
            if (gen_rounds > (int)out.rounds.size()) {
                std::cerr << "only " << out.rounds.size() << " rounds available\n";
                return kExitBadInput;
            }
            out = sgp::truncate_rounds(out, gen_rounds);
            sgp::refresh_shape(out);
        }
        sgp::AllocationCert cert = sgp::verify_allocation(out);
        std::cout << "verified: " << (cert.valid ? "yes" : "no") << " rounds=" << cert.rounds
                  << " maximal=" << (cert.maximal ? "yes" : "no") << "\n";
        if (!cert.valid) return kExitInvalid;
        if (gen_output.empty()) {
            sgp::write_allocation(std::cout, out);
        } else {
            sgp::write_allocation_file(gen_output, out);
            std::cout << "wrote " << gen_output << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
