// Batch front end for the hereditary-class toolkit. Every command talks to
// the library through the C interface in hgc.h only.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hgc.h"

namespace {

constexpr int kUsageExit = 2;

[[noreturn]] void fail(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kUsageExit);
}

void check(hgc_status st) {
    if (st != HGC_OK) fail(hgc_last_error());
}

struct GraphDel {
    void operator()(hgc_graph* p) const { hgc_graph_free(p); }
};
struct ClassDel {
    void operator()(hgc_class* p) const { hgc_class_free(p); }
};
struct ReportDel {
    void operator()(hgc_report* p) const { hgc_report_free(p); }
};
struct MatroidDel {
    void operator()(hgc_matroid* p) const { hgc_matroid_free(p); }
};
struct MclassDel {
    void operator()(hgc_mclass* p) const { hgc_mclass_free(p); }
};
struct MlistDel {
    void operator()(hgc_matroid_list* p) const { hgc_matroid_list_free(p); }
};
using GraphPtr = std::unique_ptr<hgc_graph, GraphDel>;
using ClassPtr = std::unique_ptr<hgc_class, ClassDel>;
using ReportPtr = std::unique_ptr<hgc_report, ReportDel>;
using MatroidPtr = std::unique_ptr<hgc_matroid, MatroidDel>;
using MclassPtr = std::unique_ptr<hgc_mclass, MclassDel>;
using MlistPtr = std::unique_ptr<hgc_matroid_list, MlistDel>;

ClassPtr parse_class(const std::string& spec) {
    hgc_class* cls = nullptr;
    check(hgc_class_parse(spec.c_str(), &cls));
    return ClassPtr(cls);
}

std::string class_text(const hgc_class* cls) {
    char buf[256];
    check(hgc_class_name(cls, buf, sizeof buf));
    return buf;
}

// Data lines of a text artifact: blank lines and ">>" comments are skipped,
// trailing CR is stripped. Indices in command output refer to this list.
std::vector<std::string> data_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open input file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind(">>", 0) == 0) continue;
        lines.push_back(line);
    }
    return lines;
}

std::string default_output_dir() {
    const char* env = std::getenv("HGC_OUTPUT_DIR");
    return (env != nullptr && *env != '\0') ? env : "hgc_out";
}

int cmd_recognize(const std::string& class_spec, const std::string& input,
                  bool with_witness) {
    ClassPtr cls = parse_class(class_spec);
    const std::vector<std::string> lines = data_lines(input);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        hgc_graph* raw = nullptr;
        if (hgc_graph_decode(lines[i].c_str(), &raw) != HGC_OK)
            fail("graph " + std::to_string(i) + ": " + hgc_last_error());
        GraphPtr g(raw);
        int member = 0;
        if (!with_witness) {
            check(hgc_class_member(cls.get(), g.get(), &member));
            std::cout << i << "\t" << (member ? "true" : "false") << "\n";
            continue;
        }
        int u = -1;
        int v = -1;
        std::string witness = "-";
        const hgc_status st = hgc_class_witness(cls.get(), g.get(), &member, &u, &v);
        if (st == HGC_OK) {
            if (u >= 0 && v >= 0)
                witness = std::to_string(u) + "," + std::to_string(v);
            else if (u >= 0)
                witness = std::to_string(u);
        } else if (st == HGC_INVALID) {
            // Multi-edit class: no witness contract, fall back to membership.
            check(hgc_class_member(cls.get(), g.get(), &member));
        } else {
            check(st);
        }
        std::cout << i << "\t" << (member ? "true" : "false") << "\t" << witness
                  << "\n";
    }
    return 0;
}

int cmd_enumerate(int n_max, const std::string& dir, int threads) {
    if (n_max < 1) fail("--n-max must be at least 1");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) fail("cannot create output directory " + dir + ": " + ec.message());

    std::map<int, long long> counts;
    long long total = 0;
    for (int k = 1; k <= n_max; ++k) {
        const std::string path = dir + "/graphs_n" + std::to_string(k) + ".g6";
        long long count = 0;
        check(hgc_enumerate_to_file(k, path.c_str(), threads, &count));
        counts[k] = count;
        total += count;
        std::cout << k << "\t" << count << "\n";
    }

    std::ofstream manifest(dir + "/manifest.txt");
    if (!manifest) fail("cannot write manifest.txt in " + dir);
    manifest << "command = enumerate\n";
    manifest << "n_max = " << n_max << "\n";
    manifest << "threads = " << threads << "\n";
    manifest << "tool_version = " << hgc_version() << "\n";
    for (const auto& [k, count] : counts)
        manifest << "count_n" << k << " = " << count << "\n";
    manifest << "total = " << total << "\n";
    if (!manifest) fail("failed writing manifest.txt in " + dir);
    return 0;
}

void print_report(const hgc_report* report, const std::string& name,
                  const std::string& dir) {
    std::cout << "class = " << name << "\n";
    std::cout << "complete_through = " << hgc_report_complete_through(report) << "\n";
    if (hgc_report_has_bound(report))
        std::cout << "bound = " << hgc_report_bound(report) << "\n";
    else
        std::cout << "bound = none\n";
    std::cout << "total = " << hgc_report_total(report) << "\n";
    for (int order = 1; order <= 64; ++order) {
        const int count = hgc_report_order_count(report, order);
        if (count > 0) std::cout << "count_n" << order << " = " << count << "\n";
    }
    char note[256];
    check(hgc_report_cycle_note(report, note, sizeof note));
    if (note[0] != '\0') std::cout << "cycle_note = " << note << "\n";
    if (!dir.empty()) std::cout << "output_dir = " << dir << "\n";
}

int cmd_obstructions(const std::string& class_spec, int n_max,
                     const std::string& input, const std::string& dir,
                     int threads) {
    ClassPtr cls = parse_class(class_spec);
    hgc_report* raw = nullptr;
    if (!input.empty()) {
        check(hgc_obstructions_from_file(cls.get(), input.c_str(), threads, &raw));
    } else {
        if (n_max < 1) fail("--n-max must be at least 1 (or pass --input)");
        check(hgc_obstructions(cls.get(), n_max, threads, &raw));
    }
    ReportPtr report(raw);
    check(hgc_report_write(report.get(), dir.c_str()));
    print_report(report.get(), class_text(cls.get()), dir);
    return 0;
}

int cmd_verify(const std::string& duality_base, bool bounds,
               const std::string& class_spec, int n_max, int threads) {
    if (duality_base.empty() == !bounds)
        fail("verify needs exactly one of --duality <base> or --bounds");
    if (n_max < 1) fail("--n-max must be at least 1");

    if (!duality_base.empty()) {
        int ok = 0;
        char counterexample[256];
        check(hgc_duality_check(duality_base.c_str(), n_max, threads, &ok,
                                counterexample, sizeof counterexample));
        if (ok) {
            std::cout << "duality " << duality_base << " n_max=" << n_max
                      << " : ok\n";
            return 0;
        }
        std::cout << "duality " << duality_base << " n_max=" << n_max
                  << " : FAIL counterexample=" << counterexample << "\n";
        return 1;
    }

    if (class_spec.empty()) fail("--bounds requires --class");
    ClassPtr cls = parse_class(class_spec);
    hgc_report* raw = nullptr;
    check(hgc_obstructions(cls.get(), n_max, threads, &raw));
    ReportPtr report(raw);
    print_report(report.get(), class_text(cls.get()), "");
    int ok = 0;
    check(hgc_report_bound_ok(report.get(), &ok));
    std::cout << "bound_ok = " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

// Matroid class specs carry the field as a prefix: "gf2:free+add",
// "gf3:no-3-line". Returns the field and strips the prefix.
int split_field(std::string& spec) {
    if (spec.rfind("gf", 0) != 0 || spec.size() < 4 || spec[3] != ':' ||
        spec[2] < '0' || spec[2] > '9')
        fail("matroid class spec must look like gf2:<class>, got: " + spec);
    const int q = spec[2] - '0';
    spec = spec.substr(4);
    return q;
}

int cmd_matroid(const std::string& class_spec, int r_max, const std::string& input,
                const std::string& dir) {
    std::string id = class_spec;
    const int q = split_field(id);
    hgc_mclass* raw_cls = nullptr;
    check(hgc_mclass_parse(id.c_str(), &raw_cls));
    MclassPtr cls(raw_cls);

    if (!input.empty()) {
        const std::vector<std::string> lines = data_lines(input);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            hgc_matroid* raw = nullptr;
            if (hgc_matroid_parse(lines[i].c_str(), &raw) != HGC_OK)
                fail("matroid " + std::to_string(i) + ": " + hgc_last_error());
            MatroidPtr m(raw);
            // The text form names its own field; insist it matches the spec.
            char text[256];
            check(hgc_matroid_text(m.get(), text, sizeof text));
            if (text[0] != '0' + q)
                fail("matroid " + std::to_string(i) + " is not over GF(" +
                     std::to_string(q) + "): " + lines[i]);
            int member = 0;
            check(hgc_mclass_member(cls.get(), m.get(), &member));
            std::cout << i << "\t" << (member ? "true" : "false") << "\n";
        }
        return 0;
    }

    if (r_max < 1) fail("--n-max (the rank cap of the search) must be at least 1");
    hgc_matroid_list* raw_flats = nullptr;
    check(hgc_forbidden_flats(cls.get(), q, r_max, &raw_flats));
    MlistPtr flats(raw_flats);

    // For an add class the rank-bound theorem applies, fed by the base
    // class's complete forbidden-flat list (enumerated to the field cap).
    int has_bound = 0;
    long long bound = 0;
    const std::string add_suffix = "+add";
    if (id.size() > add_suffix.size() &&
        id.compare(id.size() - add_suffix.size(), add_suffix.size(), add_suffix) == 0) {
        const std::string base_id = id.substr(0, id.size() - add_suffix.size());
        hgc_mclass* raw_base = nullptr;
        check(hgc_mclass_parse(base_id.c_str(), &raw_base));
        MclassPtr base(raw_base);
        hgc_matroid_list* raw_base_flats = nullptr;
        check(hgc_forbidden_flats(base.get(), q, hgc_pg_rank_cap(q), &raw_base_flats));
        MlistPtr base_flats(raw_base_flats);
        if (hgc_matroid_list_count(base_flats.get()) > 0) {
            check(hgc_matroid_rank_bound(base_flats.get(), &bound));
            has_bound = 1;
        }
    }

    check(hgc_flat_report_write(flats.get(), class_spec.c_str(), q, r_max, has_bound,
                                bound, dir.c_str()));

    std::cout << "class = " << class_spec << "\n";
    std::cout << "q = " << q << "\n";
    std::cout << "r_max = " << r_max << "\n";
    std::cout << "total = " << hgc_matroid_list_count(flats.get()) << "\n";
    if (has_bound)
        std::cout << "bound = " << bound << "\n";
    else
        std::cout << "bound = none\n";
    const long long count = hgc_matroid_list_count(flats.get());
    for (long long i = 0; i < count; ++i) {
        hgc_matroid* raw = nullptr;
        check(hgc_matroid_list_get(flats.get(), i, &raw));
        MatroidPtr m(raw);
        char buf[256];
        check(hgc_matroid_text(m.get(), buf, sizeof buf));
        std::cout << "flat = " << buf << "\n";
    }
    std::cout << "output_dir = " << dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hereditary graph-class toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hgc_version()));

    std::string class_spec;
    std::string input;
    std::string output_dir = default_output_dir();
    std::string duality_base;
    int n_max = 0;
    int threads = 1;
    bool bounds = false;

    CLI::App* recognize = app.add_subcommand(
        "recognize", "membership table for a graph6 file, one index<TAB>bool line each");
    recognize->add_option("--class", class_spec, "class spec")->required();
    recognize->add_option("--input", input, "graph6 file")->required();

    CLI::App* member = app.add_subcommand(
        "member", "like recognize, plus a witness column for single-edit classes");
    member->add_option("--class", class_spec, "class spec")->required();
    member->add_option("--input", input, "graph6 file")->required();

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "write all graphs of orders 1..n-max as graph6 files");
    enumerate->add_option("--n-max", n_max, "largest order")->required();
    enumerate->add_option("--output-dir", output_dir, "artifact directory");
    enumerate->add_option("--threads", threads, "worker count");

    CLI::App* obstructions = app.add_subcommand(
        "obstructions", "enumerate minimal forbidden induced subgraphs of a class");
    obstructions->add_option("--class", class_spec, "class spec")->required();
    obstructions->add_option("--n-max", n_max, "largest order searched");
    obstructions->add_option("--input", input,
                             "candidate graph6 file instead of exhaustive search");
    obstructions->add_option("--output-dir", output_dir, "artifact directory");
    obstructions->add_option("--threads", threads, "worker count");

    CLI::App* verify = app.add_subcommand(
        "verify", "check the add/apex duality or the obstruction order bound");
    verify->add_option("--duality", duality_base,
                       "base class whose add/apex duality to check");
    verify->add_flag("--bounds", bounds, "check obstruction orders against the bound");
    verify->add_option("--class", class_spec, "class spec (with --bounds)");
    verify->add_option("--n-max", n_max, "largest order searched")->required();
    verify->add_option("--threads", threads, "worker count");

    CLI::App* matroid = app.add_subcommand(
        "matroid", "forbidden-flat search or membership table over GF(2)/GF(3)");
    matroid->add_option("--class", class_spec, "matroid class spec, e.g. gf2:free+add")
        ->required();
    matroid->add_option("--n-max", n_max, "rank cap of the search");
    matroid->add_option("--input", input, "matroid text file for a membership table");
    matroid->add_option("--output-dir", output_dir, "artifact directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // app.exit prints the help/version text or the error message; fold
        // all parse failures into the usage exit code.
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageExit;
    }

    if (recognize->parsed()) return cmd_recognize(class_spec, input, false);
    if (member->parsed()) return cmd_recognize(class_spec, input, true);
    if (enumerate->parsed()) return cmd_enumerate(n_max, output_dir, threads);
    if (obstructions->parsed())
        return cmd_obstructions(class_spec, n_max, input, output_dir, threads);
    if (verify->parsed())
        return cmd_verify(duality_base, bounds, class_spec, n_max, threads);
    if (matroid->parsed()) return cmd_matroid(class_spec, n_max, input, output_dir);
    return kUsageExit;
}
