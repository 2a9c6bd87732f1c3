#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz/backends.hpp"
#include "hurwitz/characters.hpp"
#include "hurwitz/class_algebra.hpp"
#include "hurwitz/closed_forms.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/fock.hpp"
#include "hurwitz/series.hpp"

using nlohmann::json;
using namespace hurwitz;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitDivergence = 3;

json instance_json(const HurwitzInstance& inst, bool connected, const std::string& backend,
                   const Rat& value) {
    json j;
    j["genus"] = inst.genus;
    j["profile"] = inst.profile.parts();
    j["degree"] = inst.degree;
    j["branch_points"] = inst.branch_count;
    j["connected"] = connected;
    j["backend"] = backend;
    j["value"] = rat_to_string(value);
    return j;
}

Backend resolve_auto(const HurwitzInstance& inst, const ComputeOptions& opts) {
    if (inst.degree <= opts.character_bound) return Backend::Character;
    if (brute_force_feasible(inst, opts.brute)) return Backend::Brute;
    throw FeasibilityError("no feasible backend for this instance");
}

void print_fock_debug(const HurwitzInstance& inst) {
    FockVector u = FockVector::vacuum();
    for (int part : inst.profile.parts()) u = apply_alpha(-part, u);
    std::cout << "# support of prod alpha_{-mu_i} |0>:\n";
    for (const auto& [lambda, amp] : u.amplitudes()) {
        std::cout << "#   (" << format_partition(lambda) << ") amplitude "
                  << rat_to_string(amp) << "  maya " << maya_ascii(lambda) << "\n";
    }
    std::cout << "# after F_2^" << inst.branch_count << ":\n";
    for (const auto& [lambda, amp] : u.amplitudes()) {
        Rat scaled = amp * rpow(content_sum_maya(lambda),
                                static_cast<unsigned long>(inst.branch_count));
        std::cout << "#   (" << format_partition(lambda) << ") amplitude "
                  << rat_to_string(scaled) << "\n";
    }
}

int cmd_compute(int genus, const std::string& profile_text, const std::string& backend_text,
                bool disconnected, const std::string& format, bool debug) {
    HurwitzInstance inst(genus, parse_partition(profile_text));
    auto backend = parse_backend(backend_text);
    if (!backend) {
        std::cerr << "unknown backend: " << backend_text << "\n";
        return kExitUsage;
    }
    ComputeOptions opts;
    Backend actual = *backend == Backend::Auto ? resolve_auto(inst, opts) : *backend;
    if (debug && actual == Backend::Fock) print_fock_debug(inst);
    Rat value = compute_hurwitz(inst, actual, !disconnected, opts);
    if (format == "json") {
        std::cout << instance_json(inst, !disconnected, backend_name(actual), value).dump()
                  << "\n";
    } else {
        std::cout << "genus: " << inst.genus << "\n"
                  << "profile: " << format_partition(inst.profile) << "\n"
                  << "degree: " << inst.degree << "\n"
                  << "length: " << inst.profile.length() << "\n"
                  << "branch_points: " << inst.branch_count << "\n"
                  << "connected: " << (disconnected ? "false" : "true") << "\n"
                  << "backend: " << backend_name(actual) << "\n"
                  << "value: " << rat_to_string(value) << "\n";
    }
    return 0;
}

int cmd_check(int dmax, int gmax, int threads, const std::string& corrupt,
              const std::string& format) {
    CheckReport report = run_check_matrix(dmax, gmax, threads, corrupt);
    if (format == "json") {
        json j;
        j["all_agree"] = report.all_agree;
        j["first_divergence"] = report.first_divergence;
        json rows = json::array();
        for (const auto& e : report.entries) {
            json r;
            r["genus"] = e.genus;
            r["profile"] = e.profile.parts();
            r["connected"] = e.connected;
            r["agree"] = e.agree;
            json vals = json::object();
            for (const auto& [name, v] : e.values) vals[name] = rat_to_string(v);
            r["values"] = vals;
            rows.push_back(r);
        }
        j["entries"] = rows;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << report.render();
    }
    return report.all_agree ? 0 : kExitDivergence;
}

int cmd_table(int degree, int gmax, const std::string& format) {
    const auto& profiles = partitions_of(degree);
    std::vector<std::vector<Rat>> values(profiles.size());
    for (size_t i = 0; i < profiles.size(); ++i) {
        for (int g = 0; g <= gmax; ++g) {
            values[i].push_back(character_connected(HurwitzInstance(g, profiles[i])));
        }
    }
    if (format == "json") {
        json j;
        j["degree"] = degree;
        j["gmax"] = gmax;
        json rows = json::array();
        for (size_t i = 0; i < profiles.size(); ++i) {
            json r;
            r["profile"] = profiles[i].parts();
            json vs = json::array();
            for (const auto& v : values[i]) vs.push_back(rat_to_string(v));
            r["values"] = vs;
            rows.push_back(r);
        }
        j["rows"] = rows;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "mu\\g";
        for (int g = 0; g <= gmax; ++g) std::cout << ',' << g;
        std::cout << "\n";
        for (size_t i = 0; i < profiles.size(); ++i) {
            std::cout << '"' << format_partition(profiles[i]) << '"';
            for (const auto& v : values[i]) std::cout << ',' << rat_to_string(v);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_chartable(int degree, const std::string& out_path) {
    const CharacterTable& table = character_table(degree);
    std::ostringstream os;
    os << "lambda\\mu";
    for (const auto& mu : table.index) os << ",\"" << format_partition(mu) << '"';
    os << "\n";
    for (size_t l = 0; l < table.index.size(); ++l) {
        os << '"' << format_partition(table.index[l]) << '"';
        for (size_t m = 0; m < table.index.size(); ++m) os << ',' << table.chi[l][m].get_str();
        os << "\n";
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        f << os.str();
    }
    return 0;
}

int cmd_graphs(int genus, const std::string& profile_text, const std::string& out_dir,
               const std::string& combined) {
    HurwitzInstance inst(genus, parse_partition(profile_text));
    auto graphs = enumerate_graphs(inst);
    Rat total(0);
    for (const auto& g : graphs) total += g.contribution;
    std::cout << "classes: " << graphs.size() << "\n";
    for (size_t i = 0; i < graphs.size(); ++i) {
        std::cout << "class " << i << ": contribution " << rat_to_string(graphs[i].contribution)
                  << " (interior product " << graphs[i].interior_product.get_str() << ", aut 2^"
                  << graphs[i].wiener_count + graphs[i].fork_count << ", labeled classes "
                  << graphs[i].fine_class_count << ")\n";
    }
    std::cout << "total: " << rat_to_string(total) << "\n";
    if (!combined.empty()) {
        std::ofstream f(combined);
        f << export_dot_combined(graphs);
    } else if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (size_t i = 0; i < graphs.size(); ++i) {
            std::ofstream f(std::filesystem::path(out_dir) /
                            ("class_" + std::to_string(i) + ".dot"));
            f << export_dot(graphs[i]);
        }
    }
    return 0;
}

int cmd_series(int p_cap, int t_cap, bool disconnected, const std::string& backend_text) {
    std::function<Rat(const Partition&, int)> raw;
    if (backend_text == "class") {
        raw = [](const Partition& nu, int w) { return class_algebra_disconnected(nu, w); };
    } else if (backend_text == "character") {
        raw = [](const Partition& nu, int w) { return character_disconnected(nu, w); };
    } else if (backend_text == "fock") {
        raw = [](const Partition& nu, int w) { return fock_disconnected(nu, w); };
    } else {
        std::cerr << "series backend must be class, character, or fock\n";
        return kExitUsage;
    }
    if (disconnected) {
        std::cout << assemble_series_raw(raw, p_cap, t_cap).dump();
    } else {
        std::cout << series_log(assemble_series_raw(raw, p_cap, t_cap, true)).dump();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hurwitz number computation through six backends"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "compute one Hurwitz number");
    int genus = 0;
    std::string profile, backend_text = "auto", format = "text";
    bool disconnected = false, connected_flag = false, debug = false;
    compute->add_option("--genus,-g", genus, "genus")->required();
    compute->add_option("--profile,-p", profile, "profile, e.g. 2,1 or 2,1^2")->required();
    compute->add_option("--backend,-b", backend_text,
                        "brute|character|class|graphs|fock|closed|auto");
    compute->add_flag("--disconnected", disconnected, "compute the disconnected number");
    compute->add_flag("--connected", connected_flag, "compute the connected number (default)");
    compute->add_option("--format,-f", format, "text|json");
    compute->add_flag("--debug", debug, "print Fock-space intermediates");

    // check
    auto* check = app.add_subcommand("check", "cross-validate all backends");
    int dmax = 4, gmax = 2, threads = 0;
    std::string corrupt, check_format = "text";
    check->add_option("--dmax", dmax, "maximum degree")->required();
    check->add_option("--gmax", gmax, "maximum genus")->required();
    check->add_option("--threads", threads, "worker threads (0 = auto)");
    check->add_option("--corrupt-backend", corrupt, "perturb one backend (self-test hook)");
    check->add_option("--format,-f", check_format, "text|json");

    // table
    auto* table = app.add_subcommand("table", "table of h_{g,mu} for all mu of one degree");
    int t_degree = 3, t_gmax = 2;
    std::string t_format = "csv";
    table->add_option("--degree,-d", t_degree, "degree")->required();
    table->add_option("--gmax", t_gmax, "maximum genus")->required();
    table->add_option("--format,-f", t_format, "csv|json");

    // chartable
    auto* chartable = app.add_subcommand("chartable", "character table of S_d as CSV");
    int c_degree = 5;
    std::string c_out;
    chartable->add_option("--degree,-d", c_degree, "degree")->required();
    chartable->add_option("--out,-o", c_out, "output file (default stdout)");

    // graphs
    auto* graphs = app.add_subcommand("graphs", "monodromy graph classes and DOT export");
    int gr_genus = 0;
    std::string gr_profile, gr_out, gr_combined;
    graphs->add_option("--genus,-g", gr_genus, "genus")->required();
    graphs->add_option("--profile,-p", gr_profile, "profile")->required();
    graphs->add_option("--out,-o", gr_out, "directory for one DOT file per class");
    graphs->add_option("--combined", gr_combined, "single DOT file with clusters");

    // series
    auto* series = app.add_subcommand("series", "dump the truncated generating function");
    int s_pcap = 4, s_tcap = 6;
    bool s_disconnected = false;
    std::string s_backend = "class";
    series->add_option("--pcap", s_pcap, "total p-weight cap D")->required();
    series->add_option("--tcap", s_tcap, "t-degree cap W")->required();
    series->add_flag("--disconnected", s_disconnected, "dump H* instead of H");
    series->add_option("--backend,-b", s_backend, "class|character|fock");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(genus, profile, backend_text, disconnected, format, debug);
        if (check->parsed()) return cmd_check(dmax, gmax, threads, corrupt, check_format);
        if (table->parsed()) return cmd_table(t_degree, t_gmax, t_format);
        if (chartable->parsed()) return cmd_chartable(c_degree, c_out);
        if (graphs->parsed()) return cmd_graphs(gr_genus, gr_profile, gr_out, gr_combined);
        if (series->parsed()) return cmd_series(s_pcap, s_tcap, s_disconnected, s_backend);
    } catch (const FeasibilityError& e) {
        if ((compute->parsed() && format == "json") || (check->parsed() && check_format == "json")) {
            json j;
            j["error"] = e.what();
            j["code"] = kExitInfeasible;
            std::cout << j.dump() << "\n";
        } else {
            std::cerr << "infeasible: " << e.what() << "\n";
        }
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
