#include "hurwitz/backends.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "hurwitz/characters.hpp"
#include "hurwitz/class_algebra.hpp"
#include "hurwitz/closed_forms.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/fock.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Brute: return "brute";
        case Backend::Character: return "character";
        case Backend::ClassAlg: return "class";
        case Backend::Graphs: return "graphs";
        case Backend::Fock: return "fock";
        case Backend::Closed: return "closed";
        case Backend::Auto: return "auto";
    }
    return "?";
}

std::optional<Backend> parse_backend(const std::string& name) {
    for (Backend b : {Backend::Brute, Backend::Character, Backend::ClassAlg, Backend::Graphs,
                      Backend::Fock, Backend::Closed, Backend::Auto}) {
        if (backend_name(b) == name) return b;
    }
    return std::nullopt;
}

Rat character_connected(const HurwitzInstance& inst) {
    return connected_from_disconnected(
        inst, [](const Partition& nu, int w) { return character_disconnected(nu, w); });
}

namespace {

Rat closed_form_connected(const HurwitzInstance& inst) {
    if (inst.genus == 0) return hurwitz_genus0(inst.profile);
    const auto& parts = inst.profile.parts();
    if (inst.degree == 2) return hurwitz_small_degree(inst.genus, SmallDegreeFormula::Degree2);
    if (parts == std::vector<int>{2, 1})
        return hurwitz_small_degree(inst.genus, SmallDegreeFormula::Degree3TwoOne);
    if (parts == std::vector<int>{3})
        return hurwitz_small_degree(inst.genus, SmallDegreeFormula::Degree3Three);
    if (parts == std::vector<int>{2, 1, 1})
        return hurwitz_small_degree(inst.genus, SmallDegreeFormula::Degree4TwoOneOne);
    throw FeasibilityError("no closed form for genus " + std::to_string(inst.genus) +
                           " profile (" + format_partition(inst.profile) + ")");
}

}  // namespace

Rat compute_hurwitz(const HurwitzInstance& inst, Backend backend, bool connected,
                    const ComputeOptions& opts) {
    switch (backend) {
        case Backend::Auto:
            if (inst.degree <= opts.character_bound)
                return compute_hurwitz(inst, Backend::Character, connected, opts);
            if (brute_force_feasible(inst, opts.brute))
                return compute_hurwitz(inst, Backend::Brute, connected, opts);
            throw FeasibilityError("no feasible backend for this instance");
        case Backend::Brute:
            return brute_force_hurwitz(inst, connected, opts.brute);
        case Backend::Character:
            if (!connected) return character_disconnected(inst.profile, inst.branch_count);
            return connected_from_disconnected(inst, [&](const Partition& nu, int w) {
                return character_disconnected(nu, w);
            });
        case Backend::ClassAlg:
            if (!connected) return class_algebra_disconnected(inst.profile, inst.branch_count);
            return connected_from_disconnected(inst, [](const Partition& nu, int w) {
                return class_algebra_disconnected(nu, w);
            });
        case Backend::Fock:
            if (!connected) return fock_disconnected(inst.profile, inst.branch_count, opts.fock_bound);
            return connected_from_disconnected(inst, [&](const Partition& nu, int w) {
                return fock_disconnected(nu, w, opts.fock_bound);
            });
        case Backend::Graphs:
            if (!connected)
                throw FeasibilityError("graphs backend computes connected numbers only");
            return monodromy_hurwitz(inst, opts.graphs);
        case Backend::Closed:
            if (!connected)
                throw FeasibilityError("closed forms compute connected numbers only");
            return closed_form_connected(inst);
    }
    throw std::invalid_argument("unknown backend");
}

std::string CheckReport::render() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "d=" << e.profile.size() << " g=" << e.genus << " mu=("
           << format_partition(e.profile) << ") " << (e.connected ? "connected" : "disconnected")
           << ":";
        for (const auto& [name, value] : e.values) os << ' ' << name << '=' << rat_to_string(value);
        os << (e.agree ? "  OK" : "  DIVERGENCE") << '\n';
    }
    os << (all_agree ? "all backends agree" : "FIRST DIVERGENCE: " + first_divergence) << '\n';
    return os.str();
}

CheckReport run_check_matrix(int dmax, int gmax, int threads, const std::string& corrupt_backend) {
    ComputeOptions opts;
    struct Task {
        HurwitzInstance inst;
        bool connected;
    };
    std::vector<Task> tasks;
    // Canonical report order: by d, then g, then partition order.
    for (int d = 1; d <= dmax; ++d) {
        for (int g = 0; g <= gmax; ++g) {
            for (const auto& mu : partitions_of(d)) {
                tasks.push_back({HurwitzInstance(g, mu), true});
                tasks.push_back({HurwitzInstance(g, mu), false});
            }
        }
    }
    std::vector<CheckEntry> entries(tasks.size());

    auto run_task = [&](size_t idx) {
        const Task& t = tasks[idx];
        CheckEntry e;
        e.genus = t.inst.genus;
        e.profile = t.inst.profile;
        e.connected = t.connected;
        std::vector<Backend> candidates = t.connected
            ? std::vector<Backend>{Backend::Brute, Backend::Character, Backend::ClassAlg,
                                   Backend::Fock, Backend::Graphs, Backend::Closed}
            : std::vector<Backend>{Backend::Brute, Backend::Character, Backend::ClassAlg,
                                   Backend::Fock};
        for (Backend b : candidates) {
            if (b == Backend::Brute && !brute_force_feasible(t.inst, opts.brute)) continue;
            try {
                Rat v = compute_hurwitz(t.inst, b, t.connected, opts);
                if (backend_name(b) == corrupt_backend) v += 1;
                e.values.emplace_back(backend_name(b), v);
            } catch (const FeasibilityError&) {
                // backend not applicable to this instance
            }
        }
        for (size_t i = 1; i < e.values.size(); ++i)
            if (e.values[i].second != e.values[0].second) e.agree = false;
        entries[idx] = std::move(e);
    };

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) {
        pool.emplace_back([&]() {
            while (true) {
                size_t idx = next.fetch_add(1);
                if (idx >= tasks.size()) return;
                run_task(idx);
            }
        });
    }
    for (auto& th : pool) th.join();

    CheckReport report;
    report.entries = std::move(entries);
    for (const auto& e : report.entries) {
        if (!e.agree && report.all_agree) {
            report.all_agree = false;
            std::ostringstream os;
            os << "g=" << e.genus << " mu=(" << format_partition(e.profile) << ") "
               << (e.connected ? "connected" : "disconnected");
            for (const auto& [name, value] : e.values) os << ' ' << name << '=' << rat_to_string(value);
            report.first_divergence = os.str();
        }
    }
    return report;
}

}  // namespace hurwitz
