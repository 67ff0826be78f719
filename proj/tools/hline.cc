// Copyright 2026 The hamming-line Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hline/builder.h"
#include "hline/code_tower.h"
#include "hline/sim.h"
#include "hline/verifier.h"

using namespace hline;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int level = 0;
    int levels = 1;
    std::vector<int> level_list{0};
    uint32_t cycles = 1;
    double p = 0;
    std::string p_grid;
    uint64_t shots = 1000;
    uint64_t seed = 1;
    std::string out;
    uint64_t budget = 0;
    std::string idle_noise = "on";
    uint32_t workers = 1;
    std::string property = "all";
    bool two_faults = false;
    std::string gadget = "ec";
    uint32_t logical = 0;
    bool measure_depth = false;
};

// One comment line per setting; identical configs give identical headers.
std::vector<std::string> header(const RunConfig &c, const std::vector<std::pair<std::string, std::string>> &kv) {
    std::vector<std::string> h{"hline " HLINE_VERSION " " + c.command};
    for (const auto &[k, v] : kv) {
        h.push_back(k + "=" + v);
    }
    return h;
}

std::string header_text(const std::vector<std::string> &h) {
    std::string s;
    for (const auto &l : h) {
        s += "# " + l + "\n";
    }
    return s;
}

std::string fmt(double v) {
    std::ostringstream o;
    o << std::setprecision(10) << v;
    return o.str();
}

void emit(const RunConfig &c, const std::string &text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open '" + c.out + "' for writing");
    }
    f << text;
}

uint64_t budget_of(const RunConfig &c) { return c.budget ? c.budget : qubit_budget_from_env(); }

// Levels past the gadget compiler are refused with a resource error when they exceed the budget.
void check_level(int level, uint64_t budget) {
    if (level < 0) {
        throw UsageError("level must be nonnegative");
    }
    if (level > 1) {
        uint64_t n = tower_n(level);
        if (n > budget) {
            throw BudgetError("level " + std::to_string(level) + " needs " + std::to_string(n) +
                                  " qubits per block, over the budget of " + std::to_string(budget),
                              n);
        }
        throw UsageError("circuits are compiled for levels 0 and 1 only");
    }
}

NoiseModel noise_of(const RunConfig &c) { return {c.p, c.idle_noise == "on"}; }

int run_params(const RunConfig &c) {
    if (c.levels < 0) {
        throw UsageError("--levels must be nonnegative");
    }
    DepthModel dm;
    if (c.measure_depth) {
        dm = measured_depth_model();
    }
    std::ostringstream o;
    o << header_text(header(c, {{"levels", std::to_string(c.levels)},
                                {"measure_depth", c.measure_depth ? "on" : "off"}}));
    o << "r\tn\tk\trate\td\ts\tT\n";
    for (int r = 0; r <= c.levels; r++) {
        auto p = tower_params(r, c.measure_depth ? &dm : nullptr);
        o << r << "\t" << p.n << "\t" << p.k << "\t" << std::setprecision(6) << p.rate << "\t" << p.d << "\t"
          << p.s << "\t" << (c.measure_depth ? fmt(p.T) : "-") << "\n";
    }
    emit(c, o.str());
    return kOk;
}

int run_build(const RunConfig &c) {
    uint64_t budget = budget_of(c);
    check_level(c.level, budget);
    Builder b(c.level, budget);
    auto h = header(c, {{"level", std::to_string(c.level)},
                        {"gadget", c.gadget},
                        {"cycles", std::to_string(c.cycles)},
                        {"logical", std::to_string(c.logical)},
                        {"budget", std::to_string(budget)}});
    if (c.gadget == "code") {
        emit(c, code_to_text(b.code(c.level), h));
        return kOk;
    }
    if (c.gadget == "memory") {
        auto m = build_memory_experiment(b, c.level, c.cycles);
        emit(c, circuit_to_text(flatten_memory(b, m).circuit, h));
        return kOk;
    }
    NodeRef node;
    if (c.gadget == "ec") {
        node = b.build_ec(c.level);
    } else if (c.gadget == "meas") {
        uint32_t k = b.code(c.level).k;
        if (c.logical >= k) {
            throw UsageError("--logical must be below " + std::to_string(k));
        }
        PauliString z(k);
        z.set(c.logical, Pauli1::Z);
        node = b.build_meas({c.level, {0}, z});
    } else {
        throw UsageError("unknown gadget '" + c.gadget + "'");
    }
    emit(c, circuit_to_text(flatten(node, b.layout(c.level)).circuit, h));
    return kOk;
}

int run_verify(const RunConfig &c) {
    if (c.level != 0) {
        throw UsageError("exhaustive verification runs at level 0");
    }
    std::vector<std::string> ids = c.property == "all" ? property_ids() : std::vector<std::string>{c.property};
    auto known = property_ids();
    for (const auto &id : ids) {
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            throw UsageError("unknown property '" + id + "'");
        }
    }
    Builder b(0, budget_of(c));
    VerifyOptions opt;
    opt.include_idle = c.idle_noise == "on";
    opt.two_faults = c.two_faults;
    opt.workers = c.workers;
    opt.seed = c.seed;
    std::ostringstream o;
    o << header_text(header(c, {{"property", c.property},
                                {"level", "0"},
                                {"idle_faults", c.idle_noise},
                                {"two_faults", c.two_faults ? "on" : "off"},
                                {"seed", std::to_string(c.seed)}}));
    bool ok = true;
    for (const auto &id : ids) {
        auto v = verify_property(b, id, opt);
        ok &= v.pass();
        o << v.report() << "\n";
    }
    emit(c, o.str());
    return ok ? kOk : kCounterexample;
}

std::vector<std::pair<std::string, std::string>> sim_settings(const RunConfig &c, uint64_t budget) {
    return {{"cycles", std::to_string(c.cycles)}, {"shots", std::to_string(c.shots)},
            {"seed", std::to_string(c.seed)},     {"idle_noise", c.idle_noise},
            {"budget", std::to_string(budget)}};
}

int run_simulate(const RunConfig &c) {
    uint64_t budget = budget_of(c);
    check_level(c.level, budget);
    Builder b(c.level, budget);
    SimConfig cfg;
    cfg.level = c.level;
    cfg.cycles = c.cycles;
    cfg.noise = noise_of(c);
    cfg.shots = c.shots;
    cfg.seed = c.seed;
    cfg.workers = c.workers;
    auto res = estimate_logical_error(b, cfg);
    auto kv = sim_settings(c, budget);
    kv.insert(kv.begin(), {"p", fmt(c.p)});
    kv.insert(kv.begin(), {"level", std::to_string(c.level)});
    SweepResult s;
    for (size_t o = 0; o <= res.observable_names.size(); o++) {
        bool any = o == res.observable_names.size();
        auto iv = res.interval(o);
        s.rows.push_back({c.level, c.p, c.cycles, c.shots, any ? "any" : res.observable_names[o],
                          any ? res.any_failures : res.failures[o], res.rate(o), iv.low, iv.high, c.seed});
    }
    emit(c, header_text(header(c, kv)) + s.csv());
    return kOk;
}

int run_sweep(const RunConfig &c) {
    uint64_t budget = budget_of(c);
    int top = 0;
    for (int r : c.level_list) {
        check_level(r, budget);
        top = std::max(top, r);
    }
    std::vector<double> grid;
    try {
        grid = parse_p_grid(c.p_grid.empty() ? fmt(c.p) : c.p_grid);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    Builder b(top, budget);
    auto s = threshold_sweep(b, c.level_list, grid, c.cycles, c.shots, c.seed, c.workers, c.idle_noise == "on");
    std::string levels;
    for (int r : c.level_list) {
        levels += (levels.empty() ? "" : ",") + std::to_string(r);
    }
    auto kv = sim_settings(c, budget);
    kv.insert(kv.begin(), {"p_grid", c.p_grid.empty() ? fmt(c.p) : c.p_grid});
    kv.insert(kv.begin(), {"levels", levels});
    auto h = header(c, kv);
    for (const auto &n : s.notes) {
        h.push_back("note: " + n);
    }
    emit(c, header_text(h) + s.csv());
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"hline: 1D concatenated Hamming-code quantum memory"};
    app.set_version_flag("--version", HLINE_VERSION);
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App *s) {
        s->add_option("--out", c.out, "output file (default stdout)");
        s->add_option("--budget", c.budget, "qubit budget (default HAMMING_LINE_BUDGET or 1000000)");
        s->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
        s->add_option("--seed", c.seed, "random seed");
    };
    auto add_sim = [&](CLI::App *s) {
        s->add_option("--cycles", c.cycles, "error-correction cycles after the first")->check(CLI::PositiveNumber);
        s->add_option("--shots", c.shots, "Monte Carlo shots")->check(CLI::PositiveNumber);
        s->add_option("--p", c.p, "depolarizing strength")->check(CLI::Range(0.0, 0.999999));
        s->add_option("--idle-noise", c.idle_noise, "noise on idle qubits")->check(CLI::IsMember({"on", "off"}));
    };

    auto *params = app.add_subcommand("params", "print code parameters for levels 0..N");
    params->add_option("--levels", c.levels, "highest level");
    params->add_flag("--measure-depth", c.measure_depth, "build 0-Meas and 1-Meas to fill the T column");
    params->add_option("--out", c.out, "output file (default stdout)");

    auto *build = app.add_subcommand("build", "write a code description or a flattened circuit");
    build->add_option("--level", c.level, "level");
    build->add_option("--gadget", c.gadget, "code, ec, meas or memory")
        ->check(CLI::IsMember({"code", "ec", "meas", "memory"}));
    build->add_option("--cycles", c.cycles, "cycles for the memory experiment");
    build->add_option("--logical", c.logical, "logical qubit read by meas");
    add_common(build);

    auto *verify = app.add_subcommand("verify", "exhaustive single-fault verification at level 0");
    verify->add_option("--property", c.property, "property id or 'all'");
    verify->add_option("--level", c.level, "level (0 only)");
    verify->add_flag("--two-faults", c.two_faults, "also enumerate fault pairs on hooks");
    verify->add_option("--idle-noise", c.idle_noise, "include idle fault locations")
        ->check(CLI::IsMember({"on", "off"}));
    add_common(verify);

    auto *simulate = app.add_subcommand("simulate", "estimate logical error rates of a memory experiment");
    simulate->add_option("--level", c.level, "level");
    add_sim(simulate);
    add_common(simulate);

    auto *sweep = app.add_subcommand("sweep", "logical error rates over levels and a grid of p");
    sweep->add_option("--levels", c.level_list, "comma-separated levels")->delimiter(',');
    sweep->add_option("--p-grid", c.p_grid, "a:b:steps, log spaced");
    add_sim(sweep);
    add_common(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }
    c.command = app.get_subcommands().front()->get_name();
    try {
        if (c.command == "params") {
            return run_params(c);
        }
        if (c.command == "build") {
            return run_build(c);
        }
        if (c.command == "verify") {
            return run_verify(c);
        }
        if (c.command == "simulate") {
            return run_simulate(c);
        }
        return run_sweep(c);
    } catch (const BudgetError &e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kResource;
    } catch (const std::length_error &e) {
        std::cerr << "too large: " << e.what() << "\n";
        return kResource;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
