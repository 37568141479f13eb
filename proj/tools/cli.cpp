#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

#include "CLI11.hpp"
#include "tinv/error.hpp"
#include "tinv/hierarchy.hpp"
#include "tinv/invariant.hpp"
#include "tinv/io.hpp"
#include "tinv/largeness.hpp"
#include "tinv/program.hpp"
#include "tinv/ramsey.hpp"
#include "tinv/report.hpp"

namespace tinv::cli {
namespace {

struct RunConfig {
    Caps caps;
    FghBudget budget;
    std::uint64_t seed = 0;
    bool records = false;
};

struct Emit {
    std::ostream& out;
    bool records;
    void operator()(const Report& r) const { out << r.render(records); }
};

std::string certificate_text(const LargenessCertificate& c) {
    if (c.children.empty()) return "{" + join(c.block, ",") + "}";
    std::string s = "{" + join(c.block, ",") + "}->[";
    for (std::size_t i = 0; i < c.children.size(); ++i) s += (i ? " " : "") + certificate_text(c.children[i]);
    return s + "]";
}

struct CheckArgs {
    std::string input;
    bool program = false;
    std::string initial;
    std::vector<std::string> parts;
    unsigned find = 0;
    std::size_t sim_states = 2000;
    std::size_t sim_depth = 200;
};

int cmd_check(const CheckArgs& a, const RunConfig& cfg, const Emit& emit) {
    TransitionSystem ts;
    std::vector<FiniteRelation> parts;
    std::string encoding;
    bool truncated = false;
    if (a.program) {
        auto prog = parse_program(read_text_file(a.input));
        auto ps = simulate_program(prog, a.sim_states, a.sim_depth, cfg.caps);
        for (const auto& p : a.parts)
            parts.push_back(instantiate(ps, parse_transition_predicate(read_text_file(p), ps.variables), cfg.caps));
        ts = ps.system;
        encoding = describe_encoding(ps.variables);
        truncated = ps.truncated;
    } else {
        auto r = parse_relation(read_text_file(a.input), cfg.caps);
        StateSet init = a.initial.empty() ? StateSet(r.domain().begin(), r.domain().end())
                                          : parse_state_set(read_text_file(a.initial));
        for (const auto& p : a.parts) parts.push_back(parse_relation(read_text_file(p), cfg.caps));
        ts = TransitionSystem(std::move(r), std::move(init));
    }
    bool searched = false;
    if (a.find > 0 && parts.empty()) {
        searched = true;
        if (auto found = find_invariant(ts, a.find, cfg.caps)) parts = std::move(*found);
    }
    auto verdict = check_invariant(ts, parts, cfg.caps);
    Report r = invariant_report(verdict, encoding);
    if (a.program) r.add("VERDICT", "truncated", truncated ? "yes" : "no");
    if (searched) r.add("VERDICT", "search", parts.empty() ? "none" : std::to_string(parts.size()) + " parts");
    emit(r);
    switch (verdict.conclusion) {
        case Conclusion::Terminating:
            return kTerminating;
        case Conclusion::Nonterminating:
            return kNonterminating;
        case Conclusion::InvalidInvariant:
            return kInvalidInvariant;
    }
    return kError;
}

struct DecomposeArgs {
    std::string input;
    unsigned k = 0;
    bool h_variant = false;
    std::string out_dir;
};

int cmd_decompose(const DecomposeArgs& a, const RunConfig& cfg, const Emit& emit) {
    auto r = parse_relation(read_text_file(a.input), cfg.caps);
    auto d = a.h_variant ? decompose_h_bounded(r, a.k, cfg.caps) : decompose_bounded(r, a.k, cfg.caps);
    Report rep = decomposition_report(d, a.h_variant);
    if (!a.out_dir.empty()) {
        std::filesystem::path dir(a.out_dir);
        std::filesystem::create_directories(dir);
        write_text_file(dir / "part_desc.rel", format_relation(d.descending));
        rep.add("CERTIFICATES", "file", (dir / "part_desc.rel").string());
        for (std::size_t i = 0; i < d.parts.size(); ++i) {
            auto path = dir / ("part_" + std::to_string(i) + ".rel");
            write_text_file(path, format_relation(d.parts[i]));
            rep.add("CERTIFICATES", "file", path.string());
        }
    }
    emit(rep);
    return rep.value("valid") == "yes" ? 0 : 1;
}

int cmd_depth(const std::string& input, unsigned n, bool h_variant, const RunConfig& cfg, const Emit& emit) {
    auto r = parse_relation(read_text_file(input), cfg.caps);
    auto w = depth_linearly_bounded(r, n, h_variant, cfg.caps);
    emit(depth_report(w, h_variant));
    return w.holds ? 0 : 1;
}

int cmd_simulate(const std::string& input, std::size_t states, std::size_t depth, const RunConfig& cfg,
                 std::ostream& out) {
    auto ps = simulate_program(parse_program(read_text_file(input)), states, depth, cfg.caps);
    // The relation file itself is the output; metadata goes in comments.
    out << "# " << describe_encoding(ps.variables) << "\n";
    out << "# initial " << join(ps.system.initial()) << "\n";
    out << "# truncated " << (ps.truncated ? "yes" : "no") << "\n";
    for (const auto& [id, v] : ps.valuations) {
        out << "# " << id << " =";
        for (std::size_t i = 0; i < v.size(); ++i) out << " " << ps.variables[i] << "=" << v[i];
        out << "\n";
    }
    out << format_relation(ps.system.relation());
    return 0;
}

int cmd_fgh(unsigned n, std::uint64_t x, const RunConfig& cfg, const Emit& emit) {
    Report r;
    r.add("RESULT", "n", n);
    r.add("RESULT", "x", x);
    r.add("RESULT", "value", fgh(n, Integer(x), cfg.budget).str());
    emit(r);
    return 0;
}

int cmd_threshold(bool weak, unsigned m, std::uint64_t x, std::uint64_t cap, const RunConfig& cfg,
                  const Emit& emit) {
    Report r;
    r.add("RESULT", "function", weak ? "ww" : "hh");
    r.add("RESULT", "m", m);
    r.add("RESULT", "x", x);
    r.add("RESULT", "cap", cap);
    r.add("RESULT", "value", weak ? ww(m, x, cap, cfg.caps) : hh(m, x, cap, cfg.caps));
    emit(r);
    return 0;
}

int cmd_large(const std::string& file, unsigned k, bool intervals, const RunConfig& cfg, const Emit& emit) {
    auto set = parse_state_set(read_text_file(file));
    auto v = is_k_large(set, k, intervals ? LargenessMode::Intervals : LargenessMode::Exhaustive, cfg.caps);
    Report r;
    r.add("RESULT", "set", join(set));
    r.add("RESULT", "k", k);
    r.add("RESULT", "mode", intervals ? "intervals" : "exhaustive");
    r.add("RESULT", "large", v.large ? "yes" : "no");
    if (v.certificate) {
        r.add("CERTIFICATES", "certificate", certificate_text(*v.certificate));
        r.add("CERTIFICATES", "certificate.checked", check_largeness_certificate(*v.certificate) ? "yes" : "no");
    }
    emit(r);
    return v.large ? 0 : 1;
}

int cmd_dense(unsigned m, std::uint64_t a, std::uint64_t b, bool weak, const RunConfig& cfg, const Emit& emit) {
    if (b < a) fail(ErrorKind::InvalidArgument, "interval (a, b] needs a <= b");
    StateSet set;
    for (std::uint64_t v = a + 1; v <= b; ++v) set.push_back(v);
    if (set.empty()) fail(ErrorKind::EmptySet, "interval (" + std::to_string(a) + ", " + std::to_string(b) + "] is empty");
    auto c = is_m_dense(set, m, weak, cfg.caps);
    Report r;
    r.add("RESULT", "set", join(set));
    r.add("RESULT", "m", m);
    r.add("RESULT", "weak", weak ? "yes" : "no");
    r.add("RESULT", "dense", c.dense ? "yes" : "no");
    r.add("CERTIFICATES", "certificate.checked", check_density_certificate(c) ? "yes" : "no");
    r.add("CERTIFICATES", "tabulated", c.tabulated ? "yes" : "no");
    if (c.counter) {
        std::string bits;
        for (auto col : c.counter->pair_colors()) bits += static_cast<char>('0' + col);
        r.add("CERTIFICATES", "counter", bits);
    }
    emit(r);
    return c.dense ? 0 : 1;
}

struct RamseyArgs {
    std::string file;
    std::size_t random = 0;
    bool weak = false;
    bool pstar = false;
};

int cmd_ramsey(const RamseyArgs& a, const RunConfig& cfg, const Emit& emit) {
    Coloring c;
    if (!a.file.empty()) {
        c = parse_coloring(read_text_file(a.file));
    } else if (a.random > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::vector<State> vs(a.random);
        for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = i;
        std::vector<std::uint8_t> pairs(a.random * (a.random - 1) / 2);
        for (auto& p : pairs) p = static_cast<std::uint8_t>(rng() & 1);
        c = Coloring(std::move(vs), 2, std::move(pairs));
    } else {
        fail(ErrorKind::InvalidArgument, "ramsey needs --file or --random");
    }
    Report r;
    r.add("RESULT", "vertices", c.size());
    r.add("RESULT", "colors", c.colors());
    if (a.pstar) {
        auto p = p_star(c);
        auto t = is_transitive_coloring(p.coloring);
        r.add("RESULT", "pstar.well_defined", p.well_defined ? "yes" : "no");
        r.add("RESULT", "pstar.transitive", t.transitive ? "yes" : "no");
        std::string bits;
        for (auto col : p.coloring.pair_colors()) bits += std::to_string(col);
        r.add("RESULT", "pstar.pairs", bits);
        c = p.coloring;
    }
    auto w = a.weak ? longest_weakly_homogeneous_sequence(c) : largest_homogeneous_set(c, cfg.caps);
    r.add("RESULT", a.weak ? "sequence" : "homogeneous", join(w.members));
    r.add("RESULT", "size", w.members.size());
    r.add("RESULT", "color", w.color);
    emit(r);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tinv: transition invariants, bounds and largeness tables"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--states-cap", cfg.caps.max_states, "largest domain")->check(CLI::PositiveNumber);
    app.add_option("--edges-cap", cfg.caps.max_edges, "largest edge set")->check(CLI::PositiveNumber);
    app.add_option("--search-cap", cfg.caps.max_search_nodes, "node budget of every search")
        ->check(CLI::PositiveNumber);
    app.add_option("--fgh-bits", cfg.budget.max_result_bits, "bit budget for F_n values")->check(CLI::PositiveNumber);
    app.add_option("--fgh-steps", cfg.budget.max_recursive_steps, "step budget for F_n")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for generated inputs");
    app.add_flag("--records", cfg.records, "one 'key value' record per line");

    CheckArgs check;
    auto* c_check = app.add_subcommand("check", "check a transition invariant");
    c_check->add_option("input", check.input, "relation file (or program with --program)")->required();
    c_check->add_flag("--program", check.program, "input is a guarded-command program");
    c_check->add_option("--initial", check.initial, "set file of initial states (default: whole domain)");
    c_check->add_option("--part", check.parts, "invariant part: relation file, or predicate file for programs");
    c_check->add_option("--find", check.find, "search for an invariant with this many parts when none is given");
    c_check->add_option("--sim-states", check.sim_states, "state cap for program exploration")
        ->check(CLI::PositiveNumber);
    c_check->add_option("--sim-depth", check.sim_depth, "depth cap for program exploration")
        ->check(CLI::PositiveNumber);

    DecomposeArgs dec;
    auto* c_dec = app.add_subcommand("decompose", "split an F_k-bounded relation into F_0-bounded parts");
    c_dec->add_option("input", dec.input, "relation file")->required();
    c_dec->add_option("--k", dec.k, "level k")->required();
    c_dec->add_flag("--h-variant", dec.h_variant, "H-bounded parts, no determinism needed");
    c_dec->add_option("--out-dir", dec.out_dir, "write every part as a relation file");

    std::string depth_input;
    unsigned depth_n = 0;
    bool depth_h = false;
    auto* c_depth = app.add_subcommand("depth", "n-depth linear boundedness");
    c_depth->add_option("input", depth_input, "relation file")->required();
    c_depth->add_option("--n", depth_n, "depth")->required();
    c_depth->add_flag("--h-variant", depth_h, "homogeneous sets and H-bounds");

    std::string sim_input;
    std::size_t sim_states = 2000, sim_depth = 200;
    auto* c_sim = app.add_subcommand("simulate", "explore a program and print its relation file");
    c_sim->add_option("input", sim_input, "program file")->required();
    c_sim->add_option("--sim-states", sim_states, "state cap")->check(CLI::PositiveNumber);
    c_sim->add_option("--sim-depth", sim_depth, "depth cap")->check(CLI::PositiveNumber);

    unsigned fgh_n = 0;
    std::uint64_t fgh_x = 0;
    auto* c_fgh = app.add_subcommand("fgh", "F_n(x)");
    c_fgh->add_option("--n", fgh_n)->required();
    c_fgh->add_option("--x", fgh_x)->required();

    unsigned dm = 0;
    std::uint64_t dx = 0, dcap = 1000;
    auto* c_ww = app.add_subcommand("ww", "least y with (x, y] m-w-dense");
    auto* c_hh = app.add_subcommand("hh", "least y with (x, y] m-dense");
    for (auto* sc : {c_ww, c_hh}) {
        sc->add_option("--m", dm)->required();
        sc->add_option("--x", dx)->required();
        sc->add_option("--cap", dcap, "largest y tried");
    }

    std::string large_file;
    unsigned large_k = 0;
    bool large_intervals = false;
    auto* c_large = app.add_subcommand("large", "k-largeness of a finite set");
    c_large->add_option("--k", large_k)->required();
    c_large->add_option("--set", large_file, "set file")->required();
    c_large->add_flag("--intervals", large_intervals, "only partitions into runs; no size limit");

    unsigned dense_m = 0;
    std::vector<std::uint64_t> interval;
    bool dense_weak = false;
    auto* c_dense = app.add_subcommand("dense", "m-density of an interval (a, b]");
    c_dense->add_option("--m", dense_m)->required();
    c_dense->add_option("--interval", interval, "a b")->expected(2)->required();
    c_dense->add_flag("--weak", dense_weak, "weakly homogeneous subsets");

    RamseyArgs ram;
    auto* c_ram = app.add_subcommand("ramsey", "largest homogeneous set of a coloring");
    c_ram->add_option("--file", ram.file, "coloring file");
    c_ram->add_option("--random", ram.random, "seeded random 2-coloring on this many vertices");
    c_ram->add_flag("--weak", ram.weak, "longest weakly homogeneous sequence instead");
    c_ram->add_flag("--pstar", ram.pstar, "apply the derived transitive coloring first");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kError;
    }

    const Emit emit{out, cfg.records};
    try {
        if (*c_check) return cmd_check(check, cfg, emit);
        if (*c_dec) return cmd_decompose(dec, cfg, emit);
        if (*c_depth) return cmd_depth(depth_input, depth_n, depth_h, cfg, emit);
        if (*c_sim) return cmd_simulate(sim_input, sim_states, sim_depth, cfg, out);
        if (*c_fgh) return cmd_fgh(fgh_n, fgh_x, cfg, emit);
        if (*c_ww) return cmd_threshold(true, dm, dx, dcap, cfg, emit);
        if (*c_hh) return cmd_threshold(false, dm, dx, dcap, cfg, emit);
        if (*c_large) return cmd_large(large_file, large_k, large_intervals, cfg, emit);
        if (*c_dense) return cmd_dense(dense_m, interval[0], interval[1], dense_weak, cfg, emit);
        if (*c_ram) return cmd_ramsey(ram, cfg, emit);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

}  // namespace tinv::cli
