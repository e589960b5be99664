#ifndef FTSCHED_TOOLS_CLI_HPP
#define FTSCHED_TOOLS_CLI_HPP

// Command-line front end. Exit codes: 0 success, 1 invalid input,
// 2 verification mismatch, 3 search budget exceeded.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ftsched/ftsched.hpp>

namespace ftsched::cli {

enum ExitCode : int { Ok = 0, BadInput = 1, Mismatch = 2, OverBudget = 3 };

namespace detail {

inline std::string format_ids(const std::vector<std::size_t>& zero_based)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < zero_based.size(); ++i) {
        os << (i ? "," : "") << zero_based[i] + 1;
    }
    os << ']';
    return os.str();
}

inline PInstance load_instance(const std::string& path)
{
    const Json j = read_json_file(path);
    if (j.contains("adjacency")) {
        return instance_from_json(j);
    }
    return instance_from_schedule(schedule_from_json(j));
}

inline Schedule load_schedule(const std::string& path)
{
    Schedule s = schedule_from_json(read_json_file(path));
    if (auto v = validate_schedule(s)) {
        throw InvalidInput(path + ": " + v->message);
    }
    return s;
}

inline const char* mode_name(GameMode m)
{
    return m == GameMode::Randomized ? "randomized" : "deterministic";
}

} // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Optimal fault-tolerant processor schedules and worst-case adversaries", "ftsched"};
    app.require_subcommand(1);
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for randomized commands")->capture_default_str();

    int result = Ok;
    GameParams gp;
    auto add_game_params = [&gp](CLI::App* cmd) {
        cmd->add_option("--N", gp.pool, "pool size")->required();
        cmd->add_option("--n", gp.active, "processors in operation")->required();
        cmd->add_option("--f", gp.tolerance, "tolerated faults")->required();
    };

    // h-eval
    HArgs h_args;
    auto* h_cmd = app.add_subcommand("h-eval", "evaluate h_{n,f}(k)");
    h_cmd->add_option("--n", h_args.active)->required();
    h_cmd->add_option("--f", h_args.tolerance)->required();
    h_cmd->add_option("--k", h_args.pool)->required();
    h_cmd->callback([&] { out << h_eval(h_args) << '\n'; });

    // opt
    auto* opt_cmd = app.add_subcommand("opt", "optimum survival time and the a priori bound");
    add_game_params(opt_cmd);
    opt_cmd->callback([&] {
        out << "T_opt: " << optimum_survival_time(gp) << '\n';
        out << "apriori_upper_bound: " << apriori_upper_bound(gp) << '\n';
    });

    // gen-trivial
    std::string out_path;
    auto* gen_cmd = app.add_subcommand("gen-trivial", "write the optimal batch schedule");
    add_game_params(gen_cmd);
    gen_cmd->add_option("--out", out_path, "schedule JSON path")->required();
    gen_cmd->callback([&] {
        write_json_file(out_path, to_json(trivial_schedule(gp)));
        out << "meaningful_length: " << trivial_meaningful_length(gp) << '\n';
    });

    // eval
    std::string schedule_path;
    std::string adversary_path;
    auto* eval_cmd = app.add_subcommand("eval", "survival time of a schedule against an adversary");
    eval_cmd->add_option("--schedule", schedule_path)->required();
    eval_cmd->add_option("--adversary", adversary_path)->required();
    eval_cmd->callback([&] {
        const Schedule s = detail::load_schedule(schedule_path);
        const Adversary a = adversary_from_json(read_json_file(adversary_path));
        out << survival_time(s, a) << '\n';
    });

    // solve-adversary
    auto* solve_cmd = app.add_subcommand("solve-adversary", "minimal survival time and a minimal adversary");
    solve_cmd->add_option("--schedule", schedule_path)->required();
    solve_cmd->add_option("--out", out_path, "adversary JSON path (default: print)");
    solve_cmd->callback([&] {
        const Schedule s = detail::load_schedule(schedule_path);
        const auto t_star = first_killable_time(s);
        const Adversary a = minimal_adversary(s);
        out << "T: " << minimal_survival_time(s) << '\n';
        out << "t_star: " << (t_star ? std::to_string(*t_star) : std::string("none")) << '\n';
        if (out_path.empty()) {
            out << "adversary: " << to_json(a).dump() << '\n';
        } else {
            write_json_file(out_path, to_json(a));
        }
    });

    // check-p
    std::string input_path;
    auto* check_cmd = app.add_subcommand("check-p", "check the degree and matching conditions of P");
    check_cmd->add_option("--input", input_path, "schedule or instance JSON")->required();
    check_cmd->callback([&] {
        const PInstance inst = detail::load_instance(input_path);
        const PMembership m = membership_in_P(inst);
        out << "L: " << inst.left_size() << '\n' << "R: " << inst.right_size() << '\n';
        if (m.ok) {
            out << "in_P: yes\n";
        } else {
            out << "in_P: no\n";
            out << "violation: " << (m.reason == PMembership::Reason::Degree ? "degree" : "matching") << " at t="
                << m.time << '\n';
        }
    });

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "apply one descent step to a member of P");
    reduce_cmd->add_option("--input", input_path, "schedule or instance JSON")->required();
    reduce_cmd->add_option("--out", out_path, "reduced instance JSON path (default: print)");
    reduce_cmd->callback([&] {
        const PInstance inst = detail::load_instance(input_path);
        const Reduction red = reduce_instance(inst);
        const auto n = inst.active;
        const auto f = inst.tolerance;
        const auto L = static_cast<std::int64_t>(inst.left_size());
        const auto R = static_cast<std::int64_t>(inst.right_size());
        const auto L2 = static_cast<std::int64_t>(red.reduced.left_size());
        const auto R2 = static_cast<std::int64_t>(red.reduced.right_size());
        out << "C: " << detail::format_ids(red.witness) << '\n';
        out << "removed_times: " << detail::format_ids(red.removed_left) << '\n';
        out << "L: " << L << " -> " << L2 << '\n';
        out << "R: " << R << " -> " << R2 << '\n';
        out << "h(R): " << h_eval(n, f, R) << '\n' << "h(R'): " << h_eval(n, f, R2) << '\n';
        const bool holds = h_eval(n, f, R2) + (L - L2) <= h_eval(n, f, R);
        out << "descent_inequality: " << (holds ? "holds" : "FAILS") << '\n';
        if (out_path.empty()) {
            out << "reduced: " << to_json(red.reduced).dump() << '\n';
        } else {
            write_json_file(out_path, to_json(red.reduced));
        }
        if (!holds) {
            result = Mismatch;
        }
    });

    // verify-theorem
    std::int64_t max_pool = 4;
    SearchBudget budget;
    bool no_symmetry = false;
    auto* verify_cmd = app.add_subcommand("verify-theorem", "compare exhaustive T_opt with h over a grid");
    verify_cmd->add_option("--max-N", max_pool)->required()->check(CLI::Range(1, 63));
    verify_cmd->add_option("--max-states", budget.max_states)->capture_default_str();
    verify_cmd->add_flag("--no-symmetry", no_symmetry, "disable relabelling symmetry pruning");
    verify_cmd->callback([&] {
        budget.symmetry_pruning = !no_symmetry;
        out << "N,n,f,h,brute_T_opt,match\n";
        bool mismatch = false;
        bool skipped = false;
        for (std::int64_t N = 2; N <= max_pool; ++N) {
            for (std::int64_t n = 2; n <= N; ++n) {
                for (std::int64_t f = 1; f < n; ++f) {
                    const GameParams p{N, n, f};
                    const auto h = optimum_survival_time(p);
                    out << N << ',' << n << ',' << f << ',' << h << ',';
                    try {
                        const auto brute = static_cast<std::int64_t>(brute_optimum(p, budget));
                        const bool match = brute == h;
                        mismatch = mismatch || !match;
                        out << brute << ',' << (match ? "yes" : "no") << '\n';
                    } catch (const BudgetExceeded&) {
                        skipped = true;
                        out << "skipped,skipped\n";
                    }
                }
            }
        }
        result = mismatch ? Mismatch : (skipped ? OverBudget : Ok);
    });

    // two-pool
    TwoPoolParams tp;
    bool exact = false;
    auto* pool_cmd = app.add_subcommand("two-pool", "lower bound for two processor types");
    pool_cmd->add_option("--N1", tp.pool1)->required();
    pool_cmd->add_option("--N2", tp.pool2)->required();
    pool_cmd->add_option("--n", tp.active)->required();
    pool_cmd->add_option("--g1", tp.quorum1)->required();
    pool_cmd->add_option("--g2", tp.quorum2)->required();
    pool_cmd->add_flag("--exact", exact, "also search the exact optimum (tiny pools only)");
    pool_cmd->add_option("--max-states", budget.max_states)->capture_default_str();
    pool_cmd->callback([&] {
        const TwoPoolBound b = two_pool_lower_bound(tp);
        out << "bound: " << b.value << '\n';
        if (b.split) {
            out << "split: n1=" << b.split->first << " n2=" << b.split->second << '\n';
        } else {
            out << "split: none\n";
        }
        if (exact) {
            try {
                out << "exact: " << two_pool_brute_optimum(tp, budget) << '\n';
            } catch (const BudgetExceeded&) {
                out << "exact: skipped\n";
                result = OverBudget;
            }
        }
    });

    // online-value
    GameMode mode = GameMode::Randomized;
    auto* online_cmd = app.add_subcommand("online-value", "value of the game against an on-line adversary");
    add_game_params(online_cmd);
    online_cmd->add_option("--mode", mode)
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, GameMode>{{"deterministic", GameMode::Deterministic},
                                            {"randomized", GameMode::Randomized}}))
        ->capture_default_str();
    online_cmd->callback([&] {
        const GameValue v = online_game_value(gp, mode);
        out << "value: " << v.value.str() << '\n';
        out << "mode: " << detail::mode_name(v.mode) << '\n';
        for (const auto& [schedule, prob] : v.strategy_support) {
            out << "support: p=" << prob.str() << " sets=" << to_json(schedule)["sets"].dump() << '\n';
        }
    });

    // sweep
    std::string kind = "h";
    std::int64_t k_max = 20;
    std::int64_t max_active = 10;
    std::size_t count = 100;
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV experiment tables");
    sweep_cmd->add_option("--kind", kind, "h | trivial | random")
        ->check(CLI::IsMember({"h", "trivial", "random"}))
        ->capture_default_str();
    sweep_cmd->add_option("--N", gp.pool, "pool size (random)");
    sweep_cmd->add_option("--n", gp.active, "processors in operation (h, random)");
    sweep_cmd->add_option("--f", gp.tolerance, "tolerated faults (h, random)");
    sweep_cmd->add_option("--k-max", k_max, "largest k (h)")->capture_default_str();
    sweep_cmd->add_option("--max-N", max_pool, "largest N (trivial)")->capture_default_str();
    sweep_cmd->add_option("--max-n", max_active, "largest n (trivial)")->capture_default_str();
    sweep_cmd->add_option("--count", count, "number of schedules (random)")->capture_default_str();
    sweep_cmd->callback([&] {
        if (kind == "h") {
            out << "k,h\n";
            for (std::int64_t k = 0; k <= k_max; ++k) {
                out << k << ',' << h_eval(gp.active, gp.tolerance, k) << '\n';
            }
        } else if (kind == "trivial") {
            out << "N,n,f,h,trivial_T,match\n";
            bool mismatch = false;
            for (std::int64_t N = 2; N <= max_pool; ++N) {
                for (std::int64_t n = 2; n <= std::min(N, max_active); ++n) {
                    for (std::int64_t f = 1; f < n; ++f) {
                        const GameParams p{N, n, f};
                        const auto h = optimum_survival_time(p);
                        const auto t = static_cast<std::int64_t>(minimal_survival_time(trivial_schedule(p)));
                        mismatch = mismatch || t != h;
                        out << N << ',' << n << ',' << f << ',' << h << ',' << t << ',' << (t == h ? "yes" : "no")
                            << '\n';
                    }
                }
            }
            result = mismatch ? Mismatch : Ok;
        } else {
            validate(gp);
            out << "index,length,minimal_T,brute_T,match\n";
            bool mismatch = false;
            for (std::size_t i = 0; i < count; ++i) {
                const Schedule s = random_schedule(gp, static_cast<std::size_t>(gp.pool), seed + i);
                const auto fast = minimal_survival_time(s);
                out << i << ',' << s.length() << ',' << fast << ',';
                try {
                    const auto brute = brute_adversary_min(s);
                    mismatch = mismatch || brute != fast;
                    out << brute << ',' << (brute == fast ? "yes" : "no") << '\n';
                } catch (const BudgetExceeded&) {
                    out << "skipped,skipped\n";
                }
            }
            result = mismatch ? Mismatch : Ok;
        }
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return OverBudget;
    }
    err << "seed: " << seed << '\n';
    return result;
}

} // namespace ftsched::cli

#endif
