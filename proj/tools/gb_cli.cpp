// Command-line front-end: Groebner bases, membership, syzygies, checks and
// benchmarks on problem files (one generator expression per line, optional
// vars:/order:/term-order: headers, '#' comments).

#include "CLI11.hpp"
#include "gb/f4.hpp"
#include "gb/problem.hpp"
#include "gb/reduced.hpp"
#include "gb/syzygy.hpp"
#include "gb/systems.hpp"
#include "json.hpp"

#include <chrono>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using json = nlohmann::json;
using namespace gb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string input;  // empty = stdin
    std::string order_name = "drlex";
    std::string extension_name = "pot";
    bool order_given = false;
    bool extension_given = false;
    std::string algorithm = "buchberger";
    bool reduced = false;
    bool no_product = false;
    bool no_chain = false;
    bool certify = false;
    bool as_json = false;
    bool stats = false;
    std::uint64_t iteration_cap = 1'000'000;
};

void add_order_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--order", o.order_name, "Monomial order: lex, dlex, drlex")
        ->check(CLI::IsMember({"lex", "dlex", "drlex"}));
    cmd->add_option("--term-order", o.extension_name, "Order extension to module terms: pot, top")
        ->check(CLI::IsMember({"pot", "top"}));
    cmd->add_option("--input", o.input, "Problem file (default: stdin)");
    cmd->add_flag("--json", o.as_json, "Machine-readable JSON output");
}

void add_gb_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--algorithm", o.algorithm, "buchberger or f4")
        ->check(CLI::IsMember({"buchberger", "f4"}));
    cmd->add_flag("--no-product-criterion", o.no_product, "Disable the product criterion");
    cmd->add_flag("--no-chain-criterion", o.no_chain, "Disable the chain criterion");
    cmd->add_option("--iteration-cap", o.iteration_cap, "Abort after this many iterations");
    cmd->add_flag("--stats", o.stats, "Report pair/criteria/matrix statistics");
}

struct LoadedProblem {
    Problem problem;
    TermOrder order;
};

// File headers override the built-in default; explicit CLI flags override the
// file.
LoadedProblem load_input(const CLI::App* cmd, const CommonOpts& o) {
    TermOrder defaults{*parse_monomial_order(o.order_name),
                       *parse_term_extension(o.extension_name)};
    std::string text;
    if (o.input.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        // load_problem reads the file itself; fetch text for unified parsing
        std::ifstream in(o.input);
        if (!in) throw std::runtime_error("cannot open input file: " + o.input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Problem pr = parse_problem_text(text, defaults);
    TermOrder ord = pr.order;
    bool force_order = cmd->count("--order") > 0;
    bool force_ext = cmd->count("--term-order") > 0;
    if (force_order) ord.base = defaults.base;
    if (force_ext) ord.extension = defaults.extension;
    if (ord.base != pr.order.base || ord.extension != pr.order.extension)
        for (auto& g : pr.generators) g = resort(ord, g);
    return {std::move(pr), ord};
}

GbConfig make_config(const CommonOpts& o, TermOrder ord) {
    GbConfig cfg{ord};
    cfg.algorithm = o.algorithm == "f4" ? Algorithm::F4 : Algorithm::Buchberger;
    cfg.use_product_criterion = !o.no_product;
    cfg.use_chain_criterion = !o.no_chain;
    cfg.iteration_cap = o.iteration_cap;
    cfg.track_cofactors = o.certify;
    return cfg;
}

json stats_json(const GbStats& s) {
    json m = json::array();
    for (const auto& sh : s.matrix_shapes)
        m.push_back({{"rows", sh[0]}, {"cols", sh[1]}, {"nonzeros", sh[2]}});
    return json{{"iterations", s.iterations},
                {"pairs_generated", s.pairs_generated},
                {"component_skips", s.component_skips},
                {"product_criterion_hits", s.product_criterion_hits},
                {"chain_criterion_hits", s.chain_criterion_hits},
                {"zero_reductions", s.zero_reductions},
                {"basis_additions", s.basis_additions},
                {"matrices", std::move(m)}};
}

void print_stats_text(const GbStats& s) {
    std::cout << "# stats: iterations=" << s.iterations
              << " pairs=" << s.pairs_generated
              << " component_skips=" << s.component_skips
              << " product_hits=" << s.product_criterion_hits
              << " chain_hits=" << s.chain_criterion_hits
              << " zero_reductions=" << s.zero_reductions
              << " additions=" << s.basis_additions << "\n";
    for (const auto& sh : s.matrix_shapes)
        std::cout << "# matrix: " << sh[0] << "x" << sh[1] << " nonzeros=" << sh[2] << "\n";
}

json combination_json(const Combination& c, const VarTable& vars) {
    json out = json::array();
    for (const auto& [idx, mult] : c.entries)
        out.push_back({{"generator", idx}, {"multiplier", poly_to_string(mult, vars)}});
    return out;
}

int cmd_gb(const CLI::App* cmd, const CommonOpts& o) {
    auto [pr, ord] = load_input(cmd, o);
    GbConfig cfg = make_config(o, ord);
    auto t0 = std::chrono::steady_clock::now();
    GbResult r = compute_gb(pr.generators, cfg);
    std::vector<VecPoly> basis =
        o.reduced ? comp_red_monic_basis(ord, r.basis) : std::move(r.basis);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (o.as_json) {
        json out{{"command", "gb"},
                 {"order", order_name(ord.base)},
                 {"term_order", extension_name(ord.extension)},
                 {"algorithm", o.algorithm},
                 {"reduced", o.reduced},
                 {"basis", json::array()},
                 {"time_s", secs}};
        for (const auto& b : basis) out["basis"].push_back(poly_to_string(b, pr.vars));
        if (o.certify) {
            out["certificates"] = json::array();
            for (const auto& c : r.certificates)
                out["certificates"].push_back(combination_json(c, pr.vars));
        }
        if (o.stats) out["stats"] = stats_json(r.stats);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    // Text output is itself a valid problem file.
    std::cout << "order: " << order_name(ord.base) << "\n";
    std::cout << "term-order: " << extension_name(ord.extension) << "\n";
    if (!pr.vars.names.empty()) {
        std::cout << "vars:";
        for (const auto& n : pr.vars.names) std::cout << " " << n;
        std::cout << "\n";
    }
    for (const auto& b : basis) std::cout << poly_to_string(b, pr.vars) << "\n";
    if (o.certify && !o.reduced) {
        for (std::size_t i = 0; i < r.certificates.size(); ++i) {
            std::cout << "# certificate " << i << ":";
            for (const auto& [idx, mult] : r.certificates[i].entries)
                std::cout << " g" << idx << " * (" << poly_to_string(mult, pr.vars) << ")";
            std::cout << "\n";
        }
    }
    if (o.stats) print_stats_text(r.stats);
    std::cout << "# time_s: " << secs << "\n";
    return kExitOk;
}

int cmd_member(const CLI::App* cmd, const CommonOpts& o, const std::string& poly_src) {
    auto [pr, ord] = load_input(cmd, o);
    GbConfig cfg = make_config(o, ord);
    VecPoly p = parse_poly(ord, poly_src, pr.vars);
    MembershipResult r = in_pmdl(p, pr.generators, cfg);

    if (o.as_json) {
        json out{{"command", "member"},
                 {"poly", poly_to_string(p, pr.vars)},
                 {"member", r.member},
                 {"normal_form", poly_to_string(r.normal_form, pr.vars)}};
        if (r.certificate) out["certificate"] = combination_json(*r.certificate, pr.vars);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << (r.member ? "true" : "false") << "\n";
    if (!r.member) std::cout << "# normal form: " << poly_to_string(r.normal_form, pr.vars) << "\n";
    if (r.certificate) {
        std::cout << "# certificate:";
        for (const auto& [idx, mult] : r.certificate->entries)
            std::cout << " g" << idx << " * (" << poly_to_string(mult, pr.vars) << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_syzygy(const CLI::App* cmd, const CommonOpts& o) {
    auto [pr, ord] = load_input(cmd, o);
    GbConfig cfg = make_config(o, ord);
    SyzygyResult r = syzygy_basis(pr.generators, cfg);

    if (o.as_json) {
        json out{{"command", "syzygy"},
                 {"order", order_name(ord.base)},
                 {"term_order", extension_name(ord.extension)},
                 {"syzygies", json::array()}};
        for (const auto& s : r.syzygies) out["syzygies"].push_back(poly_to_string(s, pr.vars));
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    for (std::size_t i = 0; i < r.syzygies.size(); ++i)
        std::cout << "s" << i << " = " << poly_to_string(r.syzygies[i], pr.vars) << "\n";
    return kExitOk;
}

int cmd_check(const CLI::App* cmd, const CommonOpts& o) {
    auto [pr, ord] = load_input(cmd, o);
    bool is_gb = is_groebner_basis(ord, pr.generators);
    bool is_red = is_reduced_gb(ord, pr.generators);
    if (o.as_json) {
        std::cout << json{{"command", "check"},
                          {"groebner_basis", is_gb},
                          {"reduced_groebner_basis", is_red}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "groebner basis: " << (is_gb ? "true" : "false") << "\n";
    std::cout << "reduced groebner basis: " << (is_red ? "true" : "false") << "\n";
    return kExitOk;
}

// ---- bench ----------------------------------------------------------------

struct BenchCell {
    std::string system;
    std::string algorithm;
    bool timed_out = false;
    bool failed = false;
    double seconds = 0.0;
    std::size_t basis_size = 0;
};

std::vector<VecPoly> bench_system(const std::string& name, TermOrder ord) {
    if (name == "cyclic4") return cyclic_system(4, ord);
    if (name == "cyclic5") return cyclic_system(5, ord);
    if (name == "cyclic6") return cyclic_system(6, ord);
    if (name == "katsura3") return katsura_system(3, ord);
    if (name == "katsura4") return katsura_system(4, ord);
    if (name == "katsura5") return katsura_system(5, ord);
    throw CLI::ValidationError("--suite", "unknown benchmark system: " + name);
}

// Runs one cell in a forked child so a timeout cannot leak memory or state
// into the next cell; the child reports "<seconds> <basis size>" via a pipe.
BenchCell run_cell(const std::string& system, const std::string& algorithm, double timeout) {
    BenchCell cell{system, algorithm};
    TermOrder ord{MonomialOrder::DegRevLex, TermExtension::POT};
    int fds[2];
    if (pipe(fds) != 0) throw std::runtime_error("pipe failed");
    pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("fork failed");
    if (pid == 0) {
        close(fds[0]);
        GbConfig cfg{ord};
        cfg.algorithm = algorithm == "f4" ? Algorithm::F4 : Algorithm::Buchberger;
        auto t0 = std::chrono::steady_clock::now();
        std::vector<VecPoly> basis = reduced_gb(bench_system(system, ord), cfg);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream msg;
        msg << secs << " " << basis.size() << "\n";
        std::string s = msg.str();
        ssize_t n = write(fds[1], s.data(), s.size());
        (void)n;
        close(fds[1]);
        _exit(0);
    }
    close(fds[1]);
    auto start = std::chrono::steady_clock::now();
    int status = 0;
    while (true) {
        pid_t done = waitpid(pid, &status, WNOHANG);
        if (done == pid) break;
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > timeout) {
            kill(pid, SIGKILL);
            waitpid(pid, &status, 0);
            cell.timed_out = true;
            cell.seconds = timeout;
            close(fds[0]);
            return cell;
        }
        usleep(20'000);
    }
    std::string out;
    char buf[128];
    ssize_t n;
    while ((n = read(fds[0], buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
    close(fds[0]);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0 || out.empty()) {
        cell.failed = true;
        return cell;
    }
    std::istringstream parse(out);
    parse >> cell.seconds >> cell.basis_size;
    return cell;
}

int cmd_bench(const std::vector<std::string>& suite, double timeout, bool as_json) {
    std::vector<BenchCell> cells;
    for (const auto& system : suite)
        for (const char* alg : {"buchberger", "f4"})
            cells.push_back(run_cell(system, alg, timeout));

    if (as_json) {
        json out{{"command", "bench"},
                 {"order", "drlex"},
                 {"term_order", "pot"},
                 {"timeout_s", timeout},
                 {"cells", json::array()}};
        for (const auto& c : cells) {
            json cell{{"system", c.system}, {"algorithm", c.algorithm}};
            if (c.timed_out) {
                cell["seconds"] = ">" + std::to_string(timeout);
            } else if (c.failed) {
                cell["failed"] = true;
            } else {
                cell["seconds"] = c.seconds;
                cell["basis_size"] = c.basis_size;
            }
            out["cells"].push_back(std::move(cell));
        }
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "# order: drlex, term-order: pot, timeout " << timeout << " s\n";
    std::cout << "system\talgorithm\tseconds\tbasis\n";
    for (const auto& c : cells) {
        std::cout << c.system << "\t" << c.algorithm << "\t";
        if (c.timed_out)
            std::cout << ">" << timeout << "\t-";
        else if (c.failed)
            std::cout << "error\t-";
        else
            std::cout << c.seconds << "\t" << c.basis_size;
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases of submodules of free modules over Q[x0..xn]"};
    app.require_subcommand(1);

    CommonOpts gb_opts;
    auto* gb_cmd = app.add_subcommand("gb", "Compute a Groebner basis of the input generators");
    add_order_flags(gb_cmd, gb_opts);
    add_gb_flags(gb_cmd, gb_opts);
    gb_cmd->add_flag("--reduced", gb_opts.reduced, "Return the unique reduced basis");
    gb_cmd->add_flag("--certify", gb_opts.certify,
                     "Report each basis element as a combination of the generators");

    CommonOpts member_opts;
    std::string member_poly;
    auto* member_cmd = app.add_subcommand("member", "Decide membership in the generated submodule");
    add_order_flags(member_cmd, member_opts);
    add_gb_flags(member_cmd, member_opts);
    member_cmd->add_option("--poly", member_poly, "Polynomial to test")->required();
    member_cmd->add_flag("--certify", member_opts.certify,
                         "Report a cofactor representation on membership");

    CommonOpts syz_opts;
    auto* syz_cmd = app.add_subcommand("syzygy", "Groebner basis of the syzygy module");
    add_order_flags(syz_cmd, syz_opts);
    add_gb_flags(syz_cmd, syz_opts);

    CommonOpts check_opts;
    auto* check_cmd =
        app.add_subcommand("check", "Test whether the input is a (reduced) Groebner basis");
    add_order_flags(check_cmd, check_opts);

    std::vector<std::string> suite;
    double timeout = 600.0;
    if (const char* env = std::getenv("GB_BENCH_TIMEOUT")) timeout = std::atof(env);
    bool bench_json = false;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark harness (cyclic/katsura systems)");
    bench_cmd
        ->add_option("--suite", suite,
                     "Systems: cyclic4 cyclic5 cyclic6 katsura3 katsura4 katsura5")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--timeout", timeout, "Per-cell timeout in seconds");
    bench_cmd->add_flag("--json", bench_json, "Machine-readable JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gb_cmd->parsed()) return cmd_gb(gb_cmd, gb_opts);
        if (member_cmd->parsed()) return cmd_member(member_cmd, member_opts, member_poly);
        if (syz_cmd->parsed()) return cmd_syzygy(syz_cmd, syz_opts);
        if (check_cmd->parsed()) return cmd_check(check_cmd, check_opts);
        if (bench_cmd->parsed()) return cmd_bench(suite, timeout, bench_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
