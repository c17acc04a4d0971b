// Command-line front end: enumeration, order comparison, chains, Hasse
// diagrams, exhaustive verification and the two-algorithm comparison sweep.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 counterexample.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lrorder/box_moves.hpp"
#include "lrorder/bruhat.hpp"
#include "lrorder/conjecture.hpp"
#include "lrorder/enumerate.hpp"
#include "lrorder/errors.hpp"
#include "lrorder/io.hpp"
#include "lrorder/poset.hpp"
#include "lrorder/verify.hpp"
#include "lrorder/word_chain.hpp"

using namespace lrorder;

namespace {

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;
constexpr int exit_counterexample = 3;

struct TypeArgs {
    std::string alpha, beta, gamma;
    bool given() const { return !beta.empty() || !gamma.empty() || !alpha.empty(); }
};

void add_type_options(CLI::App* cmd, TypeArgs& t, bool required) {
    auto* a = cmd->add_option("--alpha", t.alpha, "content, e.g. 3,2,1");
    auto* b = cmd->add_option("--beta", t.beta, "outer partition");
    auto* g = cmd->add_option("--gamma", t.gamma, "inner partition");
    if (required) {
        a->required();
        b->required();
        g->required();
    }
}

TypePtr make_type(const TypeArgs& t) {
    return FillingType::make(parse_partition(t.alpha), parse_partition(t.beta), parse_partition(t.gamma));
}

TypePtr optional_type(const TypeArgs& t) { return t.given() ? make_type(t) : nullptr; }

int cmd_enum(const TypeArgs& t, bool json) {
    auto fillings = enumerate_fillings(make_type(t));
    for (const auto& f : fillings)
        std::cout << (json ? filling_to_json(f).dump() : word_label(f)) << '\n';
    if (json)
        std::cout << nlohmann::json{{"count", fillings.size()}}.dump() << '\n';
    else
        std::cout << "count=" << fillings.size() << '\n';
    return 0;
}

int cmd_cmp(const TypeArgs& t, const std::string& order, const std::string& xs, const std::string& zs) {
    TypePtr type = optional_type(t);
    LRFilling x = parse_filling(xs, type), z = parse_filling(zs, type);
    require_same_type(x, z);
    auto leq = [&](const LRFilling& a, const LRFilling& b) { return order == "box" ? box_leq(a, b) : dom_leq(a, b); };
    if (order == "box")
        require_strip(x.type());
    if (x == z)
        std::cout << "equal\n";
    else if (leq(z, x))
        std::cout << "Z<X\n";
    else if (leq(x, z))
        std::cout << "X<Z\n";
    else
        std::cout << "incomparable\n";
    return 0;
}

TieRule parse_tie(const std::string& text) {
    if (text == "max")
        return TieRule::max();
    if (text == "min")
        return TieRule::min();
    try {
        std::size_t used = 0;
        int l = std::stoi(text, &used);
        if (used == text.size() && l >= 1)
            return TieRule::at(l);
    } catch (const std::exception&) {
    }
    throw ParseError("--tie expects max, min or a positive position, got '" + text + "'");
}

int cmd_chain(const TypeArgs& t, const std::string& algo, const std::string& tie_text, const std::string& xs,
              const std::string& zs) {
    TieRule tie = parse_tie(tie_text);
    TypePtr type = optional_type(t);
    LRFilling x = parse_filling(xs, type), z = parse_filling(zs, type);
    require_same_type(x, z);

    std::size_t steps = 0;
    if (algo == "bruhat") {
        BruhatChain chain = bruhat_chain(x, z);
        std::cout << "0 " << word_label(x) << '\n';
        std::cout << "# word " << word_to_string(chain.word) << " for pi(Z)=" << to_string(chain.perms.back())
                  << '\n';
        for (std::size_t i = 0; i < chain.steps.size(); ++i) {
            const CoverStep& s = chain.steps[i];
            auto move = single_exchange(chain.fillings[i], chain.fillings[i + 1]);
            std::cout << i + 1 << ' ' << word_label(chain.fillings[i + 1]) << " t=(" << s.t.a << ' ' << s.t.b
                      << ") j1=" << s.j1 << " pi=" << to_string(s.y) << (move ? " " + to_string(*move) : "")
                      << '\n';
        }
        steps = chain.steps.size();
    } else {
        WordChain chain = word_chain(x, z, tie);
        std::cout << "0 " << word_label(x) << '\n';
        for (std::size_t i = 0; i < chain.choices.size(); ++i) {
            auto move = single_exchange(chain.fillings[i], chain.fillings[i + 1]);
            std::cout << i + 1 << ' ' << word_label(chain.fillings[i + 1]) << ' ' << to_string(chain.choices[i])
                      << (move ? " " + to_string(*move) : "") << '\n';
        }
        steps = chain.choices.size();
    }
    std::cout << "steps=" << steps << '\n';
    return 0;
}

int cmd_hasse(const TypeArgs& t, const std::string& order, bool json) {
    TypePtr type = make_type(t);
    PosetGraph p = build_poset(enumerate_fillings(type), order == "box" ? Relation::box : Relation::dom);
    if (json)
        std::cout << poset_to_json(p).dump(2) << '\n';
    else
        std::cout << to_dot(p);
    return 0;
}

int cmd_verify(const SweepBounds& bounds, int jobs) {
    VerifyOptions options;
    options.bounds = bounds;
    options.jobs = jobs;
    bool ok = true;
    for (const CheckResult& r : run_verification(options)) {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << to_string(r.check) << " instances=" << r.instances
                  << " cases=" << r.cases << " failures=" << r.failures << '\n';
        if (!r.passed()) {
            if (ok)
                std::cout << "counterexample: " << *r.counterexample << '\n';
            ok = false;
        }
    }
    std::cout << (ok ? "all checks passed" : "verification failed") << '\n';
    return ok ? 0 : exit_counterexample;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Littlewood-Richardson fillings under the box and dominance orders"};
    app.require_subcommand(1);

    TypeArgs type;
    std::string order = "dom", algo = "bruhat", tie = "max", x_arg, z_arg;
    bool json = false, words = false, dot = false, chains = false;
    SweepBounds bounds;
    int jobs = 1, cap = 7;

    auto* en = app.add_subcommand("enum", "list all LR-fillings of a type");
    add_type_options(en, type, true);
    auto* en_json = en->add_flag("--json", json, "one JSON object per filling");
    en->add_flag("--words", words, "column words (default)")->excludes(en_json);

    auto* cmp = app.add_subcommand("cmp", "compare two fillings");
    add_type_options(cmp, type, false);
    cmp->add_option("--order", order, "dom or box")->check(CLI::IsMember({"dom", "box"}));
    cmp->add_option("-X,--x", x_arg, "w=<word>, inline JSON or JSON file")->required();
    cmp->add_option("-Z,--z", z_arg, "w=<word>, inline JSON or JSON file")->required();

    auto* ch = app.add_subcommand("chain", "box-move chain from X down to Z");
    add_type_options(ch, type, false);
    ch->add_option("--algo", algo, "bruhat or word")->check(CLI::IsMember({"bruhat", "word"}));
    ch->add_option("--tie", tie, "word algorithm: max, min or a position l");
    ch->add_option("-X,--x", x_arg, "w=<word>, inline JSON or JSON file")->required();
    ch->add_option("-Z,--z", z_arg, "w=<word>, inline JSON or JSON file")->required();

    auto* ha = app.add_subcommand("hasse", "Hasse diagram of all fillings of a type");
    add_type_options(ha, type, true);
    ha->add_option("--order", order, "dom or box")->check(CLI::IsMember({"dom", "box"}));
    auto* ha_json = ha->add_flag("--json", json, "JSON export");
    ha->add_flag("--dot", dot, "Graphviz export (default)")->excludes(ha_json);

    auto add_sweep_options = [&](CLI::App* cmd) {
        cmd->add_option("--max-n", bounds.max_n, "largest |alpha|")->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--max-rows", bounds.max_rows, "row bound for beta")->check(CLI::PositiveNumber);
        cmd->add_option("--max-cols", bounds.max_cols, "column bound for beta")->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--cap", cap, "largest accepted --max-n")->check(CLI::NonNegativeNumber);
    };
    auto* ve = app.add_subcommand("verify", "exhaustive check of the order-theoretic statements");
    add_sweep_options(ve);
    auto* co = app.add_subcommand("conjecture", "compare the two chain algorithms step by step");
    add_sweep_options(co);
    co->add_flag("--chains", chains, "attach both chains to every record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if ((*ve || *co) && bounds.max_n > cap) {
            std::cerr << "--max-n " << bounds.max_n << " exceeds the cap " << cap << " (raise it with --cap)\n";
            return exit_usage;
        }
        if (*en)
            return cmd_enum(type, json);
        if (*cmp)
            return cmd_cmp(type, order, x_arg, z_arg);
        if (*ch)
            return cmd_chain(type, algo, tie, x_arg, z_arg);
        if (*ha)
            return cmd_hasse(type, order, json);
        if (*ve)
            return cmd_verify(bounds, jobs);
        if (*co) {
            run_conjecture_sweep(bounds, jobs, chains, std::cout);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_usage;
}
