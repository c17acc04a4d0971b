#include "lrorder/verify.hpp"

#include <algorithm>
#include <map>

#include "lrorder/box_moves.hpp"
#include "lrorder/bruhat.hpp"
#include "lrorder/enumerate.hpp"
#include "lrorder/poset.hpp"
#include "lrorder/word_chain.hpp"
#include "sweep.hpp"

namespace lrorder {

std::string_view to_string(Check c) {
    switch (c) {
    case Check::box_equals_dom: return "box_equals_dom";
    case Check::box_implies_dom: return "box_implies_dom";
    case Check::dom_equals_bruhat: return "dom_equals_bruhat";
    case Check::dom_equals_counts: return "dom_equals_counts";
    case Check::lex_order: return "lex_order";
    case Check::unique_extremes: return "unique_extremes";
    case Check::graded: return "graded";
    case Check::chain_length: return "chain_length";
    }
    return "unknown";
}

std::vector<Check> all_checks() {
    return {Check::box_equals_dom, Check::box_implies_dom, Check::dom_equals_bruhat, Check::dom_equals_counts,
            Check::lex_order,      Check::unique_extremes, Check::graded,            Check::chain_length};
}

namespace {

using Tally = std::map<Check, CheckResult>;

void fail(CheckResult& r, const std::string& what) {
    if (r.failures++ == 0)
        r.counterexample = what;
}

std::string pair_text(const FillingType& t, const LRFilling& z, const LRFilling& x) {
    return t.describe() + " Z=" + word_label(z) + " X=" + word_label(x);
}

bool wants(const std::vector<Check>& checks, Check c) {
    return std::find(checks.begin(), checks.end(), c) != checks.end();
}

// Validates one chain X = Y_0, ..., Y_m = Z of single decreasing exchanges.
std::optional<std::string> check_chain(const std::vector<LRFilling>& chain, const LRFilling& x, const LRFilling& z,
                                       int expected_steps) {
    if (chain.empty() || !(chain.front() == x) || !(chain.back() == z))
        return "chain does not run from X to Z";
    if (static_cast<int>(chain.size()) - 1 != expected_steps)
        return "chain has " + std::to_string(chain.size() - 1) + " steps, expected " + std::to_string(expected_steps);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!is_lr_filling(chain[i].type(), chain[i].entries()))
            return "intermediate " + word_label(chain[i]) + " is not an LR-filling";
        if (!dom_leq(z, chain[i]) || !dom_leq(chain[i], x))
            return "intermediate " + word_label(chain[i]) + " is not between Z and X";
        if (i > 0 && !single_exchange(chain[i - 1], chain[i]))
            return "step " + word_label(chain[i - 1]) + " -> " + word_label(chain[i]) + " is not a decreasing box move";
    }
    return std::nullopt;
}

void rook_type(const TypePtr& type, const std::vector<Check>& checks, Tally& tally) {
    PosetGraph poset = build_poset(enumerate_fillings(type), Relation::box);
    const auto& nodes = poset.nodes();
    const std::size_t n = nodes.size();

    std::vector<PartitionSequence> seqs;
    std::vector<Permutation> perms;
    std::vector<int> lengths;
    std::vector<ColumnWord> words;
    for (const auto& f : nodes) {
        seqs.push_back(to_partition_sequence(f));
        perms.push_back(standardize(f));
        lengths.push_back(length(perms.back()));
        words.push_back(column_word(f));
    }
    std::vector<std::vector<char>> dom(n, std::vector<char>(n, 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t u = 0; u < seqs[i].size() && dom[i][j]; ++u)
                dom[i][j] = dominance_leq(seqs[i][u], seqs[j][u]);

    for (Check c : checks) {
        if (c == Check::box_implies_dom)
            continue;
        CheckResult& r = tally[c];
        ++r.instances;
        switch (c) {
        case Check::box_equals_dom:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j, ++r.cases)
                    if (static_cast<bool>(poset.leq(i, j)) != static_cast<bool>(dom[i][j]))
                        fail(r, pair_text(*type, nodes[i], nodes[j]) + (dom[i][j] ? " dom-comparable only" : " box-comparable only"));
            break;
        case Check::dom_equals_bruhat:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j, ++r.cases)
                    if (bruhat_leq(perms[j], perms[i]) != static_cast<bool>(dom[i][j]))
                        fail(r, pair_text(*type, nodes[i], nodes[j]) + " pi(X)=" + to_string(perms[j]) +
                                    " pi(Z)=" + to_string(perms[i]));
            break;
        case Check::dom_equals_counts:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j, ++r.cases)
                    if (dom_leq_by_counts(nodes[i], nodes[j]) != static_cast<bool>(dom[i][j]))
                        fail(r, pair_text(*type, nodes[i], nodes[j]));
            break;
        case Check::lex_order:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j && dom[i][j]) {
                        ++r.cases;
                        if (!(words[i] < words[j]))
                            fail(r, pair_text(*type, nodes[i], nodes[j]));
                    }
            break;
        case Check::unique_extremes: {
            ++r.cases;
            auto top = poset.maximal(), bottom = poset.minimal();
            if (top.size() != 1 || bottom.size() != 1)
                fail(r, type->describe() + " has " + std::to_string(top.size()) + " maximal and " +
                            std::to_string(bottom.size()) + " minimal fillings");
            else if (!(nodes[top[0]] == maximal_filling(type)) || !(nodes[bottom[0]] == minimal_filling(type)))
                fail(r, type->describe() + " extremes " + word_label(nodes[top[0]]) + "/" +
                            word_label(nodes[bottom[0]]) + " differ from the constructed ones");
            break;
        }
        case Check::graded: {
            ++r.cases;
            GradedReport g = is_graded(poset);
            int expected = length(standardize(minimal_filling(type))) - length(standardize(maximal_filling(type)));
            if (!g.graded || g.length != expected)
                fail(r, type->describe() + " saturated chains of lengths " + std::to_string(g.shortest.size() - 1) +
                            ".." + std::to_string(g.longest.size() - 1) + ", expected " + std::to_string(expected));
            for (std::size_t i = 0; i < n; ++i)
                if (poset.ranks()[i] != lengths[i])
                    fail(r, type->describe() + " rank of " + word_label(nodes[i]) + " is " +
                                std::to_string(poset.ranks()[i]) + " but l(pi) = " + std::to_string(lengths[i]));
            break;
        }
        case Check::chain_length:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || !dom[i][j])
                        continue;
                    ++r.cases;
                    const int steps = lengths[i] - lengths[j];
                    try {
                        if (auto e = check_chain(bruhat_chain(nodes[j], nodes[i]).fillings, nodes[j], nodes[i], steps))
                            fail(r, pair_text(*type, nodes[i], nodes[j]) + " bruhat chain: " + *e);
                        if (auto e = check_chain(word_chain(nodes[j], nodes[i]).fillings, nodes[j], nodes[i], steps))
                            fail(r, pair_text(*type, nodes[i], nodes[j]) + " word chain: " + *e);
                    } catch (const std::exception& ex) {
                        fail(r, pair_text(*type, nodes[i], nodes[j]) + " raised: " + ex.what());
                    }
                }
            break;
        case Check::box_implies_dom: break;
        }
    }
}

void strip_type(const TypePtr& type, CheckResult& r) {
    ++r.instances;
    for (const auto& x : enumerate_fillings(type))
        for (const auto& [z, move] : decreasing_box_moves(x)) {
            ++r.cases;
            if (z == x || !dom_leq(z, x))
                fail(r, pair_text(*type, z, x) + " via " + to_string(move));
        }
}

void merge(Tally& into, Tally&& part) {
    for (auto& [check, r] : part) {
        CheckResult& t = into[check];
        t.check = check;
        t.instances += r.instances;
        t.cases += r.cases;
        if (r.failures && !t.failures)
            t.counterexample = r.counterexample;
        t.failures += r.failures;
    }
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Tally total;
    for (Check c : options.checks)
        total[c].check = c;

    std::vector<Check> rook_checks;
    for (Check c : options.checks)
        if (c != Check::box_implies_dom)
            rook_checks.push_back(c);

    if (!rook_checks.empty())
        detail::chunked_sweep<Tally>(
            [&](const ShapeVisitor& visit) { for_each_rook_shape(options.bounds, visit); }, options.jobs,
            [&](const detail::ShapeItem& shape) {
                Tally part;
                for (const Partition& alpha : partitions_of(shape.beta.weight() - shape.gamma.weight()))
                    rook_type(FillingType::make(alpha, shape.beta, shape.gamma), rook_checks, part);
                return part;
            },
            [&](Tally&& part) { merge(total, std::move(part)); });

    if (wants(options.checks, Check::box_implies_dom))
        detail::chunked_sweep<Tally>(
            [&](const ShapeVisitor& visit) { for_each_strip_shape(options.bounds, visit); }, options.jobs,
            [&](const detail::ShapeItem& shape) {
                Tally part;
                CheckResult& r = part[Check::box_implies_dom];
                for (const Partition& alpha : partitions_of(shape.beta.weight() - shape.gamma.weight()))
                    strip_type(FillingType::make(alpha, shape.beta, shape.gamma), r);
                return part;
            },
            [&](Tally&& part) { merge(total, std::move(part)); });

    std::vector<CheckResult> out;
    for (Check c : options.checks)
        out.push_back(total[c]);
    return out;
}

} // namespace lrorder
