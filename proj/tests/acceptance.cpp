// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lrorder/box_moves.hpp"
#include "lrorder/bruhat.hpp"
#include "lrorder/conjecture.hpp"
#include "lrorder/enumerate.hpp"
#include "lrorder/poset.hpp"
#include "lrorder/verify.hpp"
#include "lrorder/word_chain.hpp"
#include "oracles.hpp"

using namespace lrorder;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

using Criterion = std::function<Outcome()>;

TypePtr type_of(Partition a, Partition b, Partition g) { return FillingType::make(a, b, g); }

LRFilling word(const TypePtr& t, std::vector<int> w) { return filling_from_word(t, w); }

std::string perm(const Permutation& p) { return to_string(p); }

Outcome from_checks(const SweepBounds& bounds, std::vector<Check> checks) {
    VerifyOptions options;
    options.bounds = bounds;
    options.checks = std::move(checks);
    Outcome out;
    std::ostringstream info;
    for (const CheckResult& r : run_verification(options)) {
        info << to_string(r.check) << ": " << r.instances << " types, " << r.cases << " cases, " << r.failures
             << " failures; ";
        out.require(r.passed(), std::string(to_string(r.check)) + " counterexample " + r.counterexample.value_or(""));
    }
    if (out.ok)
        out.detail = info.str();
    return out;
}

SweepBounds upto(int n) {
    SweepBounds b;
    b.max_n = n;
    return b;
}

const TypePtr hasse_type() { return type_of({3, 2, 1}, {6, 5, 4, 3, 2, 1}, {5, 4, 3, 2, 1}); }
const TypePtr small_rook() { return type_of({2, 2, 1}, {5, 4, 3, 2, 1}, {4, 3, 2, 1}); }

Outcome enumeration_counts() {
    Outcome out;
    auto three = enumerate_fillings({2, 2, 1}, {4, 3, 3, 2, 1}, {3, 2, 2, 1});
    out.require(three.size() == 3, "expected 3 fillings, got " + std::to_string(three.size()));
    std::set<std::string> got, want{"322111", "232111", "231211", "231121", "213211", "213121", "211321", "121321",
                                    "123121", "123211", "321121", "321211", "312211", "312121", "132121", "132211"};
    auto sixteen = enumerate_fillings(hasse_type());
    for (const auto& f : sixteen)
        got.insert(word_label(f));
    out.require(sixteen.size() == 16 && got == want, "node set of the 16-element type differs");
    return out;
}

Outcome standardization() {
    Outcome out;
    auto t = small_rook();
    Permutation pz = standardize(word(t, {2, 1, 3, 2, 1}));
    Permutation px = standardize(word(t, {3, 2, 2, 1, 1}));
    out.require(pz == Permutation{1, 3, 5, 2, 4}, "pi(Z) = " + perm(pz));
    out.require(px == Permutation::identity(5), "pi(X) = " + perm(px));
    auto tab = recording_tableau({1, 3, 5, 2, 4}, {2, 2, 1});
    out.require(tab.rows == std::vector<std::vector<int>>{{1, 4}, {2, 5}, {3}}, "recording tableau rows differ");
    return out;
}

Outcome box_equals_dom() { return from_checks(upto(7), {Check::box_equals_dom}); }

Outcome box_implies_dom() { return from_checks(upto(6), {Check::box_implies_dom}); }

Outcome dom_bruhat() {
    Outcome out = from_checks(upto(7), {Check::dom_equals_bruhat});
    std::vector<int> base{1, 2, 3, 4};
    std::vector<std::vector<int>> all;
    do
        all.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    for (const auto& z : all) {
        auto below = oracle::reduced_subword_products(bubble_reduced_word(Permutation(z)), 4);
        for (const auto& x : all)
            out.require(bruhat_leq(Permutation(x), Permutation(z)) == (below.count(x) == 1),
                        "S4 subword mismatch at x=" + perm(Permutation(x)) + " z=" + perm(Permutation(z)));
    }
    return out;
}

Outcome cover_example() {
    Outcome out;
    Permutation z{1, 3, 5, 2, 4};
    ReducedWord w = bubble_reduced_word(z);
    out.require(w == ReducedWord{4, 2, 3}, "bubble word " + word_to_string(w));
    const Partition alpha{2, 2, 1};
    Permutation x = Permutation::identity(5);
    const std::vector<Permutation> ys{{1, 2, 3, 5, 4}, {1, 3, 2, 5, 4}, {1, 3, 5, 2, 4}};
    const std::vector<Transposition> ts{{4, 5}, {2, 3}, {2, 5}};
    for (std::size_t i = 0; i < 3 && out.ok; ++i) {
        CoverStep s = cover_step(x, z, w, alpha);
        out.require(s.y == ys[i], "step " + std::to_string(i + 1) + " gave " + perm(s.y));
        out.require(s.t == ts[i], "step " + std::to_string(i + 1) + " transposition differs");
        x = s.y;
    }
    auto chain = bruhat_chain(word(small_rook(), {3, 2, 2, 1, 1}), word(small_rook(), {2, 1, 3, 2, 1}));
    out.require(chain.fillings.size() == 4, "filling chain length");
    if (out.ok) {
        auto reading = [](const LRFilling& f) {
            auto w = column_word(f);
            return word_label(std::vector<int>(w.rbegin(), w.rend()));
        };
        out.require(reading(chain.fillings[1]) == "11232" && reading(chain.fillings[2]) == "12132",
                    "intermediate fillings differ");
    }
    return out;
}

Outcome word_example() {
    Outcome out;
    auto t = hasse_type();
    auto x = word(t, {2, 3, 2, 1, 1, 1});
    auto z = word(t, {1, 3, 2, 2, 1, 1});
    WordStep one = word_step(x, z, TieRule::at(1));
    out.require(one.choice == MoveChoice{1, 1, 4, 2, 1}, "choice " + to_string(one.choice));
    out.require(one.y == z, "l=1 does not reach Z");
    WordStep three = word_step(x, z, TieRule::at(3));
    out.require(column_word(three.y) == ColumnWord{2, 3, 1, 2, 1, 1}, "l=3 gives " + word_label(three.y));
    out.require(dom_leq(z, three.y) && !(z == three.y), "Z is not strictly below Y");
    return out;
}

Outcome chain_lengths() { return from_checks(upto(6), {Check::chain_length}); }

Outcome extremes() {
    Outcome out = from_checks(upto(6), {Check::unique_extremes});
    PosetGraph p = build_poset(enumerate_fillings(hasse_type()), Relation::box);
    out.require(p.maximal().size() == 1 && word_label(p.nodes()[p.maximal()[0]]) == "322111", "maximum differs");
    out.require(p.minimal().size() == 1 && word_label(p.nodes()[p.minimal()[0]]) == "121321", "minimum differs");
    out.require(word_label(maximal_filling(hasse_type())) == "322111", "constructed maximum differs");
    out.require(word_label(minimal_filling(hasse_type())) == "121321", "constructed minimum differs");
    return out;
}

Outcome gradedness() {
    Outcome out = from_checks(upto(6), {Check::graded});
    PosetGraph p = build_poset(enumerate_fillings(hasse_type()), Relation::box);
    GradedReport g = is_graded(p);
    out.require(g.graded && g.length == 6, "16-element poset not graded of length 6");
    std::set<int> levels(p.ranks().begin(), p.ranks().end());
    out.require(levels == std::set<int>{0, 1, 2, 3, 4, 5, 6}, "rank levels differ from 0..6");
    out.require(oracle::inversion_count(std::vector<int>{1, 4, 6, 2, 5, 3}) == 6, "inversion count oracle");
    return out;
}

Outcome counterexamples() {
    Outcome out;
    auto first = enumerate_fillings({2, 2, 1}, {4, 3, 2, 2, 1}, {3, 2, 1, 1});
    out.require(first.size() == 3, "first type has " + std::to_string(first.size()) + " fillings");
    out.require(build_poset(first, Relation::dom).maximal().size() == 2, "first type: maximal count differs");
    auto second = enumerate_fillings({2, 2, 1}, {5, 4, 3, 1}, {4, 3, 1});
    out.require(second.size() == 2, "second type has " + std::to_string(second.size()) + " fillings");
    if (second.size() == 2) {
        const auto &a = second[0], &b = second[1];
        out.require(dom_leq(a, b) || dom_leq(b, a), "second type: not dominance comparable");
        out.require(!box_leq(a, b) && !box_leq(b, a), "second type: box comparable");
    }
    return out;
}

Outcome conjecture_harness() {
    Outcome out;
    SweepBounds b = upto(5);
    std::ostringstream first, second;
    ConjectureSummary s1 = run_conjecture_sweep(b, 1, false, first);
    ConjectureSummary s2 = run_conjecture_sweep(b, 2, false, second);
    out.require(first.str() == second.str(), "output differs between runs");

    std::size_t records = 0;
    for (char c : first.str())
        records += c == '\n';
    --records; // summary line

    std::size_t pairs = 0;
    for (int n = 1; n <= b.max_n; ++n) {
        SweepBounds exact = b;
        exact.max_n = n;
        for_each_rook_shape(exact, [&](const Partition& beta, const Partition& gamma) {
            if (beta.weight() - gamma.weight() != n)
                return;
            for (const Partition& alpha : partitions_of(n)) {
                auto fs = enumerate_fillings(alpha, beta, gamma);
                for (const auto& x : fs)
                    for (const auto& z : fs)
                        pairs += !(x == z) && dom_leq(z, x);
            }
        });
    }
    out.require(records == pairs && s1.pairs == pairs, "records " + std::to_string(records) + " vs comparable pairs " +
                                                           std::to_string(pairs));
    out.require(s1.agree + s1.diverge == s1.pairs, "summary counts inconsistent");
    if (out.ok)
        out.detail = summary_to_json(s1).dump();
    return out;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"enumeration counts", enumeration_counts},
        {"standardization", standardization},
        {"box order equals dominance on rook strips, |alpha| <= 7", box_equals_dom},
        {"box moves lower dominance on strips, |alpha| <= 6", box_implies_dom},
        {"dominance matches Bruhat order, |alpha| <= 7; S4 subword oracle", dom_bruhat},
        {"Bruhat cover chain worked example", cover_example},
        {"column-word step worked example", word_example},
        {"chain lengths equal length differences, |alpha| <= 6", chain_lengths},
        {"unique maximal and minimal fillings, |alpha| <= 6", extremes},
        {"box posets graded, |alpha| <= 6", gradedness},
        {"strip counterexamples", counterexamples},
        {"conjecture sweep deterministic, |alpha| <= 5", conjecture_harness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << secs << " s)";
        if (!o.detail.empty())
            std::cout << " -- " << o.detail;
        std::cout << std::endl;
        failed += !o.ok;
    }
    return failed;
}
