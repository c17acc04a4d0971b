#include <doctest.h>

#include <algorithm>
#include <set>

#include "lrorder/box_moves.hpp"
#include "lrorder/enumerate.hpp"
#include "lrorder/errors.hpp"
#include "lrorder/instances.hpp"
#include "oracles.hpp"

using namespace lrorder;

namespace {

TypePtr vertical_example() { return FillingType::make({2, 2, 1}, {4, 3, 3, 2, 1}, {3, 2, 2, 1}); }
TypePtr hasse_type() { return FillingType::make({3, 2, 1}, {6, 5, 4, 3, 2, 1}, {5, 4, 3, 2, 1}); }

LRFilling word(const TypePtr& t, std::vector<int> w) { return filling_from_word(t, w); }

template <class Visit>
void for_each_type(int max_n, bool rook_only, Visit&& visit) {
    SweepBounds b{max_n, 8, 8};
    auto each = [&](const Partition& beta, const Partition& gamma) {
        int n = beta.weight() - gamma.weight();
        for (const auto& alpha : partitions_of(n))
            visit(FillingType::make(alpha, beta, gamma));
    };
    if (rook_only)
        for_each_rook_shape(b, each);
    else
        for_each_strip_shape(b, each);
}

// Small bounds keep the brute-force oracles fast.
template <class Visit>
void for_each_small_type(int max_n, Visit&& visit) {
    SweepBounds b{max_n, 4, 4};
    for_each_strip_shape(b, [&](const Partition& beta, const Partition& gamma) {
        for (const auto& alpha : partitions_of(beta.weight() - gamma.weight()))
            visit(FillingType::make(alpha, beta, gamma));
    });
}

} // namespace

TEST_CASE("filling type construction") {
    CHECK_THROWS_AS(FillingType::make({2}, {3}, {2}), WeightMismatch);
    CHECK_THROWS_AS(FillingType::make({1}, {2}, {1, 1}), ShapeError);
    auto t = vertical_example();
    CHECK(t->box_count() == 5);
    CHECK(t->strip() == StripKind::vertical);
    CHECK(t->labels() == 3);
}

TEST_CASE("LR validity") {
    auto t = vertical_example();
    auto fs = enumerate_fillings(t);
    REQUIRE(fs.size() == 3);
    std::set<std::string> words;
    for (const auto& f : fs) {
        CHECK(is_lr_filling(*t, f.entries()));
        words.insert(word_label(f));
    }
    CHECK(words == std::set<std::string>{"21321", "23211", "32211"});

    // Boxes row-major: (0,3) (1,2) (2,2) (3,1) (4,0). Column 2 holds rows 1 and 2.
    CHECK(is_lr_filling(*t, std::vector<int>{1, 1, 2, 2, 3}));
    CHECK_FALSE(is_lr_filling(*t, std::vector<int>{1, 2, 1, 2, 3}));
    CHECK_THROWS_AS(LRFilling(t, {1, 2, 1, 2, 3}), InvalidFilling);
    CHECK_FALSE(is_lr_filling(*t, std::vector<int>{1, 1, 2, 2}));

    auto h = hasse_type();
    auto all = enumerate_fillings(h);
    CHECK(std::any_of(all.begin(), all.end(), [](const LRFilling& f) { return word_label(f) == "123211"; }));
    CHECK(is_lr_filling(*h, word(h, {1, 2, 3, 2, 1, 1}).entries()));
    CHECK_THROWS_AS(word(h, {1, 1, 1, 2, 2, 3}), InvalidFilling);
}

TEST_CASE("partition sequences") {
    auto t = vertical_example();
    auto first = word(t, {2, 1, 3, 2, 1});
    CHECK(to_partition_sequence(first) ==
          PartitionSequence{{3, 2, 2, 1}, {4, 2, 2, 2}, {4, 3, 2, 2, 1}, {4, 3, 3, 2, 1}});

    auto empty = FillingType::make({}, {2, 1}, {2, 1});
    auto fs = enumerate_fillings(empty);
    REQUIRE(fs.size() == 1);
    CHECK(to_partition_sequence(fs[0]) == PartitionSequence{{2, 1}});
    CHECK(from_partition_sequence({{2, 1}}) == fs[0]);

    for (const auto& f : enumerate_fillings(hasse_type()))
        REQUIRE(from_partition_sequence(to_partition_sequence(f)) == f);

    CHECK_THROWS_AS(from_partition_sequence({{2}, {1}}), InvalidFilling);
    // Rows right to left: the second step puts a 2 above the 1 in column 1.
    CHECK_THROWS_AS(from_partition_sequence({{1}, {1, 1}, {2, 1}}), InvalidFilling);
}

TEST_CASE("column words") {
    auto h = hasse_type();
    CHECK(column_word(word(h, {1, 3, 2, 2, 1, 1})) == ColumnWord{1, 3, 2, 2, 1, 1});
    auto one = FillingType::make({1}, {1}, {});
    CHECK(column_word(enumerate_fillings(one)[0]) == ColumnWord{1});
    CHECK_THROWS_AS(word(h, {1, 1, 1}), InvalidFilling);

    for_each_small_type(5, [](const TypePtr& t) {
        for (const auto& f : enumerate_fillings(t)) {
            auto w = column_word(f);
            REQUIRE(filling_from_word(t, w) == f);
        }
    });
    CHECK(word_label(std::vector<int>{1, 12, 3}) == "1,12,3");
}

TEST_CASE("enumeration matches the naive oracle") {
    CHECK(enumerate_fillings({2, 2, 1}, {4, 3, 3, 2, 1}, {3, 2, 2, 1}).size() == 3);
    CHECK(enumerate_fillings(hasse_type()).size() == 16);
    CHECK(enumerate_fillings({1}, {2}, {1}).size() == 1);
    CHECK(enumerate_fillings({2}, {1, 1}, {}).empty());
    CHECK_THROWS_AS(enumerate_fillings({2}, {2, 1}, {}), WeightMismatch);

    int types = 0;
    for_each_small_type(5, [&](const TypePtr& t) {
        auto fs = enumerate_fillings(t);
        std::vector<std::vector<int>> got;
        for (const auto& f : fs) {
            REQUIRE(is_lr_filling(*t, f.entries()));
            got.emplace_back(f.entries().begin(), f.entries().end());
        }
        REQUIRE(std::is_sorted(got.begin(), got.end()));
        REQUIRE(std::adjacent_find(got.begin(), got.end()) == got.end());
        REQUIRE(got == oracle::naive_fillings(t->content(), t->outer(), t->inner()));
        ++types;
    });
    CHECK(types > 1000);

    // Non-strip shapes too.
    for (auto [a, b, g] : std::vector<std::tuple<Partition, Partition, Partition>>{
             {{2, 1}, {2, 1}, {}}, {{2, 2}, {3, 2, 1}, {1, 1}}, {{3, 2, 1}, {3, 2, 1}, {}}, {{2, 1, 1}, {3, 3}, {2}}}) {
        auto fs = enumerate_fillings(a, b, g);
        REQUIRE(fs.size() == oracle::naive_fillings(a, b, g).size());
    }
}

TEST_CASE("both readings of the lattice condition agree") {
    for_each_type(6, false, [](const TypePtr& t) {
        auto fs = enumerate_fillings(t);
        for (const auto& f : fs)
            REQUIRE(oracle::is_lr_grid(oracle::to_grid(f), t->labels()));
    });
    for_each_small_type(5, [](const TypePtr& t) {
        REQUIRE(enumerate_fillings(t).size() == oracle::naive_fillings(t->content(), t->outer(), t->inner()).size());
    });
}

TEST_CASE("dominance on fillings") {
    auto t = vertical_example();
    auto first = word(t, {2, 1, 3, 2, 1}), second = word(t, {2, 3, 2, 1, 1}), third = word(t, {3, 2, 2, 1, 1});
    CHECK(dom_leq(first, second));
    CHECK(dom_leq(second, third));
    CHECK_FALSE(dom_leq(second, first));
    CHECK(dom_leq(second, second));

    auto h = hasse_type();
    auto x = word(h, {2, 3, 2, 1, 1, 1}), z = word(h, {1, 3, 2, 2, 1, 1});
    CHECK(dom_leq(z, x));
    CHECK_FALSE(dom_leq(x, z));
    CHECK(dom_leq_by_counts(z, x));
    CHECK(dom_leq_by_counts(x, x));
    CHECK_THROWS_AS(dom_leq(first, x), TypeMismatch);

    auto m = count_matrix(x);
    CHECK(m.at(6, 3) == 6);
    CHECK(m.at(1, 1) == 0);
    CHECK(m.at(1, 2) == 1);

    auto hs = enumerate_fillings(h);
    for (const auto& a : hs)
        for (const auto& b : hs) {
            REQUIRE(dom_leq(a, b) == oracle::dom_leq(a, b));
            REQUIRE(dom_leq(a, b) == dom_leq_by_counts(a, b));
        }
    auto v = first_count_violation(x, z);
    REQUIRE(v.has_value());
    CHECK(v->z_count < v->x_count);
    CHECK_FALSE(first_count_violation(z, x).has_value());
}

TEST_CASE("dominance agrees with the oracle and the count matrix on strips") {
    for_each_small_type(5, [](const TypePtr& t) {
        auto fs = enumerate_fillings(t);
        for (const auto& a : fs)
            for (const auto& b : fs) {
                REQUIRE(dom_leq(a, b) == oracle::dom_leq(a, b));
                REQUIRE(dom_leq(a, b) == dom_leq_by_counts(a, b));
            }
    });
}

TEST_CASE("decreasing box moves") {
    auto t = vertical_example();
    auto x = word(t, {2, 3, 2, 1, 1});
    auto moves = decreasing_box_moves(x);
    auto target = word(t, {2, 1, 3, 2, 1});
    bool found = false;
    for (auto& [z, rec] : moves) {
        CHECK(dom_leq(z, x));
        if (z == target) {
            found = true;
            CHECK(rec.smaller == 1);
            CHECK(rec.larger == 3);
            CHECK(rec.upper.row == 1);
            CHECK(rec.lower.row == 3);
        }
    }
    CHECK(found);

    auto same = FillingType::make({3}, {3}, {});
    CHECK(decreasing_box_moves(enumerate_fillings(same)[0]).empty());

    auto h = hasse_type();
    auto top = word(h, {3, 2, 2, 1, 1, 1});
    for (auto& [z, rec] : decreasing_box_moves(top))
        CHECK(column_word(z) < column_word(top));

    auto bad = FillingType::make({2, 1}, {2, 1}, {});
    CHECK_THROWS_WITH_AS(decreasing_box_moves(enumerate_fillings(bad)[0]), doctest::Contains("box moves undefined"),
                         ShapeError);
}

TEST_CASE("box moves agree with a grid oracle") {
    for_each_small_type(5, [](const TypePtr& t) {
        for (const auto& x : enumerate_fillings(t)) {
            std::set<oracle::Grid> want;
            for (auto& g : oracle::moves_from(oracle::to_grid(x), t->labels()))
                want.insert(g);
            std::set<oracle::Grid> got;
            for (auto& [z, rec] : decreasing_box_moves(x))
                got.insert(oracle::to_grid(z));
            REQUIRE(got == want);
        }
    });
}

TEST_CASE("box order") {
    auto h = hasse_type();
    auto x = word(h, {3, 2, 2, 1, 1, 1});
    CHECK(box_leq(word(h, {1, 2, 1, 3, 2, 1}), x));
    CHECK(box_leq(x, x));
    CHECK_FALSE(box_leq(x, word(h, {1, 2, 1, 3, 2, 1})));

    auto t = vertical_example();
    CHECK(box_leq(word(t, {2, 1, 3, 2, 1}), word(t, {3, 2, 2, 1, 1})));

    auto second = FillingType::make({2, 2, 1}, {5, 4, 3, 1}, {4, 3, 1});
    auto fs = enumerate_fillings(second);
    REQUIRE(fs.size() == 2);
    CHECK(word_label(fs[0]) != word_label(fs[1]));
    CHECK_FALSE(box_leq(fs[0], fs[1]));
    CHECK_FALSE(box_leq(fs[1], fs[0]));
    CHECK((dom_leq(fs[0], fs[1]) || dom_leq(fs[1], fs[0])));

    auto hs = enumerate_fillings(h);
    for (const auto& a : hs)
        for (const auto& b : hs)
            REQUIRE(box_leq(a, b) == oracle::box_reachable(oracle::to_grid(b), oracle::to_grid(a), 3));
}

TEST_CASE("single exchange detection") {
    auto h = hasse_type();
    auto x = word(h, {2, 3, 2, 1, 1, 1}), z = word(h, {1, 3, 2, 2, 1, 1});
    auto rec = single_exchange(x, z);
    REQUIRE(rec.has_value());
    CHECK(rec->smaller == 1);
    CHECK(rec->larger == 2);
    CHECK_FALSE(single_exchange(word(h, {3, 2, 2, 1, 1, 1}), word(h, {1, 2, 1, 3, 2, 1})).has_value());
}
