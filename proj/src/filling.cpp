#include "lrorder/filling.hpp"

#include <algorithm>

#include "lrorder/errors.hpp"

namespace lrorder {

FillingType::FillingType(Partition alpha, SkewShape shape)
    : alpha_(std::move(alpha)), shape_(std::move(shape)), strip_(strip_kind(shape_)), boxes_(shape_.boxes()) {
    const int rows = row_count();
    row_start_.assign(rows + 1, 0);
    for (int r = 0; r < rows; ++r)
        row_start_[r + 1] = row_start_[r] + (outer()[r] - inner()[r]);

    columns_.assign(column_count(), {});
    above_.assign(boxes_.size(), -1);
    for (int k = 0; k < box_count(); ++k) {
        const Box& b = boxes_[k];
        columns_[b.col].push_back(k);
        above_[k] = index_of({b.row - 1, b.col});
    }
    for (const auto& col : columns_)
        for (auto it = col.rbegin(); it != col.rend(); ++it)
            column_order_.push_back(*it);
}

std::shared_ptr<const FillingType> FillingType::make(Partition alpha, Partition beta, Partition gamma) {
    SkewShape shape(std::move(beta), std::move(gamma));
    if (shape.box_count() != alpha.weight())
        throw WeightMismatch("|beta| - |gamma| = " + std::to_string(shape.box_count()) + " but |alpha| = " +
                             std::to_string(alpha.weight()));
    return std::shared_ptr<const FillingType>(new FillingType(std::move(alpha), std::move(shape)));
}

int FillingType::index_of(Box b) const {
    if (b.row < 0 || b.row >= row_count())
        return -1;
    if (b.col < inner()[b.row] || b.col >= outer()[b.row])
        return -1;
    return row_start_[b.row] + (b.col - inner()[b.row]);
}

std::string FillingType::describe() const {
    return "alpha=(" + to_string(alpha_) + ") beta=(" + to_string(outer()) + ") gamma=(" + to_string(inner()) + ")";
}

bool same_type(const FillingType& a, const FillingType& b) { return &a == &b || a == b; }

bool is_lr_filling(const FillingType& type, std::span<const int> entries) {
    const int s = type.labels();
    if (static_cast<int>(entries.size()) != type.box_count())
        return false;

    std::vector<int> content(s + 1, 0);
    for (int e : entries) {
        if (e < 1 || e > s)
            return false;
        ++content[e];
    }
    for (int u = 1; u <= s; ++u)
        if (content[u] != type.content()[u - 1])
            return false;

    for (int r = 0; r < type.row_count(); ++r) {
        auto [begin, end] = type.row_range(r);
        for (int k = begin + 1; k < end; ++k)
            if (entries[k - 1] > entries[k])
                return false;
    }
    for (int k = 0; k < type.box_count(); ++k) {
        int up = type.above(k);
        if (up >= 0 && entries[up] >= entries[k])
            return false;
    }

    // Suffix counts over the columns strictly right of c.
    std::vector<int> suffix(s + 1, 0);
    auto lattice_ok = [&] {
        for (int u = 2; u <= s; ++u)
            if (suffix[u - 1] < suffix[u])
                return false;
        return true;
    };
    for (int c = type.column_count() - 1; c >= 0; --c) {
        if (!lattice_ok())
            return false;
        for (int k : type.column(c))
            ++suffix[entries[k]];
    }
    return lattice_ok();
}

LRFilling::LRFilling(TypePtr type, std::vector<int> entries) : type_(std::move(type)), entries_(std::move(entries)) {
    if (!is_lr_filling(*type_, entries_))
        throw InvalidFilling("entries " + word_label(entries_) + " do not form an LR-filling of type " +
                             type_->describe());
}

LRFilling LRFilling::from_rows(TypePtr type, const std::vector<std::vector<int>>& rows) {
    if (static_cast<int>(rows.size()) != type->row_count())
        throw InvalidFilling("expected " + std::to_string(type->row_count()) + " rows, got " +
                             std::to_string(rows.size()));
    std::vector<int> entries;
    entries.reserve(type->box_count());
    for (int r = 0; r < type->row_count(); ++r) {
        auto [begin, end] = type->row_range(r);
        if (static_cast<int>(rows[r].size()) != end - begin)
            throw InvalidFilling("row " + std::to_string(r + 1) + " needs " + std::to_string(end - begin) +
                                 " entries, got " + std::to_string(rows[r].size()));
        entries.insert(entries.end(), rows[r].begin(), rows[r].end());
    }
    return LRFilling(std::move(type), std::move(entries));
}

int LRFilling::entry(Box b) const {
    int k = type_->index_of(b);
    return k < 0 ? 0 : entries_[k];
}

std::vector<std::vector<int>> LRFilling::rows() const {
    std::vector<std::vector<int>> out(type_->row_count());
    for (int r = 0; r < type_->row_count(); ++r) {
        auto [begin, end] = type_->row_range(r);
        out[r].assign(entries_.begin() + begin, entries_.begin() + end);
    }
    return out;
}

void require_same_type(const LRFilling& a, const LRFilling& b) {
    if (!same_type(a.type(), b.type()))
        throw TypeMismatch("fillings have different types: " + a.type().describe() + " vs " + b.type().describe());
}

PartitionSequence to_partition_sequence(const LRFilling& f) {
    const FillingType& t = f.type();
    PartitionSequence seq;
    seq.reserve(t.labels() + 1);
    for (int i = 0; i <= t.labels(); ++i) {
        std::vector<int> parts(t.row_count());
        for (int r = 0; r < t.row_count(); ++r) {
            auto [begin, end] = t.row_range(r);
            int filled = 0;
            for (int k = begin; k < end; ++k)
                filled += f.entries()[k] <= i;
            parts[r] = t.inner()[r] + filled;
        }
        seq.emplace_back(std::move(parts));
    }
    return seq;
}

LRFilling from_partition_sequence(const PartitionSequence& seq) {
    if (seq.empty())
        throw InvalidFilling("empty partition sequence");
    std::vector<int> alpha;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (!contains(seq[i - 1], seq[i]))
            throw InvalidFilling("partition sequence is not nested at step " + std::to_string(i));
        alpha.push_back(seq[i].weight() - seq[i - 1].weight());
    }
    Partition content;
    try {
        content = Partition(alpha);
    } catch (const ParseError&) {
        throw InvalidFilling("partition sequence increments do not form a partition");
    }
    if (content.length() != alpha.size())
        throw InvalidFilling("partition sequence has an empty step");

    auto type = FillingType::make(content, seq.back(), seq.front());
    std::vector<int> entries(type->box_count());
    for (std::size_t i = 1; i < seq.size(); ++i)
        for (int r = 0; r < type->row_count(); ++r)
            for (int c = seq[i - 1][r]; c < seq[i][r]; ++c)
                entries[type->index_of({r, c})] = static_cast<int>(i);
    return LRFilling(std::move(type), std::move(entries));
}

ColumnWord column_word(const LRFilling& f) {
    ColumnWord w;
    w.reserve(f.entries().size());
    for (int k : f.type().column_order())
        w.push_back(f.entries()[k]);
    return w;
}

LRFilling filling_from_word(TypePtr type, std::span<const int> word) {
    if (static_cast<int>(word.size()) != type->box_count())
        throw InvalidFilling("word has " + std::to_string(word.size()) + " letters but the shape has " +
                             std::to_string(type->box_count()) + " boxes");
    std::vector<int> entries(word.size());
    auto order = type->column_order();
    for (std::size_t i = 0; i < word.size(); ++i)
        entries[order[i]] = word[i];
    return LRFilling(std::move(type), std::move(entries));
}

std::string word_label(std::span<const int> word) {
    bool compact = std::all_of(word.begin(), word.end(), [](int v) { return v >= 0 && v < 10; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i && !compact)
            out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

std::string word_label(const LRFilling& f) { return word_label(column_word(f)); }

CountMatrix count_matrix(const LRFilling& f) {
    const FillingType& t = f.type();
    const int cols = t.column_count(), s = t.labels();
    CountMatrix m;
    m.raw.assign(cols + 1, std::vector<int>(s + 1, 0));
    m.empty.assign(cols + 1, 0);
    Partition inner_t = transpose(t.inner());
    for (int c = 1; c <= cols; ++c) {
        m.raw[c] = m.raw[c - 1];
        for (int k : t.column(c - 1))
            for (int u = f.entries()[k]; u <= s; ++u)
                ++m.raw[c][u];
        m.empty[c] = m.empty[c - 1] + inner_t[c - 1];
    }
    return m;
}

bool dom_leq(const LRFilling& z, const LRFilling& x) {
    require_same_type(z, x);
    PartitionSequence zs = to_partition_sequence(z), xs = to_partition_sequence(x);
    for (std::size_t i = 0; i < zs.size(); ++i)
        if (!dominance_leq(zs[i], xs[i]))
            return false;
    return true;
}

std::optional<CountCell> first_count_violation(const LRFilling& z, const LRFilling& x) {
    require_same_type(z, x);
    CountMatrix zm = count_matrix(z), xm = count_matrix(x);
    for (int c = 1; c < static_cast<int>(zm.raw.size()); ++c)
        for (int u = 1; u < static_cast<int>(zm.raw[c].size()); ++u)
            if (zm.at(c, u) < xm.at(c, u))
                return CountCell{c, u, zm.at(c, u), xm.at(c, u)};
    return std::nullopt;
}

bool dom_leq_by_counts(const LRFilling& z, const LRFilling& x) { return !first_count_violation(z, x).has_value(); }

} // namespace lrorder
