#include "lrorder/partition.hpp"

#include <charconv>
#include <numeric>

#include "lrorder/errors.hpp"

namespace lrorder {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ParseError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ParseError("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition transpose(const Partition& p) {
    std::vector<int> t(p.empty() ? 0 : p[0], 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j)
            ++t[j];
    return Partition(std::move(t));
}

bool dominance_leq(const Partition& a, const Partition& b) {
    std::size_t n = std::max(a.length(), b.length());
    int sa = 0, sb = 0;
    for (std::size_t j = 0; j < n; ++j) {
        sa += a[j];
        sb += b[j];
        if (sa > sb)
            return false;
    }
    return true;
}

bool contains(const Partition& inner, const Partition& outer) {
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i])
            return false;
    return true;
}

std::string to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    if (text.empty() || text == "0")
        return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto field = text.substr(pos, end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw ParseError("malformed partition '" + std::string(text) + "'");
        parts.push_back(value);
        pos = end + 1;
    }
    return Partition(std::move(parts));
}

std::string_view to_string(StripKind kind) {
    switch (kind) {
    case StripKind::none: return "none";
    case StripKind::horizontal: return "horizontal";
    case StripKind::vertical: return "vertical";
    case StripKind::rook: return "rook";
    }
    return "none";
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!contains(inner_, outer_))
        throw ShapeError("inner partition " + to_string(inner_) + " is not contained in " + to_string(outer_));
}

std::vector<Box> SkewShape::boxes() const {
    std::vector<Box> out;
    out.reserve(box_count());
    for (std::size_t r = 0; r < outer_.length(); ++r)
        for (int c = inner_[r]; c < outer_[r]; ++c)
            out.push_back({static_cast<int>(r), c});
    return out;
}

StripKind strip_kind(const SkewShape& s) {
    bool vertical = true;
    for (std::size_t i = 0; i < s.outer().length(); ++i)
        if (s.outer()[i] > s.inner()[i] + 1)
            vertical = false;
    Partition ot = transpose(s.outer()), it = transpose(s.inner());
    bool horizontal = true;
    for (std::size_t j = 0; j < ot.length(); ++j)
        if (ot[j] > it[j] + 1)
            horizontal = false;
    if (vertical && horizontal)
        return StripKind::rook;
    if (vertical)
        return StripKind::vertical;
    if (horizontal)
        return StripKind::horizontal;
    return StripKind::none;
}

} // namespace lrorder
