#include "lrorder/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "lrorder/errors.hpp"

namespace lrorder {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : one_line_) {
        if (v < 1 || v > n || seen[v])
            throw PermutationError("not a permutation of 1.." + std::to_string(n) + ": " + to_string(*this));
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = i + 1;
    return Permutation(std::move(v));
}

int Permutation::position_of(int value) const {
    auto it = std::find(one_line_.begin(), one_line_.end(), value);
    return static_cast<int>(it - one_line_.begin()) + 1;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(one_line_.size());
    for (int k = 0; k < size(); ++k)
        inv[one_line_[k] - 1] = k + 1;
    return Permutation(std::move(inv));
}

Permutation& Permutation::swap_values(int a, int b) {
    for (int& v : one_line_) {
        if (v == a)
            v = b;
        else if (v == b)
            v = a;
    }
    return *this;
}

Permutation& Permutation::swap_positions(int i, int j) {
    std::swap(one_line_[i - 1], one_line_[j - 1]);
    return *this;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size())
        throw PermutationError("cannot compose permutations of different sizes");
    std::vector<int> out(v.size());
    for (int k = 1; k <= v.size(); ++k)
        out[k - 1] = u(v(k));
    return Permutation(std::move(out));
}

std::vector<std::pair<int, int>> inversions(const Permutation& x) {
    std::vector<std::pair<int, int>> out;
    auto line = x.one_line();
    for (std::size_t i = 0; i < line.size(); ++i)
        for (std::size_t j = i + 1; j < line.size(); ++j)
            if (line[i] > line[j])
                out.emplace_back(line[j], line[i]);
    std::sort(out.begin(), out.end());
    return out;
}

int length(const Permutation& x) {
    int count = 0;
    auto line = x.one_line();
    for (std::size_t i = 0; i < line.size(); ++i)
        for (std::size_t j = i + 1; j < line.size(); ++j)
            count += line[i] > line[j];
    return count;
}

bool bruhat_leq(const Permutation& x, const Permutation& z) {
    if (x.size() != z.size())
        throw PermutationError("Bruhat comparison of S_" + std::to_string(x.size()) + " with S_" +
                               std::to_string(z.size()));
    const int n = x.size();
    // below_x[j] = #{k <= i : x(k) <= j}; x <= z iff below_x >= below_z throughout.
    std::vector<int> below_x(n + 1, 0), below_z(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = x(i); j <= n; ++j)
            ++below_x[j];
        for (int j = z(i); j <= n; ++j)
            ++below_z[j];
        for (int j = 1; j <= n; ++j)
            if (below_x[j] < below_z[j])
                return false;
    }
    return true;
}

Permutation word_product(std::span<const int> word, int n) {
    Permutation p = Permutation::identity(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 1 || *it >= n)
            throw PermutationError("generator s" + std::to_string(*it) + " is not in S_" + std::to_string(n));
        p.swap_values(*it, *it + 1);
    }
    return p;
}

bool is_reduced(std::span<const int> word, int n) {
    return length(word_product(word, n)) == static_cast<int>(word.size());
}

RecordingTableau recording_tableau(const Permutation& x, const Partition& alpha) {
    if (alpha.weight() != x.size())
        throw PermutationError("content of weight " + std::to_string(alpha.weight()) + " does not match S_" +
                               std::to_string(x.size()));
    Permutation inv = x.inverse();
    RecordingTableau t;
    int value = 1;
    for (int part : alpha.parts()) {
        std::vector<int> row;
        for (int j = 0; j < part; ++j)
            row.push_back(inv(value++));
        t.rows.push_back(std::move(row));
    }
    return t;
}

bool RecordingTableau::is_standard() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j > 0 && rows[i][j - 1] >= rows[i][j])
                return false;
            if (i > 0 && (j >= rows[i - 1].size() || rows[i - 1][j] >= rows[i][j]))
                return false;
        }
    }
    return true;
}

bool is_in_parabolic_quotient(const Permutation& x, const Partition& alpha) {
    if (alpha.weight() != x.size())
        return false;
    for (const auto& row : recording_tableau(x, alpha).rows)
        if (!std::is_sorted(row.begin(), row.end()))
            return false;
    return true;
}

bool is_lattice_permutation(const Permutation& x, const Partition& alpha) {
    return alpha.weight() == x.size() && recording_tableau(x, alpha).is_standard();
}

ReducedWord bubble_reduced_word(const Permutation& z) {
    ReducedWord word;
    Permutation w = z;
    for (int k = z.size(); k >= 2; --k) {
        for (int u = w(k); u < k; ++u) {
            word.push_back(u);
            w.swap_values(u, u + 1);
        }
    }
    return word;
}

std::string to_string(const Permutation& x) {
    std::string out;
    for (int k = 1; k <= x.size(); ++k) {
        if (k > 1)
            out += ',';
        out += std::to_string(x(k));
    }
    return out;
}

namespace {

std::vector<int> parse_ints(std::string_view text, bool allow_s_prefix, const char* what) {
    std::vector<int> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
            ++i;
    };
    skip();
    while (i < text.size()) {
        if (allow_s_prefix && text[i] == 's')
            ++i;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc())
            throw ParseError(std::string("malformed ") + what + " '" + std::string(text) + "'");
        i = ptr - text.data();
        out.push_back(value);
        if (i < text.size() && text[i] != ',' && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError(std::string("malformed ") + what + " '" + std::string(text) + "'");
        skip();
    }
    return out;
}

} // namespace

Permutation parse_permutation(std::string_view text) {
    try {
        return Permutation(parse_ints(text, false, "permutation"));
    } catch (const PermutationError& e) {
        throw ParseError(e.what());
    }
}

std::string word_to_string(std::span<const int> word) {
    if (word.empty())
        return "e";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i)
            out += ' ';
        out += 's' + std::to_string(word[i]);
    }
    return out;
}

ReducedWord parse_reduced_word(std::string_view text) {
    if (text == "e")
        return {};
    return parse_ints(text, true, "word");
}

} // namespace lrorder
