#include "lrorder/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "lrorder/errors.hpp"

namespace lrorder {

namespace {

nlohmann::json parts_json(const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); }

Partition partition_from_json(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError(std::string("filling JSON needs an array \"") + key + "\"");
    try {
        return Partition(j[key].get<std::vector<int>>());
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("\"") + key + "\" must be an array of integers");
    }
}

std::vector<int> parse_word(std::string_view text) {
    std::vector<int> out;
    bool commas = text.find(',') != std::string_view::npos;
    if (!commas) {
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw ParseError("malformed word '" + std::string(text) + "'");
            out.push_back(ch - '0');
        }
        return out;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = std::min(text.find(',', pos), text.size());
        std::string field(text.substr(pos, end - pos));
        if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("malformed word '" + std::string(text) + "'");
        out.push_back(std::stoi(field));
        pos = end + 1;
    }
    return out;
}

} // namespace

nlohmann::json type_to_json(const FillingType& type) {
    return {{"alpha", parts_json(type.content())}, {"beta", parts_json(type.outer())}, {"gamma", parts_json(type.inner())}};
}

nlohmann::json filling_to_json(const LRFilling& f) {
    nlohmann::json j = type_to_json(f.type());
    j["rows"] = f.rows();
    j["word"] = word_label(f);
    return j;
}

LRFilling filling_from_json(const nlohmann::json& j, const TypePtr& expected) {
    if (!j.is_object())
        throw ParseError("filling JSON must be an object");
    Partition beta = partition_from_json(j, "beta"), gamma = partition_from_json(j, "gamma");
    if (!j.contains("rows") || !j["rows"].is_array())
        throw ParseError("filling JSON needs an array \"rows\"");
    std::vector<std::vector<int>> rows;
    try {
        rows = j["rows"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError("\"rows\" must be an array of integer arrays");
    }

    Partition alpha;
    if (j.contains("alpha")) {
        alpha = partition_from_json(j, "alpha");
    } else {
        std::map<int, int> counts;
        for (const auto& row : rows)
            for (int v : row)
                ++counts[v];
        std::vector<int> parts;
        int expected_label = 1;
        for (auto [label, count] : counts) {
            if (label != expected_label++)
                throw InvalidFilling("entries must use the labels 1..s without gaps");
            parts.push_back(count);
        }
        try {
            alpha = Partition(parts);
        } catch (const ParseError&) {
            throw InvalidFilling("content of the entries is not a partition");
        }
    }
    TypePtr type = FillingType::make(alpha, beta, gamma);
    if (expected && !same_type(*expected, *type))
        throw TypeMismatch("filling has type " + type->describe() + ", expected " + expected->describe());
    return LRFilling::from_rows(expected ? expected : type, rows);
}

LRFilling parse_filling(std::string_view arg, const TypePtr& type) {
    if (arg.starts_with("w=")) {
        if (!type)
            throw ParseError("a column word needs --alpha, --beta and --gamma");
        return filling_from_word(type, parse_word(arg.substr(2)));
    }
    nlohmann::json j;
    try {
        if (arg.starts_with("{")) {
            j = nlohmann::json::parse(arg);
        } else {
            std::ifstream in{std::string(arg)};
            if (!in)
                throw ParseError("cannot open filling file '" + std::string(arg) + "'");
            j = nlohmann::json::parse(in);
        }
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed filling JSON: ") + e.what());
    }
    return filling_from_json(j, type);
}

std::string to_dot(const PosetGraph& p) {
    std::ostringstream out;
    out << "digraph " << to_string(p.relation()) << " {\n";
    out << "  rankdir=TB;\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=\"" << word_label(p.nodes()[i]) << "\"];\n";
    std::map<int, std::vector<std::size_t>> levels;
    for (std::size_t i = 0; i < p.size(); ++i)
        levels[p.ranks()[i]].push_back(i);
    for (const auto& [rank, members] : levels) {
        out << "  { rank=same;";
        for (std::size_t i : members)
            out << " n" << i << ';';
        out << " }\n";
    }
    for (auto [upper, lower] : p.covers())
        out << "  n" << upper << " -> n" << lower << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::json poset_to_json(const PosetGraph& p) {
    nlohmann::json j;
    if (!p.nodes().empty())
        j["type"] = type_to_json(p.nodes().front().type());
    j["relation"] = std::string(to_string(p.relation()));
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        j["nodes"].push_back({{"id", i},
                              {"word", word_label(p.nodes()[i])},
                              {"rows", p.nodes()[i].rows()},
                              {"rank", p.ranks()[i]}});
    j["edges"] = nlohmann::json::array();
    for (auto [upper, lower] : p.covers())
        j["edges"].push_back({upper, lower});
    j["maximal"] = p.maximal();
    j["minimal"] = p.minimal();
    GradedReport g = is_graded(p);
    j["graded"] = {{"graded", g.graded}, {"length", g.length}};
    j["lattice"] = is_lattice_order(p);
    return j;
}

} // namespace lrorder
