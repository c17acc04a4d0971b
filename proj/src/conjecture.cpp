#include "lrorder/conjecture.hpp"

#include <algorithm>
#include <string>

#include "lrorder/bruhat.hpp"
#include "lrorder/enumerate.hpp"
#include "lrorder/io.hpp"
#include "lrorder/word_chain.hpp"
#include "sweep.hpp"

namespace lrorder {

ConjectureReport conjecture_probe(const LRFilling& x, const LRFilling& z) {
    ConjectureReport report;
    report.bruhat = bruhat_chain(x, z).fillings;
    report.word = word_chain(x, z, TieRule::max()).fillings;
    const std::size_t common = std::min(report.bruhat.size(), report.word.size());
    for (std::size_t i = 0; i < common; ++i)
        if (!(report.bruhat[i] == report.word[i])) {
            report.first_divergence = static_cast<int>(i);
            break;
        }
    if (!report.first_divergence && report.bruhat.size() != report.word.size())
        report.first_divergence = static_cast<int>(common);
    report.agree = !report.first_divergence.has_value();
    return report;
}

nlohmann::json conjecture_record(const LRFilling& x, const LRFilling& z, const ConjectureReport& report,
                                 bool with_chains) {
    nlohmann::json j;
    j["type"] = type_to_json(x.type());
    j["X"] = word_label(x);
    j["Z"] = word_label(z);
    j["agree"] = report.agree;
    j["first_divergence"] = report.first_divergence ? nlohmann::json(*report.first_divergence) : nlohmann::json();
    if (with_chains) {
        auto words = [](const std::vector<LRFilling>& chain) {
            std::vector<std::string> out;
            for (const auto& f : chain)
                out.push_back(word_label(f));
            return out;
        };
        j["chain_bruhat"] = words(report.bruhat);
        j["chain_word"] = words(report.word);
    }
    return j;
}

nlohmann::json summary_to_json(const ConjectureSummary& s) {
    return {{"summary",
             {{"instances", s.instances},
              {"pairs", s.pairs},
              {"agree", s.agree},
              {"diverge", s.diverge},
              {"first_step_disagree", s.first_step_disagree}}}};
}

namespace {

struct ShapeOutcome {
    ConjectureSummary summary;
    std::string lines;
};

ShapeOutcome probe_shape(const detail::ShapeItem& shape, bool with_chains) {
    ShapeOutcome out;
    const int n = shape.beta.weight() - shape.gamma.weight();
    for (const Partition& alpha : partitions_of(n)) {
        auto fillings = enumerate_fillings(FillingType::make(alpha, shape.beta, shape.gamma));
        ++out.summary.instances;
        std::vector<PartitionSequence> seqs;
        for (const auto& f : fillings)
            seqs.push_back(to_partition_sequence(f));
        for (std::size_t xi = 0; xi < fillings.size(); ++xi)
            for (std::size_t zi = 0; zi < fillings.size(); ++zi) {
                if (xi == zi)
                    continue;
                bool below = true;
                for (std::size_t i = 0; i < seqs[xi].size() && below; ++i)
                    below = dominance_leq(seqs[zi][i], seqs[xi][i]);
                if (!below)
                    continue;
                ConjectureReport r = conjecture_probe(fillings[xi], fillings[zi]);
                ++out.summary.pairs;
                ++(r.agree ? out.summary.agree : out.summary.diverge);
                if (r.first_divergence == 1)
                    ++out.summary.first_step_disagree;
                out.lines += conjecture_record(fillings[xi], fillings[zi], r, with_chains).dump();
                out.lines += '\n';
            }
    }
    return out;
}

} // namespace

ConjectureSummary run_conjecture_sweep(const SweepBounds& bounds, int jobs, bool with_chains, std::ostream& out) {
    ConjectureSummary total;
    detail::chunked_sweep<ShapeOutcome>(
        [&](const ShapeVisitor& visit) { for_each_rook_shape(bounds, visit); }, jobs,
        [&](const detail::ShapeItem& shape) { return probe_shape(shape, with_chains); },
        [&](ShapeOutcome&& o) {
            out << o.lines;
            total.instances += o.summary.instances;
            total.pairs += o.summary.pairs;
            total.agree += o.summary.agree;
            total.diverge += o.summary.diverge;
            total.first_step_disagree += o.summary.first_step_disagree;
        });
    out << summary_to_json(total).dump() << '\n';
    return total;
}

} // namespace lrorder
