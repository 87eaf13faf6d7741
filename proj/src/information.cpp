#include "actsets/information.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace actsets {

InfoStructure::InfoStructure(const StateSpace& space, std::vector<Signal> signals)
    : space_(space), signals_(std::move(signals)) {
    if (signals_.empty()) throw DegenerateInput("information structure needs at least one signal");
    Rational total = 0;
    for (const auto& s : signals_) {
        require_same_space(space_, s.posterior.space());
        if (s.weight <= 0) throw DegenerateInput("signal weights must be strictly positive");
        total += s.weight;
    }
    if (total != 1)
        throw DegenerateInput("signal weights sum to " + format_rational(total) + ", expected 1");
}

InfoStructure InfoStructure::constant(Belief prior) {
    StateSpace space = prior.space();
    std::vector<Signal> s;
    s.push_back(Signal{Rational(1), std::move(prior)});
    return InfoStructure(space, std::move(s));
}

Belief InfoStructure::prior() const {
    std::vector<Rational> acc(static_cast<size_t>(space_.dimension()), Rational(0));
    for (const auto& s : signals_)
        for (size_t i = 0; i < acc.size(); ++i) acc[i] += s.weight * s.posterior.coords()[i];
    return Belief(space_, std::move(acc));
}

InfoStructure InfoStructure::normalized() const {
    std::map<std::vector<Rational>, Rational> merged;
    for (const auto& s : signals_) merged[s.posterior.coords()] += s.weight;
    std::vector<Signal> out;
    out.reserve(merged.size());
    for (auto& [coords, weight] : merged)
        out.push_back(Signal{weight, Belief(space_, coords)});
    return InfoStructure(space_, std::move(out));
}

bool InfoStructure::equivalent_to(const InfoStructure& other) const {
    if (!(space_ == other.space_)) return false;
    auto a = normalized();
    auto b = other.normalized();
    if (a.signals_.size() != b.signals_.size()) return false;
    for (size_t i = 0; i < a.signals_.size(); ++i) {
        if (a.signals_[i].weight != b.signals_[i].weight) return false;
        if (!(a.signals_[i].posterior == b.signals_[i].posterior)) return false;
    }
    return true;
}

Partition::Partition(int signal_count, std::vector<std::vector<int>> blocks)
    : signal_count_(signal_count), blocks_(std::move(blocks)) {
    std::vector<char> seen(static_cast<size_t>(signal_count), 0);
    for (const auto& block : blocks_) {
        if (block.empty()) throw PartitionError("empty block");
        for (int i : block) {
            if (i < 0 || i >= signal_count) throw PartitionError("signal index out of range");
            if (seen[static_cast<size_t>(i)]) throw PartitionError("signal index repeated across blocks");
            seen[static_cast<size_t>(i)] = 1;
        }
    }
    for (char s : seen)
        if (!s) throw PartitionError("blocks do not cover every signal");
    for (auto& block : blocks_) std::sort(block.begin(), block.end());
    std::sort(blocks_.begin(), blocks_.end());
}

Partition Partition::trivial(int signal_count) {
    std::vector<int> all(static_cast<size_t>(signal_count));
    std::iota(all.begin(), all.end(), 0);
    return Partition(signal_count, {all});
}

Partition Partition::discrete(int signal_count) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < signal_count; ++i) blocks.push_back({i});
    return Partition(signal_count, std::move(blocks));
}

InfoStructure garble(const InfoStructure& q, const Partition& partition) {
    if (partition.signal_count() != q.signal_count())
        throw PartitionError("partition indexes a different signal count");
    std::vector<Signal> out;
    out.reserve(partition.blocks().size());
    for (const auto& block : partition.blocks()) {
        Rational weight = 0;
        std::vector<Rational> acc(static_cast<size_t>(q.space().dimension()), Rational(0));
        for (int i : block) {
            const Signal& s = q.signals()[static_cast<size_t>(i)];
            weight += s.weight;
            for (size_t c = 0; c < acc.size(); ++c) acc[c] += s.weight * s.posterior.coords()[c];
        }
        for (auto& c : acc) c /= weight;
        out.push_back(Signal{weight, Belief(q.space(), std::move(acc))});
    }
    return InfoStructure(q.space(), std::move(out));
}

int signal_cap() { return 8; }

namespace {

// restricted-growth strings enumerate set partitions of {0..n-1}
template <class Fn>
void for_each_partition(int n, const Fn& fn) {
    std::vector<int> assign(static_cast<size_t>(n), 0);
    std::vector<int> maxid(static_cast<size_t>(n), 0);
    for (;;) {
        int blocks = 1 + *std::max_element(assign.begin(), assign.end());
        std::vector<std::vector<int>> part(static_cast<size_t>(blocks));
        for (int i = 0; i < n; ++i) part[static_cast<size_t>(assign[static_cast<size_t>(i)])].push_back(i);
        fn(part);

        int i = n - 1;
        while (i > 0 && assign[static_cast<size_t>(i)] == maxid[static_cast<size_t>(i - 1)] + 1) --i;
        if (i == 0) break;
        ++assign[static_cast<size_t>(i)];
        maxid[static_cast<size_t>(i)] =
            std::max(maxid[static_cast<size_t>(i - 1)], assign[static_cast<size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            assign[static_cast<size_t>(j)] = 0;
            maxid[static_cast<size_t>(j)] = maxid[static_cast<size_t>(i)];
        }
    }
}

}  // namespace

bool is_refinement(const InfoStructure& fine, const InfoStructure& coarse) {
    require_same_space(fine.space(), coarse.space());
    if (fine.signal_count() > signal_cap())
        throw SignalCap("refinement search capped at " + std::to_string(signal_cap()) + " signals");
    const InfoStructure target = coarse.normalized();
    bool found = false;
    for_each_partition(fine.signal_count(), [&](const std::vector<std::vector<int>>& blocks) {
        if (found) return;
        InfoStructure garbled = garble(fine, Partition(fine.signal_count(), blocks));
        if (garbled.equivalent_to(target)) found = true;
    });
    return found;
}

Rational voi(const ActSet& g, const InfoStructure& q) {
    require_same_space(g.space(), q.space());
    Rational expected = 0;
    for (const auto& s : q.signals()) expected += s.weight * g.support(s.posterior);
    return expected - g.support(q.prior());
}

double voi(const ValueFunction& f, const InfoStructure& q) {
    require_same_space(f.space(), q.space());
    double expected = 0;
    for (const auto& s : q.signals()) expected += to_double(s.weight) * f.eval(s.posterior);
    return expected - f.eval(q.prior());
}

Rational relative_voi(const ActSet& g, const InfoStructure& fine, const InfoStructure& coarse) {
    require_same_space(g.space(), fine.space());
    if (!is_refinement(fine, coarse))
        throw NotARefinement("relative value of information needs a fine/coarse pair");
    Rational ef = 0;
    for (const auto& s : fine.signals()) ef += s.weight * g.support(s.posterior);
    Rational ec = 0;
    for (const auto& s : coarse.signals()) ec += s.weight * g.support(s.posterior);
    return ef - ec;
}

}  // namespace actsets
