#include "hgm/mpc.hpp"

#include <future>
#include <random>

#include "hgm/rng.hpp"

namespace hgm {

KPartition random_k_partition(const Hypergraph& g, std::size_t k, std::uint64_t seed) {
    KPartition partition;
    partition.parts.resize(k);
    auto rng = make_rng(mix_seed(seed, 0x706172745f6bULL));
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    const std::size_t m = g.num_edges();
    for (std::size_t e = 0; e < m; ++e)
        partition.parts[pick(rng)].push_back(static_cast<EdgeId>(e));
    return partition;
}

void RoundTrace::write_csv(std::ostream& os) const {
    os << "round,machine,edges_held,bytes_sent_equiv,violation_flag\n";
    for (const auto& rec : rounds)
        for (std::size_t i = 0; i < rec.machines.size(); ++i) {
            const auto& ms = rec.machines[i];
            os << rec.round << ',' << i << ',' << ms.edges_held << ',' << ms.sent << ','
               << (ms.violation ? 1 : 0) << '\n';
        }
}

void MpcEngine::run_round(std::vector<MachineState>& machines, const LocalFn& local) {
    const std::size_t k = machines.size();
    std::vector<std::vector<Message>> outbound(k);

    auto work = [&](std::size_t i) {
        outbound[i] = local(i, machines[i], mix_seed(config_.seed, i, round_));
    };
    if (config_.parallel) {
        std::vector<std::future<void>> tasks;
        tasks.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            tasks.push_back(std::async(std::launch::async, work, i));
        for (auto& t : tasks) t.get();
    } else {
        for (std::size_t i = 0; i < k; ++i) work(i);
    }

    RoundRecord record;
    record.round = round_;
    record.machines.resize(k);

    // Deliver in sender order so the receiver's edge order is deterministic.
    for (std::size_t from = 0; from < k; ++from) {
        for (auto& msg : outbound[from]) {
            record.machines[from].sent += msg.payload.size();
            record.machines[msg.to].received += msg.payload.size();
            auto& dst = machines[msg.to].edges;
            dst.insert(dst.end(), msg.payload.begin(), msg.payload.end());
        }
    }

    std::size_t violator = k;
    for (std::size_t i = 0; i < k; ++i) {
        record.machines[i].edges_held = machines[i].edges.size();
        record.peak_load = std::max(record.peak_load, machines[i].edges.size());
        if (machines[i].edges.size() > config_.s) {
            record.machines[i].violation = true;
            ++trace_.violations;
            if (violator == k) violator = i;
        }
    }
    trace_.rounds.push_back(std::move(record));
    const std::size_t this_round = round_++;
    if (violator < k)
        throw MemoryViolation(violator, this_round, machines[violator].edges.size(), config_.s);
}

}  // namespace hgm
