#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>

#include "hcm/bitset.hpp"
#include "hcm/graph.hpp"
#include "hcm/rng.hpp"

namespace hcm {

struct HardCoreSample {
    Bitset set;
    std::uint64_t seed = 0;
    long long steps = 0;  // Glauber steps, 0 for exact samples
};

bool is_independent(const Graph& g, const Bitset& set);

// Numeric partition function Z_{G[mask]}(lambda) for subsets of one host
// graph, memoized on the subset bitset and multiplied over connected
// components. Also draws exact hard-core samples by sequential conditioning:
// vertices are decided in decreasing residual-degree order (ties by index,
// matching the recursion's pivot), each occupied with probability
// lambda * Z(rest minus N[v]) / Z(rest).
class PartitionOracle {
public:
    PartitionOracle(const Graph& g, double lambda,
                    std::size_t memo_budget = std::size_t{1} << 22);

    double z(const Bitset& mask);
    double z_full();

    Bitset sample(Rng& rng);
    Bitset sample_on(const Bitset& mask, Rng& rng);

    double lambda() const { return lambda_; }

private:
    const Graph& g_;
    double lambda_;
    std::size_t budget_;
    std::unordered_map<Bitset, double, BitsetHash> memo_;

    Bitset component_of(const Bitset& mask, int seed_vertex) const;
    double z_component(const Bitset& comp);
};

// Exact sampler; Pr(I) = lambda^{|I|} / Z_G(lambda). Feasibility is bounded by
// the oracle's memo budget; throws cap_error when exceeded.
HardCoreSample exact_sample(const Graph& g, double lambda, std::uint64_t seed,
                            std::size_t memo_budget = std::size_t{1} << 22);

// Single-site Glauber dynamics from the empty set: pick a uniform vertex; if
// no neighbour is occupied, occupy it with probability lambda/(1+lambda),
// otherwise leave it unoccupied. The state is always an independent set.
HardCoreSample glauber_sample(const Graph& g, double lambda, long long steps, std::uint64_t seed);

}  // namespace hcm
