#pragma once

#include <cstdint>
#include <vector>

#include <maxlot/enumeration.hpp>
#include <maxlot/profile.hpp>

namespace maxlot {

/// SplitMix64. Self-contained so that random streams are identical across
/// platforms and standard libraries.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
        std::uint64_t value;
        do {
            value = next();
        } while (value < threshold);
        return value % bound;
    }

  private:
    std::uint64_t state_;
};

/// Stream for sample `index` of a seeded search: a pure function of
/// (seed, index), so shards can draw any index independently.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return SplitMix64(mixer.next());
}

/// Random anonymous profile: voter count uniform in [1, max_voters], types
/// i.i.d. uniform over the domain type list.
inline Profile random_profile(const Alternatives& alternatives,
                              const std::vector<WeakOrder>& types, int max_voters,
                              std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng = sample_stream(seed, index);
    const long long n = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_voters)));
    std::vector<long long> counts(types.size(), 0);
    for (long long i = 0; i < n; ++i) ++counts[rng.below(types.size())];
    std::vector<Profile::Entry> entries;
    for (std::size_t t = 0; t < types.size(); ++t)
        if (counts[t] > 0) entries.emplace_back(types[t], counts[t]);
    return Profile(alternatives, std::move(entries));
}

}  // namespace maxlot
