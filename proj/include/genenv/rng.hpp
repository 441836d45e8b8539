#ifndef GENENV_RNG_HPP
#define GENENV_RNG_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace genenv {

// SplitMix64 finalizer. Fully specified, so streams are identical on every platform.
uint64_t splitmix64(uint64_t x);

// FNV-1a 64-bit over raw bytes; used for stream derivation and artifact digests.
uint64_t fnv1a64(std::string_view bytes);
std::string to_hex(uint64_t v);

// Counter-based random stream. A draw is a pure function of
// (master_seed, stream_label, counter), so any draw sequence can be replayed
// and parallel workers get independent substreams by label.
struct RngStream {
    uint64_t master_seed = 0;
    std::string stream_label;
    uint64_t counter = 0;

    uint64_t next_u64();
    double next_real01();                                 // [0, 1)
    uint64_t next_below(uint64_t n);                      // uniform in [0, n)
    bool next_bernoulli(double p);
    int next_categorical(const std::vector<double>& probs);

private:
    uint64_t base_ = 0;
    friend RngStream derive_stream(uint64_t master_seed, const std::string& label);
};

RngStream derive_stream(uint64_t master_seed, const std::string& label);

} // namespace genenv

#endif
