#include "genenv/rng.hpp"

#include <cstdio>
#include <stdexcept>

namespace genenv {

uint64_t splitmix64(uint64_t x) {
    uint64_t z = x + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string to_hex(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

RngStream derive_stream(uint64_t master_seed, const std::string& label) {
    RngStream s;
    s.master_seed = master_seed;
    s.stream_label = label;
    s.base_ = splitmix64(splitmix64(master_seed) ^ fnv1a64(label));
    return s;
}

uint64_t RngStream::next_u64() {
    ++counter;
    return splitmix64(base_ + counter * 0x9e3779b97f4a7c15ULL);
}

double RngStream::next_real01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t RngStream::next_below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

bool RngStream::next_bernoulli(double p) {
    return next_real01() < p;
}

int RngStream::next_categorical(const std::vector<double>& probs) {
    if (probs.empty()) throw std::invalid_argument("next_categorical: empty distribution");
    double u = next_real01();
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size() - 1); // guard against rounding shortfall
}

} // namespace genenv
