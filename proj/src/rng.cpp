#include "plum/rng.hpp"

#include <cassert>

namespace plum {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = kFnvOffset;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t splitmix(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::string_view stream_id)
    : seed_(seed), id_(stream_id) {
    // fold the stream id into the state, then burn two outputs so that
    // neighboring seeds do not start on neighboring states
    state_ = seed ^ fnv1a(stream_id);
    splitmix(state_);
    splitmix(state_);
}

std::uint64_t RngStream::next_u64() {
    return splitmix(state_);
}

std::uint64_t RngStream::pick(std::uint64_t n) {
    assert(n >= 1);
    ++counter_;
    if (n <= 1) return 0;
    // Lemire multiply-shift with rejection: unbiased, no division in the
    // common path, identical on every platform
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
        std::uint64_t threshold = (0 - n) % n;
        while (lo < threshold) {
            m = static_cast<unsigned __int128>(next_u64()) * n;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double RngStream::real() {
    ++counter_;
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace plum
