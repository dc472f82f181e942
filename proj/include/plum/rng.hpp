#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace plum {

// Draw interface used everywhere randomness is consumed. Tests substitute
// scripted sources; production code uses RngStream.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    // uniform integer in [0, n); n >= 1
    virtual std::uint64_t pick(std::uint64_t n) = 0;
    // uniform real in [0, 1)
    virtual double real() = 0;
};

// SplitMix64 generator partitioned into named streams. Same (seed, stream id)
// replays the identical sequence on any platform: bounded picks use Lemire's
// multiply-shift rejection, reals take the top 53 bits. Never backed by
// std::uniform_*_distribution, whose outputs differ across standard libraries.
class RngStream final : public RandomSource {
public:
    RngStream(std::uint64_t seed, std::string_view stream_id);

    std::uint64_t pick(std::uint64_t n) override;
    double real() override;

    std::uint64_t seed() const { return seed_; }
    const std::string& stream_id() const { return id_; }
    // number of pick()/real() calls made so far
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t next_u64();

    std::uint64_t state_;
    std::uint64_t seed_;
    std::string id_;
    std::uint64_t counter_ = 0;
};

// The three streams a run consumes. Keeping them separate lets simulated
// annealing at zero temperature replay hill climbing exactly: acceptance
// draws never perturb edit sampling.
struct RngBundle {
    RngStream edits;
    RngStream selection;
    RngStream acceptance;

    explicit RngBundle(std::uint64_t seed)
        : edits(seed, "edits"), selection(seed, "selection"), acceptance(seed, "acceptance") {}
};

}  // namespace plum
