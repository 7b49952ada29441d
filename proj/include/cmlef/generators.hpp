#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cmlef {

/// One of the 2g degree-one generators: embedding slot `slot` of simple
/// factor `factor`; bar marks the complex-conjugate embedding.
struct GeneratorIndex {
    unsigned factor = 1;  // 1-based
    unsigned slot = 1;    // 1-based within the factor
    bool bar = false;

    GeneratorIndex conjugate() const { return {factor, slot, !bar}; }
    friend bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;
};

/// Index bookkeeping for a fixed factor configuration (g_1, ..., g_N).
///
/// Ranks give the canonical total order on generators: all unbarred
/// generators first, then all barred ones, factor-major within each block.
/// With g = sum g_t, rank r < g is unbarred and its conjugate is r + g.
class GeneratorLayout {
public:
    explicit GeneratorLayout(std::vector<unsigned> factor_genera);

    unsigned factor_count() const { return static_cast<unsigned>(genera_.size()); }
    unsigned genus(unsigned factor) const;  // 1-based factor
    unsigned total_genus() const { return g_; }
    unsigned generator_count() const { return 2 * g_; }
    const std::vector<unsigned>& factor_genera() const { return genera_; }

    unsigned rank(const GeneratorIndex& ix) const;
    GeneratorIndex generator(unsigned rank) const;

    std::uint64_t full_mask() const { return mask_of_width(2 * g_); }
    std::uint64_t unbarred_mask() const { return mask_of_width(g_); }
    std::uint64_t barred_mask() const { return unbarred_mask() << g_; }

    /// Swaps the unbarred and barred halves of a bit set (the involution c).
    std::uint64_t conjugate_mask(std::uint64_t bits) const;
    /// K subset of Sigma -> cK (same slots, barred).
    std::uint64_t bar_mask(std::uint64_t unbarred) const { return unbarred << g_; }
    /// cK -> K.
    std::uint64_t unbar_mask(std::uint64_t barred) const { return barred >> g_; }

    /// Stable text form: "w[factor.slot]" with suffix "^bar" when barred.
    std::string name(unsigned rank) const { return name(generator(rank)); }
    std::string name(const GeneratorIndex& ix) const;
    GeneratorIndex parse_generator(std::string_view text) const;

    friend bool operator==(const GeneratorLayout& a, const GeneratorLayout& b) {
        return a.genera_ == b.genera_;
    }

private:
    static std::uint64_t mask_of_width(unsigned w) {
        return w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
    }

    std::vector<unsigned> genera_;
    std::vector<unsigned> offset_;  // offset_[t] = g_1 + ... + g_t, offset_[0] = 0
    unsigned g_ = 0;
};

}  // namespace cmlef
