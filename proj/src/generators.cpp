#include "cmlef/generators.hpp"

#include <cctype>
#include <stdexcept>

namespace cmlef {

GeneratorLayout::GeneratorLayout(std::vector<unsigned> factor_genera)
    : genera_(std::move(factor_genera)) {
    if (genera_.empty())
        throw std::invalid_argument("GeneratorLayout: need at least one factor");
    offset_.reserve(genera_.size() + 1);
    offset_.push_back(0);
    for (unsigned gt : genera_) {
        if (gt == 0)
            throw std::invalid_argument("GeneratorLayout: factor genus must be positive");
        offset_.push_back(offset_.back() + gt);
    }
    g_ = offset_.back();
    if (2 * g_ > 64)
        throw std::invalid_argument("GeneratorLayout: 2g exceeds the 64-generator cap");
}

unsigned GeneratorLayout::genus(unsigned factor) const {
    if (factor == 0 || factor > genera_.size())
        throw std::out_of_range("GeneratorLayout: factor out of range");
    return genera_[factor - 1];
}

unsigned GeneratorLayout::rank(const GeneratorIndex& ix) const {
    if (ix.factor == 0 || ix.factor > genera_.size())
        throw std::out_of_range("GeneratorLayout: factor out of range");
    if (ix.slot == 0 || ix.slot > genera_[ix.factor - 1])
        throw std::out_of_range("GeneratorLayout: slot out of range");
    const unsigned base = offset_[ix.factor - 1] + (ix.slot - 1);
    return ix.bar ? base + g_ : base;
}

GeneratorIndex GeneratorLayout::generator(unsigned rank) const {
    if (rank >= 2 * g_)
        throw std::out_of_range("GeneratorLayout: rank out of range");
    const bool bar = rank >= g_;
    unsigned base = bar ? rank - g_ : rank;
    unsigned factor = 1;
    while (base >= genera_[factor - 1]) {
        base -= genera_[factor - 1];
        ++factor;
    }
    return {factor, base + 1, bar};
}

std::uint64_t GeneratorLayout::conjugate_mask(std::uint64_t bits) const {
    const std::uint64_t low = bits & unbarred_mask();
    const std::uint64_t high = bits & barred_mask();
    return (low << g_) | (high >> g_);
}

std::string GeneratorLayout::name(const GeneratorIndex& ix) const {
    std::string out = "w[" + std::to_string(ix.factor) + "." + std::to_string(ix.slot) + "]";
    if (ix.bar)
        out += "^bar";
    return out;
}

GeneratorIndex GeneratorLayout::parse_generator(std::string_view text) const {
    const auto bad = [&] {
        return std::invalid_argument("GeneratorLayout: malformed generator '" + std::string(text) +
                                     "'");
    };
    const auto read_number = [&](std::string_view& s) -> unsigned {
        std::size_t n = 0;
        unsigned long v = 0;
        while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) {
            v = v * 10 + static_cast<unsigned long>(s[n] - '0');
            if (v > 64)
                throw bad();
            ++n;
        }
        if (n == 0)
            throw bad();
        s.remove_prefix(n);
        return static_cast<unsigned>(v);
    };

    std::string_view s = text;
    if (s.substr(0, 2) != "w[")
        throw bad();
    s.remove_prefix(2);
    const unsigned factor = read_number(s);
    if (s.empty() || s.front() != '.')
        throw bad();
    s.remove_prefix(1);
    const unsigned slot = read_number(s);
    if (s.empty() || s.front() != ']')
        throw bad();
    s.remove_prefix(1);
    bool bar = false;
    if (s == "^bar") {
        bar = true;
        s = {};
    }
    if (!s.empty())
        throw bad();
    GeneratorIndex ix{factor, slot, bar};
    rank(ix);  // range-check against this layout
    return ix;
}

}  // namespace cmlef
