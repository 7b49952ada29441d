#include "cmlef/monomial.hpp"

#include <stdexcept>

namespace cmlef {

std::string render(const Monomial& m, const GeneratorLayout& layout) {
    if (m.empty())
        return "1";
    std::string out;
    std::uint64_t rest = m.bits();
    while (rest) {
        const unsigned r = static_cast<unsigned>(std::countr_zero(rest));
        if (!out.empty())
            out += "*";
        out += layout.name(r);
        rest &= rest - 1;
    }
    return out;
}

Monomial parse_monomial(std::string_view text, const GeneratorLayout& layout) {
    if (text == "1")
        return Monomial{};
    std::uint64_t bits = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = text.find('*', begin);
        const std::string_view piece =
            text.substr(begin, end == std::string_view::npos ? end : end - begin);
        const unsigned r = layout.rank(layout.parse_generator(piece));
        const std::uint64_t bit = std::uint64_t{1} << r;
        if (bits & bit)
            throw std::invalid_argument("Monomial: repeated generator in '" + std::string(text) +
                                        "'");
        bits |= bit;
        if (end == std::string_view::npos)
            break;
        begin = end + 1;
    }
    return Monomial(bits);
}

}  // namespace cmlef
