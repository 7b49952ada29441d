#include "cmlef/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace cmlef {

Scalar::Scalar(long num, long den) {
    if (den == 0)
        throw std::invalid_argument("Scalar: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw std::domain_error("Scalar: division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw std::domain_error("Scalar: inverse of zero");
    mpq_class r = 1 / v_;
    return Scalar(std::move(r));
}

Scalar Scalar::from_string(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("Scalar: malformed rational '" + std::string(text) + "'");
    };
    const auto all_digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num_part = body;
    std::string_view den_part;
    bool has_den = false;
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part)))
        throw bad();
    const std::string num_text(num_part);
    const std::string den_text(has_den ? std::string(den_part) : std::string("1"));
    mpz_class num(num_text);
    mpz_class den(den_text);
    if (den == 0)
        throw bad();
    if (negative)
        num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

}  // namespace cmlef
