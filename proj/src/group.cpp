#include "cmlef/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace cmlef {

FiniteGroup FiniteGroup::validated(std::vector<std::vector<unsigned>> table) {
    const std::size_t n = table.size();
    if (n == 0)
        throw GroupError("group: empty table");
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n)
            throw GroupError("group: table row " + std::to_string(r) + " is not square");
        for (unsigned v : table[r])
            if (v >= n)
                throw GroupError("group: entry out of range in row " + std::to_string(r));
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (table[0][a] != a)
            throw GroupError("group: 0 is not a left identity at " + std::to_string(a));
        if (table[a][0] != a)
            throw GroupError("group: 0 is not a right identity at " + std::to_string(a));
    }
    for (std::size_t a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (std::size_t b = 0; b < n && !has_inverse; ++b)
            has_inverse = table[a][b] == 0 && table[b][a] == 0;
        if (!has_inverse)
            throw GroupError("group: element " + std::to_string(a) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw GroupError("group: associativity fails at triple (" +
                                     std::to_string(a) + ", " + std::to_string(b) + ", " +
                                     std::to_string(c) + ")");
    return FiniteGroup(std::move(table));
}

unsigned FiniteGroup::inverse(unsigned a) const {
    for (unsigned b = 0; b < order(); ++b)
        if (mul(a, b) == 0)
            return b;
    throw GroupError("group: element has no inverse");  // unreachable after validation
}

unsigned FiniteGroup::element_order(unsigned a) const {
    unsigned power = a;
    unsigned ord = 1;
    while (power != 0) {
        power = mul(power, a);
        ++ord;
    }
    return ord;
}

bool FiniteGroup::is_central(unsigned a) const {
    for (unsigned b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a))
            return false;
    return true;
}

std::vector<unsigned> FiniteGroup::cyclic_subgroup(unsigned a) const {
    std::vector<unsigned> out;
    unsigned power = a;
    do {
        out.push_back(power);
        power = mul(power, a);
    } while (power != a);
    return out;
}

void validate_central_involution(const FiniteGroup& g, unsigned c) {
    if (c >= g.order())
        throw GroupError("involution: element index out of range");
    if (c == g.identity())
        throw GroupError("involution: c must differ from the identity");
    if (g.mul(c, c) != g.identity())
        throw GroupError("involution: c squared is not the identity");
    if (!g.is_central(c))
        throw GroupError("involution: c is not central");
}

DensityReport frobenius_density(const FiniteGroup& g, unsigned c) {
    validate_central_involution(g, c);
    DensityReport report;
    report.order = g.order();
    report.c = c;
    for (unsigned a = 0; a < g.order(); ++a) {
        unsigned power = a;
        bool favorable = false;
        do {
            favorable = favorable || power == c;
            power = g.mul(power, a);
        } while (power != a && !favorable);
        if (favorable)
            report.favorable.push_back(a);
    }
    report.favorable_count = static_cast<unsigned>(report.favorable.size());
    report.density = Scalar(static_cast<long>(report.favorable_count),
                            static_cast<long>(report.order));
    return report;
}

nlohmann::json to_json(const DensityReport& report) {
    return {{"order", report.order},
            {"c", report.c},
            {"favorable_count", report.favorable_count},
            {"density", report.density.str()},
            {"favorable", report.favorable},
            {"criterion", "c lies in the cyclic subgroup generated by the element"}};
}

bool quotient_check(const FiniteGroup& g, unsigned c) {
    validate_central_involution(g, c);
    const unsigned n = g.order();
    if (n % 2 != 0)
        return false;
    // Normality of {0, c}; central implies it, checked directly anyway.
    for (unsigned a = 0; a < n; ++a) {
        const unsigned conj = g.mul(g.mul(a, c), g.inverse(a));
        if (conj != 0 && conj != c)
            return false;
    }
    // Cosets {a, ca}, represented by the smaller member; identity coset is 0.
    std::vector<unsigned> rep(n);
    for (unsigned a = 0; a < n; ++a)
        rep[a] = std::min(a, g.mul(c, a));
    std::vector<unsigned> reps;
    for (unsigned a = 0; a < n; ++a)
        if (rep[a] == a)
            reps.push_back(a);
    if (reps.size() != n / 2)
        return false;
    std::vector<unsigned> index_of(n, 0);
    for (unsigned i = 0; i < reps.size(); ++i)
        index_of[reps[i]] = i;
    std::vector<std::vector<unsigned>> quotient(reps.size(),
                                                std::vector<unsigned>(reps.size(), 0));
    for (unsigned i = 0; i < reps.size(); ++i)
        for (unsigned j = 0; j < reps.size(); ++j)
            quotient[i][j] = index_of[rep[g.mul(reps[i], reps[j])]];
    try {
        FiniteGroup::validated(std::move(quotient));
    } catch (const GroupError&) {
        return false;
    }
    return true;
}

Permutation parse_cycles(std::string_view text) {
    Permutation perm;
    const auto grow = [&](unsigned p) {
        while (perm.size() <= p)
            perm.push_back(static_cast<unsigned>(perm.size()));
    };

    std::size_t pos = 0;
    const auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_space();
    if (pos == text.size())
        throw GroupError("permutation: empty cycle expression");
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw GroupError("permutation: expected '(' in cycle notation");
        ++pos;
        std::vector<unsigned> cycle;
        while (true) {
            skip_space();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            unsigned long v = 0;
            std::size_t digits = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
                ++digits;
                ++pos;
            }
            if (digits == 0 || v == 0 || v > 100000)
                throw GroupError("permutation: malformed point in cycle notation");
            cycle.push_back(static_cast<unsigned>(v - 1));  // to 0-based
        }
        if (!cycle.empty()) {
            for (unsigned p : cycle)
                grow(p);
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const unsigned from = cycle[i];
                const unsigned to = cycle[(i + 1) % cycle.size()];
                if (perm[from] != from)
                    throw GroupError("permutation: point repeated across cycles");
                perm[from] = to;
            }
        }
        skip_space();
    }
    return perm;
}

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
    // (a * b)(x) = a(b(x)), over the common extended degree.
    const std::size_t degree = std::max(a.size(), b.size());
    Permutation out(degree);
    const auto apply = [](const Permutation& p, unsigned x) {
        return x < p.size() ? p[x] : x;
    };
    for (unsigned x = 0; x < degree; ++x)
        out[x] = apply(a, apply(b, x));
    return out;
}

Permutation extend(const Permutation& p, std::size_t degree) {
    Permutation out = p;
    while (out.size() < degree)
        out.push_back(static_cast<unsigned>(out.size()));
    return out;
}

}  // namespace

GeneratedGroup group_from_permutations(const std::vector<std::string>& generators,
                                       unsigned max_order) {
    if (generators.empty())
        throw GroupError("permutation group: need at least one generator");
    std::size_t degree = 1;
    std::vector<Permutation> gens;
    for (const std::string& text : generators) {
        Permutation p = parse_cycles(text);
        degree = std::max(degree, p.size());
        gens.push_back(std::move(p));
    }
    for (Permutation& p : gens)
        p = extend(p, degree);

    Permutation identity(degree);
    for (unsigned x = 0; x < degree; ++x)
        identity[x] = x;

    std::vector<Permutation> elements{identity};
    std::map<Permutation, unsigned> index{{identity, 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const Permutation& gen : gens) {
            const Permutation next = compose(elements[head], gen);
            if (index.emplace(next, static_cast<unsigned>(elements.size())).second) {
                elements.push_back(next);
                if (elements.size() > max_order)
                    throw GroupError("permutation group: closure exceeds the order cap");
            }
        }
    }

    const unsigned n = static_cast<unsigned>(elements.size());
    std::vector<std::vector<unsigned>> table(n, std::vector<unsigned>(n, 0));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            table[a][b] = index.at(compose(elements[a], elements[b]));

    GeneratedGroup out{FiniteGroup::validated(std::move(table)), std::move(elements), {}};
    for (const Permutation& gen : gens)
        out.generator_elements.push_back(index.at(extend(gen, degree)));
    return out;
}

namespace {

bool json_uint(const nlohmann::json& v, std::uint64_t& out) {
    if (v.is_number_unsigned())
        out = v.get<std::uint64_t>();
    else if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        out = static_cast<std::uint64_t>(v.get<std::int64_t>());
    else
        return false;
    return true;
}

unsigned resolve_element(const GeneratedGroup& generated, const nlohmann::json& spec) {
    if (std::uint64_t v = 0; json_uint(spec, v)) {
        if (v >= generated.group.order())
            throw GroupError("group spec: c index out of range");
        return static_cast<unsigned>(v);
    }
    if (!spec.is_string())
        throw GroupError("group spec: c must be an index, cycles, or a generator word");
    const std::string text = spec.get<std::string>();
    if (!text.empty() && text.front() == '(') {
        const Permutation p = extend(parse_cycles(text), generated.elements.front().size());
        for (unsigned i = 0; i < generated.elements.size(); ++i)
            if (generated.elements[i] == p)
                return i;
        throw GroupError("group spec: c permutation is not in the generated group");
    }
    // Word in the generators: "g0*g2*g0".
    unsigned current = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('*', begin);
        const std::string token =
            text.substr(begin, end == std::string::npos ? end : end - begin);
        if (token.size() < 2 || token[0] != 'g')
            throw GroupError("group spec: malformed generator word '" + text + "'");
        unsigned long k = 0;
        for (std::size_t i = 1; i < token.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(token[i])))
                throw GroupError("group spec: malformed generator word '" + text + "'");
            k = k * 10 + static_cast<unsigned long>(token[i] - '0');
        }
        if (k >= generated.generator_elements.size())
            throw GroupError("group spec: generator reference out of range in '" + text + "'");
        current = generated.group.mul(current, generated.generator_elements[k]);
        if (end == std::string::npos)
            break;
        begin = end + 1;
    }
    return current;
}

}  // namespace

GroupSpec load_group_spec(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw GroupError("group spec: document must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "order" && key != "table" && key != "perm_generators" && key != "c")
            throw GroupError("group spec: unknown key '" + key + "'");
    if (!doc.contains("c"))
        throw GroupError("group spec: 'c' is required");

    if (doc.contains("table")) {
        if (doc.contains("perm_generators"))
            throw GroupError("group spec: give either a table or permutation generators");
        if (!doc["table"].is_array())
            throw GroupError("group spec: 'table' must be an array of rows");
        std::vector<std::vector<unsigned>> table;
        for (const auto& row : doc["table"]) {
            if (!row.is_array())
                throw GroupError("group spec: table rows must be arrays");
            std::vector<unsigned> r;
            for (const auto& v : row) {
                std::uint64_t value = 0;
                if (!json_uint(v, value) || value > 0xFFFFFFFFull)
                    throw GroupError("group spec: table entries must be nonnegative integers");
                r.push_back(static_cast<unsigned>(value));
            }
            table.push_back(std::move(r));
        }
        if (doc.contains("order")) {
            std::uint64_t order = 0;
            if (!json_uint(doc["order"], order) || order != table.size())
                throw GroupError("group spec: 'order' disagrees with the table size");
        }
        FiniteGroup group = FiniteGroup::validated(std::move(table));
        std::uint64_t c = 0;
        if (!json_uint(doc["c"], c) || c >= group.order())
            throw GroupError("group spec: 'c' must be an element index for table input");
        return {std::move(group), static_cast<unsigned>(c)};
    }

    if (!doc.contains("perm_generators") || !doc["perm_generators"].is_array() ||
        doc["perm_generators"].empty())
        throw GroupError("group spec: need 'table' or non-empty 'perm_generators'");
    std::vector<std::string> gens;
    for (const auto& item : doc["perm_generators"]) {
        if (!item.is_string())
            throw GroupError("group spec: permutation generators must be cycle strings");
        gens.push_back(item.get<std::string>());
    }
    GeneratedGroup generated = group_from_permutations(gens);
    if (doc.contains("order")) {
        std::uint64_t order = 0;
        if (!json_uint(doc["order"], order) || order != generated.group.order())
            throw GroupError("group spec: 'order' disagrees with the generated group");
    }
    const unsigned c = resolve_element(generated, doc["c"]);
    return {std::move(generated.group), c};
}

}  // namespace cmlef
