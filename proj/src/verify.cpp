#include "cmlef/verify.hpp"

#include <random>

#include "cmlef/ledger.hpp"

namespace cmlef {

namespace {

Scalar factorial(unsigned n) {
    Scalar out(1);
    for (unsigned k = 2; k <= n; ++k)
        out *= Scalar(static_cast<long>(k));
    return out;
}

SuiteResult hard_lefschetz_suite(const LefschetzClass& lc) {
    SuiteResult result{"hard-lefschetz", true, 0, ""};
    const unsigned g = lc.config().total_genus();
    for (unsigned i = 0; i <= g; ++i) {
        ++result.checked;
        try {
            lc.theta(i);
        } catch (const HardLefschetzError& e) {
            result.passed = false;
            result.counterexample = e.what();
            return result;
        }
    }
    return result;
}

// L^{g-i} w_{IJ} must land exactly on {(I u K, J u cK)} with K running over
// the (g-i)-subsets of Sigma avoiding I u cJ, with coefficient +-(g-i)! zeta^K.
SuiteResult power_law_suite(const LefschetzClass& lc) {
    SuiteResult result{"lefschetz-power-law", true, 0, ""};
    const GeneratorLayout& layout = lc.layout();
    const unsigned g = layout.total_genus();
    for (std::uint64_t bits = 0; bits <= layout.full_mask(); ++bits) {
        const Monomial m(bits);
        const unsigned i = m.degree();
        if (i > g)
            continue;
        ++result.checked;
        const CycleType t = CycleType::of(m, layout);
        const std::uint64_t blocked =
            t.i_bits() | layout.unbar_mask(t.j_bits());  // K must avoid I u cJ
        const Element image = lc.l_power_apply(Element::term(m, 1), g - i);
        const Scalar magnitude = factorial(g - i);

        Element expected_support;  // markers only, coefficient 1 per expected type
        for (const Monomial& k_mono : degree_basis(layout, g - i)) {
            const std::uint64_t k = k_mono.bits();
            if ((k & ~layout.unbarred_mask()) != 0)
                continue;
            if ((k & blocked) != 0)
                continue;
            if (lc.zeta().product_over(k).is_zero())
                continue;
            expected_support.add_term(
                Monomial(bits | k | layout.bar_mask(k)), 1);
        }
        if (image.term_count() != expected_support.term_count()) {
            result.passed = false;
            result.counterexample = "support size mismatch at " + render(m, layout);
            return result;
        }
        for (const auto& [mono, c] : image.terms()) {
            const std::uint64_t k = (mono.bits() & ~bits) & layout.unbarred_mask();
            if (expected_support.coefficient(mono).is_zero()) {
                result.passed = false;
                result.counterexample = "unexpected component " + render(mono, layout) +
                                        " in L^" + std::to_string(g - i) + " " +
                                        render(m, layout);
                return result;
            }
            const Scalar want = magnitude * lc.zeta().product_over(k);
            if (c != want && c != -want) {
                result.passed = false;
                result.counterexample = "coefficient " + c.str() + " at " +
                                        render(mono, layout) + ", expected +-" + want.str();
                return result;
            }
        }
    }
    return result;
}

// theta_i is block-diagonal for the reduced-label decomposition: a nonzero
// entry at row (I, J) for the column (I', J') forces (I0, J0) = (I'0, J'0).
// (The stronger inclusion shape I' = I u K fails under exact inversion once
// blocks have dimension > 1, first at g = 3 in the middle degrees.)
SuiteResult theta_support_suite(const LefschetzClass& lc) {
    SuiteResult result{"theta-support", true, 0, ""};
    const GeneratorLayout& layout = lc.layout();
    const unsigned g = layout.total_genus();
    const auto reduced_label = [&](std::uint64_t bits) {
        const std::uint64_t i_part = bits & layout.unbarred_mask();
        const std::uint64_t j_part = bits & layout.barred_mask();
        const std::uint64_t k = i_part & layout.unbar_mask(j_part);
        return std::pair{i_part & ~k, j_part & ~layout.bar_mask(k)};
    };
    for (unsigned i = 0; i <= g; ++i) {
        std::shared_ptr<const OperatorMatrix> theta;
        try {
            theta = lc.theta(i);
        } catch (const HardLefschetzError& e) {
            result.passed = false;
            result.counterexample = e.what();
            return result;
        }
        for (std::size_t col = 0; col < theta->cols(); ++col) {
            ++result.checked;
            const std::uint64_t source = theta->domain_basis()[col].bits();
            for (std::size_t row = 0; row < theta->rows(); ++row) {
                if (theta->at(row, col).is_zero())
                    continue;
                const std::uint64_t target = theta->codomain_basis()[row].bits();
                if (reduced_label(target) != reduced_label(source)) {
                    result.passed = false;
                    result.counterexample =
                        "theta_" + std::to_string(i) + " maps " +
                        render(Monomial(source), layout) + " onto " +
                        render(Monomial(target), layout) + " across labels";
                    return result;
                }
            }
        }
    }
    return result;
}

SuiteResult label_invariance_suite(const LefschetzClass& lc) {
    SuiteResult result{"lambda-label-invariance", true, 0, ""};
    const GeneratorLayout& layout = lc.layout();
    for (std::uint64_t bits = 0; bits <= layout.full_mask(); ++bits) {
        const CycleType t = CycleType::of(Monomial(bits), layout);
        if (t.weight() < 2)
            continue;
        ++result.checked;
        const DescentData data = descent_data(t, layout);
        std::set<CycleType> support;
        try {
            support = lc.lambda_type_support(t);
        } catch (const HardLefschetzError& e) {
            result.passed = false;
            result.counterexample = e.what();
            return result;
        }
        for (const CycleType& s : support) {
            const bool ok = s.weight() + 2 == t.weight() &&
                            descent_data(s, layout).reduced == data.reduced;
            if (!ok) {
                result.passed = false;
                result.counterexample = "Lambda " + render(t, layout) +
                                        " has component of the wrong label at " +
                                        render(s, layout);
                return result;
            }
        }
    }
    return result;
}

SuiteResult primitivity_suite(const LefschetzClass& lc) {
    SuiteResult result{"primitivity-criterion", true, 0, ""};
    const GeneratorLayout& layout = lc.layout();
    const unsigned g = layout.total_genus();
    for (std::uint64_t bits = 0; bits <= layout.full_mask(); ++bits) {
        const Monomial m(bits);
        const unsigned i = m.degree();
        if (i > g)
            continue;
        ++result.checked;
        const CycleType t = CycleType::of(m, layout);
        const bool k_empty = descent_data(t, layout).k_mask == 0;
        const bool primitive = lc.is_primitive(Element::term(m, 1), i);
        if (primitive != k_empty) {
            result.passed = false;
            result.counterexample = "primitivity disagrees with I n cJ at " + render(m, layout);
            return result;
        }
        if (i >= 2) {
            bool lambda_kills = false;
            try {
                lambda_kills = lc.lambda_apply(Element::term(m, 1), i).is_zero();
            } catch (const HardLefschetzError& e) {
                result.passed = false;
                result.counterexample = e.what();
                return result;
            }
            if (lambda_kills != primitive) {
                result.passed = false;
                result.counterexample =
                    "Lambda kernel disagrees with primitivity at " + render(m, layout);
                return result;
            }
        }
    }
    return result;
}

// The two Lambda regimes agree at their meeting degree: for i = g+1, Lambda
// is theta_{g-1} applied directly.
SuiteResult regime_boundary_suite(const LefschetzClass& lc) {
    SuiteResult result{"lambda-regime-boundary", true, 0, ""};
    const GeneratorLayout& layout = lc.layout();
    const unsigned g = layout.total_genus();
    if (g < 1)
        return result;
    const unsigned i = g + 1;
    if (i > layout.generator_count())
        return result;
    for (const Monomial& m : degree_basis(layout, i)) {
        ++result.checked;
        try {
            const Element via_lambda = lc.lambda_apply(Element::term(m, 1), i);
            const Element via_theta = lc.theta(g - 1)->apply(Element::term(m, 1));
            if (via_lambda != via_theta) {
                result.passed = false;
                result.counterexample = "regimes disagree at " + render(m, layout);
                return result;
            }
        } catch (const HardLefschetzError& e) {
            result.passed = false;
            result.counterexample = e.what();
            return result;
        }
    }
    return result;
}

SuiteResult pairing_random_suite(const LefschetzClass& lc, std::uint64_t seed) {
    SuiteResult result{"pairing-random", true, 0, ""};
    const GeneratorLayout& layout = lc.layout();
    const unsigned n = layout.generator_count();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (unsigned trial = 0; trial < 200; ++trial) {
        ++result.checked;
        const unsigned degree = static_cast<unsigned>(rng() % (n + 1));
        Element a;
        for (const Monomial& m : degree_basis(layout, degree)) {
            const long c = coeff(rng);
            if (c != 0 && rng() % 2 == 0)
                a.add_term(m, Scalar(c));
        }
        if (numerically_trivial(a, degree, layout) != a.is_zero()) {
            result.passed = false;
            result.counterexample = "pairing degenerate on a degree-" +
                                    std::to_string(degree) + " element (trial " +
                                    std::to_string(trial) + ")";
            return result;
        }
    }
    return result;
}

}  // namespace

VerifyReport run_verify_suites(const LefschetzClass& lc, std::uint64_t seed) {
    VerifyReport report;
    report.factors = lc.config().factor_genera();
    report.g = lc.config().total_genus();
    report.seed = seed;
    report.suites.push_back(hard_lefschetz_suite(lc));
    report.suites.push_back(power_law_suite(lc));
    report.suites.push_back(theta_support_suite(lc));
    report.suites.push_back(label_invariance_suite(lc));
    report.suites.push_back(primitivity_suite(lc));
    report.suites.push_back(regime_boundary_suite(lc));
    report.suites.push_back(pairing_random_suite(lc, seed));
    report.all_passed = true;
    for (const SuiteResult& s : report.suites)
        report.all_passed = report.all_passed && s.passed;
    return report;
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteResult& s : report.suites) {
        nlohmann::json entry = {{"name", s.name},
                                {"status", s.passed ? "pass" : "fail"},
                                {"checked", s.checked}};
        if (!s.passed)
            entry["counterexample"] = s.counterexample;
        suites.push_back(std::move(entry));
    }
    return {{"factors", report.factors},
            {"g", report.g},
            {"seed", report.seed},
            {"suites", std::move(suites)},
            {"all_pass", report.all_passed}};
}

}  // namespace cmlef
