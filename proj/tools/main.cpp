// cmlef command-line driver: verification suites, certificates and their
// independent checker, descent replay, and Frobenius-class densities.
//
// Exit codes: 0 all pass / verdict true / confirmed; 1 mathematical failure
// found; 2 degenerate or invalid input data; 64 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cmlef/certificate.hpp"
#include "cmlef/checker.hpp"
#include "cmlef/group.hpp"
#include "cmlef/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kBadInput = 2;
constexpr int kUsage = 64;
constexpr std::uint64_t kDefaultSeed = 1729;
constexpr unsigned kGenusCap = 8;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw InputError("JSON parse error in '" + path + "': " + e.what());
    }
    return doc;
}

std::vector<unsigned> parse_factor_list(const std::string& text) {
    std::vector<unsigned> factors;
    std::stringstream stream(text);
    std::string piece;
    while (std::getline(stream, piece, ',')) {
        try {
            const unsigned long v = std::stoul(piece);
            if (v == 0 || v > kGenusCap)
                throw UsageError("factor genera must lie in 1.." + std::to_string(kGenusCap));
            factors.push_back(static_cast<unsigned>(v));
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("malformed factor list '" + text + "'");
        }
    }
    if (factors.empty())
        throw UsageError("empty factor list");
    return factors;
}

struct ModelOptions {
    unsigned g = 0;                 // 0 = unset
    std::string factors;            // comma list, empty = unset
    std::string config_path;        // model document, empty = unset
    std::string zeta_path;          // eigenvalue map, empty = unset
    bool zeta_degenerate = false;

    void add_flags(CLI::App* cmd, bool with_config) {
        cmd->add_option("--g", g, "genus of a single simple factor")
            ->check(CLI::Range(1u, kGenusCap));
        cmd->add_option("--factors", factors, "comma-separated factor genera, e.g. 1,2");
        if (with_config)
            cmd->add_option("--config", config_path, "model JSON document (factors/frobenius/zeta)");
        cmd->add_option("--zeta", zeta_path, "JSON map generator -> rational for the form zeta");
        cmd->add_flag("--zeta-degenerate", zeta_degenerate,
                      "zero out the first zeta component (test hook)");
    }
};

struct ResolvedModel {
    cmlef::CMConfig config;
    cmlef::EigenvalueTuple zeta;
};

ResolvedModel resolve_model(const ModelOptions& opt) {
    std::optional<cmlef::ModelInput> input;
    std::vector<unsigned> genera;
    if (!opt.config_path.empty()) {
        if (opt.g != 0 || !opt.factors.empty())
            throw UsageError("--config excludes --g and --factors");
        try {
            input = cmlef::load_model_input(load_json_file(opt.config_path));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        genera = input->config.factor_genera();
    } else if (!opt.factors.empty()) {
        if (opt.g != 0)
            throw UsageError("give either --g or --factors, not both");
        genera = parse_factor_list(opt.factors);
    } else if (opt.g != 0) {
        genera = {opt.g};
    } else {
        throw UsageError("one of --g, --factors, or --config is required");
    }

    unsigned total = 0;
    for (unsigned gt : genera)
        total += gt;
    if (total == 0 || total > kGenusCap)
        throw UsageError("total genus must lie in 1.." + std::to_string(kGenusCap));

    cmlef::CMConfig config(genera);
    const cmlef::GeneratorLayout& layout = config.layout();

    cmlef::EigenvalueTuple zeta = cmlef::EigenvalueTuple::standard_skew(layout);
    if (input && input->zeta)
        zeta = *input->zeta;
    if (!opt.zeta_path.empty()) {
        try {
            zeta = cmlef::parse_eigenvalue_map(load_json_file(opt.zeta_path), layout);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    if (!zeta.is_skew(layout))
        throw InputError("zeta must be skew: zeta^{c sigma} = -zeta^sigma");
    if (opt.zeta_degenerate) {
        std::vector<cmlef::Scalar> values;
        for (unsigned r = 0; r < layout.generator_count(); ++r)
            values.push_back(zeta.at(r));
        values[0] = cmlef::Scalar(0);
        values[layout.total_genus()] = cmlef::Scalar(0);
        zeta = cmlef::EigenvalueTuple(std::move(values), layout);
    }
    return {std::move(config), std::move(zeta)};
}

struct OutputOptions {
    std::string format = "json";
    std::string out_path;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out_path, "write the result to this file instead of stdout");
    }
};

void emit(const OutputOptions& opt, const nlohmann::json& doc, const std::string& text) {
    // Text is always rendered from the JSON document, never computed apart.
    const std::string payload = opt.format == "json" ? doc.dump(2) + "\n" : text;
    if (opt.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(opt.out_path);
        if (!out)
            throw InputError("cannot write '" + opt.out_path + "'");
        out << payload;
    }
}

std::string render_verify_text(const nlohmann::json& doc) {
    std::string text = "configuration: factors=" + doc["factors"].dump() +
                       " g=" + std::to_string(doc["g"].get<unsigned>()) +
                       " seed=" + std::to_string(doc["seed"].get<std::uint64_t>()) + "\n";
    for (const auto& suite : doc["suites"]) {
        text += "suite " + suite["name"].get<std::string>() + ": " +
                suite["status"].get<std::string>() + " (" +
                std::to_string(suite["checked"].get<std::uint64_t>()) + " checked)";
        if (suite.contains("counterexample"))
            text += " -- " + suite["counterexample"].get<std::string>();
        text += "\n";
    }
    text += std::string("all suites: ") + (doc["all_pass"].get<bool>() ? "pass" : "fail") + "\n";
    return text;
}

std::string render_certificate_text(const nlohmann::json& doc) {
    std::string text = "configuration: factors=" + doc["config"]["factors"].dump() + "\n";
    text += "axioms: " + std::to_string(doc["axioms"].size()) + "\n";
    text += "records: " + std::to_string(doc["records"].size()) + "\n";
    for (const auto& rec : doc["records"]) {
        const std::string trace = rec["trace"].get<std::string>();
        if (trace == "0")
            text += "  zero trace at type " + rec["type"].dump() + "\n";
    }
    text += std::string("verdict: ") + (doc["verdict"].get<bool>() ? "true" : "false") + "\n";
    return text;
}

int cmd_verify(const ModelOptions& model_opt, const OutputOptions& out_opt,
               std::uint64_t seed) {
    const ResolvedModel model = resolve_model(model_opt);
    const cmlef::LefschetzClass lc(model.config, model.zeta);
    const cmlef::VerifyReport report = cmlef::run_verify_suites(lc, seed);
    const nlohmann::json doc = cmlef::to_json(report);
    emit(out_opt, doc, render_verify_text(doc));
    return report.all_passed ? kOk : kMathFailure;
}

int cmd_certify(const ModelOptions& model_opt, const OutputOptions& out_opt) {
    const ResolvedModel model = resolve_model(model_opt);
    const cmlef::LefschetzClass lc(model.config, model.zeta);
    nlohmann::json doc;
    try {
        doc = cmlef::to_json(cmlef::certify_theorem(lc));
    } catch (const cmlef::DegenerateZetaError& e) {
        nlohmann::json diagnostic = {{"verdict", nullptr}, {"reason", e.what()}};
        nlohmann::json zeros = nlohmann::json::array();
        for (const auto& ix : e.zero_components())
            zeros.push_back(model.config.layout().name(ix));
        diagnostic["zero_components"] = std::move(zeros);
        emit(out_opt, diagnostic, std::string(e.what()) + "\n");
        std::cerr << "verdict: withheld\n";
        return kBadInput;
    }
    emit(out_opt, doc, render_certificate_text(doc));
    const bool verdict = doc["verdict"].get<bool>();
    // The one-line verdict goes to stderr so stdout stays byte-deterministic.
    std::cerr << "verdict: " << (verdict ? "true" : "false") << "\n";
    return verdict ? kOk : kMathFailure;
}

int cmd_check(const std::string& path, const OutputOptions& out_opt) {
    const cmlef::CheckResult result = cmlef::check_certificate_file(path);
    const char* status = result.status == cmlef::CheckStatus::Confirmed   ? "confirmed"
                         : result.status == cmlef::CheckStatus::Mismatch ? "mismatch"
                                                                          : "malformed";
    nlohmann::json doc = {{"status", status}, {"message", result.message}};
    if (result.record_index >= 0)
        doc["record_index"] = result.record_index;
    std::string text = std::string(status) + ": " + result.message + "\n";
    if (result.record_index >= 0)
        text += "record index: " + std::to_string(result.record_index) + "\n";
    emit(out_opt, doc, text);
    switch (result.status) {
        case cmlef::CheckStatus::Confirmed: return kOk;
        case cmlef::CheckStatus::Mismatch: return kMathFailure;
        case cmlef::CheckStatus::Malformed: return kBadInput;
    }
    return kBadInput;
}

int cmd_descend(const ModelOptions& model_opt, const OutputOptions& out_opt,
                const std::string& type_text) {
    if (type_text.empty())
        throw UsageError("--type is required");
    const ResolvedModel model = resolve_model(model_opt);
    const cmlef::GeneratorLayout& layout = model.config.layout();
    cmlef::CycleType type;
    try {
        type = cmlef::CycleType::of(cmlef::parse_monomial(type_text, layout), layout);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const cmlef::LefschetzClass lc(model.config, model.zeta);
    const cmlef::Ledger ledger = cmlef::close_ledger(model.config);
    const cmlef::DescentReplay replay = cmlef::replay_descent(lc, type);

    nlohmann::json chain = nlohmann::json::array();
    for (const cmlef::CycleType& step : replay.chain)
        chain.push_back(cmlef::render(step, layout));
    nlohmann::json doc = {
        {"factors", model.config.factor_genera()},
        {"type", cmlef::type_to_json(type, layout)},
        {"K", cmlef::mask_to_names(replay.data.k_mask, layout)},
        {"I0", cmlef::mask_to_names(replay.data.reduced.i_bits(), layout)},
        {"J0", cmlef::mask_to_names(replay.data.reduced.j_bits(), layout)},
        {"k", replay.data.k},
        {"weight", type.weight()},
        {"mu", replay.mu.str()},
        {"chain", std::move(chain)},
        {"in_ledger", ledger.contains(type)},
    };
    if (ledger.contains(type))
        doc["justification"] =
            std::string(cmlef::justification_name(ledger.derivation(type).kind));

    std::string text = "type " + cmlef::render(type, layout) + ": k=" +
                       std::to_string(replay.data.k) + ", reduced " +
                       cmlef::render(replay.data.reduced, layout) + ", mu=" +
                       doc["mu"].get<std::string>() + "\n";
    for (const auto& step : doc["chain"])
        text += "  -> " + step.get<std::string>() + "\n";
    emit(out_opt, doc, text);
    return kOk;
}

int cmd_density(const std::string& path, const OutputOptions& out_opt) {
    if (path.empty())
        throw UsageError("--config is required");
    const nlohmann::json spec_doc = load_json_file(path);
    cmlef::GroupSpec spec = cmlef::load_group_spec(spec_doc);
    const cmlef::DensityReport report = cmlef::frobenius_density(spec.group, spec.c);
    nlohmann::json doc = cmlef::to_json(report);
    doc["quotient_ok"] = cmlef::quotient_check(spec.group, spec.c);
    const std::string text = "order " + std::to_string(report.order) + ", c=" +
                             std::to_string(report.c) + ", favorable " +
                             std::to_string(report.favorable_count) + ", density " +
                             report.density.str() + "\n";
    emit(out_opt, doc, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lefschetz calculus and equivalence certificates for CM cohomology models"};
    app.require_subcommand(1);

    ModelOptions verify_model, certify_model, descend_model;
    OutputOptions verify_out, certify_out, check_out, descend_out, density_out;
    std::uint64_t seed = kDefaultSeed;
    std::string check_path, density_path, descend_type;

    CLI::App* verify = app.add_subcommand("verify", "run the operator-calculus suites");
    verify_model.add_flags(verify, true);
    verify_out.add_flags(verify);
    verify->add_option("--seed", seed, "seed for the randomized suite");

    CLI::App* certify = app.add_subcommand("certify", "emit an equivalence certificate");
    certify_model.add_flags(certify, true);
    certify_out.add_flags(certify);

    CLI::App* check = app.add_subcommand("check", "independently re-verify a certificate");
    check->add_option("--config", check_path, "certificate file")->required();
    check_out.add_flags(check);

    CLI::App* descend = app.add_subcommand("descend", "replay the descent of one type");
    descend_model.add_flags(descend, true);
    descend->add_option("--type", descend_type, "type as a monomial, e.g. w[1.1]*w[1.1]^bar");
    descend_out.add_flags(descend);

    CLI::App* density = app.add_subcommand("density", "favorable Frobenius-class density");
    density->add_option("--config", density_path, "group spec file");
    density_out.add_flags(density);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(verify_model, verify_out, seed);
        if (certify->parsed())
            return cmd_certify(certify_model, certify_out);
        if (check->parsed())
            return cmd_check(check_path, check_out);
        if (descend->parsed())
            return cmd_descend(descend_model, descend_out, descend_type);
        if (density->parsed())
            return cmd_density(density_path, density_out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const cmlef::GroupError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const cmlef::HardLefschetzError& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kBadInput;
    } catch (const cmlef::DescentError& e) {
        std::cerr << "mathematical failure: " << e.what() << "\n";
        return kMathFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kUsage;
}
