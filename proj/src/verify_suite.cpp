#include "kthue/constructions.hpp"
#include "kthue/repetition.hpp"
#include "kthue/verify.hpp"
#include "verify_util.hpp"

namespace kthue {

Certificate verify_construction(ConstructionKind kind, std::size_t t) {
    detail::Timer timer;
    const bool is4 = kind == ConstructionKind::phi4;
    const Word w = is4 ? phi4(t) : phi6(t);
    const std::size_t k = is4 ? 4 : 6;
    const std::size_t window = is4 ? 5 : 7;

    Certificate cert;
    cert.task = "construction";
    cert.parameters = {{"kind", is4 ? "phi4" : "phi6"}, {"t", t}, {"k", k}};
    cert.counts = {{"length", w.size()}};

    // Distinctness window first: every `window` consecutive terms pairwise distinct.
    for (std::size_t i = 0; i + window <= w.size(); ++i) {
        for (std::size_t a = 0; a < window; ++a) {
            for (std::size_t b = a + 1; b < window; ++b) {
                if (w[i + a] == w[i + b]) {
                    cert.status = Certificate::Status::counterexample;
                    cert.witness = {{"check", "distinct-window"}, {"position", i + 1},
                                    {"window", window}};
                    cert.elapsed_seconds = timer.seconds();
                    return cert;
                }
            }
        }
    }

    if (auto rep = is_k_thue(w, k)) {
        cert.status = Certificate::Status::counterexample;
        cert.witness = detail::witness_json(*rep);
        cert.witness["word"] = format_word(w, 1);
        cert.elapsed_seconds = timer.seconds();
        return cert;
    }

    cert.status = Certificate::Status::verified;
    cert.elapsed_seconds = timer.seconds();
    return cert;
}

std::string type_vector(std::size_t word_length, std::size_t ell, std::size_t d,
                        std::size_t start, std::size_t count) {
    if (ell == 0 || d == 0) throw std::invalid_argument("type_vector: ell and d must be positive");
    if (count == 0) return "";
    if (start < 1 || start + (count - 1) * d > word_length) {
        throw std::invalid_argument("type_vector: positions out of range");
    }
    std::string out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t pos = start + i * d;
        const std::size_t block = (pos + ell - 1) / ell;  // ceil(pos / ell), 1-based
        out.push_back(block % 2 == 1 ? 'N' : 'C');
    }
    return out;
}

SuiteConfig default_suite_config() {
    SuiteConfig cfg;
    cfg.bounded_images = true;
    cfg.window_determinism = true;
    cfg.tightness = true;
    cfg.kappa = true;
    cfg.lambda = true;
    cfg.construction = true;
    return cfg;
}

std::vector<Certificate> run_suite(const SuiteConfig& config) {
    std::vector<Certificate> certs;
    auto mu_for = [&](int k) -> const Morphism& {
        for (const auto& [kk, m] : config.mu_overrides) {
            if (kk == k) return m;
        }
        return builtin_mu(k);
    };

    if (config.bounded_images) {
        for (int k : config.ks) {
            VerifyOptions opt{config.jobs, config.node_budget};
            certs.push_back(verify_bounded_images_with(mu_for(k), k, config.bounded_max_len, opt));
        }
    }
    if (config.window_determinism) {
        for (int k : config.ks) certs.push_back(verify_window_determinism_with(mu_for(k), k));
    }
    if (config.tightness) {
        for (int k : config.tightness_ks) certs.push_back(verify_tightness(k));
    }
    if (config.kappa) {
        certs.push_back(verify_kappa_properties(
            config.exhaustive_t,
            {KappaProperty::K1, KappaProperty::K2, KappaProperty::K3, KappaProperty::K4,
             KappaProperty::K6, KappaProperty::K9}));
        certs.push_back(verify_kappa_properties(
            config.table_t,
            {KappaProperty::K5, KappaProperty::K7, KappaProperty::K8, KappaProperty::K10,
             KappaProperty::K11, KappaProperty::K12}));
    }
    if (config.lambda) {
        certs.push_back(verify_lambda_properties(
            config.exhaustive_t,
            {LambdaProperty::L1, LambdaProperty::L2, LambdaProperty::L3, LambdaProperty::L4,
             LambdaProperty::L5, LambdaProperty::L7}));
        certs.push_back(verify_lambda_properties(
            config.table_t, {LambdaProperty::L6, LambdaProperty::L8}));
    }
    if (config.construction) {
        certs.push_back(verify_construction(ConstructionKind::phi4, config.phi4_t));
        certs.push_back(verify_construction(ConstructionKind::phi6, config.phi6_t));
    }
    return certs;
}

}  // namespace kthue
