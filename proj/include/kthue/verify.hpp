#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kthue/builtin.hpp"
#include "kthue/certificate.hpp"
#include "kthue/morphism.hpp"

namespace kthue {

struct VerifyOptions {
    std::size_t jobs = 1;
    std::uint64_t node_budget = 0;  // 0 = unlimited; checked at partition boundaries
};

/// Depth-first search over all square-free ternary words up to max_len,
/// checking at every node that the mu_k-image stays k-Thue (incrementally:
/// only repetitions ending in the newly appended image block). Parallel runs
/// partition the tree by word prefix and merge deterministically, so the
/// certificate is independent of the worker count.
Certificate verify_bounded_images(int k, std::size_t max_len = 40, const VerifyOptions& opt = {});
Certificate verify_bounded_images_with(const Morphism& m, int k, std::size_t max_len,
                                       const VerifyOptions& opt = {});

/// For each d <= k and each square-free 4-window delta over A3, keys the
/// d-subsequences of mu_k(delta) spanning the first and last image block by
/// (d, start offset, content); verified iff no key maps to two distinct
/// middle pairs x2 x3.
Certificate verify_window_determinism(int k);
Certificate verify_window_determinism_with(const Morphism& m, int k);

/// Exhausts all k-Thue words over a (k+1)-letter alphabet and reports the
/// maximum length; verified iff the maximum equals 2k+1.
Certificate verify_tightness(int k);

enum class KappaProperty { K1, K2, K3, K4, K5, K6, K7, K8, K9, K10, K11, K12 };
enum class LambdaProperty { L1, L2, L3, L4, L5, L6, L7, L8 };

std::vector<KappaProperty> all_kappa_properties();
std::vector<LambdaProperty> all_lambda_properties();
const char* property_name(KappaProperty p);
const char* property_name(LambdaProperty p);
std::optional<KappaProperty> parse_kappa_property(std::string_view name);
std::optional<LambdaProperty> parse_lambda_property(std::string_view name);

Certificate verify_kappa_properties(std::size_t t, const std::vector<KappaProperty>& props);
Certificate verify_kappa_properties_with(const KappaTable& table, std::size_t t,
                                         const std::vector<KappaProperty>& props);

Certificate verify_lambda_properties(std::size_t t, const std::vector<LambdaProperty>& props);
Certificate verify_lambda_properties_with(const LambdaTable& table, std::size_t t,
                                          const std::vector<LambdaProperty>& props);

enum class ConstructionKind { phi4, phi6 };

/// Builds phi4^t or phi6^t, runs the full k-Thue check (k = 4 or 6) and the
/// consecutive-distinctness window check (5 or 7 terms).
Certificate verify_construction(ConstructionKind kind, std::size_t t);

/// Classifies the positions start, start+d, ... of an order-ell wreath word as
/// base terms (N) or wrap terms (C): position p is N iff ceil(p/ell) is odd.
std::string type_vector(std::size_t word_length, std::size_t ell, std::size_t d,
                        std::size_t start, std::size_t count);

struct SuiteConfig {
    bool bounded_images = false;
    bool window_determinism = false;
    bool tightness = false;
    bool kappa = false;
    bool lambda = false;
    bool construction = false;

    std::vector<int> ks = {2, 3, 4, 5, 6, 7, 8};  // bounded images / window determinism
    std::vector<int> tightness_ks = {1, 2, 3, 4, 5, 6, 7, 8};
    std::size_t bounded_max_len = 40;
    std::size_t exhaustive_t = 6;   // per-position property checks
    std::size_t table_t = 5;        // uniqueness-table property checks
    std::size_t phi4_t = 7;
    std::size_t phi6_t = 6;
    std::size_t jobs = 1;
    std::uint64_t node_budget = 0;

    /// Test hook: replaces builtin_mu(k) in bounded-images and
    /// window-determinism tasks.
    std::vector<std::pair<int, Morphism>> mu_overrides;
};

SuiteConfig default_suite_config();

std::vector<Certificate> run_suite(const SuiteConfig& config);

}  // namespace kthue
