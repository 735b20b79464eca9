#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/operator.hpp"
#include "padic/prime.hpp"
#include "padic/uncertainty.hpp"
#include "padic/vector.hpp"

namespace padic {

/// Instance families. symmetric: random symmetric dense matrices (hence
/// self-adjoint); general: unconstrained dense matrices; c0_diagonal:
/// diagonal maps on the sequence space with unbounded default rules and
/// finitely supported normalized vectors.
enum class OperatorClass { symmetric, general, c0_diagonal };

std::string to_string(OperatorClass cls);
OperatorClass operator_class_from_string(const std::string& name);

struct CampaignConfig {
    std::vector<std::int64_t> primes = {2, 3, 5, 7};
    std::vector<std::uint32_t> dims = {2, 3, 4};
    std::uint32_t trials_per_cell = 100;
    int size_bound = 8;
    std::vector<OperatorClass> operator_classes = {
        OperatorClass::symmetric, OperatorClass::general, OperatorClass::c0_diagonal};
    std::uint32_t witnesses_per_instance = 3;
    std::uint64_t seed = 12345;
    /// Test-only: negates the comparison of one check (HRS_i in verify
    /// mode, IDENT_ii in identity mode) so a run must report failures,
    /// proving the harness can see violations.
    bool mutate = false;

    static constexpr std::uint32_t min_dim = 2;
    static constexpr std::uint32_t max_dim = 16;

    /// Throws error naming the offending field.
    void validate() const;
};

/// verify runs every check applicable to an instance class; identity
/// restricts to IDENT_ii and the NOTE identities.
enum class CampaignMode { verify, identity };

/// One generated test case: a deterministic function of
/// (seed, prime, dim, class, trial).
struct Instance {
    Prime p;
    std::uint32_t dim; // matrix dimension, or support size on the sequence space
    OperatorClass op_class;
    std::uint32_t trial;
    POperator a;
    POperator b;
    PVector x;
    std::vector<PVector> witnesses;
    std::string seed_desc;
};

Instance generate_instance(const Prime& p, std::uint32_t dim, OperatorClass cls,
                           std::uint32_t trial, std::uint64_t seed, int size_bound,
                           std::uint32_t witnesses);

std::vector<CheckId> applicable_checks(OperatorClass cls, CampaignMode mode);

/// Runs every applicable check; MP checks run once per witness.
std::vector<Verdict> evaluate_instance(const Instance& inst, CampaignMode mode, bool mutate);

struct CheckStats {
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::int64_t tight = 0;
    std::int64_t degenerate = 0;

    void absorb(const Verdict& v);
    void merge(const CheckStats& o);
};

struct CellStats {
    CheckId check;
    std::int64_t prime;
    std::uint32_t dim;
    OperatorClass op_class;
    CheckStats stats;
};

struct CapturedFailure {
    Instance instance;
    Verdict verdict;
};

struct CampaignReport {
    CampaignConfig config;
    CampaignMode mode = CampaignMode::verify;
    std::vector<std::pair<CheckId, CheckStats>> totals; // canonical check order
    std::vector<CellStats> cells;
    std::vector<CapturedFailure> failures;
    double wall_time_seconds = 0.0;

    std::int64_t total_failed() const;
};

/// Deterministic function of the config apart from wall_time_seconds:
/// cells may be evaluated in parallel (capped by the
/// PADIC_UNCERTAINTY_THREADS environment variable), but results are merged
/// in cell order, so thread count and completion order never change the
/// report.
CampaignReport run_campaign(const CampaignConfig& config,
                            CampaignMode mode = CampaignMode::verify);

} // namespace padic
