#include "padic/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <thread>

#include "padic/errors.hpp"
#include "padic/sampling.hpp"

namespace padic {

std::string to_string(OperatorClass cls) {
    switch (cls) {
        case OperatorClass::symmetric: return "symmetric";
        case OperatorClass::general: return "general";
        case OperatorClass::c0_diagonal: return "c0_diagonal";
    }
    throw error("unknown operator class");
}

OperatorClass operator_class_from_string(const std::string& name) {
    if (name == "symmetric") return OperatorClass::symmetric;
    if (name == "general") return OperatorClass::general;
    if (name == "c0_diagonal") return OperatorClass::c0_diagonal;
    throw parse_error("unknown operator class '" + name + "'");
}

void CampaignConfig::validate() const {
    if (primes.empty()) {
        throw error("config field 'primes' must be non-empty");
    }
    for (const std::int64_t p : primes) {
        try {
            Prime check(p);
        } catch (const error& e) {
            throw error("config field 'primes': " + std::string(e.what()));
        }
    }
    if (dims.empty()) {
        throw error("config field 'dims' must be non-empty");
    }
    for (const std::uint32_t d : dims) {
        if (d < min_dim || d > max_dim) {
            throw error("config field 'dims': dimension " + std::to_string(d) +
                        " outside supported range [" + std::to_string(min_dim) + ", " +
                        std::to_string(max_dim) + "]");
        }
    }
    if (trials_per_cell < 1) {
        throw error("config field 'trials_per_cell' must be >= 1");
    }
    if (size_bound < 1) {
        throw error("config field 'size_bound' must be >= 1");
    }
    if (operator_classes.empty()) {
        throw error("config field 'operator_classes' must be non-empty");
    }
    if (witnesses_per_instance < 1) {
        throw error("config field 'witnesses_per_instance' must be >= 1");
    }
}

namespace {

Rational random_nonzero_rational(SplitRng& rng, int bound) {
    Rational r = random_rational(rng, bound);
    while (r.is_zero()) {
        r = random_rational(rng, bound);
    }
    return r;
}

POperator random_dense(const Prime& p, std::uint32_t d, bool symmetric, SplitRng& rng,
                       int bound) {
    std::vector<Rational> m(static_cast<std::size_t>(d) * d, Rational(0));
    if (symmetric) {
        for (std::uint32_t i = 0; i < d; ++i) {
            for (std::uint32_t j = i; j < d; ++j) {
                const Rational v = random_rational_mixed(rng, bound, p);
                m[i * d + j] = v;
                m[j * d + i] = v;
            }
        }
    } else {
        for (Rational& v : m) {
            v = random_rational_mixed(rng, bound, p);
        }
    }
    return POperator::dense(p, d, std::move(m));
}

POperator random_c0_diagonal(const Prime& p, const PVector& x, std::uint32_t window,
                             SplitRng& rng, int bound) {
    // Nonzero slope keeps the default rule's magnitudes unbounded across
    // the index set; explicit entries override it on and near the support.
    std::int64_t slope = rng.uniform(-2, 2);
    if (slope == 0) {
        slope = rng.coin() ? -1 : 1;
    }
    const Rational coeff = random_nonzero_rational(rng, bound);
    std::map<std::uint32_t, Rational> entries;
    for (const auto& [n, v] : x.coords()) {
        if (rng.coin()) {
            entries[n] = random_rational_mixed(rng, bound, p);
        }
    }
    const auto extra = static_cast<std::uint32_t>(rng.index(window));
    if (!entries.contains(extra)) {
        entries[extra] = random_rational_mixed(rng, bound, p);
    }
    return POperator::diagonal(p, std::move(entries), coeff, slope);
}

constexpr std::uint64_t class_tag(OperatorClass cls) {
    switch (cls) {
        case OperatorClass::symmetric: return 1;
        case OperatorClass::general: return 2;
        case OperatorClass::c0_diagonal: return 3;
    }
    return 0;
}

constexpr CheckId canonical_check_order[] = {
    CheckId::hrs_i,    CheckId::hrs_ii,         CheckId::hrs_iii,
    CheckId::hrs_iv,   CheckId::hrs_v,          CheckId::hrs_vi,
    CheckId::ident_ii, CheckId::note_comm_zero, CheckId::note_anticomm_double,
    CheckId::mp_plus,  CheckId::mp_minus,
};

} // namespace

Instance generate_instance(const Prime& p, std::uint32_t dim, OperatorClass cls,
                           std::uint32_t trial, std::uint64_t seed, int size_bound,
                           std::uint32_t witnesses) {
    SplitRng rng = SplitRng(seed)
                       .derive(static_cast<std::uint64_t>(p.value()))
                       .derive(dim)
                       .derive(class_tag(cls))
                       .derive(trial);
    const bool dense = cls != OperatorClass::c0_diagonal;
    const std::uint32_t window = 2 * dim + 2;

    PVector x = dense ? sample_normalized(p, dim, rng, size_bound)
                      : sample_normalized_c0(p, dim, window, rng, size_bound);
    POperator a = dense ? random_dense(p, dim, cls == OperatorClass::symmetric, rng, size_bound)
                        : random_c0_diagonal(p, x, window, rng, size_bound);
    POperator b = dense ? random_dense(p, dim, cls == OperatorClass::symmetric, rng, size_bound)
                        : random_c0_diagonal(p, x, window, rng, size_bound);

    std::vector<PVector> ys;
    ys.reserve(witnesses);
    for (std::uint32_t w = 0; w < witnesses; ++w) {
        // Every eighth trial devotes its first witness to the degenerate
        // y = 0 case, as long as that leaves one real witness per trial.
        if (w == 0 && witnesses >= 2 && trial % 8 == 0) {
            ys.push_back(PVector::zero(p, x.dim()));
        } else {
            ys.push_back(orthogonal_witness(x, rng, size_bound));
        }
    }

    std::string desc = "seed=" + std::to_string(seed) + ";p=" + std::to_string(p.value()) +
                       ";dim=" + std::to_string(dim) + ";class=" + to_string(cls) +
                       ";trial=" + std::to_string(trial);
    return Instance{p,          dim,          cls, trial, std::move(a), std::move(b),
                    std::move(x), std::move(ys), std::move(desc)};
}

std::vector<CheckId> applicable_checks(OperatorClass cls, CampaignMode mode) {
    const bool selfadjoint = cls != OperatorClass::general;
    std::vector<CheckId> out;
    if (mode == CampaignMode::identity) {
        out.push_back(CheckId::ident_ii);
        if (selfadjoint) {
            out.push_back(CheckId::note_comm_zero);
            out.push_back(CheckId::note_anticomm_double);
        }
        return out;
    }
    out.push_back(CheckId::hrs_i);
    if (selfadjoint) {
        out.push_back(CheckId::hrs_ii);
    }
    out.push_back(CheckId::hrs_iii);
    out.push_back(CheckId::hrs_iv);
    out.push_back(CheckId::hrs_v);
    out.push_back(CheckId::hrs_vi);
    out.push_back(CheckId::ident_ii);
    if (selfadjoint) {
        out.push_back(CheckId::note_comm_zero);
        out.push_back(CheckId::note_anticomm_double);
    }
    out.push_back(CheckId::mp_plus);
    out.push_back(CheckId::mp_minus);
    return out;
}

namespace {

void apply_mutation(Verdict& v, CampaignMode mode) {
    const CheckId target = mode == CampaignMode::identity ? CheckId::ident_ii : CheckId::hrs_i;
    if (v.check == target) {
        v.holds = !(v.rhs <= v.lhs);
    }
}

} // namespace

std::vector<Verdict> evaluate_instance(const Instance& inst, CampaignMode mode, bool mutate) {
    std::vector<Verdict> out;
    for (const CheckId id : applicable_checks(inst.op_class, mode)) {
        switch (id) {
            case CheckId::hrs_i:
                out.push_back(check_hrs_i(inst.a, inst.b, inst.x, inst.seed_desc));
                break;
            case CheckId::hrs_ii:
                out.push_back(check_hrs_ii(inst.a, inst.b, inst.x, inst.seed_desc));
                break;
            case CheckId::hrs_iii:
                out.push_back(check_hrs_iii(inst.a, inst.b, inst.x, inst.seed_desc));
                break;
            case CheckId::hrs_iv:
                out.push_back(check_hrs_iv(inst.a, inst.b, inst.x, inst.seed_desc));
                break;
            case CheckId::hrs_v:
                out.push_back(check_hrs_v(inst.a, inst.b, inst.x, inst.seed_desc));
                break;
            case CheckId::hrs_vi:
                out.push_back(check_hrs_vi(inst.a, inst.b, inst.x, inst.seed_desc));
                break;
            case CheckId::ident_ii:
                out.push_back(check_identity_ii(inst.a, inst.b, inst.x, inst.seed_desc));
                break;
            case CheckId::note_comm_zero:
                out.push_back(check_notes(inst.a, inst.b, inst.x, inst.seed_desc).first);
                break;
            case CheckId::note_anticomm_double:
                out.push_back(check_notes(inst.a, inst.b, inst.x, inst.seed_desc).second);
                break;
            case CheckId::mp_plus:
            case CheckId::mp_minus:
                for (std::size_t w = 0; w < inst.witnesses.size(); ++w) {
                    out.push_back(check_mp(inst.a, inst.b, inst.x, inst.witnesses[w],
                                           id == CheckId::mp_plus ? MpSign::plus : MpSign::minus,
                                           inst.seed_desc + ";witness=" + std::to_string(w)));
                }
                break;
        }
    }
    if (mutate) {
        for (Verdict& v : out) {
            apply_mutation(v, mode);
        }
    }
    return out;
}

void CheckStats::absorb(const Verdict& v) {
    if (v.holds) {
        ++passed;
    } else {
        ++failed;
    }
    if (v.tight) {
        ++tight;
    }
    if (v.degenerate) {
        ++degenerate;
    }
}

void CheckStats::merge(const CheckStats& o) {
    passed += o.passed;
    failed += o.failed;
    tight += o.tight;
    degenerate += o.degenerate;
}

std::int64_t CampaignReport::total_failed() const {
    std::int64_t n = 0;
    for (const auto& [check, stats] : totals) {
        n += stats.failed;
    }
    return n;
}

namespace {

struct Cell {
    std::int64_t prime;
    std::uint32_t dim;
    OperatorClass op_class;
};

struct CellResult {
    std::map<CheckId, CheckStats> stats;
    std::vector<CapturedFailure> failures;
};

CellResult process_cell(const Cell& cell, const CampaignConfig& config, CampaignMode mode) {
    CellResult result;
    const Prime p(cell.prime);
    for (std::uint32_t trial = 0; trial < config.trials_per_cell; ++trial) {
        Instance inst = generate_instance(p, cell.dim, cell.op_class, trial, config.seed,
                                          config.size_bound, config.witnesses_per_instance);
        for (Verdict& v : evaluate_instance(inst, mode, config.mutate)) {
            result.stats[v.check].absorb(v);
            if (!v.holds) {
                result.failures.push_back(CapturedFailure{inst, std::move(v)});
            }
        }
    }
    return result;
}

unsigned thread_cap() {
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PADIC_UNCERTAINTY_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end && *end == '\0' && parsed >= 1) {
            cap = static_cast<unsigned>(parsed);
        }
    }
    return cap;
}

} // namespace

CampaignReport run_campaign(const CampaignConfig& config, CampaignMode mode) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<Cell> cells;
    for (const std::int64_t p : config.primes) {
        for (const std::uint32_t d : config.dims) {
            for (const OperatorClass cls : config.operator_classes) {
                cells.push_back(Cell{p, d, cls});
            }
        }
    }

    std::vector<CellResult> results(cells.size());
    const unsigned workers =
        std::min<unsigned>(thread_cap(), static_cast<unsigned>(cells.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            results[i] = process_cell(cells[i], config, mode);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < cells.size(); i += workers) {
                    results[i] = process_cell(cells[i], config, mode);
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    CampaignReport report;
    report.config = config;
    report.mode = mode;
    std::map<CheckId, CheckStats> totals;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (const CheckId id : canonical_check_order) {
            const auto it = results[i].stats.find(id);
            if (it == results[i].stats.end()) {
                continue;
            }
            totals[id].merge(it->second);
            report.cells.push_back(
                CellStats{id, cells[i].prime, cells[i].dim, cells[i].op_class, it->second});
        }
        for (CapturedFailure& f : results[i].failures) {
            report.failures.push_back(std::move(f));
        }
    }
    for (const CheckId id : canonical_check_order) {
        if (const auto it = totals.find(id); it != totals.end()) {
            report.totals.emplace_back(id, it->second);
        }
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace padic
