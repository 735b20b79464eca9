#include "padic/serialization.hpp"

#include <iomanip>
#include <set>
#include <sstream>

#include "padic/errors.hpp"

namespace padic {

namespace {

// Parser bounds. Exact arithmetic makes absurd inputs expensive rather
// than wrong (an index of 10^9 under a pow_p rule asks for p^(2*10^9)),
// so documents are capped well above anything the samplers produce.
constexpr std::int64_t max_coordinate_index = 1'000'000;
constexpr std::size_t max_dense_dim = 256;

const json& require_field(const json& j, const char* key, const char* context) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw parse_error(std::string(context) + ": missing field '" + key + "'");
    }
    return *it;
}

std::int64_t require_int(const json& j, const char* key, const char* context) {
    const json& f = require_field(j, key, context);
    if (!f.is_number_integer()) {
        throw parse_error(std::string(context) + ": field '" + key + "' must be an integer");
    }
    return f.get<std::int64_t>();
}

std::string require_string(const json& j, const char* key, const char* context) {
    const json& f = require_field(j, key, context);
    if (!f.is_string()) {
        throw parse_error(std::string(context) + ": field '" + key + "' must be a string");
    }
    return f.get<std::string>();
}

std::string rule_to_string(std::int64_t slope) {
    if (slope == 1) return "pow_p:n";
    if (slope == -1) return "pow_p:-n";
    return "pow_p:" + std::to_string(slope) + "n";
}

std::int64_t rule_from_string(const std::string& rule) {
    const std::string prefix = "pow_p:";
    if (rule.rfind(prefix, 0) != 0 || rule.empty() || rule.back() != 'n') {
        throw parse_error("unknown diagonal rule '" + rule + "'");
    }
    const std::string body = rule.substr(prefix.size(), rule.size() - prefix.size() - 1);
    if (body.empty()) return 1;
    if (body == "-") return -1;
    try {
        std::size_t used = 0;
        const long slope = std::stol(body, &used);
        if (used != body.size()) {
            throw std::invalid_argument(body);
        }
        return slope;
    } catch (const std::exception&) {
        throw parse_error("unknown diagonal rule '" + rule + "'");
    }
}

} // namespace

json exponent_to_json(const Exponent& e) {
    json j;
    if (e.is_finite()) {
        j["tag"] = "finite";
        j["twice"] = e.twice();
    } else {
        j["tag"] = "neginf";
    }
    return j;
}

Exponent exponent_from_json(const json& j) {
    const std::string tag = require_string(j, "tag", "exponent");
    if (tag == "neginf") {
        return Exponent::neg_infinity();
    }
    if (tag == "finite") {
        return Exponent::from_twice(require_int(j, "twice", "exponent"));
    }
    throw parse_error("exponent: unknown tag '" + tag + "'");
}

json vector_to_json(const PVector& v) {
    json j;
    j["p"] = v.prime().value();
    if (v.dim()) {
        j["dim"] = *v.dim();
    } else {
        j["dim"] = "c0";
    }
    json coords = json::array();
    for (const auto& [i, value] : v.coords()) {
        coords.push_back(json::array({i, value.to_string()}));
    }
    j["coords"] = std::move(coords);
    return j;
}

PVector vector_from_json(const json& j) {
    const Prime p(require_int(j, "p", "vector"));
    std::optional<std::uint32_t> dim;
    const json& dim_field = require_field(j, "dim", "vector");
    if (dim_field.is_string()) {
        if (dim_field.get<std::string>() != "c0") {
            throw parse_error("vector: field 'dim' must be a positive integer or \"c0\"");
        }
    } else if (dim_field.is_number_integer() && dim_field.get<std::int64_t>() > 0 &&
               dim_field.get<std::int64_t>() <= max_coordinate_index) {
        dim = static_cast<std::uint32_t>(dim_field.get<std::int64_t>());
    } else {
        throw parse_error("vector: field 'dim' must be a positive integer or \"c0\"");
    }
    const json& coords_field = require_field(j, "coords", "vector");
    if (!coords_field.is_array()) {
        throw parse_error("vector: field 'coords' must be an array");
    }
    std::vector<PVector::Coord> coords;
    for (const json& entry : coords_field) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            entry[0].get<std::int64_t>() < 0 ||
            entry[0].get<std::int64_t>() > max_coordinate_index || !entry[1].is_string()) {
            throw parse_error("vector: coordinates must be [index, \"value\"] pairs with "
                              "index <= 1000000");
        }
        coords.emplace_back(static_cast<std::uint32_t>(entry[0].get<std::int64_t>()),
                            Rational::from_string(entry[1].get<std::string>()));
    }
    try {
        return PVector(p, dim, std::move(coords));
    } catch (const error& e) {
        throw parse_error(std::string("vector: ") + e.what());
    }
}

json operator_to_json(const POperator& op) {
    json j;
    j["p"] = op.prime().value();
    if (op.is_dense()) {
        j["kind"] = "dense";
        const auto& m = op.as_dense();
        json rows = json::array();
        for (std::uint32_t i = 0; i < m.d; ++i) {
            json row = json::array();
            for (std::uint32_t k = 0; k < m.d; ++k) {
                row.push_back(m.at(i, k).to_string());
            }
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        return j;
    }
    j["kind"] = "diagonal";
    const auto& d = op.as_diagonal();
    json entries = json::object();
    for (const auto& [n, v] : d.entries) {
        entries[std::to_string(n)] = v.to_string();
    }
    j["entries"] = std::move(entries);
    if (!d.rule_coeff.is_zero()) {
        j["rule"] = rule_to_string(d.rule_slope);
        if (!(d.rule_coeff == Rational(1))) {
            j["rule_coeff"] = d.rule_coeff.to_string();
        }
    }
    return j;
}

POperator operator_from_json(const json& j, std::optional<Prime> fallback_p) {
    std::optional<Prime> p = fallback_p;
    if (j.contains("p")) {
        p = Prime(require_int(j, "p", "operator"));
    }
    if (!p) {
        throw parse_error("operator: missing field 'p'");
    }
    const std::string kind = require_string(j, "kind", "operator");
    if (kind == "dense") {
        const json& rows = require_field(j, "rows", "operator");
        if (!rows.is_array() || rows.empty() || rows.size() > max_dense_dim) {
            throw parse_error("operator: field 'rows' must be a non-empty array of at most " +
                              std::to_string(max_dense_dim) + " rows");
        }
        const auto d = static_cast<std::uint32_t>(rows.size());
        std::vector<Rational> entries;
        entries.reserve(static_cast<std::size_t>(d) * d);
        for (const json& row : rows) {
            if (!row.is_array() || row.size() != d) {
                throw parse_error("operator: 'rows' must form a square matrix");
            }
            for (const json& cell : row) {
                if (!cell.is_string()) {
                    throw parse_error("operator: matrix entries must be rational strings");
                }
                entries.push_back(Rational::from_string(cell.get<std::string>()));
            }
        }
        return POperator::dense(*p, d, std::move(entries));
    }
    if (kind == "diagonal") {
        const json& entries_field = require_field(j, "entries", "operator");
        if (!entries_field.is_object()) {
            throw parse_error("operator: field 'entries' must be an object");
        }
        std::map<std::uint32_t, Rational> entries;
        for (const auto& [key, value] : entries_field.items()) {
            if (!value.is_string()) {
                throw parse_error("operator: diagonal entries must be rational strings");
            }
            std::size_t used = 0;
            unsigned long index = 0;
            try {
                index = std::stoul(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() ||
                index > static_cast<unsigned long>(max_coordinate_index)) {
                throw parse_error("operator: diagonal index '" + key +
                                  "' is not an integer <= 1000000");
            }
            entries.emplace(static_cast<std::uint32_t>(index),
                            Rational::from_string(value.get<std::string>()));
        }
        Rational coeff(0);
        std::int64_t slope = 0;
        if (j.contains("rule")) {
            slope = rule_from_string(require_string(j, "rule", "operator"));
            coeff = Rational(1);
            if (j.contains("rule_coeff")) {
                coeff = Rational::from_string(require_string(j, "rule_coeff", "operator"));
            }
        }
        return POperator::diagonal(*p, std::move(entries), std::move(coeff), slope);
    }
    throw parse_error("operator: unknown kind '" + kind + "'");
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["check"] = to_string(v.check);
    j["holds"] = v.holds;
    j["tight"] = v.tight;
    j["degenerate"] = v.degenerate;
    j["lhs"] = exponent_to_json(v.lhs);
    j["rhs"] = exponent_to_json(v.rhs);
    j["seed"] = v.seed;
    return j;
}

json instance_to_json(const Instance& inst) {
    json j;
    j["p"] = inst.p.value();
    j["dim"] = inst.dim;
    j["class"] = to_string(inst.op_class);
    j["trial"] = inst.trial;
    j["seed"] = inst.seed_desc;
    j["x"] = vector_to_json(inst.x);
    j["A"] = operator_to_json(inst.a);
    j["B"] = operator_to_json(inst.b);
    json ys = json::array();
    for (const PVector& y : inst.witnesses) {
        ys.push_back(vector_to_json(y));
    }
    j["y"] = std::move(ys);
    return j;
}

EvalInstance eval_instance_from_json(const json& j) {
    if (!j.is_object()) {
        throw parse_error("instance: top level must be an object");
    }
    const Prime p(require_int(j, "p", "instance"));
    PVector x = vector_from_json(require_field(j, "x", "instance"));
    if (x.prime() != p) {
        throw parse_error("instance: 'x' disagrees with field 'p'");
    }
    POperator a = operator_from_json(require_field(j, "A", "instance"), p);
    POperator b = operator_from_json(require_field(j, "B", "instance"), p);
    if (a.prime() != p || b.prime() != p) {
        throw parse_error("instance: operator disagrees with field 'p'");
    }
    std::vector<PVector> ys;
    if (j.contains("y")) {
        const json& list = j.at("y");
        if (!list.is_array()) {
            throw parse_error("instance: field 'y' must be an array of vectors");
        }
        for (const json& yj : list) {
            PVector y = vector_from_json(yj);
            if (y.prime() != p) {
                throw parse_error("instance: witness disagrees with field 'p'");
            }
            ys.push_back(std::move(y));
        }
    }
    return EvalInstance{p, std::move(x), std::move(a), std::move(b), std::move(ys)};
}

json config_to_json(const CampaignConfig& config) {
    json j;
    j["primes"] = config.primes;
    j["dims"] = config.dims;
    j["trials_per_cell"] = config.trials_per_cell;
    j["size_bound"] = config.size_bound;
    json classes = json::array();
    for (const OperatorClass cls : config.operator_classes) {
        classes.push_back(to_string(cls));
    }
    j["operator_classes"] = std::move(classes);
    j["witnesses_per_instance"] = config.witnesses_per_instance;
    j["seed"] = config.seed;
    j["mutate"] = config.mutate;
    return j;
}

CampaignConfig config_from_json(const json& j) {
    if (!j.is_object()) {
        throw parse_error("config: top level must be an object");
    }
    static const std::set<std::string> known_fields = {
        "primes", "dims",  "trials_per_cell",        "size_bound",
        "operator_classes", "witnesses_per_instance", "seed",
        "mutate"};
    for (const auto& [key, value] : j.items()) {
        if (!known_fields.contains(key)) {
            throw parse_error("config: unknown field '" + key + "'");
        }
    }
    CampaignConfig config;
    if (j.contains("primes")) {
        const json& f = j.at("primes");
        if (!f.is_array()) {
            throw parse_error("config: field 'primes' must be an array of integers");
        }
        config.primes.clear();
        for (const json& v : f) {
            if (!v.is_number_integer()) {
                throw parse_error("config: field 'primes' must be an array of integers");
            }
            config.primes.push_back(v.get<std::int64_t>());
        }
    }
    if (j.contains("dims")) {
        const json& f = j.at("dims");
        if (!f.is_array()) {
            throw parse_error("config: field 'dims' must be an array of integers");
        }
        config.dims.clear();
        for (const json& v : f) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
                throw parse_error("config: field 'dims' must be an array of positive integers");
            }
            config.dims.push_back(static_cast<std::uint32_t>(v.get<std::int64_t>()));
        }
    }
    if (j.contains("trials_per_cell")) {
        config.trials_per_cell =
            static_cast<std::uint32_t>(require_int(j, "trials_per_cell", "config"));
    }
    if (j.contains("size_bound")) {
        config.size_bound = static_cast<int>(require_int(j, "size_bound", "config"));
    }
    if (j.contains("operator_classes")) {
        const json& f = j.at("operator_classes");
        if (!f.is_array()) {
            throw parse_error("config: field 'operator_classes' must be an array of strings");
        }
        config.operator_classes.clear();
        for (const json& v : f) {
            if (!v.is_string()) {
                throw parse_error("config: field 'operator_classes' must be an array of strings");
            }
            config.operator_classes.push_back(operator_class_from_string(v.get<std::string>()));
        }
    }
    if (j.contains("witnesses_per_instance")) {
        config.witnesses_per_instance =
            static_cast<std::uint32_t>(require_int(j, "witnesses_per_instance", "config"));
    }
    if (j.contains("seed")) {
        const json& f = j.at("seed");
        if (!f.is_number_integer() && !f.is_number_unsigned()) {
            throw parse_error("config: field 'seed' must be an integer");
        }
        config.seed = f.get<std::uint64_t>();
    }
    if (j.contains("mutate")) {
        const json& f = j.at("mutate");
        if (!f.is_boolean()) {
            throw parse_error("config: field 'mutate' must be a boolean");
        }
        config.mutate = f.get<bool>();
    }
    return config;
}

json report_to_json(const CampaignReport& report) {
    json j;
    j["mode"] = report.mode == CampaignMode::identity ? "identity" : "verify";
    j["config"] = config_to_json(report.config);
    json totals = json::object();
    for (const auto& [check, stats] : report.totals) {
        json s;
        s["passed"] = stats.passed;
        s["failed"] = stats.failed;
        s["tight"] = stats.tight;
        s["degenerate"] = stats.degenerate;
        totals[to_string(check)] = std::move(s);
    }
    j["totals"] = std::move(totals);
    json cells = json::array();
    for (const CellStats& cell : report.cells) {
        json c;
        c["check"] = to_string(cell.check);
        c["prime"] = cell.prime;
        c["dim"] = cell.dim;
        c["class"] = to_string(cell.op_class);
        c["passed"] = cell.stats.passed;
        c["failed"] = cell.stats.failed;
        c["tight"] = cell.stats.tight;
        c["degenerate"] = cell.stats.degenerate;
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    json failures = json::array();
    for (const CapturedFailure& f : report.failures) {
        json entry;
        entry["check"] = to_string(f.verdict.check);
        entry["seed"] = f.verdict.seed;
        entry["verdict"] = verdict_to_json(f.verdict);
        entry["instance"] = instance_to_json(f.instance);
        failures.push_back(std::move(entry));
    }
    j["failures"] = std::move(failures);
    j["wall_time"] = report.wall_time_seconds;
    return j;
}

ReportFormat report_format_from_string(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw parse_error("unknown report format '" + name + "'");
}

namespace {

std::string emit_csv(const CampaignReport& report) {
    std::ostringstream out;
    out << "check,prime,dim,class,passed,failed,tight,degenerate\n";
    for (const CellStats& cell : report.cells) {
        out << to_string(cell.check) << ',' << cell.prime << ',' << cell.dim << ','
            << to_string(cell.op_class) << ',' << cell.stats.passed << ',' << cell.stats.failed
            << ',' << cell.stats.tight << ',' << cell.stats.degenerate << '\n';
    }
    return out.str();
}

std::string emit_text(const CampaignReport& report) {
    std::ostringstream out;
    out << "mode: " << (report.mode == CampaignMode::identity ? "identity" : "verify") << '\n';
    out << "primes:";
    for (const auto p : report.config.primes) {
        out << ' ' << p;
    }
    out << "  dims:";
    for (const auto d : report.config.dims) {
        out << ' ' << d;
    }
    out << "  classes:";
    for (const OperatorClass cls : report.config.operator_classes) {
        out << ' ' << to_string(cls);
    }
    out << '\n';
    out << "trials/cell: " << report.config.trials_per_cell
        << "  witnesses: " << report.config.witnesses_per_instance
        << "  size_bound: " << report.config.size_bound << "  seed: " << report.config.seed;
    if (report.config.mutate) {
        out << "  mutate: on";
    }
    out << "\n\n";
    out << std::left << std::setw(22) << "check" << std::right << std::setw(10) << "passed"
        << std::setw(10) << "failed" << std::setw(10) << "tight" << std::setw(12) << "degenerate"
        << '\n';
    for (const auto& [check, stats] : report.totals) {
        out << std::left << std::setw(22) << to_string(check) << std::right << std::setw(10)
            << stats.passed << std::setw(10) << stats.failed << std::setw(10) << stats.tight
            << std::setw(12) << stats.degenerate << '\n';
    }
    out << '\n';
    out << "failures: " << report.failures.size() << '\n';
    out << "wall_time: " << report.wall_time_seconds << "s\n";
    return out.str();
}

} // namespace

std::string emit_report(const CampaignReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: return report_to_json(report).dump(2) + "\n";
        case ReportFormat::csv: return emit_csv(report);
        case ReportFormat::text: return emit_text(report);
    }
    throw error("unknown report format");
}

} // namespace padic
