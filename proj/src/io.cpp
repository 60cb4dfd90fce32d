#include "trihull/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trihull::io {
namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& path, const std::string& key,
                          const std::string& why) {
    throw ParseError(path + ": key \"" + key + "\" " + why);
}

double number_at(const std::string& path, const json& j, const std::string& key) {
    if (!j.is_number()) bad_key(path, key, "must be a finite number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) bad_key(path, key, "must be a finite number");
    return x;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << content;
    if (!out) throw ParseError(path + ": write failed");
}

LoadedInstance read_instance(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": not valid JSON (" + e.what() + ")");
    }
    if (!j.is_object()) throw ParseError(path + ": top level must be an object");

    if (!j.contains("m")) bad_key(path, "m", "is required");
    if (!j["m"].is_number_unsigned() || j["m"].get<std::uint64_t>() == 0) {
        bad_key(path, "m", "must be a positive integer");
    }
    const std::size_t m = j["m"].get<std::size_t>();

    if (!j.contains("p")) bad_key(path, "p", "is required");
    if (!j["p"].is_array() || j["p"].size() != m) {
        bad_key(path, "p", "must be an array of m numbers");
    }
    std::vector<double> p(m);
    for (std::size_t i = 0; i < m; ++i) p[i] = number_at(path, j["p"][i], "p");

    if (!j.contains("S")) bad_key(path, "S", "is required");
    if (!j["S"].is_array() || j["S"].empty()) {
        bad_key(path, "S", "must be a non-empty array of arrays");
    }
    const std::size_t n = j["S"].size();
    std::vector<double> flat;
    flat.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = j["S"][i];
        if (!row.is_array() || row.size() != m) {
            bad_key(path, "S", "row " + std::to_string(i) + " must have m numbers");
        }
        for (std::size_t k = 0; k < m; ++k) flat.push_back(number_at(path, row[k], "S"));
    }

    LoadedInstance out{PointSet(n, m, std::move(flat)), Point(std::move(p)), {}, {}, {}, {}};

    if (j.contains("truth")) {
        if (!j["truth"].is_string()) bad_key(path, "truth", "must be a string");
        const auto t = truth_from_string(j["truth"].get<std::string>());
        if (!t) bad_key(path, "truth", "must be one of member_interior, member_boundary_near, nonmember");
        out.truth = t;
    }
    if (j.contains("margin")) out.margin = number_at(path, j["margin"], "margin");
    if (j.contains("rho")) out.rho = number_at(path, j["rho"], "rho");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) bad_key(path, "seed", "must be a non-negative integer");
        out.seed = j["seed"].get<std::uint64_t>();
    }
    return out;
}

namespace {

// Writer is hand-rolled: fixed key order and format_double coordinates keep
// output bytes identical for identical data on every platform.
void append_point(std::string& s, std::span<const double> p) {
    s += '[';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += format_double(p[i]);
    }
    s += ']';
}

std::string instance_json(const PointSet& S, const Point& p, std::optional<Truth> truth,
                          std::optional<double> margin, std::optional<double> rho,
                          std::optional<std::uint64_t> seed) {
    std::string s = "{\n";
    s += "  \"m\": " + std::to_string(S.dim()) + ",\n";
    s += "  \"p\": ";
    append_point(s, p.span());
    s += ",\n  \"S\": [\n";
    for (std::size_t i = 0; i < S.size(); ++i) {
        s += "    ";
        append_point(s, S.row(i));
        s += (i + 1 < S.size()) ? ",\n" : "\n";
    }
    s += "  ]";
    if (truth) s += std::string(",\n  \"truth\": \"") + to_string(*truth) + "\"";
    if (margin) s += ",\n  \"margin\": " + format_double(*margin);
    if (rho) s += ",\n  \"rho\": " + format_double(*rho);
    if (seed) s += ",\n  \"seed\": " + std::to_string(*seed);
    s += "\n}\n";
    return s;
}

}  // namespace

void write_instance(const std::string& path, const Instance& inst) {
    write_file(path, instance_json(inst.S, inst.p, inst.truth, inst.known_margin, inst.known_rho,
                                   inst.seed));
}

void write_instance(const std::string& path, const LoadedInstance& inst) {
    write_file(path, instance_json(inst.S, inst.p, inst.truth, inst.margin, inst.rho, inst.seed));
}

void write_cloud_csv(const std::string& path, const ChaosCloud& cloud) {
    std::string s;
    const std::size_t m = cloud.dim();
    for (std::size_t t = static_cast<std::size_t>(cloud.burn_in); t < cloud.steps; ++t) {
        const auto dot = cloud.dot(t);
        for (std::size_t j = 0; j < m; ++j) {
            if (j) s += ',';
            s += format_double(dot[j]);
        }
        s += '\n';
    }
    write_file(path, s);
}

void write_certificate(const std::string& path, const RunOutcome& outcome,
                       const SolverConfig& cfg, double radius) {
    std::string s = "{\n";
    s += std::string("  \"status\": \"") + to_string(outcome.status) + "\",\n";
    s += std::string("  \"variant\": \"") + to_string(cfg.variant) + "\",\n";
    s += std::string("  \"pivot_strategy\": \"") + to_string(cfg.pivot_strategy) + "\",\n";
    s += "  \"epsilon\": " + format_double(cfg.epsilon) + ",\n";
    s += "  \"seed\": " + std::to_string(cfg.seed) + ",\n";
    s += "  \"R\": " + format_double(radius) + ",\n";
    s += "  \"iterations\": " + std::to_string(outcome.iterations) + ",\n";
    s += "  \"pivot_scans\": " + std::to_string(outcome.pivot_scans) + ",\n";
    s += "  \"final_distance\": " + format_double(outcome.final_distance) + ",\n";
    s += "  \"point\": ";
    append_point(s, outcome.final.point.span());
    s += ",\n  \"coeffs\": ";
    append_point(s, {outcome.final.coeffs.data(), outcome.final.coeffs.size()});
    if (outcome.gap_bounds) {
        s += ",\n  \"distance_lower\": " + format_double(outcome.gap_bounds->lower);
        s += ",\n  \"distance_upper\": " + format_double(outcome.gap_bounds->upper);
    }
    if (outcome.trace) {
        s += ",\n  \"trace\": [\n";
        for (std::size_t i = 0; i < outcome.trace->size(); ++i) {
            const TraceRecord& r = (*outcome.trace)[i];
            const char* action = r.action == StepAction::Nearest ? "nearest"
                                 : r.action == StepAction::Midpoint ? "midpoint"
                                                                    : "jump_nearest";
            s += std::string("    {\"action\": \"") + action +
                 "\", \"chosen\": " + std::to_string(r.chosen) +
                 ", \"alpha\": " + format_double(r.alpha) +
                 ", \"dist\": " + format_double(r.dist) +
                 ", \"dist_incumbent\": " + format_double(r.dist_incumbent) +
                 ", \"nonstrict_fallback\": " + (r.nonstrict_fallback ? "true" : "false") + "}";
            s += (i + 1 < outcome.trace->size()) ? ",\n" : "\n";
        }
        s += "  ]";
    }
    s += "\n}\n";
    write_file(path, s);
}

}  // namespace trihull::io
