#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "trihull/chaos.hpp"
#include "trihull/instances.hpp"
#include "trihull/solver.hpp"

namespace trihull::io {

// Raised on malformed input files; the message names the offending key.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Shortest round-trip-safe decimal rendering (17 significant digits).
std::string format_double(double x);

// Instance file: a single JSON object with keys
//   m      dimension
//   p      array of m numbers
//   S      array of arrays of m numbers
//   truth  optional: "member_interior" | "member_boundary_near" | "nonmember"
//   margin optional number
//   rho    optional number
//   seed   optional integer
// Writing emits keys in exactly that order with format_double coordinates,
// so identical data produces identical bytes.
struct LoadedInstance {
    PointSet S;
    Point p;
    std::optional<Truth> truth;
    std::optional<double> margin;
    std::optional<double> rho;
    std::optional<std::uint64_t> seed;
};

LoadedInstance read_instance(const std::string& path);
void write_instance(const std::string& path, const Instance& inst);
void write_instance(const std::string& path, const LoadedInstance& inst);

// Marked dots only, one dot per row, coordinates comma-separated, no header.
void write_cloud_csv(const std::string& path, const ChaosCloud& cloud);

// Solve certificate: status, the certifying point and coefficients, and the
// quantities needed to recheck the claim without rerunning.
void write_certificate(const std::string& path, const RunOutcome& outcome,
                       const SolverConfig& cfg, double radius);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace trihull::io
