#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "grac/big_int.hpp"
#include "grac/probe.hpp"
#include "grac/report.hpp"
#include "grac/slp.hpp"

namespace grac::bench {

enum class Family { sd, blsd, rc, bwt_hard };

Family parse_family(std::string_view name);  // UnknownFamily otherwise
std::string_view to_string(Family f) noexcept;

/// Positions are enumerated exhaustively up to this length, sampled above it.
inline constexpr std::size_t kExhaustiveLimit = std::size_t{1} << 16;
inline constexpr std::size_t kSampledPositions = 1024;

struct FamilyInstance {
  std::string params;
  slp::Slp grammar;
};

/// Instance k of a family, with Y (or points) drawn from `rng`:
///   sd: m = k;  blsd: B = N = k;  bwt-hard: B = N = k (grammar of s'_Y);
///   rc: W = 2^k, H = max(1,k), W random points.
FamilyInstance make_instance(Family f, std::size_t k, std::mt19937_64& rng);

struct BenchConfig {
  Family family = Family::sd;
  std::size_t first = 1;
  std::size_t last = 0;                 // inclusive; last < first is an empty sweep
  std::vector<unsigned> word_bits;      // empty: ceil(log2 L) per instance
  std::uint64_t seed = 1;
  std::vector<probe::Structure> structures{probe::Structure::read_all, probe::Structure::descent,
                                           probe::Structure::hybrid};
};

struct BenchRow {
  std::string family;
  std::string params;
  std::size_t n = 0;
  BigInt text_length = 0;
  unsigned w = 0;
  probe::Structure structure = probe::Structure::hybrid;
  std::size_t worst_probes = 0;
  double mean_probes = 0;
  std::size_t measured_max = 0;  // largest count seen over the evaluated positions
};

std::vector<BenchRow> bench_sweep(const BenchConfig& cfg);

/// family,params,n,L,w,structure,worst_probes,mean_probes
Report to_report(const std::vector<BenchRow>& rows);

/// Parses "a..b" or a single "a".
std::pair<std::size_t, std::size_t> parse_range(std::string_view text);

}  // namespace grac::bench
