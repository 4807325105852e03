#include "grac/bench.hpp"

#include <cmath>

#include "grac/bwt.hpp"
#include "grac/error.hpp"
#include "grac/hard_instances.hpp"
#include "grac/range_grid.hpp"

namespace grac::bench {

Family parse_family(std::string_view name) {
  if (name == "sd") return Family::sd;
  if (name == "blsd") return Family::blsd;
  if (name == "rc") return Family::rc;
  if (name == "bwt-hard") return Family::bwt_hard;
  throw Error(Errc::unknown_family, "unknown family '" + std::string(name) + "' (sd, blsd, rc, bwt-hard)");
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::sd: return "sd";
    case Family::blsd: return "blsd";
    case Family::rc: return "rc";
    case Family::bwt_hard: return "bwt-hard";
  }
  return "?";
}

namespace {

hard::ElementSet random_subset(std::size_t universe, std::mt19937_64& rng) {
  hard::ElementSet y;
  for (std::size_t e = 1; e <= universe; ++e)
    if (rng() & 1) y.push_back(e);
  return y;
}

BigInt random_below(const BigInt& bound, std::mt19937_64& rng) {
  BigInt v = 0;
  std::size_t words = boost::multiprecision::msb(bound) / 64 + 2;
  for (std::size_t k = 0; k < words; ++k) v = (v << 64) | BigInt(rng());
  return v % bound;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t k) { return seed ^ (0x9E3779B97F4A7C15ull * (k + 1)); }

}  // namespace

FamilyInstance make_instance(Family f, std::size_t k, std::mt19937_64& rng) {
  if (k == 0) throw Error(Errc::invalid_argument, "family parameter must be positive");
  switch (f) {
    case Family::sd: {
      hard::SetInstance inst{k, random_subset(k, rng)};
      return {"m=" + std::to_string(k), hard::build_sd_grammar(inst)};
    }
    case Family::blsd: {
      hard::BlockedInstance inst{k, k, random_subset(k * k, rng)};
      return {"B=" + std::to_string(k) + ";N=" + std::to_string(k), hard::build_blsd_grammar(inst)};
    }
    case Family::bwt_hard: {
      hard::BlockedInstance inst{k, k, random_subset(k * k, rng)};
      return {"B=" + std::to_string(k) + ";N=" + std::to_string(k), bwt::build_bwt_hard_grammar(inst)};
    }
    case Family::rc: {
      if (k > 20) throw Error(Errc::invalid_argument, "rc family parameter above 20");
      grid::PointSet ps;
      ps.width = std::size_t{1} << k;
      ps.height = std::max<std::size_t>(1, k);
      for (std::size_t p = 0; p < ps.width; ++p) ps.points.push_back({1 + rng() % ps.width, 1 + rng() % ps.height});
      return {"W=" + std::to_string(ps.width) + ";H=" + std::to_string(ps.height) + ";P=" + std::to_string(ps.points.size()),
              grid::compile_answer_grammar(ps).grammar};
    }
  }
  throw Error(Errc::unknown_family, "unknown family");
}

std::vector<BenchRow> bench_sweep(const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (std::size_t k = cfg.first; k <= cfg.last && cfg.first <= cfg.last; ++k) {
    std::mt19937_64 rng(instance_seed(cfg.seed, k));
    FamilyInstance inst = make_instance(cfg.family, k, rng);
    const auto len = slp::lengths(inst.grammar);
    const BigInt& L = len.back();

    std::vector<BigInt> positions;
    if (L <= kExhaustiveLimit) {
      for (std::size_t i = 0; i < static_cast<std::size_t>(L); ++i) positions.emplace_back(i);
    } else {
      for (std::size_t s = 0; s < kSampledPositions; ++s) positions.push_back(random_below(L, rng));
    }

    std::vector<unsigned> widths = cfg.word_bits;
    if (widths.empty()) widths.push_back(probe::default_word_bits(L));

    for (unsigned w : widths) {
      probe::HybridStore store(inst.grammar, w);
      for (probe::Structure st : cfg.structures) {
        BenchRow row;
        row.family = std::string(to_string(cfg.family));
        row.params = inst.params;
        row.n = inst.grammar.size();
        row.text_length = L;
        row.w = w;
        row.structure = st;
        switch (st) {
          case probe::Structure::read_all: row.worst_probes = store.read_all_worst(); break;
          case probe::Structure::descent: row.worst_probes = store.descent_worst(); break;
          case probe::Structure::hybrid: row.worst_probes = store.worst(); break;
        }
        double total = 0;
        for (const BigInt& i : positions) {
          std::size_t p = 0;
          switch (st) {
            case probe::Structure::read_all: p = probe::probe_read_all(store.packed(), i).probes; break;
            case probe::Structure::descent: p = probe::probe_descent(store.descent(), i).probes; break;
            case probe::Structure::hybrid: p = store.access(i).probes; break;
          }
          total += static_cast<double>(p);
          row.measured_max = std::max(row.measured_max, p);
        }
        row.mean_probes = std::round(total / static_cast<double>(positions.size()) * 1e4) / 1e4;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

Report to_report(const std::vector<BenchRow>& rows) {
  Report r;
  r.columns = {"family", "params", "n", "L", "w", "structure", "worst_probes", "mean_probes"};
  for (const BenchRow& row : rows) {
    r.add_row({row.family, row.params, row.n, row.text_length.str(), row.w, std::string(probe::to_string(row.structure)),
               row.worst_probes, row.mean_probes});
  }
  return r;
}

std::pair<std::size_t, std::size_t> parse_range(std::string_view text) {
  auto to_size = [&](std::string_view part) {
    BigInt v = parse_decimal(std::string(part));
    if (v > BigInt(1'000'000)) throw Error(Errc::invalid_argument, "range bound too large");
    return static_cast<std::size_t>(v);
  };
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    std::size_t v = to_size(text);
    return {v, v};
  }
  return {to_size(text.substr(0, dots)), to_size(text.substr(dots + 2))};
}

}  // namespace grac::bench
