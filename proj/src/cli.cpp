#include "grac/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "grac/bench.hpp"
#include "grac/butterfly.hpp"
#include "grac/bwt.hpp"
#include "grac/error.hpp"
#include "grac/hard_instances.hpp"
#include "grac/lz.hpp"
#include "grac/range_grid.hpp"
#include "grac/slp.hpp"
#include "json.hpp"

namespace grac::cli {

namespace {

/// Failure of an oracle check requested by the user; exits 1.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;

  std::string read_all(const std::string& path) const {
    if (path == "-") {
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(Errc::io_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  void write(const std::string& path, const std::string& text) const {
    if (path == "-") {
      out << text;
      if (!out) throw Error(Errc::io_error, "failed to write output");
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw Error(Errc::io_error, "cannot write '" + path + "'");
  }
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

hard::ElementSet random_subset(std::size_t universe, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  hard::ElementSet y;
  for (std::size_t e = 1; e <= universe; ++e)
    if (rng() & 1) y.push_back(e);
  return y;
}

struct InstanceFlags {
  std::size_t m = 0, B = 0, N = 0;
  std::string y_text;
  bool random_y = false;
  std::uint64_t seed = 1;
};

void add_y_flags(CLI::App* cmd, InstanceFlags& f) {
  cmd->add_option("--Y", f.y_text, "comma-separated one-based elements of Y, e.g. 1,3,5,9");
  cmd->add_flag("--random-y", f.random_y, "draw Y uniformly at random from --seed");
  cmd->add_option("--seed", f.seed, "seed for --random-y")->default_val(1);
}

hard::ElementSet resolve_y(const InstanceFlags& f, std::size_t universe) {
  if (f.random_y) {
    if (!f.y_text.empty()) throw Error(Errc::invalid_argument, "--Y and --random-y are exclusive");
    return random_subset(universe, f.seed);
  }
  return hard::parse_set(f.y_text);
}

hard::SetInstance sd_instance(const InstanceFlags& f) {
  hard::SetInstance inst{f.m, resolve_y(f, f.m)};
  hard::check_instance(inst);
  return inst;
}

hard::BlockedInstance blocked_instance(const InstanceFlags& f) {
  hard::BlockedInstance inst{f.B, f.N, {}};
  if (f.B == 0 || f.N == 0) throw Error(Errc::invalid_argument, "--B and --N must be positive");
  inst.y = resolve_y(f, f.B * f.N);
  hard::check_instance(inst);
  return inst;
}

std::vector<bool> blocked_truth(const hard::BlockedInstance& inst, const std::vector<hard::ElementSet>& sets) {
  std::vector<bool> t;
  for (const auto& x : sets) t.push_back(hard::disjoint(x, inst.y));
  return t;
}

// --- verify ----------------------------------------------------------------

struct VerifyResult {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      notes.push_back("FAIL " + what);
    }
  }
};

VerifyResult verify_sd(const hard::SetInstance& inst) {
  if (inst.m > 22) throw Error(Errc::invalid_argument, "exhaustive sd verification limited to m <= 22");
  VerifyResult r;
  slp::Slp g = hard::build_sd_grammar(inst);
  auto len = slp::lengths(g);
  r.expect(g.size() == 2 * inst.m + 1, "rule count 2m+1");
  r.expect(len.back() == pow_big(2, inst.m), "L = 2^m");
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << inst.m); ++idx) {
    hard::ElementSet x = hard::set_from_index(idx, inst.m);
    r.expect(slp::access(g, len, hard::set_index(x, inst.m)) == hard::disjoint(x, inst.y),
             "set {" + hard::format_set(x) + "}");
  }
  return r;
}

VerifyResult verify_blsd(const hard::BlockedInstance& inst) {
  if (pow_big(inst.block_size, inst.block_count) > (1u << 22))
    throw Error(Errc::invalid_argument, "exhaustive blsd verification limited to B^N <= 2^22");
  VerifyResult r;
  slp::Slp g = hard::build_blsd_grammar(inst);
  auto len = slp::lengths(g);
  r.expect(g.size() <= 2 * inst.universe() + 1, "rule count <= 2BN+1");
  r.expect(len.back() == pow_big(inst.block_size, inst.block_count), "L = B^N");
  auto sets = hard::all_blocked_sets(inst.block_size, inst.block_count);
  auto truth = blocked_truth(inst, sets);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    BigInt idx = hard::blocked_index(sets[s], inst.block_size, inst.block_count);
    r.expect(slp::access(g, len, idx) == truth[s], "blocked set {" + hard::format_set(sets[s]) + "}");
  }
  return r;
}

VerifyResult verify_bwt_hard(const hard::BlockedInstance& inst) {
  VerifyResult r;
  BitString s = bwt::build_bwt_hard(inst);
  r.expect(BigInt(s.size()) == pow_big(4 * inst.block_size, inst.block_count), "|s'| = (4B)^N");
  auto sets = hard::all_blocked_sets(inst.block_size, inst.block_count);
  for (const auto& x : sets) {
    auto pos = static_cast<std::size_t>(bwt::sigma(x, inst.block_size, inst.block_count));
    r.expect(s[pos] == hard::disjoint(x, inst.y), "sigma of {" + hard::format_set(x) + "}");
  }
  std::size_t rn = bwt::runs(bwt::bwt(s));
  r.expect(rn <= 512 * inst.universe(), "runs(bwt(s')) = " + std::to_string(rn) + " <= 512BN");
  r.expect(slp::expand(bwt::build_bwt_hard_grammar(inst)) == s, "grammar derives s'");
  r.notes.push_back("runs(bwt(s')) = " + std::to_string(rn));
  return r;
}

VerifyResult verify_rc(const grid::PointSet& ps) {
  VerifyResult r;
  auto compiled = grid::compile_answer_grammar(ps);
  r.expect(slp::expand(compiled.grammar) == grid::answer_oracle(grid::padded(ps)), "answer grammar equals oracle");
  r.expect(compiled.grammar.size() <= grid::answer_grammar_rule_bound(ps.width, ps.height, ps.points.size()),
           "rule count within bound");
  return r;
}

VerifyResult verify_butterfly(const grid::ButterflyGraph& g) {
  VerifyResult r;
  const auto& s = g.shape();
  grid::StabbingIndex index(grid::edges_to_rectangles(g), s.labels(), s.copies * s.labels());
  for (std::size_t u = 0; u < s.labels(); ++u)
    for (std::size_t h = 0; h < s.copies; ++h)
      for (std::size_t v = 0; v < s.labels(); ++v) {
        grid::ButterflyVertex src{0, 0, u}, dst{h, s.depth, v};
        r.expect(grid::reach_via_counting(s, index, src, dst) == grid::reach_oracle(g, src, dst),
                 "pair u=" + std::to_string(u) + " h=" + std::to_string(h) + " v=" + std::to_string(v));
      }
  return r;
}

grid::ButterflyGraph butterfly_from_flags(std::size_t H, std::size_t B, std::size_t D, const std::vector<std::size_t>& deleted,
                                          std::size_t random_deletions, std::uint64_t seed) {
  grid::ButterflyGraph full = grid::build_butterfly(H, B, D);
  std::vector<grid::EdgeId> del = deleted;
  if (random_deletions > 0) {
    std::vector<grid::EdgeId> all = full.present_edges();
    std::mt19937_64 rng(seed);
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng() % i]);
    all.resize(std::min(random_deletions, all.size()));
    del.insert(del.end(), all.begin(), all.end());
  }
  return grid::build_butterfly(H, B, D, del);
}

grid::PointSet read_point_set(const Io& io, const std::string& path, std::size_t width, std::size_t height) {
  std::istringstream text(io.read_all(path));
  grid::PointSet ps{width, height, grid::read_points_csv(text)};
  grid::check_points(ps);
  return ps;
}

int report_verify(const Io& io, const std::string& label, const VerifyResult& r) {
  for (const auto& n : r.notes) io.err << n << '\n';
  io.out << label << ": " << (r.checks - r.failures) << "/" << r.checks << " checks passed\n";
  return r.failures == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Grammar-compressed random access toolkit: hard instances, answer grammars, BWT/LZ codecs, probe bench"};
  app.require_subcommand(1);

  std::string output = "-";
  std::string grammar_path = "-";
  std::string input_path = "-";
  InstanceFlags inst;
  std::size_t cap = kDefaultExpandCap;

  // gen-sd
  auto* gen_sd = app.add_subcommand("gen-sd", "emit the SD hard grammar (SLPv1) for universe m and set Y");
  gen_sd->add_option("--m", inst.m, "universe size")->required();
  add_y_flags(gen_sd, inst);
  gen_sd->add_option("-o,--output", output, "output path (- for stdout)");

  // gen-blsd
  auto* gen_blsd = app.add_subcommand("gen-blsd", "emit the blocked-LSD hard grammar (SLPv1)");
  gen_blsd->add_option("--B", inst.B, "block size")->required();
  gen_blsd->add_option("--N", inst.N, "block count")->required();
  add_y_flags(gen_blsd, inst);
  gen_blsd->add_option("-o,--output", output, "output path");

  // gen-bwt-hard
  auto* gen_bwt = app.add_subcommand("gen-bwt-hard", "emit the BWT-compressible hard string s'_Y as 0/1 text");
  gen_bwt->add_option("--B", inst.B, "block size")->required();
  gen_bwt->add_option("--N", inst.N, "block count")->required();
  add_y_flags(gen_bwt, inst);
  gen_bwt->add_option("--cap", cap, "refuse strings longer than this");
  gen_bwt->add_option("-o,--output", output, "output path");

  // compile-rc
  std::size_t width = 0, height = 0;
  std::string points_path = "-";
  bool no_pad = false;
  auto* compile_rc = app.add_subcommand("compile-rc", "compile a points CSV into the answer-string grammar (SLPv1)");
  compile_rc->add_option("--points", points_path, "CSV of one-based x,y (- for stdin)");
  compile_rc->add_option("--width", width, "grid width W")->required();
  compile_rc->add_option("--height", height, "grid height H")->required();
  compile_rc->add_flag("--no-pad", no_pad, "reject widths that are not a power of two instead of padding");
  compile_rc->add_option("-o,--output", output, "output path");

  // access
  std::string index_text;
  bool one_based = false;
  auto* access = app.add_subcommand("access", "print bit i of the string derived by an SLPv1 grammar (zero-based)");
  access->add_option("--index,-i", index_text, "position, zero-based unless --one-based")->required();
  access->add_flag("--one-based", one_based, "interpret --index as 1..L");
  access->add_option("--grammar,-g", grammar_path, "SLPv1 file (- for stdin)");

  // expand
  auto* expand = app.add_subcommand("expand", "print the string derived by an SLPv1 grammar");
  expand->add_option("--grammar,-g", grammar_path, "SLPv1 file (- for stdin)");
  expand->add_option("--cap", cap, "refuse strings longer than this");
  expand->add_option("-o,--output", output, "output path");

  // bwt / ibwt / runs / rle
  auto* bwt_cmd = app.add_subcommand("bwt", "Burrows-Wheeler transform of a 0/1 string");
  bwt_cmd->add_option("--input", input_path, "0/1 text file (- for stdin)");
  auto* ibwt_cmd = app.add_subcommand("ibwt", "invert a BWT text over {0,1,$}");
  ibwt_cmd->add_option("--input", input_path, "BWT text file (- for stdin)");
  auto* runs_cmd = app.add_subcommand("runs", "count runs of a 0/1 or BWT text, ignoring $");
  runs_cmd->add_option("--input", input_path, "text file (- for stdin)");
  bool rle_decode = false;
  auto* rle_cmd = app.add_subcommand("rle", "run-length code a BWT text as JSON, or decode with --decode");
  rle_cmd->add_option("--input", input_path, "BWT text or RLE JSON (- for stdin)");
  rle_cmd->add_flag("--decode", rle_decode, "JSON in, BWT text out");

  // lz-report
  auto* lz_cmd = app.add_subcommand("lz-report", "LZ77/LZ78 sizes of the string derived by a grammar, as one JSON object");
  lz_cmd->add_option("--grammar,-g", grammar_path, "SLPv1 file (- for stdin)");
  lz_cmd->add_option("--cap", cap, "refuse strings longer than this");

  // butterfly-check
  std::size_t bH = 1, bB = 2, bD = 2, random_deletions = 0;
  std::vector<std::size_t> deleted;
  std::uint64_t seed = 1;
  auto* butterfly = app.add_subcommand("butterfly-check", "compare rectangle-stabbing reachability against BFS on every pair");
  butterfly->add_option("--H", bH, "copies")->default_val(1);
  butterfly->add_option("--B", bB, "degree")->default_val(2);
  butterfly->add_option("--D", bD, "depth")->default_val(2);
  butterfly->add_option("--delete", deleted, "edge ids to delete")->delimiter(',');
  butterfly->add_option("--random-deletions", random_deletions, "number of random edges to delete");
  butterfly->add_option("--seed", seed, "seed for random deletions")->default_val(1);

  // probe-bench
  std::string family_name = "blsd";
  std::string range_text = "2..6";
  std::vector<std::string> w_text;
  std::vector<std::string> structure_text;
  bool json = false;
  auto* bench = app.add_subcommand("probe-bench", "probe counts of read-all, descent and hybrid structures over a family");
  bench->add_option("--family", family_name, "sd | blsd | rc | bwt-hard")->default_val("blsd");
  bench->add_option("--param-range", range_text, "a..b (m for sd, B=N for blsd/bwt-hard, log2 W for rc)")->default_val("2..6");
  bench->add_option("--w", w_text, "cell widths in bits, or 'log' for ceil(log2 L)")->delimiter(',');
  bench->add_option("--structure", structure_text, "read-all, descent, hybrid (default all)")->delimiter(',');
  bench->add_option("--seed", seed, "seed for random Y / points / sampled positions")->default_val(1);
  bench->add_flag("--json", json, "emit a JSON array instead of CSV");
  bench->add_option("-o,--output", output, "output path");

  // verify
  std::string verify_family;
  auto* verify = app.add_subcommand("verify", "run the oracle-equivalence checks on one instance");
  verify->add_option("--family", verify_family, "sd | blsd | bwt-hard | rc | butterfly")->required();
  verify->add_option("--m", inst.m, "sd universe size");
  verify->add_option("--B", inst.B, "block size (blsd, bwt-hard) or degree (butterfly)");
  verify->add_option("--N", inst.N, "block count");
  verify->add_option("--Y", inst.y_text, "comma-separated elements of Y");
  verify->add_flag("--random-y", inst.random_y, "draw Y from --seed");
  verify->add_option("--seed", inst.seed, "seed")->default_val(1);
  verify->add_option("--points", points_path, "points CSV (rc)");
  verify->add_option("--width", width, "grid width (rc)");
  verify->add_option("--height", height, "grid height (rc)");
  verify->add_option("--H", bH, "butterfly copies");
  verify->add_option("--D", bD, "butterfly depth");
  verify->add_option("--random-deletions", random_deletions, "butterfly random deletions");

  std::vector<std::string> argv_store{"grac"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_sd->parsed()) {
      io.write(output, slp::encode(hard::build_sd_grammar(sd_instance(inst))));
    } else if (gen_blsd->parsed()) {
      io.write(output, slp::encode(hard::build_blsd_grammar(blocked_instance(inst))));
    } else if (gen_bwt->parsed()) {
      io.write(output, bwt::build_bwt_hard(blocked_instance(inst), cap).to_text() + "\n");
    } else if (compile_rc->parsed()) {
      grid::PointSet ps = read_point_set(io, points_path, width, height);
      auto compiled = grid::compile_answer_grammar(ps, !no_pad);
      err << "width " << compiled.original_width << " padded to " << compiled.width << ", height " << compiled.height
          << ", rules " << compiled.grammar.size() << '\n';
      io.write(output, slp::encode(compiled.grammar));
    } else if (access->parsed()) {
      slp::Slp g = slp::decode(io.read_all(grammar_path));
      BigInt i = parse_decimal(index_text);
      if (one_based) {
        if (i == 0) throw Error(Errc::out_of_range, "one-based index must be at least 1");
        i -= 1;
      }
      out << (slp::access(g, i) ? '1' : '0') << '\n';
    } else if (expand->parsed()) {
      slp::Slp g = slp::decode(io.read_all(grammar_path));
      io.write(output, slp::expand(g, cap).to_text() + "\n");
    } else if (bwt_cmd->parsed()) {
      out << bwt::bwt(BitString::from_text(trim(io.read_all(input_path)))).text() << '\n';
    } else if (ibwt_cmd->parsed()) {
      out << bwt::ibwt(bwt::BwtText::from_text(trim(io.read_all(input_path)))).to_text() << '\n';
    } else if (runs_cmd->parsed()) {
      std::string text = trim(io.read_all(input_path));
      if (text.find_first_not_of("01$") != std::string::npos) throw Error(Errc::parse_error, "runs expects a 0/1/$ string");
      out << bwt::runs(text) << '\n';
    } else if (rle_cmd->parsed()) {
      std::string text = trim(io.read_all(input_path));
      if (rle_decode)
        out << bwt::rle_decode(bwt::rle_from_json(text)).text() << '\n';
      else
        out << bwt::to_json(bwt::rle_encode(bwt::BwtText::from_text(text))) << '\n';
    } else if (lz_cmd->parsed()) {
      slp::Slp g = slp::decode(io.read_all(grammar_path));
      lz::LzReport r = lz::lz_report(g, cap);
      nlohmann::ordered_json j;
      j["grammar_size"] = r.grammar_size;
      j["lz77_factors"] = r.lz77_factors;
      j["lz78_phrases"] = r.lz78_phrases;
      j["string_length"] = static_cast<std::uint64_t>(r.string_length);
      j["lz77_variant"] = lz::kLz77Variant;
      j["lz77_bound_holds"] = r.lz77_bound_holds();
      out << j.dump() << '\n';
      if (!r.lz77_bound_holds()) return kExitValidation;
    } else if (butterfly->parsed()) {
      grid::ButterflyGraph g = butterfly_from_flags(bH, bB, bD, deleted, random_deletions, seed);
      VerifyResult r = verify_butterfly(g);
      std::size_t edges = g.present_edges().size();
      err << "H=" << bH << " B=" << bB << " D=" << bD << " edges present " << edges << "/" << g.shape().edge_count() << '\n';
      return report_verify(io, "butterfly-check", r);
    } else if (bench->parsed()) {
      bench::BenchConfig cfg;
      cfg.family = bench::parse_family(family_name);
      std::tie(cfg.first, cfg.last) = bench::parse_range(range_text);
      cfg.seed = seed;
      for (const auto& w : w_text) {
        if (w == "log") continue;
        BigInt v = parse_decimal(w);
        if (v < 1 || v > 64) throw Error(Errc::invalid_argument, "--w must be in [1,64] or 'log'");
        cfg.word_bits.push_back(static_cast<unsigned>(v));
      }
      if (std::find(w_text.begin(), w_text.end(), "log") != w_text.end() && !cfg.word_bits.empty())
        throw Error(Errc::invalid_argument, "--w log cannot be mixed with fixed widths");
      if (!structure_text.empty()) {
        cfg.structures.clear();
        for (const auto& s : structure_text) {
          if (s == "read-all") cfg.structures.push_back(probe::Structure::read_all);
          else if (s == "descent") cfg.structures.push_back(probe::Structure::descent);
          else if (s == "hybrid") cfg.structures.push_back(probe::Structure::hybrid);
          else throw Error(Errc::invalid_argument, "unknown structure '" + s + "'");
        }
      }
      err << "note: hybrid = min(read-all, descent); descent stands in for the O(log L)-probe structure\n";
      Report r = bench::to_report(bench::bench_sweep(cfg));
      io.write(output, json ? to_json(r) : to_csv(r));
    } else if (verify->parsed()) {
      if (verify_family == "sd") {
        return report_verify(io, "verify sd", verify_sd(sd_instance(inst)));
      } else if (verify_family == "blsd") {
        return report_verify(io, "verify blsd", verify_blsd(blocked_instance(inst)));
      } else if (verify_family == "bwt-hard") {
        return report_verify(io, "verify bwt-hard", verify_bwt_hard(blocked_instance(inst)));
      } else if (verify_family == "rc") {
        return report_verify(io, "verify rc", verify_rc(read_point_set(io, points_path, width, height)));
      } else if (verify_family == "butterfly") {
        std::size_t degree = inst.B == 0 ? 2 : inst.B;
        return report_verify(io, "verify butterfly",
                             verify_butterfly(butterfly_from_flags(bH, degree, bD, {}, random_deletions, inst.seed)));
      }
      throw Error(Errc::unknown_family, "unknown verify family '" + verify_family + "'");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::io_error ? kExitIo : kExitValidation;
  }
  return kExitOk;
}

}  // namespace grac::cli
