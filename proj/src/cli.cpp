#include "omega/cli.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "omega/chunk_multiply.hpp"
#include "omega/core_map.hpp"
#include "omega/guinness.hpp"
#include "omega/orbit_engine.hpp"
#include "omega/prng.hpp"
#include "omega/tiling_render.hpp"

namespace omega::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::uint64_t n = 0;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string kind = "half";
  std::string format = "text";
  std::string out_path;
  std::string m_digits;
  std::uint64_t cap = kDefaultScanCap;
  std::uint64_t max_digits = kDefaultRotationDigitBudget;
  unsigned jobs = 1;
  std::size_t cell = 1;
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::size_t count = 100000;
  std::uint64_t seed_x = 0;
  std::uint64_t seed_y = 0;
  bool has_seed_x = false;
  bool has_seed_y = false;
  std::string source = "orbit";
  std::uint64_t seed = 1;
  bool has_seed = false;
};

GuinnessKind parse_kind(const std::string& kind) {
  return kind == "whole" ? GuinnessKind::Whole : GuinnessKind::Half;
}

std::uint64_t orbit_length_for(GuinnessKind kind, const OmegaSpace& space) {
  return kind == GuinnessKind::Whole ? space.size() - 2 : space.size() / 2 - 1;
}

std::string format_unit(double value, unsigned decimals) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string format_stat(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

Point standard_or_given(const Options& opt, const OmegaSpace& space) {
  Point p{space.n(), 0};
  if (opt.has_seed_x) p.x = opt.seed_x;
  if (opt.has_seed_y) p.y = opt.seed_y;
  return p;
}

// Decimal places for the second component: ceil(log10 n).
unsigned v_decimals(std::uint64_t n) {
  return n == 1 ? 0 : decimal_digits(n - 1);
}

void write_bytes(const Options& opt, const std::string& bytes,
                 std::ostream& out) {
  if (opt.out_path.empty() || opt.out_path == "-") {
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open " + opt.out_path + " for writing");
  }
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void cmd_classify(const Options& opt, std::ostream& out) {
  const GuinnessClass cls = classify(opt.n);
  const unsigned k = decimal_digits(opt.n);
  if (opt.format == "json") {
    ordered_json j{{"n", opt.n},
                   {"k", k},
                   {"kind", to_string(cls.kind)},
                   {"orbit_length", cls.standard_orbit_length}};
    out << j.dump() << "\n";
  } else {
    out << "n=" << opt.n << " k=" << k << " kind=" << to_string(cls.kind)
        << " orbit_length=" << cls.standard_orbit_length << "\n";
  }
}

void cmd_scan(const Options& opt, std::ostream& out) {
  const GuinnessKind kind = parse_kind(opt.kind);
  const auto hits = scan(opt.from, opt.to, kind, opt.jobs);
  for (std::uint64_t n : hits) {
    if (opt.format == "json") {
      const OmegaSpace space = make_space(n);
      ordered_json j{{"n", n},
                     {"k", space.k()},
                     {"kind", to_string(kind)},
                     {"orbit_length", orbit_length_for(kind, space)}};
      out << j.dump() << "\n";
    } else {
      out << n << "\n";
    }
  }
}

void cmd_twins(const Options& opt, std::ostream& out) {
  for (const auto& [a, b] : twins(opt.from, opt.to, opt.jobs)) {
    if (opt.format == "json") {
      ordered_json j{{"first", a}, {"second", b}};
      out << j.dump() << "\n";
    } else {
      out << a << " " << b << "\n";
    }
  }
}

void cmd_decompose(const Options& opt, std::ostream& out) {
  const OmegaSpace space = make_space(opt.n);
  const DecompositionSignature sig = decompose(space, opt.cap);
  if (opt.format == "json") {
    ordered_json entries = ordered_json::array();
    for (const auto& [length, count] : sig.entries) {
      entries.push_back(ordered_json{{"length", length}, {"count", count}});
    }
    ordered_json j{{"n", opt.n},
                   {"k", space.k()},
                   {"size", space.size()},
                   {"signature", entries}};
    out << j.dump() << "\n";
  } else {
    out << "n=" << opt.n << " k=" << space.k() << " size=" << space.size()
        << " signature={";
    for (std::size_t i = 0; i < sig.entries.size(); ++i) {
      if (i) out << ",";
      out << sig.entries[i].first << "^" << sig.entries[i].second;
    }
    out << "}\n";
  }
}

void cmd_census(const Options& opt, std::ostream& out) {
  const OmegaSpace space = make_space(opt.n);
  const ConjugacyCensus census = conjugacy_census(space, opt.cap);
  if (opt.format == "json") {
    ordered_json self = ordered_json::array();
    for (const auto& [length, count] : census.self_conjugate_by_length) {
      self.push_back(ordered_json{{"length", length}, {"count", count}});
    }
    ordered_json j{{"n", opt.n},
                   {"k", space.k()},
                   {"orbit_count", census.orbit_count},
                   {"self_conjugate", self},
                   {"conjugate_pair_count", census.conjugate_pair_count}};
    out << j.dump() << "\n";
  } else {
    out << "n=" << opt.n << " k=" << space.k()
        << " orbits=" << census.orbit_count
        << " conjugate_pairs=" << census.conjugate_pair_count << "\n";
    for (const auto& [length, count] : census.self_conjugate_by_length) {
      out << "self_conjugate length=" << length << " count=" << count << "\n";
    }
  }
}

void cmd_fixed_points(const Options& opt, std::ostream& out) {
  const OmegaSpace space = make_space(opt.n);
  const auto points = fixed_points(space);
  if (opt.format == "json") {
    ordered_json arr = ordered_json::array();
    for (Point p : points) arr.push_back({p.x, p.y});
    ordered_json j{{"n", opt.n},
                   {"k", space.k()},
                   {"count", points.size()},
                   {"points", arr}};
    out << j.dump() << "\n";
  } else {
    for (Point p : points) out << p.x << " " << p.y << "\n";
  }
}

void cmd_digits(const Options& opt, std::ostream& out) {
  DigitChunkStream stream = digit_stream(opt.n);
  if (opt.out_path == "-") {
    stream.write_digits(out);
    return;
  }
  const std::string path =
      opt.out_path.empty() ? "G_" + std::to_string(opt.n) + ".txt"
                           : opt.out_path;
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  const std::uint64_t written = stream.write_digits(file);
  if (opt.format == "json") {
    ordered_json j{{"n", opt.n},
                   {"k", stream.chunk_width()},
                   {"digit_count", written},
                   {"path", path}};
    out << j.dump() << "\n";
  } else {
    out << written << "\n";
  }
}

void cmd_verify_rotation(const Options& opt, std::ostream& out) {
  const RotationCheck check = verify_rotation(opt.n, opt.max_digits);
  if (opt.format == "json") {
    ordered_json j{{"n", check.n},
                   {"k", decimal_digits(opt.n)},
                   {"digit_count", check.digit_count},
                   {"holds", check.holds},
                   {"first_chunk", check.first_chunk},
                   {"quotient_tail_match", check.quotient_tail_match}};
    out << j.dump() << "\n";
  } else {
    out << "n=" << check.n << " digit_count=" << check.digit_count
        << " holds=" << (check.holds ? "true" : "false") << "\n";
  }
}

void cmd_multiply(const Options& opt, std::ostream& out) {
  const std::string product = multiply(opt.m_digits, opt.n);
  if (opt.format == "json") {
    ordered_json j{{"m", opt.m_digits}, {"n", opt.n}, {"product", product}};
    out << j.dump() << "\n";
  } else {
    out << product << "\n";
  }
}

void cmd_prng(const Options& opt, std::ostream& out) {
  const OmegaSpace space = make_space(opt.n);
  OrbitGenerator gen(space, standard_or_given(opt, space));
  const unsigned vdec = v_decimals(space.n());
  for (std::size_t i = 0; i < opt.count; ++i) {
    const auto [u, v] = gen.next();
    out << format_unit(u, space.k()) << " " << format_unit(v, vdec) << "\n";
  }
}

void cmd_tests(const Options& opt, std::ostream& out) {
  std::vector<double> sample;
  if (opt.source == "orbit") {
    if (opt.n == 0) {
      throw CLI::RequiredError("tests --source orbit: --n");
    }
    const OmegaSpace space = make_space(opt.n);
    sample = orbit_unit_stream(space, standard_or_given(opt, space),
                               opt.count);
  } else if (opt.source == "lehmer") {
    sample = lehmer_unit_stream(opt.has_seed ? opt.seed : 1, opt.count);
  } else {  // middle-square
    const std::uint64_t seed = opt.has_seed ? opt.seed : 1234;
    if (seed > 9999) {
      throw std::invalid_argument("tests: middle-square seed must be <= 9999");
    }
    MiddleSquareState state{static_cast<std::uint32_t>(seed)};
    sample.reserve(opt.count);
    for (std::size_t i = 0; i < opt.count; ++i) {
      sample.push_back(state.value / 10000.0);
      state = middle_square_next(state);
    }
  }
  const auto reports = run_tests(sample);
  if (opt.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const TestReport& r : reports) {
      arr.push_back(ordered_json{{"name", r.name},
                                 {"statistic", r.statistic},
                                 {"degrees_of_freedom", r.degrees_of_freedom},
                                 {"threshold", r.threshold},
                                 {"pass", r.pass},
                                 {"sample_size", r.sample_size}});
    }
    out << arr.dump() << "\n";
  } else {
    for (const TestReport& r : reports) {
      out << r.name << " statistic=" << format_stat(r.statistic)
          << " df=" << r.degrees_of_freedom
          << " threshold=" << format_stat(r.threshold)
          << " pass=" << (r.pass ? "true" : "false") << "\n";
    }
  }
}

void cmd_tile(const Options& opt, std::ostream& out) {
  const OmegaSpace space = make_space(opt.n);
  const Image img =
      render_tiling(space, opt.rows, opt.cols, opt.cell, opt.cap);
  write_bytes(opt, write_ppm(img), out);
}

void cmd_orbit_plot(const Options& opt, std::ostream& out) {
  const OmegaSpace space = make_space(opt.n);
  const Image img =
      render_orbit_plot(space, standard_or_given(opt, space), opt.cell);
  write_bytes(opt, write_ppm(img), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Orbit toolkit for the base-10^k carry map on Omega_n"};
  app.require_subcommand(1);
  Options opt;

  const CLI::Range kPositiveInt{std::uint64_t{1},
                                std::numeric_limits<std::uint64_t>::max()};

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  const auto add_n = [&](CLI::App* sub) {
    return sub->add_option("--n", opt.n, "Defining number n")
        ->required()
        ->check(kPositiveInt);
  };
  const auto add_range = [&](CLI::App* sub) {
    sub->add_option("--from", opt.from, "Range start")
        ->required()
        ->check(kPositiveInt);
    sub->add_option("--to", opt.to, "Range end (inclusive)")
        ->required()
        ->check(kPositiveInt);
    sub->add_option("--jobs", opt.jobs, "Worker threads")
        ->check(kPositiveInt)
        ->capture_default_str();
  };
  const auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", opt.cap, "Point-count cap for full scans")
        ->check(kPositiveInt)
        ->capture_default_str();
  };
  const auto add_seed_point = [&](CLI::App* sub) {
    sub->add_option("--x", opt.seed_x, "Seed x (default n)")
        ->each([&](const std::string&) { opt.has_seed_x = true; });
    sub->add_option("--y", opt.seed_y, "Seed y (default 0)")
        ->each([&](const std::string&) { opt.has_seed_y = true; });
  };

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Classify n as whole/half/neither");
  add_n(classify_cmd);
  add_format(classify_cmd);
  classify_cmd->callback([&] { cmd_classify(opt, out); });

  CLI::App* scan_cmd =
      app.add_subcommand("scan", "List Guinness numbers in a range");
  add_range(scan_cmd);
  scan_cmd->add_option("--kind", opt.kind, "whole or half")
      ->required()
      ->check(CLI::IsMember({"whole", "half"}));
  add_format(scan_cmd);
  scan_cmd->callback([&] { cmd_scan(opt, out); });

  CLI::App* twins_cmd =
      app.add_subcommand("twins", "List twin one-half pairs in a range");
  add_range(twins_cmd);
  add_format(twins_cmd);
  twins_cmd->callback([&] { cmd_twins(opt, out); });

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "Orbit-length signature of Omega_n");
  add_n(decompose_cmd);
  add_cap(decompose_cmd);
  add_format(decompose_cmd);
  decompose_cmd->callback([&] { cmd_decompose(opt, out); });

  CLI::App* census_cmd =
      app.add_subcommand("census", "Self-conjugate / paired orbit census");
  add_n(census_cmd);
  add_cap(census_cmd);
  add_format(census_cmd);
  census_cmd->callback([&] { cmd_census(opt, out); });

  CLI::App* fixed_cmd =
      app.add_subcommand("fixed-points", "Fixed points of the map");
  add_n(fixed_cmd);
  add_format(fixed_cmd);
  fixed_cmd->callback([&] { cmd_fixed_points(opt, out); });

  CLI::App* digits_cmd =
      app.add_subcommand("digits", "Write the digits of G_n");
  add_n(digits_cmd);
  digits_cmd->add_option("--out", opt.out_path,
                         "Output path, '-' for stdout (default G_<n>.txt)");
  add_format(digits_cmd);
  digits_cmd->callback([&] { cmd_digits(opt, out); });

  CLI::App* rotation_cmd = app.add_subcommand(
      "verify-rotation", "Check that rotating G_n by k digits divides it by n");
  add_n(rotation_cmd);
  rotation_cmd
      ->add_option("--max-digits", opt.max_digits, "Digit budget")
      ->check(kPositiveInt)
      ->capture_default_str();
  add_format(rotation_cmd);
  rotation_cmd->callback([&] { cmd_verify_rotation(opt, out); });

  CLI::App* multiply_cmd =
      app.add_subcommand("multiply", "Multiply m by n with chunk carries");
  multiply_cmd->add_option("--m", opt.m_digits, "Decimal digit string")
      ->required();
  add_n(multiply_cmd);
  add_format(multiply_cmd);
  multiply_cmd->callback([&] { cmd_multiply(opt, out); });

  CLI::App* prng_cmd =
      app.add_subcommand("prng", "Stream unit-interval pairs from the orbit");
  add_n(prng_cmd);
  prng_cmd->add_option("--count", opt.count, "Pairs to emit")
      ->check(kPositiveInt)
      ->capture_default_str();
  add_seed_point(prng_cmd);
  prng_cmd->callback([&] { cmd_prng(opt, out); });

  CLI::App* tests_cmd =
      app.add_subcommand("tests", "Run the four-test statistical battery");
  tests_cmd->add_option("--source", opt.source, "Stream source")
      ->check(CLI::IsMember({"orbit", "lehmer", "middle-square"}))
      ->capture_default_str();
  tests_cmd->add_option("--n", opt.n, "Defining number for --source orbit")
      ->check(kPositiveInt);
  tests_cmd->add_option("--count", opt.count, "Sample size")
      ->check(kPositiveInt)
      ->capture_default_str();
  tests_cmd->add_option("--seed", opt.seed, "Generator seed value")
      ->each([&](const std::string&) { opt.has_seed = true; });
  add_seed_point(tests_cmd);
  add_format(tests_cmd);
  tests_cmd->callback([&] { cmd_tests(opt, out); });

  CLI::App* tile_cmd =
      app.add_subcommand("tile", "Render the colored rectangle tiling as PPM");
  add_n(tile_cmd);
  tile_cmd->add_option("--rows", opt.rows, "Tile rows")
      ->check(kPositiveInt)
      ->capture_default_str();
  tile_cmd->add_option("--cols", opt.cols, "Tile columns")
      ->check(kPositiveInt)
      ->capture_default_str();
  tile_cmd->add_option("--cell", opt.cell, "Pixels per grid cell")
      ->check(kPositiveInt)
      ->capture_default_str();
  add_cap(tile_cmd);
  tile_cmd->add_option("--out", opt.out_path, "Output path, '-' for stdout");
  tile_cmd->callback([&] { cmd_tile(opt, out); });

  CLI::App* plot_cmd =
      app.add_subcommand("orbit-plot", "Render one orbit as a PPM plot");
  add_n(plot_cmd);
  add_seed_point(plot_cmd);
  plot_cmd->add_option("--cell", opt.cell, "Pixels per grid cell")
      ->check(kPositiveInt)
      ->capture_default_str();
  plot_cmd->add_option("--out", opt.out_path, "Output path, '-' for stdout");
  plot_cmd->callback([&] { cmd_orbit_plot(opt, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("omega");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const CapacityError& e) {
    // Domain failures thrown from inside subcommand callbacks.
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotGuinnessError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const PointRangeError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace omega::cli
