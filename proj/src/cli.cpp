#include "mulcube/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mulcube/base_convert.hpp"
#include "mulcube/io.hpp"
#include "mulcube/macro.hpp"
#include "mulcube/render.hpp"
#include "mulcube/tessellation.hpp"

namespace mulcube {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

Prebasis parse_prebasis(const std::string& text) {
  std::vector<std::uint64_t> entries;
  for (const auto& part : split(text, ',')) {
    try {
      entries.push_back(std::stoull(part));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed prebasis '" + text + "': expected e.g. \"2,5\"");
    }
  }
  return Prebasis(std::move(entries));
}

// "x0..x1,y0..y1" with one range per axis.
std::pair<Point, Point> parse_box(const std::string& text, std::size_t dim) {
  auto ranges = split(text, ',');
  if (ranges.size() != dim)
    throw std::invalid_argument("box '" + text + "' must give one range per axis");
  Point lo = Point::zero(dim), hi = Point::zero(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto sep = ranges[i].find("..");
    try {
      if (sep == std::string::npos) throw std::invalid_argument("missing '..'");
      lo[i] = std::stoll(ranges[i].substr(0, sep));
      hi[i] = std::stoll(ranges[i].substr(sep + 2));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed box range '" + ranges[i] + "': expected a..b");
    }
  }
  return {lo, hi};
}

// "p@N" or "p/q@N".
std::pair<Rat, std::uint64_t> parse_rule(const std::string& text) {
  auto at = text.find('@');
  if (at == std::string::npos)
    throw std::invalid_argument("malformed rule '" + text + "': expected p@N or p/q@N");
  Rat alpha = parse_rational(text.substr(0, at));
  std::uint64_t base;
  try {
    base = std::stoull(text.substr(at + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rule base in '" + text + "'");
  }
  return {alpha, base};
}

void write_text(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write file '" + path + "'");
  file << bytes;
}

struct TessellationSource {
  std::string rational;
  std::string config_path;

  Tessellation load(const Prebasis& n) const {
    if (rational.empty() == config_path.empty())
      throw std::invalid_argument("give exactly one of --rational and --config");
    if (!rational.empty())
      return Tessellation(n, config_of_real(parse_rational(rational), n.product()));
    return Tessellation(n, config_from_json(load_json_file(config_path)));
  }
};

DigitConfig load_config_for_base(const TessellationSource& src, std::uint64_t base) {
  if (src.rational.empty() == src.config_path.empty())
    throw std::invalid_argument("give exactly one of --rational and --config");
  if (!src.rational.empty()) return config_of_real(parse_rational(src.rational), base);
  DigitConfig x = config_from_json(load_json_file(src.config_path));
  if (x.base() != base)
    throw std::invalid_argument("configuration base " + std::to_string(x.base()) +
                                " does not match the expected base " + std::to_string(base));
  return x;
}

std::string format_trace_word(const TraceWord& word) {
  std::string s;
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (t) s += " -> ";
    for (std::size_t i = 0; i < word[t].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(word[t][i]);
    }
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"multiplication cubes, tessellations, and multiplication automata"};
  app.require_subcommand(1);
  int result = kExitOk;

  // tiles -----------------------------------------------------------------
  auto* tiles = app.add_subcommand("tiles", "emit a multiplication cube set");
  std::string tiles_prebasis, tiles_format = "ascii", tiles_out;
  int tiles_cell = 64;
  tiles->add_option("--prebasis", tiles_prebasis, "prebasis, e.g. 2,5")->required();
  tiles->add_option("--format", tiles_format, "svg|ascii|json")
      ->check(CLI::IsMember({"svg", "ascii", "json"}));
  tiles->add_option("-o,--out", tiles_out, "output file (default stdout)");
  tiles->add_option("--cell-size", tiles_cell, "svg cell size in pixels");
  tiles->callback([&] {
    Prebasis n = parse_prebasis(tiles_prebasis);
    TileSet t = tileset(n);
    if (n.dim() > 2 && tiles_format != "json")
      throw std::invalid_argument("dimensions above 2 are emitted as json only");
    RenderSpec spec;
    spec.cell_size = tiles_cell;
    if (tiles_format == "svg")
      write_text(tiles_out, svg_tileset(t, spec), out);
    else if (tiles_format == "ascii")
      write_text(tiles_out, ascii_tileset(t), out);
    else
      write_text(tiles_out, dump_json(tileset_to_json(t)), out);
  });

  // patch -----------------------------------------------------------------
  auto* patch = app.add_subcommand("patch", "extract a window of a tessellation");
  std::string patch_prebasis, patch_box, patch_out, patch_svg;
  TessellationSource patch_src;
  bool patch_dot = false;
  patch->add_option("--prebasis", patch_prebasis, "prebasis, e.g. 2,5")->required();
  patch->add_option("--rational", patch_src.rational, "value on the diagonal, p/q");
  patch->add_option("--config", patch_src.config_path, "diagonal configuration file");
  patch->add_option("--box", patch_box, "window, e.g. -4..1,-4..1")->required();
  patch->add_option("-o,--out", patch_out, "patch file (default stdout)");
  patch->add_option("--svg", patch_svg, "also render the patch to this svg file");
  patch->add_flag("--origin-dot", patch_dot, "mark the corner at the origin in the svg");
  patch->callback([&] {
    Prebasis n = parse_prebasis(patch_prebasis);
    Tessellation f = patch_src.load(n);
    auto [lo, hi] = parse_box(patch_box, n.dim());
    Patch window = extract_patch(f, lo, hi);
    write_text(patch_out, dump_json(patch_to_json(window)), out);
    if (!patch_svg.empty()) {
      RenderSpec spec;
      spec.show_origin_dot = patch_dot;
      write_text(patch_svg, svg_patch(window, spec), out);
    }
  });

  // verify ----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check a patch for matching faces");
  std::string verify_file;
  verify->add_option("patch", verify_file, "patch file")->required();
  verify->callback([&] {
    Patch p = patch_from_json(load_json_file(verify_file));
    ValidityReport report = is_valid_patch(p);
    if (report.valid) {
      out << "valid\n";
      return;
    }
    out << "invalid: " << report.violations.size() << " broken adjacencies\n";
    for (const auto& [z, axis] : report.violations)
      out << "  " << point_to_string(z) << " -> axis " << (axis + 1) << "\n";
    result = kExitSemantic;
  });

  // integrate ---------------------------------------------------------------
  auto* integrate = app.add_subcommand("integrate", "path integral over a patch");
  std::string integrate_patch, integrate_path;
  bool expect_zero = false;
  integrate->add_option("--patch", integrate_patch, "patch file")->required();
  integrate->add_option("--path", integrate_path, "path file (list of points)")->required();
  integrate->add_flag("--expect-zero", expect_zero, "fail when the integral is nonzero");
  integrate->callback([&] {
    Patch p = patch_from_json(load_json_file(integrate_patch));
    LatticePath path = path_from_json(load_json_file(integrate_path));
    Rat value = path_integral(p, path);
    out << rational_to_string(value) << "\n";
    if (expect_zero && value != 0) result = kExitSemantic;
  });

  // macro / micro -----------------------------------------------------------
  struct RegroupArgs {
    std::string prebasis, matrix, box, out_path, config_out;
    TessellationSource src;
  };
  RegroupArgs mac, mic;
  auto add_regroup_options = [](CLI::App* cmd, RegroupArgs& a, const char* source_hint) {
    cmd->add_option("--prebasis", a.prebasis, "fine prebasis n, e.g. 2,5")->required();
    cmd->add_option("--rational", a.src.rational, source_hint);
    cmd->add_option("--config", a.src.config_path, "diagonal configuration file");
    cmd->add_option("--matrix", a.matrix, "matrix file")->required();
    cmd->add_option("--box", a.box, "window of the result to extract")->required();
    cmd->add_option("-o,--out", a.out_path, "patch file (default stdout)");
    cmd->add_option("--config-out", a.config_out, "also write the resulting diagonal here");
  };
  auto* macro_cmd = app.add_subcommand("macro", "regroup cubes into larger cubes");
  add_regroup_options(macro_cmd, mac, "value of the fine tessellation, p/q");
  macro_cmd->callback([&] {
    Prebasis n = parse_prebasis(mac.prebasis);
    MacroMatrix a = matrix_from_json(load_json_file(mac.matrix));
    Tessellation f = mac.src.load(n);
    Tessellation g = macrotile(f, a);
    auto [lo, hi] = parse_box(mac.box, g.dim());
    write_text(mac.out_path, dump_json(patch_to_json(extract_patch(g, lo, hi))), out);
    if (!mac.config_out.empty()) save_json_file(mac.config_out, config_to_json(g.diagonal()));
  });
  auto* micro_cmd = app.add_subcommand("micro", "split regrouped cubes back apart");
  add_regroup_options(micro_cmd, mic, "value of the regrouped tessellation, p/q");
  micro_cmd->callback([&] {
    Prebasis n = parse_prebasis(mic.prebasis);
    MacroMatrix a = matrix_from_json(load_json_file(mic.matrix));
    Prebasis coarse = derived_prebasis(n, a);
    Tessellation g = mic.src.load(coarse);
    Tessellation f = microtile(g, n, a);
    auto [lo, hi] = parse_box(mic.box, f.dim());
    write_text(mic.out_path, dump_json(patch_to_json(extract_patch(f, lo, hi))), out);
    if (!mic.config_out.empty()) save_json_file(mic.config_out, config_to_json(f.diagonal()));
  });

  // ca-run ------------------------------------------------------------------
  auto* ca = app.add_subcommand("ca-run", "space-time table of a multiplication automaton");
  std::string ca_rule, ca_out, ca_format = "ascii";
  TessellationSource ca_src;
  std::uint64_t ca_steps = 0;
  ca->add_option("--rule", ca_rule, "automaton, e.g. 3@6 or 3/2@6")->required();
  ca->add_option("--rational", ca_src.rational, "starting value, p/q");
  ca->add_option("--config", ca_src.config_path, "starting configuration file");
  ca->add_option("--steps", ca_steps, "number of steps T; rows cover t = 0..T")->required();
  ca->add_option("--format", ca_format, "ascii|json")->check(CLI::IsMember({"ascii", "json"}));
  ca->add_option("-o,--out", ca_out, "output file (default stdout)");
  ca->callback([&] {
    auto [alpha, base] = parse_rule(ca_rule);
    RationalMultiplier rule(alpha, base);
    DigitConfig x = load_config_for_base(ca_src, base);
    std::vector<DigitConfig> rows{x};
    for (std::uint64_t t = 0; t < ca_steps; ++t) rows.push_back(mul_alpha(rule, rows.back()));
    if (ca_format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& row : rows) j.push_back(config_to_json(row));
      write_text(ca_out, dump_json(j), out);
      return;
    }
    std::ostringstream table;
    for (std::size_t t = 0; t < rows.size(); ++t)
      table << "t=" << t << ": " << to_pretty_string(rows[t]) << "\n";
    write_text(ca_out, table.str(), out);
  });

  // convert -----------------------------------------------------------------
  auto* convert = app.add_subcommand("convert", "rewrite a configuration in another base");
  std::string convert_config, convert_mode = "conj", convert_out;
  std::uint64_t convert_target = 0;
  convert->add_option("--config", convert_config, "configuration file")->required();
  convert->add_option("--target", convert_target, "target base")->required();
  convert->add_option("--mode", convert_mode, "conj|fact")
      ->check(CLI::IsMember({"conj", "fact"}));
  convert->add_option("-o,--out", convert_out, "output file (default stdout)");
  convert->callback([&] {
    DigitConfig x = config_from_json(load_json_file(convert_config));
    DigitConfig y = convert_mode == "conj" ? conjugate_base(x, convert_target)
                                           : factor_base(x, convert_target);
    write_text(convert_out, dump_json(config_to_json(y)), out);
  });

  // trace -------------------------------------------------------------------
  auto* trace = app.add_subcommand("trace", "enumerate trace words of an automaton");
  std::string trace_rule, trace_out, trace_format = "text";
  std::size_t trace_width = 1, trace_horizon = 0;
  std::uint64_t trace_limit = 4'000'000;
  trace->add_option("--rule", trace_rule, "automaton, e.g. 2@10")->required();
  trace->add_option("--width", trace_width, "observed window width k")->required();
  trace->add_option("--horizon", trace_horizon, "observed steps T after the first row")
      ->required();
  trace->add_option("--format", trace_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  trace->add_option("--max-windows", trace_limit, "enumeration size guard");
  trace->add_option("-o,--out", trace_out, "output file (default stdout)");
  trace->callback([&] {
    auto [alpha, base] = parse_rule(trace_rule);
    if (denominator(alpha) != 1)
      throw std::invalid_argument("trace enumeration takes an integer rule p@N");
    MulRule rule(checked_u64(numerator(alpha), "rule multiplier"), base);
    auto words = trace_words(TraceQuery{rule, trace_width, trace_horizon, trace_limit});
    if (trace_format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& w : words) j.push_back(w);
      write_text(trace_out, dump_json(j), out);
      return;
    }
    std::ostringstream text;
    for (const auto& w : words) text << format_trace_word(w) << "\n";
    write_text(trace_out, text.str(), out);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return result;
}

}  // namespace mulcube
