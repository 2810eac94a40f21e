// Command-line front end: critical data, monodromy pipeline, permutation
// group, verification report, word algebra, and SVG rendering.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "braidmono/garside.hpp"
#include "braidmono/monodromy.hpp"
#include "braidmono/render.hpp"
#include "braidmono/serialize.hpp"

namespace {

using namespace braidmono;

struct CommonOpts {
  std::string poly_text;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
  double angle = 0.0;
  bool angle_set = false;
  bool parallel = false;
  std::string dump_dir;
  double newton_tol = 0.0;
  double collision_tol = 0.0;
  double cluster_tol = 0.0;
  double sep_tol = 0.0;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("BRAIDMONO_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const std::string text(env);
  try {
    std::size_t consumed = 0;
    const unsigned long long value = std::stoull(text, &consumed, 10);
    if (consumed != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw InputParseError("BRAIDMONO_SEED must be a decimal unsigned integer");
  }
}

CLI::Option* add_pipeline_options(CLI::App* cmd, CommonOpts& o) {
  auto* poly =
      cmd->add_option("--poly", o.poly_text,
                      "coefficients, ascending degree, complex as re+imi");
  cmd->add_option("--seed", o.seed, "seed for basepoint and angle draws");
  cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out_path, "write output to this file");
  cmd->add_option("--angle", o.angle, "pin the projection angle (radians)");
  cmd->add_flag("--parallel", o.parallel, "lift loops concurrently");
  cmd->add_option("--newton-tol", o.newton_tol, "corrector residual target")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--collision-tol", o.collision_tol,
                  "minimum pairwise strand distance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cluster-tol", o.cluster_tol,
                  "critical-value clustering radius")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--sep-tol", o.sep_tol, "projection separation threshold")
      ->check(CLI::PositiveNumber);
  return poly;
}

EngineOptions engine_options(const CommonOpts& o) {
  EngineOptions opts;
  opts.cluster_tol = o.cluster_tol;
  opts.sep_tol = o.sep_tol;
  opts.parallel = o.parallel;
  if (o.newton_tol > 0.0) opts.track.newton_tol = o.newton_tol;
  if (o.collision_tol > 0.0) {
    opts.track.collision_tol = o.collision_tol;
    opts.track.match_tol = o.collision_tol;
  }
  if (o.angle_set) opts.projection_angle = o.angle;
  return opts;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + out_path + "'");
  out << text;
  if (!out) throw Error("failed writing output file '" + out_path + "'");
}

std::string complex_list(const std::vector<Complex>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += " ";
    out += format_complex(values[i]);
  }
  return out;
}

nlohmann::ordered_json complex_array(const std::vector<Complex>& values) {
  auto arr = nlohmann::ordered_json::array();
  for (Complex z : values)
    arr.push_back(nlohmann::ordered_json::array({z.real(), z.imag()}));
  return arr;
}

int run_critical(const CommonOpts& o) {
  const Polynomial p = parse_poly(o.poly_text);
  const CriticalData data = branch_locus(p, o.cluster_tol);
  const bool generic =
      static_cast<int>(data.branch_points.size()) == p.degree() - 1;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["critical_points"] = complex_array(data.critical_points);
    j["branch_points"] = complex_array(data.branch_points);
    j["multiplicities"] = data.multiplicities;
    j["generic"] = generic;
    write_output(j.dump(2) + "\n", o.out_path);
  } else {
    std::ostringstream os;
    os << "critical points: " << complex_list(data.critical_points) << "\n";
    os << "branch points: " << complex_list(data.branch_points) << "\n";
    os << "multiplicities:";
    for (int m : data.multiplicities) os << " " << m;
    os << "\n";
    os << "generic: " << (generic ? "true" : "false") << "\n";
    write_output(os.str(), o.out_path);
  }
  return 0;
}

Loop rebuild_infinity_loop(const MonodromyResult& result) {
  std::vector<Complex> branch_points;
  branch_points.reserve(result.entries.size());
  for (const MonodromyEntry& e : result.entries)
    branch_points.push_back(e.branch_point);
  return infinity_loop(branch_points, result.basepoint);
}

void dump_tracks(const MonodromyResult& result, const EngineOptions& opts,
                 const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create dump directory '" + dir + "'");

  auto dump_one = [&](const Loop& loop, const std::string& name) {
    const FiberTrack track =
        track_fiber(result.polynomial, loop, result.fiber, opts.track);
    std::ostringstream os;
    os << std::setprecision(17);
    for (std::size_t i = 0; i < track.times.size(); ++i) {
      os << track.times[i];
      for (int k = 0; k < track.strand_count(); ++k) {
        const Complex z = track.strands[k][i];
        os << " " << z.real() << " " << z.imag();
      }
      os << "\n";
    }
    write_output(os.str(), (fs::path(dir) / name).string());
  };

  for (std::size_t j = 0; j < result.entries.size(); ++j)
    dump_one(result.entries[j].loop,
             "track_" + std::to_string(j + 1) + ".txt");
  dump_one(rebuild_infinity_loop(result), "track_infinity.txt");
}

int run_monodromy(const CommonOpts& o) {
  const Polynomial p = parse_poly(o.poly_text);
  const EngineOptions opts = engine_options(o);
  const MonodromyResult result = braid_monodromy(p, o.seed, opts);
  if (!o.dump_dir.empty()) dump_tracks(result, opts, o.dump_dir);
  write_output(o.format == "json" ? to_json_text(result) : to_text(result),
               o.out_path);
  return 0;
}

int run_group(const CommonOpts& o) {
  const Polynomial p = parse_poly(o.poly_text);
  const PermGroupReport report = monodromy_group(p, o.seed, engine_options(o));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["order"] = report.order;
    j["full"] = report.is_full_symmetric;
    j["cyclic"] = report.is_cyclic;
    j["transitive"] = report.is_transitive;
    write_output(j.dump(2) + "\n", o.out_path);
  } else {
    write_output(group_text(report) + "\n", o.out_path);
  }
  return 0;
}

int run_verify(const CommonOpts& o) {
  const Polynomial p = parse_poly(o.poly_text);
  const FullMonodromyReport report =
      verify_full_monodromy(p, o.seed, engine_options(o));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["verdict"] = verdict_name(report.verdict);
    j["generic"] = report.generic_branch_locus;
    auto braids = nlohmann::ordered_json::array();
    for (const BraidCheck& c : report.per_braid)
      braids.push_back({{"exponent_sum", c.exponent_sum},
                        {"transposition", c.is_transposition}});
    j["braids"] = std::move(braids);
    j["composite_identity"] = report.composite_identity;
    j["group_full"] = report.group_full_symmetric;
    j["fan_search_attempted"] = report.fan_search_attempted;
    if (report.fan_conjugator.has_value())
      j["fan_conjugator"] = report.fan_conjugator->letters();
    else
      j["fan_conjugator"] = nullptr;
    j["result"] = to_json(report.result);
    write_output(j.dump(2) + "\n", o.out_path);
  } else {
    write_output(to_text(report), o.out_path);
  }
  switch (report.verdict) {
    case Verdict::kConsistent:
      return 0;
    case Verdict::kNotGeneric:
      return 2;
    case Verdict::kCheckFailed:
      return 1;
  }
  return 1;
}

int run_infinity(const CommonOpts& o) {
  const Polynomial p = parse_poly(o.poly_text);
  const MonodromyResult result = braid_monodromy(p, o.seed, engine_options(o));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["infinity_word"] = result.infinity_word.letters();
    write_output(j.dump(2) + "\n", o.out_path);
  } else {
    write_output(to_string(result.infinity_word) + "\n", o.out_path);
  }
  return 0;
}

std::vector<std::string> words_or_stdin(const std::vector<std::string>& args,
                                        std::size_t needed) {
  std::vector<std::string> words = args;
  if (words.empty()) {
    std::string line;
    while (words.size() < needed && std::getline(std::cin, line)) {
      if (!line.empty()) words.push_back(line);
    }
  }
  if (words.size() != needed)
    throw InputParseError("expected " + std::to_string(needed) +
                          " braid word(s)");
  return words;
}

int run_braid(const std::string& op, const std::vector<std::string>& args,
              int strands, const std::string& out_path) {
  std::ostringstream os;
  if (op == "eq") {
    const auto words = words_or_stdin(args, 2);
    const BraidWord a = parse_word(words[0], strands);
    const BraidWord b = parse_word(words[1], strands);
    os << (equal(a, b) ? "equal" : "not-equal") << "\n";
  } else {
    const auto words = words_or_stdin(args, 1);
    const BraidWord w = parse_word(words[0], strands);
    if (op == "nf")
      os << garside_nf(w).to_string() << "\n";
    else if (op == "perm")
      os << permutation_of_word(w).to_string() << "\n";
    else
      os << exponent_sum(w) << "\n";
  }
  write_output(os.str(), out_path);
  return 0;
}

int run_render(const CommonOpts& o, const std::string& word_text, int strands,
               const std::string& loop_sel) {
  if (!word_text.empty()) {
    if (strands < 2)
      throw InputParseError("--word rendering needs --strands >= 2");
    write_output(render_word_svg(parse_word(word_text, strands)), o.out_path);
    return 0;
  }
  if (o.poly_text.empty())
    throw InputParseError("render needs either --word or --poly");
  const Polynomial p = parse_poly(o.poly_text);
  const EngineOptions opts = engine_options(o);
  const MonodromyResult result = braid_monodromy(p, o.seed, opts);
  Loop loop = rebuild_infinity_loop(result);
  if (loop_sel != "inf") {
    std::size_t index = 0;
    try {
      index = std::stoul(loop_sel);
    } catch (const std::exception&) {
      throw InputParseError("--loop must be a 1-based index or 'inf'");
    }
    if (index < 1 || index > result.entries.size())
      throw InputParseError("--loop index out of range");
    loop = result.entries[index - 1].loop;
  }
  const FiberTrack track =
      track_fiber(result.polynomial, loop, result.fiber, opts.track);
  write_output(render_track_svg(track, result.projection_angle), o.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid monodromy of a complex polynomial in one variable"};
  app.require_subcommand(1);

  CommonOpts critical_o, mono_o, group_o, verify_o, infinity_o, render_o;
  critical_o.seed = mono_o.seed = group_o.seed = verify_o.seed =
      infinity_o.seed = render_o.seed = 0;

  CLI::App* critical = app.add_subcommand(
      "critical", "critical points, branch points, genericity");
  add_pipeline_options(critical, critical_o)->required();

  CLI::App* mono = app.add_subcommand(
      "monodromy", "braid word and permutation per branch point");
  add_pipeline_options(mono, mono_o)->required();
  mono->add_option("--dump-tracks", mono_o.dump_dir,
                   "write per-loop strand samples into this directory");

  CLI::App* group =
      app.add_subcommand("group", "permutation monodromy group");
  add_pipeline_options(group, group_o)->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "check the full-braid-group conditions");
  add_pipeline_options(verify, verify_o)->required();

  CLI::App* infinity =
      app.add_subcommand("infinity", "braid word of the loop around infinity");
  add_pipeline_options(infinity, infinity_o)->required();

  CLI::App* braid = app.add_subcommand("braid", "word algebra");
  braid->require_subcommand(1);
  std::vector<std::string> braid_words;
  int braid_strands = 0;
  std::string braid_out;
  const std::pair<const char*, const char*> braid_ops[] = {
      {"nf", "Garside normal form"},
      {"eq", "test two words for equality"},
      {"perm", "induced permutation"},
      {"expsum", "exponent sum"}};
  for (const auto& [name, blurb] : braid_ops) {
    CLI::App* sub = braid->add_subcommand(name, blurb);
    sub->add_option("words", braid_words, "braid words (or stdin)");
    sub->add_option("--strands", braid_strands, "strand count")->required();
    sub->add_option("--out", braid_out);
  }

  CLI::App* render = app.add_subcommand("render", "SVG braid diagram");
  add_pipeline_options(render, render_o);
  std::string render_word_text;
  int render_strands = 0;
  std::string render_loop = "inf";
  render->add_option("--word", render_word_text, "render this word instead");
  render->add_option("--strands", render_strands, "strand count for --word");
  render->add_option("--loop", render_loop,
                     "1-based loop index or 'inf' (default)");

  try {
    const std::uint64_t seed = default_seed();
    critical_o.seed = mono_o.seed = group_o.seed = verify_o.seed =
        infinity_o.seed = render_o.seed = seed;

    app.parse(argc, argv);

    auto finish = [](CLI::App* cmd, CommonOpts& o) {
      o.angle_set = cmd->count("--angle") > 0;
    };

    if (app.got_subcommand(critical)) {
      finish(critical, critical_o);
      return run_critical(critical_o);
    }
    if (app.got_subcommand(mono)) {
      finish(mono, mono_o);
      return run_monodromy(mono_o);
    }
    if (app.got_subcommand(group)) {
      finish(group, group_o);
      return run_group(group_o);
    }
    if (app.got_subcommand(verify)) {
      finish(verify, verify_o);
      return run_verify(verify_o);
    }
    if (app.got_subcommand(infinity)) {
      finish(infinity, infinity_o);
      return run_infinity(infinity_o);
    }
    if (app.got_subcommand(braid)) {
      for (const char* name : {"nf", "eq", "perm", "expsum"}) {
        CLI::App* sub = braid->get_subcommand(name);
        if (braid->got_subcommand(sub))
          return run_braid(name, braid_words, braid_strands, braid_out);
      }
    }
    if (app.got_subcommand(render)) {
      finish(render, render_o);
      return run_render(render_o, render_word_text, render_strands,
                        render_loop);
    }
    return 64;
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  } catch (const InputParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 64;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
