#include "smsudoku/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "smsudoku/analysis.hpp"
#include "smsudoku/errors.hpp"
#include "smsudoku/solver.hpp"
#include "smsudoku/text_format.hpp"
#include "smsudoku/verification.hpp"

namespace smsudoku::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* yes_no(bool value) { return value ? "yes" : "no"; }

std::string couples_text(const Matching& matching) {
  std::ostringstream out;
  for (int m = 0; m < matching.size(); ++m) out << (m ? " " : "") << '(' << m + 1 << ',' << matching.wife_of(m) + 1 << ')';
  return out.str();
}

std::string placement_cell(const std::vector<int>& digits) {
  std::string text;
  for (int d : digits) text += std::to_string(d);
  return text;
}

void write_placement(std::ostream& out, const PlacementMatrix& placement) {
  for (int r = 0; r < placement.size(); ++r) {
    out << "# placement";
    for (int c = 0; c < placement.size(); ++c) out << ' ' << placement_cell(placement(r, c));
    out << '\n';
  }
}

PreferenceProfile load_profile(const std::string& path) {
  const std::string text = read_file(path);
  if (detect_input_kind(text) != InputKind::profile) throw ParseError(0, path + ": expected a profile file");
  return parse_profile(text);
}

// Grid holding `marker` on the template cells and nothing else.
SudokuGrid template_grid(const Template& tmpl, int marker) {
  SudokuGrid grid(tmpl.box_size());
  for (const Cell& cell : tmpl.cells()) grid.set(cell.row, cell.col, marker);
  return grid;
}

// --- convert ---------------------------------------------------------------

struct ConvertArgs {
  std::vector<std::string> inputs;
  int digit = 0;
};

int convert(const ConvertArgs& args, std::ostream& out) {
  std::vector<std::string> texts;
  for (const auto& path : args.inputs) texts.push_back(read_file(path));

  if (texts.size() > 1) {
    std::vector<PreferenceProfile> profiles;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (detect_input_kind(texts[i]) != InputKind::profile) {
        throw ParseError(0, args.inputs[i] + ": several inputs must all be profiles");
      }
      profiles.push_back(parse_profile(texts[i]));
    }
    out << format_grid(profiles_to_grid(profiles));
    return kSuccess;
  }

  const std::string& text = texts.front();
  if (detect_input_kind(text) == InputKind::profile) {
    const PreferenceProfile profile = parse_profile(text);
    const int marker = args.digit == 0 ? 1 : args.digit;
    if (marker > profile.size() * profile.size()) throw UsageError("--digit is larger than n^2");
    out << format_grid(template_grid(profile_to_template(profile), marker));
    return kSuccess;
  }

  const SudokuGrid grid = parse_grid(text);
  if (grid.is_complete()) {
    const auto profiles = grid_to_profiles(grid);
    if (args.digit > static_cast<int>(profiles.size())) throw UsageError("--digit is larger than n^2");
    for (std::size_t d = 0; d < profiles.size(); ++d) {
      if (args.digit != 0 && static_cast<int>(d) + 1 != args.digit) continue;
      if (args.digit == 0) out << (d ? "\n" : "") << "# digit " << d + 1 << '\n';
      out << format_profile(profiles[d]);
    }
    return kSuccess;
  }

  // A partial grid must be a single template.
  std::vector<Cell> cells;
  int marker = 0;
  for (int r = 0; r < grid.side(); ++r) {
    for (int c = 0; c < grid.side(); ++c) {
      const int v = grid.at(r, c);
      if (v == 0) continue;
      if (marker != 0 && v != marker) throw InvalidGrid("a partial grid must hold one digit forming a template");
      marker = v;
      cells.push_back({r, c});
    }
  }
  out << format_profile(template_to_profile(Template(grid.box_size(), std::move(cells))));
  return kSuccess;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string variant = "standard";
  std::size_t cap = 2;
  bool all = false;
  bool no_propagate = false;
};

int solve_command(const SolveArgs& args, std::ostream& out) {
  const auto variant = parse_variant(args.variant);
  if (!variant) throw UsageError("unknown variant '" + args.variant + "'");
  const Puzzle puzzle{parse_grid(read_file(args.input)), *variant};
  const SolveReport report = solve(puzzle, {args.all ? kNoCap : args.cap, !args.no_propagate});
  const SolveStatus status = report.status();
  out << "# status: " << to_string(status) << '\n';
  out << "# solutions: " << report.solutions.size() << (report.reached_cap ? " (cap reached)" : "") << '\n';
  out << "# nodes: " << report.nodes_expanded << '\n';
  for (std::size_t i = 0; i < report.solutions.size(); ++i) {
    if (report.solutions.size() > 1) out << (i ? "\n" : "") << "# solution " << i + 1 << '\n';
    out << format_grid(report.solutions[i]);
  }
  switch (status) {
    case SolveStatus::multiple:
      return kMultipleSolutions;
    case SolveStatus::none:
      return kNoSolution;
    default:
      return kSuccess;
  }
}

// --- match -----------------------------------------------------------------

struct MatchArgs {
  std::string input;
  std::string propose = "men";
  bool trace = true;
};

int match(const MatchArgs& args, std::ostream& out) {
  if (args.propose != "men" && args.propose != "women") throw UsageError("--propose must be men or women");
  const PreferenceProfile profile = load_profile(args.input);
  const GsTrace trace = gale_shapley(profile, args.propose == "men" ? Side::men : Side::women);
  out << "proposing: " << to_string(trace.proposing) << '\n';
  if (args.trace) out << render_trace(trace);
  out << "rounds: " << trace.rounds.size() << " (bound " << gale_shapley_round_bound(profile.size()) << ")\n";
  out << "matching: " << couples_text(trace.matching) << '\n';
  out << "cost: " << trace.matching.total_cost() << '\n';
  out << "stable: " << yes_no(is_stable(profile, trace.matching)) << '\n';
  return kSuccess;
}

// --- enumerate -------------------------------------------------------------

int enumerate(const std::string& input, std::ostream& out) {
  const PreferenceProfile profile = load_profile(input);
  const auto matchings = enumerate_stable_matchings(profile);
  out << "stable matchings: " << matchings.size() << '\n';
  for (const Matching& matching : matchings) out << couples_text(matching) << " cost " << matching.total_cost() << '\n';
  const Matching best = egalitarian_matching(profile);
  out << "egalitarian: " << couples_text(best) << " cost " << best.total_cost() << '\n';
  out << "valid partners (rows men, columns women):\n";
  const auto table = valid_partners(profile);
  for (int m = 0; m < table.size(); ++m) {
    for (int w = 0; w < table.size(); ++w) out << (w ? " " : "") << int{table(m, w)};
    out << '\n';
  }
  return kSuccess;
}

// --- classify --------------------------------------------------------------

int classify(const std::string& input, std::ostream& out) {
  const std::string text = read_file(input);
  if (detect_input_kind(text) == InputKind::profile) {
    const PreferenceProfile profile = parse_profile(text);
    const FamilyFlags flags = family_flags(profile);
    out << "mutually-latin: " << yes_no(flags.mutually_latin) << '\n';
    out << "pseudo-latin: " << yes_no(flags.pseudo_latin) << '\n';
    out << "disjoint: " << yes_no(flags.disjoint) << '\n';
    out << "joint: " << yes_no(flags.joint) << '\n';
    out << "mirror: " << yes_no(flags.mirror) << '\n';
    out << "graeco-latin: " << yes_no(graeco_latin_check(profile)) << '\n';
    out << "key:";
    if (const auto key = extract_key(profile)) {
      for (int image : key->images()) out << ' ' << image;
    } else {
      out << " none";
    }
    out << '\n';
    if (profile.size() == 2) out << "type: " << to_char(classify_n2(profile)) << '\n';
    out << "tally:\n";
    const TallyMatrix tally = tally_matrix(profile);
    for (int r = 0; r < tally.size(); ++r) {
      for (int c = 0; c < tally.size(); ++c) out << (c ? " " : "") << tally(r, c);
      out << '\n';
    }
    out << "pairs:\n";
    for (const PairInfo& pair : classify_pairs(profile)) {
      if (pair.role == PairRole::plain) continue;
      out << "  (" << pair.man + 1 << ',' << pair.woman + 1 << ") " << to_string(pair.role) << '\n';
    }
    return kSuccess;
  }

  const SudokuGrid grid = parse_grid(text);
  const GridFlags flags = grid_flags(grid);
  out << "complete: " << yes_no(grid.is_complete()) << '\n';
  out << "valid: " << yes_no(flags.valid) << '\n';
  out << "dg: " << yes_no(flags.dg) << '\n';
  out << "jg: " << yes_no(flags.jg) << '\n';
  out << "box-cyclic: " << yes_no(flags.valid && is_box_cyclic(grid)) << '\n';
  if (flags.valid && flags.jg) write_placement(out, placement_matrix(grid));
  if (flags.valid && grid.box_size() == 2) {
    out << "types:";
    for (const PreferenceProfile& profile : grid_to_profiles(grid)) out << ' ' << to_char(classify_n2(profile));
    out << '\n';
  }
  return kSuccess;
}

// --- census ----------------------------------------------------------------

int census(std::ostream& out) {
  const CensusReport report = n2_census();
  out << "total grids: " << report.total_grids << '\n';
  out << "classes: " << report.classes.size() << '\n';
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const CensusClass& entry = report.classes[i];
    out << "class " << i + 1 << ": ";
    for (int r = 0; r < entry.grid.side(); ++r) {
      if (r) out << '/';
      for (int c = 0; c < entry.grid.side(); ++c) out << entry.grid.at(r, c);
    }
    out << " types ";
    for (N2Type type : entry.digit_types) out << to_char(type);
    out << " multiset " << entry.type_multiset << " dg " << yes_no(entry.flags.dg) << " jg " << yes_no(entry.flags.jg)
        << " box-cyclic " << yes_no(entry.box_cyclic) << '\n';
  }
  out << "multisets:";
  for (const auto& [multiset, count] : report.type_multiset_histogram) out << ' ' << multiset << 'x' << count;
  out << '\n';
  const auto& slots = report.per_type_profile_counts;
  out << "profile slots: A " << slots[0] << " B " << slots[1] << " C " << slots[2] << " D " << slots[3] << '\n';
  out << "classes per profile:";
  for (int count : report.profiles_per_grid_incidence) out << ' ' << count;
  out << '\n';
  out << "constraints hold: " << yes_no(n2_census_constraints(report).all()) << '\n';
  return kSuccess;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  int n = 3;
  std::vector<int> base;
};

int generate(const GenerateArgs& args, std::ostream& out) {
  if (args.n < 1 || args.n > 5) throw UsageError("--n must be between 1 and 5");
  const int side = args.n * args.n;
  std::vector<int> digits = args.base;
  if (digits.empty()) {
    for (int d = 1; d <= side; ++d) digits.push_back(d);
  }
  if (static_cast<int>(digits.size()) != side) throw UsageError("--base needs n^2 digits");
  SquareMatrix<int> box(args.n);
  for (int i = 0; i < side; ++i) box(i / args.n, i % args.n) = digits[i];
  const SudokuGrid grid = box_cyclic_grid(box);
  write_placement(out, placement_matrix(grid));
  out << format_grid(grid);
  return kSuccess;
}

// --- verify ----------------------------------------------------------------

int verify(bool full, std::ostream& out) {
  bool all_pass = true;
  for (const Claim& claim : run_verification(full)) {
    out << format_claim(claim) << '\n';
    all_pass = all_pass && claim.pass;
  }
  return all_pass ? kSuccess : kVerifyFailed;
}

int fail(std::ostream& err, const char* kind, const std::string& message, int code) {
  err << "error: " << kind << ": " << message << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable marriage profiles and Sudoku grids", "smsudoku"};
  app.require_subcommand(1);

  ConvertArgs convert_args;
  auto* convert_cmd = app.add_subcommand("convert", "profile to template grid, grid to profiles, template to profile");
  convert_cmd->add_option("inputs", convert_args.inputs, "profile or grid file; n^2 profiles assemble a grid")
      ->required();
  convert_cmd->add_option("--digit", convert_args.digit, "digit to extract or to mark the template with")
      ->check(CLI::PositiveNumber);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "solve a puzzle");
  solve_cmd->add_option("input", solve_args.input, "grid file")->required();
  solve_cmd->add_option("--variant", solve_args.variant, "standard, dg, or jg");
  solve_cmd->add_option("--cap", solve_args.cap, "stop after this many solutions")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--all", solve_args.all, "find every solution");
  solve_cmd->add_flag("--no-propagate", solve_args.no_propagate, "plain backtracking");

  MatchArgs match_args;
  bool no_trace = false;
  auto* match_cmd = app.add_subcommand("match", "run Gale-Shapley with simultaneous rounds");
  match_cmd->add_option("input", match_args.input, "profile file")->required();
  match_cmd->add_option("--propose", match_args.propose, "men or women");
  match_cmd->add_flag("--no-trace", no_trace, "omit the round trace");

  std::string enumerate_input;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "all stable matchings, egalitarian optimum, valid partners");
  enumerate_cmd->add_option("input", enumerate_input, "profile file")->required();

  std::string classify_input;
  auto* classify_cmd = app.add_subcommand("classify", "family flags, key, and type of a profile or grid");
  classify_cmd->add_option("input", classify_input, "profile or grid file")->required();

  auto* census_cmd = app.add_subcommand("census", "classify every n=2 grid");

  GenerateArgs generate_args;
  auto* generate_cmd = app.add_subcommand("generate", "box-cyclic JG grid from a base box");
  generate_cmd->add_option("--n", generate_args.n, "box size");
  generate_cmd->add_option("--base", generate_args.base, "base box digits, row-major")->delimiter(',');

  bool full = false;
  auto* verify_cmd = app.add_subcommand("verify", "check the published claims");
  verify_cmd->add_flag("--full", full, "include the n=5 pseudo-Latin scan");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return fail(err, "usage", e.what(), kUsage);
  }
  match_args.trace = !no_trace;

  try {
    if (convert_cmd->parsed()) return convert(convert_args, out);
    if (solve_cmd->parsed()) return solve_command(solve_args, out);
    if (match_cmd->parsed()) return match(match_args, out);
    if (enumerate_cmd->parsed()) return enumerate(enumerate_input, out);
    if (classify_cmd->parsed()) return classify(classify_input, out);
    if (census_cmd->parsed()) return census(out);
    if (generate_cmd->parsed()) return generate(generate_args, out);
    if (verify_cmd->parsed()) return verify(full, out);
  } catch (const UsageError& e) {
    return fail(err, "usage", e.what(), kUsage);
  } catch (const TooLarge& e) {
    return fail(err, "too-large", e.what(), kUsage);
  } catch (const InconsistentPuzzle& e) {
    return fail(err, "inconsistent", e.what(), kInconsistent);
  } catch (const ParseError& e) {
    return fail(err, "malformed", e.what(), kMalformed);
  } catch (const InvalidProfile& e) {
    return fail(err, "malformed", e.what(), kMalformed);
  } catch (const InvalidGrid& e) {
    return fail(err, "malformed", e.what(), kMalformed);
  }
  return fail(err, "usage", "no subcommand", kUsage);
}

}  // namespace smsudoku::cli
