#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "spectra/charpoly.hpp"
#include "spectra/enumeration.hpp"
#include "spectra/errors.hpp"
#include "spectra/families.hpp"
#include "spectra/perron.hpp"
#include "spectra/subdigraph.hpp"
#include "spectra/verification.hpp"

namespace {

using namespace spectra;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitCapExceeded = 4;

struct ResolvedInput {
  Digraph digraph;
  std::optional<DigraphSpec> spec;
};

// Family specifiers are accepted anywhere a digraph file is.
ResolvedInput resolve_input(const std::string& arg) {
  if (auto spec = parse_digraph_spec(arg))
    return ResolvedInput{build(*spec), spec};
  std::ifstream file(arg);
  if (!file) throw ParseError("cannot open input: " + arg);
  return ResolvedInput{read_digraph(file), std::nullopt};
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

int cmd_rho(const std::string& input, int precision) {
  const ResolvedInput in = resolve_input(input);
  Int den(1);
  for (int i = 0; i < precision + 2; ++i) den *= 10;
  const PerronEstimate est = rho(in.digraph, Rational(1, den));
  std::cout << "rho = " << decimal_string(est.bracket.midpoint(), precision)
            << '\n'
            << "bracket = [" << rational_str(est.bracket.lo) << ", "
            << rational_str(est.bracket.hi) << "]\n";
  const Polynomial p = in.spec ? closed_form_charpoly(*in.spec)
                               : charpoly_det(in.digraph);
  if (p.term_count() <= 3) std::cout << "charpoly = " << p.sparse_string() << '\n';
  return 0;
}

int cmd_charpoly(const std::string& input, const std::string& engine) {
  const ResolvedInput in = resolve_input(input);
  const Polynomial p = engine == "cycles" ? charpoly_cycles(in.digraph)
                                          : charpoly_det(in.digraph);
  std::cout << p.dense_string() << '\n';
  if (p.term_count() <= 3) std::cout << p.sparse_string() << '\n';
  return 0;
}

int cmd_rank_bicyclic(int n, bool want_max, int top) {
  std::vector<Digraph> members;
  for (const FamilyParams& p : enumerate_bicyclic_params(n))
    members.push_back(std::holds_alternative<ThetaParams>(p)
                          ? build_theta(std::get<ThetaParams>(p))
                          : build_infty(std::get<InftyParams>(p)));
  // Certify the whole chain so both directions are covered.
  std::vector<RankedEntry> ranked =
      rank_by_rho(members, static_cast<int>(members.size()));
  if (want_max) std::reverse(ranked.begin(), ranked.end());
  const int count = std::min<int>(top, static_cast<int>(ranked.size()));
  for (int i = 0; i < count; ++i) {
    const RankedEntry& e = ranked[i];
    const auto fam = recognize_family(e.digraph);
    std::cout << i + 1 << ' '
              << (fam ? family_label(*fam) : std::string("unrecognized")) << ' '
              << decimal_string(e.estimate.bracket.midpoint(), 12);
    const bool tied = want_max ? (i + 1 < static_cast<int>(ranked.size()) &&
                                  ranked[i + 1].tied_with_prev)
                               : e.tied_with_prev;
    if (tied) std::cout << " (tied)";
    std::cout << '\n';
  }
  return 0;
}

int cmd_enumerate(int n, std::optional<int> arcs, const std::string& out_path) {
  const std::vector<Digraph> all =
      enumerate_strongly_connected(n, arcs, default_thread_count());
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw ParseError("cannot open output file: " + out_path);
    out = &file;
  }
  for (const Digraph& d : all) write_digraph(*out, d);
  return 0;
}

int cmd_verify(const std::string& claim, const std::string& range,
               const std::string& report_path) {
  const size_t dots = range.find("..");
  if (dots == std::string::npos)
    throw ParseError("range must look like A..B");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(range.substr(0, dots));
    hi = std::stoi(range.substr(dots + 2));
  } catch (const std::exception&) {
    throw ParseError("range must look like A..B");
  }
  const std::vector<VerificationReport> reports = run_claims(claim, lo, hi);
  std::ofstream file;
  if (!report_path.empty()) {
    file.open(report_path);
    if (!file) throw ParseError("cannot open report file: " + report_path);
  }
  bool all_pass = true;
  for (const VerificationReport& r : reports) {
    const std::string line = report_line(r);
    std::cout << line << '\n';
    if (file) file << line << '\n';
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : kExitVerificationFailure;
}

int cmd_find_subdigraph(const std::string& input) {
  const ResolvedInput in = resolve_input(input);
  const SubdigraphWitness wit = find_theta_or_infty_subdigraph(in.digraph);
  std::cout << "kind = " << (wit.is_theta() ? "theta" : "infty") << '\n'
            << "params = " << family_label(wit.params) << '\n'
            << "vertex_map =";
  for (int v : wit.vertex_map) std::cout << ' ' << v;
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spectra: certified spectral radii of strongly connected digraphs\n"
      "Digraph inputs are family specifiers (theta:a,b,c  infty:k,l  cycle:n\n"
      "dprime:n) or files in the \"n m\" / arc-list text format.\n"
      "SPECTRA_THREADS caps enumeration workers."};
  app.require_subcommand(1);

  auto* rho_cmd = app.add_subcommand("rho", "spectral radius with certified bracket");
  std::string rho_input;
  int precision = 12;
  rho_cmd->add_option("input", rho_input, "family spec or digraph file")->required();
  rho_cmd->add_option("--precision", precision, "decimal digits (default 12)");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "exact characteristic polynomial");
  std::string charpoly_input;
  std::string engine = "det";
  charpoly_cmd->add_option("input", charpoly_input)->required();
  charpoly_cmd->add_option("--engine", engine, "det (default) or cycles")
      ->check(CLI::IsMember({"det", "cycles"}));

  auto* rank_cmd =
      app.add_subcommand("rank-bicyclic", "certified ranking of the order-n bicyclic digraphs");
  int rank_n = 0, rank_top = 3;
  bool rank_min = false, rank_max = false;
  rank_cmd->add_option("--n", rank_n)->required();
  rank_cmd->add_flag("--min", rank_min, "ascending (default)");
  rank_cmd->add_flag("--max", rank_max, "descending");
  rank_cmd->add_option("--top", rank_top, "rows to print (default 3)");

  auto* enum_cmd = app.add_subcommand("enumerate",
                                      "strongly connected digraphs up to isomorphism");
  int enum_n = 0;
  std::optional<int> enum_arcs;
  std::string enum_out;
  enum_cmd->add_option("--n", enum_n)->required();
  enum_cmd->add_option("--arcs", enum_arcs, "fixed arc count")
      ->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--out", enum_out, "write records to a file");

  auto* verify_cmd = app.add_subcommand("verify", "run the claim verification harness");
  std::string claim = "all";
  std::string range = "4..30";
  std::string report_path;
  std::vector<std::string> known_claims = claim_ids();
  known_claims.push_back("all");
  verify_cmd->add_option("--claim", claim, "claim id or \"all\"")
      ->check(CLI::IsMember(known_claims));
  verify_cmd->add_option("--n-range", range, "orders A..B (default 4..30)");
  verify_cmd->add_option("--report", report_path, "also write records to a file");

  auto* find_cmd = app.add_subcommand("find-subdigraph",
                                      "theta/infty subdigraph from the shortest-cycle construction");
  std::string find_input;
  find_cmd->add_option("input", find_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (app.got_subcommand(rho_cmd)) return cmd_rho(rho_input, precision);
    if (app.got_subcommand(charpoly_cmd)) return cmd_charpoly(charpoly_input, engine);
    if (app.got_subcommand(rank_cmd)) {
      if (rank_min && rank_max)
        throw ParseError("choose one of --min / --max");
      return cmd_rank_bicyclic(rank_n, rank_max, rank_top);
    }
    if (app.got_subcommand(enum_cmd))
      return cmd_enumerate(enum_n,
                           enum_arcs >= 0 ? std::optional<int>(enum_arcs)
                                          : std::nullopt,
                           enum_out);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(claim, range, report_path);
    if (app.got_subcommand(find_cmd)) return cmd_find_subdigraph(find_input);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const UnresolvedError& e) {
    std::cerr << "unresolved comparison: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return 0;
}
