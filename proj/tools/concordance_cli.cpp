// concordance: command line front end for the knot concordance toolkit.
//
// Exit codes: 0 success, 1 computation error (or a failed `verify`),
// 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "concordance/errors.hpp"
#include "concordance/freegroup.hpp"
#include "concordance/intlattice.hpp"
#include "concordance/knotexpr.hpp"
#include "concordance/seifert.hpp"
#include "concordance/verify.hpp"

namespace {

using namespace concordance;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

constexpr const char* kGrammar = R"(Knot expressions:
  expr := atom
        | mirror(expr) | reverse(expr) | neg(expr)
        | sum(expr, expr, ...)
        | sat(expr; [w1, ..., wn]; expr1, ..., exprn)
  atom := unknot | trefoil | figure8 | R | seifert[[v11,v12],[v21,v22]]
  neg(K) is reverse(mirror(K)), the concordance inverse.
Matrices: [[3,2],[1,0]]    Vectors: (1,2)
Free group words: letters a d z y, inverse marked with ', e.g. "d' a d".
)";

constexpr const char* kReportFields = R"(Report record keys (verify --format records):
  infecting_knot
  {a_curve,b_curve,base_knot}.{expression,windings,alexander,arf,
      arf_via_alexander,regular_samples,signature_nonvanishing}
  {a_curve,b_curve,base_knot}.signature.<i>.{theta,sigma,status}
  uniqueness.seifert
  uniqueness.{eta2_in_V,eta2_in_VT,eta1_in_V,eta1_in_VT}.{member,witness}
  uniqueness.{alpha_squared_in_image,matches_expected}
  pass.{arf_nonzero_both,signature_nonvanishing_both}
)";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double default_tolerance() {
  const char* env = std::getenv("CONCORDANCE_TOLERANCE");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  try {
    std::size_t used = 0;
    const double value = std::stod(env, &used);
    if (used != std::string(env).size() || !(value > 0.0)) throw std::invalid_argument(env);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("CONCORDANCE_TOLERANCE must be a positive number, got '") + env + "'");
  }
}

std::string format_theta(double theta) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(12) << theta;
  return os.str();
}

// Output goes to the named file, or stdout when the path is empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw Error("cannot open '" + path + "' for writing");
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int run_invariants(const std::string& text, std::size_t points, double tolerance) {
  const KnotExpr e = KnotExpr::parse(text);
  const LaurentPoly delta = alexander_of(e);
  std::cout << "expression: " << e.to_string() << "\n";
  std::cout << "alexander: " << delta << "\n";
  std::cout << "alexander_at_minus_one: " << delta.eval_int(-1) << "\n";
  std::cout << "arf: " << arf_of(e) << "\n";
  std::cout << "signature:\n";
  bool vanishes = true;
  for (double theta : default_theta_grid(points)) {
    std::cout << "  " << format_theta(theta) << ": ";
    try {
      const int sigma = signature_of(e, theta, tolerance);
      vanishes = vanishes && sigma == 0;
      std::cout << sigma << "\n";
    } catch (const SingularEvaluation&) {
      std::cout << "singular\n";
    }
  }
  std::cout << "signature_vanishes_on_grid: " << (vanishes ? "true" : "false") << "\n";
  return kExitOk;
}

int run_surgery_curves(const std::string& text) {
  const SeifertMatrix v = SeifertMatrix::parse(text);
  const auto classes = surgery_curve_classes(v);
  for (const auto& c : classes) std::cout << vector_to_string(c.coords) << "\n";
  if (classes.empty()) std::cout << "none\n";
  std::cout << "algebraically_slice: " << (classes.empty() ? "false" : "true") << "\n";
  return kExitOk;
}

int run_lattice(const std::string& matrix_text, const std::string& vector_text) {
  const IntMatrix m = IntMatrix::parse(matrix_text);
  const IntVector v = parse_vector(vector_text);
  const auto witness = colspace_member(m, v);
  std::cout << "member: " << (witness ? "true" : "false") << "\n";
  if (witness) std::cout << "witness: " << vector_to_string(*witness) << "\n";
  return kExitOk;
}

int run_member(const std::vector<std::string>& generator_texts, const std::string& word_text) {
  std::vector<std::string> all = generator_texts;
  all.push_back(word_text);
  const Alphabet alphabet = Alphabet::discover(all);
  std::vector<Word> generators;
  for (const auto& g : generator_texts) generators.push_back(alphabet.parse(g));
  const Word w = alphabet.parse(word_text);
  const FoldedGraph graph = subgroup_graph(generators);
  std::cout << "graph_vertices: " << graph.vertex_count() << "\n";
  std::cout << "graph_edges: " << graph.edges().size() << "\n";
  std::cout << "member: " << (member(graph, w) ? "true" : "false") << "\n";
  return kExitOk;
}

int run_image_check() {
  const Alphabet target = Alphabet::complement();
  const Endomorphism phi = surface_to_complement_map();
  const bool in_image = eta1_membership_check();
  std::cout << "phi(z): " << target.format(phi.images()[0]) << "\n";
  std::cout << "phi(y): " << target.format(phi.images()[1]) << "\n";
  std::cout << "eta1: " << target.format(eta1_word()) << "\n";
  std::cout << "alpha^2_in_image: " << (in_image ? "true" : "false") << "\n";
  std::cout << "eta1_in_image: " << (member(subgroup_graph(phi.images()), eta1_word()) ? "true" : "false") << "\n";
  return kExitOk;
}

int run_verify(const std::string& k_text, const std::string& out, const std::string& format, std::size_t points,
               double tolerance) {
  const KnotExpr k = KnotExpr::parse(k_text);
  const CounterexampleReport report = run_counterexample(k, default_theta_grid(points), tolerance);
  Sink sink(out);
  sink.stream() << (format == "records" ? report.to_records() : report.to_text());
  const bool pass = report.arf_nonzero_both() && report.signature_nonvanishing_both();
  return pass ? kExitOk : kExitComputation;
}

int run_sigplot(const std::string& text, std::size_t points, const std::string& out, double tolerance) {
  const KnotExpr e = KnotExpr::parse(text);
  Sink sink(out);
  std::ostream& os = sink.stream();
  os << "theta,sigma,status\n";
  for (double theta : default_theta_grid(points)) {
    os << format_theta(theta) << ',';
    try {
      os << signature_of(e, theta, tolerance) << ",regular\n";
    } catch (const SingularEvaluation&) {
      os << ",singular\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants for knot concordance: Alexander polynomials, Arf invariants,\n"
               "Levine-Tristram signatures, satellite calculus and free-group image checks."};
  app.name("concordance");
  app.footer(std::string(kGrammar) + "\n" + kReportFields);
  app.require_subcommand(1);

  std::optional<double> tolerance_flag;
  std::size_t points = 64;

  std::string expr_text;
  auto* invariants = app.add_subcommand("invariants", "Alexander polynomial, Arf invariant and signature samples");
  invariants->add_option("expr", expr_text, "knot expression")->required();
  invariants->add_option("--theta-grid", points, "number of signature samples")->check(CLI::PositiveNumber);
  invariants->add_option("--tolerance", tolerance_flag, "regularity threshold for |Delta(omega)|");

  std::string matrix_text;
  auto* surgery = app.add_subcommand("surgery-curves", "primitive isotropic classes of a genus one Seifert form");
  surgery->add_option("matrix", matrix_text, "2x2 Seifert matrix, e.g. [[3,2],[1,0]]")->required();

  std::string vector_text;
  auto* lattice = app.add_subcommand("lattice", "integer column-space membership with witness");
  lattice->add_option("matrix", matrix_text, "integer matrix")->required();
  lattice->add_option("vector", vector_text, "integer vector, e.g. (1,2)")->required();

  auto* freegroup = app.add_subcommand("freegroup", "free group subgroup membership");
  freegroup->require_subcommand(1);
  // `GEN... -- WORD`: the last item is the word under test.
  std::vector<std::string> member_items;
  auto* member_cmd = freegroup->add_subcommand("member", "is WORD in the subgroup generated by GEN...");
  member_cmd->add_option("items", member_items, "GEN... -- WORD")->required();
  auto* image_check = freegroup->add_subcommand("image-check", "is alpha^2 (equivalently eta1) in the image of phi");

  std::string k_text = "trefoil";
  std::string out_path;
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "full counterexample report; exit 0 iff both pass flags hold");
  verify->add_option("--K", k_text, "infecting knot expression")->capture_default_str();
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
  verify->add_option("--theta-grid", points, "number of signature samples")->check(CLI::PositiveNumber);
  verify->add_option("--tolerance", tolerance_flag, "regularity threshold for |Delta(omega)|");

  auto* sigplot = app.add_subcommand("sigplot", "CSV theta,sigma,status over an equispaced grid");
  sigplot->add_option("expr", expr_text, "knot expression")->required();
  sigplot->add_option("--points", points, "number of grid points")->check(CLI::PositiveNumber);
  sigplot->add_option("--out", out_path, "CSV path (stdout if omitted)");
  sigplot->add_option("--tolerance", tolerance_flag, "regularity threshold for |Delta(omega)|");

  // CLI11 hands items after `--` back to the top-level app, so drop the
  // separator for `freegroup member`; the word is always the last item.
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() >= 2 && args[0] == "freegroup" && args[1] == "member") {
    std::erase(args, std::string("--"));
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return kExitUsage;
  }

  try {
    const double tolerance = tolerance_flag.value_or(default_tolerance());
    if (!(tolerance > 0.0)) throw UsageError("--tolerance must be positive");
    if (invariants->parsed()) return run_invariants(expr_text, points, tolerance);
    if (surgery->parsed()) return run_surgery_curves(matrix_text);
    if (lattice->parsed()) return run_lattice(matrix_text, vector_text);
    if (member_cmd->parsed()) {
      const std::vector<std::string> generators(member_items.begin(), member_items.end() - 1);
      return run_member(generators, member_items.back());
    }
    if (image_check->parsed()) return run_image_check();
    if (verify->parsed()) return run_verify(k_text, out_path, format, points, tolerance);
    if (sigplot->parsed()) return run_sigplot(expr_text, points, out_path, tolerance);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return kExitUsage;
  } catch (const ArityError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kGrammar;
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
