// dindex: command-line front end for the Dirac index toolkit.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dix/io.hpp"
#include "dix/springer.hpp"
#include "dix/su_n1.hpp"
#include "dix/suites.hpp"
#include "dix/weyl_action.hpp"

using namespace dix;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// DIRAC_MAX_RANK, when set, replaces the rank cap.
std::optional<int> env_rank_cap() {
  const char* v = std::getenv("DIRAC_MAX_RANK");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(v, &used);
    if (used != std::string(v).size() || cap < 1) throw std::invalid_argument(v);
    return cap;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, std::string("DIRAC_MAX_RANK is not a positive integer: ") + v);
  }
}

Limits limits_or(Limits fallback) {
  if (auto cap = env_rank_cap()) fallback.max_rank = *cap;
  return fallback;
}

std::vector<Family> parse_families(const std::string& text) {
  if (text == "all") return springer::all_families();
  std::vector<Family> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(springer::parse_family(item));
  return out;
}

// Poly output: "text" is the plain rendering, otherwise an emitter format.
std::string render(const MultiPoly& p, const std::string& format, int indent) {
  if (format == "text") return to_string(p);
  return io::emit(p, io::parse_format(format), indent);
}

IndexFamily chamber_family(const GroupId& g, int chamber, const Limits& limits) {
  if (g.family == Family::SU && g.q == 1 && g.p >= 2) {
    if (chamber < 0 || chamber > g.p) throw Error(Errc::IndexOutOfRange, "chamber out of range");
    su_n1::datum(g.p, limits);
    return su_n1::chamber_family(g.p, chamber);
  }
  const RootDatum d = build_root_datum(g, limits);
  const auto reps = chamber_representatives(d, limits);
  if (chamber < 0 || chamber >= static_cast<int>(reps.size())) {
    throw Error(Errc::IndexOutOfRange, "group has " + std::to_string(reps.size()) + " chambers");
  }
  return discrete_series_family(reps[chamber], d);
}

bool is_usage(Errc c) {
  switch (c) {
    case Errc::UnsupportedFormat:
    case Errc::UnknownSuite:
    case Errc::ParseError:
    case Errc::IllegalParams:
    case Errc::UnsupportedFamily:
    case Errc::IndexOutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dirac index, character and Springer computations"};
  app.require_subcommand(1);
  int indent = -1;
  app.add_option("--indent", indent, "JSON indentation (compact when negative)");

  auto* table = app.add_subcommand("springer-table", "Springer correspondence table");
  std::string families = "all", table_format = "csv";
  int table_max = 5;
  table->add_option("--families", families, "all, or a comma list of su, so-even-odd, sp-real, "
                                            "sp-pq, so-even-even, so-star");
  table->add_option("--max", table_max, "Largest parameter")->check(CLI::Range(1, 12));
  table->add_option("--format", table_format, "json, csv or latex");

  auto* ipoly = app.add_subcommand("index-poly", "Index polynomial of a discrete series family");
  std::string group;
  int chamber = 0;
  std::string poly_format = "text";
  ipoly->add_option("--group", group, "E.g. SU(2,1), Sp(4,R), SOe(4,5)")->required();
  ipoly->add_option("--chamber", chamber, "Chamber index (SU(n,1): i with lambda in D_i)");
  ipoly->add_option("--format", poly_format, "text, json or latex");

  auto* cpoly = app.add_subcommand("char-poly", "Character polynomial of SU(n,1) in D_i");
  int n = 0, i = 0;
  cpoly->add_option("--n", n)->required();
  cpoly->add_option("--i", i)->required();
  cpoly->add_option("--format", poly_format, "text, json or latex");

  auto* gcd = app.add_subcommand("gcd", "gcd of the character and index polynomials of SU(n,1)");
  gcd->add_option("--n", n)->required();
  gcd->add_option("--i", i)->required();
  gcd->add_option("--format", poly_format, "text, json or latex");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all", verify_format = "text";
  int verify_max = 3;
  verify->add_option("--suite", suite, "all, sl2, translation, ind-eq-char, harmonic, su-n1, springer");
  verify->add_option("--max", verify_max, "Parameter bound for the springer suite")
      ->check(CLI::Range(1, 12));
  verify->add_option("--format", verify_format, "text, json or csv");

  auto* emit = app.add_subcommand("emit", "Serialize one object");
  std::string object, emit_format = "json";
  emit->add_option("--object", object, "springer-row, index-family, index, index-poly")
      ->required()
      ->check(CLI::IsMember({"springer-row", "index-family", "index", "index-poly"}));
  emit->add_option("--group", group)->required();
  emit->add_option("--chamber", chamber);
  emit->add_option("--format", emit_format, "json, csv or latex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) {
      const Limits limits = limits_or(springer::table_limits(table_max));
      const auto rows = springer::springer_table(table_max, parse_families(families), limits,
                                                 kernels::Exec::Parallel);
      std::cout << io::emit(rows, io::parse_format(table_format), indent);
      if (table_format == "json") std::cout << '\n';
    } else if (*ipoly) {
      const Limits limits = limits_or({});
      const GroupId g = parse_group(group);
      const RootDatum d = build_root_datum(g, limits);
      std::cout << render(index_polynomial(chamber_family(g, chamber, limits), d), poly_format, indent)
                << '\n';
    } else if (*cpoly) {
      std::cout << render(su_n1::character_polynomial(n, i), poly_format, indent) << '\n';
    } else if (*gcd) {
      std::cout << render(su_n1::gcd_with_index(n, i), poly_format, indent) << '\n';
    } else if (*verify) {
      SuiteOptions opt;
      opt.springer_max = verify_max;
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector{suite};
      bool all_pass = true;
      for (const auto& name : names) {
        const SuiteReport rep = run_suite(name, opt);
        all_pass = all_pass && rep.all_pass;
        if (verify_format == "text") {
          for (const auto& c : rep.cases) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << rep.suite << ' ' << c.id;
            if (!c.detail.empty()) std::cout << "  " << c.detail;
            std::cout << '\n';
          }
          std::cout << rep.suite << ": " << (rep.all_pass ? "all passed" : "FAILED") << '\n';
        } else {
          std::cout << io::emit(rep, io::parse_format(verify_format), indent);
          if (verify_format == "json") std::cout << '\n';
        }
      }
      return all_pass ? 0 : kExitFail;
    } else if (*emit) {
      const io::Format f = io::parse_format(emit_format);
      const Limits limits = limits_or(springer::table_limits(0));
      const GroupId g = parse_group(group);
      if (object == "springer-row") {
        std::cout << io::emit(springer::springer_row(g, limits), f, indent) << '\n';
      } else {
        const RootDatum d = build_root_datum(g, limits);
        const IndexFamily fam = chamber_family(g, chamber, limits);
        if (object == "index-family") {
          std::cout << io::emit(fam, f, indent) << '\n';
        } else if (object == "index") {
          std::cout << io::emit(evaluate_index(fam, fam.base, d), f, indent) << '\n';
        } else {
          std::cout << io::emit(index_polynomial(fam, d), f, indent) << '\n';
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "dindex: " << e.what() << '\n';
    return is_usage(e.code()) ? kExitUsage : kExitFail;
  }
  return 0;
}
