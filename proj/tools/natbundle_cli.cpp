// natbundle: hunt for natural-cohomology bundles on P1 x P1 and inspect them.
//
// Exit codes:
//   0  success
//   1  internal error
//   2  bad command line
//   3  unreadable or malformed input file
//   4  invalid request
//   5  unsupported case (alpha and beta both integral)
//   6  genericity exhausted
//   7  verification failed
//   8  oracle inconclusive
//   9  input is not a valid bundle or cocycle

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "natbundle/errors.hpp"
#include "natbundle/hunter.hpp"
#include "natbundle/json_io.hpp"

namespace nb = natbundle;

namespace {

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kParse = 3,
  kInvalid = 4,
  kUnsupported = 5,
  kExhausted = 6,
  kVerification = 7,
  kOracle = 8,
  kNotABundle = 9,
};

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto parse_file(const std::string& path, F parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const nb::ParseError& e) {
    throw nb::ParseError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << text << '\n';
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int cmd_hunt(const std::string& alpha, const std::string& beta, const std::string& gamma, long rank,
             std::uint64_t seed, long window, long bound, long max_resamples, const std::string& out) {
  nb::HuntRequest req;
  try {
    req.params = {nb::parse_rational(alpha), nb::parse_rational(beta), nb::parse_rational(gamma), rank};
  } catch (const nb::ParseError& e) {
    throw nb::InvalidRequest(e.what());
  }
  req.seed = seed;
  req.verify_window = window;
  req.coeff_bound = bound;
  req.max_resamples = max_resamples;
  const nb::Certificate cert = nb::hunt(req);
  write_output(out, nb::certificate_to_json(cert));
  std::cerr << "F1=" << cert.desc.f1.str() << " F2=" << cert.desc.f2.str() << " resamples=" << cert.resample_count
            << " natural on [-" << window << "," << window << "]^2\n";
  return kOk;
}

int cmd_table(const std::string& cert_path, long window, const std::string& format, bool oracle) {
  const nb::Certificate cert = parse_file(cert_path, nb::certificate_from_json);
  const nb::CohomologyTable t = nb::cohomology_table(cert.desc, nb::TableWindow::square(window));
  std::map<std::pair<long, long>, bool> agree;
  if (oracle)
    for (const auto& [key, c] : t.cells) {
      const nb::Cohomology3 o = nb::cech_oracle_h(cert.desc, key.first, key.second);
      agree[key] = o.h0 == c.h0 && o.h1 == c.h1 && o.h2 == c.h2;
    }
  std::size_t agreeing = 0;
  for (const auto& [key, ok] : agree) agreeing += ok;

  if (format == "csv") {
    std::istringstream lines(nb::format_table_csv(t));
    std::string line;
    std::getline(lines, line);
    std::cout << line << (oracle ? ",oracle" : "") << '\n';
    for (const auto& [key, c] : t.cells) {
      std::getline(lines, line);
      std::cout << line;
      if (oracle) std::cout << ',' << (agree[key] ? "agree" : "DISAGREE");
      std::cout << '\n';
    }
  } else if (format == "json") {
    std::cout << nb::table_to_json(t) << '\n';
    if (oracle) std::cerr << "oracle agreement: " << agreeing << "/" << agree.size() << " cells\n";
  } else {
    std::cout << nb::format_table_text(t);
    if (oracle) {
      std::cout << "oracle agreement: " << agreeing << "/" << agree.size() << " cells\n";
      for (const auto& [key, ok] : agree)
        if (!ok) std::cout << "  disagreement at (" << key.first << "," << key.second << ")\n";
    }
  }
  return oracle && agreeing != agree.size() ? kVerification : kOk;
}

int cmd_split(const std::string& path) {
  const nb::LaurentMatrix m = parse_file(path, nb::matrix_from_json);
  const nb::SplittingType s = nb::splitting_from_transition(m);
  const bool top = s == nb::natural_type(s.rank(), s.degree());
  std::cout << s.str() << " (HN-top: " << yes_no(top) << ")\n";
  return kOk;
}

int cmd_ext_classify(const std::string& path) {
  const nb::ExtCocycle e = parse_file(path, nb::cocycle_from_json);
  std::cout << nb::splitting_of_extension(e).str() << " (HN-top: " << yes_no(nb::is_hn_top(e)) << ")\n";
  for (const nb::TwistRank& t : nb::connecting_ranks(e))
    std::cout << "  m=" << t.m << ": rank " << t.rank << " of " << t.rows << "x" << t.cols
              << (t.maximal() ? " (maximal)" : " (defective)") << '\n';
  return kOk;
}

int cmd_verify(const std::string& path, long window, bool oracle) {
  const nb::Certificate cert = parse_file(path, nb::certificate_from_json);
  const nb::VerificationReport rep = nb::verify_certificate(cert, window, oracle);
  if (rep.pass) {
    std::cout << "PASS: natural cohomology on [-" << window << "," << window << "]^2"
              << (oracle ? " (oracle agrees)" : "") << '\n';
    return kOk;
  }
  std::cout << "FAIL at stage " << rep.stage << '\n';
  for (const std::string& f : rep.failures) std::cout << "  " << f << '\n';
  return kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Natural-cohomology bundles on P1 x P1"};
  app.require_subcommand(1);

  std::string alpha, beta, gamma, out;
  long rank = 0;
  std::uint64_t seed = 0;
  long window = 6;
  long bound = 10;
  long max_resamples = 20;
  auto* hunt = app.add_subcommand("hunt", "Construct a bundle with the given Hilbert polynomial");
  hunt->add_option("--alpha", alpha, "alpha as p/q")->required();
  hunt->add_option("--beta", beta, "beta as p/q")->required();
  hunt->add_option("--gamma", gamma, "gamma as p/q")->required();
  hunt->add_option("--rank", rank, "bundle rank")->required();
  hunt->add_option("--seed", seed, "random seed")->capture_default_str();
  hunt->add_option("--window", window, "verification window half-width")->capture_default_str();
  hunt->add_option("--bound", bound, "coefficient bound for extension data")->capture_default_str();
  hunt->add_option("--max-resamples", max_resamples, "extra draws allowed")->capture_default_str();
  hunt->add_option("--out", out, "certificate file (default stdout)");

  std::string cert_path, format = "text";
  bool oracle = false;
  auto* table = app.add_subcommand("table", "Print the cohomology table of a certificate");
  table->add_option("--cert", cert_path, "certificate JSON")->required();
  table->add_option("--window", window, "half-width")->capture_default_str();
  table->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  table->add_flag("--oracle", oracle, "compare every cell with the Cech oracle");

  std::string matrix_path;
  auto* split = app.add_subcommand("split", "Splitting type of a transition matrix");
  split->add_option("--matrix", matrix_path, "matrix JSON")->required();

  std::string cocycle_path;
  auto* ext = app.add_subcommand("ext-classify", "Classify an extension class");
  ext->add_option("--cocycle", cocycle_path, "cocycle JSON")->required();

  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("--cert", cert_path, "certificate JSON")->required();
  verify->add_option("--window", window, "half-width")->capture_default_str();
  verify->add_flag("--oracle", oracle, "also compare against the Cech oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (window < 0) {
    std::cerr << "error: window must be non-negative\n";
    return kUsage;
  }

  try {
    if (*hunt) return cmd_hunt(alpha, beta, gamma, rank, seed, window, bound, max_resamples, out);
    if (*table) return cmd_table(cert_path, window, format, oracle);
    if (*split) return cmd_split(matrix_path);
    if (*ext) return cmd_ext_classify(cocycle_path);
    if (*verify) return cmd_verify(cert_path, window, oracle);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const nb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const nb::InvalidRequest& e) {
    std::cerr << "invalid-request: " << e.what() << '\n';
    return kInvalid;
  } catch (const nb::UnsupportedCase& e) {
    std::cerr << "unsupported-case: " << e.what() << '\n';
    return kUnsupported;
  } catch (const nb::GenericityExhausted& e) {
    std::cerr << "genericity-exhausted: " << e.what() << '\n';
    return kExhausted;
  } catch (const nb::VerificationFailed& e) {
    std::cerr << "verification-failed: " << e.what() << '\n';
    return kVerification;
  } catch (const nb::OracleInconclusive& e) {
    std::cerr << "oracle-inconclusive: " << e.what() << '\n';
    return kOracle;
  } catch (const nb::Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kNotABundle;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
