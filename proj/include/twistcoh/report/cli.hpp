#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/report/pipeline.hpp"
#include "twistcoh/report/report_io.hpp"

namespace twistcoh {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitResource = 2 };

/// Command-line front end. Returns 0 on success, 1 on input errors and 2
/// when a resource cap is hit; diagnostics go to `err`.
inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of classifying spaces of twisted loop groups"};
  std::string family;
  int rank = 0;
  std::string automorphism = "identity";
  int truncation = kDefaultTruncation;
  std::string format = "text";
  bool check = false;
  unsigned workers = 1;
  std::size_t max_elements = kDefaultElementCap;
  std::string out_file;

  app.add_option("--type", family, "Cartan family")->required()->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  app.add_option("--rank", rank, "rank")->required();
  app.add_option("--auto", automorphism, "identity, flip, triality, triality2 or perm=<images>");
  app.add_option("--truncate", truncation, "maximal cohomological degree")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check", check, "also run the brute-force invariant oracle when within its guard");
  app.add_option("--workers", workers, "threads for the super-Molien sum")->check(CLI::PositiveNumber);
  app.add_option("--max-elements", max_elements, "group enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--out", out_file, "write the report to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    TwistSpec spec;
    spec.cartan_type = make_cartan_type(family.at(0), rank);
    spec.automorphism = parse_automorphism_spec(automorphism);
    spec.truncation = truncation;
    spec.run_oracle = check;
    spec.workers = workers;
    spec.element_cap = max_elements;
    const TwistReport report = compute(spec);
    const std::string text = format == "json" ? to_json_string(report) : to_text(report);
    if (out_file.empty()) {
      out << text;
    } else {
      std::ofstream f(out_file, std::ios::binary);
      if (!f) {
        err << "error: cannot open " << out_file << " for writing\n";
        return kExitInput;
      }
      f << text;
    }
    return kExitOk;
  } catch (const ResourceCapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace twistcoh
