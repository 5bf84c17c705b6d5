// Copyright 2026 The nary-kernel Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nary: checks a source file against the prelude and reports each
// declaration as OK, UNSOLVED or TYPEERROR.

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

#include "nary/driver.h"

int main(int argc, char** argv) {
  CLI::App app{"Checks nary-kernel source files"};
  std::string file;
  std::string prelude = NARY_PRELUDE_PATH;
  bool no_prelude = false;
  nary::Options opts;
  app.add_option("file", file, "Source file to check")->required();
  app.add_option("--prelude", prelude, "Prelude file")->capture_default_str();
  app.add_flag("--no-prelude", no_prelude, "Do not load the prelude");
  app.add_flag("--trace-unify", opts.trace_unify,
               "Print one line per unifier rule application");
  app.add_flag("--print-metas", opts.print_metas,
               "Print every metavariable with its solution");
  app.add_option("--nf", opts.nf, "Print the normal form of a definition");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!no_prelude) opts.prelude = prelude;

  try {
    nary::Session session;
    if (!nary::load_prelude(session, opts, std::cout)) return 1;
    return nary::check_source(session, nary::read_file(file), opts,
                              std::cout);
  } catch (const std::runtime_error& e) {
    std::cerr << "nary: " << e.what() << "\n";
    return 2;
  }
}
