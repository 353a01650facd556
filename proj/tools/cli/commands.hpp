#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bchrom::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kRefused = 3,
  kInternalError = 4,
};

/// Entry point of the `bchrom` tool; `args` excludes the program name.
///
///     bchrom analyze  <graph> [--chi-b] [--oracle] [--json] [--check-set L,..] [--batch DIR]
///     bchrom color    <graph> <out|-> [--oracle] [--trace]
///     bchrom verify   <graph> <coloring>
///     bchrom generate --n N --min-girth G --edges E --seed S <out|->
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bchrom::cli
