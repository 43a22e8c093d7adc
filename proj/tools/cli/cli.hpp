#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sc::cli {

// Entry point of the stream-containers tool. Returns the process exit code:
// 0 on success (or a PASS verdict), 1 on runtime failure, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Expands "prefix:local" for the built-in prefixes and resolves relative
// references ("#w", "/x", "<...>") against `base`. Absolute IRIs pass through.
// Throws std::invalid_argument for anything else.
std::string expand_iri(const std::string& value, const std::string& base = {});

}  // namespace sc::cli
