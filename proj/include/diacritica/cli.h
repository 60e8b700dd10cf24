// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIACRITICA_CLI_H_
#define DIACRITICA_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace diacritica {

inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;     // bad input data, module errors
inline constexpr int kExitNoInput = 2;   // missing/unreadable input file

// Entry point of the `diacritica` executable; args exclude argv[0].
// Regular output goes to `out`, diagnostics and manifests to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace diacritica

#endif  // DIACRITICA_CLI_H_
