#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace projsys::cli {

inline constexpr int kSchemaVersion = 1;

/// Rows for --format tsv; the column order is part of the interface.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    nlohmann::json result;
    Table table;
    std::vector<std::string> citations;
    int exit_code = 0;
};

/// Parses argv, runs one subcommand and writes its output. Returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace projsys::cli
