#pragma once

// Bundled knot-table loading: one record per line, `name<TAB>pd`, with `#`
// starting a comment.  The default path can be overridden with the
// CROWELL_TABLE environment variable.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace crowell {

struct TableEntry {
    std::string name;
    std::string pd;

    bool operator==(const TableEntry&) const = default;
};

inline std::string default_table_path() {
    if (const char* env = std::getenv("CROWELL_TABLE")) {
        if (*env != '\0') return env;
    }
    return "data/knots_upto9.tsv";
}

inline std::vector<TableEntry> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::NotFound, "cannot open table file: " + path);
    std::vector<TableEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
            throw Error(ErrorKind::MalformedToken,
                        path + ":" + std::to_string(lineno) + ": expected name<TAB>pd");
        out.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return out;
}

inline std::vector<TableEntry> load_table() { return load_table(default_table_path()); }

inline const TableEntry& find_knot(const std::vector<TableEntry>& table, const std::string& name) {
    for (const auto& e : table)
        if (e.name == name) return e;
    throw Error(ErrorKind::NotFound, "knot not in table: " + name);
}

}  // namespace crowell
