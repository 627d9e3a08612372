#pragma once

#include "veer/homology.hpp"
#include "veer/montesinos.hpp"
#include "veer/taut.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace veer {

struct entry_stats_record {
    long long tets = 0, blue = 0, red = 0;
    int cusps = 0;
    std::vector<int> ladderpoles; // per cusp
    abelian_group h1;
    bool doubled_edge = false;
    bool triangles = false;
};

struct census_entry {
    int line_no = 0;
    std::string raw;
    std::string isosig;
    std::string angles;
    std::optional<entry_stats_record> stats; // memoized by entry_stats
    std::optional<std::string> error;        // parse or validation failure
};

struct census_load_result {
    std::vector<census_entry> entries; // well-formed lines
    std::vector<census_entry> bad;     // flagged lines, with error set
};

census_load_result load_census(std::istream& in);
census_load_result load_census_file(const std::string& path);

const entry_stats_record& entry_stats(census_entry& e); // computes and caches

struct match_options {
    montesinos_params p;
    int h1_rank = -1;            // expected free rank; -1 = number of predicted red... must be supplied
    bool allow_doubled = false;  // target construction has a doubled dual-graph pair
    bool allow_triangles = false;
};

struct match_report {
    montesinos_params p;
    triangulation_stats predicted;
    struct candidate {
        std::string raw;
        std::vector<std::pair<std::string, bool>> trail; // (filter, passed)
        std::string eliminated_by;                       // empty if survivor
    };
    std::vector<candidate> candidates;
    std::vector<std::string> selected; // surviving raw strings
};

match_report match(const match_options& opt, std::vector<census_entry>& census);

} // namespace veer
