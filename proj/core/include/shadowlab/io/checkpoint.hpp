#pragma once

#include <filesystem>

#include "shadowlab/io/report.hpp"
#include "shadowlab/search.hpp"

namespace shadowlab::io {

// A checkpoint is the search frontier as JSON:
//
//   {"format": "shadowlab-frontier", "version": 1,
//    "params": {...}, "enumerate": bool, "feasible": bool,
//    "seed_bound": int, "upper_bound": int|null, "seed_witness": "hex",
//    "expansion_nodes": int,
//    "tasks": [{"root": "hex", "done": bool, "nodes": int,
//               "best": int|null, "witnesses": ["hex", ...]}, ...]}
//
// Edge strings are hexadecimal so they survive any JSON reader.

inline constexpr int kCheckpointVersion = 1;

Json frontier_to_json(const SearchFrontier& frontier);
/// Throws Error(Parse) on an unknown format or version, or a malformed document.
SearchFrontier frontier_from_json(const Json& doc);

void save_frontier(const SearchFrontier& frontier, const std::filesystem::path& path);
SearchFrontier load_frontier(const std::filesystem::path& path);

}  // namespace shadowlab::io
