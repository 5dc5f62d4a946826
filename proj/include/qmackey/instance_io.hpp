/** @file instance_io.hpp
 *  @brief JSON instance files.
 *
 *  {
 *    "name": "...", "seed": 20240601,
 *    "kind": "function_algebra" | "group_algebra" | "raw_hopf",
 *    "base":   {"order": n, "table": [[...]]}            (group kinds)
 *              {"dim": d, "mult": [[i,j,c,x]...], "unit": [...],
 *               "comult": [[i,j,k,x]...], "counit": [...],
 *               "antipode": [[row,col,x]...], "star": [[row,col,x]...],
 *               "haar": [...]}                           (raw_hopf; haar optional)
 *    "lambda": {"order": m, "table": [[...]]},
 *    "action": [perm per element]   or   [[[row,col,x]...] per element] for raw_hopf
 *  }
 *  Scalars x are numbers or [re, im] pairs.
 */
#pragma once

#include <memory>
#include <string>

#include "qmackey/semidirect.hpp"

namespace qm {

struct InstanceSpec {
  std::string name;
  std::string kind;
  HopfPtr base;
  GroupPtr base_group;  // null for raw_hopf
  GroupPtr lambda;
  std::vector<std::vector<int>> perms;  // group kinds
  std::vector<Mat> matrices;            // raw_hopf
  std::uint64_t seed = 0;
  bool has_seed = false;
};

/// Parses without checking the Hopf axioms; throws ParseError or NotAGroup.
InstanceSpec parse_instance_text(const std::string& text);
InstanceSpec parse_instance_file(const std::string& path);

/// Checks axioms and the action, then builds the instance; throws ValidationError and friends.
std::unique_ptr<SemidirectInstance> make_instance(const InstanceSpec& spec);
std::unique_ptr<SemidirectInstance> load_instance(const std::string& path);

}  // namespace qm
