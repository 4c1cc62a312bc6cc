#pragma once

// Canonical textual encodings.
//
//   multipartition  JSON  [[5,5,3,1],[3,1]]        display  5.5.3.1|3.1  ("-" = ∅)
//   charge          JSON  {"s":[2,0],"e":4}
//   node            JSON  [1,4,1]                  display  (1,4,1)
//   residues        JSON  [2,0,3]
//   affine element  JSON  {"perm":[2,1],"shift":[0,1]}
//
// All parse functions throw InputError naming the offending field.

#include <string>
#include <string_view>
#include <vector>

#include "uglov/affine.hpp"
#include "uglov/types.hpp"

namespace uglov {

std::string to_json(const Partition& p);
std::string to_json(const Multipartition& lambda);
std::string to_json(const Charge& charge);
std::string to_json(const Node& node);
std::string to_json(const std::vector<int>& ints);
std::string to_json(const AffineElement& sigma);

std::string to_display(const Multipartition& lambda);
std::string to_display(const Node& node);

Multipartition multipartition_from_json(std::string_view text);
Multipartition multipartition_from_display(std::string_view text);
/// Either encoding; JSON when the text starts with '['.
Multipartition parse_multipartition(std::string_view text);

Charge charge_from_json(std::string_view text);
Node node_from_json(std::string_view text);
/// Array of residues, each checked to lie in [0, e).
std::vector<int> residues_from_json(std::string_view text, int e);
AffineElement affine_from_json(std::string_view text);

/// "3,0,7,3" -> {3,0,7,3}. Whitespace around entries is ignored.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace uglov
