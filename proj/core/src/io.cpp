#include "uglov/io.hpp"

#include <charconv>
#include <string>

#include <json.hpp>

#include "uglov/error.hpp"

namespace uglov {

namespace {

using nlohmann::json;

json parse(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error&) {
    throw InputError(std::string(what) + ": not valid JSON");
  }
}

int as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw InputError(field + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < -1'000'000'000LL || x > 1'000'000'000LL) throw InputError(field + ": integer out of range");
  return static_cast<int>(x);
}

std::vector<int> as_ints(const json& v, const std::string& field) {
  if (!v.is_array()) throw InputError(field + ": expected an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(as_int(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

Partition as_partition(std::vector<int> parts, const std::string& field) {
  try {
    return Partition(std::move(parts));
  } catch (const InputError& err) {
    throw InputError(field + ": " + err.what());
  }
}

json ints_json(std::span<const int> v) { return json(std::vector<int>(v.begin(), v.end())); }

}  // namespace

std::string to_json(const Partition& p) { return ints_json(p.parts()).dump(); }

std::string to_json(const Multipartition& lambda) {
  json out = json::array();
  for (const auto& p : lambda.components()) out.push_back(ints_json(p.parts()));
  return out.dump();
}

std::string to_json(const Charge& charge) { return json{{"s", charge.s}, {"e", charge.e}}.dump(); }

std::string to_json(const Node& node) { return json::array({node.row, node.col, node.comp}).dump(); }

std::string to_json(const std::vector<int>& ints) { return json(ints).dump(); }

std::string to_json(const AffineElement& sigma) {
  return json{{"perm", ints_json(sigma.perm())}, {"shift", ints_json(sigma.shift())}}.dump();
}

std::string to_display(const Multipartition& lambda) {
  std::string out;
  bool first_comp = true;
  for (const auto& p : lambda.components()) {
    if (!first_comp) out += '|';
    first_comp = false;
    if (p.empty()) {
      out += '-';
      continue;
    }
    bool first_part = true;
    for (int v : p.parts()) {
      if (!first_part) out += '.';
      first_part = false;
      out += std::to_string(v);
    }
  }
  return out;
}

std::string to_display(const Node& node) {
  return "(" + std::to_string(node.row) + "," + std::to_string(node.col) + "," + std::to_string(node.comp) + ")";
}

Multipartition multipartition_from_json(std::string_view text) {
  const auto v = parse(text, "multipartition");
  if (!v.is_array() || v.empty()) throw InputError("multipartition: expected a non-empty array of arrays");
  std::vector<Partition> comps;
  for (std::size_t c = 0; c < v.size(); ++c) {
    const std::string field = "multipartition component " + std::to_string(c + 1);
    comps.push_back(as_partition(as_ints(v[c], field), field));
  }
  return Multipartition(std::move(comps));
}

Multipartition multipartition_from_display(std::string_view text) {
  std::vector<Partition> comps;
  std::size_t start = 0;
  for (int c = 1;; ++c) {
    const auto bar = text.find('|', start);
    const auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    const std::string field = "multipartition component " + std::to_string(c);
    if (piece == "-") {
      comps.emplace_back();
    } else {
      if (piece.empty()) throw InputError(field + ": empty; write '-' for the empty partition");
      std::vector<int> parts;
      std::size_t pos = 0;
      while (pos <= piece.size()) {
        const auto dot = piece.find('.', pos);
        const auto tok = piece.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
          throw InputError(field + ": bad part '" + std::string(tok) + "'");
        parts.push_back(value);
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
      }
      comps.push_back(as_partition(std::move(parts), field));
    }
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Multipartition(std::move(comps));
}

Multipartition parse_multipartition(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '[') return multipartition_from_json(text);
  return multipartition_from_display(text);
}

Charge charge_from_json(std::string_view text) {
  const auto v = parse(text, "charge");
  if (!v.is_object() || !v.contains("s") || !v.contains("e")) throw InputError("charge: expected {\"s\":[...],\"e\":n}");
  auto s = as_ints(v["s"], "charge.s");
  const int e = as_int(v["e"], "charge.e");
  if (e < 2) throw InputError("charge.e: must be at least 2");
  if (s.empty()) throw InputError("charge.s: must be non-empty");
  return Charge(std::move(s), e);
}

Node node_from_json(std::string_view text) {
  const auto v = as_ints(parse(text, "node"), "node");
  if (v.size() != 3) throw InputError("node: expected [row,col,comp]");
  if (v[0] < 1 || v[1] < 1 || v[2] < 1) throw InputError("node: entries must be positive");
  return {v[0], v[1], v[2]};
}

std::vector<int> residues_from_json(std::string_view text, int e) {
  auto g = as_ints(parse(text, "residues"), "residues");
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g[k] < 0 || g[k] >= e) throw InputError("residues[" + std::to_string(k) + "]: outside [0, e)");
  return g;
}

AffineElement affine_from_json(std::string_view text) {
  const auto v = parse(text, "affine element");
  if (!v.is_object() || !v.contains("perm")) throw InputError("affine element: expected {\"perm\":[...],\"shift\":[...]}");
  auto perm = as_ints(v["perm"], "perm");
  auto shift = v.contains("shift") ? as_ints(v["shift"], "shift") : std::vector<int>(perm.size(), 0);
  return AffineElement(std::move(perm), std::move(shift));
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  for (int k = 1;; ++k) {
    const auto comma = text.find(',', pos);
    auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    tok = b == std::string_view::npos ? std::string_view{} : tok.substr(b, e - b + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InputError("entry " + std::to_string(k) + ": bad integer '" + std::string(tok) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace uglov
