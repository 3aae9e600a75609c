#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "morse/gradient.hpp"
#include "morse/poset.hpp"

namespace morse {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "morse";
inline constexpr const char* kToolVersion = "1.0.0";

/// Serializable mirror of a labelled poset. family and params record how the
/// poset was generated so later commands can rebuild case-study data.
struct PosetDocument {
  std::string family;
  Json params = Json::object();
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<Label> labels;
  std::optional<std::string> bottom;
  std::optional<std::string> top;

  static PosetDocument from_poset(const LabelledPoset& lp, std::string family = "",
                                  Json params = Json::object());
  LabelledPoset to_poset() const;

  Json to_json() const;
  static PosetDocument from_json(const Json& j);
  std::string serialize() const;
  static PosetDocument parse(const std::string& text);
};

/// Matched pairs (lower, upper) with every cell written as the element ids
/// of its chain, bottom to top.
struct MatchingDocument {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> pairs;

  static MatchingDocument from_matching(const Poset& p, const FacePoset& fp, const Matching& m);
  /// Throws on unknown ids, on cells outside fp, and on non-incidences.
  Matching to_matching(const Poset& p, const FacePoset& fp) const;
  /// Cell pairs without the incidence check, e.g. critical pairs to cancel.
  std::vector<std::pair<CellId, CellId>> to_pairs(const Poset& p, const FacePoset& fp) const;

  Json to_json() const;
  static MatchingDocument from_json(const Json& j);
  std::string serialize() const;
  static MatchingDocument parse(const std::string& text);
};

/// Element ids of a cell, bottom to top.
std::vector<std::string> cell_ids(const Poset& p, const FacePoset& fp, CellId c);
/// Cell with the given element ids (any order).
CellId cell_from_ids(const Poset& p, const FacePoset& fp, const std::vector<std::string>& ids);

/// Report skeleton: tool, version, command and the full parameter set.
Json make_report(const std::string& command, const Json& params);

/// Hasse diagram with edges labelled by their labels.
std::string hasse_dot(const LabelledPoset& lp);
/// P^M: one edge per gradient path, matched edges drawn bold and reversed.
std::string pm_dot(const Poset& p, const FacePoset& fp, const MultiGraphFacePoset& pm,
                   const Matching& pm_matching = {});

std::string format_label(const Label& l);

}  // namespace morse
