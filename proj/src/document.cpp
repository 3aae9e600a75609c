#include "morse/document.hpp"

#include <algorithm>
#include <sstream>

namespace morse {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string cell_name(const Poset& p, const FacePoset& fp, CellId c) {
  const auto ids = cell_ids(p, fp, c);
  std::string s = "{";
  for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? " < " : "") + ids[k];
  return s + "}";
}

}  // namespace

std::string format_label(const Label& l) {
  if (is_sentinel(l)) return "*";
  std::string s;
  for (std::size_t k = 0; k < l.size(); ++k) s += (k ? "," : "") + std::to_string(l[k]);
  return l.size() == 1 ? s : "(" + s + ")";
}

PosetDocument PosetDocument::from_poset(const LabelledPoset& lp, std::string family, Json params) {
  PosetDocument d;
  d.family = std::move(family);
  d.params = std::move(params);
  const Poset& p = lp.poset;
  d.elements = p.ids();
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    const auto [lo, hi] = p.covers()[k];
    d.covers.emplace_back(p.id(lo), p.id(hi));
    d.labels.push_back(lp.labels.at(static_cast<int>(k)));
  }
  if (p.bottom()) d.bottom = p.id(*p.bottom());
  if (p.top()) d.top = p.id(*p.top());
  return d;
}

LabelledPoset PosetDocument::to_poset() const {
  if (labels.size() != covers.size()) throw Error("labels and covers differ in length");
  Poset p = Poset::build(elements, covers, bottom, top);
  std::vector<Label> ls(p.covers().size());
  for (std::size_t k = 0; k < covers.size(); ++k) {
    const int idx = p.cover_index(p.index_of(covers[k].first), p.index_of(covers[k].second));
    ls.at(idx) = labels[k];
  }
  EdgeLabelling el(std::move(ls));
  el.validate(p);
  return {std::move(p), std::move(el)};
}

Json PosetDocument::to_json() const {
  Json j;
  j["format"] = "poset";
  j["family"] = family;
  j["params"] = params;
  j["elements"] = elements;
  Json cs = Json::array();
  for (std::size_t k = 0; k < covers.size(); ++k)
    cs.push_back({{"lower", covers[k].first}, {"upper", covers[k].second}, {"label", labels[k]}});
  j["covers"] = cs;
  j["bottom"] = bottom ? Json(*bottom) : Json(nullptr);
  j["top"] = top ? Json(*top) : Json(nullptr);
  return j;
}

PosetDocument PosetDocument::from_json(const Json& j) {
  if (j.value("format", "") != "poset") throw Error("not a poset document");
  PosetDocument d;
  d.family = j.value("family", "");
  d.params = j.value("params", Json::object());
  d.elements = j.at("elements").get<std::vector<std::string>>();
  for (const auto& c : j.at("covers")) {
    d.covers.emplace_back(c.at("lower").get<std::string>(), c.at("upper").get<std::string>());
    d.labels.push_back(c.at("label").get<Label>());
  }
  if (j.contains("bottom") && !j["bottom"].is_null()) d.bottom = j["bottom"].get<std::string>();
  if (j.contains("top") && !j["top"].is_null()) d.top = j["top"].get<std::string>();
  return d;
}

std::string PosetDocument::serialize() const { return to_json().dump(2) + "\n"; }

PosetDocument PosetDocument::parse(const std::string& text) {
  try {
    return from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed poset document: ") + e.what());
  }
}

std::vector<std::string> cell_ids(const Poset& p, const FacePoset& fp, CellId c) {
  std::vector<int> vs = fp.vertices(c);
  std::sort(vs.begin(), vs.end(), [&](int a, int b) { return p.less(a, b); });
  std::vector<std::string> out;
  for (int v : vs) out.push_back(p.id(v));
  return out;
}

CellId cell_from_ids(const Poset& p, const FacePoset& fp, const std::vector<std::string>& ids) {
  std::vector<int> vs;
  for (const auto& id : ids) {
    auto v = p.find(id);
    if (!v) throw Error("unknown element id: " + id);
    vs.push_back(*v);
  }
  std::sort(vs.begin(), vs.end());
  auto c = fp.find(vs);
  if (!c) throw Error("not a cell of the order complex");
  return *c;
}

MatchingDocument MatchingDocument::from_matching(const Poset& p, const FacePoset& fp,
                                                 const Matching& m) {
  MatchingDocument d;
  for (const auto& [lo, hi] : m.pairs()) d.pairs.emplace_back(cell_ids(p, fp, lo), cell_ids(p, fp, hi));
  return d;
}

Matching MatchingDocument::to_matching(const Poset& p, const FacePoset& fp) const {
  Matching m;
  for (const auto& [a, b] : to_pairs(p, fp)) {
    if (!fp.is_incidence(a, b)) throw Error("matched cells are not incident");
    m.add(a, b);
  }
  return m;
}

std::vector<std::pair<CellId, CellId>> MatchingDocument::to_pairs(const Poset& p, const FacePoset& fp) const {
  std::vector<std::pair<CellId, CellId>> out;
  for (const auto& [lo, hi] : pairs) out.emplace_back(cell_from_ids(p, fp, lo), cell_from_ids(p, fp, hi));
  return out;
}

Json MatchingDocument::to_json() const {
  Json j;
  j["format"] = "matching";
  Json ps = Json::array();
  for (const auto& [lo, hi] : pairs) ps.push_back({{"lower", lo}, {"upper", hi}});
  j["pairs"] = ps;
  return j;
}

MatchingDocument MatchingDocument::from_json(const Json& j) {
  if (j.value("format", "") != "matching") throw Error("not a matching document");
  MatchingDocument d;
  for (const auto& p : j.at("pairs"))
    d.pairs.emplace_back(p.at("lower").get<std::vector<std::string>>(),
                         p.at("upper").get<std::vector<std::string>>());
  return d;
}

std::string MatchingDocument::serialize() const { return to_json().dump(2) + "\n"; }

MatchingDocument MatchingDocument::parse(const std::string& text) {
  try {
    return from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed matching document: ") + e.what());
  }
}

Json make_report(const std::string& command, const Json& params) {
  Json j;
  j["format"] = "report";
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["params"] = params;
  return j;
}

std::string hasse_dot(const LabelledPoset& lp) {
  const Poset& p = lp.poset;
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (int v = 0; v < p.size(); ++v) os << "  " << quote(p.id(v)) << ";\n";
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    const auto [lo, hi] = p.covers()[k];
    os << "  " << quote(p.id(lo)) << " -> " << quote(p.id(hi))
       << " [label=" << quote(format_label(lp.labels.at(static_cast<int>(k)))) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string pm_dot(const Poset& p, const FacePoset& fp, const MultiGraphFacePoset& pm,
                   const Matching& pm_matching) {
  std::ostringstream os;
  os << "digraph pm {\n  rankdir=BT;\n";
  for (CellId c : pm.vertices)
    os << "  " << quote(cell_name(p, fp, c)) << " [label=" << quote(cell_name(p, fp, c))
       << ", comment=\"dim " << fp.dim(c) << "\"];\n";
  for (const auto& e : pm.edges) {
    const bool matched = pm_matching.contains(e.lower, e.upper);
    for (int k = 0; k < e.multiplicity(); ++k) {
      if (matched)
        os << "  " << quote(cell_name(p, fp, e.lower)) << " -> " << quote(cell_name(p, fp, e.upper))
           << " [style=bold, color=red];\n";
      else
        os << "  " << quote(cell_name(p, fp, e.upper)) << " -> " << quote(cell_name(p, fp, e.lower))
           << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace morse
