#pragma once
/**
 * @file output_record.hpp
 * @brief Rendering of counts as text, JSON and CSV, and parsing back.
 */

#include "gwfloor/counting.hpp"
#include "gwfloor/gw_ring.hpp"

#include "json.hpp"

#include <cctype>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gwfloor {

using nlohmann::json;

// Integers that fit in 64 bits are JSON numbers, larger ones are decimal strings.
inline json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

/// {"h": n, "terms": [{"sign": 1, "q": 2, "d": [1], "coeff": c}, ...]} over the display residual.
inline json gw_to_json(const GwElem& e) {
  const auto form = display(e);
  json terms = json::array();
  for (const auto& [m, c] : form.residual)
    terms.push_back({{"sign", m.sign}, {"q", m.int_part}, {"d", subset_indices(m.d_subset)}, {"coeff", integer_to_json(c)}});
  return {{"h", integer_to_json(form.h_count)}, {"terms", terms}};
}

inline GwElem gw_from_json(const json& j, int num_params) {
  DisplayForm form;
  form.h_count = integer_from_json(j.at("h"));
  for (const auto& t : j.at("terms")) {
    std::uint32_t subset = 0;
    for (int i : t.at("d").get<std::vector<int>>()) subset |= param_subset({i});
    form.residual.emplace_back(GwMonomial::make(t.at("sign").get<int>(), t.at("q").get<std::uint64_t>(), subset),
                               integer_from_json(t.at("coeff")));
  }
  return assemble(form, num_params);
}

struct OutputRecord {
  std::string family;
  std::vector<int> params;
  int r = 0;
  int s = 0;
  BetaForm beta;
  Integer rank = 0;
  Integer sig_pos = 0;
  Integer sig_neg = 0;
  std::size_t classes = 0;
  std::optional<double> ms;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline OutputRecord make_record(const CountResult& res, std::optional<double> ms = std::nullopt) {
  OutputRecord rec;
  rec.family = family_name(res.spec.family());
  rec.params = res.spec.params();
  rec.r = res.r;
  rec.s = res.s;
  rec.beta = res.beta_form;
  rec.rank = res.rank;
  rec.sig_pos = res.signature_all_positive;
  rec.sig_neg = res.signature_all_negative;
  rec.classes = res.class_count;
  rec.ms = ms;
  return rec;
}

inline json to_json(const OutputRecord& rec) {
  json beta = json::array();
  for (const auto& c : rec.beta.beta_coeffs) beta.push_back(integer_to_json(c));
  json out = {{"family", rec.family},
              {"params", rec.params},
              {"r", rec.r},
              {"s", rec.s},
              {"h", integer_to_json(rec.beta.h_coeff)},
              {"beta", beta},
              {"one", integer_to_json(rec.beta.one_coeff)},
              {"rank", integer_to_json(rec.rank)},
              {"sig_pos", integer_to_json(rec.sig_pos)},
              {"sig_neg", integer_to_json(rec.sig_neg)},
              {"classes", rec.classes}};
  out["ms"] = rec.ms ? json(*rec.ms) : json(nullptr);
  return out;
}

inline OutputRecord record_from_json(const json& j) {
  OutputRecord rec;
  rec.family = j.at("family").get<std::string>();
  rec.params = j.at("params").get<std::vector<int>>();
  rec.r = j.at("r").get<int>();
  rec.s = j.at("s").get<int>();
  rec.beta.h_coeff = integer_from_json(j.at("h"));
  for (const auto& c : j.at("beta")) rec.beta.beta_coeffs.push_back(integer_from_json(c));
  rec.beta.one_coeff = integer_from_json(j.at("one"));
  rec.rank = integer_from_json(j.at("rank"));
  rec.sig_pos = integer_from_json(j.at("sig_pos"));
  rec.sig_neg = integer_from_json(j.at("sig_neg"));
  rec.classes = j.at("classes").get<std::size_t>();
  if (j.contains("ms") && !j.at("ms").is_null()) rec.ms = j.at("ms").get<double>();
  return rec;
}

/// "24h + β^{(2)} + 2β^{(1)} + 8⟨1⟩"; with ascii, "24h + b(2) + 2b(1) + 8<1>".
inline std::string render_beta_form(const BetaForm& f, bool ascii = false) {
  std::string out;
  auto put = [&](const Integer& c, const std::string& symbol) {
    if (c == 0) return;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (mag != 1) out += mag.str();
    out += symbol;
  };
  put(f.h_coeff, "h");
  for (std::size_t l = f.beta_coeffs.size(); l >= 1; --l) {
    const std::string idx = std::to_string(l);
    put(f.beta_coeffs[l - 1], ascii ? "b(" + idx + ")" : "β^{(" + idx + ")}");
  }
  put(f.one_coeff, ascii ? "<1>" : "⟨1⟩");
  return out.empty() ? "0" : out;
}

/// Inverse of render_beta_form for either symbol set; s fixes the length of the beta list.
inline BetaForm parse_beta_form(std::string_view text, int s) {
  BetaForm f;
  f.beta_coeffs.assign(s, 0);
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  auto fail = [&] { throw std::invalid_argument("cannot parse beta form: " + std::string(text)); };
  if (compact.empty()) fail();
  if (compact == "0") return f;

  std::string_view rest = compact;
  auto eat = [&](std::string_view tok) {
    if (rest.substr(0, tok.size()) != tok) return false;
    rest.remove_prefix(tok.size());
    return true;
  };
  auto index = [&]() {
    std::size_t k = 0;
    int v = 0;
    while (k < rest.size() && std::isdigit(static_cast<unsigned char>(rest[k]))) v = v * 10 + (rest[k++] - '0');
    if (k == 0) fail();
    rest.remove_prefix(k);
    return v;
  };
  bool first = true;
  while (!rest.empty()) {
    int sign = 1;
    if (eat("-")) sign = -1;
    else if (!eat("+") && !first) fail();
    first = false;
    std::size_t k = 0;
    while (k < rest.size() && std::isdigit(static_cast<unsigned char>(rest[k]))) ++k;
    const Integer c = sign * (k ? Integer(std::string(rest.substr(0, k))) : Integer(1));
    rest.remove_prefix(k);
    if (eat("h")) {
      f.h_coeff += c;
    } else if (eat("β^{(") || eat("b(")) {
      const int l = index();
      if (!eat(")}") && !eat(")")) fail();
      if (l < 1 || l > s) fail();
      f.beta_coeffs[l - 1] += c;
    } else if (eat("⟨1⟩") || eat("<1>")) {
      f.one_coeff += c;
    } else {
      fail();
    }
  }
  return f;
}

inline std::string csv_header(int max_s) {
  std::string out = "family,params,r,s,h";
  for (int l = 1; l <= max_s; ++l) out += ",c" + std::to_string(l);
  return out + ",c0,rank,sig_pos,sig_neg,classes,ms";
}

inline std::string csv_row(const OutputRecord& rec, int max_s) {
  std::string params;
  for (std::size_t i = 0; i < rec.params.size(); ++i) params += (i ? ";" : "") + std::to_string(rec.params[i]);
  std::string out = rec.family + "," + params + "," + std::to_string(rec.r) + "," + std::to_string(rec.s) + "," +
                    rec.beta.h_coeff.str();
  for (int l = 1; l <= max_s; ++l)
    out += "," + (l <= static_cast<int>(rec.beta.beta_coeffs.size()) ? rec.beta.beta_coeffs[l - 1].str() : std::string());
  out += "," + rec.beta.one_coeff.str() + "," + rec.rank.str() + "," + rec.sig_pos.str() + "," + rec.sig_neg.str() +
         "," + std::to_string(rec.classes) + ",";
  if (rec.ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *rec.ms);
    out += buf;
  }
  return out;
}

/// One diagram with 1-based positions. Merged classes add pairs, roles, twin trees and the multiplicity.
inline json diagram_to_json(const FloorDiagram& d) {
  json vertices = json::array();
  for (int p = 0; p < d.size(); ++p) {
    const auto& v = d.vertices[p];
    json x = {{"position", p + 1}, {"color", v.color == Color::White ? "white" : "black"}};
    if (v.color == Color::White) x["leaks"] = v.leaks;
    else if (v.end != EndKind::None) x["end"] = v.end == EndKind::Incoming ? "incoming" : "outgoing";
    vertices.push_back(std::move(x));
  }
  json edges = json::array();
  for (const auto& e : d.edges) edges.push_back({{"from", e.lower + 1}, {"to", e.upper + 1}, {"weight", e.weight}});
  return {{"vertices", vertices}, {"edges", edges}};
}

inline std::string role_name(PairRole role) {
  switch (role) {
    case PairRole::Free: return "free";
    case PairRole::TypeA: return "type_a";
    case PairRole::TwinTreeMember: return "twin_tree";
    case PairRole::Unclassified: break;
  }
  return "unclassified";
}

inline json class_to_json(const DiagramClass& c) {
  const auto& m = c.representative;
  json out = diagram_to_json(m.base);
  json pairs = json::array();
  for (int i = 0; i < m.num_points(); ++i) {
    json p = {{"point", i + 1},
              {"positions", {m.pairs[i].first + 1, m.pairs[i].second + 1}},
              {"role", role_name(m.classification[i].role)}};
    if (m.classification[i].role == PairRole::TypeA) p["weight"] = m.classification[i].weight;
    if (m.classification[i].role == PairRole::TwinTreeMember) p["tree"] = m.classification[i].tree;
    pairs.push_back(std::move(p));
  }
  json trees = json::array();
  for (const auto& t : m.twin_trees) {
    json marks = json::array();
    for (const auto& [w, i] : t.elevator_marks) marks.push_back({{"weight", w}, {"point", i}});
    trees.push_back({{"points", t.point_indices},
                     {"elevators", marks},
                     {"m_root", t.m_root},
                     {"unbounded", t.unbounded_twin_elevators}});
  }
  out["pairs"] = pairs;
  out["twin_trees"] = trees;
  out["members"] = c.members;
  out["mult"] = gw_to_json(c.mult);
  return out;
}

}  // namespace gwfloor
