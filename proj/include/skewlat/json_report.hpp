#pragma once

// JSON renderings of reports and the JSON input form of PrimitiveSpec.
// Kept apart from the core headers so that only JSON-producing targets pull
// in the json library.

#include <string>
#include <vector>

#include <json.hpp>

#include "skewlat/classify.hpp"
#include "skewlat/cosets.hpp"
#include "skewlat/crosscheck.hpp"
#include "skewlat/generators.hpp"
#include "skewlat/order_green.hpp"

namespace skewlat {

using nlohmann::json;

inline json classification_to_json(const ClassificationReport& rep) {
  json out;
  out["properties"] = json::object();
  for (const auto& [prop, v] : rep.verdicts) out["properties"][prop] = v;
  out["modes"] = json::object();
  out["witnesses"] = json::object();
  for (const auto& [prop, ms] : rep.modes) {
    json m = json::object();
    for (const auto& [mode, result] : ms) {
      m[mode] = result.holds;
      if (!result.witness.empty())
        out["witnesses"][prop + "." + mode] = result.witness;
    }
    out["modes"][prop] = std::move(m);
  }
  out["agreement"] = json::object();
  for (const auto& [prop, ok] : rep.agreement) out["agreement"][prop] = ok;
  if (rep.forbidden) {
    json emb = json::object();
    const auto& fw = *rep.forbidden;
    for (int i = 0; i < fw.embedding.source.size(); ++i)
      emb[fw.embedding.source.name(i)] =
          fw.embedding.target.name(fw.embedding.map[i]);
    out["forbidden"] = {{"kind", std::string(1, fw.kind)},
                        {"n", fw.n},
                        {"embedding", std::move(emb)}};
  } else {
    out["forbidden"] = nullptr;
  }
  return out;
}

namespace detail {

inline json name_list(const SkewLattice& a, const std::vector<int>& xs) {
  json out = json::array();
  for (int x : xs) out.push_back(a.name(x));
  return out;
}

inline json name_lists(const SkewLattice& a,
                       const std::vector<std::vector<int>>& xss) {
  json out = json::array();
  for (const auto& xs : xss) out.push_back(name_list(a, xs));
  return out;
}

}  // namespace detail

inline json decomposition_to_json(const SkewLattice& a) {
  const auto g = green_partitions(a);
  const auto ord = compute_orders(a);
  json out;
  out["d_classes"] = detail::name_lists(a, g.d.classes());
  out["r_classes"] = detail::name_lists(a, g.r.classes());
  out["l_classes"] = detail::name_lists(a, g.l.classes());
  {
    const auto flags = handedness(a);
    out["handedness"] = {{"rectangular", flags.rectangular},
                         {"left_handed", flags.left_handed},
                         {"right_handed", flags.right_handed}};
  }

  // covering relation of S/D, classes indexed as in d_classes
  const int k = g.d.num_classes();
  auto above = [&](int i, int j) {
    return i != j && ord.pre_gt(g.d.members(i)[0], g.d.members(j)[0]);
  };
  json hasse = json::array();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!above(i, j)) continue;
      bool covering = true;
      for (int m = 0; m < k; ++m)
        if (above(i, m) && above(m, j)) covering = false;
      if (covering) hasse.push_back(json::array({i, j}));
    }
  out["hasse"] = std::move(hasse);

  json pairs = json::array();
  for (const auto& pair : primitive_pairs(a)) {
    const auto cp = coset_partitions(pair);
    json p;
    p["upper_class"] = detail::name_list(a, pair.classes[0]);
    p["lower_class"] = detail::name_list(a, pair.classes[1]);
    p["upper_cosets"] = detail::name_lists(a, cp.upper_cosets);
    p["lower_cosets"] = detail::name_lists(a, cp.lower_cosets);
    json bijs = json::array();
    for (const auto& b : coset_bijections(pair)) {
      json pb = json::array();
      for (const auto& [u, l] : b.pairs)
        pb.push_back(json::array({a.name(u), a.name(l)}));
      bijs.push_back(std::move(pb));
    }
    p["bijections"] = std::move(bijs);
    pairs.push_back(std::move(p));
  }
  out["pairs"] = std::move(pairs);

  json chains = json::array();
  for (const auto& triple : chain_triples(a)) {
    const auto ac = ac_decomposition(triple);
    json c;
    c["classes"] = json::array({detail::name_list(a, triple.classes[0]),
                                detail::name_list(a, triple.classes[1]),
                                detail::name_list(a, triple.classes[2])});
    c["components"] = detail::name_lists(a, ac.components);
    c["ac_cosets"] = detail::name_lists(a, ac.ac_cosets);
    const auto rf = reflective_factorization(triple);
    c["reflective"] = rf.reflective;
    c["factors"] = rf.iso.has_value();
    chains.push_back(std::move(c));
  }
  out["chains"] = std::move(chains);
  return out;
}

inline PrimitiveSpec primitive_spec_from_json(const json& j) {
  PrimitiveSpec spec;
  spec.upper_cosets =
      j.at("upper_cosets").get<std::vector<std::vector<std::string>>>();
  spec.lower_cosets =
      j.at("lower_cosets").get<std::vector<std::vector<std::string>>>();
  for (const auto& row : j.at("bijections")) {
    std::vector<std::vector<std::pair<int, int>>> r;
    for (const auto& cell : row) {
      std::vector<std::pair<int, int>> b;
      for (const auto& pr : cell)
        b.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
      r.push_back(std::move(b));
    }
    spec.bijections.push_back(std::move(r));
  }
  spec.upper_left_handed = j.value("upper_left_handed", true);
  spec.lower_left_handed = j.value("lower_left_handed", true);
  return spec;
}

}  // namespace skewlat
