#include "ridgegap/json_io.hpp"

#include <string>

#include "ridgegap/error.hpp"

namespace ridgegap {

namespace {

json keyed(const std::vector<double>& v) {
  json out = json::object();
  for (std::size_t k = 0; k < v.size(); ++k) out[std::to_string(k)] = v[k];
  return out;
}

}  // namespace

json to_json(const ClosedPath& cp) {
  return json{{"pts", cp.pts}, {"firstEdge", to_string(cp.first_edge)}};
}

json to_json(const Path& p) {
  return json{{"pts", p.pts}, {"firstEdge", to_string(p.first_edge)}};
}

ClosedPath closed_path_from_json(const json& j) {
  try {
    ClosedPath cp;
    cp.pts = j.at("pts").get<std::vector<Index>>();
    cp.first_edge = edge_kind_from_string(j.at("firstEdge").get<std::string>());
    return cp;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed path JSON: ") + e.what());
  }
}

json to_json(const SupResult& r) {
  return json{{"value", r.value},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
              {"method", to_string(r.method)}};
}

json to_json(const BestApprox& b, const SampledDomain& domain) {
  return json{{"error", b.error},
              {"gTable", keyed(b.v0.g)},
              {"hTable", keyed(b.v0.h)},
              {"aLevelValues", keyed(domain.a_level_values())},
              {"bLevelValues", keyed(domain.b_level_values())},
              {"pinnedALevels", b.pinned_a_levels}};
}

json to_json(const ClosedFormReport& r) {
  return json{{"inClass", r.in_class},
              {"classMargin", r.class_margin},
              {"curvatureOk", r.curvature_ok},
              {"curvatureMargin", r.curvature_margin},
              {"cornerValue", r.corner_value},
              {"quadratureValue", r.quadrature_value},
              {"literalIntegral", r.literal_integral},
              {"quadratureTol", r.quadrature_tol},
              {"errorEstimate", r.error_estimate},
              {"certified", r.certified},
              {"note", r.note}};
}

json to_json(const ShallowNetwork& net) {
  json terms = json::array();
  for (const NetworkTerm& t : net.terms) {
    terms.push_back({{"c", t.c}, {"w", to_string(t.w)}, {"theta", t.theta}});
  }
  return json{{"sigma", net.sigma}, {"terms", terms}};
}

ShallowNetwork network_from_json(const json& j) {
  try {
    ShallowNetwork net;
    net.sigma = j.at("sigma").get<std::string>();
    for (const json& t : j.at("terms")) {
      net.terms.push_back({t.at("c").get<double>(),
                           edge_kind_from_string(t.at("w").get<std::string>()),
                           t.at("theta").get<double>()});
    }
    return net;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed network JSON: ") + e.what());
  }
}

json to_json(const ExtremalPaths& paths) {
  json list = json::array();
  for (const ExtremalPath& p : paths.paths) {
    json item = to_json(p.path);
    item["closed"] = p.closed;
    list.push_back(std::move(item));
  }
  return json{{"paths", list},
              {"advisory", paths.advisory ? json(*paths.advisory) : json(nullptr)}};
}

}  // namespace ridgegap
