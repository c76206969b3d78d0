// Copyright 2026 The Choreo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choreo/document.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "choreo/error.hpp"
#include "json.hpp"

namespace choreo {
namespace {

using nlohmann::json;

class Reader {
 public:
  void fail(ErrorCode code, std::string message) {
    diags_.push_back({code, std::move(message)});
  }
  bool ok() const { return diags_.empty(); }
  std::vector<Diagnostic> take() { return std::move(diags_); }

  std::optional<Rational> number(const json& node, const std::string& where) {
    if (node.is_number_integer()) {
      return parse_rational(node.dump());
    }
    if (node.is_string()) {
      if (auto r = parse_rational(node.get<std::string>())) return r;
      fail(ErrorCode::kMalformedDocument,
           where + ": '" + node.get<std::string>() + "' is not a number");
      return std::nullopt;
    }
    fail(ErrorCode::kMalformedDocument,
         where + ": expected a decimal string or integer");
    return std::nullopt;
  }

  std::optional<std::string> text(const json& node, const char* key,
                                   const std::string& where) {
    auto it = node.find(key);
    if (it == node.end()) {
      fail(ErrorCode::kMalformedDocument, where + ": missing '" + key + "'");
      return std::nullopt;
    }
    if (!it->is_string()) {
      fail(ErrorCode::kMalformedDocument, where + ": '" + key + "' must be a string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }

 private:
  std::vector<Diagnostic> diags_;
};

}  // namespace

GameInstance load_game(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kMalformedDocument, "document must be a JSON object");
  }

  Reader r;
  std::optional<Rational> budget;
  if (auto it = doc.find("budget"); it == doc.end()) {
    r.fail(ErrorCode::kMalformedDocument, "missing 'budget'");
  } else {
    budget = r.number(*it, "budget");
  }

  std::vector<ServiceSpec> services;
  std::vector<std::optional<Rational>> prices;
  std::size_t priced = 0;
  auto sit = doc.find("services");
  if (sit == doc.end() || !sit->is_array()) {
    r.fail(ErrorCode::kMalformedDocument, "'services' must be an array");
  } else {
    for (std::size_t k = 0; k < sit->size(); ++k) {
      const json& s = (*sit)[k];
      const std::string where = "services[" + std::to_string(k) + "]";
      if (!s.is_object()) {
        r.fail(ErrorCode::kMalformedDocument, where + ": expected an object");
        continue;
      }
      auto id = r.text(s, "id", where);
      auto owner = r.text(s, "owner", where);
      std::optional<Rational> cost;
      if (auto c = s.find("cost"); c == s.end()) {
        r.fail(ErrorCode::kMalformedDocument, where + ": missing 'cost'");
      } else {
        cost = r.number(*c, where + ".cost");
      }
      std::optional<Rational> price;
      if (auto pr = s.find("price"); pr != s.end()) {
        price = r.number(*pr, where + ".price");
        ++priced;
      }
      if (id && owner && cost) {
        services.push_back({*id, *cost, *owner});
        prices.push_back(price);
      }
    }
  }

  std::vector<std::pair<std::string, std::string>> edges;
  auto eit = doc.find("edges");
  if (eit == doc.end() || !eit->is_array()) {
    r.fail(ErrorCode::kMalformedDocument, "'edges' must be an array");
  } else {
    for (std::size_t k = 0; k < eit->size(); ++k) {
      const json& e = (*eit)[k];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        r.fail(ErrorCode::kMalformedDocument,
               "edges[" + std::to_string(k) + "]: expected [from, to]");
        continue;
      }
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  const std::size_t declared = sit != doc.end() && sit->is_array() ? sit->size() : 0;
  if (priced != 0 && priced != declared) {
    r.fail(ErrorCode::kMalformedDocument,
           "announced prices must be given for all services or none");
  }

  // Graph-level checks run even when the document had problems, so one
  // pass reports everything.
  std::vector<Diagnostic> diags = r.take();
  std::optional<ChoreographyGraph> graph;
  try {
    graph = ChoreographyGraph::build(services, edges);
  } catch (const Error& e) {
    diags.insert(diags.end(), e.diagnostics().begin(), e.diagnostics().end());
  }
  if (!diags.empty()) throw Error(std::move(diags));

  std::optional<std::vector<Rational>> announced;
  if (priced != 0) {
    announced.emplace();
    for (auto& p : prices) announced->push_back(*p);
  }
  return GameInstance::create(std::move(*graph), *budget, std::move(announced));
}

GameInstance load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_game(ss.str());
}

std::string emit_game(const GameInstance& instance) {
  nlohmann::ordered_json doc;
  const ChoreographyGraph& g = instance.graph;
  doc["budget"] = to_document_string(instance.budget);
  doc["services"] = nlohmann::ordered_json::array();
  for (VertexIndex v = 0; v < g.num_services(); ++v) {
    nlohmann::ordered_json s;
    s["id"] = g.vertex(v).id;
    s["cost"] = to_document_string(g.vertex(v).cost);
    s["owner"] = g.player_name(g.vertex(v).owner);
    if (instance.announced_prices)
      s["price"] = to_document_string((*instance.announced_prices)[v]);
    doc["services"].push_back(std::move(s));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : g.edges())
    doc["edges"].push_back({g.vertex(a).id, g.vertex(b).id});
  return doc.dump(2) + "\n";
}

}  // namespace choreo
