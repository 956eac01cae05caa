/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "splforge/interface/service.hpp"

#include "splforge/derive/product.hpp"
#include "splforge/error.hpp"
#include "splforge/fm/analysis.hpp"

#include <httplib.h>
#include <json.hpp>

#include <thread>

namespace splforge::app {

namespace {

using nlohmann::json;

class BadRequest : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Response reply(int status, const json& body) { return {status, body.dump()}; }

Response failure(int status, const std::string& message) {
  return reply(status, json{{"error", message}});
}

json names(const fm::FeatureModel& model, const std::set<fm::FeatureId>& ids) {
  return json(model.namesOf(ids));
}

std::vector<std::string> stringArray(const json& body, const char* key) {
  std::vector<std::string> out;
  if (!body.contains(key)) {
    return out;
  }
  const json& value = body.at(key);
  if (!value.is_array()) {
    throw BadRequest(std::string("'") + key + "' must be an array of feature names");
  }
  for (const json& item : value) {
    if (!item.is_string()) {
      throw BadRequest(std::string("'") + key + "' must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

json parseBody(const std::string& body) {
  json parsed = json::parse(body, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object()) {
    throw BadRequest("request body must be a JSON object");
  }
  return parsed;
}

fm::Configuration configurationOf(const fm::FeatureModel& model, const json& body) {
  return fm::makeConfiguration(model, stringArray(body, "selected"),
                               stringArray(body, "deselected"));
}

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      comma = text.size();
    }
    if (comma > start) {
      out.push_back(text.substr(start, comma - start));
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace

ConfigService::ConfigService(fm::FeatureModel model) : model_(std::move(model)) {}

Response ConfigService::handle(const std::string& method, const std::string& path,
                               const std::map<std::string, std::string>& query,
                               const std::string& body) const {
  if (method == "OPTIONS") {
    return {204, ""};
  }
  struct Route {
    const char* method;
    const char* path;
  };
  static constexpr Route kRoutes[] = {{"GET", "/api/model"},
                                      {"GET", "/api/count"},
                                      {"POST", "/api/validate"},
                                      {"POST", "/api/propagate"},
                                      {"POST", "/api/derive"}};
  bool known = false;
  for (const Route& r : kRoutes) {
    known = known || path == r.path;
  }
  if (!known) {
    return failure(404, "no such endpoint: " + path);
  }
  try {
    if (method == "GET" && path == "/api/model") return getModel();
    if (method == "GET" && path == "/api/count") return getCount(query);
    if (method == "POST" && path == "/api/validate") return postValidate(body);
    if (method == "POST" && path == "/api/propagate") return postPropagate(body);
    if (method == "POST" && path == "/api/derive") return postDerive(body);
    return failure(405, method + " not allowed on " + path);
  } catch (const BadRequest& e) {
    return failure(400, e.what());
  } catch (const Error& e) {
    return failure(e.code() == ErrorCode::InvalidArgument ? 400 : 422, e.what());
  }
}

Response ConfigService::getModel() const {
  json features = json::array();
  for (const fm::Feature& f : model_.features()) {
    json item{{"name", f.name},
              {"variability", fm::variabilityName(f.variability)},
              {"version", f.version},
              {"parent", f.parent ? json(model_.nameOf(*f.parent)) : json(nullptr)}};
    json children = json::array();
    for (fm::FeatureId c : f.children) {
      children.push_back(model_.nameOf(c));
    }
    item["children"] = children;
    if (const fm::Group* g = model_.groupOf(f.id)) {
      item["group"] = g->name;
    }
    if (f.asset) {
      item["module"] = f.asset->moduleId;
      item["layers"] = f.asset->layers.str();
    }
    features.push_back(std::move(item));
  }
  json groups = json::array();
  for (const fm::Group& g : model_.groups()) {
    json members = json::array();
    for (fm::FeatureId m : g.members) {
      members.push_back(model_.nameOf(m));
    }
    groups.push_back({{"name", g.name},
                      {"parent", model_.nameOf(g.parent)},
                      {"kind", fm::groupKindName(g.kind)},
                      {"members", members}});
  }
  json constraints = json::array();
  for (const fm::CrossTreeConstraint& c : model_.constraints()) {
    constraints.push_back({{"kind", fm::constraintKindName(c.kind)},
                           {"from", model_.nameOf(c.from)},
                           {"to", model_.nameOf(c.to)}});
  }
  return reply(200, {{"name", model_.name()},
                     {"root", model_.nameOf(model_.root())},
                     {"features", features},
                     {"groups", groups},
                     {"constraints", constraints}});
}

Response ConfigService::getCount(const std::map<std::string, std::string>& query) const {
  auto list = [&query](const char* key) {
    auto it = query.find(key);
    return it == query.end() ? std::vector<std::string>{} : splitList(it->second);
  };
  const fm::Configuration config =
      fm::makeConfiguration(model_, list("selected"), list("deselected"));
  return reply(200, {{"products", fm::countExtensions(model_, config)}});
}

Response ConfigService::postValidate(const std::string& body) const {
  const fm::Configuration config = configurationOf(model_, parseBody(body));
  const fm::ValidationResult result = fm::validate(model_, config);
  json violations = json::array();
  for (const fm::Violation& v : result.violations) {
    json features = json::array();
    for (fm::FeatureId id : v.features) {
      features.push_back(model_.nameOf(id));
    }
    violations.push_back(
        {{"kind", fm::clauseKindName(v.kind)}, {"features", features}, {"message", v.message}});
  }
  return reply(200, {{"valid", result.valid}, {"violations", violations}});
}

Response ConfigService::postPropagate(const std::string& body) const {
  const fm::Configuration config = configurationOf(model_, parseBody(body));
  const fm::PropagationResult result = fm::propagate(model_, config);
  return reply(200, {{"conflict", result.conflict},
                     {"forcedSelected", names(model_, result.forcedSelected)},
                     {"forcedDeselected", names(model_, result.forcedDeselected)},
                     {"open", names(model_, result.openFeatures)}});
}

Response ConfigService::postDerive(const std::string& body) const {
  const json request = parseBody(body);
  const fm::Configuration config = configurationOf(model_, request);
  std::string name = "product";
  int version = model_.maxVersion();
  if (request.contains("name")) {
    if (!request["name"].is_string()) {
      throw BadRequest("'name' must be a string");
    }
    name = request["name"].get<std::string>();
  }
  if (request.contains("version")) {
    if (!request["version"].is_number_integer()) {
      throw BadRequest("'version' must be an integer");
    }
    version = request["version"].get<int>();
  }
  const derive::ProductManifest m = derive::deriveProduct(model_, config, name, version);
  json modules = json::array();
  for (const derive::ManifestModule& mod : m.modules) {
    modules.push_back({{"id", mod.moduleId}, {"layers", mod.layers.str()}});
  }
  return reply(200, {{"productName", m.productName},
                     {"model", m.modelName},
                     {"version", m.version},
                     {"features", m.features},
                     {"modules", modules},
                     {"languages", m.languages},
                     {"cycles", m.cycleCount},
                     {"manifest", derive::writeManifest(m)}});
}

struct HttpServer::Impl {
  explicit Impl(const ConfigService& s) : service(s) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
      std::map<std::string, std::string> query;
      for (const auto& [key, value] : req.params) {
        query.emplace(key, value);
      }
      const Response r = service.handle(req.method, req.path, query, req.body);
      res.status = r.status;
      if (!r.body.empty()) {
        res.set_content(r.body, "application/json");
      }
    };
    server.Get(".*", dispatch);
    server.Post(".*", dispatch);
    server.Options(".*", dispatch);
  }

  int bind(const std::string& host, int port) {
    int bound = port;
    if (port == 0) {
      bound = server.bind_to_any_port(host);
    } else if (!server.bind_to_port(host, port)) {
      bound = -1;
    }
    if (bound < 0) {
      throw Error(ErrorCode::Io, "cannot listen on " + host + ":" + std::to_string(port));
    }
    return bound;
  }

  const ConfigService& service;
  httplib::Server server;
  std::thread worker;
};

HttpServer::HttpServer(const ConfigService& service) : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  const int bound = impl_->bind(host, port);
  impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void HttpServer::stop() {
  if (impl_ && impl_->worker.joinable()) {
    impl_->server.stop();
    impl_->worker.join();
  }
}

void HttpServer::serveForever(const ConfigService& service, const std::string& host, int port,
                              std::ostream& log) {
  Impl impl(service);
  const int bound = impl.bind(host, port);
  log << "listening on http://" << host << ":" << bound << std::endl;
  impl.server.listen_after_bind();
}

}  // namespace splforge::app
