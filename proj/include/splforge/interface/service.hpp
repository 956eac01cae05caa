/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_INTERFACE_SERVICE_HPP
#define SPLFORGE_INTERFACE_SERVICE_HPP

#include "splforge/fm/model.hpp"

#include <map>
#include <memory>
#include <ostream>
#include <string>

namespace splforge::app {

struct Response {
  int status = 200;
  std::string body;  // JSON
};

/// HTTP-independent request handling over one immutable model. Safe to call
/// from many threads at once.
class ConfigService {
public:
  explicit ConfigService(fm::FeatureModel model);

  Response handle(const std::string& method, const std::string& path,
                  const std::map<std::string, std::string>& query,
                  const std::string& body) const;

  const fm::FeatureModel& model() const noexcept { return model_; }

private:
  Response getModel() const;
  Response getCount(const std::map<std::string, std::string>& query) const;
  Response postValidate(const std::string& body) const;
  Response postPropagate(const std::string& body) const;
  Response postDerive(const std::string& body) const;

  fm::FeatureModel model_;
};

/// Listens in background threads until stop() or destruction.
class HttpServer {
public:
  explicit HttpServer(const ConfigService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port.
  /// Throws Error(Io) when binding fails.
  int start(const std::string& host, int port);
  void stop();

  /// Binds, then blocks serving requests.
  static void serveForever(const ConfigService& service, const std::string& host, int port,
                           std::ostream& log);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace splforge::app

#endif  // SPLFORGE_INTERFACE_SERVICE_HPP
