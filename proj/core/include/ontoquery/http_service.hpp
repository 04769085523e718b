#pragma once

#include <memory>
#include <string>

#include "ontoquery/service.hpp"

namespace ontoquery {

// JSON over HTTP:
//   POST /ontologies   multipart (source, id) or {"id": ..., "source": ...}
//   GET  /ontologies
//   POST /search       {"query": ..., "facet": "ALL", "view": "both"}
//   GET  /facets?kind=Class
//   GET  /health
class HttpService {
 public:
  explicit HttpService(Registry& registry);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Blocks until stop().
  bool listen(const std::string& host, int port);
  // Returns the bound port, or -1.
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Status code an Error maps to.
int http_status(ErrorCode code);

}  // namespace ontoquery
