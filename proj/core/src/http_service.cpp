#include "ontoquery/http_service.hpp"

#include <httplib.h>
#include <json.hpp>

namespace ontoquery {

using json = nlohmann::json;

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyQuery: return 422;
    case ErrorCode::DuplicateOntologyId: return 409;
    case ErrorCode::UnknownOntology: return 404;
    case ErrorCode::IoError: return 500;
    default: return 400;
  }
}

namespace {

constexpr const char* kJson = "application/json";

void send_error(httplib::Response& res, const Error& e) {
  res.status = http_status(e.code());
  res.set_content(to_json_string(e), kJson);
}

json parse_body(const httplib::Request& req) {
  auto body = json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object())
    throw Error(ErrorCode::InvalidArgument, "request body must be a JSON object");
  return body;
}

std::string string_field(const json& body, const char* key, std::string fallback = {}) {
  const auto it = body.find(key);
  if (it == body.end()) return fallback;
  if (!it->is_string()) throw Error(ErrorCode::InvalidArgument, std::string(key) + " must be a string");
  return it->get<std::string>();
}

// Runs a handler, turning library errors into JSON error responses.
template <typename F>
void guarded(httplib::Response& res, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    send_error(res, e);
  }
}

}  // namespace

struct HttpService::Impl {
  Registry& registry;
  httplib::Server server;

  explicit Impl(Registry& r) : registry(r) { routes(); }

  void routes() {
    server.Get("/health", [this](const httplib::Request&, httplib::Response& res) {
      res.set_content(json{{"status", "ok"}, {"ontologies", registry.size()}}.dump(), kJson);
    });

    server.Get("/ontologies", [this](const httplib::Request&, httplib::Response& res) {
      res.set_content(to_json_string(registry.list()), kJson);
    });

    server.Post("/ontologies", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        std::string id, source;
        if (req.is_multipart_form_data()) {
          if (req.has_file("id")) id = req.get_file_value("id").content;
          if (req.has_file("source")) source = req.get_file_value("source").content;
        } else {
          const auto body = parse_body(req);
          id = string_field(body, "id");
          source = string_field(body, "source");
        }
        if (id.empty() || source.empty())
          throw Error(ErrorCode::InvalidArgument, "both id and source are required");
        const auto summary = registry.register_ontology(source, id);
        res.status = 201;
        res.set_content(to_json_string(summary), kJson);
      });
    });

    server.Post("/search", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto body = parse_body(req);
        const auto facet = parse_facet(string_field(body, "facet", "ALL"));
        const auto view = parse_view(string_field(body, "view", "both"));
        const auto response = registry.search(string_field(body, "query"), facet, view);
        res.set_content(to_json_string(response), kJson);
      });
    });

    server.Get("/facets", [](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        const auto text = req.get_param_value("kind");
        const auto kind = parse_entity_kind(text);
        if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown kind " + text);
        res.set_content(facets_json(*kind), kJson);
      });
    });
  }
};

HttpService::HttpService(Registry& registry) : impl_(std::make_unique<Impl>(registry)) {}

HttpService::~HttpService() { stop(); }

bool HttpService::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int HttpService::bind_to_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpService::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpService::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace ontoquery
