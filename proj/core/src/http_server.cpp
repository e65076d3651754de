#include <httplib.h>

#include "tweetloc/service.hpp"

namespace tweetloc {

struct HttpServer::Impl {
  Api& api;
  httplib::Server server;

  explicit Impl(Api& a) : api(a) {
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
      QueryParams params(req.params.begin(), req.params.end());
      ApiResponse out = api.handle(req.method, req.path, params, req.body);
      res.status = out.status;
      res.set_content(out.body, out.content_type);
    };
    for (const char* path : {"/ingest", "/tweets", "/untagged", "/histogram", "/health"}) {
      server.Get(path, route);
      server.Post(path, route);
    }
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  }
};

HttpServer::HttpServer(Api& api) : impl_(std::make_unique<Impl>(api)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::listen_after_bind() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

bool HttpServer::is_running() const { return impl_->server.is_running(); }

}  // namespace tweetloc
