#include "glx/explorer_service.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

// Eigen before httplib: <resolv.h> defines a _res macro that breaks Eigen.
#include "glx/report_io.hpp"

#include <httplib.h>

#ifndef GLX_VERSION
#define GLX_VERSION "0.0.0"
#endif

namespace glx {

namespace {

HttpReply json_reply(int status, const json& body) { return {status, body.dump(), "application/json"}; }

HttpReply error_reply(int status, std::string_view message) {
  return json_reply(status, {{"error", std::string(message)}});
}

}  // namespace

std::string_view service_version() { return GLX_VERSION; }

HttpReply handle_analyze(std::string_view body) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return error_reply(400, std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!request.is_object()) throw Error(ErrorCode::InvalidInput, "request must be an object with \"zeros\"");
    Tolerances tol;
    if (request.contains("tolerance") && !request.at("tolerance").is_null()) {
      const json& t = request.at("tolerance");
      if (!t.is_number() || !(t.get<double>() > 0.0) || !std::isfinite(t.get<double>())) {
        throw Error(ErrorCode::InvalidInput, "tolerance must be a positive number");
      }
      tol.geo = t.get<double>();
    }
    const ZeroConfigurationXd config = config_from_json(request);
    return json_reply(200, analysis_to_json(analyze(config, tol)));
  } catch (const Error& e) {
    return error_reply(e.code() == ErrorCode::NonConvergence ? 422 : 400, e.what());
  }
}

HttpReply handle_health() { return json_reply(200, {{"status", "ok"}, {"version", std::string(service_version())}}); }

HttpReply handle_api_not_found(std::string_view path) {
  return error_reply(404, "no such endpoint: " + std::string(path));
}

std::string_view content_type_for(const std::filesystem::path& file) {
  const std::string ext = file.extension().string();
  if (ext == ".html" || ext == ".htm") return "text/html; charset=utf-8";
  if (ext == ".js" || ext == ".mjs") return "text/javascript; charset=utf-8";
  if (ext == ".css") return "text/css; charset=utf-8";
  if (ext == ".json" || ext == ".map") return "application/json";
  if (ext == ".svg") return "image/svg+xml";
  if (ext == ".png") return "image/png";
  if (ext == ".ico") return "image/x-icon";
  if (ext == ".wasm") return "application/wasm";
  if (ext == ".txt") return "text/plain; charset=utf-8";
  return "application/octet-stream";
}

bool is_local_origin(std::string_view origin) {
  for (std::string_view prefix : {"http://localhost", "http://127.0.0.1", "https://localhost", "https://127.0.0.1"}) {
    if (origin.substr(0, prefix.size()) == prefix) {
      const auto rest = origin.substr(prefix.size());
      if (rest.empty() || rest.front() == ':') return true;
    }
  }
  return false;
}

AssetStore AssetStore::load(const std::filesystem::path& dir) {
  AssetStore store;
  if (dir.empty() || !std::filesystem::is_directory(dir)) return store;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string rel = std::filesystem::relative(entry.path(), dir).generic_string();
    store.add(rel, ss.str(), std::string(content_type_for(entry.path())));
  }
  return store;
}

void AssetStore::add(std::string path, std::string content, std::string content_type) {
  assets_.insert_or_assign(std::move(path), Asset{std::move(content), std::move(content_type)});
}

HttpReply AssetStore::serve(std::string_view request_path) const {
  std::string_view path = request_path;
  while (!path.empty() && path.front() == '/') path.remove_prefix(1);
  if (path.empty()) path = "index.html";
  if (auto it = assets_.find(path); it != assets_.end()) return {200, it->second.content, it->second.content_type};

  const auto slash = path.rfind('/');
  const auto last = slash == std::string_view::npos ? path : path.substr(slash + 1);
  if (last.find('.') == std::string_view::npos) {
    if (auto it = assets_.find(std::string_view("index.html")); it != assets_.end()) {
      return {200, it->second.content, it->second.content_type};
    }
  }
  return {404, "not found\n", "text/plain; charset=utf-8"};
}

void install_routes(httplib::Server& server, const AssetStore& assets) {
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, reply.content_type);
  };

  server.Post("/api/analyze", [send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_analyze(req.body));
  });
  server.Get("/api/health", [send](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });
  server.Get(R"(/api/.*)", [send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_api_not_found(req.path));
  });
  server.Post(R"(/api/.*)", [send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_api_not_found(req.path));
  });
  server.Get(R"(/.*)", [send, &assets](const httplib::Request& req, httplib::Response& res) {
    send(res, assets.serve(req.path));
  });
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.set_post_routing_handler([](const httplib::Request& req, httplib::Response& res) {
    const std::string origin = req.get_header_value("Origin");
    if (!origin.empty() && is_local_origin(origin)) {
      res.set_header("Access-Control-Allow-Origin", origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.set_header("Vary", "Origin");
    }
  });
}

}  // namespace glx
