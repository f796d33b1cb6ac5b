#pragma once

// Stateless HTTP facade over analyze() for the browser explorer. The request
// handlers are plain functions so they can be exercised without a socket.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace glx {

std::string_view service_version();

struct HttpReply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// POST /api/analyze. Body: {"zeros": [{"z": [re, im], "k": k}, ...], "tolerance"?: eps}.
HttpReply handle_analyze(std::string_view body);
/// GET /api/health.
HttpReply handle_health();
/// Unknown /api/... paths.
HttpReply handle_api_not_found(std::string_view path);

std::string_view content_type_for(const std::filesystem::path& file);
bool is_local_origin(std::string_view origin);

/// In-memory copy of the UI bundle, read once at startup.
class AssetStore {
 public:
  static AssetStore load(const std::filesystem::path& dir);

  void add(std::string path, std::string content, std::string content_type);
  std::size_t size() const { return assets_.size(); }

  /// Exact file, else index.html for extension-less paths, else 404.
  HttpReply serve(std::string_view request_path) const;

 private:
  struct Asset {
    std::string content;
    std::string content_type;
  };
  std::map<std::string, Asset, std::less<>> assets_;
};

void install_routes(httplib::Server& server, const AssetStore& assets);

}  // namespace glx
