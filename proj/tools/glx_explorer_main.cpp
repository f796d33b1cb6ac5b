#include <CLI11.hpp>
#include <httplib.h>

#include <iostream>

#include "glx/explorer_service.hpp"

#ifndef GLX_DEFAULT_ASSET_DIR
#define GLX_DEFAULT_ASSET_DIR "web"
#endif

int main(int argc, char** argv) {
  CLI::App app{"HTTP service for the critical point explorer", "glx-explorer"};
  std::string host = "127.0.0.1";
  int port = 8765;
  std::string assets_dir = GLX_DEFAULT_ASSET_DIR;
  app.add_option("--host", host, "bind address");
  app.add_option("--port", port, "bind port")->check(CLI::Range(1, 65535));
  app.add_option("--assets", assets_dir, "directory holding the UI bundle");
  CLI11_PARSE(app, argc, argv);

  const glx::AssetStore assets = glx::AssetStore::load(assets_dir);
  httplib::Server server;
  glx::install_routes(server, assets);
  std::cerr << "glx-explorer " << glx::service_version() << " listening on http://" << host << ':' << port << " ("
            << assets.size() << " assets from " << assets_dir << ")\n";
  if (!server.listen(host, port)) {
    std::cerr << "error: cannot bind " << host << ':' << port << '\n';
    return 2;
  }
  return 0;
}
