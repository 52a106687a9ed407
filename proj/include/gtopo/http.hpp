#pragma once

#include <gtopo/service.hpp>

#include <httplib.h>

namespace gtopo {

inline Request to_request(const httplib::Request& r) {
    Request out{r.method, r.path, {}, r.body};
    for (const auto& [k, v] : r.params) out.query.emplace(k, v);
    return out;
}

// Routes every GET and POST through handle(); the server holds no state of its own.
inline void install_routes(httplib::Server& server) {
    auto forward = [](const httplib::Request& req, httplib::Response& res) {
        Response r = handle(to_request(req));
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    server.Get(R"(/.*)", forward);
    server.Post(R"(/.*)", forward);
}

inline bool serve(const std::string& host, int port) {
    self_check();
    httplib::Server server;
    install_routes(server);
    return server.listen(host, port);
}

}  // namespace gtopo
