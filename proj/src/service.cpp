#include "microres/service.hpp"

#include <httplib.h>

#include "json_reader.hpp"
#include "microres/intervention.hpp"
#include "microres/report.hpp"
#include "microres/scenario_io.hpp"

namespace microres {

using detail::json;

struct Service::Server {
    httplib::Server http;
};

namespace {

HttpResponse json_response(int status, std::string body) {
    HttpResponse r;
    r.status = status;
    r.body = std::move(body);
    r.headers["Content-Type"] = "application/json";
    return r;
}

HttpResponse error_response(int status, ApiError e) { return json_response(status, api_error_json(e)); }

HttpResponse from_exception() {
    try {
        throw;
    } catch (const ValidationError& e) {
        return error_response(400, {ApiErrorCode::ValidationFailed, e.what(),
                                    e.issues().empty() ? "" : e.issues().front().path, e.issues()});
    } catch (const DocumentError& e) {
        return error_response(400, {ApiErrorCode::InvalidDocument, e.what(), e.path(), {}});
    } catch (const PatchError& e) {
        return error_response(400, {ApiErrorCode::PatchUnresolvable, e.what(), e.path(), {}});
    } catch (const std::exception& e) {
        return error_response(500, {ApiErrorCode::EngineError, e.what(), "", {}});
    }
}

}  // namespace

std::string_view api_error_code_name(ApiErrorCode c) noexcept {
    switch (c) {
        case ApiErrorCode::BadRequest: return "bad_request";
        case ApiErrorCode::InvalidDocument: return "invalid_document";
        case ApiErrorCode::ValidationFailed: return "validation_failed";
        case ApiErrorCode::PatchUnresolvable: return "patch_unresolvable";
        case ApiErrorCode::NotFound: return "not_found";
        case ApiErrorCode::MethodNotAllowed: return "method_not_allowed";
        case ApiErrorCode::EngineError: return "engine_error";
    }
    return "engine_error";
}

std::string api_error_json(const ApiError& e) {
    json issues = json::array();
    for (const auto& i : e.issues) issues.push_back({{"path", i.path}, {"message", i.message}});
    const json doc = {{"error",
                       {{"code", std::string(api_error_code_name(e.code))},
                        {"message", e.message},
                        {"path", e.path},
                        {"issues", std::move(issues)}}}};
    return doc.dump(2) + "\n";
}

Service::Service(Scenario initial, ServiceOptions opts)
    : opts_(opts), server_(std::make_unique<Server>()) {
    // SO_REUSEADDR only; SO_REUSEPORT would let a second server share the port silently.
    server_->http.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof yes);
    });
    if (auto issues = validate_scenario(initial); !issues.empty()) throw ValidationError(std::move(issues));
    scenario_ = std::make_shared<const Scenario>(std::move(initial));

    auto adapt = [this](const httplib::Request& req, httplib::Response& res) {
        HttpResponse r = handle(req.method, req.path, req.body);
        res.status = r.status;
        for (const auto& [k, v] : r.headers) {
            if (k != "Content-Type") res.set_header(k, v);
        }
        res.set_content(r.body, "application/json");
    };
    for (const char* route : {"/api/scenario", "/api/builtin/new-england", "/api/patches/builtin"}) {
        server_->http.Get(route, adapt);
    }
    server_->http.Put("/api/scenario", adapt);
    server_->http.Post("/api/run", adapt);
    server_->http.Post("/api/compare", adapt);
    server_->http.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (!res.body.empty()) return;
        const bool missing = res.status == 404;
        res.set_content(api_error_json({missing ? ApiErrorCode::NotFound : ApiErrorCode::BadRequest,
                                        missing ? "no such endpoint" : "request rejected", req.path, {}}),
                        "application/json");
    });
}

Service::~Service() { stop(); }

std::shared_ptr<const Scenario> Service::scenario() const {
    std::lock_guard lock(mu_);
    return scenario_;
}

HttpResponse Service::handle(std::string_view method, std::string_view path, std::string_view body) {
    try {
        if (path == "/api/scenario") {
            if (method == "GET") return get_scenario();
            if (method == "PUT") return put_scenario(body);
        } else if (path == "/api/builtin/new-england") {
            if (method == "GET") return json_response(200, serialize_scenario(builtin_new_england()));
        } else if (path == "/api/patches/builtin") {
            if (method == "GET") {
                json patches = json::array();
                for (const auto& p : {builtin_underground_distribution(), builtin_harden_generation()}) {
                    patches.push_back(json::parse(serialize_patch(p)));
                }
                return json_response(200, json{{"patches", std::move(patches)}}.dump(2) + "\n");
            }
        } else if (path == "/api/run") {
            if (method == "POST") return post_run(body);
        } else if (path == "/api/compare") {
            if (method == "POST") return post_compare(body);
        } else {
            return error_response(404, {ApiErrorCode::NotFound, "no such endpoint", std::string(path), {}});
        }
        return error_response(405, {ApiErrorCode::MethodNotAllowed,
                                    std::string(method) + " is not supported here", std::string(path), {}});
    } catch (...) {
        return from_exception();
    }
}

HttpResponse Service::get_scenario() const { return json_response(200, serialize_scenario(*scenario())); }

HttpResponse Service::put_scenario(std::string_view body) {
    auto next = std::make_shared<const Scenario>(parse_scenario(body));
    {
        std::lock_guard lock(mu_);
        scenario_ = next;
    }
    return json_response(200, serialize_scenario(*next));
}

HttpResponse Service::post_run(std::string_view body) const {
    SimConfig base;
    base.iterations = opts_.default_iterations;
    const SimConfig cfg = apply_config_overrides(body, base);
    if (cfg.iterations > opts_.max_iterations) {
        return error_response(400, {ApiErrorCode::BadRequest,
                                    "iterations above the service limit of " + std::to_string(opts_.max_iterations),
                                    "/iterations", {}});
    }
    const auto snapshot = scenario();
    HttpResponse r = json_response(200, run_report_json(run_scenario(*snapshot, cfg, {opts_.workers})));
    r.headers["X-Reduced-Fidelity"] = cfg.iterations < kDefaultIterations ? "true" : "false";
    return r;
}

HttpResponse Service::post_compare(std::string_view body) const {
    SimConfig base;
    base.iterations = opts_.default_iterations;
    const SimConfig cfg = apply_config_overrides(body, base, {"patches"});
    if (cfg.iterations > opts_.max_iterations) {
        return error_response(400, {ApiErrorCode::BadRequest,
                                    "iterations above the service limit of " + std::to_string(opts_.max_iterations),
                                    "/iterations", {}});
    }
    const auto snapshot = scenario();
    std::vector<InterventionPatch> patches;
    const json doc = body.empty() ? json::object() : detail::parse_json(body);
    if (auto it = doc.find("patches"); it != doc.end()) {
        const json& arr = detail::read_array(*it, "/patches");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            try {
                patches.push_back(parse_patch(arr[i].dump(), *snapshot));
            } catch (const DocumentError& e) {
                throw DocumentError("/patches/" + std::to_string(i) + e.path(), e.what());
            }
        }
    }
    HttpResponse r = json_response(200, comparison_json(compare(*snapshot, patches, cfg, {opts_.workers})));
    r.headers["X-Reduced-Fidelity"] = cfg.iterations < kDefaultIterations ? "true" : "false";
    return r;
}

int Service::bind(const std::string& host, int port) {
    int bound = port;
    if (port == 0) {
        bound = server_->http.bind_to_any_port(host);
    } else if (!server_->http.bind_to_port(host, port)) {
        bound = -1;
    }
    if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
    return bound;
}

void Service::listen() { server_->http.listen_after_bind(); }

void Service::stop() {
    if (server_ && server_->http.is_running()) server_->http.stop();
}

}  // namespace microres
