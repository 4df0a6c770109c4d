#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "microres/risk_model.hpp"
#include "microres/sim_engine.hpp"

namespace microres {

enum class ApiErrorCode {
    BadRequest,
    InvalidDocument,
    ValidationFailed,
    PatchUnresolvable,
    NotFound,
    MethodNotAllowed,
    EngineError,
};

[[nodiscard]] std::string_view api_error_code_name(ApiErrorCode c) noexcept;

struct ApiError {
    ApiErrorCode code = ApiErrorCode::BadRequest;
    std::string message;
    std::string path;
    std::vector<ValidationIssue> issues;
};

struct ServiceOptions {
    std::uint64_t default_iterations = 100'000;  // interactive default
    std::uint64_t max_iterations = 10'000'000;
    unsigned workers = 0;
};

struct HttpResponse {
    int status = 200;
    std::string body;
    std::map<std::string, std::string> headers;
};

/// Local JSON API over one in-memory scenario. Scenario replacement is atomic:
/// each request works on the snapshot current when it started.
class Service {
public:
    explicit Service(Scenario initial, ServiceOptions opts = {});
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Routes one request without any socket. Used by the HTTP layer and tests.
    [[nodiscard]] HttpResponse handle(std::string_view method, std::string_view path, std::string_view body);

    [[nodiscard]] std::shared_ptr<const Scenario> scenario() const;

    /// Binds to `port` (0 picks a free one) and returns the bound port; throws on failure.
    int bind(const std::string& host, int port);
    /// Serves until stop(). Call after bind().
    void listen();
    void stop();

private:
    HttpResponse get_scenario() const;
    HttpResponse put_scenario(std::string_view body);
    HttpResponse post_run(std::string_view body) const;
    HttpResponse post_compare(std::string_view body) const;

    ServiceOptions opts_;
    mutable std::mutex mu_;
    std::shared_ptr<const Scenario> scenario_;
    struct Server;
    std::unique_ptr<Server> server_;
};

[[nodiscard]] std::string api_error_json(const ApiError& e);

}  // namespace microres
