#pragma once

#include "tenv/backends/degree.hpp"
#include "tenv/io/json.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace tenv::cli {

constexpr const char* kSchema = "tensor-envelope/1";

struct Request {
    std::string command;
    Backend backend = Backend::opset;
    Degree degree = Degree::t_power;
    std::optional<std::string> basis;
    std::optional<std::uint32_t> x, y, z, x2, y2;
    std::optional<std::string> f, g;
    std::optional<std::string> to, method, factors;
    std::optional<mpq_class> eval_at;
    std::string format = "json";
    std::optional<std::string> out;
    std::uint32_t max_size = 3;
    unsigned threads = 1;
    bool all = false;
    bool with_mobius = false;
    std::vector<std::string> suites;
};

struct Response {
    Json doc;
    std::string text;
    int exit_code = 0;
};

Response dispatch(const Request& req);

}  // namespace tenv::cli
