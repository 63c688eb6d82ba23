#pragma once
#include <functional>
#include <iostream>
#include <string>
#include <utility>

namespace orisfso {

// Process-wide warning sink.  Default prints to stderr; tests and the CLI
// install their own handlers (collecting, or tagging with the sweep point).
inline std::function<void(const std::string&)>& warning_handler() {
    static std::function<void(const std::string&)> handler =
        [](const std::string& msg) { std::cerr << "[warn] " << msg << '\n'; };
    return handler;
}

inline void set_warning_handler(std::function<void(const std::string&)> h) {
    warning_handler() = std::move(h);
}

inline void emit_warning(const std::string& msg) { warning_handler()(msg); }

}  // namespace orisfso
