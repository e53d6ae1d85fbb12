#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace drl {

enum class LogLevel : int { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Level comes from DRL_LOG_LEVEL={error|warn|info|debug}; default warn.
inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("DRL_LOG_LEVEL");
        if (!env) return LogLevel::Warn;
        if (std::strcmp(env, "error") == 0) return LogLevel::Error;
        if (std::strcmp(env, "info") == 0) return LogLevel::Info;
        if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
        return LogLevel::Warn;
    }();
    return level;
}

template <typename... Args>
void log_at(LogLevel lvl, const char* tag, const char* fmt, Args... args) {
    if (static_cast<int>(lvl) > static_cast<int>(log_level())) return;
    std::fprintf(stderr, "[%s] ", tag);
    std::fprintf(stderr, fmt, args...);
    std::fputc('\n', stderr);
}

#define DRL_LOG_ERROR(...) ::drl::log_at(::drl::LogLevel::Error, "error", __VA_ARGS__)
#define DRL_LOG_WARN(...) ::drl::log_at(::drl::LogLevel::Warn, "warn", __VA_ARGS__)
#define DRL_LOG_INFO(...) ::drl::log_at(::drl::LogLevel::Info, "info", __VA_ARGS__)
#define DRL_LOG_DEBUG(...) ::drl::log_at(::drl::LogLevel::Debug, "debug", __VA_ARGS__)

}  // namespace drl
