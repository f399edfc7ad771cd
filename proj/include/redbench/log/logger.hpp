#pragma once

#include <deque>
#include <fstream>
#include <mutex>
#include <optional>
#include <source_location>
#include <string>
#include <vector>

namespace redbench::log {

enum class Level { debug = 0, info = 1, warning = 2, error = 3 };

const char* level_name(Level level);

struct LogConfig {
  std::optional<std::string> sink_path;  // file sink; console always on unless quieted
  Level level = Level::info;
  bool console = true;
};

struct Record {
  std::string timestamp;
  Level level;
  std::string file;
  unsigned line;
  std::string message;

  std::string formatted() const;
};

// Process-wide shared logger. Emission is serialized by a mutex; every record
// that passes the level filter goes to all active sinks plus an in-memory
// capture buffer that tests can inspect.
class Logger {
 public:
  static Logger& instance();

  void configure(const LogConfig& cfg);

  void emit(Level level, std::string_view message,
            const std::source_location& loc = std::source_location::current());

  Level level() const;

  std::vector<Record> capture() const;
  void clear_capture();

 private:
  Logger() = default;

  mutable std::mutex mu_;
  LogConfig cfg_;
  std::ofstream file_;
  std::deque<Record> buffer_;
};

// setup_logger returns the shared logger so call sites can chain off it.
Logger& setup_logger(const LogConfig& cfg);

inline void debug(std::string_view msg, const std::source_location& loc =
                                            std::source_location::current()) {
  Logger::instance().emit(Level::debug, msg, loc);
}
inline void info(std::string_view msg, const std::source_location& loc =
                                           std::source_location::current()) {
  Logger::instance().emit(Level::info, msg, loc);
}
inline void warning(std::string_view msg, const std::source_location& loc =
                                              std::source_location::current()) {
  Logger::instance().emit(Level::warning, msg, loc);
}
inline void error(std::string_view msg, const std::source_location& loc =
                                            std::source_location::current()) {
  Logger::instance().emit(Level::error, msg, loc);
}

}  // namespace redbench::log
