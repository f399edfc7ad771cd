#include "redbench/log/logger.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>

#include "redbench/errors.hpp"

namespace redbench::log {

const char* level_name(Level level) {
  switch (level) {
    case Level::debug: return "DEBUG";
    case Level::info: return "INFO";
    case Level::warning: return "WARNING";
    case Level::error: return "ERROR";
  }
  return "?";
}

namespace {

std::string now_string() {
  using namespace std::chrono;
  auto now = system_clock::now();
  auto ms = duration_cast<milliseconds>(now.time_since_epoch()) % 1000;
  std::time_t t = system_clock::to_time_t(now);
  std::tm tm{};
  localtime_r(&t, &tm);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d %02d:%02d:%02d.%03d",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec, static_cast<int>(ms.count()));
  return buf;
}

constexpr size_t kCaptureLimit = 4096;

}  // namespace

std::string Record::formatted() const {
  std::string out = timestamp;
  out += " | ";
  out += level_name(level);
  out += " | ";
  out += file;
  out += ":";
  out += std::to_string(line);
  out += " | ";
  out += message;
  return out;
}

Logger& Logger::instance() {
  static Logger logger;
  return logger;
}

void Logger::configure(const LogConfig& cfg) {
  std::lock_guard<std::mutex> lock(mu_);
  if (file_.is_open()) file_.close();
  if (cfg.sink_path) {
    std::filesystem::path p(*cfg.sink_path);
    if (p.has_parent_path()) {
      std::error_code ec;
      std::filesystem::create_directories(p.parent_path(), ec);
    }
    file_.open(p, std::ios::app);
    if (!file_) fail(Errc::sink_unwritable, "cannot open log sink " + *cfg.sink_path);
  }
  cfg_ = cfg;
}

void Logger::emit(Level level, std::string_view message,
                  const std::source_location& loc) {
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<int>(level) < static_cast<int>(cfg_.level)) return;

  Record rec;
  rec.timestamp = now_string();
  rec.level = level;
  rec.file = std::filesystem::path(loc.file_name()).filename().string();
  rec.line = loc.line();
  rec.message = std::string(message);

  std::string line = rec.formatted();
  if (cfg_.console) std::cerr << line << "\n";
  if (file_.is_open()) {
    file_ << line << "\n";
    file_.flush();
  }
  buffer_.push_back(std::move(rec));
  if (buffer_.size() > kCaptureLimit) buffer_.pop_front();
}

Level Logger::level() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cfg_.level;
}

std::vector<Record> Logger::capture() const {
  std::lock_guard<std::mutex> lock(mu_);
  return {buffer_.begin(), buffer_.end()};
}

void Logger::clear_capture() {
  std::lock_guard<std::mutex> lock(mu_);
  buffer_.clear();
}

Logger& setup_logger(const LogConfig& cfg) {
  Logger& logger = Logger::instance();
  logger.configure(cfg);
  return logger;
}

}  // namespace redbench::log
