#pragma once

#include <stdexcept>
#include <string>

namespace multicurve {

/// Bad argument values: date ordering, alpha outside [0,1], unsorted knots, ...
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input data (quote files, schedules, fixtures).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Quote/curve file parse failure; carries the offending line number (1-based, 0 = n/a).
class parse_error : public input_error {
public:
    parse_error(const std::string& what, long line)
        : input_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// A pricing request could not resolve a curve, fixing or FX rate; names the missing key.
class context_error : public std::runtime_error {
public:
    context_error(const std::string& what, std::string key)
        : std::runtime_error(what + ": " + key), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Root bracketing failed: f(lo) and f(hi) have the same sign.
class bracketing_error : public domain_error {
public:
    explicit bracketing_error(const std::string& what) : domain_error(what) {}
};

/// An iteration limit was hit; carries the best iterate found so far.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double best)
        : std::runtime_error(what), best_(best) {}
    double best_iterate() const { return best_; }

private:
    double best_;
};

} // namespace multicurve
