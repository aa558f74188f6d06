#ifndef GOLDSIEVE_ERRORS_HPP
#define GOLDSIEVE_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "goldsieve/types.hpp"

namespace goldsieve {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// An operation would grow a working set past its configured index cap.
class resource_limit_error : public error {
public:
    resource_limit_error(const std::string& what_arg, Int requested, Int cap)
        : error(what_arg), requested_(requested), cap_(cap) {}
    Int requested() const { return requested_; }
    Int cap() const { return cap_; }

private:
    Int requested_;
    Int cap_;
};

// A sieve needed a term beyond the stored prefix of an explicit ground.
class bounded_prefix_error : public error {
public:
    using error::error;
};

// Malformed b-file input; line numbers are 1-based.
class parse_error : public error {
public:
    parse_error(const std::string& what_arg, Int line) : error(what_arg), line_(line) {}
    Int line() const { return line_; }

private:
    Int line_;
};

// A sequence handed to gap-word analysis has a gap outside {1, 2}.
class two_gap_error : public error {
public:
    using error::error;
};

// Invalid surd arithmetic: mixed irrational radicands or division by zero.
class arithmetic_error : public error {
public:
    using error::error;
};

}

#endif
