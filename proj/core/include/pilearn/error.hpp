#pragma once

#include <stdexcept>
#include <string>

namespace pilearn {

// Malformed external input: CSV rows, model JSON, schema files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal guarantee was broken (e.g. the working graph lost chordality).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pilearn
