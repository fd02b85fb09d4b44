#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace atcert {

// Vertex identifiers are short strings ("a", "r3", ...).
using VertexId = std::string;

// Exact integer coefficients. cpp_int keeps small values inline and widens
// on demand, so products of many edge factors never wrap.
using Coeff = boost::multiprecision::cpp_int;

// Input failed structural validation (bad graph, bad file, bad arguments).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size guard was exceeded. Never silently truncates.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// The certifier failed to find a witness the theory guarantees; a bug either
// in the certifier or in the instance construction.
class CertifierError : public std::runtime_error {
public:
    explicit CertifierError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace atcert
