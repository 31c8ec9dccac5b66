#pragma once

#include <string>
#include <vector>

#include "itconn/extension.hpp"
#include "itconn/hderiv.hpp"
#include "itconn/idmod.hpp"
#include "json.hpp"

namespace itconn::cli {

using Json = nlohmann::ordered_json;

// Loads a JSON document from a path ("-" reads stdin). Throws InputError.
Json load_json(const std::string& path);

uint32_t read_prime(const Json& j);
unsigned read_unsigned(const Json& j, const char* key);
std::vector<uint32_t> read_digits(const Json& j, const char* key);

RatFunc read_ratfunc(const Json& j, uint32_t p);
idmod::RMat read_matrix(const Json& j, uint32_t p, std::size_t n);
std::vector<idmod::RMat> read_matrices(const Json& j, const char* key, uint32_t p, std::size_t n);

Json render_matrix(const idmod::RMat& m);

// Reads {p, domain:{kind, vars|minpoly}, N, images:[series]} and runs the
// iterativity check on whichever domain it names. The truncation order can
// be overridden. Each image is an array of T-coefficients c_0, c_1, ...; on
// polynomial domains a single expression in the variables and T also works.
hderiv::IterativityReport check_iterative_document(const Json& j, unsigned N_override, std::string& domain_out);

}  // namespace itconn::cli
