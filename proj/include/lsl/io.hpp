// io.hpp
//
// JSON schemas for the command-line surface. Rationals always travel as
// "num/den" strings; big integers as JSON integers when they fit in 64 bits
// and as decimal strings otherwise.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsl/expsum.hpp"
#include "lsl/farey.hpp"
#include "lsl/lattice.hpp"
#include "lsl/report.hpp"
#include "lsl/sieve_bounds.hpp"

namespace lsl {

using Json = nlohmann::ordered_json;

/// "%.17g".
std::string format_double(double v);

/// Pretty-printed like Json::dump(indent), but floats use format_double.
std::string dump(const Json& j, int indent = 2);

Json bigint_to_json(const BigInt& v);
/// Accepts a JSON integer or a decimal string.
BigInt bigint_from_json(const Json& j, const std::string& field);
Rational rational_from_json(const Json& j, const std::string& field);

/// ["1/4", "1/3", ...].
Json to_json(const FareySequence& seq);
Json to_json(const SpacedSet& set);
SpacedSet spaced_set_from_json(const Json& j);

Json to_json(const BoundReport& rep);
/// {"points": [[x,y],...], "bounds": {...}, "pass": bool}.
Json to_json(const Prop1Report& rep);
/// {"counts": {"k": count, ...}, "sup_A": ..., "diameter": ...}.
Json to_json(const AdditiveProfile& prof);

/// Amplitudes given as "ones", "random(<seed>)", [[re, im], ...], or an
/// object {"M": .., "N": .., "a": [[re, im], ...]}. Throws DomainError when
/// the length differs from n.
std::vector<Complex> amplitudes_from_json(const Json& j, std::size_t n);

/// {"c0":"1/1","c1":"0/1","c2":"0/1","p":0,"q":1,"M":0,"N":2,"Q":3,"a":"ones"}.
/// p and q are optional; when present they must equal c1/c0 in lowest terms.
SieveInstance sieve_instance_from_json(const Json& j);

struct SpacedInput {
  SpacedSet x;
  std::vector<Complex> a;
  std::vector<BigInt> y;
};
/// {"X": ["num/den", ...], "delta": "num/den", "P": "num/den", "y": [..], "a": ...}.
SpacedInput spaced_input_from_json(const Json& j);

}  // namespace lsl
