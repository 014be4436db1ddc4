#include "lsl/io.hpp"

#include <cmath>
#include <cstdio>
#include <string_view>

namespace lsl {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void dump_into(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      break;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_into(out, v, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(k).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(out, v, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump(const Json& j, int indent) {
  std::string out;
  dump_into(out, j, indent, 0);
  return out;
}

Json bigint_to_json(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return Json(v.get_si());
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    return BigInt(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw DomainError("field '" + field + "' must be an integer or a decimal string");
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(bigint_from_json(j, field));
  throw DomainError("field '" + field + "' must be a \"num/den\" string");
}

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw DomainError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t small_int(const Json& j, const char* key) {
  const BigInt v = bigint_from_json(require(j, key), key);
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw DomainError(std::string("field '") + key + "' too large");
  return v.get_si();
}

}  // namespace

Json to_json(const FareySequence& seq) {
  Json out = Json::array();
  for (const auto& f : seq.fractions()) out.push_back(std::to_string(f.num) + "/" + std::to_string(f.den));
  return out;
}

Json to_json(const SpacedSet& set) {
  Json pts = Json::array();
  for (const auto& p : set.points()) pts.push_back(p.to_string());
  return Json{{"points", pts}, {"delta", set.delta().to_string()}, {"P", set.enclosure().to_string()}};
}

SpacedSet spaced_set_from_json(const Json& j) {
  const Json& pts = j.contains("X") ? j.at("X") : require(j, "points");
  if (!pts.is_array()) throw DomainError("field 'X' must be an array of \"num/den\" strings");
  std::vector<Rational> xs;
  for (const auto& p : pts) xs.push_back(rational_from_json(p, "X"));
  return SpacedSet(std::move(xs), rational_from_json(require(j, "delta"), "delta"),
                   rational_from_json(require(j, "P"), "P"));
}

Json to_json(const BoundReport& rep) {
  Json factors = Json::object();
  for (const auto& [k, v] : rep.factors) factors[k] = v;
  Json out{{"name", rep.name},
           {"lhs", rep.lhs},
           {"rhs", rep.rhs},
           {"error_budget", rep.error_budget},
           {"factors", factors},
           {"pass", rep.passed()}};
  if (!rep.cross_checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : rep.cross_checks) checks.push_back(to_json(c));
    out["cross_checks"] = checks;
  }
  return out;
}

Json to_json(const Prop1Report& rep) {
  Json pts = Json::array();
  for (const auto& [x, y] : rep.points) pts.push_back(Json::array({bigint_to_json(x), bigint_to_json(y)}));
  Json bounds = Json::object();
  for (const auto& b : rep.bounds)
    bounds[b.name] = Json{{"value", b.lhs}, {"limit", b.rhs}, {"holds", b.verdict}};
  return Json{{"points", pts}, {"coprime", rep.coprime}, {"bounds", bounds}, {"pass", rep.pass()}};
}

Json to_json(const AdditiveProfile& prof) {
  Json counts = Json::object();
  for (const auto& [k, c] : prof.counts) counts[k.get_str()] = c;
  return Json{{"counts", counts}, {"sup_A", prof.sup_a}, {"diameter", bigint_to_json(prof.diameter)}};
}

std::vector<Complex> amplitudes_from_json(const Json& j, std::size_t n) {
  std::vector<Complex> out;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    constexpr std::string_view rnd = "random(";
    if (s == "ones") {
      out = ones(n);
    } else if (s.starts_with(rnd) && s.ends_with(")")) {
      const BigInt seed = parse_bigint(std::string_view(s).substr(rnd.size(), s.size() - rnd.size() - 1));
      if (seed < 0 || !mpz_fits_ulong_p(seed.get_mpz_t())) throw DomainError("random(seed): bad seed");
      out = random_amplitudes(n, seed.get_ui());
    } else {
      throw DomainError("amplitudes: unknown generator '" + s + "'");
    }
  } else if (j.is_object()) {
    return amplitudes_from_json(require(j, "a"), n);
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_number()) {
        out.emplace_back(v.get<double>(), 0.0);
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        out.emplace_back(v[0].get<double>(), v[1].get<double>());
      } else {
        throw DomainError("amplitudes: entries must be [re, im] pairs");
      }
    }
  } else {
    throw DomainError("amplitudes: expected \"ones\", \"random(seed)\" or an array");
  }
  if (out.size() != n)
    throw DomainError("amplitudes: expected " + std::to_string(n) + " values, got " +
                      std::to_string(out.size()));
  return out;
}

SieveInstance sieve_instance_from_json(const Json& j) {
  const Rational c0 = rational_from_json(require(j, "c0"), "c0");
  const Rational c1 = j.contains("c1") ? rational_from_json(j.at("c1"), "c1") : Rational(0);
  const Rational c2 = j.contains("c2") ? rational_from_json(j.at("c2"), "c2") : Rational(0);
  const BigInt m = bigint_from_json(require(j, "M"), "M");
  const std::int64_t n = small_int(j, "N");
  const std::int64_t order = small_int(j, "Q");
  if (n < 1) throw DomainError("field 'N' must be >= 1");
  const Json amps = j.contains("a") ? j.at("a") : Json("ones");
  auto amp = QuadraticAmplitude::make(c0, c1, c2, m, n, amplitudes_from_json(amps, static_cast<std::size_t>(n)));
  if (j.contains("p") || j.contains("q")) {
    const BigInt p = bigint_from_json(require(j, "p"), "p");
    const BigInt q = bigint_from_json(require(j, "q"), "q");
    if (p != amp.p || q != amp.q)
      throw DomainError("fields 'p'/'q' disagree with c1/c0 = " + amp.p.get_str() + "/" + amp.q.get_str());
  }
  return SieveInstance::make(std::move(amp), order);
}

SpacedInput spaced_input_from_json(const Json& j) {
  SpacedSet xs = spaced_set_from_json(j);
  const Json& ys = require(j, "y");
  if (!ys.is_array()) throw DomainError("field 'y' must be an array of integers");
  std::vector<BigInt> y;
  for (const auto& v : ys) y.push_back(bigint_from_json(v, "y"));
  const Json amps = j.contains("a") ? j.at("a") : Json("ones");
  auto a = amplitudes_from_json(amps, y.size());
  return SpacedInput{std::move(xs), std::move(a), std::move(y)};
}

}  // namespace lsl
