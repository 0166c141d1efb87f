// Copyright 2026 The choqdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choqdist/capacity.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "choqdist/error.hpp"

namespace choqdist {

namespace {

void check_table(int n, std::size_t size) {
  if (n < 1 || n > kMaxPlayers) {
    throw Error(ErrorKind::limit,
                "player count " + std::to_string(n) + " outside [1, 20]");
  }
  if (size != (std::size_t{1} << n)) {
    throw Error(ErrorKind::dimension, "table size " + std::to_string(size) +
                                          " does not match 2^" +
                                          std::to_string(n));
  }
}

}  // namespace

Capacity::Capacity(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  check_table(n_, values_.size());
  if (values_[0] != 0.0) {
    throw Error(ErrorKind::grounding, "value of the empty set must be 0");
  }
  for (double x : values_) {
    if (!std::isfinite(x)) {
      throw Error(ErrorKind::domain, "capacity values must be finite");
    }
  }
}

MoebiusRepresentation::MoebiusRepresentation(int n, std::vector<double> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  check_table(n_, coeffs_.size());
}

Subset parse_subset_key(std::string_view key, int n) {
  Subset s = 0;
  if (key.empty()) return s;
  int previous = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = key.find(',', pos);
    const std::string_view token =
        key.substr(pos, comma == std::string_view::npos ? key.size() - pos
                                                         : comma - pos);
    if (token.empty() || token.front() == '0' ||
        token.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(ErrorKind::parse,
                  "malformed subset key \"" + std::string(key) + "\"");
    }
    int player = 0;
    auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), player);
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw Error(ErrorKind::parse,
                  "malformed subset key \"" + std::string(key) + "\"");
    }
    if (player < 1 || player > n) {
      throw Error(ErrorKind::parse, "player index " + std::string(token) +
                                        " out of range in key \"" +
                                        std::string(key) + "\"");
    }
    if (player <= previous) {
      throw Error(ErrorKind::parse, "subset key \"" + std::string(key) +
                                        "\" is not strictly ascending");
    }
    previous = player;
    s |= Subset{1} << (player - 1);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

std::string subset_key(Subset s) {
  std::string key;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1u) {
      if (!key.empty()) key += ',';
      key += std::to_string(i + 1);
    }
  }
  return key;
}

Capacity load_capacity(std::string_view text) {
  using nlohmann::json;

  // nlohmann keeps the last of duplicate keys; catch them while parsing.
  std::string top_key;
  std::unordered_set<std::string> seen;
  std::string duplicate;
  auto callback = [&](int depth, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::key) {
      const auto& k = parsed.get_ref<const std::string&>();
      if (depth == 1) {
        top_key = k;
      } else if (depth == 2 && top_key == "values" && !seen.insert(k).second &&
                 duplicate.empty()) {
        duplicate = k;
      }
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), callback);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
  if (!duplicate.empty()) {
    throw Error(ErrorKind::parse, "duplicate subset key \"" + duplicate + "\"");
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::parse, "capacity document must be a JSON object");
  }
  for (const auto& [k, _] : doc.items()) {
    if (k != "n" && k != "values") {
      throw Error(ErrorKind::parse, "unknown field \"" + k + "\"");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorKind::parse, "field \"n\" must be an integer");
  }
  if (!doc.contains("values") || !doc["values"].is_object()) {
    throw Error(ErrorKind::parse, "field \"values\" must be an object");
  }
  const auto n_raw = doc["n"].get<std::int64_t>();
  if (n_raw < 1 || n_raw > kMaxPlayers) {
    throw Error(ErrorKind::limit,
                "player count " + std::to_string(n_raw) + " outside [1, 20]");
  }
  const int n = static_cast<int>(n_raw);

  const std::size_t size = std::size_t{1} << n;
  std::vector<double> values(size, 0.0);
  std::vector<bool> present(size, false);
  for (const auto& [key, value] : doc["values"].items()) {
    const Subset s = parse_subset_key(key, n);
    if (present[s]) {
      throw Error(ErrorKind::parse, "duplicate subset \"" + subset_key(s) +
                                        "\" (key \"" + key + "\")");
    }
    if (!value.is_number()) {
      throw Error(ErrorKind::parse,
                  "value for key \"" + key + "\" is not a number");
    }
    present[s] = true;
    values[s] = value.get<double>();
  }
  if (values[0] != 0.0) {
    throw Error(ErrorKind::grounding, "value of the empty set must be 0");
  }
  for (Subset s = 1; s < size; ++s) {
    if (!present[s]) {
      throw Error(ErrorKind::completeness,
                  "missing value for subset \"" + subset_key(s) + "\"");
    }
  }
  return Capacity(n, std::move(values));
}

Capacity load_capacity_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_capacity(buffer.str());
}

std::string dump_capacity(const Capacity& v) {
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (Subset s = 1; s < v.size(); ++s) values[subset_key(s)] = v[s];
  nlohmann::ordered_json doc;
  doc["n"] = v.players();
  doc["values"] = std::move(values);
  return doc.dump(2) + "\n";
}

MoebiusRepresentation moebius_transform(const Capacity& v) {
  std::vector<double> m(v.values().begin(), v.values().end());
  const int n = v.players();
  for (int i = 0; i < n; ++i) {
    const Subset bit = Subset{1} << i;
    for (Subset s = 0; s < m.size(); ++s) {
      if (s & bit) m[s] -= m[s ^ bit];
    }
  }
  m[0] = 0.0;
  return MoebiusRepresentation(n, std::move(m));
}

Capacity zeta_transform(const MoebiusRepresentation& m) {
  std::vector<double> v(m.coefficients().begin(), m.coefficients().end());
  v[0] = 0.0;
  const int n = m.players();
  for (int i = 0; i < n; ++i) {
    const Subset bit = Subset{1} << i;
    for (Subset s = 0; s < v.size(); ++s) {
      if (s & bit) v[s] += v[s ^ bit];
    }
  }
  return Capacity(n, std::move(v));
}

Classification classify(const Capacity& v) {
  const int n = v.players();
  const Subset full = full_set(n);
  const double tol = kClassifyTolerance;

  Classification c;

  c.monotone = true;
  for (Subset s = 0; s < full && c.monotone; ++s) {
    for (int i = 0; i < n; ++i) {
      const Subset bit = Subset{1} << i;
      if (!(s & bit) && v[s] > v[s | bit] + tol) {
        c.monotone = false;
        break;
      }
    }
  }

  bool zero_one = true;
  for (double x : v.values()) {
    if (x != 0.0 && x != 1.0) {
      zero_one = false;
      break;
    }
  }
  c.lattice_polynomial = c.monotone && zero_one && v[full] == 1.0;

  std::vector<double> lo(n + 1, HUGE_VAL), hi(n + 1, -HUGE_VAL);
  for (Subset s = 0; s <= full; ++s) {
    const int k = cardinality(s);
    lo[k] = std::min(lo[k], v[s]);
    hi[k] = std::max(hi[k], v[s]);
  }
  c.cardinality_based = true;
  for (int k = 0; k <= n; ++k) {
    if (hi[k] - lo[k] > tol) c.cardinality_based = false;
  }

  c.additive = true;
  for (Subset s = 1; s <= full; ++s) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (s & (Subset{1} << i)) sum += v[Subset{1} << i];
    }
    if (std::abs(v[s] - sum) > tol) {
      c.additive = false;
      break;
    }
  }
  return c;
}

std::vector<double> knot_profile(const Capacity& v,
                                 std::span<const int> sigma) {
  const int n = v.players();
  if (static_cast<int>(sigma.size()) != n) {
    throw Error(ErrorKind::domain, "permutation has length " +
                                       std::to_string(sigma.size()) +
                                       ", expected " + std::to_string(n));
  }
  std::vector<double> knots(n + 1);
  knots[0] = 0.0;
  Subset chain = 0;
  for (int i = 0; i < n; ++i) {
    const int p = sigma[i];
    if (p < 0 || p >= n || (chain & (Subset{1} << p))) {
      throw Error(ErrorKind::domain, "not a permutation of the players");
    }
    chain |= Subset{1} << p;
    knots[i + 1] = v[chain];
  }
  return knots;
}

}  // namespace choqdist
