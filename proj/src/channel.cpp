#include "gicbound/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

namespace gicb {

Channel make_channel(int K, std::vector<cd> H, std::vector<double> P, Field field) {
  if (K < 2) throw ConfigError("channel needs at least two users");
  const auto n = static_cast<std::size_t>(K);
  if (H.size() != n * n) throw ConfigError("channel matrix must be K x K");
  if (P.size() != n) throw ConfigError("power vector must have K entries");
  for (std::size_t k = 0; k < n; ++k)
    if (H[k * n + k] != cd{1.0, 0.0}) throw ConfigError("channel diagonal must be exactly 1");
  for (const cd& x : H) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw DomainError("channel coefficients must be finite");
    if (field == Field::real && x.imag() != 0.0)
      throw DomainError("real-field channel with complex coefficient");
  }
  for (double p : P)
    if (!std::isfinite(p) || p < 0.0) throw DomainError("powers must be finite and nonnegative");
  return Channel{K, field, std::move(H), std::move(P)};
}

Channel make_symmetric(int K, cd g, double P, Field field) {
  if (K < 2) throw ConfigError("channel needs at least two users");
  std::vector<cd> H(static_cast<std::size_t>(K) * K, g);
  for (int k = 0; k < K; ++k) H[static_cast<std::size_t>(k) * K + k] = 1.0;
  return make_channel(K, std::move(H), std::vector<double>(K, P), field);
}

Channel make_semi_symmetric(int K, const std::vector<cd>& g_list, double P, Field field) {
  if (K < 2) throw ConfigError("channel needs at least two users");
  if (g_list.size() != static_cast<std::size_t>(K - 1))
    throw ConfigError("semi-symmetric channel needs K-1 cross gains");
  std::vector<cd> H(static_cast<std::size_t>(K) * K, 0.0);
  for (int k = 0; k < K; ++k) {
    H[static_cast<std::size_t>(k) * K + k] = 1.0;
    for (int i = 1; i < K; ++i) H[static_cast<std::size_t>(k) * K + (k + i) % K] = g_list[i - 1];
  }
  return make_channel(K, std::move(H), std::vector<double>(K, P), field);
}

double alpha_to_gain(double alpha, double P) {
  if (!(P > 1.0)) throw DomainError("alpha parametrization requires P > 1");
  return std::pow(P, alpha - 1.0);
}

double gain_to_alpha(double g2, double P) {
  if (!(P > 1.0)) throw DomainError("alpha parametrization requires P > 1");
  if (!(g2 > 0.0)) throw DomainError("alpha undefined for zero gain");
  return std::log(g2 * P) / std::log(P);
}

Channel permuted(const Channel& ch, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(ch.K)) throw ConfigError("permutation length must be K");
  std::vector<int> seen(ch.K, 0);
  for (int p : perm) {
    if (p < 0 || p >= ch.K || seen[p]++) throw ConfigError("malformed permutation");
  }
  Channel out = ch;
  for (int i = 0; i < ch.K; ++i) {
    out.P[i] = ch.P[perm[i]];
    for (int j = 0; j < ch.K; ++j) out.h(i, j) = ch.h(perm[i], perm[j]);
  }
  return out;
}

bool is_symmetric(const Channel& ch, double tol) {
  const cd g = ch.h(0, 1);
  for (int k = 0; k < ch.K; ++k) {
    if (std::abs(ch.P[k] - ch.P[0]) > tol * std::max(1.0, ch.P[0])) return false;
    for (int i = 0; i < ch.K; ++i)
      if (i != k && std::abs(ch.h(k, i) - g) > tol) return false;
  }
  return true;
}

bool is_circulant(const Channel& ch, double tol) {
  for (int k = 0; k < ch.K; ++k) {
    if (std::abs(ch.P[k] - ch.P[0]) > tol * std::max(1.0, ch.P[0])) return false;
    for (int i = 0; i < ch.K; ++i)
      if (std::abs(ch.h(k, (k + i) % ch.K) - ch.h(0, i)) > tol) return false;
  }
  return true;
}

cd symmetric_gain(const Channel& ch) {
  if (!is_symmetric(ch)) throw ConfigError("channel is not symmetric");
  return ch.h(0, 1);
}

bool cyclic_condition_holds(const Channel& ch, double rel_tol) {
  // One-based i = 2..K-2, j = i+2..K, written cross-multiplied.
  for (int i = 2; i <= ch.K - 2; ++i) {
    for (int j = i + 2; j <= ch.K; ++j) {
      const cd lhs = ch.h(i - 2, j - 1) * ch.h(i - 1, i);
      const cd rhs = ch.h(i - 2, i) * ch.h(i - 1, j - 1);
      const double scale = std::max(std::abs(lhs), std::abs(rhs));
      if (std::abs(lhs - rhs) > rel_tol * scale) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> all_permutations(int K) {
  std::vector<int> p(K);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CyclicCheck cyclic_reduction_check(const Channel& ch, double rel_tol) {
  std::vector<int> id(ch.K);
  std::iota(id.begin(), id.end(), 0);
  if (ch.K <= 3) return {true, id};
  std::vector<int> p = id;
  do {
    if (cyclic_condition_holds(permuted(ch, p), rel_tol)) return {true, p};
  } while (std::next_permutation(p.begin(), p.end()));
  return {false, {}};
}

namespace {

cd parse_complex(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
  throw ConfigError("complex value must be a number or {\"re\",\"im\"} object");
}

Field parse_field(const nlohmann::json& j) {
  const std::string f = j.value("field", std::string("complex"));
  if (f == "real") return Field::real;
  if (f == "complex") return Field::complex;
  throw ConfigError("field must be \"real\" or \"complex\"");
}

}  // namespace

Channel channel_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const Field field = parse_field(j);
    if (j.contains("sym")) {
      const auto& s = j["sym"];
      return make_symmetric(j.value("k", 3), parse_complex(s.at("g")), s.at("p").get<double>(), field);
    }
    if (j.contains("semisym")) {
      const auto& s = j["semisym"];
      std::vector<cd> gl;
      for (const auto& g : s.at("g_list")) gl.push_back(parse_complex(g));
      const int K = j.value("k", static_cast<int>(gl.size()) + 1);
      return make_semi_symmetric(K, gl, s.at("p").get<double>(), field);
    }
    const auto& rows = j.at("h");
    const int K = j.value("k", static_cast<int>(rows.size()));
    if (rows.size() != static_cast<std::size_t>(K)) throw ConfigError("\"h\" must have k rows");
    std::vector<cd> H;
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(K)) throw ConfigError("\"h\" rows must have k entries");
      for (const auto& x : row) H.push_back(parse_complex(x));
    }
    std::vector<double> P;
    if (j.at("p").is_array()) {
      for (const auto& x : j["p"]) P.push_back(x.get<double>());
    } else {
      P.assign(K, j["p"].get<double>());
    }
    return make_channel(K, std::move(H), std::move(P), field);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
}

}  // namespace gicb
