#include "qte/types.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qte {

std::vector<double> MatchedSample::outcomes(int arm) const {
  std::vector<double> out;
  out.reserve(obs_.size() / 2);
  for (const auto& o : obs_) {
    if (o.a == arm) out.push_back(o.y);
  }
  return out;
}

std::vector<int> MatchedSample::arm_indices(int arm) const {
  std::vector<int> out;
  out.reserve(obs_.size() / 2);
  for (int i = 0; i < n_units(); ++i) {
    if (obs_[static_cast<size_t>(i)].a == arm) out.push_back(i);
  }
  return out;
}

MatchedSample MatchedSample::with_pair_order(const std::vector<int>& order) const {
  MatchedSample out = *this;
  out.pairs_.clear();
  out.pairs_.reserve(pairs_.size());
  for (int j : order) out.pairs_.push_back(pairs_[static_cast<size_t>(j)]);
  return out;
}

MatchedSample validate_sample(const std::vector<Observation>& raw,
                              bool require_pairs) {
  if (raw.empty()) throw EmptyInput("validate_sample: no observations");

  const size_t d = raw.front().x.size();
  int treated = 0;
  size_t with_pair = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    const Observation& o = raw[i];
    if (o.a != 0 && o.a != 1) {
      throw ParseError("treatment indicator must be 0 or 1 (unit " +
                       std::to_string(i) + ")");
    }
    if (!std::isfinite(o.y)) {
      throw ParseError("non-finite outcome (unit " + std::to_string(i) + ")");
    }
    if (o.x.size() != d) {
      throw ParseError("inconsistent covariate dimension (unit " +
                       std::to_string(i) + ")");
    }
    for (double v : o.x) {
      if (!std::isfinite(v)) {
        throw ParseError("non-finite covariate (unit " + std::to_string(i) + ")");
      }
    }
    treated += o.a;
    if (o.pair_id.has_value()) {
      if (*o.pair_id < 0) {
        throw ParseError("negative pair id (unit " + std::to_string(i) + ")");
      }
      ++with_pair;
    }
  }

  const int control = static_cast<int>(raw.size()) - treated;
  if (treated != control) {
    throw UnbalancedTreatment(std::to_string(treated) + " treated vs " +
                              std::to_string(control) + " control units");
  }

  MatchedSample s;
  s.obs_ = raw;
  s.n_ = treated;

  if (with_pair == raw.size()) {
    // Group by pair id; pair order follows the id values.
    std::map<std::int64_t, std::vector<int>> groups;
    for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
      groups[*raw[static_cast<size_t>(i)].pair_id].push_back(i);
    }
    for (const auto& [id, members] : groups) {
      if (members.size() != 2) {
        throw BadPair("pair " + std::to_string(id) + " has " +
                      std::to_string(members.size()) + " members");
      }
      const int a0 = raw[static_cast<size_t>(members[0])].a;
      const int a1 = raw[static_cast<size_t>(members[1])].a;
      if (a0 + a1 != 1) {
        throw BadPair("pair " + std::to_string(id) +
                      " does not have exactly one treated unit");
      }
      s.pairs_.emplace_back(members[0], members[1]);
    }
  } else if (with_pair != 0) {
    throw MissingPairs("pair ids present on only " + std::to_string(with_pair) +
                       " of " + std::to_string(raw.size()) + " units");
  } else if (require_pairs) {
    throw MissingPairs("pair identities required but absent");
  }

  return s;
}

QuantileGrid::QuantileGrid(std::vector<double> taus) : taus_(std::move(taus)) {
  if (taus_.empty()) throw BadConfig("QuantileGrid: empty tau list");
  double prev = 0.0;
  for (double t : taus_) {
    if (!(t >= 0.01 && t <= 0.99)) {
      throw BadConfig("QuantileGrid: tau must lie in [0.01, 0.99]");
    }
    if (t <= prev) throw BadConfig("QuantileGrid: taus must be strictly increasing");
    prev = t;
  }
}

RoleIndex pair_roles(const MatchedSample& sample) {
  if (!sample.has_pairs()) throw MissingPairs("pair_roles needs pair identities");

  const auto& pairs = sample.pairs();
  const int n = sample.n_pairs();
  RoleIndex idx;
  idx.treated.resize(static_cast<size_t>(n));
  idx.control.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto [u, v] = pairs[static_cast<size_t>(j)];
    if (sample.obs(u).a == 1) {
      idx.treated[static_cast<size_t>(j)] = u;
      idx.control[static_cast<size_t>(j)] = v;
    } else {
      idx.treated[static_cast<size_t>(j)] = v;
      idx.control[static_cast<size_t>(j)] = u;
    }
  }

  const int half = n / 2;
  idx.quads.resize(static_cast<size_t>(half));
  for (int k = 0; k < half; ++k) {
    const auto& p1 = pairs[static_cast<size_t>(2 * k)];
    const auto& p2 = pairs[static_cast<size_t>(2 * k + 1)];
    const int units[4] = {p1.first, p1.second, p2.first, p2.second};
    int t_seen = 0, c_seen = 0;
    auto& q = idx.quads[static_cast<size_t>(k)];
    for (int u : units) {
      if (sample.obs(u).a == 1) {
        q[t_seen == 0 ? 0 : 2] = u;  // (k,1) then (k,3)
        ++t_seen;
      } else {
        q[c_seen == 0 ? 1 : 3] = u;  // (k,2) then (k,4)
        ++c_seen;
      }
    }
  }
  return idx;
}

std::string method_name(BootstrapMethod m) {
  switch (m) {
    case BootstrapMethod::NaiveMultiplier: return "naive";
    case BootstrapMethod::NaivePair: return "naive-pair";
    case BootstrapMethod::Gradient: return "gradient";
    case BootstrapMethod::IpwMultiplier: return "ipw";
  }
  return "?";
}

BootstrapMethod parse_method(const std::string& name) {
  if (name == "naive") return BootstrapMethod::NaiveMultiplier;
  if (name == "naive-pair") return BootstrapMethod::NaivePair;
  if (name == "gradient") return BootstrapMethod::Gradient;
  if (name == "ipw") return BootstrapMethod::IpwMultiplier;
  throw BadConfig("unknown bootstrap method '" + name + "'");
}

std::vector<double> BootstrapDraws::column(int g) const {
  std::vector<double> col(static_cast<size_t>(b_reps));
  for (int b = 0; b < b_reps; ++b) col[static_cast<size_t>(b)] = at(b, g);
  return col;
}

}  // namespace qte
