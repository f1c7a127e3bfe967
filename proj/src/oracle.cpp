// Brute-force hhpb: every configuration pair, every bijection, attacker
// winning region by least fixed point. Deliberately independent of the
// causal-order and transition helpers used by the main decision procedure.

#include <algorithm>
#include <map>

#include "revccs/equivalences.hpp"
#include "revccs/errors.hpp"

namespace revccs {

namespace {

struct Side {
  const ConfStruct& c;
  std::vector<EventSet> configs;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> up;    // (event, config)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> down;  // (event, config)
  std::vector<std::vector<EventSet>> below;  // below[i][e]: events under e inside configs[i]

  explicit Side(const ConfStruct& s) : c(s), configs(s.configurations()) {
    const std::size_t n = configs.size();
    up.resize(n);
    down.resize(n);
    below.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (configs[j].size() != configs[i].size() + 1 || !configs[i].subset_of(configs[j])) {
          continue;
        }
        const std::size_t e = (configs[j] - configs[i]).elements()[0];
        up[i].emplace_back(e, j);
        down[j].emplace_back(e, i);
      }
      below[i].assign(s.event_count(), EventSet{});
      for (auto e : configs[i].elements()) {
        EventSet meet = configs[i];
        for (const auto& z : configs) {
          if (z.subset_of(configs[i]) && z.contains(e)) meet = meet & z;
        }
        below[i][e] = meet;
      }
    }
  }
};

using Perm = std::vector<std::size_t>;  // image of the sorted elements of x1

}  // namespace

OracleResult hhpb_oracle_game(const ConfStruct& c1, const ConfStruct& c2,
                              const OracleOptions& options) {
  if (c1.event_count() + c2.event_count() > options.max_events) {
    throw Error(ErrorKind::BoundExceeded,
                "oracle bound: " + std::to_string(c1.event_count() + c2.event_count()) +
                    " events exceed " + std::to_string(options.max_events));
  }
  const Side s1(c1);
  const Side s2(c2);

  struct Node {
    std::size_t i1, i2;
    Perm image;
  };
  std::vector<Node> nodes;
  std::map<std::tuple<std::size_t, std::size_t, Perm>, std::size_t> index;

  for (std::size_t i1 = 0; i1 < s1.configs.size(); ++i1) {
    const auto left = s1.configs[i1].elements();
    for (std::size_t i2 = 0; i2 < s2.configs.size(); ++i2) {
      if (s2.configs[i2].size() != left.size()) continue;
      Perm right = s2.configs[i2].elements();
      std::sort(right.begin(), right.end());
      do {
        bool ok = true;
        for (std::size_t a = 0; ok && a < left.size(); ++a) {
          ok = c1.label(left[a]) == c2.label(right[a]);
          for (std::size_t b = 0; ok && b < left.size(); ++b) {
            const bool l = s1.below[i1][left[b]].contains(left[a]);
            const bool r = s2.below[i2][right[b]].contains(right[a]);
            ok = l == r;
          }
        }
        if (ok) {
          index.emplace(std::make_tuple(i1, i2, right), nodes.size());
          nodes.push_back({i1, i2, right});
        }
      } while (std::next_permutation(right.begin(), right.end()));
    }
  }

  auto lookup = [&](std::size_t i1, std::size_t i2, const Perm& p) -> std::optional<std::size_t> {
    auto it = index.find(std::make_tuple(i1, i2, p));
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  // the image of x1 ∪ {e1} when e1 goes to e2
  auto grown = [&](const Node& n, std::size_t e1, std::size_t e2) {
    std::vector<std::pair<std::size_t, std::size_t>> f;
    const auto left = s1.configs[n.i1].elements();
    for (std::size_t a = 0; a < left.size(); ++a) f.emplace_back(left[a], n.image[a]);
    f.emplace_back(e1, e2);
    std::sort(f.begin(), f.end());
    Perm p;
    for (const auto& pr : f) p.push_back(pr.second);
    return p;
  };
  auto shrunk = [&](const Node& n, std::size_t e1) {
    Perm p;
    const auto left = s1.configs[n.i1].elements();
    for (std::size_t a = 0; a < left.size(); ++a) {
      if (left[a] != e1) p.push_back(n.image[a]);
    }
    return p;
  };
  auto image_of = [&](const Node& n, std::size_t e1) -> std::size_t {
    const auto left = s1.configs[n.i1].elements();
    for (std::size_t a = 0; a < left.size(); ++a) {
      if (left[a] == e1) return n.image[a];
    }
    return static_cast<std::size_t>(-1);
  };

  // responses[n][m]: nodes the defender may move to after attack m
  std::vector<std::vector<std::vector<std::size_t>>> responses(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Node& n = nodes[k];
    for (const auto& [e1, j1] : s1.up[n.i1]) {
      std::vector<std::size_t> r;
      for (const auto& [e2, j2] : s2.up[n.i2]) {
        if (auto t = lookup(j1, j2, grown(n, e1, e2))) r.push_back(*t);
      }
      responses[k].push_back(r);
    }
    for (const auto& [e2, j2] : s2.up[n.i2]) {
      std::vector<std::size_t> r;
      for (const auto& [e1, j1] : s1.up[n.i1]) {
        if (auto t = lookup(j1, j2, grown(n, e1, e2))) r.push_back(*t);
      }
      responses[k].push_back(r);
    }
    for (const auto& [e1, j1] : s1.down[n.i1]) {
      std::vector<std::size_t> r;
      const std::size_t e2 = image_of(n, e1);
      for (const auto& [d2, j2] : s2.down[n.i2]) {
        if (d2 != e2) continue;
        if (auto t = lookup(j1, j2, shrunk(n, e1))) r.push_back(*t);
      }
      responses[k].push_back(r);
    }
    for (const auto& [e2, j2] : s2.down[n.i2]) {
      std::vector<std::size_t> r;
      for (const auto& [e1, j1] : s1.down[n.i1]) {
        if (image_of(n, e1) != e2) continue;
        if (auto t = lookup(j1, j2, shrunk(n, e1))) r.push_back(*t);
      }
      responses[k].push_back(r);
    }
  }

  std::vector<bool> attacker_wins(nodes.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (attacker_wins[k]) continue;
      for (const auto& r : responses[k]) {
        if (std::all_of(r.begin(), r.end(), [&](std::size_t t) { return attacker_wins[t]; })) {
          attacker_wins[k] = true;
          changed = true;
          break;
        }
      }
    }
  }

  OracleResult out;
  const auto root = lookup(0, 0, Perm{});
  out.related = s1.configs[0].empty() && s2.configs[0].empty() && root && !attacker_wins[*root];
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (attacker_wins[k]) continue;
    Triple t{s1.configs[nodes[k].i1], s2.configs[nodes[k].i2], {}};
    const auto left = t.x1.elements();
    for (std::size_t a = 0; a < left.size(); ++a) t.f.emplace_back(left[a], nodes[k].image[a]);
    out.maximal.push_back(std::move(t));
  }
  return out;
}

bool hhpb_oracle(const ConfStruct& c1, const ConfStruct& c2, const OracleOptions& options) {
  return hhpb_oracle_game(c1, c2, options).related;
}

}  // namespace revccs
