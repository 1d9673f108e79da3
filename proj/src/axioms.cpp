#include "scindex/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "scindex/growth.hpp"

namespace scindex {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u + static_cast<std::size_t>(x);
    return h;
  }
};

struct DomainCache {
  std::vector<CitationRecord> records;
  std::vector<IndexValue> values;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, VecHash> index_of;

  DomainCache(const IndexDescriptor& g, const EnumerationDomain& dom) {
    records = enumerate_records(dom.max_len, dom.max_cite);
    values.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      values.push_back(g.evaluate(records[i]));
      index_of.emplace(records[i].vec(), i);
    }
  }
};

AxiomReport base_report(const char* axiom, const IndexDescriptor& g, const EnumerationDomain& dom) {
  AxiomReport r;
  r.axiom = axiom;
  r.index = g.name;
  r.domain = dom;
  return r;
}

std::string value_pair_detail(const IndexValue& a, const IndexValue& b) {
  return a.exact_string() + " vs " + b.exact_string();
}

}  // namespace

AxiomReport check_mon(const IndexDescriptor& g, const EnumerationDomain& dom) {
  AxiomReport r = base_report("Mon", g, dom);
  // Named probe first: the single-paper pair (3) <= (4).
  CitationRecord p3 = make_record({3}), p4 = make_record({4});
  IndexValue v3 = g.evaluate(p3), v4 = g.evaluate(p4);
  if (v3 > v4) {
    r.holds = false;
    r.witness = AxiomWitness{{p3, p4}, 1, 1, value_pair_detail(v3, v4)};
    return r;
  }
  DomainCache cache(g, dom);
  for (std::size_t i = 0; i < cache.records.size(); ++i) {
    for (std::size_t j = 0; j < cache.records.size(); ++j) {
      if (i == j || !dominates(cache.records[i], cache.records[j])) continue;
      if (cache.values[i] > cache.values[j]) {
        r.holds = false;
        r.witness = AxiomWitness{{cache.records[i], cache.records[j]},
                                 1,
                                 1,
                                 value_pair_detail(cache.values[i], cache.values[j])};
        return r;
      }
    }
  }
  return r;
}

AxiomReport check_sym(const IndexDescriptor& g, const EnumerationDomain& dom) {
  AxiomReport r = base_report("Sym", g, dom);
  auto probe = [&](const CitationRecord& x) -> bool {
    IndexValue vx = g.evaluate(x), vd = g.evaluate(dual(x));
    if (vx == vd) return true;
    r.holds = false;
    r.witness = AxiomWitness{{x, dual(x)}, 1, 1, value_pair_detail(vx, vd)};
    return false;
  };
  if (!probe(make_record({8, 6, 2}))) return r;
  for (const auto& x : enumerate_records(dom.max_len, dom.max_cite)) {
    if (!probe(x)) return r;
  }
  return r;
}

AxiomReport check_sinv(const IndexDescriptor& g, const EnumerationDomain& dom) {
  AxiomReport r = base_report("SInv", g, dom);

  // The ranking-inversion probe: a horizontal stretch by 3 inverts the order
  // of these two records under any fixed-scale index such as h.
  CitationRecord xc = make_record({10, 8, 8, 6, 6, 6, 4, 2});
  CitationRecord xd = make_record({24, 22, 20, 11, 2});
  for (std::int64_t k : dom.scale_factors) {
    for (std::int64_t m : dom.stretch_factors) {
      auto lhs = g.evaluate(xc).compare(g.evaluate(xd));
      auto rhs = g.evaluate(vscale(hstretch(xc, m), k)).compare(g.evaluate(vscale(hstretch(xd, m), k)));
      bool le_before = lhs != std::strong_ordering::greater;
      bool le_after = rhs != std::strong_ordering::greater;
      bool ge_before = lhs != std::strong_ordering::less;
      bool ge_after = rhs != std::strong_ordering::less;
      if (le_before != le_after || ge_before != ge_after) {
        r.holds = false;
        r.witness = AxiomWitness{{xc, xd}, k, m, "ranking changes under scaling"};
        return r;
      }
    }
  }

  DomainCache cache(g, dom);
  std::vector<std::size_t> order(cache.records.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cache.values[a] < cache.values[b];
  });
  for (std::int64_t k : dom.scale_factors) {
    for (std::int64_t m : dom.stretch_factors) {
      if (k == 1 && m == 1) continue;
      std::vector<IndexValue> tv(cache.records.size());
      for (std::size_t i = 0; i < cache.records.size(); ++i)
        tv[i] = g.evaluate(vscale(hstretch(cache.records[i], m), k));
      // The order induced by g and by g∘T must agree as weak orders, which is
      // equivalent to agreement on g-sorted adjacent pairs.
      for (std::size_t t = 0; t + 1 < order.size(); ++t) {
        std::size_t a = order[t], b = order[t + 1];
        bool equal_before = cache.values[a] == cache.values[b];
        auto after = tv[a].compare(tv[b]);
        bool bad = equal_before ? after != std::strong_ordering::equal
                                : after == std::strong_ordering::greater;
        if (bad) {
          r.holds = false;
          r.witness = AxiomWitness{{cache.records[a], cache.records[b]},
                                   k,
                                   m,
                                   value_pair_detail(tv[a], tv[b])};
          return r;
        }
      }
    }
  }
  return r;
}

AxiomReport check_ssinv(const IndexDescriptor& g, const EnumerationDomain& dom) {
  AxiomReport r = base_report("SSInv", g, dom);

  // Probe: g(1) g(2 * (2)) = g(2) g(2 * (1)), the instance that fails for the
  // constant-sqrt(2) index.
  {
    CitationRecord one = make_record({1}), two = make_record({2});
    IndexValue lhs = g.evaluate(one).times(g.evaluate(make_record({4})));
    IndexValue rhs = g.evaluate(two).times(g.evaluate(two));
    if (!(lhs == rhs)) {
      r.holds = false;
      r.witness = AxiomWitness{{one, two}, 2, 1, value_pair_detail(lhs, rhs)};
      return r;
    }
  }

  DomainCache cache(g, dom);
  CitationRecord x0 = make_record({1});
  IndexValue v0 = g.evaluate(x0);
  for (std::int64_t k : dom.scale_factors) {
    for (std::int64_t m : dom.stretch_factors) {
      if (k == 1 && m == 1) continue;
      IndexValue t0 = g.evaluate(vscale(hstretch(x0, m), k));
      // SSInv is equivalent to g(k x^{<->m}) / g(x) being constant in x, so
      // pairing every record against (1) covers all pairs.
      for (std::size_t i = 0; i < cache.records.size(); ++i) {
        IndexValue lhs = cache.values[i].times(t0);
        IndexValue rhs = v0.times(g.evaluate(vscale(hstretch(cache.records[i], m), k)));
        if (!(lhs == rhs)) {
          r.holds = false;
          r.witness =
              AxiomWitness{{x0, cache.records[i]}, k, m, value_pair_detail(lhs, rhs)};
          return r;
        }
      }
    }
  }
  return r;
}

AxiomReport check_maxb(const IndexDescriptor& g, const EnumerationDomain& dom) {
  AxiomReport r = base_report("MaxB", g, dom);
  auto probe = [&](const CitationRecord& x, const CitationRecord& y) -> bool {
    CitationRecord z = cmax(x, y);
    IndexValue vz = g.evaluate(z);
    IndexValue vx = g.evaluate(x), vy = g.evaluate(y);
    IndexValue bound = vx < vy ? vy : vx;
    if (vz <= bound) return true;
    r.holds = false;
    r.witness = AxiomWitness{{x, y, z}, 1, 1, value_pair_detail(vz, bound)};
    return false;
  };
  if (!probe(make_record({4, 4}), make_record({2, 2, 2, 2}))) return r;

  DomainCache cache(g, dom);
  for (std::size_t i = 0; i < cache.records.size(); ++i) {
    for (std::size_t j = i + 1; j < cache.records.size(); ++j) {
      CitationRecord z = cmax(cache.records[i], cache.records[j]);
      auto it = cache.index_of.find(z.vec());
      const IndexValue& vz = cache.values[it->second];
      const IndexValue& bound =
          cache.values[i] < cache.values[j] ? cache.values[j] : cache.values[i];
      if (vz > bound) {
        r.holds = false;
        r.witness = AxiomWitness{{cache.records[i], cache.records[j], z},
                                 1,
                                 1,
                                 value_pair_detail(vz, bound)};
        return r;
      }
    }
  }
  return r;
}

AxiomReport check_wresp(const IndexDescriptor& g) {
  AxiomReport r = base_report("WResp", g, {});
  IndexValue lhs = g.evaluate(make_record({2, 2}));
  IndexValue rhs = g.evaluate(make_record({1}));
  if (!(lhs > rhs)) {
    r.holds = false;
    r.witness = AxiomWitness{{make_record({2, 2}), make_record({1})},
                             1,
                             1,
                             value_pair_detail(lhs, rhs)};
  }
  return r;
}

AxiomReport check_sqrtresp(const IndexDescriptor& g) {
  AxiomReport r = base_report("SqrtResp", g, {});
  IndexValue v = g.evaluate(make_record({2}));
  if (!(v == IndexValue::sqrt_of(Rational(2)))) {
    r.holds = false;
    r.witness = AxiomWitness{{make_record({2})}, 1, 1, "g(2) = " + v.exact_string()};
  }
  return r;
}

AxiomReport check_sresp(const IndexDescriptor& g) {
  AxiomReport r = base_report("SResp", g, {});
  IndexValue lhs = g.evaluate(make_record({2}));
  IndexValue rhs = g.evaluate(make_record({1}));
  if (!(lhs > rhs)) {
    r.holds = false;
    r.witness =
        AxiomWitness{{make_record({2}), make_record({1})}, 1, 1, value_pair_detail(lhs, rhs)};
  }
  return r;
}

AxiomReport check_lgr(const IndexDescriptor& g, std::int64_t p, std::int64_t c, int horizon) {
  AxiomReport r = base_report("LGr", g, {});
  r.domain = EnumerationDomain{0, 0, {p}, {c}};
  if (g.name == "h" || g.name == "hprime" || g.name == "w" || g.name == "wprime") {
    auto strip = strip_check(g.name, p, c, horizon);
    r.holds = strip.holds;
    if (!strip.holds)
      r.witness = AxiomWitness{{}, p, c, "strip violated at n=" +
                                             std::to_string(strip.first_violation.value_or(-1))};
    return r;
  }
  auto fit = empirical_strip_fit(g, p, c, horizon);
  if (fit.unbounded) {
    r.holds = false;
    r.witness = AxiomWitness{
        {}, p, c, "strip width lower bound grows: " + std::to_string(fit.width_half_horizon) +
                      " -> " + std::to_string(fit.width_lower_bound)};
  }
  return r;
}

std::vector<IndexDescriptor> counterexample_indices() {
  return {hirsch_power_index(Rational(1)), t_half_index(), d_counterexample_index(Rational(1)),
          f_constant_index(), const_one_index()};
}

std::vector<AxiomReport> run_battery(const IndexDescriptor& g, const EnumerationDomain& dom) {
  std::vector<AxiomReport> out;
  out.push_back(check_mon(g, dom));
  out.push_back(check_sym(g, dom));
  out.push_back(check_sinv(g, dom));
  out.push_back(check_ssinv(g, dom));
  out.push_back(check_maxb(g, dom));
  out.push_back(check_wresp(g));
  out.push_back(check_sqrtresp(g));
  return out;
}

IndependenceMatrix independence_matrix(const EnumerationDomain& dom) {
  IndependenceMatrix m;
  std::vector<IndexDescriptor> rows = {
      *find_index("hprime"), hirsch_power_index(Rational(1)),
      t_half_index(),        d_counterexample_index(Rational(1)),
      *find_index("wprime"), f_constant_index(),
      const_one_index(),     *find_index("h"),
      *find_index("w"),      *find_index("e"),
  };
  m.cols = {"Mon", "Sym", "SSInv", "MaxB", "WResp", "SqrtResp"};
  for (const auto& g : rows) {
    m.rows.push_back(g.name);
    std::vector<AxiomReport> row;
    row.push_back(check_mon(g, dom));
    row.push_back(check_sym(g, dom));
    row.push_back(check_ssinv(g, dom));
    row.push_back(check_maxb(g, dom));
    row.push_back(check_wresp(g));
    row.push_back(check_sqrtresp(g));
    m.cells.push_back(std::move(row));
  }
  return m;
}

}  // namespace scindex
