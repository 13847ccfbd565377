#include "ridgegap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ridgegap/closed_form.hpp"
#include "ridgegap/error.hpp"
#include "ridgegap/extremal.hpp"

namespace ridgegap {

Fault fault_from_string(const std::string& s) {
  if (s.empty() || s == "none") return Fault::None;
  if (s == "flipped-b-edge-sign") return Fault::FlippedBEdgeSign;
  throw InvalidInput("unknown fault '" + s + "' (expected none or flipped-b-edge-sign)");
}

const char* to_string(Fault f) noexcept {
  return f == Fault::FlippedBEdgeSign ? "flipped-b-edge-sign" : "none";
}

double sup_value(const SampledDomain& domain, std::span<const double> fvals, Fault fault) {
  if (fault == Fault::None) return sup_closed_path(domain, fvals).value;
  AlternationGraph g = build_alternation_graph(domain, fvals);
  for (auto& e : g.edges) {
    if (e.kind != EdgeKind::B) continue;
    const Index u = AlternationGraph::point_of(e.from);
    const Index v = AlternationGraph::point_of(e.to);
    e.weight = (fvals[u] - fvals[v]) / 2.0;
  }
  const auto cyc = max_mean_cycle(g);
  return cyc ? std::max(0.0, cyc->mean) : 0.0;
}

json instance_to_json(const SampledDomain& domain, std::span<const double> fvals) {
  return json{{"dirs", {{"a", domain.dirs().a()}, {"b", domain.dirs().b()}}},
              {"points", domain.points()},
              {"f", std::vector<double>(fvals.begin(), fvals.end())}};
}

bool VerifySummary::passed() const {
  if (trials == 0) return false;
  return std::all_of(suites.begin(), suites.end(),
                     [](const auto& kv) { return kv.second.fail == 0; });
}

json VerifySummary::to_json() const {
  json s = json::object();
  for (const auto& [name, t] : suites) s[name] = {{"pass", t.pass}, {"fail", t.fail}};
  json out{{"seed", seed}, {"trials", trials}, {"suites", s}, {"passed", passed()}};
  if (counterexample) out["counterexample"] = *counterexample;
  return out;
}

namespace {

bool duality_holds(const SampledDomain& d, std::span<const double> f, Fault fault) {
  const double sup = sup_value(d, f, fault);
  const double lp = best_ridge_linf(d, f).error;
  return std::abs(sup - lp) <= 1e-7 * std::max(1.0, lp);
}

// Drops points one at a time while the failure persists.
std::pair<SampledDomain, std::vector<double>> minimize(
    SampledDomain d, std::vector<double> f,
    const std::function<bool(const SampledDomain&, std::span<const double>)>& fails) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (Index drop = 0; drop < d.size(); ++drop) {
      std::vector<Index> keep;
      std::vector<double> fk;
      for (Index i = 0; i < d.size(); ++i) {
        if (i == drop) continue;
        keep.push_back(i);
        fk.push_back(f[i]);
      }
      SampledDomain smaller = d.subset(keep);
      if (fails(smaller, fk)) {
        d = std::move(smaller);
        f = std::move(fk);
        shrunk = true;
        break;
      }
    }
  }
  return {std::move(d), std::move(f)};
}

const char* kActivations[] = {"sigmoid", "tanh", "gaussian"};

}  // namespace

VerifySummary run_verify(std::uint64_t seed, std::size_t trials, Fault fault) {
  if (trials == 0) throw InvalidInput("verify needs at least one trial");
  VerifySummary sum;
  sum.seed = seed;
  sum.trials = trials;
  for (const char* s : {"duality", "annihilation", "sandwich", "fubini"}) sum.suites[s];
  Rng rng(seed);

  auto record = [&](const char* suite, bool ok, const std::function<json()>& dump) {
    if (ok) {
      ++sum.suites[suite].pass;
      return;
    }
    ++sum.suites[suite].fail;
    if (!sum.counterexample) {
      json c = dump();
      c["suite"] = suite;
      sum.counterexample = std::move(c);
    }
  };

  for (std::size_t t = 0; t < trials; ++t) {
    Instance inst = t % 2 == 0 ? random_grid_instance(rng) : random_scattered_instance(rng);
    const auto& d = inst.domain;
    const auto& f = inst.f;

    // duality
    const double sup = sup_value(d, f, fault);
    const double lp = best_ridge_linf(d, f).error;
    const bool dual_ok = std::abs(sup - lp) <= 1e-7 * std::max(1.0, lp);
    record("duality", dual_ok, [&] {
      auto fails = [fault](const SampledDomain& dd, std::span<const double> ff) {
        return !duality_holds(dd, ff, fault);
      };
      auto [md, mf] = minimize(d, f, fails);
      json c = instance_to_json(md, mf);
      c["lowerBound"] = sup_value(md, mf, fault);
      c["bestRidge"] = best_ridge_linf(md, mf).error;
      c["trial"] = t;
      return c;
    });

    // annihilation: ridge sums and two-direction networks lie in R(a,b)
    const RidgePair v = random_ridge_pair(rng, d);
    const auto rv = evaluate_ridge(v, d);
    const double s_ridge = sup_value(d, rv, fault);
    const ShallowNetwork net = random_network(rng, kActivations[t % 3], 6);
    const auto nv = evaluate_network(net, d);
    const double s_net = sup_value(d, nv, fault);
    record("annihilation", s_ridge <= 1e-8 && s_net <= 1e-8, [&] {
      json c = instance_to_json(d, rv);
      c["network"] = ridgegap::to_json(net);
      c["ridgeSup"] = s_ridge;
      c["networkSup"] = s_net;
      c["trial"] = t;
      return c;
    });

    // sandwich: sup <= E <= distance to any member of R(a,b)
    double ridge_dist = 0.0;
    double net_dist = 0.0;
    for (Index i = 0; i < d.size(); ++i) {
      ridge_dist = std::max(ridge_dist, std::abs(f[i] - rv[i]));
      net_dist = std::max(net_dist, std::abs(f[i] - nv[i]));
    }
    const bool sand_ok = sup <= lp + 1e-8 && lp <= ridge_dist + 1e-9 && lp <= net_dist + 1e-9;
    record("sandwich", sand_ok, [&] {
      json c = instance_to_json(d, f);
      c["lowerBound"] = sup;
      c["bestRidge"] = lp;
      c["ridgeDistance"] = ridge_dist;
      c["networkDistance"] = net_dist;
      c["trial"] = t;
      return c;
    });

    // Fubini: the double integral of the mixed partial is the corner sum
    const std::string src = random_smooth_expression(rng);
    BoxDomainSpec box;
    box.c1 = uniform(rng, -1.0, 0.5);
    box.d1 = box.c1 + uniform(rng, 0.1, 1.0);
    box.c2 = uniform(rng, -1.0, 0.5);
    box.d2 = box.c2 + uniform(rng, 0.1, 1.0);
    box.dirs = random_directions(rng);
    const TransformedFunction g(SmoothFunction2D::parse(src), box.dirs);
    const double integral = mixed_partial_integral(g, box, 32);
    const double corners = corner_sum(g, box);
    record("fubini", std::abs(integral - corners) <= 1e-8 * std::max(1.0, std::abs(corners)), [&] {
      return json{{"f", src},
                  {"box", {box.c1, box.d1, box.c2, box.d2}},
                  {"dirs", {{"a", box.dirs.a()}, {"b", box.dirs.b()}}},
                  {"integral", integral},
                  {"cornerSum", corners},
                  {"trial", t}};
    });
  }
  return sum;
}

}  // namespace ridgegap
