#include "nonarch/validate.hpp"

#include <algorithm>
#include <array>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nonarch {

namespace {

enum LawIndex {
  kAssoc = 0,
  kIdentity,
  kInverse,
  kCondition1,
  kCondition3Neg,
  kCondition3Ultra,
  kCondition2Modulus,
  kActionDistributive,
  kActionComposition,
  kActionUnital,
  kActionZero,
  kActionProjection,
  kTriangleEquality,
  kLawCount
};

const char* kLawNames[kLawCount] = {
    "group/associativity",
    "group/identity",
    "group/inverse",
    "condition1/omega-infinite-iff-identity",
    "condition3/omega-neg",
    "condition3/ultrametric",
    "condition2/modulus",
    "action/distributive",
    "action/composition",
    "action/unital",
    "action/zero-scalar",
    "action/projection",
    "lemma/strict-triangle",
};

struct Violation {
  std::size_t sample;
  int law;
  Json witness;
};

struct SampleOutcome {
  std::array<std::uint8_t, kLawCount> applicable{};
  std::vector<Violation> violations;
};

struct Tuple {
  Element x, y, z;
  Series k, l;
};

Json witness_json(const OmegaGroup& g, std::size_t sample, const Tuple& t,
                  bool with_scalars) {
  Json w{{"sample", sample},
         {"x", element_to_json(g.id(), t.x)},
         {"y", element_to_json(g.id(), t.y)},
         {"z", element_to_json(g.id(), t.z)}};
  if (with_scalars) {
    w["k"] = series_to_json(t.k);
    w["l"] = series_to_json(t.l);
  }
  return w;
}

SampleOutcome check_sample(const OmegaGroup& g, std::size_t index, std::uint64_t seed) {
  SampleOutcome out;
  SampleRng rng = per_sample_rng(seed, index);
  Tuple t{g.sample_element(rng), g.sample_element(rng), g.sample_element(rng),
          g.sample_scalar(rng), g.sample_scalar(rng)};
  const Element id = g.identity();

  auto fail = [&](int law, bool scalars = false) {
    out.violations.push_back({index, law, witness_json(g, index, t, scalars)});
  };
  auto applies = [&](int law) { out.applicable[law] = 1; };

  applies(kAssoc);
  if (g.oplus(g.oplus(t.x, t.y), t.z) != g.oplus(t.x, g.oplus(t.y, t.z))) fail(kAssoc);

  applies(kIdentity);
  if (g.oplus(t.x, id) != t.x || g.oplus(id, t.x) != t.x) fail(kIdentity);

  applies(kInverse);
  if (g.oplus(t.x, g.neg(t.x)) != id || g.oplus(g.neg(t.x), t.x) != id) fail(kInverse);

  applies(kCondition1);
  {
    bool ok = g.omega(id).is_infinite();
    if (t.x != id && g.omega(t.x).is_infinite()) ok = false;
    if (!ok) fail(kCondition1);
  }

  applies(kCondition3Neg);
  if (g.omega(g.neg(t.x)) != g.omega(t.x)) fail(kCondition3Neg);

  applies(kCondition3Ultra);
  if (g.omega(g.oplus(t.x, t.y)) < min(g.omega(t.x), g.omega(t.y))) fail(kCondition3Ultra);

  if (g.has_action()) {
    const QuadExt m = g.modulus();

    applies(kCondition2Modulus);
    {
      Level expect = g.omega(t.x) + scale(m, t.l.valuation());
      if (g.omega(g.odot(t.x, t.l)) != expect) fail(kCondition2Modulus, true);
    }

    applies(kActionDistributive);
    if (g.odot(g.oplus(t.x, t.y), t.l) != g.oplus(g.odot(t.x, t.l), g.odot(t.y, t.l)))
      fail(kActionDistributive, true);

    applies(kActionComposition);
    if (g.odot(g.odot(t.x, t.k), t.l) != g.odot(t.x, hs_mul(t.k, t.l)))
      fail(kActionComposition, true);

    applies(kActionUnital);
    if (g.odot(t.x, g.scalar_one()) != t.x) fail(kActionUnital);

    if (g.scalar_zero_ok()) {
      applies(kActionZero);
      if (g.odot(t.x, Series::zero(g.scalar_field())) != id) fail(kActionZero);
    }

    if (auto rx = g.rho(t.x)) {
      applies(kActionProjection);
      auto rxl = g.rho(g.odot(t.x, t.l));
      if (!rxl || *rxl != hs_mul(*rx, t.l)) fail(kActionProjection, true);
    }
  }

  {
    Level ox = g.omega(t.x), oy = g.omega(t.y);
    if (ox != oy && !ox.is_infinite() && !oy.is_infinite()) {
      applies(kTriangleEquality);
      const Element& hi = ox > oy ? t.x : t.y;
      const Element& lo = ox > oy ? t.y : t.x;
      Level low = min(ox, oy);
      if (g.omega(g.oplus(hi, lo)) != low || g.omega(g.oplus(lo, hi)) != low)
        fail(kTriangleEquality);
    }
  }

  return out;
}

}  // namespace

std::uint64_t ValidationReport::total_violations() const {
  std::uint64_t n = 0;
  for (const auto& l : laws) n += l.violations;
  return n;
}

Json ValidationReport::to_json() const {
  Json laws_json = Json::array();
  for (const auto& l : laws) {
    Json entry{{"law", l.law}, {"checked", l.checked}, {"violations", l.violations}};
    entry["first_witness"] = l.first_witness;
    laws_json.push_back(entry);
  }
  return Json{{"family", family}, {"samples", samples},     {"seed", seed},
              {"engine", engine}, {"generator", "splitmix64"}, {"laws", laws_json},
              {"ok", ok()}};
}

ValidationReport validate_omega_group(const OmegaGroup& g, std::size_t samples,
                                      std::uint64_t seed, Engine engine) {
  std::array<std::uint64_t, kLawCount> checked{};
  std::vector<Violation> violations;

  if (engine == Engine::Serial) {
    for (std::size_t i = 0; i < samples; ++i) {
      SampleOutcome out = check_sample(g, i, seed);
      for (int l = 0; l < kLawCount; ++l) checked[l] += out.applicable[l];
      for (auto& v : out.violations) violations.push_back(std::move(v));
    }
  } else {
#pragma omp parallel
    {
      std::array<std::uint64_t, kLawCount> local_checked{};
      std::vector<Violation> local_violations;
#pragma omp for schedule(dynamic, 16) nowait
      for (long long i = 0; i < static_cast<long long>(samples); ++i) {
        SampleOutcome out = check_sample(g, static_cast<std::size_t>(i), seed);
        for (int l = 0; l < kLawCount; ++l) local_checked[l] += out.applicable[l];
        for (auto& v : out.violations) local_violations.push_back(std::move(v));
      }
#pragma omp critical
      {
        for (int l = 0; l < kLawCount; ++l) checked[l] += local_checked[l];
        for (auto& v : local_violations) violations.push_back(std::move(v));
      }
    }
  }

  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    if (a.sample != b.sample) return a.sample < b.sample;
    return a.law < b.law;
  });

  ValidationReport report;
  report.family = g.id();
  report.samples = samples;
  report.seed = seed;
  report.engine = engine == Engine::Serial ? "serial" : "openmp";
  report.laws.resize(kLawCount);
  for (int l = 0; l < kLawCount; ++l) {
    report.laws[l].law = kLawNames[l];
    report.laws[l].checked = checked[l];
  }
  for (const auto& v : violations) {
    auto& law = report.laws[v.law];
    if (law.violations == 0) law.first_witness = v.witness;
    ++law.violations;
  }
  return report;
}

namespace {

// Decorator with a deliberately broken omega: +1 on one planted element.
// The sampler returns the planted element for a quarter of the draws so a
// small budget is guaranteed to expose the fault (condition (3) breaks on
// omega(-victim) vs omega(victim), among others).
class CorruptedGroup : public OmegaGroup {
 public:
  explicit CorruptedGroup(GroupPtr inner) : inner_(std::move(inner)) {
    SampleRng rng(0xbadc0deULL);
    do {
      victim_ = inner_->sample_element(rng);
    } while (inner_->is_identity(victim_) || inner_->neg(victim_) == victim_);
  }

  std::string id() const override { return "corrupted-" + inner_->id(); }
  std::string describe() const override {
    return inner_->describe() + " with a planted omega fault";
  }
  std::size_t arity() const override { return inner_->arity(); }
  Element identity() const override { return inner_->identity(); }
  Element oplus(const Element& x, const Element& y) const override {
    return inner_->oplus(x, y);
  }
  Element neg(const Element& x) const override { return inner_->neg(x); }
  Level omega(const Element& x) const override {
    Level base = inner_->omega(x);
    if (x == victim_ && !base.is_infinite())
      return Level::finite(base.value() + QuadExt(1));
    return base;
  }
  bool has_action() const override { return inner_->has_action(); }
  QuadExt modulus() const override { return inner_->modulus(); }
  FieldTag scalar_field() const override { return inner_->scalar_field(); }
  Element odot(const Element& x, const Series& k) const override {
    return inner_->odot(x, k);
  }
  bool scalar_zero_ok() const override { return inner_->scalar_zero_ok(); }
  ExpLattice scalar_lattice() const override { return inner_->scalar_lattice(); }
  std::optional<Series> rho(const Element& x) const override { return inner_->rho(x); }
  void check_element(const Element& x) const override { inner_->check_element(x); }
  Element sample_element(SampleRng& rng) const override {
    if (rng.bounded(4) == 0) return victim_;
    return inner_->sample_element(rng);
  }
  Series sample_scalar(SampleRng& rng) const override {
    return inner_->sample_scalar(rng);
  }

 private:
  GroupPtr inner_;
  Element victim_;
};

}  // namespace

GroupPtr make_corrupted_group(GroupPtr inner) {
  return std::make_shared<CorruptedGroup>(std::move(inner));
}

}  // namespace nonarch
