#include "nonarch/families.hpp"

#include <stdexcept>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

// ---------------------------------------------------------------------
// Sampling helpers. Exponent pools are built once per family so draws are
// cheap and deterministic.

Coeff sample_coeff(SampleRng& rng, FieldTag tag, bool nonzero) {
  switch (tag) {
    case FieldTag::F2:
      return Coeff::gf(tag, nonzero ? 1 : static_cast<long>(rng.bounded(2)));
    case FieldTag::F3:
      return Coeff::gf(tag, nonzero ? static_cast<long>(1 + rng.bounded(2))
                                    : static_cast<long>(rng.bounded(3)));
    case FieldTag::Q: {
      long num = rng.int_range(nonzero ? 1 : 0, 4);
      if (rng.coin()) num = -num;
      long den = rng.int_range(1, 3);
      if (nonzero && num == 0) num = 1;
      return Coeff::rational(make_rational(num, den));
    }
    case FieldTag::Qi: {
      long re = rng.int_range(-2, 2);
      long im = rng.int_range(-2, 2);
      if (nonzero && re == 0 && im == 0) re = 1;
      return Coeff::complex(make_rational(re), make_rational(im));
    }
  }
  return Coeff::zero(tag);
}

std::vector<QuadExt> pool_from_steps(const std::vector<QuadExt>& steps, long lo, long hi) {
  std::vector<QuadExt> pool;
  for (const auto& s : steps) {
    for (long k = lo; k <= hi; ++k) {
      pool.push_back(make_rational(k) * s);
    }
  }
  return pool;
}

Series sample_series_from_pool(SampleRng& rng, FieldTag tag,
                               const std::vector<QuadExt>& pool, bool nonzero,
                               std::size_t max_terms = 3) {
  std::size_t n = rng.bounded(max_terms + 1);
  if (nonzero && n == 0) n = 1;
  std::vector<Series::Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    const QuadExt& e = pool[rng.bounded(pool.size())];
    terms.push_back({e, sample_coeff(rng, tag, true)});
  }
  Series s = Series::from_terms(tag, std::move(terms));
  if (nonzero && s.is_zero()) {
    return Series::monomial(pool[rng.bounded(pool.size())], Coeff::one(tag));
  }
  return s;
}

Series sample_sigma_fixed_series(SampleRng& rng, const std::vector<QuadExt>& pool,
                                 bool nonzero) {
  std::size_t n = rng.bounded(4);
  if (nonzero && n == 0) n = 1;
  std::vector<Series::Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    long re = rng.int_range(-2, 2);
    if (re == 0) re = 1;
    terms.push_back({pool[rng.bounded(pool.size())],
                     Coeff::complex(make_rational(re), Rational(0))});
  }
  Series s = Series::from_terms(FieldTag::Qi, std::move(terms));
  if (nonzero && s.is_zero())
    return Series::monomial(pool[rng.bounded(pool.size())], Coeff::one(FieldTag::Qi));
  return s;
}

void require_arity(const Element& x, std::size_t arity, const char* what) {
  if (x.parts.size() != arity)
    throw CarrierViolation(std::string(what) + ": wrong number of components");
}

void require_field(const Element& x, FieldTag tag, const char* what) {
  for (const auto& p : x.parts) {
    if (p.field() != tag) throw TagMismatch(std::string(what) + ": component field mismatch");
  }
}

// ---------------------------------------------------------------------
// Triangle family: the additive group of the series field itself,
// omega = nu, action = field multiplication, m = 1.

class TriangleGroup : public OmegaGroup {
 public:
  TriangleGroup(FieldTag tag, std::string id, ExpLattice lattice,
                std::vector<QuadExt> pool_steps)
      : tag_(tag),
        id_(id.empty() ? std::string("triangle-") + field_tag_name(tag) : std::move(id)),
        lattice_(std::move(lattice)) {
    pool_ = pool_from_steps(pool_steps, -4, 5);
  }

  std::string id() const override { return id_; }
  std::string describe() const override {
    return std::string("additive group of the ") + field_tag_name(tag_) +
           " series field, omega = nu";
  }
  std::size_t arity() const override { return 1; }
  Element identity() const override { return {{Series::zero(tag_)}}; }
  Element oplus(const Element& x, const Element& y) const override {
    return {{hs_add(x.parts[0], y.parts[0])}};
  }
  Element neg(const Element& x) const override { return {{hs_neg(x.parts[0])}}; }
  Level omega(const Element& x) const override { return x.parts[0].valuation(); }
  bool has_action() const override { return true; }
  QuadExt modulus() const override { return QuadExt(1); }
  FieldTag scalar_field() const override { return tag_; }
  Element odot(const Element& x, const Series& k) const override {
    return {{hs_mul(x.parts[0], k)}};
  }
  ExpLattice scalar_lattice() const override { return lattice_; }
  std::optional<Series> rho(const Element& x) const override { return x.parts[0]; }
  void check_element(const Element& x) const override {
    require_arity(x, 1, "triangle element");
    require_field(x, tag_, "triangle element");
    for (const auto& t : x.parts[0].terms()) {
      if (!lattice_.contains(t.exp))
        throw CarrierViolation("series exponent outside the carrier lattice");
    }
  }
  Element sample_element(SampleRng& rng) const override {
    return {{sample_series_from_pool(rng, tag_, pool_, false)}};
  }
  Series sample_scalar(SampleRng& rng) const override {
    return sample_series_from_pool(rng, tag_, pool_, true);
  }

 private:
  FieldTag tag_;
  std::string id_;
  ExpLattice lattice_;
  std::vector<QuadExt> pool_;
};

// ---------------------------------------------------------------------
// Involutory family: the fixed subfield K_0 of coefficient conjugation on
// Q(i) series, scalars drawn from K_0 itself, m = 1.

class InvolutoryGroup : public OmegaGroup {
 public:
  InvolutoryGroup() { pool_ = pool_from_steps({QuadExt(make_rational(1, 2), Rational(0))}, -4, 5); }

  std::string id() const override { return "involutory"; }
  std::string describe() const override {
    return "conjugation-fixed subfield K0 of the Q(i) series field";
  }
  std::size_t arity() const override { return 1; }
  Element identity() const override { return {{Series::zero(FieldTag::Qi)}}; }
  Element oplus(const Element& x, const Element& y) const override {
    return {{hs_add(x.parts[0], y.parts[0])}};
  }
  Element neg(const Element& x) const override { return {{hs_neg(x.parts[0])}}; }
  Level omega(const Element& x) const override { return x.parts[0].valuation(); }
  bool has_action() const override { return true; }
  QuadExt modulus() const override { return QuadExt(1); }
  FieldTag scalar_field() const override { return FieldTag::Qi; }
  Element odot(const Element& x, const Series& k) const override {
    return {{hs_mul(x.parts[0], k)}};
  }
  std::optional<Series> rho(const Element& x) const override { return x.parts[0]; }
  void check_element(const Element& x) const override {
    require_arity(x, 1, "involutory element");
    require_field(x, FieldTag::Qi, "involutory element");
    if (!hs_sigma_fixed(x.parts[0]))
      throw CarrierViolation("involutory element must be conjugation-fixed");
  }
  Element sample_element(SampleRng& rng) const override {
    return {{sample_sigma_fixed_series(rng, pool_, false)}};
  }
  Series sample_scalar(SampleRng& rng) const override {
    return sample_sigma_fixed_series(rng, pool_, true);
  }

 private:
  std::vector<QuadExt> pool_;
};

// ---------------------------------------------------------------------
// Diagonal quadratic-form family: carrier is a coordinate vector, omega is
// nu of the diagonal form sum c_i x_i^2, action is coordinatewise scalar
// multiplication, m = 2. Instantiated with the all-ones form over Q for the
// quadratic family and with monomial coefficients over GF(2) sub-lattices
// for the two F4 groups.

class DiagonalFormGroup : public OmegaGroup {
 public:
  DiagonalFormGroup(std::string id, FieldTag tag, std::vector<QuadExt> form_exponents,
                    std::vector<ExpLattice> carriers, ExpLattice scalar_lattice,
                    std::vector<QuadExt> pool_steps)
      : id_(std::move(id)),
        tag_(tag),
        form_exps_(std::move(form_exponents)),
        carriers_(std::move(carriers)),
        scalar_lattice_(std::move(scalar_lattice)) {
    dim_ = form_exps_.size();
    if (carriers_.size() != dim_) throw std::invalid_argument("carrier count mismatch");
    scalar_pool_ = pool_from_steps(pool_steps, -2, 3);
    coord_pools_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      std::vector<QuadExt> steps;
      const auto& lat = carriers_[i];
      QuadExt a_step(lat.a_step ? *lat.a_step : make_rational(1, 2), Rational(0));
      QuadExt b_step(Rational(0), lat.b_step ? *lat.b_step : Rational(0));
      if (!(a_step == QuadExt())) steps.push_back(a_step);
      if (!(b_step == QuadExt())) steps.push_back(b_step);
      if (steps.empty()) steps.push_back(QuadExt(1));
      coord_pools_[i] = pool_from_steps(steps, -2, 3);
      // Mixed lattice points as well.
      if (steps.size() == 2) {
        coord_pools_[i].push_back(steps[0] + steps[1]);
        coord_pools_[i].push_back(steps[0] - steps[1]);
      }
    }
  }

  std::string id() const override { return id_; }
  std::string describe() const override {
    return "vector carrier with omega = nu of a diagonal quadratic form (m = 2)";
  }
  std::size_t arity() const override { return dim_; }
  Element identity() const override {
    return {std::vector<Series>(dim_, Series::zero(tag_))};
  }
  Element oplus(const Element& x, const Element& y) const override {
    Element out;
    out.parts.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      out.parts.push_back(hs_add(x.parts[i], y.parts[i]));
    return out;
  }
  Element neg(const Element& x) const override {
    Element out;
    out.parts.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out.parts.push_back(hs_neg(x.parts[i]));
    return out;
  }
  Series form_value(const Element& x) const {
    Series acc = Series::zero(tag_);
    for (std::size_t i = 0; i < dim_; ++i) {
      Series sq = hs_mul(x.parts[i], x.parts[i]);
      acc = hs_add(acc, hs_shift(sq, form_exps_[i]));
    }
    return acc;
  }
  Level omega(const Element& x) const override { return form_value(x).valuation(); }
  bool has_action() const override { return true; }
  QuadExt modulus() const override { return QuadExt(2); }
  FieldTag scalar_field() const override { return tag_; }
  Element odot(const Element& x, const Series& k) const override {
    Element out;
    out.parts.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out.parts.push_back(hs_mul(x.parts[i], k));
    return out;
  }
  ExpLattice scalar_lattice() const override { return scalar_lattice_; }
  std::optional<Series> rho(const Element& x) const override { return x.parts[0]; }
  void check_element(const Element& x) const override {
    require_arity(x, dim_, "form-group element");
    require_field(x, tag_, "form-group element");
    for (std::size_t i = 0; i < dim_; ++i) {
      for (const auto& t : x.parts[i].terms()) {
        if (!carriers_[i].contains(t.exp))
          throw CarrierViolation("coordinate exponent outside its carrier lattice");
      }
    }
  }
  Element sample_element(SampleRng& rng) const override {
    Element out;
    out.parts.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (rng.bounded(3) == 0) {
        out.parts.push_back(Series::zero(tag_));
      } else {
        out.parts.push_back(sample_series_from_pool(rng, tag_, coord_pools_[i], false, 2));
      }
    }
    return out;
  }
  Series sample_scalar(SampleRng& rng) const override {
    return sample_series_from_pool(rng, tag_, scalar_pool_, true, 2);
  }

 private:
  std::string id_;
  FieldTag tag_;
  std::vector<QuadExt> form_exps_;
  std::vector<ExpLattice> carriers_;
  ExpLattice scalar_lattice_;
  std::size_t dim_;
  std::vector<QuadExt> scalar_pool_;
  std::vector<std::vector<QuadExt>> coord_pools_;
};

// ---------------------------------------------------------------------
// Indifferent family: a GF(2) sub-vector-space over the field of squares
// K^2 (integer-lattice carrier, even-lattice scalars), omega = nu, m = 1.

class IndifferentGroup : public OmegaGroup {
 public:
  IndifferentGroup() {
    carrier_pool_ = pool_from_steps({QuadExt(1)}, -3, 4);
    scalar_pool_ = pool_from_steps({QuadExt(2)}, -2, 2);
  }

  std::string id() const override { return "indifferent"; }
  std::string describe() const override {
    return "GF(2) series lattice viewed as a vector space over the squares";
  }
  std::size_t arity() const override { return 1; }
  Element identity() const override { return {{Series::zero(FieldTag::F2)}}; }
  Element oplus(const Element& x, const Element& y) const override {
    return {{hs_add(x.parts[0], y.parts[0])}};
  }
  Element neg(const Element& x) const override { return x; }  // characteristic 2
  Level omega(const Element& x) const override { return x.parts[0].valuation(); }
  bool has_action() const override { return true; }
  QuadExt modulus() const override { return QuadExt(1); }
  FieldTag scalar_field() const override { return FieldTag::F2; }
  Element odot(const Element& x, const Series& k) const override {
    return {{hs_mul(x.parts[0], k)}};
  }
  ExpLattice scalar_lattice() const override {
    return ExpLattice::rational_multiples(make_rational(2));
  }
  std::optional<Series> rho(const Element& x) const override { return x.parts[0]; }
  void check_element(const Element& x) const override {
    require_arity(x, 1, "indifferent element");
    require_field(x, FieldTag::F2, "indifferent element");
    if (!hs_in_subfield(x.parts[0], SubfieldPredicate::exponents_in_lattice(QuadExt(1))))
      throw CarrierViolation("indifferent element outside its exponent lattice");
  }
  Element sample_element(SampleRng& rng) const override {
    return {{sample_series_from_pool(rng, FieldTag::F2, carrier_pool_, false)}};
  }
  Series sample_scalar(SampleRng& rng) const override {
    return sample_series_from_pool(rng, FieldTag::F2, scalar_pool_, true, 2);
  }

 private:
  std::vector<QuadExt> carrier_pool_;
  std::vector<QuadExt> scalar_pool_;
};

// ---------------------------------------------------------------------
// Pseudo-quadratic family: pairs (u, t) with q(u) - t in K_0, group law
// (u,t) + (v,s) = (u+v, t+s+f(v,u)), omega = nu(t), action
// (u,t) . k = (u k, conj(k) t k), m = 2.

class PseudoQuadraticGroup : public OmegaGroup {
 public:
  explicit PseudoQuadraticGroup(std::size_t dim) : dim_(dim) {
    if (dim_ == 0) throw std::invalid_argument("pseudo-quadratic dimension must be >= 1");
    pool_ = pool_from_steps({QuadExt(make_rational(1, 2), Rational(0))}, -3, 4);
  }

  std::string id() const override {
    return dim_ == 1 ? "pseudo-quadratic" : "pseudo-quadratic-" + std::to_string(dim_);
  }
  std::string describe() const override {
    return "pairs (u, t) over Q(i) series with q(u) - t conjugation-fixed";
  }
  std::size_t arity() const override { return dim_ + 1; }
  Element identity() const override {
    return {std::vector<Series>(dim_ + 1, Series::zero(FieldTag::Qi))};
  }
  Element oplus(const Element& x, const Element& y) const override {
    Element out;
    out.parts.reserve(dim_ + 1);
    for (std::size_t i = 0; i < dim_; ++i)
      out.parts.push_back(hs_add(x.parts[i], y.parts[i]));
    Series f = pq_skew_form(vec(y), vec(x));  // f(v, u)
    out.parts.push_back(hs_add(hs_add(x.parts[dim_], y.parts[dim_]), f));
    return out;
  }
  Element neg(const Element& x) const override {
    Element out;
    out.parts.reserve(dim_ + 1);
    for (std::size_t i = 0; i < dim_; ++i) out.parts.push_back(hs_neg(x.parts[i]));
    // -(u,t) = (-u, f(u,u) - t), from (u,t) + (-u, s) = (0, t + s + f(-u,u)).
    out.parts.push_back(hs_sub(pq_skew_form(vec(x), vec(x)), x.parts[dim_]));
    return out;
  }
  Level omega(const Element& x) const override { return x.parts[dim_].valuation(); }
  bool has_action() const override { return true; }
  QuadExt modulus() const override { return QuadExt(2); }
  FieldTag scalar_field() const override { return FieldTag::Qi; }
  Element odot(const Element& x, const Series& k) const override {
    Element out;
    out.parts.reserve(dim_ + 1);
    for (std::size_t i = 0; i < dim_; ++i) out.parts.push_back(hs_mul(x.parts[i], k));
    out.parts.push_back(hs_mul(hs_mul(hs_conjugate(k), x.parts[dim_]), k));
    return out;
  }
  std::optional<Series> rho(const Element& x) const override { return x.parts[0]; }
  void check_element(const Element& x) const override {
    require_arity(x, dim_ + 1, "pseudo-quadratic element");
    require_field(x, FieldTag::Qi, "pseudo-quadratic element");
    Series defect = hs_sub(pq_form(vec(x)), x.parts[dim_]);
    if (!hs_sigma_fixed(defect))
      throw CarrierViolation("pseudo-quadratic constraint q(u) - t in K0 violated");
  }
  Element sample_element(SampleRng& rng) const override {
    std::vector<Series> u;
    u.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (rng.bounded(3) == 0) {
        u.push_back(Series::zero(FieldTag::Qi));
      } else {
        u.push_back(sample_series_from_pool(rng, FieldTag::Qi, pool_, false, 2));
      }
    }
    Series k0 = sample_sigma_fixed_series(rng, pool_, false);
    Element out{std::move(u)};
    out.parts.push_back(hs_add(pq_form(vec(out)), k0));
    return out;
  }
  Series sample_scalar(SampleRng& rng) const override {
    return sample_series_from_pool(rng, FieldTag::Qi, pool_, true, 2);
  }

 private:
  std::vector<Series> vec(const Element& x) const {
    return std::vector<Series>(x.parts.begin(), x.parts.begin() + dim_);
  }
  std::size_t dim_;
  std::vector<QuadExt> pool_;
};

// ---------------------------------------------------------------------
// Exceptional extension framework (pluggable g, pi, q; declared m).

class ExceptionalGroup : public OmegaGroup {
 public:
  explicit ExceptionalGroup(ExceptionalData data) : data_(std::move(data)) {
    pool_ = pool_from_steps({QuadExt(make_rational(1, 2), Rational(0))}, -3, 4);
  }

  std::string id() const override { return data_.name; }
  std::string describe() const override {
    return "exceptional extension shape with pluggable (g, pi, q), declared m = " +
           quadext_to_string(data_.declared_m);
  }
  std::size_t arity() const override { return data_.dim + 1; }
  Element identity() const override {
    return {std::vector<Series>(data_.dim + 1, Series::zero(data_.field))};
  }
  Element oplus(const Element& x, const Element& y) const override {
    Element out;
    for (std::size_t i = 0; i < data_.dim; ++i)
      out.parts.push_back(hs_add(x.parts[i], y.parts[i]));
    Series gxy = data_.g(avec(x), avec(y));
    out.parts.push_back(hs_add(hs_add(x.parts[data_.dim], y.parts[data_.dim]), gxy));
    return out;
  }
  Element neg(const Element& x) const override {
    Element out;
    std::vector<Series> na;
    for (std::size_t i = 0; i < data_.dim; ++i) {
      out.parts.push_back(hs_neg(x.parts[i]));
      na.push_back(out.parts.back());
    }
    Series g = data_.g(avec(x), na);
    out.parts.push_back(hs_neg(hs_add(x.parts[data_.dim], g)));
    return out;
  }
  Level omega(const Element& x) const override {
    Series q = data_.q(data_.pi(avec(x)));
    return hs_add(q, x.parts[data_.dim]).valuation();
  }
  bool has_action() const override { return true; }
  QuadExt modulus() const override { return data_.declared_m; }
  FieldTag scalar_field() const override { return data_.field; }
  Element odot(const Element& x, const Series& s) const override {
    Element out;
    for (std::size_t i = 0; i < data_.dim; ++i) out.parts.push_back(hs_mul(s, x.parts[i]));
    out.parts.push_back(hs_mul(hs_mul(s, s), x.parts[data_.dim]));
    return out;
  }
  std::optional<Series> rho(const Element& x) const override {
    if (data_.dim == 0) return std::nullopt;
    return x.parts[0];
  }
  void check_element(const Element& x) const override {
    require_arity(x, data_.dim + 1, "exceptional element");
    require_field(x, data_.field, "exceptional element");
  }
  Element sample_element(SampleRng& rng) const override {
    Element out;
    for (std::size_t i = 0; i < data_.dim + 1; ++i) {
      if (rng.bounded(3) == 0) {
        out.parts.push_back(Series::zero(data_.field));
      } else {
        out.parts.push_back(sample_series_from_pool(rng, data_.field, pool_, false, 2));
      }
    }
    return out;
  }
  Series sample_scalar(SampleRng& rng) const override {
    return sample_series_from_pool(rng, data_.field, pool_, true, 2);
  }

 private:
  std::vector<Series> avec(const Element& x) const {
    return std::vector<Series>(x.parts.begin(), x.parts.begin() + data_.dim);
  }
  ExceptionalData data_;
  std::vector<QuadExt> pool_;
};

// ---------------------------------------------------------------------
// Hexagon family: theta-triples over GF(3) with integer-lattice exponents,
// omega = nu of the cubic norm, componentwise scalar action, m = 3.

class HexagonGroup : public OmegaGroup {
 public:
  HexagonGroup() { pool_ = pool_from_steps({QuadExt(1)}, -2, 3); }

  std::string id() const override { return "hexagon"; }
  std::string describe() const override {
    return "GF(3) theta-triples with omega = nu of the cubic norm (m = 3)";
  }
  std::size_t arity() const override { return 3; }
  Element identity() const override {
    return {std::vector<Series>(3, Series::zero(FieldTag::F3))};
  }
  Element oplus(const Element& x, const Element& y) const override {
    return {{hs_add(x.parts[0], y.parts[0]), hs_add(x.parts[1], y.parts[1]),
             hs_add(x.parts[2], y.parts[2])}};
  }
  Element neg(const Element& x) const override {
    return {{hs_neg(x.parts[0]), hs_neg(x.parts[1]), hs_neg(x.parts[2])}};
  }
  Level omega(const Element& x) const override { return hexagon_norm(x).valuation(); }
  bool has_action() const override { return true; }
  QuadExt modulus() const override { return QuadExt(3); }
  FieldTag scalar_field() const override { return FieldTag::F3; }
  Element odot(const Element& x, const Series& k) const override {
    return {{hs_mul(x.parts[0], k), hs_mul(x.parts[1], k), hs_mul(x.parts[2], k)}};
  }
  ExpLattice scalar_lattice() const override {
    return ExpLattice::rational_multiples(Rational(1));
  }
  std::optional<Series> rho(const Element& x) const override { return x.parts[0]; }
  void check_element(const Element& x) const override {
    require_arity(x, 3, "hexagon element");
    require_field(x, FieldTag::F3, "hexagon element");
    auto lattice = SubfieldPredicate::exponents_in_lattice(QuadExt(1));
    for (const auto& p : x.parts) {
      if (!hs_in_subfield(p, lattice))
        throw CarrierViolation("hexagon component outside the integer lattice");
    }
  }
  Element sample_element(SampleRng& rng) const override {
    Element out;
    for (int i = 0; i < 3; ++i) {
      if (rng.bounded(3) == 0) {
        out.parts.push_back(Series::zero(FieldTag::F3));
      } else {
        out.parts.push_back(sample_series_from_pool(rng, FieldTag::F3, pool_, false, 2));
      }
    }
    return out;
  }
  Series sample_scalar(SampleRng& rng) const override {
    return sample_series_from_pool(rng, FieldTag::F3, pool_, true, 2);
  }

 private:
  std::vector<QuadExt> pool_;
};

// ---------------------------------------------------------------------
// Octagon family: pairs (t, u) over GF(2) series with the Tits
// endomorphism, group law (t,u) + (s,v) = (t+s, u+v+t^sigma s), omega =
// nu(t^(sigma+2) + u t + u^sigma), action (t,u) . k = (t k^(sigma-1), u k),
// m = sqrt 2. The cocycle lands in the u component: that placement is the
// one under which the norm is invariant under inversion (omega(-x) =
// omega(x) holds as a series identity) and all three norm terms scale by
// k^sigma under the action.

class OctagonGroup : public OmegaGroup {
 public:
  OctagonGroup() {
    pool_ = pool_from_steps(
        {QuadExt(make_rational(1, 2), Rational(0)), QuadExt(Rational(0), make_rational(1, 2))},
        -2, 3);
    for (long a = -1; a <= 2; ++a) {
      for (long b = -1; b <= 2; ++b) {
        scalar_exps_.push_back(QuadExt(make_rational(a), make_rational(b)));
      }
    }
  }

  std::string id() const override { return "octagon"; }
  std::string describe() const override {
    return "GF(2) pairs (t, u) with a Tits endomorphism, m = sqrt(2)";
  }
  std::size_t arity() const override { return 2; }
  Element identity() const override {
    return {{Series::zero(FieldTag::F2), Series::zero(FieldTag::F2)}};
  }
  Element oplus(const Element& x, const Element& y) const override {
    const Series &t = x.parts[0], &u = x.parts[1];
    const Series &s = y.parts[0], &v = y.parts[1];
    return {{hs_add(t, s), hs_add(hs_add(u, v), hs_mul(hs_tits_sigma(t), s))}};
  }
  Element neg(const Element& x) const override {
    const Series &t = x.parts[0], &u = x.parts[1];
    // -(t,u) = (t, u + t^(sigma+1)) in characteristic 2.
    return {{t, hs_add(u, hs_mul(hs_tits_sigma(t), t))}};
  }
  Level omega(const Element& x) const override {
    return octagon_norm(x.parts[0], x.parts[1]).valuation();
  }
  bool has_action() const override { return true; }
  QuadExt modulus() const override { return QuadExt(Rational(0), Rational(1)); }
  FieldTag scalar_field() const override { return FieldTag::F2; }
  bool scalar_zero_ok() const override { return false; }
  Element odot(const Element& x, const Series& k) const override {
    if (k.is_zero()) throw DivisionByZero("octagon action needs a nonzero scalar");
    Series k_sigma_minus_one;
    if (k.is_monomial()) {
      const auto& lead = k.leading();
      k_sigma_minus_one =
          Series::monomial(quadext_scale_sqrt2(lead.exp) - lead.exp, lead.coeff);
    } else {
      // k^(sigma-1) = k^sigma * k^(-1); the inverse is truncated, with
      // enough terms that the leading behaviour (and hence omega) of the
      // result is exact.
      QuadExt spread = k.terms().back().exp - k.terms().front().exp;
      QuadExt precision = make_rational(3) * spread + QuadExt(4);
      k_sigma_minus_one = hs_mul(hs_tits_sigma(k), hs_invert(k, precision).value);
    }
    return {{hs_mul(x.parts[0], k_sigma_minus_one), hs_mul(x.parts[1], k)}};
  }
  // No rho override: the quotient action is twisted by sigma-1, so the
  // plain scalar projection law does not apply to this family.
  void check_element(const Element& x) const override {
    require_arity(x, 2, "octagon element");
    require_field(x, FieldTag::F2, "octagon element");
  }
  Element sample_element(SampleRng& rng) const override {
    Element out;
    for (int i = 0; i < 2; ++i) {
      if (rng.bounded(3) == 0) {
        out.parts.push_back(Series::zero(FieldTag::F2));
      } else {
        out.parts.push_back(sample_series_from_pool(rng, FieldTag::F2, pool_, false, 2));
      }
    }
    return out;
  }
  Series sample_scalar(SampleRng& rng) const override {
    // Monomials keep k^(sigma-1) exact.
    return Series::monomial(scalar_exps_[rng.bounded(scalar_exps_.size())],
                            Coeff::one(FieldTag::F2));
  }

 private:
  std::vector<QuadExt> pool_;
  std::vector<QuadExt> scalar_exps_;
};

}  // namespace

// ---------------------------------------------------------------------
// Shared form data.

Series pq_form(const std::vector<Series>& u) {
  Series acc = Series::zero(FieldTag::Qi);
  for (const auto& uj : u) acc = hs_add(acc, hs_mul(hs_conjugate(uj), uj));
  Coeff half_i = Coeff::complex(Rational(0), make_rational(1, 2));
  return hs_scale(half_i, acc);
}

Series pq_skew_form(const std::vector<Series>& u, const std::vector<Series>& v) {
  Series acc = Series::zero(FieldTag::Qi);
  for (std::size_t j = 0; j < u.size(); ++j)
    acc = hs_add(acc, hs_mul(hs_conjugate(u[j]), v[j]));
  return hs_scale(Coeff::imaginary_unit(), acc);
}

Series hexagon_norm(const Element& e) {
  // Cubes in characteristic 3 are the frobenius.
  Series n = hs_frobenius(e.parts[0]);
  n = hs_add(n, hs_shift(hs_frobenius(e.parts[1]), QuadExt(1)));
  n = hs_add(n, hs_shift(hs_frobenius(e.parts[2]), QuadExt(2)));
  return n;
}

Level hexagon_nu_e(const Element& e) {
  Level out = e.parts[0].valuation();
  out = min(out, e.parts[1].valuation() + Level::finite(QuadExt(make_rational(1, 3), Rational(0))));
  out = min(out, e.parts[2].valuation() + Level::finite(QuadExt(make_rational(2, 3), Rational(0))));
  return out;
}

Series octagon_norm(const Series& t, const Series& u) {
  Series n = hs_mul(hs_tits_sigma(t), hs_mul(t, t));
  n = hs_add(n, hs_mul(u, t));
  n = hs_add(n, hs_tits_sigma(u));
  return n;
}

ExceptionalData ExceptionalData::degenerate(QuadExt declared_m) {
  ExceptionalData d;
  d.dim = 1;
  d.field = FieldTag::Q;
  d.name = "exceptional-degenerate";
  d.declared_m = std::move(declared_m);
  d.g = [](const std::vector<Series>&, const std::vector<Series>&) {
    return Series::zero(FieldTag::Q);
  };
  d.pi = [](const std::vector<Series>&) {
    return std::vector<Series>{Series::zero(FieldTag::Q)};
  };
  d.q = [](const std::vector<Series>& l) {
    Series acc = Series::zero(FieldTag::Q);
    for (const auto& x : l) acc = hs_add(acc, hs_mul(x, x));
    return acc;
  };
  return d;
}

// ---------------------------------------------------------------------
// Factories.

GroupPtr make_triangle_group(FieldTag tag) {
  return std::make_shared<TriangleGroup>(
      tag, "", ExpLattice::all(),
      std::vector<QuadExt>{QuadExt(make_rational(1, 4), Rational(0))});
}

GroupPtr make_lattice_line_group(FieldTag tag, std::string id, ExpLattice lattice,
                                 std::vector<QuadExt> pool_steps) {
  return std::make_shared<TriangleGroup>(tag, std::move(id), std::move(lattice),
                                         std::move(pool_steps));
}

GroupPtr make_involutory_group() { return std::make_shared<InvolutoryGroup>(); }

GroupPtr make_quadratic_group(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("quadratic dimension must be >= 1");
  std::vector<QuadExt> form(dim, QuadExt());  // all-ones form
  // Exponents: any rational (no sqrt2 part) - the coefficient field is Q.
  ExpLattice rational_line{std::nullopt, Rational(0)};
  std::vector<ExpLattice> carriers(dim, rational_line);
  return std::make_shared<DiagonalFormGroup>(
      "quadratic-" + std::to_string(dim), FieldTag::Q, std::move(form), std::move(carriers),
      rational_line, std::vector<QuadExt>{QuadExt(make_rational(1, 4), Rational(0))});
}

GroupPtr make_indifferent_group() { return std::make_shared<IndifferentGroup>(); }

GroupPtr make_pseudo_quadratic_group(std::size_t dim) {
  return std::make_shared<PseudoQuadraticGroup>(dim);
}

GroupPtr make_hexagon_group() { return std::make_shared<HexagonGroup>(); }

GroupPtr make_octagon_group() { return std::make_shared<OctagonGroup>(); }

GroupPtr make_diagonal_form_group(std::string id, FieldTag tag,
                                  std::vector<QuadExt> form_exponents,
                                  std::vector<ExpLattice> carriers,
                                  ExpLattice scalar_lattice,
                                  std::vector<QuadExt> sample_pool_steps) {
  return std::make_shared<DiagonalFormGroup>(std::move(id), tag, std::move(form_exponents),
                                             std::move(carriers), std::move(scalar_lattice),
                                             std::move(sample_pool_steps));
}

GroupPtr make_f4_group(bool first_of_pair) {
  // Subfield chain on GF(2) exponent lattices:
  //   K^2 = Z + sqrt2*Z  in  F = Z + (sqrt2/2)*Z  in  K = (1/2)Z + (sqrt2/2)*Z.
  // Diagonal monomial coefficients put the five squared coordinates in
  // pairwise disjoint exponent classes, so the form is anisotropic and its
  // leading term never cancels. Scalars come from K^2; m = 2.
  ExpLattice latF = ExpLattice::plane(Rational(1), make_rational(1, 2));
  ExpLattice latK = ExpLattice::plane(make_rational(1, 2), make_rational(1, 2));
  ExpLattice latK2 = ExpLattice::plane(Rational(1), Rational(1));
  std::vector<QuadExt> pool_steps{QuadExt(1), QuadExt(Rational(0), Rational(1))};
  if (first_of_pair) {
    // F^4 x K.
    std::vector<QuadExt> form{QuadExt(), QuadExt(1), QuadExt(Rational(0), make_rational(1, 2)),
                              QuadExt(Rational(1), make_rational(1, 2)),
                              QuadExt(make_rational(1, 2), Rational(0))};
    std::vector<ExpLattice> carriers{latF, latF, latF, latF, latK};
    return make_diagonal_form_group("f4-a", FieldTag::F2, std::move(form),
                                    std::move(carriers), latK2, pool_steps);
  }
  // K^4 x F.
  std::vector<QuadExt> form{QuadExt(), QuadExt(make_rational(1, 2), Rational(0)),
                            QuadExt(Rational(0), make_rational(1, 2)),
                            QuadExt(make_rational(1, 2), make_rational(1, 2)),
                            QuadExt(make_rational(1, 4), Rational(0))};
  std::vector<ExpLattice> carriers{latK, latK, latK, latK, latF};
  return make_diagonal_form_group("f4-b", FieldTag::F2, std::move(form), std::move(carriers),
                                  latK2, pool_steps);
}

GroupPtr make_exceptional_group(const ExceptionalData& data, std::size_t validation_samples,
                                std::uint64_t validation_seed) {
  auto group = std::make_shared<ExceptionalGroup>(data);
  ValidationReport report =
      validate_omega_group(*group, validation_samples, validation_seed);
  if (!report.ok()) throw ValidationFailed(std::move(report));
  return group;
}

GroupPtr make_family(const std::string& id, const FamilyParams& params) {
  if (id == "triangle") return make_triangle_group(params.field);
  if (id == "involutory") return make_involutory_group();
  if (id == "quadratic")
    return make_quadratic_group(params.dimension == 0 ? 3 : params.dimension);
  if (id == "indifferent") return make_indifferent_group();
  if (id == "pseudo-quadratic")
    return make_pseudo_quadratic_group(params.dimension == 0 ? 1 : params.dimension);
  if (id == "hexagon") return make_hexagon_group();
  if (id == "octagon") return make_octagon_group();
  if (id == "f4-a" || id == "f4-b") {
    auto group = make_f4_group(id == "f4-a");
    ValidationReport report =
        validate_omega_group(*group, params.validation_samples, params.validation_seed);
    if (!report.ok()) throw ValidationFailed(std::move(report));
    return group;
  }
  if (id == "exceptional-degenerate") {
    ExceptionalData data = ExceptionalData::degenerate(QuadExt(4));
    data.name = "exceptional-degenerate";
    return make_exceptional_group(data, params.validation_samples, params.validation_seed);
  }
  if (id == "exceptional-line") {
    // Zero-dimensional X_0: the carrier collapses to the K line with
    // omega = nu(t) and action t . s = s^2 t, an honest omega-group with
    // m = 2. Demonstrates the framework's accepting path.
    ExceptionalData data = ExceptionalData::degenerate(QuadExt(2));
    data.name = "exceptional-line";
    data.dim = 0;
    return make_exceptional_group(data, params.validation_samples, params.validation_seed);
  }
  if (id == "corrupted-triangle")
    return make_corrupted_group(make_triangle_group(FieldTag::Q));
  throw std::invalid_argument("unknown family id '" + id + "'");
}

std::vector<std::string> family_ids() {
  return {"triangle",  "involutory",            "quadratic",
          "indifferent", "pseudo-quadratic",      "exceptional-degenerate",
          "exceptional-line", "hexagon",          "octagon",
          "f4-a",      "f4-b",                  "corrupted-triangle"};
}

}  // namespace nonarch
