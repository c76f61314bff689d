#include "dtc/diffalg/diff_poly.hpp"

#include <algorithm>

#include "dtc/errors.hpp"

namespace dtc {

DiffMonomial::DiffMonomial(Indet x, std::uint32_t power) {
  if (power > 0) {
    factors_.emplace_back(x, power);
    degree_ = power;
  }
}

DiffMonomial DiffMonomial::from_factors(std::vector<std::pair<Indet, std::uint32_t>> f) {
  DiffMonomial m;
  m.factors_ = std::move(f);
  for (const auto& [x, e] : m.factors_) m.degree_ += e;
  return m;
}

std::uint32_t DiffMonomial::exponent(const Indet& x) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), x,
                             [](const auto& f, const Indet& key) { return f.first < key; });
  return it != factors_.end() && it->first == x ? it->second : 0;
}

DiffMonomial DiffMonomial::operator*(const DiffMonomial& o) const {
  if (o.is_one()) return *this;
  if (is_one()) return o;
  std::vector<std::pair<Indet, std::uint32_t>> f;
  f.reserve(factors_.size() + o.factors_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() || (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
      f.push_back(factors_[i++]);
    } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
      f.push_back(o.factors_[j++]);
    } else {
      f.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
      ++i;
      ++j;
    }
  }
  DiffMonomial m;
  m.factors_ = std::move(f);
  m.degree_ = degree_ + o.degree_;
  return m;
}

bool DiffMonomial::divides(const DiffMonomial& o) const {
  for (const auto& [x, e] : factors_) {
    if (o.exponent(x) < e) return false;
  }
  return true;
}

DiffMonomial DiffMonomial::quotient_of(const DiffMonomial& o) const {
  std::vector<std::pair<Indet, std::uint32_t>> f;
  for (const auto& [x, e] : o.factors_) {
    const auto mine = exponent(x);
    if (e > mine) f.emplace_back(x, e - mine);
  }
  return from_factors(std::move(f));
}

DiffMonomial DiffMonomial::without_one(const Indet& x) const {
  std::vector<std::pair<Indet, std::uint32_t>> f;
  f.reserve(factors_.size());
  for (const auto& [y, e] : factors_) {
    if (y == x) {
      if (e > 1) f.emplace_back(y, e - 1);
    } else {
      f.emplace_back(y, e);
    }
  }
  return from_factors(std::move(f));
}

bool DiffMonomialOrder::operator()(const DiffMonomial& a, const DiffMonomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = fa.size();
  std::size_t j = fb.size();
  while (i > 0 && j > 0) {
    const auto& [xa, ea] = fa[i - 1];
    const auto& [xb, eb] = fb[j - 1];
    if (xa != xb) return xa < xb;
    if (ea != eb) return ea < eb;
    --i;
    --j;
  }
  return i < j;
}

std::shared_ptr<const DiffPolyRing> DiffPolyRing::create(FieldPtr field, std::vector<std::string> generators,
                                                         std::size_t derivation) {
  if (!field) throw Error("ring requires a field");
  if (derivation >= field->derivation_count()) throw UnknownName("derivation index out of range");
  std::shared_ptr<DiffPolyRing> r(new DiffPolyRing());
  r->field_ = std::move(field);
  r->generators_ = std::move(generators);
  r->derivation_ = derivation;
  return r;
}

std::uint32_t DiffPolyRing::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<std::uint32_t>(i);
  }
  throw UnknownName("unknown generator '" + std::string(name) + "'");
}

std::string DiffPolyRing::indet_name(const Indet& x) const {
  std::string s = x.generator < generators_.size() ? generators_[x.generator] : "y" + std::to_string(x.generator);
  if (x.order > 0) s += "^(" + std::to_string(x.order) + ")";
  if (x.slot > 0) s += "#" + std::to_string(x.slot);
  return s;
}

DiffPoly::DiffPoly(RingPtr ring, RationalFunction constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_.emplace(DiffMonomial(), std::move(constant));
}

DiffPoly DiffPoly::indeterminate(RingPtr ring, Indet x) {
  DiffPoly p;
  p.ring_ = std::move(ring);
  p.terms_.emplace(DiffMonomial(x), RationalFunction(1));
  return p;
}

DiffPoly DiffPoly::from_terms(RingPtr ring, TermMap terms) {
  DiffPoly p;
  p.ring_ = std::move(ring);
  for (auto it = terms.begin(); it != terms.end();) {
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  p.terms_ = std::move(terms);
  return p;
}

bool DiffPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

RationalFunction DiffPoly::constant_value() const { return terms_.empty() ? RationalFunction() : terms_.begin()->second; }

std::uint32_t DiffPoly::max_order() const {
  std::uint32_t k = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& [x, e] : m.factors()) k = std::max(k, x.order);
  }
  return k;
}

std::uint32_t DiffPoly::max_slot() const {
  std::uint32_t s = 0;
  for (const auto& [m, c] : terms_) {
    for (const auto& [x, e] : m.factors()) s = std::max(s, x.slot);
  }
  return s;
}

const RingPtr& DiffPoly::common_ring(const DiffPoly& a, const DiffPoly& b) {
  if (!a.ring_) return b.ring_;
  if (b.ring_ && a.ring_ != b.ring_) throw Error("differential polynomials belong to different rings");
  return a.ring_;
}

void DiffPoly::add_term(const DiffMonomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  ring_ = common_ring(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
  if (terms_.size() < o.terms_.size()) {
    DiffPoly r(o);
    r += *this;
    return r;
  }
  DiffPoly r(*this);
  r += o;
  return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const { return *this + (-o); }

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
  DiffPoly r;
  r.ring_ = common_ring(*this, o);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

DiffPoly DiffPoly::scaled(const RationalFunction& c) const {
  if (c.is_zero()) {
    DiffPoly z;
    z.ring_ = ring_;
    return z;
  }
  DiffPoly r(*this);
  for (auto& [m, x] : r.terms_) x = x * c;
  return r;
}

DiffPoly DiffPoly::pow(std::uint32_t k) const {
  DiffPoly result(ring_, RationalFunction(1));
  DiffPoly base(*this);
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

DiffPoly DiffPoly::derive() const {
  DiffPoly r;
  r.ring_ = ring_;
  if (terms_.empty()) return r;
  const DiffField& field = *ring_->field();
  for (const auto& [m, c] : terms_) {
    r.add_term(m, field.derive(c, ring_->derivation()));
    for (const auto& [x, e] : m.factors()) {
      const Indet next{x.slot, x.generator, x.order + 1};
      r.add_term(m.without_one(x) * DiffMonomial(next), c * RationalFunction(static_cast<long>(e)));
    }
  }
  return r;
}

DiffPoly DiffPoly::derive(std::string_view derivation) const {
  if (ring_ && ring_->field()->derivation(ring_->derivation()).name != derivation) {
    throw UnknownName("'" + std::string(derivation) + "' is not the distinguished derivation of the ring");
  }
  return derive();
}

DiffPoly DiffPoly::map_indets(const std::function<DiffPoly(const Indet&)>& image, RingPtr target) const {
  std::map<Indet, std::vector<DiffPoly>> powers;  // powers[x][k] = image(x)^(k+1)
  auto power_of = [&](const Indet& x, std::uint32_t e) -> const DiffPoly& {
    auto& list = powers[x];
    if (list.empty()) list.push_back(image(x));
    while (list.size() < e) list.push_back(list.back() * list.front());
    return list[e - 1];
  };
  DiffPoly r;
  r.ring_ = target ? std::move(target) : ring_;
  for (const auto& [m, c] : terms_) {
    DiffPoly term(nullptr, c);
    for (const auto& [x, e] : m.factors()) term = term * power_of(x, e);
    r += term;
  }
  return r;
}

RationalFunction DiffPoly::substitute(const std::map<std::uint32_t, RationalFunction>& values) const {
  std::map<std::pair<std::uint32_t, std::uint32_t>, RationalFunction> cache;
  auto value_of = [&](const Indet& x) -> const RationalFunction& {
    if (x.slot != 0) throw Error("substitution applies to slot 0 only");
    auto it = cache.find({x.generator, x.order});
    if (it != cache.end()) return it->second;
    auto base = cache.find({x.generator, 0});
    if (base == cache.end()) {
      auto found = values.find(x.generator);
      if (found == values.end()) throw Error("missing assignment for " + ring_->indet_name(Indet{0, x.generator, 0}));
      base = cache.emplace(std::make_pair(x.generator, 0u), found->second).first;
    }
    for (std::uint32_t k = 1; k <= x.order; ++k) {
      if (cache.count({x.generator, k}) == 0) {
        cache.emplace(std::make_pair(x.generator, k),
                      ring_->field()->derive(cache.at({x.generator, k - 1}), ring_->derivation()));
      }
    }
    return cache.at({x.generator, x.order});
  };
  RationalFunction out;
  for (const auto& [m, c] : terms_) {
    RationalFunction term = c;
    for (const auto& [x, e] : m.factors()) term *= value_of(x).pow(e);
    out += term;
  }
  return out;
}

std::string DiffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (const auto& [x, e] : m.factors()) {
      if (!mono.empty()) mono += "*";
      mono += ring_->indet_name(x);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const std::string coeff = ring_->field()->print(c);
    const bool simple = c.is_constant();
    std::string term;
    if (mono.empty()) {
      term = simple ? coeff : "(" + coeff + ")";
    } else if (c.is_one()) {
      term = mono;
    } else if (c == RationalFunction(-1)) {
      term = "-" + mono;
    } else {
      term = (simple ? coeff : "(" + coeff + ")") + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace dtc
