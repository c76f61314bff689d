#include "dtc/hopf/diff_algebra.hpp"

#include <algorithm>

#include "dtc/errors.hpp"

namespace dtc {

DiffPoly move_slot(const DiffPoly& p, std::uint32_t from, std::uint32_t to) {
  if (from == to) return p;
  const RingPtr& ring = p.ring();
  return p.map_indets([&](const Indet& x) {
    return DiffPoly::indeterminate(ring, x.slot == from ? Indet{to, x.generator, x.order} : x);
  });
}

namespace {

bool mentions_generator(const DiffMonomial& m, std::uint32_t g) {
  return std::any_of(m.factors().begin(), m.factors().end(), [&](const auto& f) { return f.first.generator == g; });
}

}  // namespace

DiffAlgebra::DiffAlgebra(RingPtr ring, std::optional<UnitRelation> unit, std::uint32_t order)
    : ring_(std::move(ring)), unit_(std::move(unit)), order_(order) {
  if (!ring_) throw Error("algebra requires a ring");
  if (!unit_) return;
  const std::uint32_t inv = unit_->inverse;
  if (inv >= ring_->generators().size()) throw UnknownName("inverse generator out of range");
  for (const auto& [m, c] : unit_->base.terms()) {
    if (mentions_generator(m, inv)) throw RelationReductionError("cannot normalize: inverse generator occurs in its base");
    for (const auto& [x, e] : m.factors()) {
      if (x.slot != 0) throw RelationReductionError("cannot normalize: relation base must be written in slot 0");
    }
  }
  if (unit_->base.is_constant()) throw RelationReductionError("cannot normalize: relation base is constant");
  const DiffPoly g = DiffPoly::indeterminate(ring_, Indet{0, inv, 0});
  relation_ = g * unit_->base - one();
  // d(g) = -g^2 d(base) follows from g * base = 1; higher derivatives by
  // differentiating and eliminating d(g) again.
  inverse_derivatives_.resize(order_ + 1);
  if (order_ >= 1) inverse_derivatives_[1] = reduce(-(g * g * unit_->base.derive()));
  for (std::uint32_t k = 2; k <= order_; ++k) {
    inverse_derivatives_[k] = reduce(inverse_derivatives_[k - 1].derive().map_indets([&](const Indet& x) {
      return x.generator == inv && x.order == 1 ? inverse_derivatives_[1] : DiffPoly::indeterminate(ring_, x);
    }));
  }
}

DiffAlgebra DiffAlgebra::from_relations(RingPtr ring, const std::vector<DiffPoly>& relations, std::uint32_t order) {
  if (relations.empty()) return DiffAlgebra(std::move(ring), std::nullopt, order);
  if (relations.size() > 1) throw RelationReductionError("cannot normalize: more than one relation");
  const DiffPoly& r = relations.front();
  const auto& terms = r.terms();
  auto constant = terms.find(DiffMonomial());
  if (constant == terms.end()) throw RelationReductionError("cannot normalize: relation has no constant term");
  const DiffPoly rel = r.scaled(RationalFunction(-1) / constant->second);
  // The inverse generator divides every non-constant term exactly once at
  // order 0; later generators are preferred when several qualify.
  for (auto g = static_cast<std::uint32_t>(ring->generators().size()); g-- > 0;) {
    const Indet x{0, g, 0};
    bool fits = true;
    DiffPoly base(ring, RationalFunction());
    for (const auto& [m, c] : rel.terms()) {
      if (m.is_one()) continue;
      if (m.exponent(x) != 1 || mentions_generator(m.without_one(x), g)) {
        fits = false;
        break;
      }
      base += DiffPoly::from_terms(ring, {{m.without_one(x), c}});
    }
    if (fits && !base.is_constant()) return DiffAlgebra(ring, UnitRelation{g, base}, order);
  }
  throw RelationReductionError("cannot normalize modulo " + r.to_string() + ": not of the form g*P - 1");
}

DiffAlgebra DiffAlgebra::constants(FieldPtr field, std::size_t derivation) {
  return DiffAlgebra(DiffPolyRing::create(std::move(field), {}, derivation), std::nullopt, 0);
}

std::vector<DiffPoly> DiffAlgebra::relations() const {
  if (!unit_) return {};
  return {relation_};
}

DiffPoly DiffAlgebra::generator(std::string_view name, std::uint32_t order, std::uint32_t slot) const {
  const Indet x{slot, ring_->generator_index(name), order};
  if (order > order_) throw TruncationExhausted(ring_->indet_name(x) + " exceeds truncation order " + std::to_string(order_));
  return DiffPoly::indeterminate(ring_, x);
}

void DiffAlgebra::check_orders(const DiffPoly& p) const {
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [x, e] : m.factors()) {
      if (x.order > order_) {
        throw TruncationExhausted(ring_->indet_name(x) + " exceeds truncation order " + std::to_string(order_));
      }
    }
  }
}

DiffPoly DiffAlgebra::eliminate_inverse_derivatives(const DiffPoly& p) const {
  const std::uint32_t inv = unit_->inverse;
  const bool present = std::any_of(p.terms().begin(), p.terms().end(), [&](const auto& t) {
    return std::any_of(t.first.factors().begin(), t.first.factors().end(),
                       [&](const auto& f) { return f.first.generator == inv && f.first.order > 0; });
  });
  if (!present) return p;
  return p.map_indets(
      [&](const Indet& x) {
        if (x.generator == inv && x.order > 0) return move_slot(inverse_derivatives_[x.order], 0, x.slot);
        return DiffPoly::indeterminate(ring_, x);
      },
      ring_);
}

DiffPoly DiffAlgebra::relation_in_slot(std::uint32_t slot) const { return move_slot(relation_, 0, slot); }

DiffPoly DiffAlgebra::reduce(const DiffPoly& p) const {
  struct Rule {
    DiffMonomial lead;
    std::vector<std::pair<DiffMonomial, RationalFunction>> tail;  // lead -> tail
  };
  std::vector<Rule> rules;
  for (std::uint32_t s = 0; s <= p.max_slot(); ++s) {
    const DiffPoly rel = relation_in_slot(s);
    Rule rule{rel.terms().rbegin()->first, {}};
    const RationalFunction lc = rel.terms().rbegin()->second;
    for (const auto& [m, c] : rel.terms()) {
      if (!(m == rule.lead)) rule.tail.emplace_back(m, -(c / lc));
    }
    rules.push_back(std::move(rule));
  }
  DiffPoly::TermMap t = p.terms();
  auto add = [&](const DiffMonomial& m, const RationalFunction& c) {
    auto [it, inserted] = t.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  };
  // Descending sweep: rewriting a monomial only creates smaller ones.
  auto it = t.end();
  while (it != t.begin()) {
    --it;
    const Rule* rule = nullptr;
    for (const auto& r : rules) {
      if (r.lead.divides(it->first)) {
        rule = &r;
        break;
      }
    }
    if (!rule) continue;
    const DiffMonomial m = it->first;
    const RationalFunction c = it->second;
    const DiffMonomial q = rule->lead.quotient_of(m);
    t.erase(it);
    for (const auto& [tm, tc] : rule->tail) add(q * tm, c * tc);
    it = t.lower_bound(m);
  }
  return DiffPoly::from_terms(ring_, std::move(t));
}

DiffPoly DiffAlgebra::normalize(const DiffPoly& p) const {
  check_orders(p);
  if (!unit_) return p.ring() ? p : DiffPoly::from_terms(ring_, p.terms());
  return reduce(eliminate_inverse_derivatives(p));
}

}  // namespace dtc
