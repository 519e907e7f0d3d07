#include "symgor/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace symgor {

namespace {

// Merge two descending term lists, b scaled by `scale` (nullptr for 1) and
// negated when `subtract`.
std::vector<Term> merge_terms(const Term* a, const Term* a_end, const Term* b, const Term* b_end,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>((a_end - a) + (b_end - b)));
  while (a != a_end && b != b_end) {
    const auto cmp = revlex_compare(a->monomial, b->monomial);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(*a++);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(*b++);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = subtract ? Rational(a->coeff - b->coeff) : Rational(a->coeff + b->coeff);
      if (sgn(c) != 0) out.push_back(Term{a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != a_end; ++a) out.push_back(*a);
  for (; b != b_end; ++b) {
    out.push_back(*b);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

std::string format_rational(const Rational& c) {
  return c.get_str();
}

Polynomial::Polynomial(OrderPtr order) : order_(std::move(order)) {
  if (!order_) throw std::invalid_argument("polynomial needs a term order");
}

Polynomial::Polynomial(OrderPtr order, std::vector<Term> terms) : Polynomial(std::move(order)) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return RevlexGreater{}(a.monomial, b.monomial); });
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::from_sorted(OrderPtr order, std::vector<Term> terms) {
  Polynomial p(std::move(order));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::variable(OrderPtr order, Variable v) {
  const std::size_t r = order->rank(v);
  return from_sorted(std::move(order), {Term{Monomial::variable(r), Rational(1)}});
}

Polynomial Polynomial::constant(OrderPtr order, const Rational& c) {
  if (sgn(c) == 0) return Polynomial(std::move(order));
  return from_sorted(std::move(order), {Term{Monomial{}, c}});
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (order_ != other.order_ && !(*order_ == *other.order_)) {
    throw std::invalid_argument("polynomials live in rings with different term orders");
  }
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(other);
  return from_sorted(order_, merge_terms(terms_.data(), terms_.data() + terms_.size(), other.terms_.data(),
                                         other.terms_.data() + other.terms_.size(), false));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_ring(other);
  return from_sorted(order_, merge_terms(terms_.data(), terms_.data() + terms_.size(), other.terms_.data(),
                                         other.terms_.data() + other.terms_.size(), true));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return *this = *this + other; }
Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this = *this - other; }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Term& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& coeff) const {
  if (sgn(coeff) == 0) return Polynomial(order_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a monomial preserves the order, so the result stays sorted.
  for (const Term& t : terms_) out.push_back(Term{t.monomial * m, t.coeff * coeff});
  return from_sorted(order_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) out.push_back(Term{a.monomial * b.monomial, a.coeff * b.coeff});
  }
  return Polynomial(order_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    const bool negative = sgn(t.coeff) < 0;
    if (i == 0) {
      if (negative) out += "−";
    } else {
      out += negative ? " − " : " + ";
    }
    const Rational magnitude = abs(t.coeff);
    if (t.monomial.is_one()) {
      out += format_rational(magnitude);
    } else {
      if (magnitude != 1) out += format_rational(magnitude) + "·";
      out += order_->format(t.monomial);
    }
  }
  return out;
}

Term leading_term(const Polynomial& p) { return p.leading_term(); }

Polynomial poly_reduce(const Polynomial& p, std::span<const Polynomial> basis) {
  for (const Polynomial& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("reduction basis contains the zero polynomial");
    p.check_ring(g);
  }
  std::vector<Term> remainder;
  std::vector<Term> work = p.terms_;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term& lead = work[head];
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : basis) {
      if (g.terms_.front().monomial.divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      ++head;
      continue;
    }
    const Term& g_lead = divisor->terms_.front();
    const Monomial shift = lead.monomial / g_lead.monomial;
    const Rational scale = lead.coeff / g_lead.coeff;
    // work[head] cancels against the scaled leading term of g exactly.
    std::vector<Term> scaled;
    scaled.reserve(divisor->terms_.size() - 1);
    for (std::size_t k = 1; k < divisor->terms_.size(); ++k) {
      const Term& t = divisor->terms_[k];
      scaled.push_back(Term{t.monomial * shift, t.coeff * scale});
    }
    work = merge_terms(work.data() + head + 1, work.data() + work.size(), scaled.data(),
                       scaled.data() + scaled.size(), true);
    head = 0;
  }
  return Polynomial::from_sorted(p.order_ptr(), std::move(remainder));
}

}  // namespace symgor
