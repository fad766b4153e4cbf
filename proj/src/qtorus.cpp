#include "qq/qtorus.hpp"

#include <sstream>

namespace qq {

SkewForm::SkewForm(std::vector<std::vector<long>> m) : lambda(std::move(m)) {
  const std::size_t k = lambda.size();
  for (std::size_t u = 0; u < k; ++u) {
    if (lambda[u].size() != k) throw DomainError("SkewForm: not square");
    for (std::size_t v = 0; v < k; ++v)
      if (lambda[u][v] != -lambda[v][u])
        throw DomainError("SkewForm: not skew-symmetric");
  }
}

long reorder_exponent(const ExpVec& a, const ExpVec& b, const SkewForm& form) {
  long s = 0;
  for (std::size_t u = 1; u < a.size(); ++u) {
    if (a[u] == 0) continue;
    for (std::size_t v = 0; v < u; ++v)
      if (b[v] != 0) s += a[u] * b[v] * form(u, v);
  }
  return s;
}

long comm_exponent(const ExpVec& a, const ExpVec& b, const SkewForm& form) {
  long s = 0;
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a[u] == 0) continue;
    for (std::size_t v = 0; v < b.size(); ++v)
      if (b[v] != 0) s += a[u] * form(u, v) * b[v];
  }
  return s;
}

TorusElem TorusElem::one(const SkewForm& form) {
  return monomial(form, ExpVec(form.size(), 0));
}

TorusElem TorusElem::monomial(const SkewForm& form, ExpVec e, QLaurent c) {
  if (e.size() != form.size()) throw DomainError("monomial: bad exponent size");
  TorusElem r(form);
  r.add_term(e, c);
  return r;
}

const ExpVec& TorusElem::mono_exp() const {
  if (!is_monomial()) throw DomainError("mono_exp: not a monomial");
  return terms_.begin()->first;
}

const QLaurent& TorusElem::mono_coeff() const {
  if (!is_monomial()) throw DomainError("mono_coeff: not a monomial");
  return terms_.begin()->second;
}

void TorusElem::add_term(const ExpVec& e, const QLaurent& c) {
  if (c.is_zero()) return;
  if (e.size() != form_.size()) throw DomainError("add_term: bad exponent size");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TorusElem::add_product_term(const ExpVec& e, const QLaurent& a,
                                 const QLaurent& b, long s) {
  if (e.size() != form_.size()) throw DomainError("add_term: bad exponent size");
  auto it = terms_.try_emplace(e).first;
  it->second.add_product(a, b, s);
  if (it->second.is_zero()) terms_.erase(it);
}

TorusElem& TorusElem::operator+=(const TorusElem& o) {
  if (!(form_ == o.form_)) throw DomainError("mismatched skew forms");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TorusElem& TorusElem::operator-=(const TorusElem& o) {
  if (!(form_ == o.form_)) throw DomainError("mismatched skew forms");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TorusElem TorusElem::operator-() const {
  TorusElem r(form_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

TorusElem TorusElem::scaled(const QLaurent& c) const {
  TorusElem r(form_);
  if (c.is_zero()) return r;
  for (const auto& [e, c0] : terms_) r.add_term(e, c0 * c);
  return r;
}

std::string TorusElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    bool all_zero = true;
    for (long v : e)
      if (v != 0) all_zero = false;
    std::string cs = c.to_string();
    if (all_zero) {
      out << (c.terms().size() > 1 ? "(" + cs + ")" : cs);
      continue;
    }
    if (c.is_one()) {
      // unit coefficient: omit
    } else if (c.terms().size() > 1) {
      out << "(" << cs << ")*";
    } else {
      out << cs << "*";
    }
    out << "x^(";
    for (std::size_t i = 0; i < e.size(); ++i)
      out << (i ? "," : "") << e[i];
    out << ")";
  }
  return out.str();
}

TorusElem normal_mul(const TorusElem& a, const TorusElem& b) {
  if (!(a.form() == b.form())) throw DomainError("mismatched skew forms");
  TorusElem r(a.form());
  const std::size_t k = a.form().size();
  ExpVec sum(k);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < k; ++i) sum[i] = ea[i] + eb[i];
      long s = reorder_exponent(ea, eb, a.form());
      r.add_product_term(sum, ca, cb, s);
    }
  return r;
}

namespace {

bool is_unit(const QLaurent& c) {
  if (c.terms().size() != 1) return false;
  const mpz_class& v = c.terms().begin()->second;
  return v == 1 || v == -1;
}

}  // namespace

TorusElem monomial_inverse(const TorusElem& t) {
  if (!t.is_monomial()) throw DomainError("monomial_inverse: not a monomial");
  const QLaurent& c = t.mono_coeff();
  if (!is_unit(c)) throw DomainError("monomial_inverse: coefficient not a unit");
  const ExpVec& a = t.mono_exp();
  ExpVec na(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) na[i] = -a[i];
  // x^a x^{-a} = q^{-s} with s = sigma(a, a), so (x^a)^{-1} = q^{s} x^{-a}.
  long s = reorder_exponent(a, a, t.form());
  long e = c.terms().begin()->first;
  mpz_class v = c.terms().begin()->second;  // +-1, self-inverse
  return TorusElem::monomial(t.form(), na, QLaurent::q_power(s - e, v));
}

TorusElem monomial_pow(const TorusElem& t, long n) {
  if (n == 0) return TorusElem::one(t.form());
  if (!t.is_monomial()) throw DomainError("monomial_pow: not a monomial");
  TorusElem base = n > 0 ? t : monomial_inverse(t);
  long m = n > 0 ? n : -n;
  // (c x^a)^m = c^m q^{sigma(a,a) m(m-1)/2} x^{m a}.
  const ExpVec& a = base.mono_exp();
  ExpVec ma(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) ma[i] = m * a[i];
  long s = reorder_exponent(a, a, t.form()) * (m * (m - 1) / 2);
  QLaurent c(1);
  for (long i = 0; i < m; ++i) c *= base.mono_coeff();
  return TorusElem::monomial(t.form(), ma, c.shifted(s));
}

namespace {

// Componentwise support box [lo, hi] such that any exact quotient exponent
// must lie inside; derived from supports of n and d.
struct Box {
  ExpVec lo, hi;
  bool contains(const ExpVec& e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < lo[i] || e[i] > hi[i]) return false;
    return true;
  }
};

Box quotient_box(const TorusElem& n, const TorusElem& d) {
  const std::size_t k = n.form().size();
  ExpVec nlo(k), nhi(k), dlo(k), dhi(k);
  bool first = true;
  for (const auto& [e, c] : n.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (first || e[i] < nlo[i]) nlo[i] = e[i];
      if (first || e[i] > nhi[i]) nhi[i] = e[i];
    }
    first = false;
  }
  first = true;
  for (const auto& [e, c] : d.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (first || e[i] < dlo[i]) dlo[i] = e[i];
      if (first || e[i] > dhi[i]) dhi[i] = e[i];
    }
    first = false;
  }
  Box b;
  b.lo.resize(k);
  b.hi.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    b.lo[i] = nlo[i] - dhi[i];
    b.hi[i] = nhi[i] - dlo[i];
  }
  return b;
}

TorusElem exact_div_impl(const TorusElem& n, const TorusElem& d, bool right) {
  if (!(n.form() == d.form())) throw DomainError("mismatched skew forms");
  if (d.is_zero()) throw DomainError("exact_div: division by zero");
  TorusElem quo(n.form());
  if (n.is_zero()) return quo;
  const Box box = quotient_box(n, d);
  // Leading term of d under lex order (map iteration order is lex; rbegin is
  // the maximum).
  const ExpVec& de = d.terms().rbegin()->first;
  const QLaurent& dc = d.terms().rbegin()->second;
  TorusElem rem = n;
  while (!rem.is_zero()) {
    const ExpVec& re = rem.terms().rbegin()->first;
    const QLaurent& rc = rem.terms().rbegin()->second;
    ExpVec xe(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) xe[i] = re[i] - de[i];
    if (!box.contains(xe))
      throw NotDivisibleError("exact_div: quotient support escapes bounding box");
    QLaurent xc;  // solve (x term) * (d lead) resp. (d lead) * (x term) = rem lead
    try {
      xc = ql_exact_div(rc, dc);
    } catch (const NotDivisibleError&) {
      throw NotDivisibleError("exact_div: coefficient not divisible");
    }
    long s = right ? reorder_exponent(xe, de, n.form())
                   : reorder_exponent(de, xe, n.form());
    QLaurent pc = xc.shifted(-s);
    quo.add_term(xe, pc);
    // Subtract piece * d (resp. d * piece) in place; piece is one monomial.
    const QLaurent neg = -pc;
    ExpVec sum(xe.size());
    for (const auto& [ed, cd] : d.terms()) {
      for (std::size_t i = 0; i < xe.size(); ++i) sum[i] = xe[i] + ed[i];
      long t = right ? reorder_exponent(xe, ed, n.form())
                     : reorder_exponent(ed, xe, n.form());
      rem.add_product_term(sum, neg, cd, t);
    }
  }
  return quo;
}

}  // namespace

TorusElem exact_div_right(const TorusElem& n, const TorusElem& d, TermOrder) {
  return exact_div_impl(n, d, /*right=*/true);
}

TorusElem exact_div_left(const TorusElem& n, const TorusElem& d, TermOrder) {
  return exact_div_impl(n, d, /*right=*/false);
}

}  // namespace qq
