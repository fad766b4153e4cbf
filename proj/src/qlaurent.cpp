#include "qq/qlaurent.hpp"

#include <sstream>

namespace qq {

QLaurent QLaurent::q_power(long e, mpz_class c) {
  QLaurent r;
  if (c != 0) r.terms_[e] = std::move(c);
  return r;
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

long QLaurent::min_exp() const {
  if (terms_.empty()) throw DomainError("min_exp of zero");
  return terms_.begin()->first;
}

long QLaurent::max_exp() const {
  if (terms_.empty()) throw DomainError("max_exp of zero");
  return terms_.rbegin()->first;
}

void QLaurent::add_term(long e, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

QLaurent QLaurent::shifted(long e) const {
  QLaurent r;
  for (const auto& [e0, c] : terms_) r.terms_[e0 + e] = c;
  return r;
}

void QLaurent::add_product(const QLaurent& a, const QLaurent& b, long e) {
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto it = terms_.try_emplace(ea + eb + e).first;
      it->second += ca * cb;  // gmpxx fuses this into one addmul
      if (it->second == 0) terms_.erase(it);
    }
}

QLaurent QLaurent::inflated(long k) const {
  if (k < 1) throw DomainError("inflated: k must be >= 1");
  QLaurent r;
  for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
  return r;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) { out << "-"; a = -a; }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

mpz_class eval_q1(const QLaurent& x) {
  mpz_class s = 0;
  for (const auto& [e, c] : x.terms()) s += c;
  return s;
}

QLaurent ql_exact_div(const QLaurent& n, const QLaurent& d) {
  if (d.is_zero()) throw DomainError("ql_exact_div: division by zero");
  if (n.is_zero()) return QLaurent();
  // Degree bounds of any exact quotient are forced in one variable.
  const long lo = n.min_exp() - d.min_exp();
  const long d_lead = d.max_exp();
  const mpz_class& d_lead_c = d.terms().rbegin()->second;
  QLaurent rem = n, quo;
  while (!rem.is_zero()) {
    const long e = rem.max_exp() - d_lead;
    if (e < lo)
      throw NotDivisibleError("ql_exact_div: nonzero remainder");
    const mpz_class& rc = rem.terms().rbegin()->second;
    if (!mpz_divisible_p(rc.get_mpz_t(), d_lead_c.get_mpz_t()))
      throw NotDivisibleError("ql_exact_div: leading coefficient not divisible");
    mpz_class c = rc / d_lead_c;
    QLaurent piece = QLaurent::q_power(e, c);
    quo += piece;
    rem -= piece * d;
  }
  return quo;
}

namespace {

// prod_{i=1}^{n} (1 - q^i); the q-factorial up to sign/power normalization.
QLaurent q_factorial_product(long n) {
  QLaurent acc(1);
  for (long i = 1; i <= n; ++i) {
    QLaurent f(1);
    f.add_term(i, mpz_class(-1));
    acc *= f;
  }
  return acc;
}

}  // namespace

QLaurent qmultinomial(const std::vector<long>& parts, long var_exp) {
  if (var_exp < 1) throw DomainError("qmultinomial: var_exp must be >= 1");
  bool has_negative = false;
  long total = 0;
  for (long a : parts) {
    if (a < 0) has_negative = true;
    total += a;
  }
  if (has_negative) {
    // Convention: [-1; 0] = 1 (top -1, bottom 0). Everything else is out of
    // domain here; the guarded product factors live in the closed-form module.
    if (parts.size() == 2 && total == -1 &&
        (parts[0] == 0 || parts[1] == 0))
      return QLaurent(1);
    throw DomainError("qmultinomial: negative part outside the [-1; 0] convention");
  }
  QLaurent num = q_factorial_product(total);
  for (long a : parts) num = ql_exact_div(num, q_factorial_product(a));
  return num.inflated(var_exp);
}

}  // namespace qq
