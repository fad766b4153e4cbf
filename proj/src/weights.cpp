#include "qq/weights.hpp"

#include <cstdlib>
#include <map>

namespace qq {

namespace {

struct Letter {
  int row = 0;
  long col = 0;
  int sign = 1;
};

// Evaluates a reduced weight word: every letter must be a seed generator
// (boundary rows were dropped and out-of-seed letters cancelled before).
TorusElem eval_word(const ClusterSeed& seed,
                    const std::map<GenLabel, std::size_t>& slot,
                    const std::vector<Letter>& word, long qshift) {
  TorusElem acc = TorusElem::one(seed.form);
  for (const Letter& l : word) {
    auto it = slot.find({l.row, l.col});
    if (it == slot.end()) throw DomainError("weight word letter outside seed");
    ExpVec e(seed.generators.size(), 0);
    e[it->second] = 1;
    TorusElem g = TorusElem::monomial(seed.form, e);
    acc = normal_mul(acc, l.sign > 0 ? g : monomial_inverse(g));
  }
  return acc.scaled(QLaurent::q_power(qshift));
}

}  // namespace

WeightVector weights_explicit(const ClusterSeed& seed) {
  const MotzkinPath& m = seed.path;
  const int r = seed.rank;
  std::map<GenLabel, std::size_t> slot;
  for (std::size_t u = 0; u < seed.generators.size(); ++u)
    slot.emplace(seed.generators[u], u);

  WeightVector w{seed, {}};
  w.y.reserve(2 * r + 1);

  auto push = [&](std::vector<Letter>& word, int row, long col, int sign) {
    if (row == 0 || row == r + 1) return;  // boundary rows are 1
    word.push_back({row, col, sign});
  };

  for (int j = 1; j <= 2 * r + 1; ++j) {
    std::vector<Letter> word;
    long qshift = 0;
    if (j % 2 == 1) {
      const int i = (j + 1) / 2;  // in [1, r+1]
      qshift = i - 1;
      push(word, i, m.entry_ext(i) + 1, +1);
      push(word, i, m.entry_ext(i), -1);
      push(word, i - 1, m.entry_ext(i - 1), +1);
      push(word, i - 1, m.entry_ext(i - 1) + 1, -1);
    } else {
      const int i = j / 2;  // in [1, r]
      const long mi = m.m[i - 1];
      if (mi == m.entry_ext(i + 1) + 1) {
        // Leading correction factor; its trailing inverse cancels the body's
        // first letter, which lies one column above the row-(i+1) top.
        const long up = m.entry_ext(i + 1);
        push(word, i + 1, up + 1, +1);
        push(word, i + 1, up, -1);
        push(word, i + 1, mi, +1);
      } else {
        push(word, i + 1, mi + 1, +1);
      }
      push(word, i, mi + 1, -1);
      push(word, i, mi, -1);
      if (mi == m.entry_ext(i - 1) - 1) {
        // Trailing correction factor: a same-row swap (cost q^{Lambda}) lets
        // the body's last letter cancel the factor's inverse.
        const long dn = m.entry_ext(i - 1);
        qshift += lambda_pairing(i - 1, i - 1, r);
        push(word, i - 1, mi + 1, +1);
        push(word, i - 1, dn, +1);
        push(word, i - 1, dn + 1, -1);
      } else {
        push(word, i - 1, mi, +1);
      }
    }
    w.y.push_back(eval_word(seed, slot, word, qshift));
  }
  return w;
}

namespace {

// Images of the old seed generators inside the mutated seed's torus: unit
// monomials, except the removed bottom (i, m_i), whose image is the two-term
// exchange value q^{-lambda_i} R_{i,m_i+2}^{-1} (R_{i,m_i+1}^2 + R_{i+1,m_i+1} R_{i-1,m_i+1}).
struct SeedMap {
  ClusterSeed next;
  std::vector<TorusElem> image;
  std::size_t pivot = 0;
  TorusElem phi;       // R_{i,m_i+1}^2 + R_{i+1,m_i+1} R_{i-1,m_i+1}, new chart
  TorusElem new_top;   // R_{i,m_i+2}
  long lambda_i = 0;
};

SeedMap build_seed_map(const ClusterSeed& seed, int i) {
  const int r = seed.rank;
  SeedMap sm;
  sm.next = build_seed(mutate_path(seed.path, i, +1));
  sm.lambda_i = static_cast<long>(i) * (r + 1 - i);

  std::map<GenLabel, std::size_t> nslot;
  for (std::size_t u = 0; u < sm.next.generators.size(); ++u)
    nslot.emplace(sm.next.generators[u], u);
  auto unit = [&](int row, long col) {
    if (row == 0 || row == r + 1) return TorusElem::one(sm.next.form);
    ExpVec e(sm.next.generators.size(), 0);
    e[nslot.at({row, col})] = 1;
    return TorusElem::monomial(sm.next.form, e);
  };

  const long mi = seed.path.m[i - 1];
  TorusElem nb = unit(i, mi + 1);
  sm.new_top = unit(i, mi + 2);
  sm.phi = normal_mul(nb, nb) + normal_mul(unit(i + 1, mi + 1), unit(i - 1, mi + 1));

  sm.pivot = static_cast<std::size_t>(i - 1);
  sm.image.reserve(seed.generators.size());
  for (std::size_t u = 0; u < seed.generators.size(); ++u) {
    if (u == sm.pivot) {
      sm.image.push_back(normal_mul(monomial_inverse(sm.new_top), sm.phi)
                             .scaled(QLaurent::q_power(-sm.lambda_i)));
    } else {
      auto [row, col] = seed.generators[u];
      sm.image.push_back(unit(row, col));
    }
  }
  return sm;
}

// Re-evaluates an old-chart element in the new chart, folding the generator
// images in normal order. Negative pivot exponents have no monomial image.
TorusElem remap(const SeedMap& sm, const TorusElem& x) {
  TorusElem out(sm.next.form);
  for (const auto& [a, c] : x.terms()) {
    TorusElem t = TorusElem::one(sm.next.form);
    for (std::size_t u = 0; u < a.size(); ++u) {
      if (a[u] == 0) continue;
      if (u == sm.pivot) {
        if (a[u] < 0) throw DomainError("remap: negative pivot exponent");
        for (long k = 0; k < a[u]; ++k) t = normal_mul(t, sm.image[u]);
      } else {
        t = normal_mul(t, monomial_pow(sm.image[u], a[u]));
      }
    }
    out += t.scaled(c);
  }
  return out;
}

void require_unit_monomial(const TorusElem& x, const char* what) {
  if (!x.is_monomial() || x.mono_coeff().terms().size() != 1)
    throw DomainError(std::string(what) + ": non-monomial result");
  const mpz_class& c = x.mono_coeff().terms().begin()->second;
  if (c != 1 && c != -1)
    throw DomainError(std::string(what) + ": non-unit coefficient");
}

}  // namespace

WeightVector weights_mutate(const WeightVector& w, int i, MutationCase tag) {
  const ClusterSeed& seed = w.seed;
  const int r = seed.rank;
  if (i < 1 || i > r) throw DomainError("weights_mutate: bad index");
  MutationCase actual;
  if (!mutation_case(seed.path, i, &actual) || actual != tag)
    throw DomainError("weights_mutate: case mismatch");

  SeedMap sm = build_seed_map(seed, i);
  ExpVec be(seed.generators.size(), 0);
  be[sm.pivot] = 1;
  const TorusElem bot = TorusElem::monomial(seed.form, be);

  const TorusElem& y_odd = w.y[2 * i - 2];
  const TorusElem& y_even = w.y[2 * i - 1];
  const TorusElem& y_up = w.y[2 * i];

  // D = y_{2i-1} + y_{2i} collapses to one monomial in the new chart:
  // D = q^{lambda_i} (E phi^{-1}) R_{i,m_i+2} with E = D R_{i,m_i}.
  const TorusElem E = remap(sm, normal_mul(y_odd + y_even, bot));
  TorusElem D = normal_mul(exact_div_right(E, sm.phi), sm.new_top)
                    .scaled(QLaurent::q_power(sm.lambda_i));
  require_unit_monomial(D, "weights_mutate");

  // y' = (... y) D^{-1} = (... y R_{i,m_i}) E^{-1}, all pivot-free numerators.
  auto clear_right = [&](const TorusElem& lhs) {
    TorusElem num = remap(sm, normal_mul(lhs, bot));
    TorusElem res = exact_div_right(num, E);
    require_unit_monomial(res, "weights_mutate");
    return res;
  };

  WeightVector out{sm.next, {}};
  out.y.resize(2 * r + 1, TorusElem(sm.next.form));
  for (int j = 0; j < 2 * r + 1; ++j) {
    if (j >= 2 * i - 2 && j <= 2 * i) continue;  // recomputed below
    if (j == 2 * i + 1 && tag == MutationCase::case_ii) continue;
    out.y[j] = remap(sm, w.y[j]);
  }
  out.y[2 * i - 2] = D;
  out.y[2 * i - 1] = clear_right(normal_mul(y_up, y_even));
  out.y[2 * i] = clear_right(normal_mul(y_up, y_odd));
  if (tag == MutationCase::case_ii && 2 * i + 2 <= 2 * r + 1)
    out.y[2 * i + 1] = clear_right(normal_mul(w.y[2 * i + 1], y_odd));
  return out;
}

HatWeightVector hat_weights(const WeightVector& w) {
  const MotzkinPath& m = w.seed.path;
  const int r = w.seed.rank;
  const SkewForm& f = w.seed.form;
  HatWeightVector h;
  h.yhat.assign(2 * r + 1, HatEntry{TorusElem(f), TorusElem(f), TorusElem(f)});

  for (int i = 1; i <= r; ++i) {
    const long cur = m.entry_ext(i);
    const long nxt = m.entry_ext(i + 1);
    HatEntry& odd = h.yhat[2 * i - 2];
    HatEntry& even = h.yhat[2 * i - 1];
    if (nxt == cur) {
      odd.deg1 = w.y[2 * i - 2];
      even.deg1 = w.y[2 * i - 1];
    } else if (nxt == cur + 1) {
      odd.deg1 = w.y[2 * i - 2] + w.y[2 * i - 1];
      even.deg2 = normal_mul(w.y[2 * i], w.y[2 * i - 1]);
    } else {
      TorusElem z = normal_mul(monomial_inverse(w.y[2 * i]), w.y[2 * i - 1]);
      odd.deg1 = w.y[2 * i - 2];
      odd.deg0 = -z;
      even.deg0 = z;
    }
  }
  h.yhat[2 * r].deg1 = w.y[2 * r];
  return h;
}

std::vector<WeightArrow> comm_quiver(const WeightVector& w) {
  const int r = w.seed.rank;
  std::vector<WeightArrow> arrows;
  for (int u = 1; u <= 2 * r + 1; ++u)
    for (int v = u + 1; v <= 2 * r + 1; ++v) {
      long e = comm_exponent(w.y[u - 1].mono_exp(), w.y[v - 1].mono_exp(),
                             w.seed.form);
      if (e % (r + 1) != 0)
        throw DomainError("comm_quiver: exponent not a multiple of r+1");
      long mult = e / (r + 1);
      if (mult > 0) arrows.push_back({u, v, mult});
      if (mult < 0) arrows.push_back({v, u, -mult});
    }
  return arrows;
}

}  // namespace qq
