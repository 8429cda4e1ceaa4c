#include "bqf/picard.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bqf/compose.hpp"
#include "bqf/norm.hpp"

namespace bqf {

namespace {

void check_discriminant(const Int& d) {
  const Int r = ((d % 4) + 4) % 4;
  if (d >= 0 || (r != 0 && r != 1)) {
    throw Error(ErrorKind::BadDiscriminant, d.get_str() + " is not a negative discriminant");
  }
}

Int isqrt(const Int& v) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

std::size_t index_of(const std::vector<Form>& forms, const Form& q) {
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i] == q) return i;
  }
  throw Error(ErrorKind::BadDiscriminant, q.to_string() + " is not among the reduced forms");
}

std::size_t count_orbits(std::size_t n, const std::vector<std::size_t>& involution) {
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (involution[i] >= i) ++orbits;
  }
  return orbits;
}

}  // namespace

std::vector<Form> reduced_forms(const Int& d) {
  check_discriminant(d);
  std::vector<Form> out;
  const Int ad = -d;
  for (Int a = 1; 3 * a * a <= ad; ++a) {
    for (Int b = -a + 1; b <= a; ++b) {
      if ((b - d) % 2 != 0) continue;
      const Int num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const Int c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (gcd(gcd(a, b), c) != 1) continue;
      out.emplace_back(Ring::integers(), a, b, c);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Form& x, const Form& y) {
    const Int xa = x.a.to_int(), ya = y.a.to_int();
    if (xa != ya) return xa < ya;
    const Int xb = x.b.to_int(), yb = y.b.to_int();
    if (abs(xb) != abs(yb)) return abs(xb) < abs(yb);
    return xb > yb;
  });
  return out;
}

std::size_t class_number(const Int& d) { return reduced_forms(d).size(); }

std::vector<Int> invariant_factors(const std::vector<std::vector<std::size_t>>& table,
                                   std::size_t identity) {
  const std::size_t n = table.size();
  std::vector<std::size_t> order(n, 1);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t x = g;
    while (x != identity) {
      x = table[x][g];
      ++order[g];
    }
  }
  // For each prime p | n the p-part is determined by |G[p^k]| for all k.
  std::vector<std::vector<Int>> parts;  // per prime, cyclic p-power orders, descending
  std::size_t rest = n;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<std::size_t> log_counts{0};
    for (std::size_t pk = p;; pk *= p) {
      std::size_t cnt = 0;
      for (std::size_t g = 0; g < n; ++g) cnt += (pk % order[g] == 0);
      std::size_t lg = 0;
      for (std::size_t c = cnt; c > 1; c /= p) ++lg;
      if (lg == log_counts.back()) break;
      log_counts.push_back(lg);
    }
    // at_least[k] = number of cyclic factors of order >= p^k
    std::vector<Int> orders;
    const std::size_t kmax = log_counts.size() - 1;
    for (std::size_t k = kmax; k >= 1; --k) {
      const std::size_t at_least_k = log_counts[k] - log_counts[k - 1];
      const std::size_t at_least_k1 = k < kmax ? log_counts[k + 1] - log_counts[k] : 0;
      Int pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk *= static_cast<unsigned long>(p);
      for (std::size_t i = at_least_k1; i < at_least_k; ++i) orders.push_back(pk);
    }
    parts.push_back(orders);
  }
  std::size_t width = 0;
  for (const auto& v : parts) width = std::max(width, v.size());
  std::vector<Int> out(width, Int(1));
  for (const auto& v : parts) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ClassGroup class_group(const Int& d) {
  ClassGroup g;
  g.forms = reduced_forms(d);
  const std::size_t h = g.forms.size();
  g.table.assign(h, std::vector<std::size_t>(h, 0));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      g.table[i][j] = index_of(g.forms, reduce_definite(compose(g.forms[i], g.forms[j])).form);
    }
  }
  g.invariant_factors = invariant_factors(g.table, 0);
  return g;
}

namespace {

// L = gamma C for some gamma in L, i.e. the naive norm form represents the
// index of L. Only for definite algebras.
bool is_principal(const IdealLattice& lat) {
  const Form f = naive_norm_form(lat);
  const Int a = f.a.to_int(), b = f.b.to_int(), c = f.c.to_int();
  const Int n = lat.index();
  const Int delta = 4 * a * c - b * b;
  const Int ymax = isqrt(4 * a * n / delta);
  for (Int y = -ymax; y <= ymax; ++y) {
    const Int disc = b * b * y * y - 4 * a * (c * y * y - n);
    if (disc < 0) continue;
    const Int s = isqrt(disc);
    if (s * s != disc) continue;
    for (const Int& num : {Int(-b * y + s), Int(-b * y - s)}) {
      if (num % (2 * a) == 0) return true;
    }
  }
  return false;
}

bool equivalent_ideals(const IdealLattice& x, const IdealLattice& y) {
  return is_principal(ideal_multiply(x, ideal_conjugate(y)));
}

}  // namespace

PicardCounts pic_counts(const Int& d) {
  const std::vector<Form> forms = reduced_forms(d);
  PicardCounts out{};
  out.oriented = forms.size();
  std::vector<std::size_t> inv(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Form& q = forms[i];
    inv[i] = index_of(forms, reduce_definite(Form(q.a, -q.b, q.c)).form);
  }
  out.unoriented = count_orbits(forms.size(), inv);

  // Ideal side: invertible primitive lattices of small index in the order of
  // discriminant d, up to multiplication by nonzero elements.
  const Ring z = Ring::integers();
  const Int t0 = (d % 2 == 0) ? 0 : 1;
  const QuadraticAlgebra alg{Elem(z, t0), Elem(z, Int((t0 - d) / 4))};
  std::vector<IdealLattice> ideals;
  for (Int a = 1; 3 * a * a <= -d; ++a) {
    for (Int b = 0; b < a; ++b) {
      try {
        IdealLattice lat(alg, IntMat(a, b, 0, 1));
        const IdealLattice unit = ideal_multiply(lat, ideal_conjugate(lat));
        if (!(unit.hermite().basis() == IntMat(a, 0, 0, a))) continue;
        ideals.push_back(lat);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidLattice) throw;
      }
    }
  }
  std::vector<IdealLattice> reps;
  std::vector<std::size_t> conj_of;
  for (const IdealLattice& lat : ideals) {
    bool seen = false;
    for (const IdealLattice& r : reps) {
      if (equivalent_ideals(lat, r)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(lat);
  }
  for (const IdealLattice& r : reps) {
    const IdealLattice s = ideal_conjugate(r);
    std::size_t j = 0;
    while (j < reps.size() && !equivalent_ideals(s, reps[j])) ++j;
    conj_of.push_back(j);
  }
  out.oriented_ideals = reps.size();
  out.unoriented_ideals = count_orbits(reps.size(), conj_of);
  return out;
}

AlgebraForm form_for_algebra(const QuadraticAlgebra& alg) {
  AlgebraForm out{identity_form(alg), AlgebraWitness{alg.t.zero(), alg.t.one()}};
  if (!verify_algebra_witness(even_clifford(out.form), alg, out.witness)) {
    throw Error(ErrorKind::IncompatibleAlgebras, "norm form does not recover the algebra");
  }
  return out;
}

}  // namespace bqf
