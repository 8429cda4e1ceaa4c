#include "bqf/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "bqf/compose.hpp"
#include "bqf/norm.hpp"
#include "bqf/pairs.hpp"
#include "bqf/picard.hpp"

namespace bqf::acceptance {

namespace {

// Collects the first few failures of a criterion.
struct Check {
  long count = 0;
  long failures = 0;
  std::ostringstream first;

  void operator()(bool ok, const std::string& what) {
    ++count;
    if (ok) return;
    if (failures++ < 3) first << (failures > 1 ? "; " : "") << what;
  }
  bool passed() const { return failures == 0; }
  std::string detail() const {
    std::ostringstream s;
    s << count << " checks";
    if (failures) s << ", " << failures << " failed: " << first.str();
    return s.str();
  }
};

template <class F>
void grid(long lo, long hi, F f) {
  for (long a = lo; a <= hi; ++a)
    for (long b = lo; b <= hi; ++b)
      for (long c = lo; c <= hi; ++c) f(a, b, c);
}

std::string str(const Form& q) { return q.to_string(); }

bool throws_unsupported(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == ErrorKind::UnsupportedRing;
  }
  return false;
}

std::vector<Int> discriminants(long lo, long hi) {
  std::vector<Int> out;
  for (long d = hi; d >= lo; --d) {
    const long r = ((d % 4) + 4) % 4;
    if (r == 0 || r == 1) out.emplace_back(d);
  }
  return out;
}

Form reduced(const Form& q) { return reduce_definite(q).form; }

// ---------------------------------------------------------------------------

std::string discriminant_identity(Check& check) {
  const std::vector<Ring> rings = {Ring::integers(), Ring::modular(5), Ring::modular(7), Ring::modular(9)};
  for (const Ring& r : rings) {
    grid(-10, 10, [&](long a, long b, long c) {
      const Form q(r, a, b, c);
      check(discriminant(q).paper == -alg_discriminant(even_clifford(q)), str(q) + " over " + r.name());
    });
  }
  return {};
}

std::string bijection(Check& check) {
  grid(-6, 6, [&](long a, long b, long c) {
    const Form q(a, b, c);
    check(pair_to_form(form_to_pair(q)) == q, "round trip " + str(q));
  });

  // Random traceable pairs: a normalized pair shifted by m and conjugated by
  // a random unimodular matrix.
  std::mt19937_64 rng(20241);
  std::uniform_int_distribution<long> coef(-6, 6), shift(-5, 5), step(-2, 2);
  const Ring z = Ring::integers();
  for (int i = 0; i < 500; ++i) {
    const Form q(coef(rng), coef(rng), coef(rng));
    const CliffordPair base = form_to_pair(q);
    const long m = shift(rng);
    const Elem em(z, m);
    Mat psi = identity_mat(z);
    for (int k = 0; k < 3; ++k) {
      psi = psi * make_mat(z, 1, step(rng), 0, 1) * make_mat(z, 1, 0, step(rng), 1);
    }
    const CliffordPair p{{base.alg.t + 2 * em, base.alg.nm + em * base.alg.t + em * em},
                         psi * (base.m + Mat::scalar(em, Elem(z, 0L))) * psi.adjugate() *
                             Mat::scalar(psi.det().inverse(), Elem(z, 0L))};
    if (!is_traceable(p)) {
      check(false, "generated pair is not traceable");
      continue;
    }
    const CliffordPair back = form_to_pair(pair_to_form(p));
    const PairVerdict v = pairs_isomorphic(p, back);
    check(v.is_isomorphic() && v.witness && verify_pair_witness(p, back, *v.witness),
          "pair of " + str(pair_to_form(p)) + " with shift " + std::to_string(m));
  }

  // Similarity vs pair isomorphism vs brute force.
  std::vector<Form> forms;
  grid(-4, 4, [&](long a, long b, long c) {
    const Form q(a, b, c);
    if (4 * a * c - b * b > 0 && is_primitive(q)) forms.push_back(q);
  });
  std::vector<CliffordPair> pairs;
  for (const Form& q : forms) pairs.push_back(form_to_pair(q));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < forms.size(); ++j) {
      const SimilarityVerdict sv = similar(forms[i], forms[j]);
      const PairVerdict pv = pairs_isomorphic(pairs[i], pairs[j]);
      const auto oracle = search_pair_isomorphism(pairs[i], pairs[j], 12);
      const std::string what = str(forms[i]) + " vs " + str(forms[j]);
      check(sv.verdict != Verdict::Unknown, "unknown verdict " + what);
      check(pv.verdict == sv.verdict, "pair verdict differs " + what);
      check(oracle.has_value() == sv.is_similar(), "brute force disagrees " + what);
      if (sv.witness) check(verify_witness(forms[i], forms[j], *sv.witness), "bad witness " + what);
      if (pv.witness) check(verify_pair_witness(pairs[i], pairs[j], *pv.witness), "bad pair witness " + what);
    }
  }
  return std::to_string(forms.size()) + " definite forms";
}

std::string traceability(Check& check) {
  const std::vector<Ring> rings = {Ring::integers(), Ring::modular(5), Ring::modular(7), Ring::modular(9)};
  for (const Ring& r : rings) {
    grid(-10, 10, [&](long a, long b, long c) {
      const Form q(r, a, b, c);
      check(is_traceable(even_clifford(q), clifford_bimodule(q).left), str(q) + " over " + r.name());
    });
  }
  const Ring z = Ring::integers();
  const QuadraticAlgebra split{Elem(z, 1L), Elem(z, 0L)};
  check(satisfies_module_axiom(split, identity_mat(z)), "identity satisfies tau^2 = tau");
  check(!is_traceable(split, identity_mat(z)), "split counterexample accepted");
  return {};
}

std::string duality(Check& check) {
  grid(-10, 10, [&](long a, long b, long c) {
    const Form q(a, b, c);
    check(dual_form(dual_form(q)) == q, "involution " + str(q));
  });
  std::mt19937_64 rng(5400);
  std::uniform_int_distribution<long> coef(-9, 9);
  const Ring z = Ring::integers();
  for (int i = 0; i < 20; ++i) {
    const long a = coef(rng), b = coef(rng), c = coef(rng);
    const Form q(a, b, c);
    const DualTrace t = dual_form_trace(q);
    const std::string what = "trace of " + str(q);
    if (t.stages.size() != 5) {
      check(false, what + " has " + std::to_string(t.stages.size()) + " stages");
      continue;
    }
    // q_W = (q_W)_K = c x^2 - b xy + a y^2, and back to a x^2 + b xy + c y^2.
    check(t.stages[0].form == q, what + ": stage q");
    check(t.stages[1].form == Form(c, -b, a), what + ": stage q_W");
    check(t.stages[2].form == Form(c, -b, a), what + ": stage (q_W)_K");
    check(t.stages[3].form == q, what + ": stage ((q_W)_K)_W");
    check(t.stages[4].form == q, what + ": stage (((q_W)_K)_W)_K");
    check(t.dual == Form(c, -b, a), what + ": dual");
    // tau^2 = -b tau - ac, tau e1* = -b e1* - c e2*, tau e2* = a e1*.
    const CliffordPair displayed{{Elem(z, -b), Elem(z, a * c)}, make_mat(z, -b, a, -c, 0)};
    check(t.stages[2].relations && *t.stages[2].relations == displayed, what + ": dual relations");
    check(pair_to_form(displayed) == Form(c, -b, a), what + ": Kneser reading on the dual");
    check(t.stages[0].relations && *t.stages[0].relations == form_to_pair(q), what + ": relations on E");
    check(t.stages[4].relations && *t.stages[4].relations == form_to_pair(q), what + ": relations at the end");
  }
  return {};
}

std::string dual_conics(Check& check) {
  const Ring qq = Ring::rationals();
  long nondegenerate = 0;
  grid(-5, 5, [&](long a, long b, long c) {
    if (4 * a * c == b * b) return;
    ++nondegenerate;
    const Form q(qq, a, b, c);
    const Form dd = dual_conic(dual_conic(q));
    // Projective equality: all 2x2 minors of the coefficient vectors vanish.
    const bool proportional = (dd.a * q.b == dd.b * q.a) && (dd.a * q.c == dd.c * q.a) && (dd.b * q.c == dd.c * q.b);
    check(proportional && !dd.is_zero(), "double dual of " + str(q));
  });

  const Form g(qq, 1, 1, 1);
  for (auto [alpha, beta] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {2, -1}, {3, 1}, {2, 3}}) {
    const Form q(qq, alpha * alpha, 2 * alpha * beta, beta * beta);
    const Form lim = dual_conic_limit(q, g);
    const std::string what = "limit at " + str(q);
    check(dual_conic(q) == lim, what);
    // det(t) * dual(q + t g) at t = 10^-k approaches the limit linearly.
    Rat prev_err = -1;
    for (int k = 1; k <= 6; ++k) {
      Rat t(1);
      for (int i = 0; i < k; ++i) t /= 10;
      const Elem et(qq, t);
      const Form qt(q.a + et * g.a, q.b + et * g.b, q.c + et * g.c);
      const Elem det = qt.a * qt.c - divide(qt.b * qt.b, Elem(qq, 4L));
      const Form d = dual_conic(qt);
      Rat err = 0;
      for (const Elem& diff : {det * d.a - lim.a, det * d.b - lim.b, det * d.c - lim.c}) {
        err = std::max(err, Rat(abs(diff.value())));
      }
      check(err <= 10 * t, what + " at t = " + t.get_str());
      if (prev_err >= 0) check(err < prev_err, what + " not converging");
      prev_err = err;
    }
  }
  return std::to_string(nondegenerate) + " nondegenerate forms";
}

std::string composition(Check& check) {
  // Reduced forms and two non-reduced representatives of each class.
  const Ring z = Ring::integers();
  const std::vector<Mat> moves = {identity_mat(z), make_mat(z, 1, 1, 0, 1), make_mat(z, 2, 1, 1, 1)};
  long pairs = 0;
  for (const Int& d : discriminants(-200, -3)) {
    const std::vector<Form> forms = reduced_forms(d);
    std::vector<Form> reps;
    for (const Form& q : forms)
      for (const Mat& m : moves) reps.push_back(act(q, m, Elem(z, 1L)));
    for (const Form& x : reps) {
      for (const Form& y : reps) {
        ++pairs;
        const Form c = compose(x, y);
        const Form o = dirichlet_compose(x, y);
        check(is_primitive(c) && discriminant(c).classical == discriminant(x).classical,
              "primitivity or discriminant of " + str(x) + " o " + str(y));
        check(properly_equivalent(c, o), str(x) + " o " + str(y) + ": " + str(c) + " vs oracle " + str(o));
      }
    }
    const Form principal = forms.front();
    for (const Form& q : forms) {
      check(reduced(compose(q, identity_form(even_clifford(q)))) == q, "identity law at " + str(q));
      check(reduced(compose(q, inverse_form(q))) == principal, "inverse law at " + str(q));
      check(reduced(inverse_form(q)) == reduced(Form(q.a, -q.b, q.c)), "inverse of " + str(q));
    }
  }
  for (long d : {-23L, -47L, -71L}) {
    const std::vector<Form> forms = reduced_forms(d);
    for (const Form& x : forms) {
      for (const Form& y : forms) {
        check(reduced(compose(x, y)) == reduced(compose(y, x)), "commutativity " + str(x) + ", " + str(y));
        for (const Form& w : forms) {
          check(reduced(compose(compose(x, y), w)) == reduced(compose(x, compose(y, w))),
                "associativity " + str(x) + ", " + str(y) + ", " + str(w));
        }
      }
    }
  }
  return std::to_string(pairs) + " composed pairs";
}

std::string class_numbers(Check& check) {
  const std::vector<std::pair<long, std::size_t>> expected = {{-3, 1},  {-4, 1},  {-15, 2}, {-20, 2},
                                                              {-23, 3}, {-47, 5}, {-71, 7}};
  for (auto [d, h] : expected) {
    const std::size_t got = class_number(d);
    check(got == h, "h(" + std::to_string(d) + ") = " + std::to_string(got));
  }
  const ClassGroup g = class_group(-47);
  check(g.invariant_factors == std::vector<Int>{5}, "class group of -47 is not cyclic of order 5");
  return {};
}

std::string picard(Check& check) {
  for (const Int& d : discriminants(-100, -3)) {
    const PicardCounts p = pic_counts(d);
    const std::string at = " at D = " + d.get_str();
    check(p.oriented == class_number(d), "oriented count" + at);
    check(p.oriented_ideals == p.oriented, "ideal classes " + std::to_string(p.oriented_ideals) + " vs forms " +
                                               std::to_string(p.oriented) + at);
    check(p.unoriented_ideals == p.unoriented, "ideal orbits " + std::to_string(p.unoriented_ideals) +
                                                   " vs form orbits " + std::to_string(p.unoriented) + at);
  }
  return {};
}

std::string quaternions(Check& check) {
  std::mt19937_64 rng(5006);
  std::uniform_int_distribution<long> coef(-5, 5);
  const Ring z = Ring::integers();
  auto elem = [&] { return QuaternionElem{Elem(z, coef(rng)), Elem(z, coef(rng)), Elem(z, coef(rng)), Elem(z, coef(rng))}; };
  for (int f = 0; f < 20; ++f) {
    const Form q(coef(rng), coef(rng), coef(rng));
    for (int i = 0; i < 10; ++i) {
      const QuaternionElem x = elem(), y = elem(), w = elem();
      const std::string what = " for " + str(q);
      check(quat_mul(q, quat_mul(q, x, y), w) == quat_mul(q, x, quat_mul(q, y, w)), "associativity" + what);
      try {
        for (const QuaternionElem& v : {x, y, w}) {
          const Elem tr = quat_trace(q, v);
          const Elem n = quat_norm(q, v);
          const QuaternionElem cp = quat_add(quat_add(quat_mul(q, v, v), quat_scale(-tr, v)), quat_scalar(n));
          check(cp == quat_scalar(Elem(z, 0L)), "characteristic polynomial" + what);
        }
        check(quat_norm(q, quat_mul(q, x, y)) == quat_norm(q, x) * quat_norm(q, y), "norm multiplicativity" + what);
      } catch (const Error& e) {
        check(false, std::string("non-scalar trace or norm") + what);
      }
    }
  }
  return {};
}

std::string universal_norm(Check& check) {
  grid(-8, 8, [&](long a, long b, long c) {
    const Form q(a, b, c);
    if (4 * a * c - b * b <= 0 || !is_primitive(q)) return;
    const IdealLattice lat = form_to_ideal(q);
    check(properly_equivalent(universal_norm_form(lat), q), "recovery of " + str(q));
    const IdealClifford ic = even_clifford_of_ideal(lat);
    check(verify_algebra_witness(lat.alg(), ic.alg, ic.witness), "Clifford stability of " + str(q));
  });
  for (const Int& d : discriminants(-100, -3)) {
    const std::vector<Form> forms = reduced_forms(d);
    for (const Form& x : forms) {
      const IdealLattice ix = form_to_ideal(x);
      const Form nx = naive_norm_form(ix);
      const Elem cx = content({nx.a, nx.b, nx.c});
      const IdealLattice unit = ideal_multiply(ix, ideal_conjugate(ix));
      const Int n = ix.index();
      check(unit.hermite().basis() == IntMat(n, 0, 0, n), "conjugate-inverse lattice at " + str(x));
      check(properly_equivalent(universal_norm_form(unit), identity_form(ix.alg())), "conjugate-inverse class at " + str(x));
      for (const Form& y : forms) {
        const IdealLattice iy = form_to_ideal(y);
        const auto w = algebra_isomorphisms(ix.alg(), iy.alg());
        for (const AlgebraWitness& aw : w) {
          const IdealLattice jy = transport(iy, ix.alg(), aw);
          const Form ny = naive_norm_form(jy);
          const Form np = naive_norm_form(ideal_multiply(ix, jy));
          check(content({np.a, np.b, np.c}) == cx * content({ny.a, ny.b, ny.c}),
                "content multiplicativity " + str(x) + ", " + str(y));
        }
      }
    }
  }
  return {};
}

std::string base_change(Check& check) {
  for (long n : {2L, 3L, 5L, 7L, 12L}) {
    const Hom h(Ring::integers(), Ring::modular(n));
    grid(-6, 6, [&](long a, long b, long c) {
      const Form q(a, b, c);
      for (const BaseChangeCheck& bc : base_change_checks(q, h).checks) {
        check(bc.status != CheckStatus::Fail, bc.name + " for " + str(q) + " mod " + std::to_string(n));
      }
    });
  }
  return {};
}

std::string automorphism_groups(Check& check) {
  std::mt19937_64 rng(513);
  std::uniform_int_distribution<long> coef(-50, 50);
  const Ring z = Ring::integers();
  for (int i = 0; i < 100; ++i) {
    const QuadraticAlgebra alg{Elem(z, coef(rng)), Elem(z, coef(rng))};
    const std::string what = "C(" + alg.t.to_string() + ", " + alg.nm.to_string() + ")";
    const std::vector<AlgebraWitness> expected = {{Elem(z, 0L), Elem(z, 1L)}, {alg.t, Elem(z, -1L)}};
    check(automorphisms(alg) == expected, "automorphisms of " + what);
    check(oriented_automorphisms(alg) == std::vector<AlgebraWitness>{expected[0]}, "oriented automorphisms of " + what);
  }
  for (long n : {2L, 4L}) {
    const Ring r = Ring::modular(n);
    const QuadraticAlgebra alg{Elem(r, 1L), Elem(r, 1L)};
    const std::string what = " over Z/" + std::to_string(n);
    check(throws_unsupported([&] { automorphisms(alg); }), "automorphisms" + what);
    check(throws_unsupported([&] { oriented_automorphisms(alg); }), "oriented automorphisms" + what);
    check(throws_unsupported([&] { algebra_isomorphisms(alg, alg); }), "algebra isomorphisms" + what);
    check(throws_unsupported([&] { algebra_isomorphic(alg, alg); }), "algebra_isomorphic" + what);
  }
  return {};
}

using Body = std::string (*)(Check&);

const std::vector<std::pair<Criterion, Body>>& table() {
  static const std::vector<std::pair<Criterion, Body>> t = {
      {{1, "discriminant_identity", 2}, discriminant_identity},
      {{2, "bijection_round_trips", 60}, bijection},
      {{3, "traceability", 0}, traceability},
      {{4, "duality_involution", 0}, duality},
      {{5, "dual_conic", 0}, dual_conics},
      {{6, "composition_oracle", 120}, composition},
      {{7, "class_numbers", 0}, class_numbers},
      {{8, "picard_bijections", 0}, picard},
      {{9, "quaternion_axioms", 0}, quaternions},
      {{10, "universal_norm", 0}, universal_norm},
      {{11, "base_change", 0}, base_change},
      {{12, "automorphisms", 0}, automorphism_groups},
  };
  return t;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = [] {
    std::vector<Criterion> out;
    for (const auto& [crit, body] : table()) out.push_back(crit);
    return out;
  }();
  return c;
}

bool selected(const Criterion& c, const std::string& filter) {
  if (filter.empty()) return true;
  std::istringstream in(filter);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token == std::to_string(c.id)) return true;
    if (c.name.find(token) != std::string::npos) return true;
  }
  return false;
}

std::vector<Result> run(const std::string& filter, std::ostream& out) {
  std::vector<Result> results;
  for (const auto& [crit, body] : table()) {
    if (!selected(crit, filter)) continue;
    Check check;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      note = body(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = check.passed();
    std::string detail = check.detail();
    if (!note.empty()) detail += ", " + note;
    if (crit.time_limit > 0 && secs > crit.time_limit) {
      ok = false;
      std::ostringstream s;
      s << ", over the " << crit.time_limit << " s limit";
      detail += s.str();
    }
    out << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << crit.id << " " << std::left << std::setw(22)
        << crit.name << std::right << " " << std::fixed << std::setprecision(2) << secs << " s  " << detail
        << std::endl;
    results.push_back({crit.id, crit.name, ok, secs, detail});
  }
  return results;
}

}  // namespace bqf::acceptance
