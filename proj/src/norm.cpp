#include "bqf/norm.hpp"

#include <algorithm>
#include <utility>

namespace bqf {

namespace {

const Ring& zz() {
  static const Ring r = Ring::integers();
  return r;
}

EvenElem to_elem(const Int& x, const Int& y) { return {Elem(zz(), x), Elem(zz(), y)}; }

struct Col {
  Int x, y;
};

// tau (x + y tau) = -nm y + (x + t y) tau
Col times_tau(const QuadraticAlgebra& alg, const Col& v) {
  return {-alg.nm.to_int() * v.y, v.x + alg.t.to_int() * v.y};
}

bool contains(const IntMat& b, const Col& v) {
  const Int det = b.det();
  const Int sx = b(1, 1) * v.x - b(0, 1) * v.y;
  const Int sy = -b(1, 0) * v.x + b(0, 0) * v.y;
  return sx % det == 0 && sy % det == 0;
}

// Hermite basis [[A, B], [0, C]] of the lattice spanned by the columns.
IntMat hermite_of(std::vector<Col> cols) {
  // Column operations until a single generator has nonzero y.
  while (true) {
    std::size_t pivot = cols.size();
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (cols[i].y == 0) continue;
      if (pivot == cols.size() || abs(cols[i].y) < abs(cols[pivot].y)) pivot = i;
    }
    if (pivot == cols.size()) throw Error(ErrorKind::InvalidLattice, "generators are not of full rank");
    bool done = true;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i == pivot || cols[i].y == 0) continue;
      const Int q = floor_div(cols[i].y, cols[pivot].y);
      cols[i].x -= q * cols[pivot].x;
      cols[i].y -= q * cols[pivot].y;
      if (cols[i].y != 0) done = false;
    }
    if (done) {
      Col p = cols[pivot];
      if (p.y < 0) p = {-p.x, -p.y};
      Int a = 0;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i != pivot) a = gcd(a, cols[i].x);
      }
      if (a == 0) throw Error(ErrorKind::InvalidLattice, "generators are not of full rank");
      Int b = p.x % a;
      if (b < 0) b += a;
      return {a, b, 0, p.y};
    }
  }
}

}  // namespace

IdealLattice::IdealLattice(QuadraticAlgebra alg, IntMat basis) : alg_(std::move(alg)), basis_(std::move(basis)) {
  if (!alg_.ring().is_integers()) {
    throw Error(ErrorKind::UnsupportedRing, "ideal lattices live in integral algebras");
  }
  if (basis_.det() == 0) throw Error(ErrorKind::InvalidLattice, "lattice basis is singular");
  for (int j = 0; j < 2; ++j) {
    const Col v{basis_(0, j), basis_(1, j)};
    if (!contains(basis_, times_tau(alg_, v))) {
      throw Error(ErrorKind::InvalidLattice, "lattice is not closed under multiplication by tau");
    }
  }
}

EvenElem IdealLattice::alpha() const { return to_elem(basis_(0, 0), basis_(1, 0)); }
EvenElem IdealLattice::beta() const { return to_elem(basis_(0, 1), basis_(1, 1)); }

IdealLattice IdealLattice::hermite() const {
  IntMat h = hermite_of({{basis_(0, 0), basis_(1, 0)}, {basis_(0, 1), basis_(1, 1)}});
  if (orientation() < 0) {
    h(0, 1) = -h(0, 1);
    h(1, 1) = -h(1, 1);
  }
  return IdealLattice(alg_, std::move(h));
}

bool operator==(const IdealLattice& x, const IdealLattice& y) {
  return x.alg_ == y.alg_ && x.hermite().basis_ == y.hermite().basis_;
}

IdealLattice unit_ideal(const QuadraticAlgebra& alg) {
  return IdealLattice(alg, IntMat(1, -alg.t.to_int(), 0, 1));
}

IdealLattice form_to_ideal(const Form& input) {
  if (!input.ring().is_integers()) throw Error(ErrorKind::UnsupportedRing, "form_to_ideal needs an integral form");
  if (input.is_zero()) throw Error(ErrorKind::ZeroForm, "the zero form has no ideal");
  if (!is_primitive(input)) throw Error(ErrorKind::NotPrimitive, input.to_string() + " is not primitive");
  Form q = input;
  if (q.a.is_zero()) {
    const Ring& r = q.ring();
    const Elem one(r, 1L);
    for (const Mat& move : {make_mat(r, 0, -1, 1, 0), make_mat(r, 1, 0, 1, 1), make_mat(r, 1, 0, -1, 1)}) {
      Form moved = act(input, move, one);
      if (!moved.a.is_zero()) {
        q = std::move(moved);
        break;
      }
    }
  }
  return IdealLattice(even_clifford(q), IntMat(q.a.to_int(), -q.b.to_int(), 0, 1));
}

Form naive_norm_form(const IdealLattice& lattice) {
  const QuadraticAlgebra& alg = lattice.alg();
  const EvenElem al = lattice.alpha();
  const EvenElem be = lattice.beta();
  const Elem cross = trace(alg, mul(alg, al, conj(alg, be)));
  return Form(norm(alg, al), -cross, norm(alg, be));
}

Form universal_norm_form(const IdealLattice& lattice) {
  const Form naive = naive_norm_form(lattice);
  Elem g = content({naive.a, naive.b, naive.c});
  if (lattice.orientation() < 0) g = -g;
  return Form(divide(naive.a, g), divide(naive.b, g), divide(naive.c, g));
}

IdealClifford even_clifford_of_ideal(const IdealLattice& lattice) {
  QuadraticAlgebra alg = even_clifford(universal_norm_form(lattice));
  auto w = algebra_isomorphic(lattice.alg(), alg);
  if (!w) {
    throw Error(ErrorKind::InvalidLattice,
                "even Clifford algebra of the norm form is not isomorphic to the lattice's algebra");
  }
  return {std::move(alg), std::move(*w)};
}

IdealLattice ideal_multiply(const IdealLattice& x, const IdealLattice& y) {
  if (!(x.alg() == y.alg())) {
    throw Error(ErrorKind::IncompatibleAlgebras, "lattices live in different algebras");
  }
  const QuadraticAlgebra& alg = x.alg();
  std::vector<Col> gens;
  for (const EvenElem& u : {x.alpha(), x.beta()}) {
    for (const EvenElem& v : {y.alpha(), y.beta()}) {
      const EvenElem p = mul(alg, u, v);
      gens.push_back({p.x.to_int(), p.y.to_int()});
    }
  }
  IntMat h = hermite_of(std::move(gens));
  if (x.orientation() * y.orientation() < 0) {
    h(0, 1) = -h(0, 1);
    h(1, 1) = -h(1, 1);
  }
  return IdealLattice(alg, std::move(h));
}

namespace {

// Applies the coordinate map T to both basis vectors, then restores the
// original orientation by negating the second column if det(T) < 0.
IntMat map_basis(const IntMat& t, const IntMat& basis) {
  IntMat out = t * basis;
  if (sgn(out.det()) != sgn(basis.det())) {
    out(0, 1) = -out(0, 1);
    out(1, 1) = -out(1, 1);
  }
  return out;
}

}  // namespace

IdealLattice ideal_conjugate(const IdealLattice& lattice) {
  // sigma(x + y tau) = (x + t y) - y tau
  const Int t = lattice.alg().t.to_int();
  return IdealLattice(lattice.alg(), map_basis(IntMat(1, t, 0, -1), lattice.basis()));
}

IdealLattice transport(const IdealLattice& lattice, const QuadraticAlgebra& from,
                       const AlgebraWitness& w) {
  if (!verify_algebra_witness(from, lattice.alg(), w)) {
    throw Error(ErrorKind::IncompatibleAlgebras, "witness does not map onto the lattice's algebra");
  }
  // x + y tau_to = (x + k y) + eps y tau_from
  return IdealLattice(from, map_basis(IntMat(1, w.k.to_int(), 0, w.eps.to_int()), lattice.basis()));
}

// ---------------------------------------------------------------------------

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool BaseChangeReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const BaseChangeCheck& c) { return c.status == CheckStatus::Fail; });
}

namespace {

Form map_form(const Form& q, const Hom& h) { return Form(h(q.a), h(q.b), h(q.c)); }
Mat map_mat(const Mat& m, const Hom& h) { return {h(m(0, 0)), h(m(0, 1)), h(m(1, 0)), h(m(1, 1))}; }
EvenElem map_elem(const EvenElem& z, const Hom& h) { return {h(z.x), h(z.y)}; }

BaseChangeCheck verdict(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

}  // namespace

BaseChangeReport base_change_checks(const Form& q, const Hom& h) {
  BaseChangeReport report;
  const Form image = map_form(q, h);

  const QuadraticAlgebra c0 = even_clifford(q);
  const QuadraticAlgebra c0_image = even_clifford(image);
  report.checks.push_back(verdict("even_clifford", c0_image == QuadraticAlgebra{h(c0.t), h(c0.nm)}));

  const CliffordModule mod = clifford_bimodule(q);
  const CliffordModule mod_image = clifford_bimodule(image);
  report.checks.push_back(verdict("clifford_bimodule_left", mod_image.left == map_mat(mod.left, h)));
  report.checks.push_back(verdict("clifford_bimodule_right", *mod_image.right == map_mat(*mod.right, h)));

  const char* name = "universal_norm_form";
  if (!q.ring().is_integers() || !h.target().is_field()) {
    report.checks.push_back({name, CheckStatus::Skipped, "needs int -> field"});
  } else if (q.is_zero() || !is_primitive(q)) {
    report.checks.push_back({name, CheckStatus::Skipped, "needs a primitive form"});
  } else {
    // Norm form of the base-changed lattice, computed in the target algebra,
    // against the image of the integral naive and universal forms.
    const IdealLattice lattice = form_to_ideal(q);
    const QuadraticAlgebra target_alg{h(lattice.alg().t), h(lattice.alg().nm)};
    const EvenElem al = map_elem(lattice.alpha(), h);
    const EvenElem be = map_elem(lattice.beta(), h);
    const Form naive_target(norm(target_alg, al), -trace(target_alg, mul(target_alg, al, conj(target_alg, be))),
                            norm(target_alg, be));
    const Form naive = naive_norm_form(lattice);
    const Form universal = universal_norm_form(lattice);
    Elem scale = content({naive.a, naive.b, naive.c});
    if (lattice.orientation() < 0) scale = -scale;
    const Form universal_image = map_form(universal, h);
    const Elem s = h(scale);
    const bool commutes = naive_target == map_form(naive, h) &&
                          naive_target == Form(s * universal_image.a, s * universal_image.b, s * universal_image.c);
    const bool still_primitive = !universal_image.is_zero();
    report.checks.push_back(verdict(name, commutes && still_primitive));
  }
  return report;
}

}  // namespace bqf
