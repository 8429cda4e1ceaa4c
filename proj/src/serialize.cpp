#include "bqf/serialize.hpp"

#include <limits>

namespace bqf {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Ring ring_of(const Json& j, const Ring& fallback) {
  return j.is_object() && j.contains("ring") ? ring_from_json(j.at("ring")) : fallback;
}

Json verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Similar: return "similar";
    case Verdict::NotSimilar: return "not_similar";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

Json to_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json to_json(const Ring& r) {
  switch (r.kind()) {
    case RingKind::Integers: return {{"ring", "int"}};
    case RingKind::Rationals: return {{"ring", "rat"}};
    case RingKind::Modular: return {{"ring", "mod"}, {"n", to_json(r.modulus())}};
  }
  return nullptr;
}

Json to_json(const Elem& v) {
  if (!v.ring().is_rationals()) return to_json(v.to_int());
  return {{"num", to_json(Int(v.value().get_num()))}, {"den", to_json(Int(v.value().get_den()))}};
}

Json to_json(const Mat& m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(const IntMat& m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(const Form& q) {
  return {{"a", to_json(q.a)}, {"b", to_json(q.b)}, {"c", to_json(q.c)}, {"ring", to_json(q.ring())}};
}

Json to_json(const QuadraticAlgebra& alg) {
  return {{"t", to_json(alg.t)}, {"nm", to_json(alg.nm)}, {"ring", to_json(alg.ring())}};
}

Json to_json(const CliffordPair& p) {
  return {{"alg", {{"t", to_json(p.alg.t)}, {"nm", to_json(p.alg.nm)}}},
          {"m", to_json(p.m)},
          {"ring", to_json(p.ring())}};
}

Json to_json(const SimilarityWitness& w) { return {{"m", to_json(w.m)}, {"u", to_json(w.u)}}; }

Json to_json(const AlgebraWitness& w) { return {{"k", to_json(w.k)}, {"eps", to_json(w.eps)}}; }

Json to_json(const PairWitness& w) { return {{"psi", to_json(w.psi)}, {"alg", to_json(w.alg)}}; }

Json to_json(const IdealLattice& lat) {
  return {{"alg", {{"t", to_json(lat.alg().t)}, {"nm", to_json(lat.alg().nm)}}},
          {"basis", to_json(lat.basis())}};
}

Json to_json(const QuaternionElem& z) {
  return Json::array({to_json(z.x0), to_json(z.x1), to_json(z.y1), to_json(z.y2)});
}

Json to_json(const DualTrace& t) {
  Json stages = Json::array();
  for (const DualStage& s : t.stages) {
    Json j = {{"label", s.label}, {"module", s.module}, {"kind", s.kind}, {"form", to_json(s.form)}};
    if (s.relations) j["relations"] = to_json(*s.relations);
    stages.push_back(std::move(j));
  }
  return {{"dual", to_json(t.dual)}, {"stages", std::move(stages)}};
}

Json to_json(const SimilarityVerdict& v) {
  Json j = {{"verdict", verdict_name(v.verdict)}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.verdict == Verdict::NotSimilar) j["reason"] = v.reason;
  if (v.verdict == Verdict::Unknown) j["bound"] = v.bound;
  return j;
}

Json to_json(const PairVerdict& v) {
  Json j = {{"verdict", v.verdict == Verdict::Similar ? Json("isomorphic") : verdict_name(v.verdict)}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.verdict == Verdict::NotSimilar) j["reason"] = v.reason;
  if (v.verdict == Verdict::Unknown) j["bound"] = v.bound;
  return j;
}

// ---------------------------------------------------------------------------

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) parse_error("bad integer \"" + j.get<std::string>() + "\"");
    return v;
  }
  parse_error("expected an integer, got " + j.dump());
}

Ring ring_from_json(const Json& j) {
  if (j.is_string()) return Ring::parse(j.get<std::string>());
  const Json& name = field(j, "ring");
  if (!name.is_string()) parse_error("ring name must be a string");
  const std::string s = name.get<std::string>();
  if (s == "int") return Ring::integers();
  if (s == "rat") return Ring::rationals();
  if (s == "mod") return Ring::modular(int_from_json(field(j, "n")));
  return Ring::parse(s);
}

Elem elem_from_json(const Json& j, const Ring& ring) {
  if (j.is_object()) {
    Rat v(int_from_json(field(j, "num")), int_from_json(field(j, "den")));
    if (v.get_den() == 0) parse_error("zero denominator");
    v.canonicalize();
    return Elem(ring, v);
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('/') != std::string::npos) {
      Rat v;
      if (v.set_str(s, 10) != 0 || v.get_den() == 0) parse_error("bad rational \"" + s + "\"");
      v.canonicalize();
      return Elem(ring, v);
    }
  }
  return Elem(ring, int_from_json(j));
}

Mat mat_from_json(const Json& j, const Ring& ring) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    parse_error("expected a 2x2 matrix as two rows");
  }
  return Mat(elem_from_json(j[0][0], ring), elem_from_json(j[0][1], ring), elem_from_json(j[1][0], ring),
             elem_from_json(j[1][1], ring));
}

Form form_from_json(const Json& j, const Ring& fallback) {
  if (j.is_array() && j.size() == 3) {
    return Form(elem_from_json(j[0], fallback), elem_from_json(j[1], fallback), elem_from_json(j[2], fallback));
  }
  const Ring r = ring_of(j, fallback);
  return Form(elem_from_json(field(j, "a"), r), elem_from_json(field(j, "b"), r), elem_from_json(field(j, "c"), r));
}

QuadraticAlgebra algebra_from_json(const Json& j, const Ring& fallback) {
  const Ring r = ring_of(j, fallback);
  return QuadraticAlgebra{elem_from_json(field(j, "t"), r), elem_from_json(field(j, "nm"), r)};
}

CliffordPair pair_from_json(const Json& j, const Ring& fallback) {
  const Ring r = ring_of(j, fallback);
  return CliffordPair{algebra_from_json(field(j, "alg"), r), mat_from_json(field(j, "m"), r)};
}

QuaternionElem quaternion_from_json(const Json& j, const Ring& ring) {
  if (!j.is_array() || j.size() != 4) parse_error("expected a quaternion as [x0, x1, y1, y2]");
  return QuaternionElem{elem_from_json(j[0], ring), elem_from_json(j[1], ring), elem_from_json(j[2], ring),
                        elem_from_json(j[3], ring)};
}

}  // namespace bqf
