// bqf: command-line access to the library with canonical JSON in and out.
//
// Exit codes: 0 success, 1 usage or malformed input, 2 domain error or a
// negative verdict, 3 unknown verdict.

#include <CLI11.hpp>

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bqf/acceptance.hpp"
#include "bqf/compose.hpp"
#include "bqf/picard.hpp"
#include "bqf/serialize.hpp"

namespace {

using namespace bqf;

struct Options {
  std::string ring = "int";
  std::string to;
  std::string twist = "oriented";
  std::string filter;
  std::string op = "mul";
  int bound = 12;
  bool proper_reduce = false;
  bool trace = false;
  bool dirichlet = false;
  std::array<std::string, 3> slots;
  std::vector<std::string> inputs;
};

struct Exit {
  int code;
};

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

[[noreturn]] void fail(int code, std::string_view kind, const std::string& message) {
  std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
  throw Exit{code};
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

// An argument is inline JSON, a path to a JSON file, or "-" for stdin.
Json read_input(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text = slurp(std::cin);
  } else if (!arg.empty() && arg[0] != '{' && arg[0] != '[' && std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    text = slurp(f);
  } else {
    text = arg;
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(1, "Parse", "malformed JSON in '" + arg + "': " + e.what());
  }
}

std::vector<Json> inputs(const Options& o, std::size_t min, std::size_t max) {
  std::vector<std::string> args = o.inputs;
  if (args.empty() && min > 0) args.push_back("-");
  if (args.size() < min || args.size() > max) {
    fail(1, "Usage", "expected " + std::to_string(min) + (max > min ? " to " + std::to_string(max) : "") +
                         " inputs, got " + std::to_string(args.size()));
  }
  std::vector<Json> out;
  for (const std::string& a : args) out.push_back(read_input(a));
  return out;
}

Form reduced_if(const Options& o, const Form& q) { return o.proper_reduce ? reduce_definite(q).form : q; }

Twist twist_of(const Options& o) {
  if (o.twist == "oriented") return Twist::Oriented;
  if (o.twist == "sigma") return Twist::Sigma;
  fail(1, "Usage", "--twist must be 'oriented' or 'sigma'");
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Similar: return 0;
    case Verdict::NotSimilar: return 2;
    case Verdict::Unknown: return 3;
  }
  return 3;
}

Json forms_json(const std::vector<Form>& forms) {
  Json out = Json::array();
  for (const Form& q : forms) out.push_back(to_json(q));
  return out;
}

Json factors_json(const std::vector<Int>& factors) {
  Json out = Json::array();
  for (const Int& d : factors) out.push_back(to_json(d));
  return out;
}

int run_verb(const std::string& verb, const Options& o) {
  const Ring ring = Ring::parse(o.ring);
  auto form = [&](const Json& j) { return form_from_json(j, ring); };

  if (verb == "disc") {
    const Discriminants d = discriminant(form(inputs(o, 1, 1)[0]));
    emit({{"paper", to_json(d.paper)}, {"classical", to_json(d.classical)}});
  } else if (verb == "clifford") {
    const Form q = form(inputs(o, 1, 1)[0]);
    const CliffordModule m = clifford_bimodule(q);
    emit({{"algebra", to_json(even_clifford(q))}, {"left", to_json(m.left)}, {"right", to_json(*m.right)}});
  } else if (verb == "pair2form") {
    emit(to_json(pair_to_form(pair_from_json(inputs(o, 1, 1)[0], ring))));
  } else if (verb == "form2pair") {
    emit(to_json(form_to_pair(form(inputs(o, 1, 1)[0]))));
  } else if (verb == "traceable") {
    emit({{"traceable", is_traceable(pair_from_json(inputs(o, 1, 1)[0], ring))}});
  } else if (verb == "similar") {
    const auto in = inputs(o, 2, 2);
    const SimilarityVerdict v = similar(form(in[0]), form(in[1]), {o.bound});
    emit(to_json(v));
    return verdict_code(v.verdict);
  } else if (verb == "reduce") {
    const Reduction r = reduce_definite(form(inputs(o, 1, 1)[0]));
    emit({{"form", to_json(r.form)}, {"witness", to_json(r.witness)}});
  } else if (verb == "dual") {
    const DualTrace t = dual_form_trace(form(inputs(o, 1, 1)[0]));
    emit(o.trace ? to_json(t) : to_json(t.dual));
  } else if (verb == "dualconic") {
    const auto in = inputs(o, 1, 2);
    const Form q = form(in[0]);
    emit(to_json(in.size() == 2 ? dual_conic_limit(q, form(in[1])) : dual_conic(q)));
  } else if (verb == "wood") {
    emit(to_json(clifford_form_to_wood_form(form(inputs(o, 1, 1)[0]))));
  } else if (verb == "normform" || verb == "ideal") {
    const IdealLattice lat = form_to_ideal(form(inputs(o, 1, 1)[0]));
    if (verb == "ideal") {
      emit(to_json(lat));
    } else {
      emit({{"ideal", to_json(lat)},
            {"naive", to_json(naive_norm_form(lat))},
            {"universal", to_json(universal_norm_form(lat))}});
    }
  } else if (verb == "compose") {
    const auto in = inputs(o, 2, 2);
    const Form q1 = form(in[0]), q2 = form(in[1]);
    emit(to_json(reduced_if(o, o.dirichlet ? dirichlet_compose(q1, q2) : compose(q1, q2, twist_of(o)))));
  } else if (verb == "inverse") {
    emit(to_json(reduced_if(o, inverse_form(form(inputs(o, 1, 1)[0])))));
  } else if (verb == "identity") {
    const Json j = inputs(o, 1, 1)[0];
    const QuadraticAlgebra alg = j.contains("a") ? even_clifford(form(j)) : algebra_from_json(j, ring);
    emit(to_json(identity_form(alg)));
  } else if (verb == "classgroup" || verb == "picard") {
    const Int d = int_from_json(inputs(o, 1, 1)[0]);
    const ClassGroup g = class_group(d);
    const PicardCounts p = pic_counts(d);
    Json out = {{"h", g.forms.size()},
                {"invariant_factors", factors_json(g.invariant_factors)},
                {"oriented", p.oriented},
                {"unoriented", p.unoriented},
                {"forms", forms_json(g.forms)}};
    if (verb == "classgroup") out["table"] = g.table;
    if (verb == "picard") out["ideal_classes"] = {{"oriented", p.oriented_ideals}, {"unoriented", p.unoriented_ideals}};
    emit(out);
  } else if (verb == "quat") {
    const auto in = inputs(o, 2, 3);
    const Form q = form(in[0]);
    const QuaternionElem z = quaternion_from_json(in[1], q.ring());
    auto second = [&] {
      if (in.size() < 3) fail(1, "Usage", "--op " + o.op + " needs two elements");
      return quaternion_from_json(in[2], q.ring());
    };
    if (o.op == "mul") emit(to_json(quat_mul(q, z, second())));
    else if (o.op == "add") emit(to_json(quat_add(z, second())));
    else if (o.op == "conj") emit(to_json(quat_conj(q, z)));
    else if (o.op == "trace") emit(to_json(quat_trace(q, z)));
    else if (o.op == "norm") emit(to_json(quat_norm(q, z)));
    else fail(1, "Usage", "--op must be one of mul, add, conj, trace, norm");
  } else if (verb == "basechange") {
    if (o.to.empty()) fail(1, "Usage", "basechange needs --to mod:N or --to rat");
    const BaseChangeReport r = base_change_checks(form(inputs(o, 1, 1)[0]), Hom(ring, Ring::parse(o.to)));
    Json checks = Json::array();
    for (const BaseChangeCheck& c : r.checks) {
      checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    }
    emit({{"passed", r.passed()}, {"checks", checks}});
    return r.passed() ? 0 : 2;
  } else if (verb == "verify") {
    bool ok = true;
    for (const auto& res : acceptance::run(o.filter, std::cout)) ok = ok && res.passed;
    return ok ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary quadratic forms, Clifford invariants and composition"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--ring", o.ring, "Coefficient ring: int, mod:N or rat")->capture_default_str();

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"disc", "Paper and classical discriminants of a form"},
      {"clifford", "Even Clifford algebra and bimodule of a form"},
      {"pair2form", "Form of a traceable Clifford pair"},
      {"form2pair", "Clifford pair of a form"},
      {"traceable", "Whether a pair is traceable"},
      {"similar", "Decide similarity of two forms"},
      {"reduce", "Reduce a positive definite integral form"},
      {"dual", "Dual form on the dual module"},
      {"dualconic", "Dual conic, or its limit along a second form"},
      {"wood", "Wood form of a form"},
      {"normform", "Naive and universal norm forms of a form's ideal"},
      {"ideal", "Ideal lattice of a form"},
      {"compose", "Compose two primitive forms"},
      {"inverse", "Inverse class of a primitive form"},
      {"identity", "Norm form of an algebra (or of a form's even Clifford algebra)"},
      {"classgroup", "Reduced forms, Cayley table and invariant factors for D"},
      {"picard", "Oriented and unoriented class counts for D"},
      {"quat", "Arithmetic in the Clifford algebra of a form"},
      {"basechange", "Check functoriality along int -> mod:N or rat"},
      {"verify", "Run the acceptance suite"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (name != "verify") {
      // Scalar positionals: CLI11 would split a bracketed vector argument,
      // i.e. any JSON array.
      for (std::string& slot : o.slots) {
        sub->add_option("input" + std::to_string(&slot - o.slots.data() + 1), slot,
                        "JSON value, file, or - for stdin");
      }
    }
    if (name == "similar") sub->add_option("--bound", o.bound, "Search bound")->capture_default_str();
    if (name == "compose" || name == "inverse") {
      sub->add_flag("--proper-reduce", o.proper_reduce, "Emit the reduced representative");
    }
    if (name == "compose") {
      sub->add_option("--twist", o.twist, "oriented or sigma")->capture_default_str();
      sub->add_flag("--dirichlet", o.dirichlet, "Use the classical congruence method");
    }
    if (name == "dual") sub->add_flag("--trace", o.trace, "Emit the five-stage trace");
    if (name == "quat") sub->add_option("--op", o.op, "mul, add, conj, trace or norm")->capture_default_str();
    if (name == "basechange") sub->add_option("--to", o.to, "Target ring");
    if (name == "verify") sub->add_option("--filter", o.filter, "Comma separated criterion ids or names");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", "Usage"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }

  for (const std::string& s : o.slots) {
    if (!s.empty()) o.inputs.push_back(s);
  }
  try {
    return run_verb(app.get_subcommands().front()->get_name(), o);
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    const int code = e.kind() == ErrorKind::Parse ? 1 : 2;
    std::cerr << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << '\n';
    return code;
  } catch (const Json::exception& e) {
    std::cerr << Json{{"error", "Parse"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}
