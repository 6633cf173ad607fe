#include "qfw/commands.hpp"

#include "qfw/anchors.hpp"
#include "qfw/verify.hpp"

namespace qfw {

namespace {

Input one_input(const std::vector<json>& inputs, const std::string& cmd) {
  if (inputs.size() != 1) throw Error(ErrorKind::Usage, cmd + " takes exactly one input file");
  return parse_input(inputs[0]);
}

Input expect(Input in, InputKind kind, const std::string& cmd) {
  if (in.kind != kind)
    throw Error(ErrorKind::Schema, "/: " + cmd + " expects a " + to_string(kind) + " document, got " + to_string(in.kind));
  return in;
}

// Two module-like inputs of the same kind as full representations.
struct Pair {
  Rep m_full, n_full;
};

Pair two_inputs(const std::vector<json>& inputs, const std::string& cmd) {
  if (inputs.size() != 2) throw Error(ErrorKind::Usage, cmd + " takes exactly two input files");
  Input a = parse_input(inputs[0]), b = parse_input(inputs[1]);
  if (a.kind != b.kind) throw Error(ErrorKind::Usage, cmd + ": inputs must both be modules or both be bimodules");
  Pair p;
  if (a.kind == InputKind::Module) {
    if (!(a.module->algebra() == b.module->algebra())) throw Error(ErrorKind::Usage, cmd + ": modules over different algebras");
    p.m_full = a.module->full_rep();
    p.n_full = b.module->full_rep();
  } else if (a.kind == InputKind::Bimodule) {
    if (!(a.bimodule->left_algebra() == b.bimodule->left_algebra()) ||
        !(a.bimodule->right_algebra() == b.bimodule->right_algebra()))
      throw Error(ErrorKind::Usage, cmd + ": bimodules over different algebras");
    p.m_full = a.bimodule->full_rep();
    p.n_full = b.bimodule->full_rep();
  } else {
    throw Error(ErrorKind::Usage, cmd + " expects module or bimodule documents");
  }
  return p;
}

json summand_table(const Decomposition& d) {
  json out = json::array();
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    const auto& s = d.summands[i];
    json j;
    j["class"] = i;
    j["dim"] = s.module.dim;
    j["multiplicity"] = s.multiplicity;
    j["actions"] = mats_to_json(s.module.ops);
    out.push_back(std::move(j));
  }
  return out;
}

CommandResult decompose_cmd(const std::vector<json>& inputs, Rng& rng) {
  Input in = one_input(inputs, "decompose");
  Decomposition d;
  if (in.kind == InputKind::Module) d = decompose(*in.module, rng);
  else if (in.kind == InputKind::Bimodule) d = decompose(*in.bimodule, rng);
  else throw Error(ErrorKind::Schema, "/: decompose expects a module or bimodule document");
  CommandResult r;
  bool ok = decomposition_is_valid(d);
  r.report.add({"injections and projections split the module", anchors::kDecompose, ok ? Verdict::Yes : Verdict::No,
                nullptr, ok ? "" : "decomposition maps do not recombine to the identity"});
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    const auto& s = d.summands[i];
    r.report.add({"class " + std::to_string(i) + ": dim " + std::to_string(s.module.dim) + " x " +
                      std::to_string(s.multiplicity),
                  anchors::kDecompose, Verdict::Yes, nullptr, ""});
  }
  r.report.verdict = ok ? Verdict::Yes : Verdict::Inconsistent;
  r.output = summand_table(d);
  return r;
}

CommandResult dual_sequence_cmd(const std::vector<json>& inputs, const CommandOptions& opt) {
  Input in = expect(one_input(inputs, "dual-sequence"), InputKind::Bimodule, "dual-sequence");
  CommandResult r;
  try {
    auto stages = dual_sequence(*in.bimodule, opt.depth);
    json out = json::array();
    for (auto& s : stages) {
      r.report.add({"stage " + std::to_string(s.index) + " (" + s.side + ")", anchors::kDualSequence, Verdict::Yes,
                    nullptr, ""});
      json j;
      j["index"] = s.index;
      j["side"] = s.side;
      j["bimodule"] = bimodule_to_json(s.module);
      out.push_back(std::move(j));
    }
    r.report.verdict = Verdict::Yes;
    r.output = std::move(out);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotProjectiveAtStage) throw;
    r.report.add({"dual sequence", anchors::kDualSequence, Verdict::No, nullptr,
                  std::string("not projective at ") + e.what()});
    r.report.verdict = Verdict::No;
  }
  return r;
}

CommandResult sweedler_cmd(const std::vector<json>& inputs) {
  Input in = expect(one_input(inputs, "sweedler"), InputKind::Hom, "sweedler");
  auto c = sweedler(make_extension(*in.hom));
  CommandResult r;
  r.report.add({"coassociativity and counit laws", anchors::kSweedler, Verdict::Yes, nullptr, ""});
  auto ld = left_dual_ring(c);
  auto rd = right_dual_ring(c);
  r.report.add({"*C passes algebra validation (dim " + std::to_string(ld.ring.dim()) + ")", anchors::kCoringAxioms,
                Verdict::Yes, nullptr, ""});
  r.report.add({"C* passes algebra validation (dim " + std::to_string(rd.ring.dim()) + ")", anchors::kCoringAxioms,
                Verdict::Yes, nullptr, ""});
  r.report.verdict = Verdict::Yes;
  r.output = input_document(c.base.p(), "coring", coring_to_json(c));
  return r;
}

CommandResult verify_cmd(const std::vector<json>& inputs) {
  if (inputs.size() != 1) throw Error(ErrorKind::Usage, "verify takes exactly one report file");
  auto v = verify::report(inputs[0]);
  CommandResult r;
  r.report.add({std::to_string(v.certificates) + " certificates re-checked", "", v.ok ? Verdict::Yes : Verdict::No,
                nullptr, ""});
  for (auto& f : v.failures) r.report.notes.push_back(f);
  r.report.verdict = v.ok ? Verdict::Yes : Verdict::No;
  return r;
}

CommandResult dispatch(const std::string& name, const std::vector<json>& inputs, const CommandOptions& opt, Rng& rng) {
  CommandResult r;
  if (name == "check-bimodule") {
    Input in = expect(one_input(inputs, name), InputKind::Bimodule, name);
    r.report = is_qf_bimodule(*in.bimodule, rng);
    if (r.report.verdict == Verdict::Yes) {
      Report f = is_frobenius_bimodule(*in.bimodule, rng);
      r.report.notes.push_back(std::string("Frobenius: ") + to_string(f.verdict));
    }
  } else if (name == "check-extension") {
    Input in = expect(one_input(inputs, name), InputKind::Hom, name);
    auto e = make_extension(*in.hom);
    r.report = is_qf_extension(e, rng);
    if (r.report.verdict == Verdict::Yes) {
      auto w = qf_pair_witness(e, regular_left(e.hom.target()), rng);
      r.report.add({"pair witness at the regular S-module", anchors::kPairWitness,
                    w.verified ? Verdict::Yes : Verdict::Inconsistent, witness_certificate(w, e.hom.target().p()),
                    ""});
      if (!w.verified) r.report.verdict = Verdict::Inconsistent;
      Report f = is_frobenius_extension(e, rng);
      r.report.notes.push_back(std::string("Frobenius: ") + to_string(f.verdict));
    }
  } else if (name == "check-coring") {
    Input in = expect(one_input(inputs, name), InputKind::Coring, name);
    r.report = is_qf_coring(*in.coring, rng);
  } else if (name == "check-graded") {
    Input in = expect(one_input(inputs, name), InputKind::Graded, name);
    r.report = is_qf_restriction(*in.graded, rng);
  } else if (name == "decompose") {
    r = decompose_cmd(inputs, rng);
  } else if (name == "similar" || name == "divides") {
    Pair p = two_inputs(inputs, name);
    if (name == "similar") {
      auto s = similar(p.m_full, p.n_full, rng);
      r.report.add({"M similar to N", anchors::kSimilar, s ? Verdict::Yes : Verdict::No,
                    s ? similarity_certificate(*s, p.m_full, p.n_full) : json(nullptr),
                    s ? "" : "indecomposable classes differ"});
    } else {
      auto d = divides(p.m_full, p.n_full, rng);
      r.report.add({"M divides N", anchors::kDivides, d ? Verdict::Yes : Verdict::No,
                    d ? divides_certificate(*d, p.m_full, p.n_full) : json(nullptr),
                    d ? "" : "some indecomposable class of M does not occur in N"});
    }
    r.report.verdict = r.report.checks[0].verdict;
    if (r.report.verdict == Verdict::Yes)
      r.report.notes.push_back("witness uses the least n with M a summand of N^n");
  } else if (name == "dual-sequence") {
    r = dual_sequence_cmd(inputs, opt);
  } else if (name == "sweedler") {
    r = sweedler_cmd(inputs);
  } else if (name == "verify") {
    r = verify_cmd(inputs);
  } else {
    throw Error(ErrorKind::Usage, "unknown command '" + name + "'");
  }
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check-bimodule", "check-extension", "check-coring", "check-graded",
                                                 "decompose",      "similar",         "divides",      "dual-sequence",
                                                 "sweedler",       "verify"};
  return names;
}

CommandResult run_command(const std::string& name, const std::vector<json>& inputs, const CommandOptions& opt) {
  Rng rng(opt.seed);
  CommandResult r = dispatch(name, inputs, opt, rng);
  if (name != "verify") {
    auto v = verify::report(r.report.to_json(opt.seed, kToolVersion));
    if (!v.ok) {
      std::string msg = "emitted certificate failed verification";
      for (auto& f : v.failures) msg += "; " + f;
      throw Error(ErrorKind::Internal, msg);
    }
  }
  return r;
}

json result_to_json(const CommandResult& r, std::uint64_t seed) {
  json j = r.report.to_json(seed, kToolVersion);
  if (!r.output.is_null()) j["output"] = r.output;
  return j;
}

}  // namespace qfw
