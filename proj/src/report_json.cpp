#include "nilrigid/report_json.hpp"

namespace nilrigid {

Json to_json(std::span<const GaussRat> v) {
  Json re = Json::array(), im = Json::array();
  for (const auto& c : v) {
    re.push_back(to_string(c.re));
    im.push_back(to_string(c.im));
  }
  return Json{{"re", re}, {"im", im}};
}

Json prolongation_to_json(const ProlongationResult& p) {
  return Json{{"level_dims", p.level_dims},
              {"terminated", p.terminated},
              {"budget_exhausted", p.budget_exhausted},
              {"total_dim", p.total_dim}};
}

namespace {

Json certificate_json(const RigidityVerdict& v) {
  Json c;
  c["kind"] = to_string(v.kind);
  switch (v.kind) {
    case CertificateKind::SmallCenter:
      c["m"] = v.m;
      break;
    case CertificateKind::RankOneWitness:
      c["x"] = to_json(std::span<const GaussRat>(v.rank_one->x));
      c["rank"] = v.rank_one->rank;
      break;
    case CertificateKind::ConditionC: {
      Json idx = Json::array();
      for (auto i : v.condition_c->indices) idx.push_back(i + 1);
      c["indices"] = idx;
      c["sigma"] = Json::array({v.condition_c->sigma[0], v.condition_c->sigma[1], v.condition_c->sigma[2]});
      break;
    }
    case CertificateKind::BurnsideFull:
      c["closure_dim"] = v.closure_dim;
      break;
    case CertificateKind::IdealOriginOnly:
    case CertificateKind::IdealPositiveDim: {
      const auto& s = *v.ideal;
      c["minors"] = s.minors;
      c["generators"] = s.generators;
      Json basis = Json::array();
      for (const auto& p : s.basis) basis.push_back(p.to_string());
      c["groebner_basis"] = basis;
      Json missing = Json::array();
      for (auto i : s.missing_pure_powers) missing.push_back(i + 1);
      c["missing_pure_powers"] = missing;
      c["reductions"] = s.stats.reductions;
      break;
    }
    case CertificateKind::ProlongationTerminated:
      c["level"] = v.prolongation->level_dims.size() - 1;
      c["level_dims"] = v.prolongation->level_dims;
      break;
  }
  return c;
}

Json witness_json(const J2Witness& w) {
  return Json{{"x", to_json(w.x)},
              {"z", to_json(w.z)},
              {"z_prime", to_json(w.z_prime)},
              {"norm", to_string(w.norm)},
              {"span_rank", w.span_rank},
              {"augmented_rank", w.augmented_rank}};
}

}  // namespace

Json verdict_to_json(const RigidityVerdict& v) {
  Json doc;
  doc["verdict"] = to_string(v.verdict);
  doc["certificate"] = certificate_json(v);
  if (v.prolongation) doc["prolongation"] = prolongation_to_json(*v.prolongation);
  if (!v.stages.empty()) {
    Json st = Json::array();
    for (const auto& s : v.stages) st.push_back(Json{{"stage", s.stage}, {"outcome", s.outcome}});
    doc["cross_check"] = st;
  }
  return doc;
}

Json j2_to_json(const J2Verdict& v) {
  Json doc;
  doc["j2"] = v.holds;
  doc["mode"] = v.mode == J2Mode::Standard ? "standard" : "general-probe";
  if (v.mode == J2Mode::GeneralProbe) doc["semi_decision"] = true;
  if (v.witness) doc["witness"] = witness_json(*v.witness);
  if (v.mode == J2Mode::Standard && v.basis.rows() > 0) {
    doc["orthonormal_basis"] = to_json(v.basis.transpose());
    Json pairs = Json::array();
    for (const auto& p : v.zero_residual_pairs) pairs.push_back(Json::array({p[0] + 1, p[1] + 1}));
    doc["zero_residual_pairs"] = pairs;
  }
  return doc;
}

Json forall_to_json(const ForallWitness& w) {
  return Json{{"x", to_json(w.x)}, {"z", to_json(w.z)}, {"z_prime", to_json(w.z_prime)}};
}

Json generators_to_json(const CliffordRep& rep) {
  Json doc;
  doc["r"] = rep.r;
  doc["s"] = rep.s;
  doc["dim"] = rep.dim;
  Json gens = Json::array();
  for (const auto& g : rep.gens) gens.push_back(to_json(g));
  doc["generators"] = gens;
  doc["G"] = rep.G ? to_json(*rep.G) : Json();
  doc["composition"] = rep.composition;
  doc["twin"] = rep.twin_flag;
  doc["mixed"] = rep.mixed_flag;
  return doc;
}

Json htype_generators_to_json(std::size_t r, std::size_t s, const HTypeAlgebra& h) {
  Json doc;
  doc["r"] = r;
  doc["s"] = s;
  doc["dim"] = h.algebra.algebra().n();
  Json gens = Json::array();
  for (const auto& g : h.gens) gens.push_back(to_json(g));
  doc["generators"] = gens;
  doc["G"] = to_json(h.algebra.metric().V);
  doc["composition"] = h.composition;
  return doc;
}

Json table1_to_json(const std::vector<Table1Entry>& entries, std::size_t max_dim) {
  Json list = Json::array();
  for (const auto& e : entries) {
    Json j{{"r", e.r}, {"s", e.s}, {"computed", e.computed}};
    if (e.computed) {
      j["dim"] = e.dim;
      j["twin"] = e.twin;
      j["mixed"] = e.mixed;
      j["composition"] = e.composition;
    }
    list.push_back(std::move(j));
  }
  return Json{{"max_dim", max_dim}, {"entries", list}};
}

Json involutions_to_json(std::size_t r, std::size_t s, const InvolutionSet& inv) {
  Json doc;
  doc["case"] = std::to_string(r) + "," + std::to_string(s);
  Json ps = Json::array();
  for (const auto& p : inv.P) ps.push_back(to_json(p));
  doc["P"] = ps;
  doc["sign_table"] = inv.sign_table;
  Json spaces = Json::array();
  for (std::size_t t = 0; t < inv.patterns.size(); ++t) {
    Json basis = Json::array();
    for (const auto& v : inv.eigenbasis[t]) basis.push_back(to_json(v));
    spaces.push_back(Json{{"pattern", inv.patterns[t]}, {"dim", inv.eigenbasis[t].size()}, {"basis", basis}});
  }
  doc["eigenspaces"] = spaces;
  return doc;
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json doc;
  doc["name"] = e.name;
  doc["n"] = e.algebra.n();
  doc["m"] = e.algebra.m();
  doc["expected_rigid"] = e.expected_rigid ? Json(*e.expected_rigid) : Json();
  doc["expected_j2"] = e.expected_j2 ? Json(*e.expected_j2) : Json();
  doc["htype_metric"] = e.htype_metric.has_value();
  doc["source"] = e.source;
  return doc;
}

Json sample_to_json(std::size_t m, std::size_t n, std::uint64_t seed, const SampleReport& rep) {
  Json list = Json::array();
  for (std::size_t t = 0; t < rep.verdicts.size(); ++t)
    list.push_back(Json{{"trial", t},
                        {"seed", seed + t},
                        {"verdict", to_string(rep.verdicts[t].verdict)},
                        {"kind", to_string(rep.verdicts[t].kind)}});
  return Json{{"m", m},
              {"n", n},
              {"seed", seed},
              {"trials", rep.verdicts.size()},
              {"rigid_count", rep.rigid_count},
              {"infinite_count", rep.infinite_count},
              {"verdicts", list}};
}

}  // namespace nilrigid
