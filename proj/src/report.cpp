#include "toricarc/report.hpp"

#include <sstream>

namespace toricarc {

namespace {

using nlohmann::json;

json int_json(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json index_sets_json(const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

json series_json(const Series& s) {
  json out = json::array();
  for (const auto& c : s.coefficients()) out.push_back(int_json(c));
  return out;
}

json header(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

template <typename T>
std::string join(const std::vector<T>& items, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) os << sep;
    os << items[i];
  }
  return os.str();
}

std::string sets_text(const std::vector<IndexSet>& sets) {
  std::vector<std::string> parts;
  for (const auto& s : sets) parts.push_back("{" + join(s, ",") + "}");
  return join(parts, " ");
}

std::string rationals_text(const std::vector<Rational>& v) {
  std::vector<std::string> parts;
  for (const auto& c : v) parts.push_back(to_string(c));
  return "(" + join(parts, ",") + ")";
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::vector<std::string> format_all(const std::vector<Poly>& polys, const VariableNames& names,
                                    const MonomialOrder& order) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(format_poly(p, names, order));
  return out;
}

json cox_json(const CoxData& cd) {
  json beta = json::array();
  for (std::size_t i = 0; i < cd.beta.codomain_rank(); ++i) beta.push_back(vector_json(cd.beta.matrix().row(i)));
  json hb = json::array();
  for (const auto& a : cd.semigroup.hilbert_basis()) hb.push_back(vector_json(a));
  return {{"a_rank", cd.a_rank},
          {"b_rank", cd.b_rank},
          {"beta", beta},
          {"hilbert_basis", hb},
          {"primitive_collections", index_sets_json(cd.primitive_collections.collections)}};
}

void cox_text(std::ostringstream& os, const CoxData& cd) {
  os << "fan: " << cd.fan.name << "\n";
  os << "rank of A: " << cd.a_rank << "\n";
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < cd.beta.codomain_rank(); ++i) rows.push_back(to_string(cd.beta.matrix().row(i)));
  os << "beta rows: " << join(rows, " ") << "\n";
  std::vector<std::string> hb;
  for (const auto& a : cd.semigroup.hilbert_basis()) hb.push_back(to_string(a));
  os << "Hilbert basis: " << join(hb, " ") << "\n";
  os << "primitive collections: " << sets_text(cd.primitive_collections.collections) << "\n";
}

}  // namespace

Report validation_report(const Fan& fan, const ValidationReport& v) {
  Report r;
  r.json = header("validate");
  r.json["fan"] = fan.name;
  r.json["dim"] = fan.dim;
  r.json["num_rays"] = fan.num_rays();
  r.json["simplicial"] = v.simplicial;
  r.json["smooth"] = v.smooth;
  r.json["facet_paired"] = v.facet_paired;
  r.json["rays_positively_span"] = v.rays_positively_span;
  r.json["pseudo_complete"] = v.pseudo_complete();
  r.json["fano"] = v.fano;
  r.json["details"] = v.details;
  r.json["f_vector"] = f_vector(fan);
  if (v.simplicial) {
    r.json["h_vector"] = h_vector(fan);
    r.json["primitive_collections"] = index_sets_json(primitive_collections(fan).collections);
  }

  std::ostringstream os;
  os << "fan: " << fan.name << " (dim " << fan.dim << ", " << fan.num_rays() << " rays, " << fan.max_cones.size()
     << " maximal cones)\n";
  os << "simplicial: " << flag(v.simplicial) << "\n";
  os << "smooth: " << flag(v.smooth) << "\n";
  os << "facet-paired: " << flag(v.facet_paired) << "\n";
  os << "rays positively span: " << flag(v.rays_positively_span) << "\n";
  os << "pseudo-complete: " << flag(v.pseudo_complete()) << "\n";
  os << "fano: " << flag(v.fano) << "\n";
  os << "f-vector: " << join(f_vector(fan), " ") << "\n";
  if (v.simplicial) {
    os << "h-vector: " << join(h_vector(fan), " ") << "\n";
    os << "primitive collections: " << sets_text(primitive_collections(fan).collections) << "\n";
  }
  if (!v.details.empty()) os << "details: " << v.details << "\n";
  r.text = os.str();
  return r;
}

Report cohomology_report(const CoxData& cd, const Presentation& p, const GroebnerBasis& gb,
                         const std::vector<std::size_t>& betti) {
  std::size_t total = 0;
  for (auto b : betti) total += b;
  Report r;
  r.json = header("cohomology");
  r.json["fan"] = cd.fan.name;
  r.json.update(cox_json(cd));
  r.json["presentation"] = {{"kind", to_string(p.kind)},
                            {"variables", p.names.names},
                            {"relations", format_all(p.relations, p.names, p.order)}};
  r.json["groebner_basis"] = format_all(gb.generators, p.names, p.order);
  r.json["betti_numbers"] = betti;
  r.json["betti_total"] = total;
  r.json["h_vector"] = cd.h_vector;

  std::ostringstream os;
  cox_text(os, cd);
  os << "relations:\n";
  for (const auto& s : format_all(p.relations, p.names, p.order)) os << "  " << s << "\n";
  os << "Groebner basis:\n";
  for (const auto& s : format_all(gb.generators, p.names, p.order)) os << "  " << s << "\n";
  os << "Betti numbers: " << join(betti, " ") << " (total " << total << ")\n";
  r.text = os.str();
  return r;
}

Report quantum_report(const CoxData& cd, const QuantumRing& ring, const RankReport& rank,
                      const std::vector<ProductEntry>& products) {
  const Presentation& p = ring.presentation();
  Report r;
  r.json = header("quantum");
  r.json["fan"] = cd.fan.name;
  r.json.update(cox_json(cd));
  r.json["presentation"] = {{"kind", to_string(p.kind)},
                            {"variables", p.names.names},
                            {"relations", format_all(p.relations, p.names, p.order)},
                            {"unit_relations", format_all(p.unit_relations, p.names, p.order)}};
  r.json["q_spec"] = p.q_spec ? rationals_json(*p.q_spec) : json(nullptr);
  r.json["groebner_basis"] = format_all(ring.basis().generators, p.names, p.order);
  r.json["warnings"] = p.warnings;
  json trials = json::array();
  for (const auto& t : rank.trials) trials.push_back({{"q_spec", rationals_json(t.q_spec)}, {"dimension", t.dimension}});
  r.json["rank_check"] = {{"expected", rank.expected}, {"all_match", rank.all_match}, {"trials", trials}};
  json prods = json::array();
  for (const auto& e : products) {
    std::vector<std::size_t> one_based;
    for (auto f : e.factors) one_based.push_back(f + 1);
    prods.push_back({{"factors", one_based}, {"product", ring.format(e.value)}});
  }
  r.json["products"] = prods;

  std::ostringstream os;
  cox_text(os, cd);
  for (const auto& w : p.warnings) os << "warning: " << w << "\n";
  os << "kind: " << to_string(p.kind);
  if (p.q_spec) os << " at q = " << rationals_text(*p.q_spec);
  os << "\nrelations:\n";
  for (const auto& s : format_all(p.relations, p.names, p.order)) os << "  " << s << "\n";
  os << "Groebner basis:\n";
  for (const auto& s : format_all(ring.basis().generators, p.names, p.order)) os << "  " << s << "\n";
  os << "rank check (expected " << rank.expected << "):\n";
  for (const auto& t : rank.trials) os << "  q = " << rationals_text(t.q_spec) << ": dimension " << t.dimension << "\n";
  os << "rank: " << rank.expected << (rank.all_match ? "" : " (MISMATCH)") << "\n";
  os << "products:\n";
  for (const auto& e : products) {
    std::vector<std::string> names;
    for (auto f : e.factors) names.push_back(p.names.names[f]);
    os << "  " << join(names, "*") << " = " << ring.format(e.value) << "\n";
  }
  r.text = os.str();
  return r;
}

Report series_report(const CoxData& cd, const CousinReport& c) {
  Report r;
  r.json = header("series");
  r.json["fan"] = cd.fan.name;
  r.json["cutoff"] = c.cutoff;
  r.json["holds"] = c.holds;
  r.json["lhs"] = series_json(c.lhs);
  r.json["semigroup_series"] = series_json(c.semigroup);
  r.json["h_vector"] = cd.h_vector;
  r.json["rhs"] = series_json(c.rhs);
  r.json["first_mismatch"] = c.holds ? json(nullptr) : json(c.first_mismatch);

  std::ostringstream os;
  os << "fan: " << cd.fan.name << "\n";
  os << "1/(1-s)^" << cd.b_rank << " = " << c.lhs.to_string() << "\n";
  os << "E(s) = " << c.semigroup.to_string() << "\n";
  os << "h(s) = " << join(cd.h_vector, " ") << "\n";
  os << "E(s)*h(s) = " << c.rhs.to_string() << "\n";
  os << "holds mod s^" << c.cutoff + 1 << ": " << flag(c.holds);
  if (!c.holds) os << " (first difference at s^" << c.first_mismatch << ")";
  os << "\n";
  r.text = os.str();
  return r;
}

Report theorem_report(const CoxData& cd, const TheoremReport& t) {
  Report r;
  r.json = header("verify-main");
  r.json["fan"] = cd.fan.name;
  r.json["well_defined"] = t.well_defined;
  r.json["surjective"] = t.surjective;
  r.json["rank_equal"] = t.rank_equal;
  r.json["verified"] = t.passed();
  r.json["betti_total"] = t.betti_total;
  r.json["cousin_series_holds"] = t.cousin_series_holds;
  json trials = json::array();
  for (const auto& tr : t.trials)
    trials.push_back({{"q_spec", rationals_json(tr.q_spec)},
                      {"quantum_dimension", tr.quantum_dimension},
                      {"arc_dimension", tr.arc_dimension},
                      {"presentations_agree", tr.presentations_agree}});
  r.json["trials"] = trials;
  r.json["details"] = t.details;

  std::ostringstream os;
  os << "fan: " << cd.fan.name << "\n";
  os << "well-defined: " << flag(t.well_defined) << "\n";
  os << "surjective: " << flag(t.surjective) << "\n";
  os << "rank equal: " << flag(t.rank_equal) << " (sum of Betti numbers " << t.betti_total << ")\n";
  for (const auto& tr : t.trials)
    os << "  q = " << rationals_text(tr.q_spec) << ": quantum " << tr.quantum_dimension << ", arc " << tr.arc_dimension
       << ", presentations agree " << flag(tr.presentations_agree) << "\n";
  os << "series identity: " << flag(t.cousin_series_holds) << "\n";
  for (const auto& d : t.details) os << "detail: " << d << "\n";
  os << (t.passed() ? "verified" : "NOT verified") << "\n";
  r.text = os.str();
  return r;
}

Report codim_report(const CoxData& cd, const CodimEntry& c, const std::vector<std::string>& warnings) {
  Report r;
  r.json = header("codim");
  r.json["fan"] = cd.fan.name;
  r.json["a"] = vector_json(c.a);
  r.json["b"] = vector_json(c.b);
  r.json["codim"] = int_json(c.codim);
  r.json["jet_order"] = c.order;
  r.json["image_codim"] = c.image_codim;
  r.json["agree"] = c.codim == Int(static_cast<unsigned long>(c.image_codim));
  r.json["warnings"] = warnings;

  std::ostringstream os;
  os << "fan: " << cd.fan.name << "\n";
  os << "codim of " << to_string(c.b) << " in " << to_string(c.a) << ": " << to_string(c.codim) << "\n";
  os << "image locus codim at jet order " << c.order << ": " << c.image_codim << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  r.text = os.str();
  return r;
}

Report jets_report(const JetPresentation& jp) {
  Report r;
  r.json = header("jets");
  r.json["base_vars"] = jp.base_vars.names;
  r.json["order"] = jp.order;
  r.json["jet_vars"] = jp.jet_vars.names;
  r.json["jet_degrees"] = jp.jet_degrees;
  MonomialOrder order(OrderKind::degrevlex, jp.jet_vars.size());
  json rels = json::array();
  std::ostringstream os;
  os << "base variables: " << join(jp.base_vars.names, " ") << "\n";
  os << "order: " << jp.order << "\n";
  os << "jet variables: " << join(jp.jet_vars.names, " ") << "\n";
  os << "relations:\n";
  std::size_t per = jp.order + 1;
  for (std::size_t idx = 0; idx < jp.relations.size(); ++idx) {
    std::string text = format_poly(jp.relations[idx], jp.jet_vars, order);
    rels.push_back({{"k", idx / per + 1}, {"n", idx % per}, {"relation", text}});
    os << "  [" << idx / per + 1 << "," << idx % per << "] " << text << "\n";
  }
  r.json["relations"] = rels;
  r.text = os.str();
  return r;
}

Report strata_report(const CoxData& cd, const StratumDescriptor& s) {
  Report r;
  r.json = header("strata");
  r.json["fan"] = cd.fan.name;
  r.json["a"] = vector_json(s.a);
  r.json["codim"] = int_json(s.codim);
  r.json["poincare"] = s.poincare;

  std::ostringstream os;
  os << "fan: " << cd.fan.name << "\n";
  os << "stratum " << to_string(s.a) << ": codim " << to_string(s.codim) << "\n";
  os << "Betti numbers: " << join(s.poincare, " ") << "\n";
  r.text = os.str();
  return r;
}

Report floer_report(const CoxData& cd, const FloerSeries& f) {
  Report r;
  r.json = header("floer");
  r.json["fan"] = cd.fan.name;
  r.json["rank"] = f.rank;
  json shifts = json::array();
  for (const auto& [a, s] : f.shifts) shifts.push_back({{"a", vector_json(a)}, {"shift", int_json(s)}});
  r.json["shifts"] = shifts;
  json terms = json::array();
  for (const auto& [a, s] : f.direct_system) terms.push_back({{"a", vector_json(a)}, {"shift", int_json(s)}});
  r.json["direct_system"] = terms;

  std::ostringstream os;
  os << "fan: " << cd.fan.name << "\n";
  os << "rank over the Laurent ring: " << f.rank << "\n";
  for (const auto& [a, s] : f.shifts) os << "shift for " << to_string(a) << ": " << to_string(s) << "\n";
  os << "direct system terms: " << f.direct_system.size() << "\n";
  r.text = os.str();
  return r;
}

}  // namespace toricarc
