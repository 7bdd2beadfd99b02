#include "ordtri/report.hpp"

namespace ordtri {

namespace {

Json index_list(const std::vector<Index>& v) {
  Json out = Json::array();
  for (Index i : v) out.push_back(i);
  return out;
}

}  // namespace

Json to_json(const CanonicalLine& line) { return Json::array({line.a().get_str(), line.b().get_str(), line.c().get_str()}); }

Json to_json(const DegeneracyClass& d) {
  Json witnesses = Json::array();
  for (const auto& w : d.witnesses) witnesses.push_back(to_json(w));
  return Json{{"tag", to_string(d.tag)}, {"witnesses", std::move(witnesses)}};
}

Json to_json(const BoundReport& r) {
  Json j{{"name", r.name},
         {"instance", r.instance},
         {"checked", r.checked.to_string()},
         {"threshold", r.threshold.to_string()},
         {"satisfied", r.satisfied},
         {"vacuous", r.vacuous},
         {"ratio", r.ratio}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const RichCaseWitness& w) {
  return Json{{"rich_line", to_json(w.rich_line)},
              {"multiplicity", w.multiplicity},
              {"q", w.q},
              {"r", w.r},
              {"qr_multiplicity", w.qr_multiplicity},
              {"p_q", index_list(w.p_q)},
              {"p_r", index_list(w.p_r)},
              {"collinear_with_qr", index_list(w.collinear_with_qr)},
              {"survivors", w.survivors.size()}};
}

Json spectrum_json(const IncidenceProfile& profile) {
  Json out = Json::array();
  for (std::size_t k = 2; k <= profile.max_multiplicity(); ++k) out.push_back(Json::array({k, spectrum_f(profile, k)}));
  return out;
}

Json to_json(const TriangleReport& r) {
  Json list = Json::array();
  for (const auto& t : r.triangles) list.push_back(Json::array({t[0], t[1], t[2]}));
  Json j{{"case_taken", to_string(r.case_taken)},
         {"count", r.count},
         {"count_kind", r.count_exact ? "exact" : "lower_bound"},
         {"truncated", r.truncated},
         {"triangles", std::move(list)}};
  if (r.rich) j["rich_case"] = to_json(*r.rich);
  if (r.poor_edge_count) j["poor_graph_edges"] = *r.poor_edge_count;
  if (r.collinear_filtered) j["collinear_filtered"] = *r.collinear_filtered;
  return j;
}

}  // namespace ordtri
