#include "parkmat/json_io.hpp"

#include <sstream>

namespace parkmat {

using nlohmann::json;

json set_system_json(const SetSystem& sys) {
  json j;
  j["ground"] = sys.ground.labels;
  json blocks = json::array();
  for (Mask b : sys.blocks) {
    json blk = json::array();
    for (int s = 0; s < sys.n(); ++s)
      if (has_bit(b, s)) blk.push_back(sys.ground.labels[s]);
    blocks.push_back(std::move(blk));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

json tutte_json(const TuttePoly& t) {
  json terms = json::array();
  for (const auto& [e, c] : t.terms)
    terms.push_back(json{{"x", e.first}, {"y", e.second}, {"c", c}});
  return json{{"terms", std::move(terms)}};
}

json hvector_json(const HVector& h) { return json(h); }

json polytope_json(const Polymatroid& p) {
  json j;
  json f = json::object();
  for (Mask sel = 1; sel < (Mask{1} << p.d()); ++sel)
    f[std::to_string(sel)] = p.table()(sel);
  j["f"] = std::move(f);
  json graded = json::array();
  for (const auto& pts : p.lattice_points()) {
    json layer = json::array();
    for (const auto& q : pts) layer.push_back(q);
    graded.push_back(std::move(layer));
  }
  j["points_by_degree"] = std::move(graded);
  json gens = json::array();
  for (const auto& q : p.minimal_nonmembers()) gens.push_back(q);
  j["generators"] = std::move(gens);
  return j;
}

json mvpoly_json(const MVPoly& p) {
  json terms = json::array();
  for (const auto& [q, c] : p.terms) terms.push_back(json{{"q", q}, {"c", rat_str(c)}});
  return json{{"terms", std::move(terms)}};
}

json hyperplanes_json(const Representation& v, const std::vector<Hyperplane>& hs) {
  json arr = json::array();
  for (const auto& h : hs) {
    json one;
    json flat = json::array();
    for (int s = 0; s < v.n(); ++s)
      if (has_bit(h.flat, s)) flat.push_back(v.sys.ground.labels[s]);
    one["H"] = std::move(flat);
    one["rho"] = h.rho;
    json form = json::array();
    for (const auto& c : h.form) form.push_back(rat_str(c));
    one["form"] = std::move(form);
    arr.push_back(std::move(one));
  }
  return json{{"mode", mode_name(v.mode)}, {"seed", v.seed}, {"hyperplanes", std::move(arr)}};
}

json verification_json(const VerificationReport& rep) {
  json j;
  j["n"] = rep.n;
  j["input_d"] = rep.input_d;
  j["d"] = rep.d;
  j["renormalized"] = rep.renormalized;
  j["mode"] = rep.mode;
  j["seed"] = rep.seed;
  j["h_vector"] = rep.h_from_tutte;
  j["graded_counts"] = rep.counts;
  j["lambda_dims"] = rep.lambda_dims;
  j["points_total"] = rep.points_total;
  j["hyperplanes"] = rep.n_hyperplanes;
  j["cocircuits"] = rep.n_cocircuits;
  j["generators"] = rep.n_generators;
  json stages = json::array();
  for (const auto& s : rep.stages)
    stages.push_back(json{{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}, {"ms", s.ms}});
  j["stages"] = std::move(stages);
  j["pass"] = rep.pass;
  return j;
}

std::vector<std::string> facet_lines(const SubmodularTable& t) {
  std::vector<std::string> lines;
  for (Mask sel = 1; sel < (Mask{1} << t.d); ++sel) {
    std::ostringstream out;
    bool first = true;
    for (int j = 0; j < t.d; ++j) {
      if (!has_bit(sel, j)) continue;
      if (!first) out << "+";
      out << "q_" << j + 1;
      first = false;
    }
    out << " <= " << t.f[sel];
    lines.push_back(out.str());
  }
  return lines;
}

std::string form_text(const std::vector<Rat>& form) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < form.size(); ++j) {
    if (form[j] == 0) continue;
    Rat c = form[j];
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) out << rat_str(c) << " ";
    out << "x_" << j + 1;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace parkmat
