#include "polyrank/certificate.hpp"

#include <sstream>

namespace polyrank {

namespace {

using nlohmann::json;

json polys_to_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const Polynomial& p : ps) a.push_back(p.str());
  return a;
}

std::vector<Polynomial> polys_from_json(const json& a) {
  std::vector<Polynomial> out;
  for (const auto& s : a) out.push_back(parse_polynomial(s.get<std::string>()));
  return out;
}

}  // namespace

json verdict_to_json(const Verdict& v) {
  json j;
  j["verdict"] = status_str(v.status);
  j["mode"] = v.mode;
  j["iterations"] = v.iterations;
  if (v.certificate.prf_set) {
    const AlgebraicPolyhedron& set = *v.certificate.prf_set;
    json prf;
    prf["witness"] = v.certificate.witness ? v.certificate.witness->str() : "";
    prf["zeros"] = polys_to_json(set.zeros.basis());
    prf["positives"] = polys_to_json(set.positives);
    prf["vertices"] = polys_to_json(set.vertices);
    j["prf"] = std::move(prf);
  }
  if (!v.certificate.iterations.empty()) {
    json iters = json::array();
    for (const IterationCone& c : v.certificate.iterations) {
      json it;
      it["zeros"] = polys_to_json(c.zeros);
      it["positives"] = polys_to_json(c.positives);
      iters.push_back(std::move(it));
    }
    j["lprf"] = std::move(iters);
  }
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  std::string s = j.at("verdict").get<std::string>();
  if (s == "RealTerminating")
    v.status = Status::RealTerminating;
  else if (s == "IntTerminating")
    v.status = Status::IntTerminating;
  else if (s == "Unknown")
    v.status = Status::Unknown;
  else
    throw std::runtime_error("unknown verdict: " + s);
  v.mode = j.at("mode").get<std::string>();
  v.iterations = j.at("iterations").get<int>();
  if (j.contains("prf")) {
    const json& prf = j.at("prf");
    AlgebraicPolyhedron set;
    std::vector<Polynomial> zeros = polys_from_json(prf.at("zeros"));
    for (const Polynomial& z : zeros)
      for (const std::string& x : z.support()) set.universe.insert(unprimed(x));
    set.zeros = Ideal(std::move(zeros));
    set.positives = polys_from_json(prf.at("positives"));
    set.vertices = polys_from_json(prf.at("vertices"));
    for (const auto* group : {&set.positives, &set.vertices})
      for (const Polynomial& p : *group)
        for (const std::string& x : p.support()) set.universe.insert(unprimed(x));
    std::string w = prf.at("witness").get<std::string>();
    if (!w.empty()) v.certificate.witness = parse_polynomial(w);
    v.certificate.prf_set = std::move(set);
  }
  if (j.contains("lprf")) {
    for (const auto& it : j.at("lprf")) {
      IterationCone c;
      c.zeros = polys_from_json(it.at("zeros"));
      c.positives = polys_from_json(it.at("positives"));
      v.certificate.iterations.push_back(std::move(c));
    }
  }
  return v;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  out << status_str(v.status) << " (mode " << v.mode;
  if (v.mode == "lprf") out << ", " << v.iterations << " iterations";
  out << ")\n";
  if (v.certificate.witness)
    out << "ranking function: " << v.certificate.witness->str() << "\n";
  if (v.certificate.prf_set) {
    const AlgebraicPolyhedron& set = *v.certificate.prf_set;
    out << "ranking set:\n";
    for (const Polynomial& z : set.zeros.basis())
      out << "  zero     " << z.str() << "\n";
    for (const Polynomial& p : set.positives) out << "  ray      " << p.str() << "\n";
    for (const Polynomial& p : set.vertices) out << "  vertex   " << p.str() << "\n";
  }
  for (size_t k = 0; k < v.certificate.iterations.size(); ++k) {
    const IterationCone& c = v.certificate.iterations[k];
    out << "iteration " << (k + 1) << ":\n";
    for (const Polynomial& z : c.zeros) out << "  zero     " << z.str() << "\n";
    for (const Polynomial& p : c.positives) out << "  quasi-rf " << p.str() << "\n";
  }
  return out.str();
}

}  // namespace polyrank
