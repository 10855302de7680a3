#include "goedel/json_io.hpp"

#include <set>

#include "goedel/error.hpp"

namespace goedel {

using nlohmann::json;

json to_json(const Interpretation& i) {
  json out;
  out["domain"] = i.domain();
  json constants = json::object();
  for (const auto& [name, e] : i.constants()) constants[name] = i.domain()[e];
  out["constants"] = std::move(constants);
  json atoms = json::array();
  i.for_each_atom([&](const std::string& pred, std::span<const Element> args, const TruthValue& v) {
    json names = json::array();
    for (Element e : args) names.push_back(i.domain()[e]);
    atoms.push_back({{"pred", pred}, {"args", std::move(names)}, {"value", v.str()}});
  });
  out["atoms"] = std::move(atoms);
  return out;
}

Interpretation interpretation_from_json(const json& j) {
  try {
    std::vector<std::string> domain = j.at("domain").get<std::vector<std::string>>();
    if (domain.empty()) throw Error(Stage::Certificate, "certificate domain is empty");
    if (std::set<std::string>(domain.begin(), domain.end()).size() != domain.size())
      throw Error(Stage::Certificate, "certificate domain has duplicate elements");

    std::map<std::string, int> arities;
    for (const auto& atom : j.at("atoms")) {
      const auto pred = atom.at("pred").get<std::string>();
      const int arity = static_cast<int>(atom.at("args").size());
      auto [it, inserted] = arities.emplace(pred, arity);
      if (!inserted && it->second != arity)
        throw Error(Stage::Certificate, "predicate '" + pred + "' used with two arities");
    }

    Interpretation i(domain, arities);
    for (const auto& [name, element] : j.at("constants").items())
      i.set_constant(name, i.element(element.get<std::string>()));

    std::set<std::pair<std::string, std::vector<Element>>> seen;
    for (const auto& atom : j.at("atoms")) {
      const auto pred = atom.at("pred").get<std::string>();
      std::vector<Element> tuple;
      for (const auto& arg : atom.at("args")) tuple.push_back(i.element(arg.get<std::string>()));
      if (!seen.emplace(pred, tuple).second)
        throw Error(Stage::Certificate, "atom " + pred + " assigned twice");
      i.set_value(pred, tuple, TruthValue::parse(atom.at("value").get<std::string>()));
    }
    if (seen.size() != i.atom_count())
      throw Error(Stage::Certificate, "certificate atom valuation is not total over the domain");
    return i;
  } catch (const json::exception& e) {
    throw Error(Stage::Certificate, std::string("malformed certificate: ") + e.what());
  }
}

json to_json(const Assignment& a) {
  json out = json::array();
  for (const auto& [atom, value] : a)
    out.push_back({{"pred", atom.predicate}, {"args", atom.args}, {"value", value.str()}});
  return out;
}

json to_json(const Query& q, const Verdict& v, const JsonDumpOptions& dump) {
  json out;
  out["mode"] = std::string(mode_name(q.mode));
  out["logic"] = q.logic.str();
  out["formula"] = print(q.sentence);
  out["verdict"] = std::string(verdict_name(v.kind));
  out["certificate"] = v.certificate ? to_json(*v.certificate) : json(nullptr);
  if (v.provenance) {
    const Provenance& p = *v.provenance;
    out["shape"] = std::string(shape_name(p.shape));
    json ground;
    ground["universe"] = p.ground.universe;
    ground["combined"] = print(p.ground.combined);
    ground["instance_count"] = p.ground.instances.size();
    ground["grid_size"] = p.prop.grid_size;
    ground["outcome"] = std::string(outcome_name(p.prop.outcome));
    ground["witness"] = to_json(p.prop.witness);
    if (dump.ground_instances) {
      json table = json::array();
      for (const auto& inst : p.ground.instances)
        table.push_back({{"substitution", inst.substitution}, {"instance", print(inst.instance)}});
      ground["instances"] = std::move(table);
    }
    out["ground"] = std::move(ground);
    if (dump.skolem) {
      json sk;
      sk["formula"] = print(p.skolem.formula());
      json introduced = json::array();
      for (std::size_t k = 0; k < p.skolem.introduced.size(); ++k)
        introduced.push_back({{"name", p.skolem.introduced[k].name},
                              {"arity", p.skolem.introduced[k].arity},
                              {"prefix_index", p.skolem.mapping[k].first}});
      sk["introduced"] = std::move(introduced);
      out["skolem"] = std::move(sk);
    }
    out["notes"] = p.notes;
  }
  return out;
}

}  // namespace goedel
