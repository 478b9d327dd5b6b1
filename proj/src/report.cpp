#include "fuzzideal/report.hpp"

#include "fuzzideal/dsl.hpp"

namespace fuzzideal {

namespace {

Json values_json(std::span<const Value> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

}  // namespace

Json to_json(const Ring& ring, const Witness& w) {
  Json out;
  out["reason"] = w.reason;
  if (!w.elements.empty()) {
    out["elements"] = Json::array();
    for (const auto& x : w.elements) out["elements"].push_back(format_element(ring, x));
  }
  if (!w.values.empty()) out["values"] = values_json(w.values);
  if (!w.ideals.empty()) {
    out["ideals"] = Json::array();
    for (const auto& c : w.ideals) out["ideals"].push_back(format_ideal(ring, c));
  }
  if (!w.fuzzy.empty()) {
    out["fuzzy"] = Json::array();
    for (const auto& f : w.fuzzy) out["fuzzy"].push_back(format(f));
  }
  return out;
}

Json to_json(const FuzzyIdeal& p, const ClassificationReport& report) {
  const Ring& r = p.ring();
  Json out;
  out["ring"] = format(r.spec());
  out["fuzzy"] = format(p);
  out["commutative"] = report.commutative;
  out["notions"] = Json::object();
  out["witnesses"] = Json::object();
  for (const auto& [n, value] : report.notions) out["notions"][std::string(notion_name(n))] = value;
  for (const auto& [n, w] : report.witnesses) out["witnesses"][std::string(notion_name(n))] = to_json(r, w);
  out["unsupported"] = Json::array();
  for (Notion n : report.unsupported) {
    out["unsupported"].push_back(notion_name(n));
    out["witnesses"][std::string(notion_name(n))] = {{"reason", "unsupported on the integer backend"}};
  }
  return out;
}

Json to_json(const RadicalReport& report) {
  const Ring& r = report.input.ring();
  Json out;
  out["ring"] = format(r.spec());
  out["fuzzy"] = format(report.input);
  out["frad"] = format(report.radical);
  out["fixed_point"] = report.fixed_point;
  out["trace"] = Json::array();
  for (const auto& e : report.trace)
    out["trace"].push_back({{"element", format_element(r, e.element)}, {"levels", values_json(e.levels)}, {"sup", e.sup.str()}});
  out["witnesses"] = Json::array();
  for (const auto& w : report.witnesses) out["witnesses"].push_back(format(w));
  return out;
}

Json to_json(const Ring& ring, const DiagramReport& report) {
  Json out;
  out["ring"] = format(ring.spec());
  out["corpus_size"] = report.corpus_size;
  out["commutative"] = report.commutative;
  out["diagram"] = Json::array();
  for (const auto& e : report.edges) {
    Json entry = {{"edge", e.edge}, {"status", e.status}, {"asserted", e.asserted}, {"witness", nullptr}};
    if (e.corpus_index) entry["witness"] = {{"index", *e.corpus_index}, {"fuzzy", format(*e.example)}};
    out["diagram"].push_back(std::move(entry));
  }
  out["violations"] = Json::array();
  for (const auto* e : report.violations()) out["violations"].push_back(e->edge);
  return out;
}

Json to_json(const FuzzyIdeal& p, const CharprimeReport& report) {
  Json out;
  out["ring"] = format(p.ring().spec());
  out["fuzzy"] = format(p);
  out["prime_new"] = report.prime_new;
  out["prime_cuts"] = report.prime_cuts;
  out["prime_quotients"] = report.prime_quotients;
  out["ideal_test"] = report.ideal_test;
  out["d4"] = report.d4 ? Json(*report.d4) : Json(nullptr);
  out["agree"] = true;
  return out;
}

Json to_json(const FuzzyIdeal& i, const FradCheck& check) {
  Json out;
  out["ring"] = format(i.ring().spec());
  out["fuzzy"] = format(i);
  out["f1"] = format(check.f1);
  out["f2"] = format(check.f2);
  out["f3"] = format(check.f3);
  out["semiprimes"] = check.semiprimes;
  out["primes"] = check.primes;
  out["exclusion_witnesses"] = check.exclusion_witnesses;
  out["agree"] = true;
  return out;
}

Json to_json(const FuzzyIdeal& p, const InterCheck& check) {
  Json out;
  out["ring"] = format(p.ring().spec());
  out["fuzzy"] = format(p);
  out["primes"] = check.primes;
  out["families_checked"] = check.families_checked;
  out["equals_intersection"] = true;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fuzzideal
