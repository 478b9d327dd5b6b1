#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fuzzideal/corpus.hpp"
#include "fuzzideal/dsl.hpp"
#include "fuzzideal/ideals.hpp"
#include "fuzzideal/parallel.hpp"
#include "fuzzideal/report.hpp"

namespace fuzzideal::cli {

namespace {

struct Config {
  std::string command;
  std::string ring;
  std::optional<std::string> fuzzy;
  std::uint64_t bound = kDefaultIntegerBound;
  std::optional<std::string> palette;
  std::string corpus = "exhaustive";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
  std::optional<std::string> out;
  std::string format = "json";
  unsigned jobs = 0;
  bool experimental_ring_radical = false;
};

// Remembers the text being parsed so a ParseError can be shown in context.
struct ParseContext {
  std::string label;
  std::string text;
};

class Session {
 public:
  Session(Config config, std::ostream& err) : config_(std::move(config)), err_(err) {}

  int run(std::ostream& out);

 private:
  RingPtr ring();
  FuzzyIdeal fuzzy(const RingPtr& r);
  std::size_t cap() const;
  std::vector<FuzzyIdeal> corpus(const RingPtr& r);
  std::optional<ValueGrid> grid(const FuzzyIdeal& p);

  std::string ideals(const RingPtr& r, bool primes_only);
  std::string classify_cmd(const RingPtr& r);
  std::string radical_cmd(const RingPtr& r);
  std::string diagram_cmd(const RingPtr& r, int& status);
  std::string charprime_cmd(const RingPtr& r);
  std::string inter_cmd(const RingPtr& r);
  std::string frad_cmd(const RingPtr& r);

  Config config_;
  std::ostream& err_;

 public:
  std::optional<ParseContext> context;
};

RingPtr Session::ring() {
  context = ParseContext{"--ring", config_.ring};
  auto spec = parse_ring_spec(config_.ring);
  context.reset();
  return build_ring(spec);
}

FuzzyIdeal Session::fuzzy(const RingPtr& r) {
  if (!config_.fuzzy) throw DomainError(config_.command + " needs --fuzzy");
  context = ParseContext{"--fuzzy", *config_.fuzzy};
  auto f = parse_fuzzy_spec(r, *config_.fuzzy);
  context.reset();
  return f;
}

std::size_t Session::cap() const {
  if (config_.cap) return *config_.cap;
  if (const char* env = std::getenv("FUZZIDEAL_CAP")) {
    std::size_t pos = 0;
    std::string s(env);
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw DomainError("FUZZIDEAL_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultCorpusCap;
}

std::vector<FuzzyIdeal> Session::corpus(const RingPtr& r) {
  CorpusOptions options;
  options.bound = config_.bound;
  options.cap = cap();
  if (config_.palette) {
    context = ParseContext{"--palette", *config_.palette};
    options.palette = parse_value_list(*config_.palette);
    context.reset();
  }
  if (config_.corpus == "random") {
    if (!config_.seed) throw DomainError("--corpus random needs --seed");
    options.seed = config_.seed;
    return random_corpus(r, options);
  }
  return exhaustive_corpus(r, options);
}

// --palette refines the default grid of a single fuzzy ideal.
std::optional<ValueGrid> Session::grid(const FuzzyIdeal& p) {
  if (!config_.palette) return std::nullopt;
  context = ParseContext{"--palette", *config_.palette};
  auto seeds = parse_value_list(*config_.palette);
  context.reset();
  for (const auto& v : p.image()) seeds.push_back(v);
  return ValueGrid::refine(seeds);
}

std::string flag(bool b) { return b ? "true" : "false"; }

std::string Session::ideals(const RingPtr& r, bool primes_only) {
  const Ring& ring = *r;
  auto all = enumerate_ideals(ring, ring.is_table() ? std::nullopt : std::optional(config_.bound));
  struct Row {
    Ideal ideal;
    bool proper, prime = false, completely_prime = false, semiprime = false;
  };
  std::vector<Row> rows;
  for (auto& c : all) {
    Row row{c, !is_whole(ring, c)};
    if (row.proper) {
      row.prime = is_prime_ideal(ring, c);
      row.completely_prime = is_completely_prime_ideal(ring, c);
      row.semiprime = is_semiprime_ideal(ring, c);
    }
    if (!primes_only || row.prime) rows.push_back(std::move(row));
  }

  std::ostringstream os;
  if (config_.format == "dot") {
    os << "digraph ideals {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      os << "  n" << i << " [label=\"" << format_ideal(ring, rows[i].ideal) << "\""
         << (rows[i].prime ? ", shape=doublecircle" : "") << "];\n";
    // Covering relations of the containment order.
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const Ideal &a = rows[i].ideal, &b = rows[j].ideal;
        if (i == j || !is_subset(a, b)) continue;
        bool covered = true;
        for (std::size_t k = 0; k < rows.size() && covered; ++k)
          if (k != i && k != j && is_subset(a, rows[k].ideal) && is_subset(rows[k].ideal, b)) covered = false;
        if (covered) os << "  n" << i << " -> n" << j << ";\n";
      }
    os << "}\n";
    return os.str();
  }
  if (config_.format == "text") {
    for (const auto& row : rows) {
      os << format_ideal(ring, row.ideal);
      if (ring.is_table()) os << "  size=" << row.ideal.members().count();
      if (!row.proper) os << "  whole";
      if (row.prime) os << "  prime";
      if (row.completely_prime) os << "  completely-prime";
      if (row.semiprime) os << "  semiprime";
      os << "\n";
    }
    return os.str();
  }
  Json j;
  j["ring"] = format(ring.spec());
  j["ideals"] = Json::array();
  for (const auto& row : rows) {
    Json e = {{"ideal", format_ideal(ring, row.ideal)}, {"proper", row.proper}};
    if (ring.is_table()) e["size"] = row.ideal.members().count();
    if (row.proper) {
      e["prime"] = row.prime;
      e["completely_prime"] = row.completely_prime;
      e["semiprime"] = row.semiprime;
    }
    j["ideals"].push_back(std::move(e));
  }
  return dump(j);
}

std::string Session::classify_cmd(const RingPtr& r) {
  auto p = fuzzy(r);
  auto report = classify(p, grid(p));
  if (config_.format == "text") {
    std::ostringstream os;
    os << format(r->spec()) << "  " << format(p) << "\n";
    for (Notion n : kAllNotions) {
      os << notion_name(n) << ": ";
      if (auto it = report.notions.find(n); it != report.notions.end()) {
        os << flag(it->second);
        if (auto w = report.witnesses.find(n); w != report.witnesses.end()) os << "  " << to_json(*r, w->second).dump();
      } else {
        os << "unsupported";
      }
      os << "\n";
    }
    return os.str();
  }
  return dump(to_json(p, report));
}

std::string Session::radical_cmd(const RingPtr& r) {
  auto p = fuzzy(r);
  auto report = radical_report(p);
  Json j = to_json(report);
  if (config_.experimental_ring_radical) j["experimental_ring_radical"] = ring_radical_experimental(r);
  if (config_.format == "text") return format(report.radical) + (report.fixed_point ? "  fixed point\n" : "\n");
  return dump(j);
}

std::string Session::diagram_cmd(const RingPtr& r, int& status) {
  auto items = corpus(r);
  if (items.empty()) throw DomainError("the corpus is empty");
  auto report = diagram_check(items, config_.jobs);
  for (const auto* e : report.violations()) {
    err_ << "violated implication: " << e->edge << " at corpus item " << *e->corpus_index << " "
         << format(*e->example) << "\n";
    status = kCheckFailed;
  }
  if (config_.format == "text") {
    std::ostringstream os;
    for (const auto& e : report.edges) {
      os << e.edge << "  " << e.status << (e.asserted ? "  asserted" : "");
      if (e.example) os << "  " << format(*e.example);
      os << "\n";
    }
    return os.str();
  }
  return dump(to_json(*r, report));
}

std::string Session::charprime_cmd(const RingPtr& r) {
  if (config_.fuzzy) {
    auto p = fuzzy(r);
    return dump(to_json(p, charprime_equivalence_check(p, grid(p))));
  }
  auto items = corpus(r);
  std::vector<char> prime(items.size());
  parallel_for(items.size(), config_.jobs,
               [&](std::size_t i) { prime[i] = charprime_equivalence_check(items[i]).prime_new; });
  Json j = {{"ring", format(r->spec())},
            {"corpus_size", items.size()},
            {"prime", std::count(prime.begin(), prime.end(), 1)},
            {"agree", true}};
  return dump(j);
}

std::string Session::inter_cmd(const RingPtr& r) {
  if (config_.fuzzy) {
    auto p = fuzzy(r);
    return dump(to_json(p, semiprime_intersection_check(p, grid(p), config_.bound)));
  }
  auto items = corpus(r);
  std::vector<char> semiprime(items.size());
  parallel_for(items.size(), config_.jobs, [&](std::size_t i) {
    if (!is_semiprime_new(items[i])) return;
    semiprime_intersection_check(items[i], std::nullopt, config_.bound);
    semiprime[i] = 1;
  });
  Json j = {{"ring", format(r->spec())},
            {"corpus_size", items.size()},
            {"semiprime", std::count(semiprime.begin(), semiprime.end(), 1)},
            {"agree", true}};
  return dump(j);
}

std::string Session::frad_cmd(const RingPtr& r) {
  if (config_.fuzzy) {
    auto p = fuzzy(r);
    return dump(to_json(p, frad_intersection_check(p, grid(p), config_.bound)));
  }
  auto items = corpus(r);
  std::vector<std::size_t> witnesses(items.size());
  parallel_for(items.size(), config_.jobs, [&](std::size_t i) {
    witnesses[i] = frad_intersection_check(items[i], std::nullopt, config_.bound).exclusion_witnesses;
  });
  auto pairs = corpus_pairs(items.size(), kDefaultPairCap, config_.seed.value_or(1));
  parallel_for(pairs.size(), config_.jobs,
               [&](std::size_t k) { radical_properties_check(items[pairs[k].first], items[pairs[k].second]); });
  std::size_t total = 0;
  for (auto w : witnesses) total += w;
  Json j = {{"ring", format(r->spec())},
            {"corpus_size", items.size()},
            {"pairs_checked", pairs.size()},
            {"exclusion_witnesses", total},
            {"agree", true}};
  return dump(j);
}

int Session::run(std::ostream& out) {
  if (config_.format != "json" && config_.format != "text" && config_.format != "dot")
    throw DomainError("--format must be json, text or dot");
  if (config_.format == "dot" && config_.command != "ideals" && config_.command != "primes")
    throw DomainError("dot output is only available for ideals and primes");
  if (config_.corpus != "exhaustive" && config_.corpus != "random")
    throw DomainError("--corpus must be exhaustive or random");

  auto r = ring();
  int status = kOk;
  std::string text;
  const auto& c = config_.command;
  if (c == "ideals" || c == "primes") text = ideals(r, c == "primes");
  else if (c == "classify") text = classify_cmd(r);
  else if (c == "radical") text = radical_cmd(r);
  else if (c == "diagram") text = diagram_cmd(r, status);
  else if (c == "check-charprime") text = charprime_cmd(r);
  else if (c == "check-inter") text = inter_cmd(r);
  else if (c == "check-frad") text = frad_cmd(r);

  if (config_.out) {
    std::ofstream file(*config_.out, std::ios::binary);
    if (!file || !(file << text)) throw ResourceError("cannot write " + *config_.out);
  } else {
    out << text;
  }
  return status;
}

void show_parse_error(std::ostream& err, const ParseError& e, const std::optional<ParseContext>& context) {
  err << "error: " << e.message() << "\n";
  if (context) {
    err << "  " << context->label << " " << context->text << "\n";
    err << "  " << std::string(context->label.size() + 1 + e.span().start, ' ')
        << std::string(std::max<std::size_t>(1, e.span().end - e.span().start), '^') << "\n";
  }
  err << "  expected:";
  for (const auto& x : e.expected()) err << " " << x;
  err << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy ideal primeness and radicals over finite rings and Z", "fuzzideal"};
  app.require_subcommand(1);
  Config config;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"ideals", "List the ideals of a ring with primeness flags"},
      {"primes", "List the prime ideals of a ring"},
      {"classify", "Decide every primeness notion for a fuzzy ideal"},
      {"radical", "Compute the fuzzy prime radical"},
      {"diagram", "Check the implication diagrams over a corpus"},
      {"check-charprime", "Check the characterizations of prime fuzzy ideals"},
      {"check-inter", "Check semiprime = intersection of primes"},
      {"check-frad", "Check the three descriptions of the fuzzy radical"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--ring", config.ring, "Ring spec, e.g. \"Mat(2, Zn(2))\"")->required();
    sub->add_option("--fuzzy", config.fuzzy, "Fuzzy ideal, e.g. \"{1: <0>, 4/5: <2>, 3/5: <*>}\"");
    sub->add_option("--bound", config.bound, "Largest generator n of the ideals nZ searched over Z");
    sub->add_option("--palette", config.palette, "Comma separated corpus values (refines the grid for one ideal)");
    sub->add_option("--corpus", config.corpus, "exhaustive or random");
    sub->add_option("--seed", config.seed, "Seed for random corpora and pair sampling");
    sub->add_option("--cap", config.cap, "Largest corpus size (default 100000 or FUZZIDEAL_CAP)");
    sub->add_option("--out", config.out, "Write the report to a file");
    sub->add_option("--format", config.format, "json, text or dot");
    sub->add_option("--jobs", config.jobs, "Worker threads (0: all cores)");
    if (name == "radical")
      sub->add_flag("--experimental-ring-radical", config.experimental_ring_radical,
                    "Also check Rad(R / Rad(0)) = 0");
    sub->callback([&config, name = name] { config.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  Session session(config, err);
  try {
    return session.run(out);
  } catch (const ParseError& e) {
    show_parse_error(err, e, session.context);
    return kParse;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const AxiomViolation& e) {
    err << "error: " << e.what() << " (axiom " << e.axiom() << " at elements #" << e.x() << ", #" << e.y() << ")\n";
    return kInvalidFuzzy;
  } catch (const InvalidFuzzyIdeal& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidFuzzy;
  } catch (const ConstantIdealError& e) {
    err << "error: " << e.what() << "\n";
    return kConstant;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
}

}  // namespace fuzzideal::cli
