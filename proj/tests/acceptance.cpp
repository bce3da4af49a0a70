// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "lgc/curation.hpp"
#include "lgc/expansion.hpp"
#include "lgc/lexicon_io.hpp"
#include "lgc/stats.hpp"
#include "oracle.hpp"
#include "synthetic.hpp"

using namespace lgc;
using Strings = std::vector<std::string>;

namespace {

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& a, const B& b, const std::string& what) {
    expect(a == b, what);
  }
  const Strings& failures() const { return failures_; }

 private:
  Strings failures_;
};

Strings sorted(Strings v) {
  std::sort(v.begin(), v.end());
  return v;
}

const LexEntry* find_id(const std::vector<LexEntry>& entries, const std::string& id) {
  for (const auto& e : entries) {
    if (e.entry_id == id) return &e;
  }
  return nullptr;
}

Strings pass_surfaces(ProvenanceKind kind, const std::string& parent) {
  const auto& c = corpus::load();
  return corpus::surfaces(expand_pass(kind, corpus::base_entry(parent), c.script, c.realizer));
}

bool has(const Strings& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

void worked_examples(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  using K = ProvenanceKind;
  c.equal(pass_surfaces(K::Deletion, "jusqu'à la fin des temps"), Strings{"jusqu'à la fin"}, "jusqu'à la fin");
  c.equal(pass_surfaces(K::Permutation, "dans un avenir proche"), Strings{"dans un proche avenir"},
          "dans un proche avenir");
  const auto brefs = pass_surfaces(K::Permutation, "dans les délais les plus brefs");
  c.equal(brefs, Strings{"dans les plus brefs délais"}, "dans les plus brefs délais");
  c.expect(!has(brefs, "dans les les plus brefs délais"), "agrammatical permutation generated");
  c.equal(pass_surfaces(K::Transformation, "pour le bénéfice"), Strings{"pour le bénéfice général", "pour son bénéfice"},
          "transformations of pour le bénéfice");
  const auto part = pass_surfaces(K::Intensification, "particulièrement");
  c.expect(has(part, "tout particulièrement") && has(part, "plus particulièrement"), "intensified particulièrement");
  c.expect(has(pass_surfaces(K::ParaphraseConstruction, "linguistiquement"), "linguistiquement parlant"),
           "linguistiquement parlant");
  const auto ling = pass_surfaces(K::ParaphraseDirect, "linguistiquement");
  for (const char* s : {"au niveau linguistique", "en linguistique", "du point de vue de la linguistique"}) {
    c.expect(has(ling, s), s);
  }
  c.expect(has(pass_surfaces(K::ParaphraseConstruction, "franchement"), "à franchement parler"),
           "à franchement parler");
  const auto sinc = pass_surfaces(K::ParaphraseConstruction, "sincèrement");
  for (const char* s : {"de façon sincère", "de manière sincère", "d'une façon sincère", "d'une manière sincère"}) {
    c.expect(has(sinc, s), s);
  }
  // the same forms must come out of the full pipeline
  const auto& corpus = corpus::load();
  const auto result = run_pipeline(corpus.base, corpus.script, corpus.realizer);
  Strings all;
  for (const auto& e : result.entries) all.push_back(e.surface.rendered);
  for (const char* s : {"jusqu'à la fin", "dans un proche avenir", "dans les plus brefs délais",
                        "pour le bénéfice général", "pour son bénéfice", "tout particulièrement",
                        "plus particulièrement", "linguistiquement parlant", "au niveau linguistique",
                        "en linguistique", "du point de vue de la linguistique", "à franchement parler",
                        "de façon sincère", "de manière sincère", "d'une façon sincère", "d'une manière sincère"}) {
    c.expect(has(all, s), std::string("pipeline lacks ") + s);
  }
  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
}

void curation_findings(Check& c) {
  const auto& corpus = corpus::load();
  const auto result = run_pipeline(corpus.base, corpus.script, corpus.realizer);
  auto issue = [&](const std::string& id, IssueKind kind) {
    return std::count_if(result.issues.begin(), result.issues.end(),
                         [&](const ValidationIssue& i) { return i.entry_id == id && i.kind == kind; });
  };
  const auto* tip = find_id(result.entries, "PCA#10#del#1");
  c.expect(tip && tip->surface.rendered == "pourboire", "pourboire variant missing");
  c.equal(issue("PCA#10#del#1", IssueKind::SingleTokenResidue), 1, "pourboire SingleTokenResidue");
  const auto* hour = find_id(result.entries, "PCA#11#del#1");
  c.expect(hour && hour->surface.rendered == "à cette heure-", "à cette heure- variant missing");
  c.equal(issue("PCA#11#del#1", IssueKind::AmalgamSuspect), 1, "à cette heure- AmalgamSuspect");

  auto record_for = [&](const std::string& key) -> const DuplicateRecord* {
    for (const auto& d : result.duplicates) {
      if (d.key == key) return &d;
    }
    return nullptr;
  };
  auto survivors_of = [&](const std::string& surface) {
    return std::count_if(result.entries.begin(), result.entries.end(),
                         [&](const LexEntry& e) { return e.surface.rendered == surface; });
  };
  const auto* recent = record_for("ces derniers temps");
  c.expect(recent && recent->kept == "PAC#1" && recent->removed == Strings{"PCA#9#perm#1"} &&
               recent->kind == IssueKind::CrossTableDuplicate,
           "ces derniers temps record");
  c.equal(survivors_of("ces derniers temps"), 1, "ces derniers temps survivors");
  const auto* state = record_for("en l'état actuel");
  c.expect(state && state->kept == "PCDN#1" && state->removed == Strings{"PCDC#2#del#1", "PCDC#3#del#1"},
           "en l'état actuel record");
  c.equal(survivors_of("en l'état actuel"), 1, "en l'état actuel survivors");
}

void oracle_equivalence(Check& c) {
  auto compare = [&](const std::vector<LgTable>& tables, const ExtractionScript& script, const Realizer& realizer,
                     const std::string& label) {
    Strings expected;
    std::vector<oracle::Output> outputs;
    std::vector<LexEntry> base;
    for (const auto& t : tables) {
      for (auto& o : oracle::expand(t, script)) outputs.push_back(std::move(o));
      for (auto& e : generate_base(t, script, realizer)) base.push_back(std::move(e));
    }
    for (const auto& o : outputs) expected.push_back(o.surface);
    const auto result = run_pipeline(base, script, realizer);
    Strings got;
    for (const auto& e : base) got.push_back(e.surface.rendered);
    for (const auto& r : result.records) got.push_back(r.new_entry.surface.rendered);
    c.equal(sorted(got), sorted(expected), label + ": surface multiset");
    c.equal(result.entries.size(), oracle::survivors(outputs), label + ": survivor count");
  };
  const auto& corpus = corpus::load();
  compare(corpus.tables, corpus.script, corpus.realizer, "fixtures");
  std::mt19937 rng(20111219);
  const auto syn = synthetic::corpus(rng, 100);
  compare(syn.tables, corpus::script_from(synthetic::kScript), Realizer(), "synthetic");
}

void stats_arithmetic(Check& c) {
  const std::vector<std::pair<std::string, std::size_t>> passes = {
      {"ParaphraseDirect", 2084}, {"ParaphraseConstruction", 7125}, {"Deletion", 1519},
      {"Permutation", 103},       {"Transformation", 288},          {"Intensification", 210}};
  const auto r = compute_stats(10487, passes, 0, 0);
  std::vector<std::int64_t> pct;
  for (const auto& p : r.per_pass) pct.push_back(p.percentage);
  c.equal(pct, std::vector<std::int64_t>{20, 68, 14, 1, 3, 2}, "per-pass percentages");
  const auto g = compute_stats(10487, {{"Paraphrases", 9208}, {"Other structures", 1910}, {"Intensifying", 210}}, 0, 0);
  c.equal(g.total_added(), std::size_t{11328}, "total added");
  c.equal(g.final_count, std::size_t{21815}, "final entries");
  c.equal(g.total_percentage(), std::int64_t{108}, "total percentage");
}

void invariants(Check& c) {
  const auto& corpus = corpus::load();
  const auto result = run_pipeline(corpus.base, corpus.script, corpus.realizer);

  std::vector<LexEntry> candidates = corpus.base;
  for (const auto& r : result.records) candidates.push_back(r.new_entry);
  const auto once = dedup(candidates);
  const auto twice = dedup(once.entries);
  c.expect(twice.entries == once.entries && twice.duplicates.empty(), "dedup idempotence");
  std::size_t removed = 0;
  for (const auto& d : once.duplicates) removed += d.removed.size();
  c.equal(once.entries.size() + removed, candidates.size(), "dedup count conservation");

  for (const auto& r : result.records) {
    const auto* parent = find_id(corpus.base, r.parent_id);
    if (!parent) {
      c.expect(false, "unknown parent " + r.parent_id);
      continue;
    }
    const auto& p = parent->surface.tokens;
    const auto& v = r.new_entry.surface.tokens;
    if (r.kind == ProvenanceKind::Deletion) {
      std::size_t j = 0;
      for (const auto& t : p) {
        if (j < v.size() && v[j] == t) ++j;
      }
      c.expect(j == v.size(), "deletion subsequence " + r.new_entry.entry_id);
    } else if (r.kind == ProvenanceKind::Permutation) {
      Strings expected = p;
      if (r.feature_id == "Prép Modif pré-adj Adj C") {
        for (const auto& comp : parent->components) {
          if (comp.slot == "Det" && !comp.text.empty()) {
            expected.erase(std::find(expected.begin(), expected.end(), comp.text));
          }
        }
      }
      c.equal(sorted(v), sorted(expected), "permutation multiset " + r.new_entry.entry_id);
    } else if (r.kind == ProvenanceKind::Intensification) {
      c.expect(v.size() > p.size() && Strings(v.end() - p.size(), v.end()) == p,
               "intensification prefix " + r.new_entry.entry_id);
    }
  }

  const Strings cells = {"<E>", "de", "le", "les", "à", "la", "une", "état", "heure", "l'", "heure-", "de les"};
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    Bindings b;
    for (const char* slot : {"A", "B", "C"}) b.bind_component(slot, CellValue::classify(cells[pick(rng)]));
    const auto s = corpus.realizer.realize("de @<ENT>A@ Ddef @<ENT>B@ @<ENT>C@ Poss2", b).rendered;
    const bool clean = s.find('@') == std::string::npos && s.find("<E>") == std::string::npos &&
                       s.find("  ") == std::string::npos && (s.empty() || (s.front() != ' ' && s.back() != ' '));
    if (!clean) {
      c.expect(false, "realize hygiene: '" + s + "'");
      break;
    }
  }

  LexiconDocument doc;
  doc.metadata.script_hash = corpus.script.hash;
  for (const auto& t : corpus.tables) doc.metadata.tables.push_back(t.table_id);
  doc.entries = result.entries;
  std::istringstream text(export_text(doc));
  c.expect(import_lexicon(text, LexiconFormat::Text) == doc, "text round trip");
  std::istringstream xml(export_xml(doc));
  c.expect(import_lexicon(xml, LexiconFormat::Xml) == doc, "XML round trip");

  const auto again = run_pipeline(corpus.base, corpus.script, corpus.realizer);
  PipelineConfig parallel;
  parallel.jobs = 8;
  const auto threaded = run_pipeline(corpus.base, corpus.script, corpus.realizer, parallel);
  auto bytes = [&](const PipelineResult& r) {
    auto d = doc;
    d.entries = r.entries;
    return export_text(d) + export_xml(d);
  };
  c.equal(bytes(again), bytes(result), "byte determinism across runs");
  c.equal(bytes(threaded), bytes(result), "byte determinism serial vs parallel");
}

void contraction_elision(Check& c) {
  const auto& rules = corpus::load().realizer.rules();
  auto full = [&](const Strings& t) { return render(elide(contract(t, rules), rules)); };
  c.equal(render(contract({"de", "les", "temps"}, rules)), std::string("des temps"), "des temps");
  c.equal(render(contract({"à", "le", "cas"}, rules)), std::string("au cas"), "au cas");
  c.equal(contract({"de", "le", "point"}, rules), Strings{"du", "point"}, "du");
  c.equal(contract({"à", "les", "délais"}, rules), Strings{"aux", "délais"}, "aux");
  c.equal(render(elide({"de", "une", "façon"}, rules)), std::string("d'une façon"), "d'une façon");
  c.equal(render(elide({"le", "état"}, rules)), std::string("l'état"), "l'état");

  // fixture token lists
  c.equal(full(corpus::base_entry("jusqu'à la fin des temps").surface.tokens), std::string("jusqu'à la fin des temps"),
          "PCDC tokens");
  c.equal(full(corpus::base_entry("en l'état actuel").surface.tokens), std::string("en l'état actuel"), "PCDN tokens");
  c.equal(full(corpus::base_entry("au cas où").surface.tokens), std::string("au cas où"), "PCA tokens");

  for (const auto& e : corpus::load().base) {
    const auto& t = e.surface.tokens;
    const auto ct = contract(t, rules);
    const auto el = elide(t, rules);
    c.expect(contract(ct, rules) == ct, "contract idempotence " + e.entry_id);
    c.expect(elide(el, rules) == el, "elide idempotence " + e.entry_id);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"worked example surfaces", worked_examples},
      {"curation findings", curation_findings},
      {"oracle equivalence", oracle_equivalence},
      {"stats arithmetic", stats_arithmetic},
      {"invariant suite", invariants},
      {"contraction and elision", contraction_elision},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.failures().empty();
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    for (const auto& f : check.failures()) std::cout << "\n    " << f;
    std::cout << "\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
