#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "lgc/error.hpp"
#include "lgc/expansion.hpp"
#include "lgc/lexicon_io.hpp"

using namespace lgc;
using corpus::base_entry;
using corpus::surfaces;
using Strings = std::vector<std::string>;

namespace {

const Realizer& realizer() { return corpus::load().realizer; }
const ExtractionScript& script() { return corpus::load().script; }

bool contains(const Strings& haystack, const std::string& needle) {
  return std::find(haystack.begin(), haystack.end(), needle) != haystack.end();
}

bool is_subsequence(const Strings& small, const Strings& big) {
  std::size_t j = 0;
  for (const auto& t : big) {
    if (j < small.size() && small[j] == t) ++j;
  }
  return j == small.size();
}

Strings sorted(Strings v) {
  std::sort(v.begin(), v.end());
  return v;
}

const std::string& component(const LexEntry& e, const std::string& slot) {
  for (const auto& c : e.components) {
    if (c.slot == slot) return c.text;
  }
  throw std::runtime_error("no slot " + slot);
}

std::string document_bytes(const std::vector<LexEntry>& entries) {
  return export_text(LexiconDocument{{std::string(kToolVersion), {}, script().hash}, entries});
}

}  // namespace

TEST_CASE("direct paraphrases of linguistiquement") {
  const auto out = surfaces(expand_paraphrase_direct(base_entry("linguistiquement"), script(), realizer()));
  CHECK(contains(out, "au niveau linguistique"));
  CHECK(contains(out, "du point de vue de la linguistique"));
  CHECK(contains(out, "en linguistique"));
  CHECK(out == Strings{"d'un point de vue linguistique", "du point de vue linguistique",
                       "du point de vue de la linguistique", "au niveau linguistique", "au plan linguistique",
                       "sur le plan linguistique", "en linguistique"});
}

TEST_CASE("entry with every direct paraphrase Minus") {
  CHECK(expand_paraphrase_direct(base_entry("par exemple"), script(), realizer()).empty());
  CHECK(expand_paraphrase_direct(base_entry("franchement"), script(), realizer()).empty());
}

TEST_CASE("avec Adj-n paraphrase of sincèrement") {
  const auto& e = base_entry("sincèrement");
  const auto recs = expand_paraphrase_direct(e, script(), realizer());
  REQUIRE(!recs.empty());
  CHECK(recs[0].new_entry.surface.rendered == "avec " + std::string("sincérité"));
  CHECK(recs[0].feature_id == "Adj-ment = avec Adj-n");
  CHECK(recs[0].template_text == "avec @Adj-n@");
  CHECK(recs[0].new_entry.entry_id == "ADVMS#1#pd#1");
  CHECK(recs[0].parent_id == "ADVMS#1");
  CHECK(recs[0].kind == ProvenanceKind::ParaphraseDirect);
}

TEST_CASE("construction-embedded paraphrases") {
  const auto ling = expand_paraphrase_construction(base_entry("linguistiquement"), script(), realizer());
  REQUIRE(ling.size() == 1);
  CHECK(ling[0].new_entry.surface.rendered == "linguistiquement parlant");
  CHECK(ling[0].new_entry.constructions.ids == Strings{"Adv parlant, P"});

  const auto franc = surfaces(expand_paraphrase_construction(base_entry("franchement"), script(), realizer()));
  CHECK(contains(franc, "à franchement parler"));

  const auto sinc = expand_paraphrase_construction(base_entry("sincèrement"), script(), realizer());
  Strings facon;
  for (const auto& r : sinc) {
    if (r.feature_id == "N0 V W de (E+une) (façon + manière) Adj") facon.push_back(r.new_entry.surface.rendered);
  }
  CHECK(facon == Strings{"de façon sincère", "de manière sincère", "d'une façon sincère", "d'une manière sincère"});
}

TEST_CASE("deletions") {
  CHECK(surfaces(expand_deletion(base_entry("jusqu'à la fin des temps"), script(), realizer())) ==
        Strings{"jusqu'à la fin"});
  CHECK(surfaces(expand_deletion(base_entry("en l'état actuel des choses"), script(), realizer())) ==
        Strings{"en l'état actuel"});
  const auto tip = expand_deletion(base_entry("pourboire compris"), script(), realizer());
  REQUIRE(tip.size() == 1);
  CHECK(tip[0].new_entry.surface.rendered == "pourboire");
  CHECK(tip[0].new_entry.surface.tokens.size() == 1);
  CHECK(surfaces(expand_deletion(base_entry("dans la limite du possible"), script(), realizer())).empty());
  CHECK(surfaces(expand_deletion(base_entry("mais aussi et surtout"), script(), realizer())) ==
        Strings{"aussi et surtout"});
}

TEST_CASE("deletion variant carries the reduced structure") {
  const auto& parent = base_entry("jusqu'à la fin des temps");
  const auto recs = expand_deletion(parent, script(), realizer());
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].new_entry.constructions.internal_structures ==
        Strings{"Prép1 Det1 C1 Prép2 Det2 C2", "Prép1 Det1 C1"});
  CHECK(recs[0].new_entry.entry_id == "PCDC#1#del#1");

  auto with_refs = parent;
  attach_back_references(with_refs, recs);
  REQUIRE(with_refs.lexical_info.other_structures.size() == 1);
  CHECK(with_refs.lexical_info.other_structures[0].label == "Prép1 Det1 C1");
  CHECK(with_refs.lexical_info.other_structures[0].surface.rendered == "jusqu'à la fin");
  CHECK(with_refs.constructions.internal_structures ==
        Strings{"Prép1 Det1 C1 Prép2 Det2 C2", "Prép1 Det1 C1"});
}

TEST_CASE("permutations") {
  CHECK(surfaces(expand_permutation(base_entry("dans un avenir proche"), script(), realizer())) ==
        Strings{"dans un proche avenir"});
  const auto brefs = surfaces(expand_permutation(base_entry("dans les délais les plus brefs"), script(), realizer()));
  CHECK(brefs == Strings{"dans les plus brefs délais"});
  CHECK_FALSE(contains(brefs, "dans les les plus brefs délais"));
  CHECK(surfaces(expand_permutation(base_entry("ces temps derniers"), script(), realizer())) ==
        Strings{"ces derniers temps"});
}

TEST_CASE("transformations") {
  const auto recs = expand_transformation(base_entry("pour le bénéfice"), script(), realizer());
  CHECK(surfaces(recs) == Strings{"pour le bénéfice général", "pour son bénéfice"});
  CHECK(recs[0].new_entry.entry_id == "PCDN#2#tr#1");
  CHECK(recs[1].new_entry.entry_id == "PCDN#2#tr#2");
  CHECK(expand_transformation(base_entry("à l'insu"), script(), realizer()).empty());
}

TEST_CASE("intensifications") {
  const auto part = surfaces(expand_intensify(base_entry("particulièrement"), script(), realizer()));
  CHECK(part == Strings{"tout particulièrement", "plus particulièrement"});
  const auto spec = expand_intensify(base_entry("spécialement"), script(), realizer());
  CHECK(surfaces(spec) == Strings{"plus spécialement", "moins spécialement"});
  CHECK(spec[0].feature_id == spec[1].feature_id);
  CHECK(spec[1].new_entry.entry_id == "ADVF#2#int#2");

  auto parent = base_entry("spécialement");
  attach_back_references(parent, spec);
  REQUIRE(parent.lexical_info.intensified.size() == 2);
  CHECK(parent.lexical_info.intensified[1].rendered == "moins spécialement");
}

TEST_CASE("ordinals count per parent and pass") {
  const auto recs = expand_paraphrase_direct(base_entry("linguistiquement"), script(), realizer());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].new_entry.entry_id == entry_id("ADVMP", 1, "pd", i + 1));
  }
}

TEST_CASE("variants inherit arguments and binary features; provenance mirrors the record") {
  const auto& c = corpus::load();
  for (const auto& parent : c.base) {
    for (const auto kind : kPassOrder) {
      for (const auto& r : expand_pass(kind, parent, c.script, c.realizer)) {
        CAPTURE(r.new_entry.entry_id);
        CHECK(r.new_entry.arguments == parent.arguments);
        CHECK(r.new_entry.binary_features == parent.binary_features);
        CHECK(r.new_entry.provenance.kind == r.kind);
        CHECK(r.new_entry.provenance.parent == r.parent_id);
        CHECK(r.new_entry.provenance.feature_id == r.feature_id);
        CHECK(r.new_entry.provenance.template_text == r.template_text);
        CHECK(r.parent_id == parent.entry_id);
        CHECK(r.kind == kind);
        CHECK(!r.new_entry.surface.rendered.empty());
      }
    }
  }
}

TEST_CASE("structural properties of variants") {
  const auto& c = corpus::load();
  for (const auto& parent : c.base) {
    const auto& ptoks = parent.surface.tokens;
    for (const auto& r : expand_deletion(parent, c.script, c.realizer)) {
      CAPTURE(r.new_entry.entry_id);
      CHECK(is_subsequence(r.new_entry.surface.tokens, ptoks));
    }
    for (const auto& r : expand_permutation(parent, c.script, c.realizer)) {
      CAPTURE(r.new_entry.entry_id);
      Strings expected = ptoks;
      if (r.feature_id == "Prép Modif pré-adj Adj C") {
        const auto det = component(parent, "Det");
        const auto it = std::find(expected.begin(), expected.end(), det);
        REQUIRE(it != expected.end());
        expected.erase(it);
      }
      CHECK(sorted(r.new_entry.surface.tokens) == sorted(expected));
    }
    for (const auto& r : expand_intensify(parent, c.script, c.realizer)) {
      CAPTURE(r.new_entry.entry_id);
      const auto& v = r.new_entry.surface.tokens;
      REQUIRE(v.size() > ptoks.size());
      CHECK(Strings(v.end() - ptoks.size(), v.end()) == ptoks);
      CHECK(r.template_text.rfind(v.front(), 0) == 0);
    }
  }
}

TEST_CASE("no chaining: a variant is never a parent") {
  const auto recs = expand_deletion(base_entry("jusqu'à la fin des temps"), script(), realizer());
  REQUIRE(!recs.empty());
  const auto& variant = recs[0].new_entry;
  CHECK_THROWS_AS(expand_deletion(variant, script(), realizer()), Error);
  try {
    expand_pass(ProvenanceKind::Intensification, variant, script(), realizer());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantViolation);
  }
  std::vector<LexEntry> mixed = corpus::load().base;
  mixed.push_back(variant);
  try {
    run_pipeline(mixed, script(), realizer());
    FAIL("expected InvariantViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantViolation);
  }
}

TEST_CASE("pipeline on the fixture corpus") {
  const auto& c = corpus::load();
  const auto result = run_pipeline(c.base, c.script, c.realizer);
  for (const auto& r : result.records) {
    CHECK(r.new_entry.provenance.parent.has_value());
    const auto parent = std::find_if(c.base.begin(), c.base.end(),
                                     [&](const LexEntry& e) { return e.entry_id == r.parent_id; });
    REQUIRE(parent != c.base.end());
    CHECK(parent->is_base());
  }
  CHECK(result.entries.size() ==
        c.base.size() + result.records.size() - result.stats.duplicates_removed - result.stats.rejected);
  CHECK(result.stats.final_count == result.entries.size());

  // parent order, then pass order, then template order
  std::pair<std::size_t, std::size_t> last{0, 0};
  for (const auto& r : result.records) {
    const auto p = static_cast<std::size_t>(
        std::find_if(c.base.begin(), c.base.end(), [&](const LexEntry& e) { return e.entry_id == r.parent_id; }) -
        c.base.begin());
    const std::pair<std::size_t, std::size_t> here{p, pass_rank(r.kind)};
    CHECK(here >= last);
    last = here;
  }

  // parents carry back-references
  const auto fin = std::find_if(result.entries.begin(), result.entries.end(),
                                [](const LexEntry& e) { return e.entry_id == "PCDC#1"; });
  REQUIRE(fin != result.entries.end());
  CHECK(fin->lexical_info.other_structures.size() == 1);
  const auto ling = std::find_if(result.entries.begin(), result.entries.end(),
                                 [](const LexEntry& e) { return e.entry_id == "ADVMP#1"; });
  CHECK(ling->lexical_info.paraphrases.size() == 8);
}

TEST_CASE("all passes disabled gives back the base lexicon") {
  const auto& c = corpus::load();
  PipelineConfig config;
  config.passes = PassConfig::none();
  const auto result = run_pipeline(c.base, c.script, c.realizer, config);
  CHECK(result.records.empty());
  CHECK(result.entries == c.base);
  CHECK(document_bytes(result.entries) == document_bytes(c.base));
}

TEST_CASE("parallel expansion is deterministic") {
  const auto& c = corpus::load();
  const auto one = run_pipeline(c.base, c.script, c.realizer);
  for (unsigned jobs : {2u, 3u, 8u, 64u}) {
    PipelineConfig config;
    config.jobs = jobs;
    const auto many = run_pipeline(c.base, c.script, c.realizer, config);
    CHECK(many.records == one.records);
    CHECK(document_bytes(many.entries) == document_bytes(one.entries));
    CHECK(many.issues == one.issues);
  }
}

TEST_CASE("single pass selection") {
  const auto& c = corpus::load();
  PipelineConfig config;
  config.passes = PassConfig::parse("deletion");
  const auto result = run_pipeline(c.base, c.script, c.realizer, config);
  REQUIRE(!result.records.empty());
  for (const auto& r : result.records) CHECK(r.kind == ProvenanceKind::Deletion);
}

TEST_CASE("PassConfig parsing") {
  CHECK(PassConfig::parse("all").passes().size() == 6);
  CHECK(PassConfig::parse("none").passes().empty());
  CHECK(PassConfig::parse("int,pd").passes() ==
        std::vector<ProvenanceKind>{ProvenanceKind::ParaphraseDirect, ProvenanceKind::Intensification});
  CHECK(PassConfig::parse("deletion, permutation").passes() ==
        std::vector<ProvenanceKind>{ProvenanceKind::Deletion, ProvenanceKind::Permutation});
  CHECK(PassConfig::parse("paraphrase-construction").enabled(ProvenanceKind::ParaphraseConstruction));
  CHECK(PassConfig::parse("transformation").enabled(ProvenanceKind::Transformation));
  CHECK_THROWS_AS(PassConfig::parse("bogus"), Error);
}

TEST_CASE("rejection drops listed ids") {
  const auto& c = corpus::load();
  PipelineConfig config;
  config.reject = {"PCA#10#del#1", "PCA#11#del#1", "NOPE#1"};
  const auto result = run_pipeline(c.base, c.script, c.realizer, config);
  CHECK(result.rejected == Strings{"PCA#10#del#1", "PCA#11#del#1"});
  CHECK(result.stats.rejected == 2);
  for (const auto& e : result.entries) {
    CHECK(e.entry_id != "PCA#10#del#1");
    CHECK(e.entry_id != "PCA#11#del#1");
  }
}
