#include "lgc/expansion.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>

#include "lgc/error.hpp"
#include "lgc/text.hpp"

namespace lgc {

namespace {

std::size_t slot(ProvenanceKind kind) { return pass_rank(kind) - 1; }

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string_view long_name(ProvenanceKind kind) {
  switch (kind) {
    case ProvenanceKind::ParaphraseDirect: return "paraphrase-direct";
    case ProvenanceKind::ParaphraseConstruction: return "paraphrase-construction";
    case ProvenanceKind::Deletion: return "deletion";
    case ProvenanceKind::Permutation: return "permutation";
    case ProvenanceKind::Transformation: return "transformation";
    case ProvenanceKind::Intensification: return "intensification";
    case ProvenanceKind::Base: break;
  }
  return "";
}

LexEntry make_variant(const LexEntry& parent, ProvenanceKind kind, std::size_t ordinal, const ScriptRule& rule,
                      const std::string& flat, SurfaceForm surface) {
  LexEntry v = parent;
  const auto parsed = parse_entry_id(parent.entry_id);
  v.entry_id = entry_id(parent.table_id, parsed ? parsed->row : 0, pass_tag(kind), ordinal);
  v.surface = std::move(surface);
  v.lexical_info.paraphrases.clear();
  v.lexical_info.other_structures.clear();
  v.lexical_info.intensified.clear();
  v.merged.clear();
  v.constructions.ids.clear();
  if (kind == ProvenanceKind::ParaphraseConstruction) v.constructions.ids.push_back(rule.feature_id);
  v.constructions.internal_structures.resize(std::min<std::size_t>(1, v.constructions.internal_structures.size()));
  if (kind == ProvenanceKind::Deletion || kind == ProvenanceKind::Permutation ||
      kind == ProvenanceKind::Transformation) {
    v.constructions.internal_structures.push_back(rule.structure_label);
  }
  v.provenance = {kind, parent.entry_id, rule.feature_id, flat};
  return v;
}

}  // namespace

PassConfig PassConfig::all() {
  PassConfig c;
  c.on_.fill(true);
  return c;
}

PassConfig PassConfig::parse(std::string_view spec) {
  const auto trimmed = lower(std::string(text::trim(spec)));
  if (trimmed == "all") return all();
  PassConfig c;
  if (trimmed == "none" || trimmed.empty()) return c;
  for (const auto& raw : text::split(trimmed, ',')) {
    const auto name = std::string(text::trim(raw));
    bool found = false;
    for (auto kind : kPassOrder) {
      if (name == pass_tag(kind) || name == lower(std::string(to_string(kind))) || name == long_name(kind)) {
        c.enable(kind);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::ScriptSyntax, "unknown pass '" + name + "'", "--passes");
  }
  return c;
}

void PassConfig::enable(ProvenanceKind kind) {
  if (kind != ProvenanceKind::Base) on_[slot(kind)] = true;
}

bool PassConfig::enabled(ProvenanceKind kind) const { return kind != ProvenanceKind::Base && on_[slot(kind)]; }

std::vector<ProvenanceKind> PassConfig::passes() const {
  std::vector<ProvenanceKind> out;
  for (auto kind : kPassOrder) {
    if (enabled(kind)) out.push_back(kind);
  }
  return out;
}

ProvenanceKind pass_of(const ScriptRule& rule) noexcept {
  switch (rule.action) {
    case ActionKind::EmitParaphrase: return ProvenanceKind::ParaphraseDirect;
    case ActionKind::EmitConstruction:
      return rule.templates.empty() ? ProvenanceKind::Base : ProvenanceKind::ParaphraseConstruction;
    case ActionKind::EmitSubstructure:
      return rule.substructure == SubstructureKind::Deletion ? ProvenanceKind::Deletion
                                                             : ProvenanceKind::Permutation;
    case ActionKind::EmitTransformation: return ProvenanceKind::Transformation;
    case ActionKind::EmitIntensified: return ProvenanceKind::Intensification;
    case ActionKind::Note:
    case ActionKind::Binary: break;
  }
  return ProvenanceKind::Base;
}

std::vector<ExpansionRecord> expand_pass(ProvenanceKind kind, const LexEntry& entry,
                                         const ExtractionScript& script, const Realizer& realizer) {
  if (!entry.is_base()) {
    throw Error(ErrorCode::InvariantViolation, "entry " + entry.entry_id + " is not a base entry");
  }
  std::vector<ExpansionRecord> out;
  const auto bindings = bindings_of(entry);
  for (const auto& feature : entry.binary_features) {
    if (!feature.value) continue;
    const auto* rule = script.find(entry.table_id, feature.id);
    if (rule == nullptr || pass_of(*rule) != kind) continue;
    for (const auto& factorized : rule->templates) {
      for (const auto& flat : expand_alternation(factorized)) {
        SurfaceForm surface;
        try {
          surface = realizer.realize(flat, bindings);
        } catch (const Error& e) {
          throw Error(e.code(), std::string(e.what()) + " (entry " + entry.entry_id + ")", {}, rule->line);
        }
        auto variant = make_variant(entry, kind, out.size() + 1, *rule, flat, std::move(surface));
        out.push_back({std::move(variant), entry.entry_id, kind, rule->feature_id, flat});
      }
    }
  }
  return out;
}

std::vector<ExpansionRecord> expand_paraphrase_direct(const LexEntry& entry, const ExtractionScript& script,
                                                      const Realizer& realizer) {
  return expand_pass(ProvenanceKind::ParaphraseDirect, entry, script, realizer);
}

std::vector<ExpansionRecord> expand_paraphrase_construction(const LexEntry& entry, const ExtractionScript& script,
                                                            const Realizer& realizer) {
  return expand_pass(ProvenanceKind::ParaphraseConstruction, entry, script, realizer);
}

std::vector<ExpansionRecord> expand_deletion(const LexEntry& entry, const ExtractionScript& script,
                                             const Realizer& realizer) {
  return expand_pass(ProvenanceKind::Deletion, entry, script, realizer);
}

std::vector<ExpansionRecord> expand_permutation(const LexEntry& entry, const ExtractionScript& script,
                                                const Realizer& realizer) {
  return expand_pass(ProvenanceKind::Permutation, entry, script, realizer);
}

std::vector<ExpansionRecord> expand_transformation(const LexEntry& entry, const ExtractionScript& script,
                                                   const Realizer& realizer) {
  return expand_pass(ProvenanceKind::Transformation, entry, script, realizer);
}

std::vector<ExpansionRecord> expand_intensify(const LexEntry& entry, const ExtractionScript& script,
                                              const Realizer& realizer) {
  return expand_pass(ProvenanceKind::Intensification, entry, script, realizer);
}

void attach_back_references(LexEntry& parent, const std::vector<ExpansionRecord>& records) {
  auto& info = parent.lexical_info;
  auto& structures = parent.constructions.internal_structures;
  for (const auto& r : records) {
    if (r.parent_id != parent.entry_id) continue;
    switch (r.kind) {
      case ProvenanceKind::ParaphraseDirect:
      case ProvenanceKind::ParaphraseConstruction: info.paraphrases.push_back(r.new_entry.surface); break;
      case ProvenanceKind::Deletion:
      case ProvenanceKind::Permutation:
      case ProvenanceKind::Transformation: {
        const auto& label = r.new_entry.constructions.internal_structures.back();
        info.other_structures.push_back({label, r.new_entry.surface});
        if (std::find(structures.begin(), structures.end(), label) == structures.end()) structures.push_back(label);
        break;
      }
      case ProvenanceKind::Intensification: info.intensified.push_back(r.new_entry.surface); break;
      case ProvenanceKind::Base: break;
    }
  }
}

std::vector<std::pair<std::string, std::size_t>> pass_counts(const std::vector<ExpansionRecord>& records) {
  std::vector<std::pair<std::string, std::size_t>> rows;
  for (auto kind : kPassOrder) rows.emplace_back(std::string(to_string(kind)), 0);
  for (const auto& r : records) {
    if (r.kind != ProvenanceKind::Base) ++rows[slot(r.kind)].second;
  }
  return rows;
}

PipelineResult run_pipeline(const std::vector<LexEntry>& base, const ExtractionScript& script,
                            const Realizer& realizer, const PipelineConfig& config) {
  const auto passes = config.passes.passes();
  std::vector<std::vector<ExpansionRecord>> per_entry(base.size());
  std::vector<std::exception_ptr> failures(base.size());

  auto work = [&](std::size_t i) {
    try {
      for (auto kind : passes) {
        auto records = expand_pass(kind, base[i], script, realizer);
        for (auto& r : records) per_entry[i].push_back(std::move(r));
      }
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(config.jobs, base.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < base.size(); ++i) work(i);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t i = t; i < base.size(); i += jobs) work(i);
      });
    }
    for (auto& th : threads) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  PipelineResult result;
  std::vector<LexEntry> combined;
  for (std::size_t i = 0; i < base.size(); ++i) {
    LexEntry parent = base[i];
    attach_back_references(parent, per_entry[i]);
    combined.push_back(std::move(parent));
    for (const auto& r : per_entry[i]) {
      combined.push_back(r.new_entry);
      result.records.push_back(r);
    }
  }

  auto deduped = dedup(std::move(combined));
  result.duplicates = std::move(deduped.duplicates);
  std::size_t removed = 0;
  for (const auto& d : result.duplicates) removed += d.removed.size();

  for (auto& e : deduped.entries) {
    if (config.reject.count(e.entry_id)) {
      result.rejected.push_back(e.entry_id);
      continue;
    }
    result.entries.push_back(std::move(e));
  }
  for (const auto& e : result.entries) {
    for (auto& issue : flag_suspicious(e)) result.issues.push_back(std::move(issue));
  }

  result.stats = compute_stats(base.size(), pass_counts(result.records), removed, result.rejected.size());
  if (result.stats.final_count != result.entries.size()) {
    throw Error(ErrorCode::InvariantViolation, "stats identity violated: expected " +
                                                std::to_string(result.stats.final_count) + " entries, have " +
                                                std::to_string(result.entries.size()));
  }
  return result;
}

}  // namespace lgc
