#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "lgc/base_generator.hpp"
#include "lgc/curation.hpp"
#include "lgc/error.hpp"
#include "lgc/expansion.hpp"
#include "lgc/lexicon_io.hpp"
#include "lgc/lg_table.hpp"
#include "lgc/records.hpp"
#include "lgc/text.hpp"

namespace lgc::cli {

namespace {

namespace fs = std::filesystem;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()))) {
    throw InputError("cannot write '" + path + "'");
  }
}

LexiconFormat format_for(const std::string& path, const std::string& requested) {
  if (!requested.empty()) {
    const auto f = lexicon_format_from(requested);
    if (!f) throw InputError("unknown format '" + requested + "' (text or xml)");
    return *f;
  }
  const auto ext = fs::path(path).extension().string();
  return ext == ".xml" ? LexiconFormat::Xml : LexiconFormat::Text;
}

std::string serialize(const LexiconDocument& doc, LexiconFormat format) {
  return format == LexiconFormat::Xml ? export_xml(doc) : export_text(doc);
}

LexiconDocument load_lexicon(const std::string& path) {
  auto in = open_in(path);
  return import_lexicon(in, path);
}

ExtractionScript load_script(const std::string& path) {
  auto in = open_in(path);
  return parse_script(in, path);
}

Realizer make_realizer(const ExtractionScript& script, const std::string& morpho_path,
                       const std::string& symbols) {
  MorphoRules rules = MorphoRules::french();
  if (!morpho_path.empty()) {
    auto in = open_in(morpho_path);
    rules = parse_morpho(in, morpho_path);
  }
  return Realizer(std::move(rules), SymbolPolicy::parse(symbols), script.symbols);
}

std::vector<DuplicateRecord> duplicates_from_records(const RecordsFile& records, const LexiconDocument& doc) {
  std::map<std::string, const LexEntry*, std::less<>> by_id;
  for (const auto& e : doc.entries) by_id[e.entry_id] = &e;

  std::vector<DuplicateRecord> out;
  std::map<std::string, std::size_t, std::less<>> index;
  std::map<std::string, std::vector<std::string>, std::less<>> tables;
  for (const auto& r : records.rows) {
    if (r.status != RecordStatus::Duplicate) continue;
    auto [it, inserted] = index.try_emplace(r.survivor, out.size());
    if (inserted) out.push_back({r.survivor, {}, canonical_key(r.surface), IssueKind::DuplicateVariant});
    out[it->second].removed.push_back(r.entry_id);
    const auto parsed = parse_entry_id(r.entry_id);
    tables[r.survivor].push_back(parsed ? parsed->table_id : std::string());
  }
  for (auto& d : out) {
    const auto parsed = parse_entry_id(d.kept);
    const bool base = parsed && parsed->tag.empty();
    d.kind = classify_duplicate(d.kept, base, tables[d.kept], parsed ? parsed->table_id : std::string());
  }
  std::stable_sort(out.begin(), out.end(), [&](const DuplicateRecord& a, const DuplicateRecord& b) {
    const auto ia = by_id.find(a.kept);
    const auto ib = by_id.find(b.kept);
    if (ia == by_id.end() || ib == by_id.end()) return false;
    return rank_less(*ia->second, *ib->second);
  });
  return out;
}

int cmd_compile(const std::vector<std::string>& table_paths, const std::string& classes_path,
                const std::string& script_path, const std::string& morpho_path, const std::string& symbols,
                const std::string& output, const std::string& format, std::ostream& err) {
  const auto script = load_script(script_path);
  ClassMatrix classes;
  {
    auto in = open_in(classes_path);
    classes = parse_class_matrix(in, classes_path);
  }
  const auto realizer = make_realizer(script, morpho_path, symbols);

  std::vector<LgTable> tables;
  for (const auto& path : table_paths) {
    auto in = open_in(path);
    auto table = parse_table(in, fs::path(path).stem().string(), path);
    for (const auto& issue : validate_table(table)) {
      err << path << ": " << to_string(issue.kind) << " " << issue.entry_id << ": " << issue.detail << "\n";
    }
    tables.push_back(resolve_features(table, classes));
  }
  std::sort(tables.begin(), tables.end(),
            [](const LgTable& a, const LgTable& b) { return a.table_id < b.table_id; });
  for (std::size_t i = 1; i < tables.size(); ++i) {
    if (tables[i].table_id == tables[i - 1].table_id) {
      throw InputError("table id '" + tables[i].table_id + "' given twice");
    }
  }

  LexiconDocument doc;
  doc.metadata.script_hash = script.hash;
  for (const auto& table : tables) {
    doc.metadata.tables.push_back(table.table_id);
    for (auto& e : generate_base(table, script, realizer)) doc.entries.push_back(std::move(e));
  }
  write_file(output, serialize(doc, format_for(output, format)));
  return kOk;
}

int cmd_extend(const std::string& lex_path, const std::string& script_path, const std::string& passes,
               const std::string& symbols, const std::string& morpho_path, const std::string& reject_path,
               unsigned jobs, const std::string& output, const std::string& records_path, const std::string& format) {
  auto doc = load_lexicon(lex_path);
  const auto script = load_script(script_path);
  if (script.hash != doc.metadata.script_hash) {
    throw InputError("script " + script_path + " (hash " + script.hash + ") is not the one " + lex_path +
                     " was compiled with (hash " + doc.metadata.script_hash + ")");
  }
  for (const auto& e : doc.entries) {
    if (!e.is_base()) throw InputError(lex_path + ": entry " + e.entry_id + " is not a base entry");
  }

  PipelineConfig config;
  config.passes = PassConfig::parse(passes);
  config.jobs = jobs == 0 ? 1 : jobs;
  if (!reject_path.empty()) {
    auto in = open_in(reject_path);
    std::string line;
    std::size_t line_no = 0;
    while (text::read_line(in, line, line_no)) {
      const auto id = text::trim(line);
      if (!id.empty() && id.front() != '#') config.reject.insert(std::string(id));
    }
  }

  const auto realizer = make_realizer(script, morpho_path, symbols);
  const auto result = run_pipeline(doc.entries, script, realizer, config);

  LexiconDocument extended;
  extended.metadata = doc.metadata;
  extended.entries = result.entries;
  write_file(output, serialize(extended, format_for(output, format)));
  if (!records_path.empty()) {
    std::ostringstream buf;
    write_records(buf, make_records(doc.entries, result));
    write_file(records_path, buf.str());
  }
  return kOk;
}

int cmd_validate(const std::string& lex_path, const std::string& records_path, const std::string& output,
                 std::ostream& out) {
  const auto doc = load_lexicon(lex_path);
  std::vector<ValidationIssue> issues;
  for (const auto& e : doc.entries) {
    for (auto& i : flag_suspicious(e)) issues.push_back(std::move(i));
  }
  std::vector<DuplicateRecord> duplicates;
  if (!records_path.empty()) {
    auto in = open_in(records_path);
    duplicates = duplicates_from_records(read_records(in, records_path), doc);
  } else {
    duplicates = dedup(doc.entries).duplicates;
  }
  const auto report = review_report(issues, duplicates);
  if (output.empty()) {
    out << report;
  } else {
    write_file(output, report);
  }
  return kOk;
}

int cmd_stats(const std::string& lex_path, const std::string& records_path, std::ostream& out, std::ostream& err) {
  const auto doc = load_lexicon(lex_path);
  auto in = open_in(records_path);
  const auto records = read_records(in, records_path);
  const auto report = stats_from_records(records);
  out << format_stats(summary_grouping(report)) << "\n" << format_stats(report);
  if (report.final_count != doc.entries.size()) {
    err << "lgc: invariant violation: records give " << report.final_count << " final entries but " << lex_path
        << " holds " << doc.entries.size() << "\n";
    return kInvariantViolation;
  }
  return kOk;
}

int cmd_export(const std::string& lex_path, const std::string& format, const std::string& output,
               std::ostream& out) {
  const auto doc = load_lexicon(lex_path);
  const auto bytes = serialize(doc, format_for(output.empty() ? std::string("x.lgx") : output, format));
  if (output.empty()) {
    out << bytes;
  } else {
    write_file(output, bytes);
  }
  return kOk;
}

int cmd_import(const std::string& path, const std::string& format, const std::string& output,
               const std::string& out_format) {
  auto in = open_in(path);
  LexiconDocument doc;
  if (format.empty()) {
    doc = import_lexicon(in, path);
  } else {
    const auto f = lexicon_format_from(format);
    if (!f) throw InputError("unknown format '" + format + "' (text or xml)");
    doc = import_lexicon(in, *f, path);
  }
  write_file(output, serialize(doc, format_for(output, out_format)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lexicon-grammar compiler for adverb tables", "lgc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::vector<std::string> tables;
  std::string classes, script, morpho, symbols = "default", output, format, lex, records, passes = "all", reject,
                                       input, to_format;
  unsigned jobs = 1;

  auto* compile = app.add_subcommand("compile", "Compile tables into a base lexicon");
  compile->add_option("tables", tables, "Table files (.lgt)")->required();
  compile->add_option("--classes", classes, "Class matrix")->required();
  compile->add_option("--script", script, "Extraction script")->required();
  compile->add_option("--morpho", morpho, "Contraction/elision rules");
  compile->add_option("--symbols", symbols, "Symbol policy: default|keep[,SYM=value...]");
  compile->add_option("-o,--output", output, "Output lexicon")->required();
  compile->add_option("--format", format, "text or xml (default from extension)");

  auto* extend = app.add_subcommand("extend", "Run the generation passes on a base lexicon");
  extend->add_option("lexicon", lex, "Base lexicon")->required();
  extend->add_option("--script", script, "Extraction script the lexicon was compiled with")->required();
  extend->add_option("--passes", passes, "all, none, or a comma list of passes");
  extend->add_option("--symbols", symbols, "Symbol policy: default|keep[,SYM=value...]");
  extend->add_option("--morpho", morpho, "Contraction/elision rules");
  extend->add_option("--reject", reject, "File of entry ids to drop");
  extend->add_option("--jobs", jobs, "Worker threads");
  extend->add_option("-o,--output", output, "Output lexicon")->required();
  extend->add_option("--records", records, "Expansion records sidecar (.tsv)");
  extend->add_option("--format", format, "text or xml (default from extension)");

  auto* validate = app.add_subcommand("validate", "Write the review queue");
  validate->add_option("lexicon", lex, "Lexicon")->required();
  validate->add_option("--records", records, "Expansion records sidecar");
  validate->add_option("-o,--output", output, "Review report (.tsv); stdout if absent");

  auto* stats = app.add_subcommand("stats", "Print entry counts per pass");
  stats->add_option("lexicon", lex, "Extended lexicon")->required();
  stats->add_option("--records", records, "Expansion records sidecar")->required();

  auto* exp = app.add_subcommand("export", "Write a lexicon as text or XML");
  exp->add_option("lexicon", lex, "Lexicon")->required();
  exp->add_option("--format", format, "text or xml")->required();
  exp->add_option("-o,--output", output, "Output file; stdout if absent");

  auto* imp = app.add_subcommand("import", "Read a text or XML lexicon");
  imp->add_option("file", input, "Input file")->required();
  imp->add_option("--format", format, "text or xml (detected if absent)");
  imp->add_option("-o,--output", output, "Output lexicon")->required();
  imp->add_option("--to", to_format, "Output format (default from extension)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*compile) return cmd_compile(tables, classes, script, morpho, symbols, output, format, err);
    if (*extend) return cmd_extend(lex, script, passes, symbols, morpho, reject, jobs, output, records, format);
    if (*validate) return cmd_validate(lex, records, output, out);
    if (*stats) return cmd_stats(lex, records, out, err);
    if (*exp) return cmd_export(lex, format, output, out);
    if (*imp) return cmd_import(input, format, output, to_format);
  } catch (const Error& e) {
    err << "lgc: " << e.what() << "\n";
    return e.code() == ErrorCode::InvariantViolation ? kInvariantViolation : kInputError;
  } catch (const InputError& e) {
    err << "lgc: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "lgc: internal error: " << e.what() << "\n";
    return kInvariantViolation;
  }
  return kInputError;
}

}  // namespace lgc::cli
