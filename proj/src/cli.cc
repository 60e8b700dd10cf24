// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "diacritica/baseline.h"
#include "diacritica/corpus.h"
#include "diacritica/eval.h"
#include "diacritica/metrics.h"
#include "diacritica/profiler.h"
#include "diacritica/rune.h"
#include "diacritica/unicode.h"
#include "json.hpp"

namespace diacritica {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

class MissingInput : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string profile = "latin-generic";
  std::string format = "tsv";
  bool manifest = false;
  std::string language;
  std::string family;
  std::string labels_path;
  std::string output;
};

struct Labels {
  std::string language;
  std::string family;
};

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string slurp(const std::string& path) {
  if (!fs::is_regular_file(path)) throw MissingInput("cannot read '" + path + "'");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_file(const std::string& path) {
  if (!fs::is_regular_file(path)) throw MissingInput("cannot read '" + path + "'");
}

// Sidecar: TSV with columns path, language[, family]; no header.
std::map<std::string, Labels> read_labels(const std::string& path) {
  std::map<std::string, Labels> out;
  if (path.empty()) return out;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, '\t')) cells.push_back(cell);
    if (cells.size() < 2) throw Error("labels: expected path<TAB>language in '" + line + "'");
    out[cells[0]] = {cells[1], cells.size() > 2 ? cells[2] : std::string()};
  }
  return out;
}

struct LoadedCorpus {
  std::string path;
  std::string name;  // file stem
  Corpus corpus;
};

std::vector<LoadedCorpus> load_corpora(const std::vector<std::string>& paths,
                                       const ScriptProfile& profile,
                                       const Options& opt) {
  const auto labels = read_labels(opt.labels_path);
  std::vector<LoadedCorpus> out;
  for (const std::string& path : paths) {
    require_file(path);
    LoadedCorpus lc{path, fs::path(path).stem().string(), read_corpus(path, profile)};
    lc.corpus.language_label = opt.language;
    lc.corpus.family_label = opt.family;
    if (const auto it = labels.find(path); it != labels.end()) {
      lc.corpus.language_label = it->second.language;
      lc.corpus.family_label = it->second.family;
    }
    out.push_back(std::move(lc));
  }
  return out;
}

// Rows of string cells with a fixed header, printed as TSV or JSON lines.
class RowWriter {
 public:
  RowWriter(std::ostream& out, std::string format, std::vector<std::string> header)
      : out_(out), json_(format == "json"), header_(std::move(header)) {}

  void comment(const std::string& text) {
    if (!json_) out_ << "# " << text << '\n';
  }

  // Numeric cells are marked so JSON keeps them as numbers.
  struct Cell {
    std::string text;
    bool numeric = false;
  };

  void row(const std::vector<Cell>& cells) {
    if (json_) {
      ordered_json obj;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].numeric) {
          obj[header_[i]] = ordered_json::parse(cells[i].text);
        } else {
          obj[header_[i]] = cells[i].text;
        }
      }
      out_ << obj.dump() << '\n';
      return;
    }
    if (!header_written_) {
      write_line(header_);
      header_written_ = true;
    }
    std::vector<std::string> text;
    for (const Cell& c : cells) text.push_back(c.text);
    write_line(text);
  }

 private:
  void write_line(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << '\t';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  std::ostream& out_;
  bool json_;
  std::vector<std::string> header_;
  bool header_written_ = false;
};

RowWriter::Cell text_cell(std::string s) { return {std::move(s), false}; }
RowWriter::Cell num_cell(double v, int digits) { return {fixed(v, digits), true}; }
RowWriter::Cell int_cell(std::int64_t v) { return {std::to_string(v), true}; }

void emit_manifest(std::ostream& err, const std::string& subcommand,
                   const std::vector<std::string>& inputs, const Options& opt,
                   std::optional<std::uint64_t> seed,
                   const std::vector<std::string>& args) {
  ordered_json m;
  m["subcommand"] = subcommand;
  auto& files = m["inputs"] = ordered_json::array();
  for (const std::string& path : inputs) {
    ordered_json f;
    f["path"] = path;
    std::string digest;
    try {
      digest = fnv1a64_hex(slurp(path));
    } catch (const Error&) {
    }
    f["fnv1a64"] = digest;
    files.push_back(f);
  }
  m["profile"] = opt.profile;
  if (seed) {
    m["seed"] = *seed;
  } else {
    m["seed"] = nullptr;
  }
  m["format"] = opt.format;
  m["tool_version"] = kToolVersion;
  m["argv"] = args;
  err << m.dump() << '\n';
}

// Writes to opt.output when set, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

int cmd_profile(const std::vector<std::string>& inputs, const Options& opt,
                std::ostream& out, std::ostream& err) {
  const ScriptProfile profile = load_profile(opt.profile);
  const auto corpora = load_corpora(inputs, profile, opt);
  RowWriter w(out, opt.format,
              {"language", "corpus", "density_pct", "multi_pct", "words_diac_pct",
               "lines_diac_pct", "mean_diacs_per_word", "n_runes", "system"});
  w.comment("multi_pct denominator: all rune tokens");
  auto emit = [&](const std::string& lang, const std::string& name,
                  const CorpusProfile& p) {
    w.row({text_cell(lang), text_cell(name), num_cell(p.density_pct, 3),
           num_cell(p.multi_diacritic_pct, 3), num_cell(p.pct_words_diacritized, 3),
           num_cell(p.pct_lines_diacritized, 3),
           num_cell(p.mean_diacs_per_diacritized_word, 3),
           int_cell(static_cast<std::int64_t>(p.distinct_marked_runes)),
           text_cell(to_string(p.system_class))});
  };
  std::map<std::string, std::vector<CorpusProfile>> by_language;
  std::vector<std::string> language_order;
  for (const auto& lc : corpora) {
    const CorpusProfile p = diacritica::profile(lc.corpus);
    if (p.warnings > 0) {
      err << lc.path << ": dropped " << p.warnings << " orphan mark(s)\n";
    }
    emit(lc.corpus.language_label, lc.name, p);
    auto& group = by_language[lc.corpus.language_label];
    if (group.empty()) language_order.push_back(lc.corpus.language_label);
    group.push_back(p);
  }
  for (const std::string& lang : language_order) {
    const auto& group = by_language[lang];
    if (group.size() > 1) emit(lang, "(mean)", average_profiles(group));
  }
  return kExitOk;
}

int cmd_metrics(const std::vector<std::string>& inputs, bool per_rune,
                const Options& opt, std::ostream& out, std::ostream&) {
  const ScriptProfile profile = load_profile(opt.profile);
  const auto corpora = load_corpora(inputs, profile, opt);
  std::vector<std::pair<const LoadedCorpus*, MetricReport>> reports;
  for (const auto& lc : corpora) {
    reports.emplace_back(&lc, metric_report(build_tables(lc.corpus), per_rune));
  }
  if (opt.format == "json") {
    for (const auto& [lc, rep] : reports) {
      ordered_json obj;
      obj["language"] = lc->corpus.language_label;
      obj["corpus"] = lc->name;
      obj["density"] = rep.density;
      obj["density_pct"] = 100.0 * rep.density;
      obj["rs"] = rep.mean_rs;
      obj["dts"] = rep.mean_dts;
      obj["dss"] = rep.mean_dss;
      obj["tokens"] = rep.rune_token_count;
      if (rep.per_rune) {
        auto& rows = obj["per_rune"] = ordered_json::array();
        for (const RuneMetrics& m : *rep.per_rune) {
          rows.push_back({{"rune", rune_key(m.rune)},
                          {"form", encode_utf8(render(std::span(&m.rune, 1),
                                                      RenderForm::kComposed))},
                          {"count", m.count},
                          {"rs", m.rs},
                          {"dts", m.dts},
                          {"dss", m.dss}});
        }
      }
      out << obj.dump() << '\n';
    }
    return kExitOk;
  }
  RowWriter w(out, opt.format,
              {"language", "corpus", "density", "density_pct", "rs", "dts", "dss",
               "tokens"});
  for (const auto& [lc, rep] : reports) {
    w.row({text_cell(lc->corpus.language_label), text_cell(lc->name),
           num_cell(rep.density, 6), num_cell(100.0 * rep.density, 3),
           num_cell(rep.mean_rs, 6), num_cell(rep.mean_dts, 6),
           num_cell(rep.mean_dss, 6), int_cell(rep.rune_token_count)});
  }
  if (per_rune) {
    out << '\n';
    RowWriter b(out, opt.format,
                {"language", "corpus", "rune", "form", "count", "rs", "dts", "dss"});
    for (const auto& [lc, rep] : reports) {
      for (const RuneMetrics& m : *rep.per_rune) {
        b.row({text_cell(lc->corpus.language_label), text_cell(lc->name),
               text_cell(rune_key(m.rune)),
               text_cell(encode_utf8(render(std::span(&m.rune, 1),
                                            RenderForm::kComposed))),
               int_cell(m.count), num_cell(m.rs, 6), num_cell(m.dts, 6),
               num_cell(m.dss, 6)});
      }
    }
  }
  return kExitOk;
}

int cmd_sample(const std::string& input, std::size_t target, std::uint64_t seed,
               const Options& opt, std::ostream& out) {
  const ScriptProfile profile = load_profile(opt.profile);
  require_file(input);
  const Corpus corpus = read_corpus(input, profile);
  const Corpus sampled = sample(corpus, {target, seed});
  Sink sink(opt.output, out);
  write_plaintext(sink.get(), sampled);
  return kExitOk;
}

int cmd_strip(const std::string& input, const Options& opt, std::ostream& out) {
  const ScriptProfile profile = load_profile(opt.profile);
  require_file(input);
  const Corpus corpus = read_corpus(input, profile);
  Sink sink(opt.output, out);
  for (const Sentence& s : corpus.sentences) {
    sink.get() << encode_utf8(strip_text(decode_utf8(s.raw_text), profile)) << '\n';
  }
  return kExitOk;
}

int cmd_train(const std::string& input, const Options& opt, std::ostream& out) {
  const ScriptProfile profile = load_profile(opt.profile);
  require_file(input);
  const Corpus corpus = read_corpus(input, profile);
  if (corpus.empty()) throw Error(input + ": empty training corpus");
  BaselineModel model = train(corpus);
  model.casefold = profile.casefold;
  Sink sink(opt.output, out);
  sink.get() << model_to_json(model) << '\n';
  return kExitOk;
}

int cmd_diacritize(const std::string& model_path, const std::string& input,
                   const Options& opt, std::ostream& out) {
  const ScriptProfile profile = load_profile(opt.profile);
  const BaselineModel model = model_from_json(slurp(model_path));
  const std::string text = slurp(input);
  decode_utf8(text);
  Sink sink(opt.output, out);
  // Line by line so blank lines survive.
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    sink.get() << diacritize(model, std::string_view(line), profile) << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const std::string& gold_path, const std::string& hyp_path,
                 const Options& opt, std::ostream& out) {
  const ScriptProfile profile = load_profile(opt.profile);
  require_file(gold_path);
  require_file(hyp_path);
  const Corpus gold = read_corpus(gold_path, profile);
  const Corpus hyp = read_corpus(hyp_path, profile);
  const EvalReport rep = evaluate(gold, hyp);
  RowWriter w(out, opt.format,
              {"language", "corpus", "word_acc", "rune_acc", "n_words", "n_runes"});
  w.row({text_cell(opt.language), text_cell(fs::path(gold_path).stem().string()),
         num_cell(rep.word_accuracy, 3), num_cell(rep.rune_accuracy, 3),
         int_cell(static_cast<std::int64_t>(rep.n_words)),
         int_cell(static_cast<std::int64_t>(rep.n_runes))});
  return kExitOk;
}

int cmd_correlate(const std::vector<std::string>& inputs,
                  const std::vector<std::string>& xs,
                  const std::vector<std::string>& ys, const Options& opt,
                  std::ostream& out, std::ostream& err) {
  std::vector<DataTable> tables;
  for (const std::string& path : inputs) tables.push_back(parse_tsv(slurp(path)));
  const DataTable table = join_tables(tables);
  RowWriter w(out, opt.format, {"x", "y", "n", "r", "t", "p", "stars"});
  for (const std::string& x : xs) {
    for (const std::string& y : ys) {
      const CorrelationReport rep = correlate_table(table, x, y);
      if (rep.dropped_rows > 0) {
        err << "correlate " << x << "/" << y << ": dropped " << rep.dropped_rows
            << " row(s) with missing values\n";
      }
      char p[32];
      std::snprintf(p, sizeof p, "%.6g", rep.p_two_tailed);
      char t[32];
      std::snprintf(t, sizeof t, "%.6f", rep.t_stat);
      const bool finite_t = std::isfinite(rep.t_stat);
      w.row({text_cell(x), text_cell(y), int_cell(static_cast<std::int64_t>(rep.n)),
             num_cell(rep.r, 6),
             finite_t ? RowWriter::Cell{t, true} : text_cell(rep.t_stat > 0 ? "inf" : "-inf"),
             RowWriter::Cell{p, true}, text_cell(rep.stars)});
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Diacritic usage metrics, sampling, baseline restoration and "
               "evaluation for diacritized corpora",
               "diacritica"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Options opt;
  app.add_option("--profile", opt.profile,
                 "Script profile: latin-generic, hebrew, arabic, bengali, or a "
                 "JSON file")
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  app.add_flag("--manifest", opt.manifest,
               "Print a JSON run manifest to stderr");

  auto add_labels = [&](CLI::App* sub) {
    sub->add_option("--language", opt.language, "Language label for all inputs");
    sub->add_option("--family", opt.family, "Family label for all inputs");
    sub->add_option("--labels", opt.labels_path,
                    "Sidecar TSV: path, language[, family]");
  };

  std::vector<std::string> inputs;

  auto* profile_cmd = app.add_subcommand("profile", "Diacritic usage statistics");
  profile_cmd->add_option("inputs", inputs, "Corpus files")->required();
  add_labels(profile_cmd);

  bool per_rune = false;
  auto* metrics_cmd = app.add_subcommand("metrics", "Density, RS, DTS, DSS");
  metrics_cmd->add_option("inputs", inputs, "Corpus files")->required();
  metrics_cmd->add_flag("--per-rune", per_rune, "Add per-rune breakdown");
  add_labels(metrics_cmd);

  std::string input;
  std::size_t target = 300000;
  std::uint64_t seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Fixed-size seeded sample");
  sample_cmd->add_option("input", input, "Corpus file")->required();
  sample_cmd->add_option("--target-chars", target, "Target rune count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sample_cmd->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  sample_cmd->add_option("-o,--output", opt.output, "Output file (default stdout)");

  auto* strip_cmd = app.add_subcommand("strip", "Remove diacritics");
  strip_cmd->add_option("input", input, "Corpus file")->required();
  strip_cmd->add_option("-o,--output", opt.output, "Output file (default stdout)");

  auto* train_cmd = app.add_subcommand("train", "Train the baseline restorer");
  train_cmd->add_option("input", input, "Diacritized training corpus")->required();
  train_cmd->add_option("-o,--output", opt.output, "Model file (default stdout)");

  std::string model_path;
  auto* diac_cmd = app.add_subcommand("diacritize", "Restore diacritics");
  diac_cmd->add_option("--model", model_path, "Model JSON")->required();
  diac_cmd->add_option("input", input, "Undiacritized text")->required();
  diac_cmd->add_option("-o,--output", opt.output, "Output file (default stdout)");

  std::string gold_path;
  std::string hyp_path;
  auto* eval_cmd = app.add_subcommand("evaluate", "Word and rune accuracy");
  eval_cmd->add_option("gold", gold_path, "Gold text")->required();
  eval_cmd->add_option("hypothesis", hyp_path, "System output")->required();
  eval_cmd->add_option("--language", opt.language, "Language label");

  std::vector<std::string> xs;
  std::vector<std::string> ys;
  auto* corr_cmd = app.add_subcommand("correlate", "Pearson correlation with significance");
  corr_cmd->add_option("tables", inputs, "TSV tables joined on (language, corpus)")
      ->required();
  corr_cmd->add_option("--x", xs, "Column(s) for x")->required();
  corr_cmd->add_option("--y", ys, "Column(s) for y")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::vector<std::string> manifest_inputs = inputs;
  if (!input.empty()) manifest_inputs.push_back(input);
  if (!gold_path.empty()) manifest_inputs = {gold_path, hyp_path};
  if (!model_path.empty()) manifest_inputs.push_back(model_path);

  int code = kExitOk;
  try {
    if (name == "profile") {
      code = cmd_profile(inputs, opt, out, err);
    } else if (name == "metrics") {
      code = cmd_metrics(inputs, per_rune, opt, out, err);
    } else if (name == "sample") {
      code = cmd_sample(input, target, seed, opt, out);
    } else if (name == "strip") {
      code = cmd_strip(input, opt, out);
    } else if (name == "train") {
      code = cmd_train(input, opt, out);
    } else if (name == "diacritize") {
      code = cmd_diacritize(model_path, input, opt, out);
    } else if (name == "evaluate") {
      code = cmd_evaluate(gold_path, hyp_path, opt, out);
    } else if (name == "correlate") {
      code = cmd_correlate(inputs, xs, ys, opt, out, err);
    }
  } catch (const MissingInput& e) {
    err << "diacritica " << name << ": " << e.what() << '\n';
    return kExitNoInput;
  } catch (const std::exception& e) {
    err << "diacritica " << name << ": " << e.what() << '\n';
    return kExitError;
  }
  if (opt.manifest) {
    emit_manifest(err, name, manifest_inputs, opt,
                  name == "sample" ? std::optional<std::uint64_t>(seed) : std::nullopt,
                  args);
  }
  return code;
}

}  // namespace diacritica
