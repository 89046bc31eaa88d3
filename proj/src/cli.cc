#include "cstts/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cstts/conditioning.h"
#include "cstts/corpus_stats.h"
#include "cstts/errors.h"
#include "cstts/io.h"
#include "cstts/lexicon.h"
#include "cstts/parallel.h"
#include "cstts/sequence.h"

namespace cstts::cli {
namespace {

using nlohmann::json;

// Lines handed to the parallel kernel at once.
constexpr std::size_t kBatchLines = 4096;

struct PipelineConfig {
  std::string data_dir;
  std::string english;
  std::string pinyin;
  std::string pinyin2cmu;
  std::string inventory;
  std::string mode = "strict";
  bool append_eos = false;
  std::uint64_t phoneme_seed = 1;
  std::uint64_t language_seed = 2;
  std::size_t phoneme_dim = kDefaultPhonemeEmbeddingDim;
  int threads = 0;

  OovMode oov_mode() const { return mode == "skip-oov" ? OovMode::kSkipOov : OovMode::kStrict; }

  LexiconPaths lexicon_paths() const {
    LexiconPaths paths = LexiconPaths::InDirectory(data_dir.empty() ? DefaultDataDir()
                                                                    : std::filesystem::path(data_dir));
    if (!english.empty()) paths.english = english;
    if (!pinyin.empty()) paths.pinyin = pinyin;
    if (!pinyin2cmu.empty()) paths.pinyin2cmu = pinyin2cmu;
    if (!inventory.empty()) paths.inventory = inventory;
    return paths;
  }
};

// Failure that maps directly onto an exit code.
struct CommandError {
  int exit_code;
  std::string message;
};

[[noreturn]] void Fail(int code, std::string message) {
  throw CommandError{code, std::move(message)};
}

// Stdin when `path` is empty or "-".
class InputSource {
 public:
  InputSource(const std::string& path, std::istream& stdin_stream) {
    if (path.empty() || path == "-") {
      stream_ = &stdin_stream;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) Fail(kExitConfig, "cannot open input " + path);
      stream_ = &file_;
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

json ReadJsonFile(const std::string& path) {
  std::string bytes;
  try {
    bytes = io::ReadFileBytes(path);
  } catch (const Error& e) {
    Fail(kExitConfig, e.what());
  }
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    Fail(kExitConfig, path + ": " + e.what());
  }
}

LexiconSet LoadLexicons(const PipelineConfig& config) {
  try {
    return LexiconSet::FromFiles(config.lexicon_paths());
  } catch (const Error& e) {
    Fail(kExitConfig, std::string("loading lexicons: ") + e.what());
  }
}

SymbolVocabulary LoadVocabulary(const std::string& path) {
  try {
    return io::VocabularyFromJson(ReadJsonFile(path));
  } catch (const Error& e) {
    Fail(kExitConfig, path + ": " + e.what());
  }
}

std::vector<TaggedSequence> ReadCorpus(const std::string& path, std::istream& stdin_stream) {
  InputSource src(path, stdin_stream);
  try {
    return io::ReadSequencesJsonl(src.get());
  } catch (const Error& e) {
    Fail(kExitConversion, (path.empty() ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void RunG2p(const PipelineConfig& config, const std::string& in_path,
            const std::string& vocab_path, std::istream& in, std::ostream& out,
            std::ostream& err) {
  const LexiconSet lexicons = LoadLexicons(config);
  std::optional<SymbolVocabulary> vocab;
  if (!vocab_path.empty()) vocab = LoadVocabulary(vocab_path);

  InputSource src(in_path, in);
  std::vector<std::string> batch;
  std::size_t first_line_no = 1;
  auto flush = [&]() {
    const auto outcomes = BuildSequencesParallel(batch, lexicons, config.oov_mode(), config.threads);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const std::size_t line_no = first_line_no + i;
      const SequenceOutcome& o = outcomes[i];
      for (const auto& w : o.warnings) err << "line " << line_no << ": warning: " << w << '\n';
      if (!o.ok()) {
        out.flush();
        Fail(kExitConversion, "line " + std::to_string(line_no) + ": " + o.error->what());
      }
      if (vocab) {
        EncodedSequence enc;
        try {
          enc = Encode(o.sequence, *vocab, config.append_eos);
        } catch (const Error& e) {
          out.flush();
          Fail(kExitConversion, "line " + std::to_string(line_no) + ": " + e.what());
        }
        out << io::SequenceToJson(o.sequence, &enc).dump() << '\n';
      } else {
        out << io::SequenceToJson(o.sequence).dump() << '\n';
      }
    }
    first_line_no += batch.size();
    batch.clear();
  };

  std::string line;
  while (std::getline(src.get(), line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    batch.push_back(std::move(line));
    if (batch.size() == kBatchLines) flush();
  }
  if (!batch.empty()) flush();
}

void RunVocab(const std::vector<std::string>& in_paths, const std::string& out_path,
              std::istream& in, std::ostream& out) {
  std::vector<TaggedSequence> corpus;
  const std::vector<std::string> paths = in_paths.empty() ? std::vector<std::string>{""} : in_paths;
  for (const auto& p : paths) {
    auto part = ReadCorpus(p, in);
    corpus.insert(corpus.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  SymbolVocabulary vocab = [&] {
    try {
      return SymbolVocabulary::Build(corpus);
    } catch (const Error& e) {
      Fail(kExitConversion, e.what());
    }
  }();
  const std::string text = io::VocabularyToJson(vocab).dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    try {
      io::WriteFileBytes(out_path, text);
    } catch (const Error& e) {
      Fail(kExitConfig, e.what());
    }
  }
}

void RunAnalyze(const PipelineConfig& config, const std::vector<std::string>& in_paths,
                std::vector<std::string> labels, bool diff, const std::string& json_path,
                std::istream& in, std::ostream& out) {
  if (in_paths.empty()) Fail(kExitConfig, "analyze needs at least one --in file");
  if (!labels.empty() && labels.size() != in_paths.size()) {
    Fail(kExitConfig, "give one --label per --in file");
  }
  if (diff && in_paths.size() != 2) Fail(kExitConfig, "--diff needs exactly two inputs");
  if (labels.empty()) {
    for (const auto& p : in_paths) labels.push_back(std::filesystem::path(p).stem().string());
  }
  std::vector<FrequencyTable> tables;
  for (std::size_t i = 0; i < in_paths.size(); ++i) {
    const auto corpus = ReadCorpus(in_paths[i], in);
    tables.push_back(CountPhonemesParallel(corpus, labels[i], config.threads));
  }
  out << RenderTable(tables);
  if (diff) {
    out << '\n' << RenderCoverage(CompareCoverage(tables[0], tables[1]), labels[0], labels[1]);
  }
  if (!json_path.empty()) {
    std::string text;
    for (const auto& t : tables) text += io::FrequencyTableToJson(t).dump() + "\n";
    try {
      io::WriteFileBytes(json_path, text);
    } catch (const Error& e) {
      Fail(kExitConfig, e.what());
    }
  }
}

EmbeddingTable TableFromFileOrSeed(const std::string& path, std::size_t rows, std::size_t dim,
                                   std::uint64_t seed, const std::string& label) {
  if (path.empty()) return EmbeddingTable::Initialize(rows, dim, seed, label);
  EmbeddingTable table = [&] {
    try {
      return io::LoadEmbeddingTable(path);
    } catch (const Error& e) {
      Fail(kExitConfig, path + ": " + e.what());
    }
  }();
  if (table.rows() < rows) {
    Fail(kExitConfig, path + ": table has " + std::to_string(table.rows()) +
                          " rows, need " + std::to_string(rows));
  }
  return table;
}

void RunAssemble(const PipelineConfig& config, const std::string& vocab_path,
                 const std::string& in_path, const std::string& out_dir,
                 const std::string& speaker_path, bool attach_speaker,
                 const std::string& phoneme_table_path, const std::string& language_table_path,
                 std::istream& in, std::ostream& err) {
  if (attach_speaker && speaker_path.empty()) {
    Fail(kExitConfig, "--attach-speaker needs --speaker");
  }
  const SymbolVocabulary vocab = LoadVocabulary(vocab_path);
  std::optional<SpeakerEmbedding> speaker;
  if (!speaker_path.empty()) {
    try {
      speaker = io::LoadSpeakerEmbedding(speaker_path);
    } catch (const Error& e) {
      Fail(kExitConfig, speaker_path + ": " + e.what());
    }
  }
  const auto corpus = ReadCorpus(in_path, in);

  std::vector<EncodedSequence> encoded;
  encoded.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    try {
      encoded.push_back(Encode(corpus[i], vocab, config.append_eos));
    } catch (const Error& e) {
      Fail(kExitConversion, "record " + std::to_string(i + 1) + ": " + e.what());
    }
  }

  const EmbeddingTable phoneme_table = TableFromFileOrSeed(
      phoneme_table_path, vocab.size(), config.phoneme_dim, config.phoneme_seed, "phoneme");
  const EmbeddingTable language_table =
      TableFromFileOrSeed(language_table_path, kLanguageTableRows, kLanguageEmbeddingDim,
                          config.language_seed, "language");

  std::vector<ConditionedMatrix> matrices = [&] {
    try {
      return AssembleBatchParallel(encoded, phoneme_table, language_table,
                                   attach_speaker ? &*speaker : nullptr, config.threads);
    } catch (const Error& e) {
      Fail(kExitConversion, e.what());
    }
  }();

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) Fail(kExitConfig, "cannot create " + out_dir + ": " + ec.message());
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    std::ostringstream stem;
    stem << "utt_" << std::setw(6) << std::setfill('0') << i;
    json extra{{"index", i},
               {"text", corpus[i].source_text},
               {"symbols", corpus[i].symbols},
               {"symbol_ids", encoded[i].symbol_ids},
               {"lang_tokens", encoded[i].lang_tokens},
               {"vocab_version", vocab.version_tag()},
               {"phoneme_table", {{"seed", phoneme_table.seed()}, {"dim", phoneme_table.dim()}}},
               {"language_table", {{"seed", language_table.seed()}, {"dim", language_table.dim()}}}};
    if (attach_speaker) extra["speaker"] = speaker->label;
    try {
      io::SaveConditionedMatrix(matrices[i], std::filesystem::path(out_dir) / stem.str(), extra);
    } catch (const Error& e) {
      Fail(kExitConfig, e.what());
    }
  }
  err << "wrote " << matrices.size() << " matrices to " << out_dir << '\n';
}

void RunSpeakerMean(const std::string& in_path, const std::string& label,
                    const std::string& out_path, std::istream& in, std::ostream& out) {
  InputSource src(in_path, in);
  std::vector<std::vector<double>> vectors;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(src.get(), line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json doc = json::parse(line);
      if (doc.is_object()) doc = doc.at("values");
      vectors.push_back(doc.get<std::vector<double>>());
    } catch (const json::exception& e) {
      Fail(kExitConversion, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  SpeakerEmbedding mean = [&] {
    try {
      return MeanSpeakerEmbedding(vectors, label);
    } catch (const Error& e) {
      Fail(kExitConversion, e.what());
    }
  }();
  const std::string text = io::SpeakerToJson(mean).dump() + "\n";
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    try {
      io::WriteFileBytes(out_path, text);
    } catch (const Error& e) {
      Fail(kExitConfig, e.what());
    }
  }
}

void RunInitTable(std::size_t rows, const std::string& vocab_path, std::size_t dim,
                  std::uint64_t seed, const std::string& label, const std::string& out_path) {
  if (!vocab_path.empty()) rows = LoadVocabulary(vocab_path).size();
  try {
    io::SaveEmbeddingTable(EmbeddingTable::Initialize(rows, dim, seed, label), out_path);
  } catch (const Error& e) {
    Fail(kExitConfig, e.what());
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Mandarin/English code-switching TTS front-end", "cstts"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value config file; flags override it");

  PipelineConfig config;
  app.add_option("--data-dir", config.data_dir, "Directory with the bundled lexicons");
  app.add_option("--english-lexicon", config.english, "CMU-format English lexicon");
  app.add_option("--pinyin-lexicon", config.pinyin, "hanzi<TAB>pinyin lexicon");
  app.add_option("--pinyin2cmu", config.pinyin2cmu, "pinyin-to-CMU mapping table");
  app.add_option("--inventory", config.inventory, "Phoneme inventory file");
  app.add_option("--mode", config.mode, "OOV handling")
      ->check(CLI::IsMember({"strict", "skip-oov"}))
      ->capture_default_str();
  app.add_flag("--append-eos", config.append_eos, "Append EOS when encoding");
  app.add_option("--phoneme-seed", config.phoneme_seed)->capture_default_str();
  app.add_option("--language-seed", config.language_seed)->capture_default_str();
  app.add_option("--phoneme-dim", config.phoneme_dim)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads (0 = all)")->capture_default_str();

  std::string g2p_in, g2p_vocab;
  auto* g2p = app.add_subcommand("g2p", "Text lines -> JSONL tagged sequences")->fallthrough();
  g2p->add_option("--in", g2p_in, "Input text file (default stdin)");
  g2p->add_option("--vocab", g2p_vocab, "Vocabulary JSON; adds symbol_ids");

  std::vector<std::string> vocab_in;
  std::string vocab_out;
  auto* vocab = app.add_subcommand("vocab", "JSONL sequences -> vocabulary JSON")->fallthrough();
  vocab->add_option("--in", vocab_in, "JSONL input files (default stdin)");
  vocab->add_option("--out", vocab_out, "Output path (default stdout)");

  std::vector<std::string> analyze_in, analyze_labels;
  bool analyze_diff = false;
  std::string analyze_json;
  auto* analyze = app.add_subcommand("analyze", "Phoneme frequency tables")->fallthrough();
  analyze->add_option("--in", analyze_in, "JSONL corpus (repeatable)");
  analyze->add_option("--label", analyze_labels, "Column label per --in (repeatable)");
  analyze->add_flag("--diff", analyze_diff, "Append coverage sets for two corpora");
  analyze->add_option("--json", analyze_json, "Also write tables as JSONL here");

  std::string asm_vocab, asm_in, asm_out, asm_speaker, asm_ptable, asm_ltable;
  bool asm_attach = false;
  auto* assemble = app.add_subcommand("assemble", "JSONL sequences -> conditioned matrices")
                       ->fallthrough();
  assemble->add_option("--vocab", asm_vocab, "Vocabulary JSON")->required();
  assemble->add_option("--in", asm_in, "JSONL input (default stdin)");
  assemble->add_option("--out-dir", asm_out, "Directory for utt_NNNNNN.{bin,json}")->required();
  assemble->add_option("--speaker", asm_speaker, "Speaker embedding JSON");
  assemble->add_flag("--attach-speaker", asm_attach, "Append the speaker embedding");
  assemble->add_option("--phoneme-table", asm_ptable, "Load phoneme table instead of seeding");
  assemble->add_option("--language-table", asm_ltable, "Load language table instead of seeding");

  std::string spk_in, spk_label = "speaker", spk_out;
  auto* speaker = app.add_subcommand("speaker-mean", "Mean of per-utterance speaker vectors")
                      ->fallthrough();
  speaker->add_option("--in", spk_in, "JSONL of 256-d vectors (default stdin)");
  speaker->add_option("--label", spk_label)->capture_default_str();
  speaker->add_option("--out", spk_out, "Output path (default stdout)");

  std::size_t table_rows = 0, table_dim = 0;
  std::uint64_t table_seed = 0;
  std::string table_vocab, table_label, table_out;
  auto* init_table = app.add_subcommand("init-table", "Write a seeded embedding table")
                         ->fallthrough();
  auto* rows_opt = init_table->add_option("--rows", table_rows, "Vocabulary size");
  init_table->add_option("--vocab", table_vocab, "Take the row count from a vocabulary")
      ->excludes(rows_opt);
  init_table->add_option("--dim", table_dim)->required();
  init_table->add_option("--seed", table_seed)->required();
  init_table->add_option("--label", table_label);
  init_table->add_option("--out", table_out, "Header JSON path")->required();

  std::vector<std::string> argv_storage{"cstts"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*g2p) {
      RunG2p(config, g2p_in, g2p_vocab, in, out, err);
    } else if (*vocab) {
      RunVocab(vocab_in, vocab_out, in, out);
    } else if (*analyze) {
      RunAnalyze(config, analyze_in, analyze_labels, analyze_diff, analyze_json, in, out);
    } else if (*assemble) {
      RunAssemble(config, asm_vocab, asm_in, asm_out, asm_speaker, asm_attach, asm_ptable,
                  asm_ltable, in, err);
    } else if (*speaker) {
      RunSpeakerMean(spk_in, spk_label, spk_out, in, out);
    } else if (*init_table) {
      RunInitTable(table_rows, table_vocab, table_dim, table_seed, table_label, table_out);
    }
  } catch (const CommandError& e) {
    out.flush();
    err << "cstts: " << e.message << '\n';
    return e.exit_code;
  } catch (const Error& e) {
    out.flush();
    err << "cstts: " << e.what() << '\n';
    return e.code() == ErrorCode::kIo ? kExitConfig : kExitConversion;
  }
  out.flush();
  return kExitOk;
}

}  // namespace cstts::cli
