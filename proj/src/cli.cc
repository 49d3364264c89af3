#include "swsum/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "swsum/corpus.h"
#include "swsum/errors.h"
#include "swsum/parallel.h"
#include "swsum/pipeline.h"
#include "swsum/rouge.h"
#include "swsum/topology.h"
#include "swsum/wilcoxon.h"

namespace swsum {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class MissingPath : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  double epsilon = 0.3;
  double rate = 0.3;
  std::vector<std::string> generic_types{default_generic_types().begin(),
                                         default_generic_types().end()};
  bool stem = true;
  bool remove_stopwords = false;
  std::string aggregate = "recall";
  bool surrogate = false;
  std::size_t threads = 1;
  std::string input;
  std::string corpus;
  std::string models;
  std::string output;
  std::string epsilons = "0.1:0.8:0.1";
  std::string format;
  std::string dump_meaning;
  std::string graph_out;
  std::string a;
  std::string b;
  std::string metric = "rouge2_r";
  std::string config;
  bool explain = false;

  PipelineOptions pipeline() const {
    PipelineOptions options;
    options.epsilon = epsilon;
    options.compression_rate = rate;
    options.generic_types = {generic_types.begin(), generic_types.end()};
    options.threads = threads;
    return options;
  }

  RougeOptions rouge() const {
    RougeOptions options;
    options.stem = stem;
    options.remove_stopwords = remove_stopwords;
    return options;
  }
};

std::string read_file(const fs::path& path) {
  if (!fs::exists(path)) throw MissingPath("no such file: " + path.string());
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingPath("cannot open: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write: " + path.string());
  out << content;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& content) {
  if (cfg.output.empty()) {
    out << content;
  } else {
    write_file(cfg.output, content);
  }
}

std::string fixed(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

bool is_annotated(const fs::path& path) { return path.extension() == ".json"; }

Document load_document(const fs::path& path, bool surrogate,
                       std::ostream& err) {
  const std::string text = read_file(path);
  if (is_annotated(path)) return load_annotated(text);
  Document doc = load_plain_text(text, path.stem().string());
  if (surrogate) return surrogate_annotate(doc);
  err << "warning: " << path.string()
      << " is plain text without --surrogate; no concepts are attached\n";
  return doc;
}

fs::path require_dir(const std::string& dir, const char* what) {
  if (dir.empty()) throw Error(std::string("missing --") + what);
  if (!fs::is_directory(dir)) throw MissingPath("no such directory: " + dir);
  return dir;
}

// Corpus documents by stem; annotated JSON wins over plain text.
std::map<std::string, fs::path> list_corpus(const fs::path& dir,
                                            bool include_text) {
  std::map<std::string, fs::path> docs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    const std::string stem = p.stem().string();
    if (is_annotated(p)) {
      docs[stem] = p;
    } else if (include_text && p.extension() == ".txt" && !docs.count(stem)) {
      docs[stem] = p;
    }
  }
  return docs;
}

// --- summarize -------------------------------------------------------------

std::string ranking_csv(const Summary& summary) {
  std::string out = "rank,sentence,degree\n";
  for (const auto& r : summary.ranked) {
    out += std::to_string(r.rank) + ",S" + std::to_string(r.sentence_index) +
           "," + std::to_string(r.degree) + "\n";
  }
  return out;
}

int cmd_summarize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.input.empty()) throw Error("summarize needs --input");
  const Document doc = load_document(cfg.input, cfg.surrogate, err);
  const PipelineResult run = run_pipeline(doc, cfg.pipeline());
  if (run.meaning.empty_concept_space)
    err << "note: no concepts found; the summary follows the sentence path\n";
  emit(cfg, out, summary_text(run.document, run.summary));

  if (!cfg.dump_meaning.empty())
    write_file(cfg.dump_meaning, meaning_table_to_json(run.meaning));
  if (!cfg.graph_out.empty()) {
    write_file(cfg.graph_out, cfg.format == "json" ? graph_to_json(run.graph)
                                                   : export_dot(run.graph));
  }
  if (cfg.explain) {
    if (cfg.output.empty()) throw Error("--explain needs --output");
    write_file(cfg.output + ".meaning.json", meaning_table_to_json(run.meaning));
    write_file(cfg.output + ".graph.dot", export_dot(run.graph));
    write_file(cfg.output + ".graph.json", graph_to_json(run.graph));
    write_file(cfg.output + ".ranking.csv", ranking_csv(run.summary));
  }
  err << "summarized " << doc.id() << ": " << run.summary.selected.size()
      << " of " << doc.size() << " sentences, "
      << run.meaning.meaningful.size() << " meaningful concepts\n";
  return 0;
}

// --- sweep -----------------------------------------------------------------

struct SweepCell {
  double rouge2 = 0.0;
  double rougesu4 = 0.0;
  std::size_t meaningful = 0;
  std::size_t summary_size = 0;
  std::optional<TopologyReport> topology;
};

double pick(const RougeScore& s, const std::string& aggregate) {
  return aggregate == "f1" ? s.f1 : s.recall;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const fs::path corpus = require_dir(cfg.corpus, "corpus");
  const fs::path models = require_dir(cfg.models, "models");
  const std::vector<double> grid = parse_range(cfg.epsilons);

  std::vector<std::pair<std::string, fs::path>> docs;
  for (const auto& [stem, path] : list_corpus(corpus, cfg.surrogate)) {
    if (fs::exists(models / (stem + ".txt"))) {
      docs.emplace_back(stem, path);
    } else {
      err << "skipping " << stem << ": no model summary\n";
    }
  }
  if (docs.empty()) throw Error("no corpus document has a model summary");

  std::vector<std::vector<SweepCell>> cells(docs.size(),
                                            std::vector<SweepCell>(grid.size()));
  std::vector<std::string> warnings(docs.size());
  parallel_for(docs.size(), cfg.threads, [&](std::size_t d) {
    std::ostringstream local_err;
    const Document doc = load_document(docs[d].second, cfg.surrogate, local_err);
    const std::string model = read_file(models / (docs[d].first + ".txt"));
    RunConfig single = cfg;
    single.threads = 1;
    single.epsilon = grid.front();
    const PipelineResult base = run_pipeline(doc, single.pipeline());
    for (std::size_t e = 0; e < grid.size(); ++e) {
      const PipelineResult run = rerun_at(base, grid[e], cfg.rate);
      const auto [r2, su4] =
          score_summary(summary_text(run.document, run.summary), model,
                        cfg.rouge());
      SweepCell& cell = cells[d][e];
      cell.rouge2 = pick(r2, cfg.aggregate);
      cell.rougesu4 = pick(su4, cfg.aggregate);
      cell.meaningful = run.meaning.meaningful.size();
      cell.summary_size = run.summary.selected.size();
      if (run.graph.size() >= 3) cell.topology = small_world_report(run.graph);
    }
    warnings[d] = local_err.str();
  });
  for (const auto& w : warnings) err << w;

  std::string csv =
      "epsilon,documents,rouge2,rougesu4,meaningful,summary_sentences,edges,"
      "char_path_length,mean_clustering,transitivity,sigma,small_world_share\n";
  for (std::size_t e = 0; e < grid.size(); ++e) {
    double r2 = 0, su4 = 0, meaningful = 0, size = 0;
    double edges = 0, path = 0, clustering = 0, trans = 0, sigma = 0, sw = 0;
    std::size_t with_topology = 0;
    for (std::size_t d = 0; d < docs.size(); ++d) {
      const SweepCell& c = cells[d][e];
      r2 += c.rouge2;
      su4 += c.rougesu4;
      meaningful += static_cast<double>(c.meaningful);
      size += static_cast<double>(c.summary_size);
      if (!c.topology) continue;
      ++with_topology;
      edges += static_cast<double>(c.topology->edge_count);
      path += c.topology->char_path_length;
      clustering += c.topology->mean_clustering;
      trans += c.topology->transitivity;
      sigma += c.topology->sigma;
      sw += c.topology->regime == Regime::kSmallWorld ? 1.0 : 0.0;
    }
    const double nd = static_cast<double>(docs.size());
    const double nt = static_cast<double>(std::max<std::size_t>(1, with_topology));
    csv += fixed(grid[e], 4) + "," + std::to_string(docs.size()) + "," +
           fixed(r2 / nd) + "," + fixed(su4 / nd) + "," +
           fixed(meaningful / nd, 3) + "," + fixed(size / nd, 3) + "," +
           fixed(edges / nt, 3) + "," + fixed(path / nt) + "," +
           fixed(clustering / nt) + "," + fixed(trans / nt) + "," +
           fixed(sigma / nt) + "," + fixed(sw / nt, 4) + "\n";
    err << "epsilon " << fixed(grid[e], 4) << ": mean R-2 " << fixed(r2 / nd)
        << ", mean R-SU4 " << fixed(su4 / nd) << "\n";
  }
  emit(cfg, out, csv);
  return 0;
}

// --- evaluate --------------------------------------------------------------

int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.input.empty() || cfg.models.empty())
    throw Error("evaluate needs --input and --models");
  std::vector<std::tuple<std::string, fs::path, fs::path>> jobs;
  if (fs::is_directory(cfg.input)) {
    const fs::path models = require_dir(cfg.models, "models");
    std::map<std::string, fs::path> candidates;
    for (const auto& entry : fs::directory_iterator(cfg.input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        candidates[entry.path().stem().string()] = entry.path();
    }
    for (const auto& [stem, path] : candidates) {
      const fs::path model = models / (stem + ".txt");
      if (fs::exists(model)) {
        jobs.emplace_back(stem, path, model);
      } else {
        err << "skipping " << stem << ": no model summary\n";
      }
    }
    if (jobs.empty()) throw Error("no summary has a matching model summary");
  } else {
    if (!fs::exists(cfg.input)) throw MissingPath("no such file: " + cfg.input);
    if (!fs::exists(cfg.models)) throw MissingPath("no such file: " + cfg.models);
    jobs.emplace_back(fs::path(cfg.input).stem().string(), cfg.input, cfg.models);
  }

  std::vector<std::pair<RougeScore, RougeScore>> scores(jobs.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    scores[i] = score_summary(read_file(std::get<1>(jobs[i])),
                              read_file(std::get<2>(jobs[i])), cfg.rouge());
  });

  std::string csv =
      "doc_id,rouge2_r,rouge2_p,rouge2_f,rougesu4_r,rougesu4_p,rougesu4_f\n";
  double sums[6] = {0, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& [r2, su4] = scores[i];
    const double row[6] = {r2.recall,  r2.precision,  r2.f1,
                           su4.recall, su4.precision, su4.f1};
    csv += std::get<0>(jobs[i]);
    for (int c = 0; c < 6; ++c) {
      csv += "," + fixed(row[c]);
      sums[c] += row[c];
    }
    csv += "\n";
  }
  csv += "MEAN";
  for (double s : sums) csv += "," + fixed(s / static_cast<double>(jobs.size()));
  csv += "\n";
  emit(cfg, out, csv);
  return 0;
}

// --- compare ---------------------------------------------------------------

std::map<std::string, double> read_score_column(const fs::path& path,
                                                const std::string& metric) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw Error("empty score file: " + path.string());
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(s);
    while (std::getline(row, cell, ',')) {
      if (!cell.empty() && cell.back() == '\r') cell.pop_back();
      cells.push_back(cell);
    }
    return cells;
  };
  const auto header = split(line);
  const auto col = std::find(header.begin(), header.end(), metric);
  if (col == header.end())
    throw Error("column '" + metric + "' not found in " + path.string());
  const auto index = static_cast<std::size_t>(col - header.begin());
  std::map<std::string, double> values;
  while (std::getline(in, line)) {
    const auto cells = split(line);
    if (cells.empty() || cells[0].empty() || cells[0] == "MEAN") continue;
    if (cells.size() <= index)
      throw Error("short row in " + path.string() + ": " + line);
    try {
      values[cells[0]] = std::stod(cells[index]);
    } catch (const std::exception&) {
      throw Error("bad number in " + path.string() + ": " + cells[index]);
    }
  }
  return values;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.a.empty() || cfg.b.empty()) throw Error("compare needs --a and --b");
  const auto a = read_score_column(cfg.a, cfg.metric);
  const auto b = read_score_column(cfg.b, cfg.metric);
  std::vector<std::pair<double, double>> pairs;
  double sum_a = 0, sum_b = 0;
  for (const auto& [id, value] : a) {
    auto it = b.find(id);
    if (it == b.end()) {
      err << "skipping " << id << ": missing from " << cfg.b << "\n";
      continue;
    }
    pairs.emplace_back(value, it->second);
    sum_a += value;
    sum_b += it->second;
  }
  if (pairs.empty()) throw Error("the score files share no document ids");
  const WilcoxonResult result = wilcoxon_signed_rank(pairs);
  json root = json::parse(wilcoxon_to_json(result));
  root["metric"] = cfg.metric;
  root["pairs"] = pairs.size();
  root["mean_a"] = sum_a / static_cast<double>(pairs.size());
  root["mean_b"] = sum_b / static_cast<double>(pairs.size());
  emit(cfg, out, root.dump(2) + "\n");
  return 0;
}

// --- topology --------------------------------------------------------------

int cmd_topology(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.input.empty()) throw Error("topology needs --input");
  const Document doc = load_document(cfg.input, cfg.surrogate, err);
  const PipelineResult run = run_pipeline(doc, cfg.pipeline());
  const TopologyReport report = small_world_report(run.graph, cfg.threads);
  if (cfg.format == "csv") {
    emit(cfg, out,
         "doc_id,epsilon," + topology_csv_header() + "\n" + doc.id() + "," +
             fixed(cfg.epsilon, 4) + "," + topology_to_csv_row(report) + "\n");
  } else {
    emit(cfg, out, topology_to_json(report));
  }
  return 0;
}

// Values from the JSON config apply only where the flag was not given.
void apply_config(CLI::App& app, RunConfig& cfg) {
  if (cfg.config.empty()) return;
  json root;
  try {
    root = json::parse(read_file(cfg.config));
  } catch (const json::exception& e) {
    throw Error(std::string("bad config file: ") + e.what());
  }
  auto unset = [&](const char* flag) {
    CLI::Option* opt = nullptr;
    for (CLI::App* sub : app.get_subcommands()) {
      try {
        opt = sub->get_option(flag);
      } catch (const CLI::OptionNotFound&) {
        continue;
      }
      if (opt->count() > 0) return false;
    }
    return true;
  };
  try {
    if (root.contains("epsilon") && unset("--epsilon"))
      cfg.epsilon = root["epsilon"].get<double>();
    if (root.contains("rate") && unset("--rate"))
      cfg.rate = root["rate"].get<double>();
    if (root.contains("epsilons") && unset("--epsilons"))
      cfg.epsilons = root["epsilons"].get<std::string>();
    if (root.contains("stem") && unset("--stem") && unset("--no-stem"))
      cfg.stem = root["stem"].get<bool>();
    if (root.contains("remove_stopwords") && unset("--remove-stopwords"))
      cfg.remove_stopwords = root["remove_stopwords"].get<bool>();
    if (root.contains("aggregate") && unset("--aggregate"))
      cfg.aggregate = root["aggregate"].get<std::string>();
    if (root.contains("surrogate") && unset("--surrogate"))
      cfg.surrogate = root["surrogate"].get<bool>();
    if (root.contains("threads") && unset("--threads"))
      cfg.threads = root["threads"].get<std::size_t>();
    if (root.contains("generic_types") && unset("--generic-types"))
      cfg.generic_types = root["generic_types"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(std::string("bad config value: ") + e.what());
  }
}

}  // namespace

std::vector<double> parse_range(const std::string& spec) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw DomainError("bad number in range '" + spec + "'");
    }
  };
  std::vector<double> values;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw DomainError("range must be start:end:step");
    const double start = number(parts[0]);
    const double end = number(parts[1]);
    const double step = number(parts[2]);
    if (step <= 0.0) throw DomainError("range step must be positive");
    for (long long i = 0;; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (v > end + 1e-9) break;
      // Snap to the decimal grid so 0.1 * 3 prints and thresholds as 0.3.
      values.push_back(std::round(v * 1e9) / 1e9);
    }
  } else {
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ',')) values.push_back(number(part));
  }
  if (values.empty()) throw DomainError("range '" + spec + "' is empty");
  return values;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Summarize documents through a small-world sentence graph"};
  app.require_subcommand(1);

  auto add_pipeline = [&](CLI::App* sub) {
    sub->add_option("--epsilon", cfg.epsilon, "meaningfulness threshold");
    sub->add_option("--rate", cfg.rate, "compression rate in (0, 1]");
    sub->add_option("--generic-types", cfg.generic_types,
                    "semantic types to discard");
    sub->add_flag("--surrogate", cfg.surrogate,
                  "annotate plain text with the surrogate tokenizer");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads (0 = all)");
    sub->add_option("--output,-o", cfg.output, "output file (default stdout)");
    sub->add_option("--config", cfg.config, "JSON file mirroring the flags");
  };
  auto add_rouge = [&](CLI::App* sub) {
    sub->add_flag("--stem,!--no-stem", cfg.stem, "Porter-stem tokens");
    sub->add_flag("--remove-stopwords", cfg.remove_stopwords);
    sub->add_option("--aggregate", cfg.aggregate)
        ->check(CLI::IsMember({"recall", "f1"}));
  };

  CLI::App* summarize = app.add_subcommand("summarize", "summarize a document");
  summarize->add_option("--input,-i", cfg.input)->required();
  summarize->add_flag("--explain", cfg.explain,
                      "write meaning table, graph and ranking next to --output");
  summarize->add_option("--dump-meaning", cfg.dump_meaning);
  summarize->add_option("--graph-out", cfg.graph_out);
  summarize->add_option("--format", cfg.format)
      ->check(CLI::IsMember({"dot", "json"}));
  add_pipeline(summarize);
  add_common(summarize);

  CLI::App* sweep = app.add_subcommand("sweep", "ROUGE and topology across epsilon");
  sweep->add_option("--corpus", cfg.corpus)->required();
  sweep->add_option("--models", cfg.models)->required();
  sweep->add_option("--epsilons", cfg.epsilons, "start:end:step or list");
  add_pipeline(sweep);
  add_common(sweep);
  add_rouge(sweep);

  CLI::App* evaluate = app.add_subcommand("evaluate", "ROUGE-2 and ROUGE-SU4 scores");
  evaluate->add_option("--input,-i", cfg.input, "summary file or directory")
      ->required();
  evaluate->add_option("--models", cfg.models, "model summary file or directory")
      ->required();
  add_common(evaluate);
  add_rouge(evaluate);

  CLI::App* compare = app.add_subcommand("compare", "Wilcoxon signed-rank test");
  compare->add_option("--a", cfg.a, "scores of system A (evaluate CSV)")->required();
  compare->add_option("--b", cfg.b, "scores of system B (evaluate CSV)")->required();
  compare->add_option("--metric", cfg.metric, "score column");
  add_common(compare);

  CLI::App* topology = app.add_subcommand("topology", "small-world diagnostics");
  topology->add_option("--input,-i", cfg.input)->required();
  topology->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  add_pipeline(topology);
  add_common(topology);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    apply_config(app, cfg);
    if (*summarize) return cmd_summarize(cfg, out, err);
    if (*sweep) return cmd_sweep(cfg, out, err);
    if (*evaluate) return cmd_evaluate(cfg, out, err);
    if (*compare) return cmd_compare(cfg, out, err);
    if (*topology) return cmd_topology(cfg, out, err);
  } catch (const MissingPath& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace swsum
