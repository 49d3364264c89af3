#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "swsum/corpus.h"
#include "swsum/graph.h"
#include "swsum/meaning.h"

namespace swsum {

struct PipelineOptions {
  double epsilon = 0.3;
  double compression_rate = 0.3;
  std::set<std::string> generic_types = default_generic_types();
  std::size_t threads = 1;
};

struct PipelineResult {
  Document document;  // after the generic-type filter
  MeaningTable meaning;
  SentenceGraph graph;
  Summary summary;
};

// filter -> meaning table -> sentence graph -> degree ranking -> selection.
PipelineResult run_pipeline(const Document& doc, const PipelineOptions& options);

// Summary rerun at another epsilon, reusing a filtered document and its table.
PipelineResult rerun_at(const PipelineResult& base, double epsilon,
                        double compression_rate);

// Selected sentences, one per line, in document order.
std::string summary_text(const Document& doc, const Summary& summary);

}  // namespace swsum
