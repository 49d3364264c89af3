#include "swsum/pipeline.h"

namespace swsum {

PipelineResult run_pipeline(const Document& doc,
                            const PipelineOptions& options) {
  PipelineResult result;
  result.document = filter_generic_types(doc, options.generic_types);
  result.meaning =
      build_meaning_table(result.document, options.epsilon, options.threads);
  result.graph = build_graph(result.document, result.meaning.meaningful_set());
  result.summary = select_summary(degree_ranking(result.graph),
                                  result.document.size(),
                                  options.compression_rate);
  return result;
}

PipelineResult rerun_at(const PipelineResult& base, double epsilon,
                        double compression_rate) {
  PipelineResult result;
  result.document = base.document;
  result.meaning = rethreshold(base.meaning, epsilon);
  result.graph = build_graph(result.document, result.meaning.meaningful_set());
  result.summary = select_summary(degree_ranking(result.graph),
                                  result.document.size(), compression_rate);
  return result;
}

std::string summary_text(const Document& doc, const Summary& summary) {
  std::string out;
  for (std::size_t index : summary.selected) {
    for (char c : doc.sentences()[index].text)
      out += (c == '\n' || c == '\r') ? ' ' : c;
    out += '\n';
  }
  return out;
}

}  // namespace swsum
