#pragma once

#include <string>
#include <vector>

namespace rhf {

struct CorpusRecord {
  std::string name;
  int strands = 0;
  std::vector<int> word;
  int line = 0;
  std::string error;  // non-empty when the line could not be read
};

// One JSON object per line, or a tab/comma separated table with a header
// naming the columns name, strands, word. Blank lines and '#' comments are skipped.
std::vector<CorpusRecord> parse_corpus(const std::string& text);
std::vector<CorpusRecord> read_corpus(const std::string& path);

}  // namespace rhf
