#include "rhf/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rhf/errors.hpp"

namespace rhf {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\"");
  auto e = s.find_last_not_of(" \t\r\"");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<int> parse_word(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == ',' || c == '[' || c == ']' || c == ';') c = ' ';
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    out.push_back(v);
  }
  return out;
}

CorpusRecord from_json_line(const std::string& line, int lineno) {
  CorpusRecord r;
  r.line = lineno;
  try {
    auto j = nlohmann::json::parse(line);
    for (const auto& [key, _] : j.items())
      if (key != "name" && key != "strands" && key != "word") throw InputError("unknown key '" + key + "'");
    r.name = j.at("name").get<std::string>();
    r.strands = j.at("strands").get<int>();
    const auto& w = j.at("word");
    r.word = w.is_string() ? parse_word(w.get<std::string>()) : w.get<std::vector<int>>();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::vector<CorpusRecord> parse_corpus(const std::string& text) {
  std::vector<CorpusRecord> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool table = false, header_done = false;
  char delim = '\t';
  int col_name = -1, col_strands = -1, col_word = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (!header_done && !table) {
      if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] == '{') {
        header_done = true;
      } else {
        table = true;
        delim = line.find('\t') != std::string::npos ? '\t' : ',';
        std::vector<std::string> cols;
        std::istringstream hs(line);
        for (std::string c; std::getline(hs, c, delim);) cols.push_back(strip(c));
        for (int k = 0; k < static_cast<int>(cols.size()); ++k) {
          if (cols[k] == "name") col_name = k;
          if (cols[k] == "strands") col_strands = k;
          if (cols[k] == "word") col_word = k;
        }
        if (col_name < 0 || col_strands < 0 || col_word < 0)
          throw InputError("corpus table header must name the columns name, strands, word");
        header_done = true;
        continue;
      }
    }
    if (!table) {
      out.push_back(from_json_line(line, lineno));
      continue;
    }
    CorpusRecord r;
    r.line = lineno;
    std::vector<std::string> fields;
    // quoted fields may contain the delimiter
    std::string cur;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      else if (c == delim && !quoted) fields.push_back(cur), cur.clear();
      else cur += c;
    }
    fields.push_back(cur);
    const int ncols = std::max({col_name, col_strands, col_word}) + 1;
    if (static_cast<int>(fields.size()) > ncols && col_word == ncols - 1) {
      // unquoted comma-separated word in the last column
      for (std::size_t k = ncols; k < fields.size(); ++k) fields[col_word] += "," + fields[k];
      fields.resize(ncols);
    }
    try {
      if (static_cast<int>(fields.size()) < ncols) throw InputError("missing columns");
      r.name = strip(fields[col_name]);
      std::size_t used = 0;
      std::string st = strip(fields[col_strands]);
      r.strands = std::stoi(st, &used);
      if (used != st.size()) throw InputError("bad strand count '" + st + "'");
      r.word = parse_word(fields[col_word]);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CorpusRecord> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

}  // namespace rhf
