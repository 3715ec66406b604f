#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "t2/errors.hpp"
#include "t2/io.hpp"
#include "t2/relations.hpp"

namespace t2 {
namespace {

struct Word {
  std::string text;
  int line = 1;
  int column = 1;
};

// Whitespace-separated words with positions, one vector per line, comments
// stripped. Blank lines are dropped.
std::vector<std::vector<Word>> split_words(const std::string& text) {
  std::vector<std::vector<Word>> out;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::vector<Word> words;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      words.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
    if (!words.empty()) out.push_back(std::move(words));
  }
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Exact rational from an integer, a fraction a/b, or a finite decimal.
mpq_class parse_rational(const Word& word) {
  std::string body = word.text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  mpq_class value;
  size_t slash = body.find('/');
  size_t dot = body.find('.');
  if (slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den) || den.find_first_not_of('0') == std::string::npos)
      throw ParseError(word.line, word.column, "a rational number");
    value = mpq_class(mpz_class(num), mpz_class(den));
  } else if (dot != std::string::npos) {
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw ParseError(word.line, word.column, "a rational number");
    mpz_class den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = mpq_class(mpz_class(whole.empty() ? "0" : whole) * den + mpz_class(frac), den);
  } else {
    if (!all_digits(body)) throw ParseError(word.line, word.column, "a rational number");
    value = mpq_class(mpz_class(body));
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

Matrix read_rows(const std::vector<std::vector<Word>>& lines, size_t& at, const char* label,
                 int rows, int cols) {
  Matrix out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (at >= lines.size())
      throw ParseError(lines.back().front().line + 1, 1, std::string(label) + " row");
    const std::vector<Word>& words = lines[at];
    if (words[0].text != label)
      throw ParseError(words[0].line, words[0].column, std::string(label) + " row");
    if (static_cast<int>(words.size()) != cols + 1)
      throw ParseError(words[0].line, words[0].column,
                       std::to_string(cols) + " entries after " + label);
    for (int c = 0; c < cols; ++c) out.at(r, c) = parse_rational(words[static_cast<size_t>(c) + 1]);
    ++at;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  return parse_rational(Word{text, 1, 1});
}

Model load_model(const std::string& text) {
  std::vector<std::vector<Word>> lines = split_words(text);
  if (lines.empty()) throw ParseError(1, 1, "a dim row");
  size_t at = 0;
  const std::vector<Word>& head = lines[at];
  if (head[0].text != "dim") throw ParseError(head[0].line, head[0].column, "a dim row");
  if (head.size() != 2 || !all_digits(head[1].text))
    throw ParseError(head[0].line, head[0].column, "dim followed by one positive integer");
  int dim = std::stoi(head[1].text);
  if (dim < 1 || dim > 16)
    throw ParseError(head[1].line, head[1].column, "a dimension between 1 and 16");
  ++at;
  Matrix form = read_rows(lines, at, "form", dim, dim);
  if (at < lines.size()) {
    Matrix crossing = read_rows(lines, at, "crossing", dim * dim, dim * dim);
    if (at < lines.size())
      throw ParseError(lines[at][0].line, lines[at][0].column, "end of file");
    return Model::linear(dim, form, crossing);
  }
  return Model::linear(dim, form);
}

Model load_model_file(const std::string& path) { return load_model(read_file(path)); }

int load_catalog(const std::string& text) {
  std::vector<std::vector<Word>> lines = split_words(text);
  int added = 0;
  for (const std::vector<Word>& words : lines) {
    if (words[0].text != "rule")
      throw ParseError(words[0].line, words[0].column, "a rule line");
    if (words.size() < 4 || words[2].text != ":")
      throw ParseError(words[0].line, words[0].column, "rule NAME : LHS = RHS");
    std::string name = words[1].text;
    std::string lhs_text;
    std::string rhs_text;
    bool seen_equals = false;
    for (size_t i = 3; i < words.size(); ++i) {
      if (words[i].text == "=" && !seen_equals) {
        seen_equals = true;
        continue;
      }
      (seen_equals ? rhs_text : lhs_text) += words[i].text + " ";
    }
    if (!seen_equals || lhs_text.empty() || rhs_text.empty())
      throw ParseError(words[0].line, words[0].column, "rule NAME : LHS = RHS");
    ParsedTerm lhs_term = parse_term(lhs_text);
    ParsedTerm rhs_term = parse_term(rhs_text);
    if (!std::holds_alternative<TwoTerm>(lhs_term) || !std::holds_alternative<TwoTerm>(rhs_term))
      throw ParseError(words[0].line, words[0].column, "2-morphisms on both sides");
    TwoTerm lhs = std::get<TwoTerm>(lhs_term);
    TwoTerm rhs = std::get<TwoTerm>(rhs_term);
    TwoType lhs_type = typecheck(lhs);
    TwoType rhs_type = typecheck(rhs);
    if (lhs_type.source != rhs_type.source || lhs_type.target != rhs_type.target)
      throw NotParallelError("rule " + name + " relates cells with different boundaries");
    RelationSchema schema;
    schema.name = name;
    schema.description = "loaded from a catalog file";
    schema.build = [name, lhs, rhs](std::vector<RelationArg>) {
      return RelationInstance{name, {}, lhs, rhs};
    };
    register_schema(std::move(schema));
    ++added;
  }
  return added;
}

int load_catalog_file(const std::string& path) { return load_catalog(read_file(path)); }

}  // namespace t2
