#include "chainops/nop.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace chainops {
namespace {

struct Token {
  std::string_view text;
  int line;
  int column;
};

// Splits into whitespace separated tokens, dropping comment lines.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      std::vector<Token> toks;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        toks.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
        i = j;
      }
      if (!toks.empty()) lines.push_back(std::move(toks));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

bool to_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

int parse_int_token(const Token& t, const std::string& what) {
  int v = 0;
  if (!to_int(t.text, v)) {
    throw ParseError("expected " + what + ", found '" + std::string(t.text) + "'", t.line, t.column);
  }
  return v;
}

int parse_keyed(const Token& t, std::string_view key) {
  if (t.text.substr(0, key.size()) != key) {
    throw ParseError("expected '" + std::string(key) + "<int>', found '" + std::string(t.text) + "'",
                     t.line, t.column);
  }
  Token rest{t.text.substr(key.size()), t.line, t.column + static_cast<int>(key.size())};
  return parse_int_token(rest, "an integer after '" + std::string(key) + "'");
}

}  // namespace

std::string write_nop(const OpTable& op) {
  std::ostringstream os;
  os << "NOP 1\n";
  os << "k=" << op.k() << " n=" << op.arity() << "\n";
  const std::size_t row = static_cast<std::size_t>(op.k());
  for (std::size_t i = 0; i < op.size(); ++i) {
    os << op.at(i) << ((i + 1) % row == 0 ? '\n' : ' ');
  }
  return os.str();
}

OpTable parse_nop(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("empty input, expected 'NOP 1' header", 1, 1);

  const auto& header = lines[0];
  if (header[0].text != "NOP") {
    throw ParseError("expected 'NOP' magic, found '" + std::string(header[0].text) + "'",
                     header[0].line, header[0].column);
  }
  if (header.size() != 2) {
    throw ParseError("header must be 'NOP <version>'", header[0].line, header[0].column);
  }
  const int version = parse_int_token(header[1], "a version number");
  if (version != 1) {
    throw ParseError("unknown NOP version " + std::to_string(version), header[1].line,
                     header[1].column);
  }

  if (lines.size() < 2) throw ParseError("missing 'k=<k> n=<n>' line", header[0].line + 1, 1);
  const auto& dims = lines[1];
  if (dims.size() != 2) {
    throw ParseError("expected 'k=<k> n=<n>'", dims[0].line, dims[0].column);
  }
  const int k = parse_keyed(dims[0], "k=");
  const int n = parse_keyed(dims[1], "n=");
  if (k < 1) throw ParseError("k must be at least 1", dims[0].line, dims[0].column);
  if (n < 1) throw ParseError("n must be at least 1", dims[1].line, dims[1].column);

  std::size_t count = 0;
  try {
    count = checked_power(k, n);
  } catch (const ResourceError& e) {
    throw ParseError(e.what(), dims[0].line, dims[0].column);
  }

  std::vector<Element> values;
  values.reserve(count);
  int last_line = dims[0].line;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    for (const Token& t : lines[li]) {
      if (values.size() == count) {
        throw ParseError("too many values, expected " + std::to_string(count), t.line, t.column);
      }
      const int v = parse_int_token(t, "a table value");
      if (v < 1 || v > k) {
        throw ParseError("value " + std::to_string(v) + " is outside 1.." + std::to_string(k), t.line,
                         t.column);
      }
      values.push_back(v);
      last_line = t.line;
    }
  }
  if (values.size() != count) {
    throw ParseError("expected " + std::to_string(count) + " values, found " +
                         std::to_string(values.size()),
                     last_line + 1, 1);
  }
  return OpTable(FiniteChain(k), n, std::move(values));
}

OpTable read_nop_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_nop(ss.str());
}

void write_nop_file(const std::filesystem::path& path, const OpTable& op) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << write_nop(op);
}

std::vector<Element> parse_element_list(std::string_view text) {
  std::vector<Element> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view item = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    int v = 0;
    if (!to_int(item, v)) {
      throw ParseError("expected an integer, found '" + std::string(item) + "'", 1,
                       static_cast<int>(pos) + 1);
    }
    out.push_back(v);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string format_ordering(const LinearOrdering& ord) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ord.seq().size(); ++i) os << (i ? "," : "") << ord.seq()[i];
  return os.str();
}

LinearOrdering parse_ordering(std::string_view text) {
  auto seq = parse_element_list(text);
  const int k = static_cast<int>(seq.size());
  try {
    return LinearOrdering(FiniteChain(k), std::move(seq));
  } catch (const ConstructionError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string format_gmap(const GMap& gm) {
  std::ostringstream os;
  os << "e=" << gm.neutral() << "; g=";
  for (std::size_t i = 0; i < gm.values().size(); ++i) os << (i ? "," : "") << gm.values()[i];
  return os.str();
}

GMap parse_gmap(const FiniteChain& chain, std::string_view text) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected 'e=<e>; g=<list>'", 1, 1);
  std::string_view head = text.substr(0, semi);
  std::string_view tail = text.substr(semi + 1);
  while (!tail.empty() && tail.front() == ' ') tail.remove_prefix(1);
  if (head.substr(0, 2) != "e=") throw ParseError("expected 'e=' prefix", 1, 1);
  if (tail.substr(0, 2) != "g=") {
    throw ParseError("expected 'g=' after ';'", 1, static_cast<int>(semi) + 2);
  }
  int e = 0;
  if (!to_int(head.substr(2), e)) throw ParseError("bad neutral element", 1, 3);
  try {
    return GMap(chain, e, parse_element_list(tail.substr(2)));
  } catch (const ConstructionError& err) {
    throw ParseError(err.what(), 1, 1);
  }
}

}  // namespace chainops
