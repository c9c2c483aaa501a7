#include "sgm/presentation_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sgm {

namespace {

struct Line {
  std::string keyword;
  std::string rest;
  std::size_t rest_column;  // 1-based column where rest starts
};

// Returns false for blank and comment lines. A '#' starts a comment anywhere.
bool split_line(std::string raw, Line& out) {
  raw = raw.substr(0, raw.find('#'));
  std::size_t pos = 0;
  while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) {
    ++pos;
  }
  if (pos == raw.size() || raw[pos] == '#') {
    return false;
  }
  std::size_t start = pos;
  while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) {
    ++pos;
  }
  out.keyword = raw.substr(start, pos - start);
  out.rest = raw.substr(pos);
  out.rest_column = pos + 1;
  return true;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') {
    s.pop_back();
  }
  return s;
}

Word parse_at(std::string const& text, AlphabetPtr const& alphabet,
              std::string const& source, std::size_t line, std::size_t column) {
  try {
    return parse_word(text, alphabet);
  } catch (ParseError const& e) {
    std::string msg = e.what();
    msg = msg.substr(0, msg.rfind(" (column"));
    throw InputError(source, line, column + e.column() - 1, msg);
  }
}

std::ifstream open(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError(path.string(), 0, 0, "cannot open file");
  }
  return in;
}

}  // namespace

Presentation read_presentation(std::istream& in, std::string const& source) {
  AlphabetPtr alphabet;
  std::vector<Letters> relators;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    raw = strip_cr(raw);
    Line line;
    if (!split_line(raw, line)) {
      continue;
    }
    std::size_t keyword_column = line.rest_column - line.keyword.size();
    if (line.keyword == "gens") {
      if (alphabet) {
        throw InputError(source, line_no, keyword_column, "duplicate gens line");
      }
      std::istringstream names_in(line.rest);
      std::vector<std::string> names;
      for (std::string n; names_in >> n;) {
        names.push_back(n);
      }
      try {
        alphabet = make_alphabet(std::move(names));
      } catch (std::invalid_argument const& e) {
        throw InputError(source, line_no, line.rest_column, e.what());
      }
    } else if (line.keyword == "rel") {
      if (!alphabet) {
        throw InputError(source, line_no, keyword_column,
                         "rel before gens line");
      }
      Word r = parse_at(line.rest, alphabet, source, line_no, line.rest_column);
      if (r.empty()) {
        throw InputError(source, line_no, line.rest_column,
                         "relator reduces to the empty word");
      }
      relators.push_back(r.letters());
    } else {
      throw InputError(source, line_no, keyword_column,
                       "unknown keyword \"" + line.keyword + "\"");
    }
  }
  if (!alphabet) {
    throw InputError(source, line_no, 0, "missing gens line");
  }
  return Presentation(alphabet, std::move(relators));
}

Presentation read_presentation_file(std::filesystem::path const& path) {
  auto in = open(path);
  return read_presentation(in, path.string());
}

GeneratingSet read_generating_set(std::istream& in,
                                  std::shared_ptr<Presentation const> p,
                                  std::string const& source) {
  std::vector<Letters> gens;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    raw = strip_cr(raw);
    Line line;
    if (!split_line(raw, line)) {
      continue;
    }
    if (line.keyword != "gen") {
      throw InputError(source, line_no, line.rest_column - line.keyword.size(),
                       "unknown keyword \"" + line.keyword + "\"");
    }
    gens.push_back(
        parse_at(line.rest, p->alphabet(), source, line_no, line.rest_column)
            .letters());
  }
  return GeneratingSet(std::move(p), std::move(gens));
}

GeneratingSet read_generating_set_file(std::filesystem::path const& path,
                                       std::shared_ptr<Presentation const> p) {
  auto in = open(path);
  return read_generating_set(in, std::move(p), path.string());
}

std::string format_presentation(Presentation const& p) {
  std::ostringstream out;
  out << "gens";
  for (auto const& n : p.alphabet()->names()) {
    out << ' ' << n;
  }
  out << '\n';
  for (auto const& r : p.relators()) {
    out << "rel " << print_letters(r, *p.alphabet()) << '\n';
  }
  return out.str();
}

std::string format_generating_set(GeneratingSet const& s) {
  std::ostringstream out;
  for (auto const& g : s.generators()) {
    out << "gen " << print_letters(g, *s.presentation()->alphabet()) << '\n';
  }
  return out.str();
}

}  // namespace sgm
