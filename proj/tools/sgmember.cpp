// sgmember: subgroup membership in finitely presented groups.
//
//   sgmember solve     --presentation P --subgroup S --word W [budget flags]
//   sgmember check     --presentation P --subgroup S --word W --certificate C
//   sgmember stallings --presentation P --subgroup S [--query W]...
//   sgmember separate  --presentation P --word W1 --word2 W2
//
// Machine output goes to stdout (or --output), a summary to stderr.
// Exit codes: 0 decided / check passed, 10 undecided, 1 input error,
// 2 check failed or oracle disagreement.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "sgm/bs_oracle.hpp"
#include "sgm/certificate.hpp"
#include "sgm/engine.hpp"
#include "sgm/presentation_io.hpp"
#include "sgm/separation.hpp"
#include "sgm/stallings.hpp"

namespace {

constexpr int kDecided = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailed = 2;
constexpr int kUndecided = 10;

struct Config {
  std::string presentation;
  std::string subgroup;
  std::string word;
  std::string word2;
  std::string certificate;
  std::vector<std::string> queries;
  std::string output;
  sgm::Budget budget;
  bool oracle = false;
  bool concurrent = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError(path + ": cannot open file");
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(Config const& c, std::string const& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) {
    throw UsageError(c.output + ": cannot write file");
  }
  out << text;
}

std::shared_ptr<sgm::Presentation const> load_presentation(Config const& c) {
  return std::make_shared<sgm::Presentation const>(
      sgm::read_presentation_file(c.presentation));
}

sgm::Word parse_flag_word(std::string const& flag, std::string const& text,
                          sgm::AlphabetPtr const& alphabet) {
  try {
    return sgm::parse_word(text, alphabet);
  } catch (sgm::ParseError const& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// "# oracle: bs-fiber M N" in the subgroup file declares that the
// presentation is F(a,b) x F(a,b) and the subgroup is the fibre product over
// BS(M, N).
std::optional<sgm::BSGroup> oracle_pragma(std::string const& path) {
  std::ifstream in(path);
  std::regex pragma(R"(^\s*#\s*oracle:\s*bs-fiber\s+(-?\d+)\s+(-?\d+)\s*$)");
  std::string line;
  std::smatch match;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (std::regex_match(line, match, pragma)) {
      return sgm::BSGroup(std::stol(match[1]), std::stol(match[2]));
    }
  }
  return std::nullopt;
}

// Splits a word of the four-generator product into its two coordinates.
std::pair<sgm::Word, sgm::Word> coordinates(sgm::BSGroup const& g, sgm::Word const& w) {
  if (w.alphabet()->size() != 4) {
    throw UsageError("oracle: the presentation must have exactly four generators");
  }
  sgm::Letters first, second;
  for (auto x : w.letters()) {
    auto& out = x.index() < 2 ? first : second;
    out.push_back(sgm::Letter::generator(x.index() % 2, x.is_inverse()));
  }
  return {sgm::Word(g.alphabet(), std::move(first)),
          sgm::Word(g.alphabet(), std::move(second))};
}

int cmd_solve(Config const& c) {
  auto p = load_presentation(c);
  auto s = sgm::read_generating_set_file(c.subgroup, p);
  auto g = parse_flag_word("--word", c.word, p->alphabet());
  sgm::SolveOptions options;
  options.concurrent = c.concurrent;
  sgm::SolveStats stats;
  auto cert = sgm::solve(s, g, c.budget, options, &stats);
  emit(c, sgm::format_certificate(cert, *p->alphabet()));

  std::cerr << "verdict: " << sgm::to_string(cert.verdict) << "\n"
            << "steps: " << stats.steps << " (quotient units " << stats.quotient_units
            << ", representations " << stats.representations << ", diagonal cells "
            << stats.cells << ")\n";
  if (cert.non_member) {
    std::cerr << "separating quotient of degree " << cert.non_member->degree << ":";
    for (std::size_t i = 0; i < cert.non_member->images.size(); ++i) {
      std::cerr << " " << p->alphabet()->name(i) << "->"
                << cert.non_member->images[i].to_cycles();
    }
    std::cerr << "\n";
  }

  if (c.oracle) {
    auto bs = oracle_pragma(c.subgroup);
    if (!bs) {
      std::cerr << "oracle: subgroup file declares no Baumslag-Solitar target; skipped\n";
    } else {
      auto [w1, w2] = coordinates(*bs, sgm::free_reduce(g));
      bool member = sgm::fiber_member_oracle(*bs, w1, w2);
      std::cerr << "oracle: " << (member ? "member" : "non_member") << "\n";
      if (cert.verdict != sgm::Verdict::undecided &&
          member != (cert.verdict == sgm::Verdict::member)) {
        std::cerr << "oracle disagrees with the verdict\n";
        return kCheckFailed;
      }
    }
  }
  return cert.verdict == sgm::Verdict::undecided ? kUndecided : kDecided;
}

int cmd_check(Config const& c) {
  auto p = load_presentation(c);
  auto s = sgm::read_generating_set_file(c.subgroup, p);
  auto g = parse_flag_word("--word", c.word, p->alphabet());
  auto cert = sgm::parse_certificate(slurp(c.certificate), p->alphabet());
  bool ok = sgm::check_certificate(s, g, cert);
  std::cerr << "certificate (" << sgm::to_string(cert.verdict) << "): "
            << (ok ? "valid" : "INVALID") << "\n";
  emit(c, ok ? "valid\n" : "invalid\n");
  return ok ? kDecided : kCheckFailed;
}

int cmd_stallings(Config const& c) {
  auto p = load_presentation(c);
  if (!p->is_free()) {
    throw UsageError(c.presentation + ": stallings works on free groups only");
  }
  auto s = sgm::read_generating_set_file(c.subgroup, p);
  auto graph = sgm::build_graph(s.generators(), p->alphabet());
  auto completion = sgm::hall_completion(graph);
  auto index = sgm::graph_index(graph);

  std::ostringstream out;
  out << graph.dump();
  out << "rank: " << sgm::graph_rank(graph) << "\n";
  out << "index: " << (index ? std::to_string(*index) : "infinite") << "\n";
  out << "completion index: " << completion.index() << "\n";
  out << "completion rank: " << completion.rank() << "\n";
  for (auto const& q : c.queries) {
    auto w = parse_flag_word("--query", q, p->alphabet());
    out << "query " << sgm::print_word(w) << ": member "
        << (sgm::graph_member(graph, w) ? "yes" : "no") << "; retract ";
    if (completion.in_completion(w)) {
      out << sgm::print_word(completion.retract(w)) << "\n";
    } else {
      out << "undefined (not in completion)\n";
    }
  }
  emit(c, out.str());
  std::cerr << "graph: " << graph.num_vertices() << " vertices, " << graph.num_edges()
            << " edges\n";
  return kDecided;
}

int cmd_separate(Config const& c) {
  auto p = load_presentation(c);
  if (!p->is_free()) {
    throw UsageError(c.presentation + ": separate works on free groups only");
  }
  auto g1 = parse_flag_word("--word", c.word, p->alphabet());
  auto g2 = parse_flag_word("--word2", c.word2, p->alphabet());
  if (sgm::are_freely_equal(g1, g2)) {
    throw UsageError("the two words are equal; nothing to separate");
  }
  auto sep = sgm::separate_from_product_diagonal(p, g1, g2);
  auto const& alphabet = *sep.product.combined()->alphabet();
  nlohmann::ordered_json j;
  j["degree"] = sep.rep.degree();
  j["generators"] = alphabet.names();
  auto images = nlohmann::ordered_json::array();
  for (auto const& img : sep.rep.images()) {
    images.push_back(img.images());
  }
  j["images"] = std::move(images);
  emit(c, j.dump(2) + "\n");

  std::cerr << "factor quotient of degree " << sep.factor.degree() << ", product degree "
            << sep.rep.degree() << ":";
  for (std::size_t i = 0; i < sep.rep.images().size(); ++i) {
    std::cerr << " " << alphabet.name(i) << "->" << sep.rep.images()[i].to_cycles();
  }
  std::cerr << "\n";
  return kDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup membership in finitely presented groups"};
  app.require_subcommand(1);
  Config c;

  auto add_inputs = [&](CLI::App* sub, bool subgroup, bool word) {
    sub->add_option("--presentation", c.presentation, "presentation file")->required();
    if (subgroup) {
      sub->add_option("--subgroup", c.subgroup, "generating set file")->required();
    }
    if (word) {
      sub->add_option("--word", c.word, "word g")->required();
    }
    sub->add_option("--output", c.output, "write machine output here instead of stdout");
  };

  auto* solve = app.add_subcommand("solve", "decide g in <S> within a budget");
  add_inputs(solve, true, true);
  solve->add_option("--max-degree", c.budget.max_degree, "quotient ladder cap")
      ->capture_default_str();
  solve->add_option("--max-steps", c.budget.max_steps, "total schedule steps")
      ->capture_default_str();
  solve->add_option("--max-product-size", c.budget.max_product_size,
                    "bound on relator product size")
      ->capture_default_str();
  solve->add_flag("--oracle", c.oracle,
                  "cross-check against the Baumslag-Solitar oracle declared in the subgroup file");
  solve->add_flag("--concurrent", c.concurrent,
                  "run both searches on separate threads (certificate not reproducible)");

  auto* check = app.add_subcommand("check", "verify a certificate");
  add_inputs(check, true, true);
  check->add_option("--certificate", c.certificate, "certificate file")->required();

  auto* stallings = app.add_subcommand("stallings", "subgroup graph report");
  add_inputs(stallings, true, false);
  stallings->add_option("--query", c.queries, "word to test and retract");

  auto* separate = app.add_subcommand("separate", "separate (g1, g2) from the diagonal");
  add_inputs(separate, false, true);
  separate->add_option("--word2", c.word2, "second word")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve) {
      return cmd_solve(c);
    }
    if (*check) {
      return cmd_check(c);
    }
    if (*stallings) {
      return cmd_stallings(c);
    }
    return cmd_separate(c);
  } catch (sgm::CertificateFormatError const& e) {
    std::cerr << c.certificate << ": " << e.what() << "\n";
  } catch (sgm::InputError const& e) {
    std::cerr << e.what() << "\n";
  } catch (UsageError const& e) {
    std::cerr << e.what() << "\n";
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kInputError;
}
