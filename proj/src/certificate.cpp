#include "sgm/certificate.hpp"

#include <json.hpp>

#include "sgm/perm_group.hpp"
#include "sgm/quotients.hpp"

namespace sgm {

using Json = nlohmann::ordered_json;

void Budget::validate() const {
  if (max_degree == 0 || max_steps == 0 || max_product_size == 0) {
    throw std::invalid_argument("budget fields must be positive");
  }
}

char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::member:
      return "member";
    case Verdict::non_member:
      return "non_member";
    case Verdict::undecided:
      return "undecided";
  }
  return "?";
}

namespace {

constexpr char const* kFields[] = {"verdict", "subgroup_word_indices",
                                   "product_factors", "perm_rep", "budget"};

Json budget_json(Budget const& b) {
  Json j;
  j["max_degree"] = b.max_degree;
  j["max_steps"] = b.max_steps;
  j["max_product_size"] = b.max_product_size;
  return j;
}

[[noreturn]] void malformed(std::string const& what) {
  throw CertificateFormatError("malformed certificate: " + what);
}

void require_keys(Json const& j, std::vector<std::string> const& keys,
                  std::string const& where) {
  if (!j.is_object() || j.size() != keys.size()) {
    malformed(where + " must be an object with fields in canonical order");
  }
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    if (it.key() != keys[i]) {
      malformed(where + ": expected field \"" + keys[i] + "\", found \"" +
                it.key() + "\"");
    }
  }
}

std::int64_t integer(Json const& j, std::string const& where) {
  if (!j.is_number_integer()) {
    malformed(where + " must be an integer");
  }
  return j.get<std::int64_t>();
}

std::uint64_t positive(Json const& j, std::string const& where) {
  auto v = integer(j, where);
  if (v <= 0) {
    malformed(where + " must be positive");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::string format_certificate(Certificate const& cert, Alphabet const& alphabet) {
  Json j;
  j["verdict"] = to_string(cert.verdict);
  if (cert.member) {
    j["subgroup_word_indices"] = cert.member->subgroup_word_indices;
    Json factors = Json::array();
    for (auto const& f : cert.member->product.factors) {
      Json factor;
      factor["conjugator"] = print_letters(f.conjugator, alphabet);
      factor["relator_index"] = f.relator;
      factor["sign"] = f.sign;
      factors.push_back(std::move(factor));
    }
    j["product_factors"] = std::move(factors);
  } else {
    j["subgroup_word_indices"] = nullptr;
    j["product_factors"] = nullptr;
  }
  if (cert.non_member) {
    Json rep;
    rep["degree"] = cert.non_member->degree;
    Json images = Json::array();
    for (auto const& p : cert.non_member->images) {
      images.push_back(p.images());
    }
    rep["images"] = std::move(images);
    j["perm_rep"] = std::move(rep);
  } else {
    j["perm_rep"] = nullptr;
  }
  j["budget"] = cert.budget ? budget_json(*cert.budget) : Json(nullptr);
  return j.dump(2) + "\n";
}

Certificate parse_certificate(std::string const& text, AlphabetPtr const& alphabet) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (Json::parse_error const& e) {
    malformed(std::string("not valid JSON (") + e.what() + ")");
  }
  require_keys(j, {std::begin(kFields), std::end(kFields)}, "certificate");

  Certificate cert;
  auto const& verdict = j["verdict"];
  if (!verdict.is_string()) {
    malformed("verdict must be a string");
  }
  auto v = verdict.get<std::string>();
  if (v == "member") {
    cert.verdict = Verdict::member;
  } else if (v == "non_member") {
    cert.verdict = Verdict::non_member;
  } else if (v == "undecided") {
    cert.verdict = Verdict::undecided;
  } else {
    malformed("unknown verdict \"" + v + "\"");
  }

  bool want_member = cert.verdict == Verdict::member;
  bool want_rep = cert.verdict == Verdict::non_member;
  bool want_budget = cert.verdict == Verdict::undecided;
  auto const& indices = j["subgroup_word_indices"];
  auto const& factors = j["product_factors"];
  auto const& rep = j["perm_rep"];
  auto const& budget = j["budget"];
  if (indices.is_null() == want_member || factors.is_null() == want_member ||
      rep.is_null() == want_rep || budget.is_null() == want_budget) {
    malformed("payload does not match verdict \"" + v + "\"");
  }

  if (want_member) {
    MemberWitness w;
    if (!indices.is_array()) {
      malformed("subgroup_word_indices must be an array");
    }
    for (auto const& i : indices) {
      auto index = integer(i, "subgroup word index");
      if (index == 0 || index > INT32_MAX || index < -INT32_MAX) {
        malformed("subgroup word index out of range");
      }
      w.subgroup_word_indices.push_back(static_cast<int>(index));
    }
    if (!factors.is_array()) {
      malformed("product_factors must be an array");
    }
    for (auto const& f : factors) {
      require_keys(f, {"conjugator", "relator_index", "sign"}, "product factor");
      if (!f["conjugator"].is_string()) {
        malformed("conjugator must be a word string");
      }
      Letters conjugator;
      try {
        conjugator = parse_word(f["conjugator"].get<std::string>(), alphabet).letters();
      } catch (ParseError const& e) {
        malformed(std::string("conjugator: ") + e.what());
      }
      auto relator = integer(f["relator_index"], "relator_index");
      if (relator < 0) {
        malformed("relator_index must be non-negative");
      }
      auto sign = integer(f["sign"], "sign");
      if (sign != 1 && sign != -1) {
        malformed("sign must be 1 or -1");
      }
      w.product.factors.push_back(
          {std::move(conjugator), static_cast<std::size_t>(relator), static_cast<int>(sign)});
    }
    cert.member = std::move(w);
  }

  if (want_rep) {
    require_keys(rep, {"degree", "images"}, "perm_rep");
    NonMemberWitness w;
    w.degree = positive(rep["degree"], "degree");
    if (!rep["images"].is_array()) {
      malformed("images must be an array");
    }
    for (auto const& img : rep["images"]) {
      if (!img.is_array() || img.size() != w.degree) {
        malformed("each image must list degree points");
      }
      std::vector<Point> points;
      for (auto const& p : img) {
        auto value = integer(p, "image point");
        if (value < 0 || static_cast<std::uint64_t>(value) >= w.degree) {
          malformed("image point out of range");
        }
        points.push_back(static_cast<Point>(value));
      }
      if (!is_permutation(points)) {
        malformed("image is not a permutation");
      }
      w.images.emplace_back(std::move(points));
    }
    cert.non_member = std::move(w);
  }

  if (want_budget) {
    require_keys(budget, {"max_degree", "max_steps", "max_product_size"}, "budget");
    cert.budget = Budget{positive(budget["max_degree"], "max_degree"),
                         positive(budget["max_steps"], "max_steps"),
                         positive(budget["max_product_size"], "max_product_size")};
  }
  return cert;
}

bool check_certificate(GeneratingSet const& subgroup, Word const& g,
                       Certificate const& cert) {
  auto const& p = *subgroup.presentation();
  if (!same_alphabet(*g.alphabet(), *p.alphabet())) {
    throw AlphabetMismatch("word is not over the presentation's alphabet");
  }
  Letters target = free_reduce(g.letters());
  switch (cert.verdict) {
    case Verdict::undecided:
      return !cert.member && !cert.non_member && cert.budget.has_value();
    case Verdict::member: {
      if (!cert.member || cert.non_member) {
        return false;
      }
      auto const& w = *cert.member;
      for (int i : w.subgroup_word_indices) {
        if (i == 0 || static_cast<std::size_t>(std::abs(i)) > subgroup.size()) {
          return false;
        }
      }
      for (auto const& f : w.product.factors) {
        if (f.relator >= p.relators().size() || (f.sign != 1 && f.sign != -1)) {
          return false;
        }
      }
      SubgroupWord u{w.subgroup_word_indices,
                     subgroup_word_value(subgroup.generators(), w.subgroup_word_indices)};
      return witness_check(p, target, u, w.product);
    }
    case Verdict::non_member: {
      if (!cert.non_member || cert.member) {
        return false;
      }
      auto const& w = *cert.non_member;
      if (!is_homomorphism(p, w.images, w.degree)) {
        return false;
      }
      std::vector<Permutation> images;
      for (auto const& s : subgroup.generators()) {
        images.push_back(evaluate(w.images, w.degree, s));
      }
      PermGroup image_of_subgroup = schreier_sims(w.degree, std::move(images));
      return !perm_member(image_of_subgroup, evaluate(w.images, w.degree, target));
    }
  }
  return false;
}

}  // namespace sgm
