// Membership certificates: the wire format and an independent checker that
// uses only word and permutation-group primitives.
//
// Wire format (fields always present, in this order; absent payloads are null):
//
//   {
//     "verdict": "member" | "non_member" | "undecided",
//     "subgroup_word_indices": [int, ...] | null,   // +i = s_i, -i = s_i^-1
//     "product_factors": [{"conjugator": WORD, "relator_index": int,
//                          "sign": 1 | -1}, ...] | null,
//     "perm_rep": {"degree": int, "images": [[0-based one-line], ...]} | null,
//     "budget": {"max_degree": int, "max_steps": int,
//                "max_product_size": int} | null
//   }
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgm/permutation.hpp"
#include "sgm/presentations.hpp"
#include "sgm/relator_search.hpp"

namespace sgm {

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::uint64_t max_degree = 4;
  std::uint64_t max_steps = 1'000'000;
  std::uint64_t max_product_size = 12;

  // Throws std::invalid_argument unless every field is positive.
  void validate() const;
  friend bool operator==(Budget const&, Budget const&) = default;
};

enum class Verdict { member, non_member, undecided };

char const* to_string(Verdict v);

struct MemberWitness {
  std::vector<int> subgroup_word_indices;
  ConjugateProduct product;
  friend bool operator==(MemberWitness const&, MemberWitness const&) = default;
};

struct NonMemberWitness {
  std::size_t degree = 0;
  std::vector<Permutation> images;  // one per presentation generator
  friend bool operator==(NonMemberWitness const&, NonMemberWitness const&) = default;
};

struct Certificate {
  Verdict verdict = Verdict::undecided;
  std::optional<MemberWitness> member;
  std::optional<NonMemberWitness> non_member;
  std::optional<Budget> budget;

  friend bool operator==(Certificate const&, Certificate const&) = default;
};

std::string format_certificate(Certificate const& cert, Alphabet const& alphabet);
// Throws CertificateFormatError for anything that is not a well-formed
// certificate (syntax, unknown fields, payload not matching the verdict,
// images that are not permutations, unknown generators in conjugators).
Certificate parse_certificate(std::string const& text, AlphabetPtr const& alphabet);

// Re-derives the verdict from the payload alone. Member: rebuild u and the
// relator product and compare g^-1 u with it in the free group. NonMember:
// re-verify the homomorphism and that the image of g avoids the image of
// <S> by Schreier-Sims. Undecided certificates are vacuously valid.
bool check_certificate(GeneratingSet const& subgroup, Word const& g,
                       Certificate const& cert);

}  // namespace sgm
