#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace kdsl {

// Parts of speech. AdjSat (adjective satellite) shares index files and
// candidate lists with Adj; Other marks corpus tokens outside WordNet's
// four categories.
enum class Pos : uint8_t { Noun, Verb, Adj, AdjSat, Adv, Other };

// The four database file categories (data.noun, index.noun, ...).
enum class WnCat : uint8_t { Noun = 0, Verb = 1, Adj = 2, Adv = 3 };

inline constexpr int kNumCats = 4;

// Category used for index lookups; AdjSat folds into Adj. Other has none.
inline std::optional<WnCat> category_of(Pos pos) {
  switch (pos) {
    case Pos::Noun: return WnCat::Noun;
    case Pos::Verb: return WnCat::Verb;
    case Pos::Adj:
    case Pos::AdjSat: return WnCat::Adj;
    case Pos::Adv: return WnCat::Adv;
    case Pos::Other: return std::nullopt;
  }
  return std::nullopt;
}

inline Pos pos_of_category(WnCat cat) {
  switch (cat) {
    case WnCat::Noun: return Pos::Noun;
    case WnCat::Verb: return Pos::Verb;
    case WnCat::Adj: return Pos::Adj;
    case WnCat::Adv: return Pos::Adv;
  }
  return Pos::Other;
}

// Synset type letter as used in synset names and data files (n v a s r).
inline char pos_letter(Pos pos) {
  switch (pos) {
    case Pos::Noun: return 'n';
    case Pos::Verb: return 'v';
    case Pos::Adj: return 'a';
    case Pos::AdjSat: return 's';
    case Pos::Adv: return 'r';
    case Pos::Other: return '?';
  }
  return '?';
}

inline std::optional<Pos> pos_from_letter(char c) {
  switch (c) {
    case 'n': return Pos::Noun;
    case 'v': return Pos::Verb;
    case 'a': return Pos::Adj;
    case 's': return Pos::AdjSat;
    case 'r': return Pos::Adv;
  }
  return std::nullopt;
}

// ss_type digit used in sense keys (lemma%d:...).
inline std::optional<Pos> pos_from_ss_digit(char c) {
  switch (c) {
    case '1': return Pos::Noun;
    case '2': return Pos::Verb;
    case '3': return Pos::Adj;
    case '4': return Pos::Adv;
    case '5': return Pos::AdjSat;
  }
  return std::nullopt;
}

// Tag names used by the corpus format and benchmark XML.
inline std::string_view pos_tag(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::AdjSat: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

inline std::optional<Pos> pos_from_tag(std::string_view tag) {
  if (tag == "NOUN") return Pos::Noun;
  if (tag == "VERB") return Pos::Verb;
  if (tag == "ADJ") return Pos::Adj;
  if (tag == "ADV") return Pos::Adv;
  if (tag == "OTHER") return Pos::Other;
  return std::nullopt;
}

}  // namespace kdsl
