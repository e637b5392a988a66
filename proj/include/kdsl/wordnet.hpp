#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kdsl/pos.hpp"

namespace kdsl {

// Dense index into KnowledgeGraph::synset(). Stable for a given database.
using SynsetHandle = uint32_t;
inline constexpr SynsetHandle kNoSynset = 0xffffffffu;

struct Synset {
  std::string name;   // e.g. "accident.n.02" (first lemma, underscores kept)
  int32_t offset = 0; // byte offset within its data file
  Pos pos = Pos::Noun;
  std::vector<std::string> lemmas;  // lowercased, multiwords space-joined
  std::string gloss;                // definition text, example sentences stripped
  std::string gloss_examples;       // the stripped quoted part, verbatim
  std::vector<SynsetHandle> hypernyms;
  std::vector<SynsetHandle> hyponyms;

  bool operator==(const Synset&) const = default;
};

// Immutable view of the WordNet database: synsets, sense ordering,
// hypernym/hyponym relations and sense keys. Safe for concurrent reads.
class KnowledgeGraph {
 public:
  size_t size() const { return synsets_.size(); }
  const Synset& synset(SynsetHandle h) const;
  SynsetHandle by_name(std::string_view name) const;  // kNoSynset if absent

  // Senses of (lemma, pos) in index-file order; rank 1 = most frequent.
  // Lemma is normalized (lowercase, underscores to spaces) before lookup.
  std::span<const SynsetHandle> candidate_synsets(std::string_view lemma,
                                                  Pos pos) const;

  // 1-based rank of h among candidate_synsets(lemma, pos); 0 if absent.
  int rank_of(std::string_view lemma, Pos pos, SynsetHandle h) const;

  // Potential feature words of a synset: co-lemmas (monosemous only),
  // lemmas of direct hypernyms/hyponyms, and definition tokens that exist
  // in the index under the synset's POS (stopwords removed). Counts
  // accumulate per occurrence. Sorted by word for determinism.
  std::vector<std::pair<std::string, int>> harvest_candidates(
      SynsetHandle h) const;

  // Sense key exactly as written in index.sense; throws UnknownPairingError.
  const std::string& sense_key_for(std::string_view lemma,
                                   SynsetHandle h) const;
  SynsetHandle synset_for_sense_key(std::string_view key) const;

  // WordNet suffix-detachment lemmatizer: returns the index form of `word`
  // under `pos`, or "" when no form is in the index.
  std::string morphy(std::string_view word, Pos pos) const;

  // Fallback tagger for untagged corpus tokens: the category under which
  // the surface has the most senses, Noun > Verb > Adj > Adv on ties;
  // Other when the surface is not in the index at all.
  Pos guess_pos(std::string_view surface) const;

  // All (lemma, pos) index entries, ordered; used for iteration in tools.
  const std::map<std::pair<std::string, char>, std::vector<SynsetHandle>>&
  sense_index() const {
    return sense_index_;
  }

  bool operator==(const KnowledgeGraph& other) const;

 private:
  friend class WordnetParser;

  std::vector<Synset> synsets_;
  std::unordered_map<std::string, SynsetHandle> by_name_;
  // key: (lemma, category letter 'n'/'v'/'a'/'r')
  std::map<std::pair<std::string, char>, std::vector<SynsetHandle>>
      sense_index_;
  std::map<std::pair<SynsetHandle, std::string>, std::string> sense_keys_;
  std::unordered_map<std::string, SynsetHandle> key_to_synset_;
};

// Parses data.{noun,verb,adj,adv}, index.{noun,verb,adj,adv} and
// index.sense from `db_dir`. Throws MissingFileError, MalformedLineError,
// DanglingPointerError.
KnowledgeGraph parse_wordnet(const std::filesystem::path& db_dir);

// True for the fixed function-word list excluded from gloss harvesting.
bool is_stopword(std::string_view word);

// Lowercases ASCII and converts underscores to spaces.
std::string normalize_lemma(std::string_view raw);

}  // namespace kdsl
