#include "kdsl/wordnet.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <unordered_set>

#include "kdsl/errors.hpp"

namespace kdsl {

namespace {

constexpr const char* kCatNames[kNumCats] = {"noun", "verb", "adj", "adv"};

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Whitespace tokenizer over a string_view; keeps positions cheap.
struct Tokens {
  std::string_view s;
  size_t pos = 0;

  std::string_view next() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    size_t start = pos;
    while (pos < s.size() && s[pos] != ' ') ++pos;
    return s.substr(start, pos - start);
  }
  bool done() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    return pos >= s.size();
  }
};

int parse_int(std::string_view t, int base = 10) {
  int v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v, base);
  if (ec != std::errc() || p != t.data() + t.size())
    throw MalformedLineError("bad integer field '" + std::string(t) + "'");
  return v;
}

uint64_t offset_key(WnCat cat, int32_t offset) {
  return (static_cast<uint64_t>(cat) << 32) | static_cast<uint32_t>(offset);
}

// Raw index entry: sense-ordered synset offsets for a lemma.
struct IndexEntry {
  std::string lemma;  // normalized
  std::vector<int32_t> offsets;
};

// Relation pointer captured during data parsing, resolved afterwards.
struct RawPointer {
  bool hypernym = false;
  WnCat cat = WnCat::Noun;
  int32_t offset = 0;
};

// Adjective lemmas may carry a syntactic marker: predicate(p) etc.
std::string_view strip_marker(std::string_view lemma) {
  auto paren = lemma.find('(');
  return paren == std::string_view::npos ? lemma : lemma.substr(0, paren);
}

const std::unordered_set<std::string_view>& stopword_set() {
  // Articles, pronouns, conjunctions, auxiliaries and be/have/do forms.
  static const std::unordered_set<std::string_view> kSet = {
      "a",     "an",    "the",   "this",  "that",   "these", "those",
      "and",   "or",    "but",   "nor",   "if",     "then",  "than",
      "as",    "it",    "its",   "he",    "him",    "his",   "she",
      "her",   "they",  "them",  "their", "we",     "us",    "our",
      "you",   "your",  "i",     "me",    "my",     "who",   "whom",
      "whose", "which", "what",  "be",    "am",     "is",    "are",
      "was",   "were",  "been",  "being", "have",   "has",   "had",
      "having", "do",   "does",  "did",   "done",   "doing", "not",
      "no",    "so",    "such",  "can",   "could",  "will",  "would",
      "shall", "should", "may",  "might", "must",
  };
  return kSet;
}

// WordNet suffix detachment rules, per category.
struct DetachRule {
  std::string_view suffix, replacement;
};
constexpr DetachRule kNounRules[] = {
    {"s", ""},     {"ses", "s"},   {"xes", "x"}, {"zes", "z"},
    {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"},
};
constexpr DetachRule kVerbRules[] = {
    {"s", ""},   {"ies", "y"}, {"es", "e"}, {"es", ""},
    {"ed", "e"}, {"ed", ""},   {"ing", "e"}, {"ing", ""},
};
constexpr DetachRule kAdjRules[] = {
    {"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"},
};

std::span<const DetachRule> detach_rules(WnCat cat) {
  switch (cat) {
    case WnCat::Noun: return kNounRules;
    case WnCat::Verb: return kVerbRules;
    case WnCat::Adj: return kAdjRules;
    case WnCat::Adv: return {};
  }
  return {};
}

}  // namespace

bool is_stopword(std::string_view word) {
  return stopword_set().count(word) > 0;
}

std::string normalize_lemma(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw)
    out.push_back(c == '_'
                      ? ' '
                      : static_cast<char>(
                            std::tolower(static_cast<unsigned char>(c))));
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

class WordnetParser {
 public:
  explicit WordnetParser(const std::filesystem::path& dir) : dir_(dir) {}

  KnowledgeGraph run() {
    for (int c = 0; c < kNumCats; ++c) parse_index(static_cast<WnCat>(c));
    for (int c = 0; c < kNumCats; ++c) parse_data(static_cast<WnCat>(c));
    assign_names();
    resolve_relations();
    build_sense_index();
    parse_index_sense();
    return std::move(graph_);
  }

 private:
  std::ifstream open(const std::string& name) {
    auto path = dir_ / name;
    std::ifstream in(path);
    if (!in.is_open())
      throw MissingFileError("required database file missing: " +
                             path.string());
    return in;
  }

  static bool is_header_or_blank(const std::string& line) {
    return line.empty() || line[0] == ' ';
  }

  void parse_index(WnCat cat) {
    std::string fname = std::string("index.") + kCatNames[static_cast<int>(cat)];
    std::ifstream in = open(fname);
    std::string line;
    long lineno = 0;
    auto& entries = index_[static_cast<int>(cat)];
    while (std::getline(in, line)) {
      ++lineno;
      if (is_header_or_blank(line)) continue;
      try {
        Tokens t{line};
        IndexEntry e;
        e.lemma = normalize_lemma(t.next());
        if (e.lemma.empty()) throw MalformedLineError("empty lemma");
        t.next();  // pos letter, implied by the file
        int synset_cnt = parse_int(t.next());
        int p_cnt = parse_int(t.next());
        for (int i = 0; i < p_cnt; ++i) t.next();  // pointer symbols
        t.next();                                  // sense_cnt
        t.next();                                  // tagsense_cnt
        e.offsets.reserve(synset_cnt);
        for (int i = 0; i < synset_cnt; ++i) {
          auto tok = t.next();
          if (tok.empty()) throw MalformedLineError("missing synset offset");
          e.offsets.push_back(parse_int(tok));
        }
        entries[e.lemma] = std::move(e);
      } catch (const MalformedLineError& e) {
        throw MalformedLineError(fname, lineno, e.what());
      }
    }
  }

  void parse_data(WnCat cat) {
    std::string fname = std::string("data.") + kCatNames[static_cast<int>(cat)];
    std::ifstream in = open(fname);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (is_header_or_blank(line)) continue;
      try {
        parse_data_line(cat, line);
      } catch (const MalformedLineError& e) {
        throw MalformedLineError(fname, lineno, e.what());
      }
    }
  }

  void parse_data_line(WnCat cat, const std::string& line) {
    auto bar = line.find(" | ");
    if (bar == std::string::npos)
      throw MalformedLineError("missing gloss separator '|'");
    std::string_view head(line.data(), bar);
    std::string_view gloss(line.data() + bar + 3, line.size() - bar - 3);
    while (!gloss.empty() && (gloss.back() == ' ' || gloss.back() == '\r'))
      gloss.remove_suffix(1);

    Tokens t{head};
    Synset syn;
    syn.offset = parse_int(t.next());
    t.next();  // lex_filenum
    auto ss = t.next();
    if (ss.size() != 1) throw MalformedLineError("bad ss_type");
    auto pos = pos_from_letter(ss[0]);
    if (!pos) throw MalformedLineError("unknown ss_type letter");
    syn.pos = *pos;

    int w_cnt = parse_int(t.next(), 16);
    if (w_cnt < 1) throw MalformedLineError("synset without lemmas");
    syn.lemmas.reserve(w_cnt);
    for (int i = 0; i < w_cnt; ++i) {
      auto word = strip_marker(t.next());
      if (word.empty()) throw MalformedLineError("empty lemma");
      syn.lemmas.push_back(normalize_lemma(word));
      t.next();  // lex_id
    }

    int p_cnt = parse_int(t.next());
    std::vector<RawPointer> ptrs;
    for (int i = 0; i < p_cnt; ++i) {
      auto sym = t.next();
      auto off = t.next();
      auto pchar = t.next();
      t.next();  // source/target
      if (sym.empty() || off.empty() || pchar.size() != 1)
        throw MalformedLineError("truncated pointer");
      if (sym == "@" || sym == "@i" || sym == "~" || sym == "~i") {
        auto ppos = pos_from_letter(pchar[0]);
        if (!ppos) throw MalformedLineError("bad pointer pos");
        auto pcat = category_of(*ppos);
        ptrs.push_back(
            {sym[0] == '@', *pcat, static_cast<int32_t>(parse_int(off))});
      }
    }
    // Remaining tokens before '|' are verb frames; ignored.

    split_gloss(gloss, syn.gloss, syn.gloss_examples);

    SynsetHandle h = static_cast<SynsetHandle>(graph_.synsets_.size());
    graph_.synsets_.push_back(std::move(syn));
    raw_pointers_.push_back(std::move(ptrs));
    by_offset_[offset_key(cat, graph_.synsets_.back().offset)] = h;
    cat_of_.push_back(cat);
  }

  // Definition text ends at the first ';' whose next non-space character
  // is a double quote; everything from there on is usage examples.
  static void split_gloss(std::string_view gloss, std::string& definition,
                          std::string& examples) {
    for (size_t i = 0; i < gloss.size(); ++i) {
      if (gloss[i] != ';') continue;
      size_t j = i + 1;
      while (j < gloss.size() && gloss[j] == ' ') ++j;
      if (j < gloss.size() && gloss[j] == '"') {
        definition.assign(gloss.substr(0, i));
        while (!definition.empty() && definition.back() == ' ')
          definition.pop_back();
        examples.assign(gloss.substr(j));
        return;
      }
    }
    definition.assign(gloss);
    examples.clear();
  }

  void assign_names() {
    for (SynsetHandle h = 0; h < graph_.synsets_.size(); ++h) {
      Synset& syn = graph_.synsets_[h];
      WnCat cat = cat_of_[h];
      const auto& entries = index_[static_cast<int>(cat)];
      auto it = entries.find(syn.lemmas.front());
      if (it == entries.end())
        throw DanglingPointerError("synset lemma '" + syn.lemmas.front() +
                                   "' missing from index." +
                                   kCatNames[static_cast<int>(cat)]);
      const auto& offs = it->second.offsets;
      auto pos = std::find(offs.begin(), offs.end(), syn.offset);
      if (pos == offs.end())
        throw DanglingPointerError("index entry for '" + syn.lemmas.front() +
                                   "' does not list offset " +
                                   std::to_string(syn.offset));
      int sense_no = static_cast<int>(pos - offs.begin()) + 1;
      std::string first = syn.lemmas.front();
      std::replace(first.begin(), first.end(), ' ', '_');
      syn.name = first + '.' + pos_letter(syn.pos) + '.' +
                 (sense_no < 10 ? "0" : "") + std::to_string(sense_no);
      graph_.by_name_.emplace(syn.name, h);
    }
  }

  void resolve_relations() {
    for (SynsetHandle h = 0; h < graph_.synsets_.size(); ++h) {
      for (const RawPointer& p : raw_pointers_[h]) {
        auto it = by_offset_.find(offset_key(p.cat, p.offset));
        if (it == by_offset_.end())
          throw DanglingPointerError(
              "relation target offset " + std::to_string(p.offset) +
              " not found in data." + kCatNames[static_cast<int>(p.cat)]);
        auto& list = p.hypernym ? graph_.synsets_[h].hypernyms
                                : graph_.synsets_[h].hyponyms;
        list.push_back(it->second);
      }
    }
    // Deduplicate and enforce symmetry.
    for (auto& syn : graph_.synsets_) {
      dedupe(syn.hypernyms);
      dedupe(syn.hyponyms);
    }
    for (SynsetHandle h = 0; h < graph_.synsets_.size(); ++h) {
      for (SynsetHandle t : graph_.synsets_[h].hypernyms)
        add_unique(graph_.synsets_[t].hyponyms, h);
      for (SynsetHandle t : graph_.synsets_[h].hyponyms)
        add_unique(graph_.synsets_[t].hypernyms, h);
    }
  }

  static void dedupe(std::vector<SynsetHandle>& v) {
    std::vector<SynsetHandle> out;
    for (SynsetHandle h : v)
      if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    v = std::move(out);
  }

  static void add_unique(std::vector<SynsetHandle>& v, SynsetHandle h) {
    if (std::find(v.begin(), v.end(), h) == v.end()) v.push_back(h);
  }

  void build_sense_index() {
    for (int c = 0; c < kNumCats; ++c) {
      WnCat cat = static_cast<WnCat>(c);
      char letter = pos_letter(pos_of_category(cat));
      for (const auto& [lemma, entry] : index_[c]) {
        std::vector<SynsetHandle> handles;
        handles.reserve(entry.offsets.size());
        for (int32_t off : entry.offsets) {
          auto it = by_offset_.find(offset_key(cat, off));
          if (it == by_offset_.end())
            throw DanglingPointerError("index." + std::string(kCatNames[c]) +
                                       " entry '" + lemma +
                                       "' references unknown offset " +
                                       std::to_string(off));
          if (std::find(handles.begin(), handles.end(), it->second) ==
              handles.end())
            handles.push_back(it->second);
        }
        graph_.sense_index_[{lemma, letter}] = std::move(handles);
      }
    }
  }

  void parse_index_sense() {
    std::ifstream in = open("index.sense");
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (is_header_or_blank(line)) continue;
      try {
        Tokens t{line};
        auto key = t.next();
        auto off = t.next();
        if (key.empty() || off.empty())
          throw MalformedLineError("truncated sense entry");
        auto pct = key.find('%');
        if (pct == std::string_view::npos || pct + 1 >= key.size())
          throw MalformedLineError("sense key without %");
        auto pos = pos_from_ss_digit(key[pct + 1]);
        if (!pos) throw MalformedLineError("bad ss_type digit in sense key");
        auto cat = category_of(*pos);
        auto it = by_offset_.find(offset_key(*cat, parse_int(off)));
        if (it == by_offset_.end())
          throw DanglingPointerError("index.sense offset " + std::string(off) +
                                     " not found");
        std::string lemma = normalize_lemma(key.substr(0, pct));
        std::string key_str(key);
        graph_.sense_keys_[{it->second, lemma}] = key_str;
        graph_.key_to_synset_.emplace(key_str, it->second);
      } catch (const MalformedLineError& e) {
        throw MalformedLineError("index.sense", lineno, e.what());
      }
    }
  }

  std::filesystem::path dir_;
  KnowledgeGraph graph_;
  std::array<std::map<std::string, IndexEntry>, kNumCats> index_;
  std::unordered_map<uint64_t, SynsetHandle> by_offset_;
  std::vector<std::vector<RawPointer>> raw_pointers_;
  std::vector<WnCat> cat_of_;
};

KnowledgeGraph parse_wordnet(const std::filesystem::path& db_dir) {
  return WordnetParser(db_dir).run();
}

// ---------------------------------------------------------------------------
// Queries

const Synset& KnowledgeGraph::synset(SynsetHandle h) const {
  if (h >= synsets_.size())
    throw UnknownSynsetError("synset handle out of range");
  return synsets_[h];
}

SynsetHandle KnowledgeGraph::by_name(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? kNoSynset : it->second;
}

std::span<const SynsetHandle> KnowledgeGraph::candidate_synsets(
    std::string_view lemma, Pos pos) const {
  auto cat = category_of(pos);
  if (!cat) return {};
  auto it = sense_index_.find(
      {normalize_lemma(lemma), pos_letter(pos_of_category(*cat))});
  if (it == sense_index_.end()) return {};
  return it->second;
}

int KnowledgeGraph::rank_of(std::string_view lemma, Pos pos,
                            SynsetHandle h) const {
  auto list = candidate_synsets(lemma, pos);
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == h) return static_cast<int>(i) + 1;
  return 0;
}

std::string KnowledgeGraph::morphy(std::string_view word, Pos pos) const {
  auto cat = category_of(pos);
  if (!cat) return "";
  std::string w = normalize_lemma(word);
  char letter = pos_letter(pos_of_category(*cat));
  if (sense_index_.count({w, letter})) return w;
  for (const DetachRule& rule : detach_rules(*cat)) {
    if (w.size() <= rule.suffix.size() || !w.ends_with(rule.suffix)) continue;
    std::string base = w.substr(0, w.size() - rule.suffix.size());
    base += rule.replacement;
    if (sense_index_.count({base, letter})) return base;
  }
  return "";
}

Pos KnowledgeGraph::guess_pos(std::string_view surface) const {
  static constexpr Pos kOrder[] = {Pos::Noun, Pos::Verb, Pos::Adj, Pos::Adv};
  std::string w = normalize_lemma(surface);
  Pos best = Pos::Other;
  size_t best_senses = 0;
  for (Pos pos : kOrder) {
    auto it = sense_index_.find({w, pos_letter(pos)});
    if (it != sense_index_.end() && it->second.size() > best_senses) {
      best = pos;
      best_senses = it->second.size();
    }
  }
  if (best != Pos::Other) return best;
  for (Pos pos : kOrder)
    if (!morphy(w, pos).empty()) return pos;
  return Pos::Other;
}

namespace {

// Definition tokens: lowercase alnum runs (apostrophe/hyphen internal),
// skipping anything inside double quotes.
std::vector<std::string> tokenize_definition(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  bool in_quote = false;
  for (char raw : text) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (raw == '"') {
      in_quote = !in_quote;
      if (!cur.empty()) out.push_back(std::exchange(cur, {}));
      continue;
    }
    if (in_quote) continue;
    if (std::isalnum(c) || raw == '\'' || raw == '-') {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty()) {
      out.push_back(std::exchange(cur, {}));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

std::vector<std::pair<std::string, int>> KnowledgeGraph::harvest_candidates(
    SynsetHandle h) const {
  const Synset& syn = synset(h);
  std::map<std::string, int> counts;

  // Own lemmas: only monosemous ones, since an ambiguous lemma would later
  // label contexts of its other senses.
  for (const std::string& lemma : syn.lemmas)
    if (candidate_synsets(lemma, syn.pos).size() == 1) counts[lemma] += 1;

  for (SynsetHandle t : syn.hypernyms)
    for (const std::string& lemma : synsets_[t].lemmas) counts[lemma] += 1;
  for (SynsetHandle t : syn.hyponyms)
    for (const std::string& lemma : synsets_[t].lemmas) counts[lemma] += 1;

  // Definition words that exist in the index under the synset's POS.
  for (const std::string& tok : tokenize_definition(syn.gloss)) {
    if (is_stopword(tok)) continue;
    std::string lemma = morphy(tok, syn.pos);
    if (!lemma.empty()) counts[lemma] += 1;
  }

  return {counts.begin(), counts.end()};
}

const std::string& KnowledgeGraph::sense_key_for(std::string_view lemma,
                                                 SynsetHandle h) const {
  auto it = sense_keys_.find({h, normalize_lemma(lemma)});
  if (it == sense_keys_.end())
    throw UnknownPairingError("no sense key for lemma '" + std::string(lemma) +
                              "' in synset " +
                              (h < synsets_.size() ? synsets_[h].name : "?"));
  return it->second;
}

SynsetHandle KnowledgeGraph::synset_for_sense_key(std::string_view key) const {
  auto it = key_to_synset_.find(std::string(key));
  return it == key_to_synset_.end() ? kNoSynset : it->second;
}

bool KnowledgeGraph::operator==(const KnowledgeGraph& other) const {
  return synsets_ == other.synsets_ && sense_index_ == other.sense_index_ &&
         sense_keys_ == other.sense_keys_;
}

}  // namespace kdsl
