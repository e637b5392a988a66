#pragma once

// Writes hand-built WordNet 3.0 database directories (data.*, index.*,
// index.sense) so parser and pipeline tests can run against small,
// fully-known inputs laid out in the real file formats.

#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "kdsl/pos.hpp"

namespace kdsl::testing {

struct FixtureSynset {
  char ss_type;  // n v a s r
  int offset;
  std::vector<std::string> lemmas;  // underscore-joined multiwords
  std::string gloss;
  std::vector<int> hypernyms;  // offsets, same category
  std::vector<int> hyponyms;
};

class WnFixture {
 public:
  WnFixture& add(FixtureSynset syn) {
    synsets_.push_back(std::move(syn));
    return *this;
  }

  // Convenience: noun synset.
  WnFixture& noun(int offset, std::vector<std::string> lemmas,
                  std::string gloss, std::vector<int> hypernyms = {},
                  std::vector<int> hyponyms = {}) {
    return add({'n', offset, std::move(lemmas), std::move(gloss),
                std::move(hypernyms), std::move(hyponyms)});
  }

  void write(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    static const struct {
      char data_type;  // category
      const char* name;
    } kCats[] = {{'n', "noun"}, {'v', "verb"}, {'a', "adj"}, {'r', "adv"}};

    std::ofstream sense_out(dir / "index.sense");
    for (const auto& cat : kCats) {
      std::ofstream data(dir / (std::string("data.") + cat.name));
      std::ofstream index(dir / (std::string("index.") + cat.name));
      data << "  1 fixture database header line\n";
      index << "  1 fixture database header line\n";

      // index: lemma -> ordered offsets, in declaration order
      std::map<std::string, std::vector<const FixtureSynset*>> by_lemma;
      std::vector<std::string> lemma_order;
      for (const auto& s : synsets_) {
        if (category_letter(s.ss_type) != cat.data_type) continue;
        write_data_line(data, s);
        for (const auto& lemma : s.lemmas) {
          if (!by_lemma.count(lemma)) lemma_order.push_back(lemma);
          by_lemma[lemma].push_back(&s);
        }
      }
      std::sort(lemma_order.begin(), lemma_order.end());
      for (const auto& lemma : lemma_order) {
        const auto& senses = by_lemma[lemma];
        index << lower(lemma) << ' ' << cat.data_type << ' ' << senses.size()
              << " 0 " << senses.size() << " 0";
        for (const auto* s : senses) index << ' ' << offset_str(s->offset);
        index << "  \n";
        int sense_no = 0;
        for (const auto* s : senses) {
          ++sense_no;
          sense_out << sense_key(lemma, *s) << ' ' << offset_str(s->offset)
                    << ' ' << sense_no << " 0\n";
        }
      }
    }
  }

  static std::string sense_key(const std::string& lemma,
                               const FixtureSynset& s) {
    int ss = s.ss_type == 'n'   ? 1
             : s.ss_type == 'v' ? 2
             : s.ss_type == 'a' ? 3
             : s.ss_type == 'r' ? 4
                                : 5;
    // Offset in the lex_id slot keeps fixture keys unique per pairing.
    return lower(lemma) + "%" + std::to_string(ss) + ":00:" +
           std::to_string(s.offset) + (ss == 5 ? ":head:00" : "::");
  }

 private:
  static char category_letter(char ss_type) {
    return ss_type == 's' ? 'a' : ss_type;
  }

  static std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower((unsigned char)c));
    return s;
  }

  static std::string offset_str(int offset) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%08d", offset);
    return buf;
  }

  void write_data_line(std::ostream& out, const FixtureSynset& s) const {
    out << offset_str(s.offset) << " 00 " << s.ss_type << ' ';
    char wc[8];
    std::snprintf(wc, sizeof wc, "%02x", (unsigned)s.lemmas.size());
    out << wc;
    for (const auto& lemma : s.lemmas) out << ' ' << lemma << " 0";
    char pchar = category_letter(s.ss_type);
    out << ' ' << pointer_count_str(s);
    for (int off : s.hypernyms)
      out << " @ " << offset_str(off) << ' ' << pchar << " 0000";
    for (int off : s.hyponyms)
      out << " ~ " << offset_str(off) << ' ' << pchar << " 0000";
    out << " | " << (s.gloss.empty() ? "fixture gloss" : s.gloss) << "  \n";
  }

  static std::string pointer_count_str(const FixtureSynset& s) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%03u",
                  (unsigned)(s.hypernyms.size() + s.hyponyms.size()));
    return buf;
  }

  std::vector<FixtureSynset> synsets_;
};

// Unique scratch directory under the build tree.
inline std::filesystem::path temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("kdsl_test_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace kdsl::testing
