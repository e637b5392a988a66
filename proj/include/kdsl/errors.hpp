#pragma once

#include <stdexcept>
#include <string>

namespace kdsl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// wordnet_kb
struct MissingFileError : Error { using Error::Error; };
struct MalformedLineError : Error {
  MalformedLineError(const std::string& file, long line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what) {}
  explicit MalformedLineError(const std::string& what) : Error(what) {}
};
struct DanglingPointerError : Error { using Error::Error; };
struct UnknownSynsetError : Error { using Error::Error; };
struct UnknownPairingError : Error { using Error::Error; };

// disdict
struct ZeroMarginalError : Error { using Error::Error; };
struct IoFailureError : Error { using Error::Error; };

// datagen
struct MalformedTokenError : Error { using Error::Error; };
struct EmptyModelError : Error { using Error::Error; };

// neural
struct DimensionMismatchError : Error { using Error::Error; };
struct UnreadableEmbeddingFileError : Error { using Error::Error; };
struct DivergenceError : Error {
  DivergenceError(long step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step(step) {}
  long step;
};
struct NoCandidatesError : Error { using Error::Error; };

// harness
struct MalformedXmlError : Error { using Error::Error; };
struct MissingGoldKeyError : Error { using Error::Error; };
struct UnknownSenseKeyError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace kdsl
