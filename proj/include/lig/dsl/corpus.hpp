#pragma once

#include <string>
#include <vector>

#include "lig/core/params.hpp"
#include "lig/dsl/lint.hpp"
#include "lig/dsl/preprocess.hpp"

namespace lig::dsl {

/// Corpus entries expanded and parsed for one space. Only entries whose
/// guard admits the space are present.
class Instance {
 public:
  struct Entry {
    const SourceUnit* unit = nullptr;
    Definition def;
  };

  const SpaceParams& params() const { return params_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry* find(const std::string& name) const;
  Resolver resolver() const;
  /// Linter run on every entry under its declared flags.
  std::vector<std::pair<std::string, std::vector<Violation>>> lint() const;

 private:
  friend class Corpus;
  SpaceParams params_;
  std::vector<Entry> entries_;
};

class Corpus {
 public:
  /// All *.fo files of a directory, in file name order.
  static Corpus load_dir(const std::string& dir);
  /// The shipped corpus.
  static Corpus builtin();
  static Corpus from_sources(const std::vector<std::pair<std::string, std::string>>& files);

  const std::vector<SourceUnit>& units() const { return units_; }
  const SourceUnit* unit(const std::string& name) const;

  /// Throws ParseError, Error(UnresolvedPredRef) for a reference to an
  /// unknown or later definition or one with the wrong arity.
  Instance instantiate(const SpaceParams& p) const;

 private:
  std::vector<SourceUnit> units_;
};

std::string builtin_corpus_dir();

}  // namespace lig::dsl
