#pragma once

// The bundled documents shared by the self-test and the `corpus/` directory.

#include <string>
#include <vector>

namespace salg {

struct CorpusAlgebra {
  std::string file;  // name under corpus/
  std::string text;
  /// Expected super-dimension, as "even|odd".
  std::string ksdim;
  /// Elements generating the unit ideal of A_0, comma separated; empty if none.
  std::string cover;
};

const std::vector<CorpusAlgebra>& corpus_algebras();

struct CorpusPair {
  std::string file;
  std::string builtin;  // name of the equal built-in pair
};

const std::vector<CorpusPair>& corpus_pairs();

}  // namespace salg
