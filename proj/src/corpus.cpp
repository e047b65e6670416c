#include "salg/corpus.hpp"

namespace salg {

const std::vector<CorpusAlgebra>& corpus_algebras() {
  static const std::vector<CorpusAlgebra> all{
      {"xy.salg",
       "superalgebra XY\n  even x\n  odd y\n  rel x*y\nend\n",
       "1|0", "x, x - 1"},
      {"xy1y2.salg",
       "superalgebra XY1Y2\n  even x\n  odd y1 y2\n  rel x*y1y2\nend\n",
       "1|1", "x, 1 - x"},
      {"lambda2.salg",
       "superalgebra Lambda2\n  odd y1 y2\nend\n",
       "0|2", "1"},
      {"a11.salg",
       "superalgebra A11\n  even x\n  odd y\nend\n"
       "derivation phi: y -> 1 end\n"
       "point x = 2\n"
       "point x = -1/3\n",
       "1|1", "x + 1, x"},
      {"square.salg",
       "superalgebra Square\n  even x\n  odd y1 y2\n  rel x^2 - y1y2\nend\n",
       "0|2", "x + 1, x - 1"},
      {"cross.salg",
       "superalgebra Cross\n  even x z\n  odd y\n  rel x*z\nend\n",
       "1|1", "x, 1 - x"},
      {"twisted.salg",
       "superalgebra Twisted\n  even x z\n  odd y1 y2\n  rel x*y1 - z*y2 + y1\nend\n",
       "2|1", ""},
      {"scaled.salg",
       "superalgebra Scaled\n  even x\n  odd y\nend\n"
       "derivation phi: y -> x end\n"
       "point x = 0\n"
       "point x = 3\n",
       "1|1", ""},
  };
  return all;
}

const std::vector<CorpusPair>& corpus_pairs() {
  static const std::vector<CorpusPair> all{
      {"unipotent.shc", "unipotent"},
      {"gl1.shc", "gl1"},
      {"osp12.shc", "osp12"},
      {"gl2.shc", "gl2"},
  };
  return all;
}

}  // namespace salg
