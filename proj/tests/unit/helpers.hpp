#pragma once

#include "gf2lab/gf2core.hpp"
#include "gf2lab/pointset.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace gf2lab::test {

inline Word w(const char* bits) { return GF2Vector::parse(bits).bits(); }

inline PointSet set_of(int n, std::initializer_list<const char*> bits) {
    std::vector<Word> words;
    for (const char* b : bits) words.push_back(w(b));
    return PointSet::from_words(n, words);
}

inline std::vector<Word> words(std::initializer_list<const char*> bits) {
    std::vector<Word> out;
    for (const char* b : bits) out.push_back(w(b));
    return out;
}

} // namespace gf2lab::test
