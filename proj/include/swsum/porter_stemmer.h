#pragma once

#include <string>

namespace swsum {

// Porter (1980) suffix-stripping stemmer for lowercase ASCII words.
// Words of length <= 2 are returned unchanged.
std::string porter_stem(std::string word);

}  // namespace swsum
