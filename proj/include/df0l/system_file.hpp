#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "df0l/morphism.hpp"
#include "df0l/system.hpp"

namespace df0l {

// Line-oriented system files; `#` starts a comment, tokens are separated by
// spaces or tabs:
//
//   alphabet: a b
//   map a -> a b
//   map b -> b a
//   axiom: a
//
// An empty right-hand side is an erasing image. Errors are InputError with
// a "line N:" prefix.

System parse_system(std::string_view text);
System load_system(const std::filesystem::path& path);

/// parse_system(render_system(s)) == s.
std::string render_system(const System& system);

/// "a -> x y ; b -> z" style letter maps, one entry per domain letter.
Morphism parse_letter_map(std::string_view text, const Alphabet& domain, const Alphabet& codomain);

}  // namespace df0l
