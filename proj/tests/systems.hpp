#pragma once

#include <string>

#include "df0l/system_file.hpp"

namespace df0l::test {

inline System thue_morse() {
  return parse_system("alphabet: a b\nmap a -> a b\nmap b -> b a\naxiom: a\n");
}

inline System eventually_injective() {
  return parse_system("alphabet: a b c\nmap a -> a b a c c\nmap b -> a b a\nmap c -> a b a\naxiom: a\n");
}

inline System non_eventually_injective() {
  return parse_system("alphabet: a b c\nmap a -> a b a c a\nmap b -> a b a\nmap c -> a b a\naxiom: a\n");
}

inline System two_axiom_power() {
  return parse_system("alphabet: a b c d\nmap a -> c b\nmap b -> a d\nmap c -> c\nmap d -> d\naxiom: b\n");
}

inline System bc_repetition() {
  return parse_system("alphabet: a b c\nmap a -> a a c\nmap b -> b c\nmap c -> b c\naxiom: a\n");
}

// Twining of eventually_injective through the two-letter alphabet {x, y}.
inline System eventually_injective_simplified() {
  return parse_system("alphabet: x y\nmap x -> x y x y y\nmap y -> x y x\naxiom: x\n");
}

inline Word w(const System& s, const std::string& text) { return s.alphabet().parse_word(text); }

}  // namespace df0l::test
