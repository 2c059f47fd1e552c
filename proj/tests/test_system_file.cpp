#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "df0l/error.hpp"
#include "df0l/system_file.hpp"
#include "oracles.hpp"

using namespace df0l;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_system(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing a system file") {
  const System s = parse_system("# comment\nalphabet: a b\n\nmap a -> a b   # trailing\nmap b -> b a\naxiom: a\n");
  CHECK(s.alphabet().tokens() == std::vector<std::string>{"a", "b"});
  CHECK(s.morphism().image(0) == Word{0, 1});
  CHECK(s.axioms() == std::vector<Word>{Word{0}});

  const System ev = parse_system("alphabet: a b c\nmap a -> a b a c c\nmap b -> a b a\nmap c -> a b a\naxiom: a\n");
  CHECK(image_length_bounds(ev.morphism()).max == 5);

  const System erasing = parse_system("alphabet: a b\nmap a -> a b\nmap b ->\naxiom: a\n");
  CHECK_FALSE(erasing.is_propagating());
}

TEST_CASE("line-numbered errors") {
  CHECK(error_of("alphabet: a b\nmap a -> a b\naxiom: a\n").find("line 1") != std::string::npos);
  CHECK(error_of("alphabet: a b\nmap a -> a b\nmap a -> b\nmap b -> a\naxiom: a\n").find("line 3") !=
        std::string::npos);
  CHECK(error_of("alphabet: a b\nmap a -> a z\nmap b -> a\naxiom: a\n").find("line 2") != std::string::npos);
  CHECK_FALSE(error_of("alphabet: a b\nmap a -> a\nmap b -> a\n").empty());
  CHECK(error_of("alphabet: a\nmap a -> a\naxiom: a\nfrobnicate\n").find("line 4") != std::string::npos);
  CHECK(error_of("map a -> a\nalphabet: a\naxiom: a\n").find("line 1") != std::string::npos);
  CHECK_THROWS_AS(load_system("/nonexistent/system.df0l"), InputError);
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const System s = df0l::test::random_system(rng);
    CHECK(parse_system(render_system(s)) == s);
  }
}

TEST_CASE("letter maps") {
  const Alphabet abc({"a", "b", "c"});
  const Alphabet xy({"x", "y"});
  const Morphism alpha = parse_letter_map("a -> x ; b -> y ; c -> y", abc, xy);
  CHECK(alpha.apply(Word{0, 1, 2}) == Word{0, 1, 1});
  CHECK_THROWS_AS(parse_letter_map("a -> x ; b -> y", abc, xy), InputError);
  CHECK_THROWS_AS(parse_letter_map("a -> q ; b -> y ; c -> y", abc, xy), InputError);
}
