#include "df0l/system_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "df0l/error.hpp"

namespace df0l {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) tokens.emplace_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ": " + message);
}

Letter lookup(const Alphabet& alphabet, const std::string& token, std::size_t line) {
  const auto letter = alphabet.find(token);
  if (!letter) fail(line, "unknown letter '" + token + "'");
  return *letter;
}

}  // namespace

System parse_system(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::size_t alphabet_line = 0;
  std::vector<std::optional<Word>> images;
  std::vector<Word> axioms;

  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto tokens = split_tokens(raw);
    if (tokens.empty()) continue;

    const std::string& keyword = tokens.front();
    if (keyword == "alphabet:") {
      if (alphabet) fail(line, "second alphabet declaration (first on line " + std::to_string(alphabet_line) + ")");
      std::vector<std::string> letters(tokens.begin() + 1, tokens.end());
      for (const auto& token : letters) {
        if (token == "->" || token.back() == ':') fail(line, "reserved token '" + token + "' used as a letter");
      }
      try {
        alphabet.emplace(std::move(letters));
      } catch (const InputError& e) {
        fail(line, e.what());
      }
      alphabet_line = line;
      images.assign(alphabet->size(), std::nullopt);
    } else if (keyword == "map") {
      if (!alphabet) fail(line, "map before the alphabet declaration");
      if (tokens.size() < 3 || tokens[2] != "->") fail(line, "expected 'map <letter> -> <letters>'");
      const Letter source = lookup(*alphabet, tokens[1], line);
      if (images[source]) fail(line, "duplicate map for letter '" + tokens[1] + "'");
      Word image;
      for (std::size_t i = 3; i < tokens.size(); ++i) image.push_back(lookup(*alphabet, tokens[i], line));
      images[source] = std::move(image);
    } else if (keyword == "axiom:") {
      if (!alphabet) fail(line, "axiom before the alphabet declaration");
      if (tokens.size() < 2) fail(line, "axioms must be non-empty words");
      Word axiom;
      for (std::size_t i = 1; i < tokens.size(); ++i) axiom.push_back(lookup(*alphabet, tokens[i], line));
      axioms.push_back(std::move(axiom));
    } else {
      fail(line, "unknown directive '" + keyword + "'");
    }
  }

  if (!alphabet) throw InputError("line 1: missing 'alphabet:' declaration");
  std::vector<Word> resolved;
  for (Letter a = 0; a < alphabet->size(); ++a) {
    if (!images[a]) fail(alphabet_line, "letter '" + alphabet->token(a) + "' has no map");
    resolved.push_back(std::move(*images[a]));
  }
  if (axioms.empty()) throw InputError("line " + std::to_string(alphabet_line) + ": no 'axiom:' lines");
  return System(Morphism(*alphabet, std::move(resolved)), std::move(axioms));
}

System load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_system(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string render_system(const System& system) {
  const Alphabet& alphabet = system.alphabet();
  std::string out = "alphabet:";
  for (const auto& token : alphabet.tokens()) out += " " + token;
  out += '\n';
  for (Letter a = 0; a < alphabet.size(); ++a) {
    out += "map " + alphabet.token(a) + " ->";
    const Word& image = system.morphism().image(a);
    if (!image.empty()) out += " " + alphabet.render(image);
    out += '\n';
  }
  for (const Word& w : system.axioms()) out += "axiom: " + alphabet.render(w) + '\n';
  return out;
}

Morphism parse_letter_map(std::string_view text, const Alphabet& domain, const Alphabet& codomain) {
  std::vector<std::optional<Word>> images(domain.size());
  std::size_t entry = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const auto tokens = split_tokens(text.substr(start, end - start));
    start = end + 1;
    if (tokens.empty()) continue;
    ++entry;
    const std::string where = "map entry " + std::to_string(entry) + ": ";
    if (tokens.size() < 2 || tokens[1] != "->") throw InputError(where + "expected '<letter> -> <letters>'");
    const auto source = domain.find(tokens[0]);
    if (!source) throw InputError(where + "unknown letter '" + tokens[0] + "'");
    if (images[*source]) throw InputError(where + "duplicate entry for '" + tokens[0] + "'");
    Word image;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const auto letter = codomain.find(tokens[i]);
      if (!letter) throw InputError(where + "unknown letter '" + tokens[i] + "'");
      image.push_back(*letter);
    }
    images[*source] = std::move(image);
  }
  std::vector<Word> resolved;
  for (Letter a = 0; a < domain.size(); ++a) {
    if (!images[a]) throw InputError("letter map has no entry for '" + domain.token(a) + "'");
    resolved.push_back(std::move(*images[a]));
  }
  return Morphism(domain, codomain, std::move(resolved));
}

}  // namespace df0l
