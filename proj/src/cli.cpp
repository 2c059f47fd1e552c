#include "df0l/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "df0l/analyzer.hpp"
#include "df0l/circularity.hpp"
#include "df0l/error.hpp"
#include "df0l/injectivity.hpp"
#include "df0l/interpretations.hpp"
#include "df0l/repetitiveness.hpp"
#include "df0l/system.hpp"
#include "df0l/system_file.hpp"

namespace df0l::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  Json result = Json::object();
  std::vector<std::string> lines;
};

struct Options {
  bool json = false;
  bool serial = false;
  std::string system_path;
  std::string second_path;
  std::string word;
  std::string left;
  std::optional<std::string> right;
  std::string mode = "weak";
  std::size_t length = 8;
  std::size_t cutoff = 24;
  std::size_t power = 2;
  std::optional<std::size_t> period_bound;
  bool skip_repetition_check = false;
  std::string output_path;
  std::string alpha;
  std::string beta;
};

std::string shown(const Alphabet& alphabet, WordView w) { return w.empty() ? "ε" : alphabet.render(w); }

Json letter_list(const Alphabet& alphabet, const LetterSet& letters) {
  Json out = Json::array();
  for (Letter a : letters) out.push_back(alphabet.token(a));
  return out;
}

Json describe_system(const System& system) {
  Json out;
  out["alphabet"] = system.alphabet().tokens();
  out["pdf0l"] = system.is_propagating();
  const auto bounds = image_length_bounds(system.morphism());
  out["min_image"] = bounds.min;
  out["max_image"] = bounds.max;
  return out;
}

Json describe_repetition(const Alphabet& alphabet, const RepetitionWitness& w) {
  Json out;
  out["letter"] = alphabet.token(w.letter);
  out["power"] = w.power;
  out["witness"] = alphabet.render(w.period);
  out["exponent"] = w.exponent;
  return out;
}

Word parse_word(const System& system, const std::string& text) { return system.alphabet().parse_word(text); }

Outcome cmd_validate(const System& system, const Options&) {
  const auto report = validate(system);
  Outcome o;
  o.result["valid"] = report.valid;
  o.result["pdf0l"] = report.propagating;
  o.result["errors"] = report.errors;
  o.lines.push_back(std::string("valid: ") + (report.valid ? "yes" : "no"));
  o.lines.push_back(std::string("PDF0L: ") + (report.propagating ? "yes" : "no"));
  for (const auto& e : report.errors) o.lines.push_back("error: " + e);
  return o;
}

Outcome cmd_language(Analyzer& analyzer, const Options& opt) {
  const auto& alphabet = analyzer.system().alphabet();
  const FactorSet lang = factor_language(analyzer.system(), opt.length, analyzer.execution());
  Outcome o;
  o.result["max_length"] = opt.length;
  o.result["count"] = lang.size();
  Json words = Json::array();
  for (const Word& w : lang.words()) {
    words.push_back(alphabet.render(w));
    o.lines.push_back(shown(alphabet, w));
  }
  o.result["words"] = std::move(words);
  return o;
}

Outcome cmd_contains(Analyzer& analyzer, const Options& opt) {
  const Word u = parse_word(analyzer.system(), opt.word);
  const bool member = analyzer.contains(u);
  Outcome o;
  o.result["word"] = analyzer.system().alphabet().render(u);
  o.result["member"] = member;
  o.lines.push_back(shown(analyzer.system().alphabet(), u) + (member ? " is in L(S)" : " is not in L(S)"));
  return o;
}

Outcome cmd_interpretations(Analyzer& analyzer, const Options& opt) {
  const auto& alphabet = analyzer.system().alphabet();
  const Word u = parse_word(analyzer.system(), opt.word);
  const auto interps = minimal_interpretations(analyzer, u);
  Outcome o;
  o.result["word"] = alphabet.render(u);
  Json list = Json::array();
  for (const auto& i : interps) {
    list.push_back({{"left", alphabet.render(i.left)},
                    {"preimage", alphabet.render(i.preimage)},
                    {"right", alphabet.render(i.right)}});
    o.lines.push_back("(" + shown(alphabet, i.left) + ", " + shown(alphabet, i.preimage) + ", " +
                      shown(alphabet, i.right) + ")");
  }
  o.result["interpretations"] = std::move(list);
  if (interps.empty()) o.lines.push_back("no minimal interpretations");
  return o;
}

Outcome cmd_sync(Analyzer& analyzer, const Options& opt) {
  const auto& alphabet = analyzer.system().alphabet();
  Outcome o;
  if (!opt.right) {
    const Word u = parse_word(analyzer.system(), opt.left);
    const auto sync = is_weakly_synchronized(analyzer, u);
    o.result["word"] = alphabet.render(u);
    o.result["weakly_synchronized"] = sync.synchronized;
    o.result["vacuous"] = sync.vacuous;
    if (sync.cut) {
      o.result["left"] = alphabet.render(WordView(u).first(*sync.cut));
      o.result["right"] = alphabet.render(WordView(u).subspan(*sync.cut));
    }
    o.lines.push_back(shown(alphabet, u) + (sync.synchronized ? " is" : " is not") + " weakly synchronized" +
                      (sync.vacuous ? " (no interpretations)" : ""));
    if (sync.cut) {
      o.lines.push_back("synchronizing pair: (" + shown(alphabet, WordView(u).first(*sync.cut)) + ", " +
                        shown(alphabet, WordView(u).subspan(*sync.cut)) + ")");
    }
    return o;
  }

  const Word left = parse_word(analyzer.system(), opt.left);
  const Word right = parse_word(analyzer.system(), *opt.right);
  o.result["mode"] = opt.mode;
  o.result["left"] = alphabet.render(left);
  o.result["right"] = alphabet.render(right);
  const bool admissible = is_admissible(analyzer, left, right);
  const bool synchronizing = opt.mode == "strong" ? is_strongly_synchronizing(analyzer, left, right)
                                                  : is_weakly_synchronizing(analyzer, left, right);
  o.result["admissible"] = admissible;
  o.result["synchronizing"] = synchronizing;
  o.lines.push_back("(" + shown(alphabet, left) + ", " + shown(alphabet, right) + ") is " +
                    (admissible ? "admissible" : "not admissible") + " and " +
                    (synchronizing ? "" : "not ") + opt.mode + "ly synchronizing");
  return o;
}

Outcome cmd_threshold(Analyzer& analyzer, const Options& opt) {
  const auto& alphabet = analyzer.system().alphabet();
  ThresholdOptions options;
  options.cutoff = opt.cutoff;
  options.repetition_check = !opt.skip_repetition_check;
  options.period_bound = opt.period_bound;
  const bool strong = opt.mode == "strong";
  const auto report = strong ? strong_threshold(analyzer, options) : weak_threshold(analyzer, options);

  Outcome o;
  o.result["mode"] = opt.mode;
  switch (report.status) {
    case ThresholdStatus::found:
      o.result["status"] = "found";
      o.result["D"] = report.threshold;
      o.result["last_level"] = report.last_level;
      o.lines.push_back((strong ? "D_s = " : "D_w = ") + std::to_string(report.threshold));
      break;
    case ThresholdStatus::cutoff_exceeded:
      o.result["status"] = "cutoff_exceeded";
      o.result["last_level"] = report.last_level;
      o.lines.push_back("no threshold up to cutoff " + std::to_string(opt.cutoff));
      break;
    case ThresholdStatus::not_strongly_circular:
      o.result["status"] = "not_strongly_circular";
      o.lines.push_back("not strongly circular: unboundedly repetitive");
      break;
  }

  Json witnesses = Json::array();
  for (const Word& w : report.word_witnesses) {
    witnesses.push_back(alphabet.render(w));
    o.lines.push_back("not weakly synchronized: " + shown(alphabet, w));
  }
  for (const auto& [left, right] : report.pair_witnesses) {
    witnesses.push_back({{"left", alphabet.render(left)}, {"right", alphabet.render(right)}});
    o.lines.push_back("not strongly synchronizing: (" + shown(alphabet, left) + ", " + shown(alphabet, right) + ")");
  }
  if (!witnesses.empty()) o.result["witness"] = witnesses.front();
  o.result["witnesses"] = std::move(witnesses);
  if (report.repetition) {
    o.result["repetition"] = describe_repetition(alphabet, *report.repetition);
    o.lines.push_back("repetition witness: " + alphabet.render(report.repetition->period));
  }
  return o;
}

Outcome cmd_power(const System& system, const Options& opt) {
  const System powered = power_system(system, opt.power);
  const std::string text = render_system(powered);
  Outcome o;
  o.result["k"] = opt.power;
  Json axioms = Json::array();
  for (const Word& w : powered.axioms()) axioms.push_back(powered.alphabet().render(w));
  o.result["axioms"] = std::move(axioms);
  Json images = Json::object();
  for (Letter a = 0; a < powered.alphabet().size(); ++a) {
    images[powered.alphabet().token(a)] = powered.alphabet().render(powered.morphism().image(a));
  }
  o.result["images"] = std::move(images);
  if (!opt.output_path.empty()) {
    std::ofstream file(opt.output_path);
    if (!file) throw InputError("cannot write '" + opt.output_path + "'");
    file << text;
    o.result["output"] = opt.output_path;
    o.lines.push_back("wrote " + opt.output_path);
  } else {
    std::string line;
    for (char c : text) {
      if (c == '\n') {
        o.lines.push_back(line);
        line.clear();
      } else {
        line += c;
      }
    }
  }
  return o;
}

Outcome cmd_letters(const System& system, const Options&) {
  require_propagating(system);
  const auto& alphabet = system.alphabet();
  const auto report = classify_letters(system.morphism());
  Outcome o;
  o.result["bounded"] = letter_list(alphabet, report.bounded);
  o.result["unbounded"] = letter_list(alphabet, report.unbounded);
  o.result["invariant_exponent"] = report.invariant_exponent;
  Json subalphabets = Json::array();
  for (const auto& set : report.minimal_invariant_subalphabets) subalphabets.push_back(letter_list(alphabet, set));
  o.result["minimal_invariant_subalphabets"] = std::move(subalphabets);

  auto join = [&](const LetterSet& letters) {
    std::string s = "{";
    for (std::size_t i = 0; i < letters.size(); ++i) s += (i ? ", " : "") + alphabet.token(letters[i]);
    return s + "}";
  };
  o.lines.push_back("bounded: " + join(report.bounded));
  o.lines.push_back("unbounded: " + join(report.unbounded));
  o.lines.push_back("invariant exponent: " + std::to_string(report.invariant_exponent));
  for (const auto& set : report.minimal_invariant_subalphabets) o.lines.push_back("minimal invariant: " + join(set));
  return o;
}

Outcome cmd_repetitive(Analyzer& analyzer, const Options& opt) {
  const auto& alphabet = analyzer.system().alphabet();
  const auto verdict = detect_unbounded_repetitive(analyzer, opt.period_bound);
  Outcome o;
  if (verdict.witness) {
    o.result["status"] = "repetitive";
    o.result.update(describe_repetition(alphabet, *verdict.witness));
    o.lines.push_back("unboundedly repetitive: phi^" + std::to_string(verdict.witness->power) + "(" +
                      alphabet.render(verdict.witness->period) + ") = (" +
                      alphabet.render(verdict.witness->period) + ")^" + std::to_string(verdict.witness->exponent));
  } else {
    o.result["status"] = "no_witness";
    o.lines.push_back("no repetition witness within the bounds");
  }
  o.result["power_bound"] = verdict.power_bound;
  o.result["period_bound"] = verdict.period_bound;
  return o;
}

Outcome cmd_delta(Analyzer& analyzer, const Options& opt) {
  const auto& alphabet = analyzer.system().alphabet();
  const auto pairs = collisions_upto(analyzer, opt.length);
  const auto estimate = delta_estimate(analyzer, opt.length);
  Outcome o;
  o.result["max_length"] = opt.length;
  Json list = Json::array();
  for (const auto& p : pairs) {
    list.push_back(Json::array({alphabet.render(p.first), alphabet.render(p.second)}));
    o.lines.push_back("{" + alphabet.render(p.first) + ", " + alphabet.render(p.second) + "}");
  }
  o.result["pairs"] = std::move(list);
  o.result["pairs_found"] = estimate.pairs_found;
  o.result["delta_lower_bound"] = estimate.lower_bound;
  o.lines.push_back("delta >= " + std::to_string(estimate.lower_bound));
  return o;
}

Outcome cmd_twined(const System& source, const Options& opt) {
  const System target = load_system(opt.second_path);
  TwinedData data{source.morphism(), target.morphism(),
                  parse_letter_map(opt.alpha, source.alphabet(), target.alphabet()),
                  parse_letter_map(opt.beta, target.alphabet(), source.alphabet())};
  Outcome o;
  const auto twined = verify_twined(data);
  o.result["twined"] = twined.holds;
  if (!twined.holds) {
    o.result["failure"] = twined.failure;
    o.lines.push_back("not twined: " + twined.failure);
    return o;
  }
  o.lines.push_back("twined: yes");

  const FactorSet source_words = factor_language(source, opt.length);
  const FactorSet target_words = factor_language(target, opt.length);
  const auto commutation = twined_commutation_check(data, opt.power, source_words.words(), target_words.words());
  o.result["commutes"] = commutation.holds;
  if (!commutation.holds) o.result["commutation_failure"] = commutation.failure;
  const bool inclusions = simplification_language_check(source, target, data.alpha, data.beta, opt.length);
  o.result["language_inclusions"] = inclusions;
  o.lines.push_back(std::string("commutes with k = ") + std::to_string(opt.power) + ": " +
                    (commutation.holds ? "yes" : "no"));
  o.lines.push_back(std::string("language inclusions up to length ") + std::to_string(opt.length) + ": " +
                    (inclusions ? "yes" : "no"));
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Circularity, synchronization and repetitiveness analysis of PDF0L systems", "df0l"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_flag("--serial", opt.serial, "Use the serial reference kernels");

  auto add_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("system", opt.system_path, "System file")->required();
    return sub;
  };

  auto* validate_cmd = add_command("validate", "Check the system and report its PDF0L status");
  auto* language_cmd = add_command("language", "List L(S) up to a length");
  language_cmd->add_option("-L,--length", opt.length, "Maximal word length");
  auto* contains_cmd = add_command("contains", "Decide membership in L(S)");
  contains_cmd->add_option("word", opt.word, "Space-separated letters")->required();
  auto* interp_cmd = add_command("interpretations", "List minimal interpretations of a word");
  interp_cmd->add_option("word", opt.word, "Space-separated letters")->required();
  auto* sync_cmd = add_command("sync", "Test a pair (or a single word) for synchronization");
  sync_cmd->add_option("left", opt.left, "u' (or the whole word)")->required();
  sync_cmd->add_option("right", opt.right, "u''");
  sync_cmd->add_option("--mode", opt.mode)->check(CLI::IsMember({"weak", "strong"}));
  auto* threshold_cmd = add_command("threshold", "Compute a circularity threshold");
  threshold_cmd->add_option("--mode", opt.mode)->check(CLI::IsMember({"weak", "strong"}));
  threshold_cmd->add_option("--cutoff", opt.cutoff, "Largest level searched")->check(CLI::PositiveNumber);
  threshold_cmd->add_option("--period-bound", opt.period_bound, "Repetition detector period bound");
  threshold_cmd->add_flag("--no-repetition-check", opt.skip_repetition_check);
  auto* power_cmd = add_command("power", "Build the k-th power system");
  power_cmd->add_option("-k", opt.power, "Power")->check(CLI::PositiveNumber);
  power_cmd->add_option("-o,--output", opt.output_path, "Write the system file here");
  auto* letters_cmd = add_command("letters", "Bounded/unbounded letters and invariant subalphabets");
  auto* repetitive_cmd = add_command("repetitive", "Search for an unbounded repetition certificate");
  repetitive_cmd->add_option("--period-bound", opt.period_bound)->check(CLI::PositiveNumber);
  auto* delta_cmd = add_command("delta", "Enumerate injectivity collisions up to a length");
  delta_cmd->add_option("-L,--length", opt.length, "Maximal word length")->check(CLI::PositiveNumber);
  auto* twined_cmd = add_command("twined", "Verify twined morphisms (alpha, beta) against a second system");
  twined_cmd->add_option("target", opt.second_path, "System file over the second alphabet")->required();
  twined_cmd->add_option("--alpha", opt.alpha, "e.g. \"a -> x ; b -> y\"")->required();
  twined_cmd->add_option("--beta", opt.beta, "e.g. \"x -> a b ; y -> b\"")->required();
  twined_cmd->add_option("-L,--length", opt.length, "Language check length");
  twined_cmd->add_option("-k", opt.power, "Commutation power");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto started = std::chrono::steady_clock::now();
  try {
    const System system = load_system(opt.system_path);
    const Execution execution = opt.serial ? Execution::serial : Execution::parallel;

    using Analysis = std::function<Outcome(Analyzer&, const Options&)>;
    using Plain = std::function<Outcome(const System&, const Options&)>;
    const std::vector<std::pair<CLI::App*, Analysis>> analyses = {
        {language_cmd, cmd_language}, {contains_cmd, cmd_contains},     {interp_cmd, cmd_interpretations},
        {sync_cmd, cmd_sync},         {threshold_cmd, cmd_threshold},   {repetitive_cmd, cmd_repetitive},
        {delta_cmd, cmd_delta}};
    const std::vector<std::pair<CLI::App*, Plain>> plain = {
        {validate_cmd, cmd_validate}, {power_cmd, cmd_power}, {letters_cmd, cmd_letters}, {twined_cmd, cmd_twined}};

    Outcome outcome;
    bool handled = false;
    for (const auto& [sub, fn] : analyses) {
      if (sub->parsed()) {
        Analyzer analyzer(system, execution);
        outcome = fn(analyzer, opt);
        handled = true;
      }
    }
    for (const auto& [sub, fn] : plain) {
      if (sub->parsed()) {
        outcome = fn(system, opt);
        handled = true;
      }
    }
    if (!handled) throw InputError("unknown command");

    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
    if (opt.json) {
      Json report;
      report["command"] = command;
      Json input;
      input["system"] = opt.system_path;
      for (const auto* option : app.get_subcommands().front()->get_options()) {
        const std::string key = option->get_single_name();
        if (option->count() > 0 && key != "system" && key != "help") {
          input[key] = option->as<std::string>();
        }
      }
      report["input"] = std::move(input);
      report["system"] = describe_system(system);
      report["result"] = std::move(outcome.result);
      report["elapsed_ms"] = elapsed.count();
      out << report.dump(2) << '\n';
    } else {
      for (const auto& line : outcome.lines) out << line << '\n';
    }
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPreconditionError;
  }
}

}  // namespace df0l::cli
