// Command-line surface: positive-root listings, crystal operator
// application, conversion between the two realizations, graph generation,
// the verification harness, and stack rendering.
//
// Exit codes: 0 success, 1 malformed input, 2 operator undefined
// (e_i on a highest-weight direction), 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcrystal/explorer.hpp"
#include "bcrystal/isomorphism.hpp"
#include "bcrystal/json_io.hpp"
#include "bcrystal/stacks.hpp"

namespace {

using namespace bcrystal;
using nlohmann::json;

class OperatorUndefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LieType make_type(const std::string& code, int rank) {
  if (code != "B" && code != "C")
    throw std::invalid_argument("--type must be B or C");
  return LieType(code == "B" ? Kind::B : Kind::C, rank);
}

std::string read_input(const std::string& source) {
  std::ostringstream text;
  if (source == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream file(source);
    if (!file) throw std::invalid_argument("cannot open " + source);
    text << file.rdbuf();
  }
  return text.str();
}

struct OpToken {
  bool lower;  // f if true, e if false
  int index;
};

std::vector<OpToken> parse_ops(const std::string& word, int rank) {
  std::vector<OpToken> ops;
  std::istringstream in(word);
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'f' && token[0] != 'e'))
      throw std::invalid_argument("bad operator token: " + token);
    int index = 0;
    try {
      size_t used = 0;
      index = std::stoi(token.substr(1), &used);
      if (used + 1 != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad operator token: " + token);
    }
    if (index < 1 || index > rank)
      throw std::invalid_argument("operator index out of range: " + token);
    ops.push_back({token[0] == 'f', index});
  }
  return ops;
}

int run_roots(const std::string& type_code, int rank, bool with_epsilon) {
  const LieType t = make_type(type_code, rank);
  const RootSystem& rs = RootSystem::get(t);
  auto print_vector = [](const std::vector<int>& v) {
    std::cout << '[';
    for (size_t j = 0; j < v.size(); ++j) {
      if (j) std::cout << ',';
      std::cout << v[j];
    }
    std::cout << ']';
  };
  for (const RootLabel& r : rs.positive_roots()) {
    std::cout << to_string(r) << ' ';
    print_vector(rs.simple_expansion(r));
    if (with_epsilon) {
      std::cout << ' ';
      print_vector(rs.epsilon_expansion(r));
    }
    std::cout << '\n';
  }
  return 0;
}

template <typename Elem, typename Parse, typename Start>
int apply_ops(LieType t, const std::string& ops_word, const std::string& input,
              Parse parse, Start start) {
  Elem x = input.empty() ? start(t) : parse(json::parse(read_input(input)));
  if (x.type() != t)
    throw std::invalid_argument("input element does not match --type/--rank");
  for (const OpToken& op : parse_ops(ops_word, t.rank)) {
    if (op.lower) {
      x = x.f(op.index);
    } else {
      auto raised = x.e(op.index);
      if (!raised)
        throw OperatorUndefined("e" + std::to_string(op.index) +
                                " is undefined here");
      x = *raised;
    }
  }
  std::cout << to_json(x).dump() << '\n';
  return 0;
}

int run_apply(const std::string& type_code, int rank,
              const std::string& realization, const std::string& ops_word,
              const std::string& input) {
  const LieType t = make_type(type_code, rank);
  if (realization == "mlt")
    return apply_ops<MLTableau>(t, ops_word, input, tableau_from_json,
                                MLTableau::highest_weight);
  if (realization == "kp")
    return apply_ops<KostantPartition>(t, ops_word, input, kostant_from_json,
                                       KostantPartition::zero);
  throw std::invalid_argument("--realization must be mlt or kp");
}

int run_convert(const std::string& direction, const std::string& input) {
  const json parsed = json::parse(read_input(input));
  if (direction == "mlt2kp") {
    std::cout << to_json(to_kostant(tableau_from_json(parsed))).dump() << '\n';
    return 0;
  }
  if (direction == "kp2mlt") {
    std::cout << to_json(to_tableau(kostant_from_json(parsed))).dump() << '\n';
    return 0;
  }
  throw std::invalid_argument("--direction must be mlt2kp or kp2mlt");
}

int run_generate(const std::string& type_code, int rank,
                 const std::string& realization, int depth,
                 const std::string& format) {
  const LieType t = make_type(type_code, rank);
  if (format != "json" && format != "dot")
    throw std::invalid_argument("--format must be json or dot");
  if (realization == "mlt") {
    TableauGraph g = generate_tableau_graph(t, depth);
    std::cout << (format == "json" ? export_json(g) + "\n" : export_dot(g));
    return 0;
  }
  if (realization == "kp") {
    KostantGraph g = generate_kostant_graph(t, depth);
    std::cout << (format == "json" ? export_json(g) + "\n" : export_dot(g));
    return 0;
  }
  throw std::invalid_argument("--realization must be mlt or kp");
}

int run_verify(const std::string& type_code, int rank, int depth,
               const std::string& checks_csv) {
  const LieType t = make_type(type_code, rank);
  std::vector<std::string> wanted;
  std::istringstream in(checks_csv);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) wanted.push_back(name);
  }
  if (wanted.empty())
    wanted = {"commutation", "readings", "census", "roundtrip", "axioms"};

  bool all_passed = true;
  for (const std::string& check : wanted) {
    CheckReport rep;
    if (check == "commutation")
      rep = verify_commutation(t, depth);
    else if (check == "readings")
      rep = verify_readings(t, depth);
    else if (check == "census")
      rep = verify_census(t, depth);
    else if (check == "roundtrip")
      rep = verify_roundtrip(t, depth);
    else if (check == "axioms")
      rep = verify_axioms(t, depth);
    else
      throw std::invalid_argument("unknown check: " + check);

    std::cout << rep.name << ": elements=" << rep.elements
              << " checks=" << rep.checks
              << " violations=" << rep.violations.size() << ' '
              << (rep.passed() ? "PASS" : "FAIL") << '\n';
    for (const std::string& violation : rep.violations)
      std::cerr << "  " << violation << '\n';
    all_passed = all_passed && rep.passed();
  }
  return all_passed ? 0 : 3;
}

int run_render(bool stacks, const std::string& input) {
  if (!stacks) throw std::invalid_argument("render needs --stacks");
  const json parsed = json::parse(read_input(input));
  std::cout << render_stacks(kostant_from_json(parsed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"marginally large tableaux and Kostant partitions in types B/C"};
  app.require_subcommand(1);

  std::string type_code = "B", realization = "mlt", ops_word, input,
              direction, format = "json", checks;
  int rank = 2, depth = 0;
  bool with_epsilon = false, stacks_flag = false;

  CLI::App* roots = app.add_subcommand("roots", "list the positive roots");
  roots->add_option("--type", type_code)->required();
  roots->add_option("--rank", rank)->required();
  roots->add_flag("--epsilon", with_epsilon, "also print epsilon coordinates");

  CLI::App* apply = app.add_subcommand("apply", "apply an operator word");
  apply->add_option("--type", type_code)->required();
  apply->add_option("--rank", rank)->required();
  apply->add_option("--realization", realization)->required();
  apply->add_option("--ops", ops_word, "e.g. \"f1 f3 e2\"")->required();
  apply->add_option("--input", input, "element JSON file, - for stdin");

  CLI::App* convert = app.add_subcommand("convert", "map between realizations");
  convert->add_option("--direction", direction, "mlt2kp or kp2mlt")->required();
  convert->add_option("--input", input)->required();

  CLI::App* generate = app.add_subcommand("generate", "emit a crystal graph");
  generate->add_option("--type", type_code)->required();
  generate->add_option("--rank", rank)->required();
  generate->add_option("--realization", realization)->required();
  generate->add_option("--depth", depth)->required();
  generate->add_option("--format", format, "json or dot");

  CLI::App* verify = app.add_subcommand("verify", "run the harness");
  verify->add_option("--type", type_code)->required();
  verify->add_option("--rank", rank)->required();
  verify->add_option("--depth", depth)->required();
  verify->add_option("--checks", checks,
                     "comma list of commutation,readings,census,roundtrip,axioms");

  CLI::App* render = app.add_subcommand("render", "ASCII stack pictures");
  render->add_flag("--stacks", stacks_flag);
  render->add_option("--input", input)->required();

  try {
    app.parse(argc, argv);
    if (roots->parsed()) return run_roots(type_code, rank, with_epsilon);
    if (apply->parsed())
      return run_apply(type_code, rank, realization, ops_word, input);
    if (convert->parsed()) return run_convert(direction, input);
    if (generate->parsed())
      return run_generate(type_code, rank, realization, depth, format);
    if (verify->parsed()) return run_verify(type_code, rank, depth, checks);
    if (render->parsed()) return run_render(stacks_flag, input);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const OperatorUndefined& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
