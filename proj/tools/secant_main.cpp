#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "secant/secant.h"

namespace {

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

void emit(char* s, std::FILE* to) {
  if (s) std::fputs(s, to);
  secant_free_string(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular sequences, grade and flatness certificates for finitely presented algebras"};
  app.set_version_flag("--version", std::string(secant_version()));

  std::string command, file, order;
  std::vector<std::string> ideals;
  int max_degree = -1, grade = -1;
  bool json = false, explain = false;
  const std::vector<std::string> commands{"check-regular", "syzygies", "koszul",   "usc",       "grade",   "secant",
                                          "annihilators",  "jacobian", "rewrite",  "inclusion", "certify", "verify"};
  app.add_option("command", command, "Operation to run")->required()->check(CLI::IsMember(commands));
  app.add_option("file", file, "Problem file, or a certificate for verify ('-' reads stdin)")->required();
  app.add_option("--order", order, "Monomial order")->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_option("--ideal", ideals, "Generator of an ideal of the base ring (repeatable)");
  app.add_option("--max-degree", max_degree, "Degree bound for inclusion and certify (default 4)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--grade", grade, "Grade bound for grade (default: sequence length)")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", json, "Print the JSON document on stdout");
  app.add_flag("--explain", explain, "Print a readable account on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string text;
  if (!read_input(file, text)) {
    std::cerr << "secant: cannot read '" << file << "'\n";
    return 2;
  }

  char* out = nullptr;
  char* why = nullptr;
  secant_status status;
  if (command == "verify") {
    status = secant_verify(text.c_str(), &out, &why);
  } else {
    secant_problem* problem = nullptr;
    if (secant_problem_parse(text.c_str(), &problem) != SECANT_OK) {
      std::cerr << "secant: " << file << ": " << secant_last_error() << "\n";
      return 2;
    }
    std::vector<const char*> ideal_ptrs;
    for (const auto& s : ideals) ideal_ptrs.push_back(s.c_str());
    secant_options opts;
    secant_options_init(&opts);
    if (!order.empty()) opts.order = order.c_str();
    opts.ideals = ideal_ptrs.data();
    opts.ideal_count = ideal_ptrs.size();
    opts.max_degree = max_degree;
    opts.grade = grade;
    status = secant_run(problem, command.c_str(), &opts, &out, &why);
    secant_problem_free(problem);
  }

  if (status == SECANT_INPUT_ERROR || status == SECANT_INTERNAL_ERROR) {
    std::cerr << "secant: " << secant_last_error() << "\n";
    secant_free_string(out);
    secant_free_string(why);
    return status;
  }
  const std::string account = why ? why : "";
  secant_free_string(why);
  if (explain) std::cerr << account;
  if (json) {
    emit(out, stdout);
  } else {
    secant_free_string(out);
    std::cout << account.substr(0, account.find('\n')) << "\n";
  }
  return status;
}
