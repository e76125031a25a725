#pragma once

#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

struct Case {
  std::string name;
  std::vector<std::string> args;
  int expected_exit = 0;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

inline std::vector<Case> load_cases(const std::string& dir) {
  std::ifstream in(dir + "/cases.txt");
  if (!in) throw std::runtime_error("missing " + dir + "/cases.txt");
  std::vector<Case> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::stringstream ss(line);
    std::string name, args, code;
    std::getline(ss, name, '|');
    std::getline(ss, args, '|');
    std::getline(ss, code);
    Case c{trim(name), {}, std::stoi(trim(code))};
    std::stringstream words(args);
    std::string w;
    for (int k = 0; words >> w; ++k) c.args.push_back(k == 1 ? dir + "/" + w : w);
    cases.push_back(c);
  }
  return cases;
}

struct Outcome {
  int exit_code;
  std::string out;
};

inline Outcome execute(const Case& c) {
  std::ostringstream out, err;
  const int code = wpr::cli::run(c.args, out, err);
  return {code, out.str()};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace golden
