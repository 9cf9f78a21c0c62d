// Copyright 2026 The jrecast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// stub_llm: a canned text-completion endpoint for exercising `jrecast
// evaluate` without a model. Rules map a prompt substring to a completion;
// unmatched prompts get the default completion.
//
//   stub_llm --rules rules.json [--port 8089]
//
// rules.json:
//   {"default": "no idea",
//    "rules": [{"match": "<substring>",
//               "completion": "..." | "completion_file": "path",
//               "anchor": "target" | "full"}]}
//
// With the default "target" anchor, the match is searched only in the text
// after the last "// Buggy Function" marker (the function under repair), so
// a rule never fires on the worked examples earlier in the prompt.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

using nlohmann::json;

namespace {

struct Rule {
  std::string match;
  std::string completion;
  bool anchor_target = true;
};

std::string target_section(const std::string& prompt) {
  static const std::string marker = "// Buggy Function";
  size_t last = prompt.rfind(marker);
  return last == std::string::npos ? prompt : prompt.substr(last);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "stub_llm: cannot open " << path << "\n";
    std::exit(66);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string rules_path;
  int port = 8089;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--rules" && i + 1 < argc) rules_path = argv[++i];
    else if (a == "--port" && i + 1 < argc) port = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: stub_llm --rules rules.json [--port N]\n";
      return 65;
    }
  }
  if (rules_path.empty()) {
    std::cerr << "usage: stub_llm --rules rules.json [--port N]\n";
    return 65;
  }

  json spec = json::parse(slurp(rules_path));
  std::string fallback = spec.value("default", "// no completion available\n");
  std::vector<Rule> rules;
  for (const auto& r : spec.value("rules", json::array())) {
    Rule rule;
    rule.match = r.at("match").get<std::string>();
    if (r.contains("completion_file"))
      rule.completion = slurp(r["completion_file"].get<std::string>());
    else
      rule.completion = r.at("completion").get<std::string>();
    rule.anchor_target = r.value("anchor", "target") != "full";
    rules.push_back(std::move(rule));
  }

  httplib::Server server;
  server.Post("/v1/completions", [&](const httplib::Request& req,
                                     httplib::Response& res) {
    json body = json::parse(req.body, nullptr, false);
    std::string prompt =
        body.is_discarded() ? "" : body.value("prompt", "");
    int n = body.is_discarded() ? 1 : body.value("n", 1);
    std::string completion = fallback;
    std::string target = target_section(prompt);
    for (const auto& rule : rules) {
      const std::string& haystack = rule.anchor_target ? target : prompt;
      if (haystack.find(rule.match) != std::string::npos) {
        completion = rule.completion;
        break;
      }
    }
    json out;
    out["choices"] = json::array();
    for (int i = 0; i < n; ++i) out["choices"].push_back({{"text", completion}});
    res.set_content(out.dump(), "application/json");
  });

  std::cout << "stub_llm listening on 127.0.0.1:" << port << "\n";
  if (!server.listen("127.0.0.1", port)) {
    std::cerr << "stub_llm: cannot bind port " << port << "\n";
    return 1;
  }
  return 0;
}
