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

#pragma once

#include <mutex>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "jrecast/transform/name_provider.hpp"

namespace jrecast::transform {

/// Opt-in provider that asks a text-completion endpoint for naturalistic
/// variable names, one request per declaration (requests are serialized,
/// bounding endpoint load to a single in-flight call). Any unusable response
/// falls back to the deterministic provider so renaming never fails.
class EndpointNameProvider : public NameProvider {
 public:
  EndpointNameProvider(std::string endpoint_url, std::string model_id,
                       uint64_t seed)
      : url_(std::move(endpoint_url)),
        model_(std::move(model_id)),
        fallback_(seed) {}

  std::string fresh(size_t decl_index, const std::set<std::string>& taken) override {
    std::lock_guard<std::mutex> lock(mu_);
    std::string suggestion = suggest(taken);
    if (!suggestion.empty() && valid_identifier(suggestion) &&
        !taken.count(suggestion) && !syntax::java_keywords().count(suggestion))
      return suggestion;
    return fallback_.fresh(decl_index, taken);
  }

 private:
  std::string suggest(const std::set<std::string>& taken) {
    try {
      std::string prompt =
          "// Propose one fresh descriptive Java variable name.\n"
          "// Avoid these names:";
      size_t listed = 0;
      for (const auto& t : taken) {
        prompt += " " + t;
        if (++listed >= 40) break;
      }
      prompt += "\nint ";
      nlohmann::json body;
      body["model"] = model_;
      body["prompt"] = prompt;
      body["temperature"] = 0.2;
      body["top_p"] = 0.95;
      body["max_tokens"] = 8;
      body["n"] = 1;
      httplib::Client cli(url_);
      cli.set_read_timeout(20, 0);
      cli.set_connection_timeout(5, 0);
      auto res = cli.Post("/v1/completions", body.dump(), "application/json");
      if (!res || res->status != 200) return "";
      nlohmann::json j = nlohmann::json::parse(res->body);
      std::string text = j.at("choices").at(0).at("text").get<std::string>();
      return first_identifier(text);
    } catch (const std::exception&) {
      return "";
    }
  }

  static std::string first_identifier(const std::string& text) {
    size_t i = 0;
    while (i < text.size() && !(isalpha(static_cast<unsigned char>(text[i])) ||
                                text[i] == '_' || text[i] == '$'))
      i++;
    size_t b = i;
    while (i < text.size() && (isalnum(static_cast<unsigned char>(text[i])) ||
                               text[i] == '_' || text[i] == '$'))
      i++;
    return text.substr(b, i - b);
  }

  static bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_' || s[0] == '$'))
      return false;
    for (char c : s)
      if (!(isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'))
        return false;
    return true;
  }

  std::string url_;
  std::string model_;
  DeterministicNameProvider fallback_;
  std::mutex mu_;
};

}  // namespace jrecast::transform
