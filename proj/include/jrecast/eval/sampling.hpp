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

#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "jrecast/support/error.hpp"

namespace jrecast::eval {

class EndpointUnavailable : public Error {
 public:
  explicit EndpointUnavailable(const std::string& m) : Error(m) {}
};

/// The paper's sampling regime: nucleus sampling with top-p 0.95 at
/// temperature 0.8, 200 invocations per bug.
struct SamplingConfig {
  double top_p = 0.95;
  double temperature = 0.8;
  int samples_per_bug = 200;
  int max_new_tokens = 2048;
  std::string endpoint_url;   // e.g. http://127.0.0.1:8089
  std::string model_id;
  std::string auth_token;     // optional bearer token
  double request_timeout_sec = 120;
  int batch_window = 8;       // completions requested per call
  int max_retries = 3;

  void validate() const {
    if (!(top_p > 0 && top_p <= 1.0)) throw Error("top_p out of (0, 1]");
    if (temperature < 0) throw Error("temperature < 0");
    if (samples_per_bug < 1) throw Error("samples_per_bug < 1");
  }
};

/// Minimal text-completion client. Request body:
///   {model, prompt, temperature, top_p, max_tokens, n}
/// Response: {"choices": [{"text": ...}, ...]}
class EndpointClient {
 public:
  explicit EndpointClient(const SamplingConfig& cfg) : cfg_(cfg) {
    cfg_.validate();
    if (cfg_.endpoint_url.empty())
      throw EndpointUnavailable("no endpoint URL configured");
  }

  /// One batch of n completions, retrying transient failures.
  std::vector<std::string> complete(const std::string& prompt, int n) {
    nlohmann::json body;
    body["model"] = cfg_.model_id;
    body["prompt"] = prompt;
    body["temperature"] = cfg_.temperature;
    body["top_p"] = cfg_.top_p;
    body["max_tokens"] = cfg_.max_new_tokens;
    body["n"] = n;
    std::string payload = body.dump();

    std::string last_error;
    for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
      if (attempt > 0)
        std::this_thread::sleep_for(std::chrono::milliseconds(200 * attempt));
      httplib::Client cli(cfg_.endpoint_url);
      cli.set_read_timeout(static_cast<time_t>(cfg_.request_timeout_sec), 0);
      cli.set_connection_timeout(5, 0);
      httplib::Headers headers;
      if (!cfg_.auth_token.empty())
        headers.emplace("Authorization", "Bearer " + cfg_.auth_token);
      auto res = cli.Post("/v1/completions", headers, payload, "application/json");
      if (!res) {
        last_error = "connection failed (" + httplib::to_string(res.error()) + ")";
        continue;
      }
      if (res->status != 200) {
        last_error = "status " + std::to_string(res->status);
        if (res->status >= 400 && res->status < 500 && res->status != 429)
          break;  // client errors do not heal on retry
        continue;
      }
      try {
        nlohmann::json j = nlohmann::json::parse(res->body);
        std::vector<std::string> out;
        for (const auto& choice : j.at("choices"))
          out.push_back(choice.at("text").get<std::string>());
        if (out.empty()) {
          last_error = "empty choices array";
          continue;
        }
        return out;
      } catch (const std::exception& e) {
        last_error = std::string("bad response json: ") + e.what();
      }
    }
    throw EndpointUnavailable("endpoint " + cfg_.endpoint_url + ": " + last_error);
  }

  /// Draws completions until `target` exist, invoking `persist` after every
  /// batch so a killed run can resume from what reached disk.
  void sample_to(const std::string& prompt, int target, int already,
                 const std::function<void(const std::vector<std::string>&)>& persist) {
    int have = already;
    while (have < target) {
      int want = std::min(cfg_.batch_window, target - have);
      std::vector<std::string> batch = complete(prompt, want);
      if (static_cast<int>(batch.size()) > target - have)
        batch.resize(target - have);
      persist(batch);
      have += static_cast<int>(batch.size());
    }
  }

 private:
  SamplingConfig cfg_;
};

}  // namespace jrecast::eval
