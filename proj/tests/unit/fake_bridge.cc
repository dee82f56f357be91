// Copyright 2026 The Ratex Authors.
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

// Serves a local model file over the bridge protocol on stdin/stdout.
//
//   fake_bridge MODEL [--fail-id N] [--wrong-id N] [--exit-at N] [--bad-size]

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "ratex/model/code_tokenizer.h"
#include "ratex/model/model_loader.h"
#include "ratex/model/remote_model.h"

using namespace ratex;
using namespace ratex::model;

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: fake_bridge MODEL [options]\n";
    return 2;
  }
  uint64_t fail_id = 0;
  uint64_t wrong_id = 0;
  uint64_t exit_at = 0;
  bool bad_size = false;
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--bad-size") {
      bad_size = true;
    } else if (i + 1 < argc) {
      const uint64_t value = std::strtoull(argv[++i], nullptr, 10);
      if (arg == "--fail-id") fail_id = value;
      if (arg == "--wrong-id") wrong_id = value;
      if (arg == "--exit-at") exit_at = value;
    }
  }
  const std::unique_ptr<LanguageModel> lm = LoadModel(argv[1]);
  std::cout << protocol::EncodeHandshake({lm->vocab_size(), "fake:" + lm->name(), true})
            << std::endl;

  std::string line;
  while (std::getline(std::cin, line)) {
    Json request;
    try {
      request = Json::parse(line);
    } catch (const Json::parse_error&) {
      std::cout << Json{{"error", "malformed request"}}.dump() << std::endl;
      continue;
    }
    const uint64_t id = request.value("id", uint64_t{0});
    if (id == exit_at) return 0;
    Json response = {{"id", id == wrong_id ? id + 1000 : id}};
    try {
      if (id == fail_id) {
        response["error"] = "requested failure";
      } else if (request.value("op", std::string()) == "tokenize") {
        const std::string text = request.at("text").get<std::string>();
        Json ids = Json::array();
        Json spans = Json::array();
        for (const TextPiece& piece : SplitCode(text)) {
          ids.push_back(lm->vocabulary()->Encode(piece.text).value);
          spans.push_back({piece.span.begin, piece.span.end});
        }
        response["ids"] = ids;
        response["spans"] = spans;
      } else {
        const Distribution d = lm->Evaluate(protocol::DecodeEvaluateRequest(request));
        Json logprobs = Json::array();
        for (double p : d.probabilities()) logprobs.push_back(p > 0.0 ? std::log(p) : -1000.0);
        if (bad_size) logprobs.push_back(0.0);
        response["logprobs"] = logprobs;
      }
    } catch (const std::exception& e) {
      response["error"] = e.what();
    }
    std::cout << response.dump() << std::endl;
  }
  return 0;
}
